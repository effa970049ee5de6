#include "mpp/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mpp {

// ---------------------------------------------------------------------------
// LengthList

LengthList::LengthList(const std::map<int, long long>& counts) {
    for (auto [len, cnt] : counts) {
        if (len <= 0) throw invalid_input("lengths must be positive");
        if (cnt < 0) throw invalid_input("multiplicities must be nonnegative");
        if (cnt == 0) continue;
        counts_[len] = cnt;
        n_ += cnt;
    }
}

LengthList::LengthList(const std::vector<int>& lengths) {
    for (int len : lengths) {
        if (len <= 0) throw invalid_input("lengths must be positive");
        ++counts_[len];
        ++n_;
    }
}

LengthList LengthList::parse(const std::string& text) {
    std::map<int, long long> counts;
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    if (body.empty()) throw invalid_input("empty length list");
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw invalid_input("empty item in length list");
        long long len = 0, mult = 1;
        auto caret = item.find('^');
        try {
            size_t used = 0;
            len = std::stoll(item.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? item.size() : caret))
                throw invalid_input("trailing junk in length");
            if (caret != std::string::npos) {
                std::string m = item.substr(caret + 1);
                mult = std::stoll(m, &used);
                if (used != m.size()) throw invalid_input("trailing junk in multiplicity");
            }
        } catch (const invalid_input&) {
            throw;
        } catch (const std::exception&) {
            throw invalid_input("cannot parse length list item '" + item + "'");
        }
        if (len <= 0) throw invalid_input("lengths must be positive");
        if (mult <= 0) throw invalid_input("multiplicities must be >= 1");
        counts[static_cast<int>(len)] += mult;
    }
    return LengthList(counts);
}

long long LengthList::count(int length) const {
    auto it = counts_.find(length);
    return it == counts_.end() ? 0 : it->second;
}

int LengthList::max_length() const {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
}

std::vector<int> LengthList::distinct() const {
    std::vector<int> out;
    out.reserve(counts_.size());
    for (auto& [len, cnt] : counts_) out.push_back(len);
    return out;
}

long long LengthList::count_multiples(int d) const {
    if (d <= 0) throw invalid_input("divisor must be positive");
    long long total = 0;
    for (auto& [len, cnt] : counts_)
        if (len % d == 0) total += cnt;
    return total;
}

bool LengthList::cyclic_range() const { return max_length() <= n_; }
bool LengthList::linear_range() const { return max_length() <= 2 * n_; }

LengthList LengthList::merged(const LengthList& other) const {
    std::map<int, long long> counts = counts_;
    for (auto& [len, cnt] : other.counts_) counts[len] += cnt;
    return LengthList(counts);
}

std::string LengthList::to_string() const {
    std::string out;
    for (auto& [len, cnt] : counts_) {
        if (!out.empty()) out += ',';
        out += std::to_string(len);
        if (cnt > 1) out += '^' + std::to_string(cnt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// factors and kinds

void NearOneFactor::sort_edges() { std::sort(edges.begin(), edges.end()); }

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Cyclic: return "cyclic";
        case Kind::Linear: return "linear";
        case Kind::AlmostPerfect: return "almost-perfect";
        case Kind::Perfect: return "perfect";
    }
    return "?";
}

Kind classify_kind(int isolated, int v) {
    if (isolated == v - 1) return Kind::Perfect;
    if (isolated == v - 2) return Kind::AlmostPerfect;
    return Kind::Linear;
}

// ---------------------------------------------------------------------------
// lengths

int edge_length(int x, int y, int v) {
    if (v <= 0 || v % 2 == 0) throw invalid_input("v must be odd and positive");
    if (x < 0 || x >= v || y < 0 || y >= v) throw invalid_input("vertex out of range");
    if (x == y) throw invalid_input("edge endpoints must differ");
    int d = x < y ? y - x : x - y;
    return std::min(d, v - d);
}

int map_length(int x, int y, int v) {
    if (v <= 0 || v % 2 == 0) throw invalid_input("v must be odd and positive");
    long long m = (static_cast<long long>(x) * y) % v;
    if (m < 0) m += v;
    if (m == 0) throw invalid_input("length maps to zero (gcd issue)");
    return static_cast<int>(std::min(m, v - m));
}

LengthList length_multiset(const NearOneFactor& f) {
    std::vector<int> lens;
    lens.reserve(f.edges.size());
    for (const Edge& e : f.edges) lens.push_back(edge_length(e.lo, e.hi, f.v));
    return LengthList(lens);
}

LengthList diff_multiset(const NearOneFactor& f) {
    std::vector<int> lens;
    lens.reserve(f.edges.size());
    for (const Edge& e : f.edges) {
        if (e.lo < 0 || e.hi >= f.v) throw invalid_input("vertex out of range");
        lens.push_back(e.hi - e.lo);
    }
    return LengthList(lens);
}

// ---------------------------------------------------------------------------
// validation

ValidationResult validate(const NearOneFactor& f, const LengthList& want, Mode mode) {
    ValidationResult res;
    if (f.v <= 0 || f.v % 2 == 0) {
        res.reason = "v must be odd and positive";
        return res;
    }
    long long n = (f.v - 1) / 2;
    if (static_cast<long long>(f.edges.size()) != n) {
        res.reason = "edge count is " + std::to_string(f.edges.size()) +
                     ", expected " + std::to_string(n);
        return res;
    }
    if (want.n() != n) {
        res.reason = "list size does not match v";
        return res;
    }
    std::vector<char> seen(f.v, 0);
    auto touch = [&](int u) -> bool {
        if (u < 0 || u >= f.v) {
            res.reason = "vertex " + std::to_string(u) + " out of range";
            return false;
        }
        if (seen[u]) {
            res.reason = "vertex " + std::to_string(u) + " used twice";
            return false;
        }
        seen[u] = 1;
        return true;
    };
    for (const Edge& e : f.edges) {
        if (e.lo == e.hi) {
            res.reason = "degenerate edge";
            return res;
        }
        if (!touch(e.lo) || !touch(e.hi)) return res;
    }
    if (!touch(f.isolated)) return res;
    // seen covers all v vertices exactly once at this point by counting.
    std::map<int, long long> have;
    for (const Edge& e : f.edges) {
        int len = mode == Mode::Cyclic ? edge_length(e.lo, e.hi, f.v) : e.hi - e.lo;
        ++have[len];
    }
    if (LengthList(have) != want) {
        res.reason = std::string(mode == Mode::Cyclic ? "cyclic lengths " : "differences ") +
                     LengthList(have).to_string() + " do not match list " + want.to_string();
        return res;
    }
    res.ok = true;
    res.kind = mode == Mode::Cyclic ? Kind::Cyclic : classify_kind(f.isolated, f.v);
    return res;
}

// ---------------------------------------------------------------------------
// transformations

NearOneFactor translate(const NearOneFactor& f, int g) {
    NearOneFactor out = f;
    for (Edge& e : out.edges) {
        e.lo += g;
        e.hi += g;
    }
    out.isolated += g;
    return out;
}

NearOneFactor multiply(const NearOneFactor& f, int y) {
    int yy = y % f.v;
    if (yy < 0) yy += f.v;
    if (std::gcd(yy, f.v) != 1) throw invalid_input("multiplier not coprime with v");
    NearOneFactor out;
    out.v = f.v;
    auto mul = [&](int u) {
        if (u < 0 || u >= f.v) throw invalid_input("vertex out of range");
        return static_cast<int>((static_cast<long long>(u) * yy) % f.v);
    };
    out.edges.reserve(f.edges.size());
    for (const Edge& e : f.edges) out.edges.emplace_back(mul(e.lo), mul(e.hi));
    out.isolated = mul(f.isolated);
    out.sort_edges();
    return out;
}

// ---------------------------------------------------------------------------
// slot words

SlotSequence to_sequence(const Realization& r) {
    if (r.kind == Kind::Cyclic)
        throw invalid_input("cyclic realizations have no slot word");
    SlotSequence seq;
    seq.slots.assign(r.factor.v, -1);
    auto put = [&](int i, int val) {
        if (i < 0 || i >= r.factor.v) throw invalid_input("vertex out of range");
        if (seq.slots[i] != -1) throw invalid_input("vertex used twice");
        seq.slots[i] = val;
    };
    for (const Edge& e : r.factor.edges) {
        put(e.lo, e.hi - e.lo);
        put(e.hi, e.hi - e.lo);
        seq.pairs.emplace_back(e.lo, e.hi);
    }
    put(r.factor.isolated, 0);
    seq.zero_slot = r.factor.isolated;
    std::sort(seq.pairs.begin(), seq.pairs.end());
    return seq;
}

Realization from_sequence(const std::vector<int>& slots) {
    int v = static_cast<int>(slots.size());
    if (v <= 0 || v % 2 == 0) throw invalid_input("slot word length must be odd");
    Realization r;
    r.factor.v = v;
    // Greedy left-to-right pairing: the least unpaired slot i can only pair
    // with i + slots[i] (its left partner would already be paired), so the
    // pairing is forced when it exists.
    std::vector<char> done(v, 0);
    int zero = -1;
    for (int i = 0; i < v; ++i) {
        if (done[i]) continue;
        int d = slots[i];
        if (d == 0) {
            if (zero != -1) throw invalid_input("more than one zero slot");
            zero = i;
            done[i] = 1;
            continue;
        }
        if (d < 0) throw invalid_input("negative slot value");
        int j = i + d;
        if (j >= v || done[j] || slots[j] != d)
            throw invalid_input("slot " + std::to_string(i) + " has no partner");
        done[i] = done[j] = 1;
        r.factor.edges.emplace_back(i, j);
    }
    if (zero == -1) throw invalid_input("no zero slot");
    r.factor.isolated = zero;
    r.kind = classify_kind(zero, v);
    r.list = diff_multiset(r.factor);
    return r;
}

OneFactor perfect_to_one_factor(const Realization& r) {
    if (r.kind != Kind::Perfect)
        throw invalid_input("only perfect realizations restrict to one-factors");
    auto check = validate(r.factor, r.list, Mode::Linear);
    if (!check.ok) throw invalid_input("invalid realization: " + check.reason);
    OneFactor out;
    out.vertex_count = r.factor.v - 1;
    out.edges = r.factor.edges;
    return out;
}

}  // namespace mpp
