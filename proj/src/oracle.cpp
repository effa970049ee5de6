#include "mpp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

namespace mpp {

namespace {

// Cover state over the vertices.  Small graphs (the common case: every
// sweep fits) use one machine word; the general variant has no size cap.
struct SmallBits {
    std::uint64_t bits = 0;
    int v = 0;
    explicit SmallBits(int v_) : v(v_) {}
    bool used(int u) const { return (bits >> u) & 1u; }
    void set(int u) { bits |= std::uint64_t(1) << u; }
    void clear(int u) { bits &= ~(std::uint64_t(1) << u); }
    int least_unused() const {
        std::uint64_t free = ~bits & (v == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << v) - 1);
        return free == 0 ? -1 : std::countr_zero(free);
    }
};

struct WideBits {
    std::vector<std::uint64_t> w;
    int v = 0;
    explicit WideBits(int v_) : w((v_ + 63) / 64, 0), v(v_) {}
    bool used(int u) const { return (w[u >> 6] >> (u & 63)) & 1u; }
    void set(int u) { w[u >> 6] |= std::uint64_t(1) << (u & 63); }
    void clear(int u) { w[u >> 6] &= ~(std::uint64_t(1) << (u & 63)); }
    int least_unused() const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t free = ~w[i];
            if ((i + 1) * 64 > static_cast<size_t>(v))
                free &= (std::uint64_t(1) << (v - i * 64)) - 1;
            if (free) return static_cast<int>(i * 64) + std::countr_zero(free);
        }
        return -1;
    }
};

template <class Bits>
struct Searcher {
    int v;
    bool cyclic;
    std::vector<int> len;          // distinct lengths, ascending
    std::vector<long long> cnt;    // remaining multiplicity per length
    Bits used;
    std::vector<Edge> edges;
    int isolated = -1;
    int required = -1;             // forced isolated vertex, -1 = free
    std::uint64_t nodes = 0;
    std::uint64_t limit = 0;       // 0 = unlimited
    bool aborted = false;

    Searcher(int v_, bool cyclic_) : v(v_), cyclic(cyclic_), used(v_) {}

    bool try_edge(int u, int w, size_t k) {
        if (w == u || used.used(w)) return false;
        used.set(u);
        used.set(w);
        --cnt[k];
        edges.emplace_back(u, w);
        bool ok = dfs();
        if (!ok) {
            edges.pop_back();
            ++cnt[k];
            used.clear(w);
            used.clear(u);
        }
        return ok;
    }

    bool dfs() {
        ++nodes;
        if (limit && nodes > limit) {
            aborted = true;
            return false;
        }
        int u = used.least_unused();
        if (u < 0) return true;   // v odd: full cover implies n edges + isolated
        for (size_t k = 0; k < len.size(); ++k) {
            if (cnt[k] == 0) continue;
            int d = len[k];
            if (cyclic) {
                int wp = u + d < v ? u + d : u + d - v;
                int wm = u - d >= 0 ? u - d : u - d + v;
                if (try_edge(u, wp, k)) return true;
                if (aborted) return false;
                if (wm != wp && try_edge(u, wm, k)) return true;
            } else {
                if (u + d < v && try_edge(u, u + d, k)) return true;
            }
            if (aborted) return false;
        }
        if (isolated == -1 && (required == -1 || required == u)) {
            isolated = u;
            used.set(u);
            if (dfs()) return true;
            used.clear(u);
            isolated = -1;
        }
        return false;
    }
};

template <class Bits>
SearchResult run_search(const LengthList& list, const SearchOptions& opts, int v) {
    Searcher<Bits> s(v, opts.mode == Mode::Cyclic);
    for (auto& [l, c] : list.counts()) {
        s.len.push_back(l);
        s.cnt.push_back(c);
    }
    if (opts.required_isolated) s.required = *opts.required_isolated;
    else if (opts.normalize_translation) s.required = 0;
    if (opts.node_limit) s.limit = *opts.node_limit;

    SearchResult res;
    bool found = s.dfs();
    res.nodes = s.nodes;
    if (s.aborted) {
        res.status = SearchStatus::Indeterminate;
        return res;
    }
    if (!found) {
        res.status = SearchStatus::Exhausted;
        return res;
    }
    NearOneFactor f;
    f.v = v;
    f.edges = s.edges;
    f.isolated = s.isolated;
    f.sort_edges();
    auto check = validate(f, list, opts.mode);
    if (!check.ok) throw internal_error("search produced invalid factor: " + check.reason);
    res.status = SearchStatus::Found;
    res.factor = std::move(f);
    return res;
}

}  // namespace

SearchResult search_realization(const LengthList& list, const SearchOptions& opts) {
    int v = static_cast<int>(list.v());
    if (opts.mode == Mode::Cyclic && !list.cyclic_range())
        throw invalid_input("list exceeds cyclic length range (max n)");
    if (opts.mode == Mode::Linear && !list.linear_range())
        throw invalid_input("list exceeds linear length range (max 2n)");
    if (opts.required_isolated &&
        (*opts.required_isolated < 0 || *opts.required_isolated >= v))
        throw invalid_input("required isolated vertex out of range");
    if (opts.required_isolated && opts.normalize_translation)
        throw invalid_input("normalize_translation conflicts with required_isolated");
    if (opts.normalize_translation && opts.mode != Mode::Cyclic)
        throw invalid_input("normalize_translation only applies to cyclic search");
    return v <= 64 ? run_search<SmallBits>(list, opts, v)
                   : run_search<WideBits>(list, opts, v);
}

// ---------------------------------------------------------------------------
// enumeration

ListEnumerator::ListEnumerator(int n) : n_(n) {
    if (n <= 0) throw invalid_input("n must be positive");
    current_.assign(n, 1);
}

std::optional<LengthList> ListEnumerator::next() {
    if (done_) return std::nullopt;
    LengthList out{current_};
    // Advance to the lexicographic successor among nondecreasing words over
    // {1..n}: bump the rightmost entry < n, reset the suffix to that value.
    int i = n_ - 1;
    while (i >= 0 && current_[i] == n_) --i;
    if (i < 0) {
        done_ = true;
    } else {
        int val = current_[i] + 1;
        for (int j = i; j < n_; ++j) current_[j] = val;
    }
    return out;
}

std::uint64_t ListEnumerator::total(int n) {
    if (n <= 0) throw invalid_input("n must be positive");
    // C(2n-1, n), kept exact in 64 bits (fine for every practical sweep).
    std::uint64_t num = 1;
    for (int k = 1; k <= n - 1; ++k) {
        // C(2n-1, n-1) built incrementally: multiply then divide stays exact.
        num = num * (n + k) / k;
    }
    return num;
}

// ---------------------------------------------------------------------------
// sweep

int default_workers() {
    if (const char* env = std::getenv("MPP_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

bool SweepReport::ok() const {
    for (const auto& row : rows)
        if (!row.counterexamples.empty() || row.indeterminate > 0) return false;
    return true;
}

SweepReport sweep(int v_max, const SweepOptions& opts) {
    if (v_max < 3 || v_max % 2 == 0)
        throw invalid_input("sweep bound must be an odd v >= 3");
    if (v_max > 27) throw invalid_input("sweep beyond v = 27 is unsupported");
    int workers = opts.workers > 0 ? opts.workers : default_workers();
    SweepReport report;
    for (int v = 3; v <= v_max; v += 2) {
        int n = (v - 1) / 2;
        auto t0 = std::chrono::steady_clock::now();

        std::vector<std::vector<int>> lists;
        lists.reserve(ListEnumerator::total(n));
        {
            ListEnumerator en(n);
            while (auto l = en.next()) {
                std::vector<int> flat;
                flat.reserve(n);
                for (auto& [len, cnt] : l->counts())
                    flat.insert(flat.end(), cnt, len);
                lists.push_back(std::move(flat));
            }
        }

        SweepRow row;
        row.v = v;
        row.lists = lists.size();

        std::atomic<size_t> cursor{0};
        std::mutex merge_mtx;
        auto work = [&]() {
            SweepRow local;
            std::vector<std::string> bad;
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= lists.size()) break;
                LengthList list{lists[i]};
                SearchOptions sopts;
                sopts.mode = Mode::Cyclic;
                sopts.node_limit = opts.node_limit;
                sopts.normalize_translation = opts.normalize_translation;
                if (check_condition(list).feasible) {
                    ++local.feasible;
                    auto res = search_realization(list, sopts);
                    if (res.status == SearchStatus::Found) ++local.realized;
                    else if (res.status == SearchStatus::Indeterminate) ++local.indeterminate;
                    else bad.push_back(list.to_string() + " feasible but not realized");
                } else {
                    ++local.violating;
                    if (opts.verify_infeasible && v <= 15) {
                        auto res = search_realization(list, sopts);
                        if (res.status == SearchStatus::Exhausted) ++local.infeasible_verified;
                        else if (res.status == SearchStatus::Indeterminate) ++local.indeterminate;
                        else bad.push_back(list.to_string() + " violates the condition but is realized");
                    }
                }
            }
            std::lock_guard<std::mutex> lock(merge_mtx);
            row.feasible += local.feasible;
            row.realized += local.realized;
            row.violating += local.violating;
            row.infeasible_verified += local.infeasible_verified;
            row.indeterminate += local.indeterminate;
            row.counterexamples.insert(row.counterexamples.end(), bad.begin(), bad.end());
        };

        std::vector<std::thread> pool;
        int spawn = std::min<int>(workers, static_cast<int>(lists.size()));
        for (int i = 0; i < std::max(1, spawn) - 1; ++i) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        std::sort(row.counterexamples.begin(), row.counterexamples.end());

        auto t1 = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace mpp
