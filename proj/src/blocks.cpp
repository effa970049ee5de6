#include "mpp/blocks.hpp"

#include <numeric>

#include "mpp/feasibility.hpp"
#include "mpp/oracle.hpp"

namespace mpp {

namespace {

std::vector<int> word_of(const Realization& r) { return to_sequence(r).slots; }

// Append `next` to a perfect word, dropping the perfect word's terminal zero.
void append_to_perfect(std::vector<int>& acc, const std::vector<int>& next) {
    if (acc.empty()) {
        acc = next;
        return;
    }
    if (acc.back() != 0) throw internal_error("prefix word is not perfect");
    acc.pop_back();
    acc.insert(acc.end(), next.begin(), next.end());
}

std::vector<int> xx_word(int x) {
    std::vector<int> w(2 * x, x);
    w.push_back(0);
    return w;
}

std::vector<int> odd_chain_word(int k) {
    std::vector<int> w;
    w.reserve(2 * k + 3);
    for (int i = k; i >= 0; --i) w.push_back(2 * i + 1);
    for (int i = 0; i <= k; ++i) w.push_back(2 * i + 1);
    w.push_back(0);
    return w;
}

void append_ones_pairs(std::vector<int>& w, long long pairs) {
    for (long long i = 0; i < pairs; ++i) {
        w.push_back(1);
        w.push_back(1);
    }
}

}  // namespace

Realization empty_realization() { return from_sequence({0}); }

Realization perfect_xx(int x) {
    if (x <= 0) throw invalid_input("x must be positive");
    return from_sequence(xx_word(x));
}

Realization perfect_ones(long long a) {
    if (a < 0) throw invalid_input("count must be nonnegative");
    std::vector<int> w;
    append_ones_pairs(w, a);
    w.push_back(0);
    return from_sequence(w);
}

Realization block_x_xminus1(int x) {
    if (x <= 0) throw invalid_input("x must be positive");
    std::vector<int> w(2 * x - 1, x);
    w[x - 1] = 0;
    return from_sequence(w);
}

Realization perfect_odd_chain(int k) {
    if (k < 0) throw invalid_input("k must be nonnegative");
    return from_sequence(odd_chain_word(k));
}

Realization perfect_odd_list(const std::vector<long long>& mults) {
    if (mults.empty()) throw invalid_input("no multiplicities given");
    int m = static_cast<int>(mults.size()) - 1;
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] < 1) throw precondition_violation("multiplicities must be >= 1");
        if (i > 0 && mults[i] > mults[i - 1])
            throw precondition_violation("multiplicities must be non-increasing");
    }
    std::vector<int> acc;
    for (long long c = 0; c < mults[m]; ++c) append_to_perfect(acc, odd_chain_word(m));
    for (int i = 0; i < m; ++i)
        for (long long c = 0; c < mults[i] - mults[i + 1]; ++c)
            append_to_perfect(acc, odd_chain_word(i));
    return from_sequence(acc);
}

Realization compose(const Realization& first, const Realization& second) {
    if (first.kind == Kind::Cyclic || second.kind == Kind::Cyclic)
        throw invalid_input("cannot compose cyclic realizations");
    if (first.kind == Kind::Perfect) {
        std::vector<int> w = word_of(first);
        append_to_perfect(w, word_of(second));
        return from_sequence(w);
    }
    if (first.kind == Kind::AlmostPerfect && second.kind == Kind::AlmostPerfect) {
        // The gluing of two almost perfect words exists but is not a plain
        // concatenation; find one with the isolated vertex pinned to the
        // end.  Exhaustive, so large operands can take a while.
        LengthList merged = first.list.merged(second.list);
        SearchOptions opts;
        opts.mode = Mode::Linear;
        opts.required_isolated = static_cast<int>(merged.v()) - 1;
        auto res = search_realization(merged, opts);
        if (res.status != SearchStatus::Found)
            throw internal_error("no perfect gluing found for " + merged.to_string());
        Realization out;
        out.factor = *res.factor;
        out.kind = Kind::Perfect;
        out.list = merged;
        return out;
    }
    throw invalid_input(std::string("composition undefined for ") +
                        kind_name(first.kind) + " + " + kind_name(second.kind));
}

Realization inflate(const Realization& r, const std::map<int, int>& k) {
    bool all_zero = true;
    for (auto& [len, cnt] : k) {
        if (len <= 0) throw invalid_input("lengths must be positive");
        if (cnt < 0) throw invalid_input("counts must be nonnegative");
        if (cnt > 0) all_zero = false;
    }
    if (all_zero) return r;
    if (r.kind == Kind::Cyclic)
        throw invalid_input("cannot inflate a cyclic realization");
    std::vector<int> acc;
    for (auto& [len, cnt] : k)
        for (int c = 0; c < cnt; ++c) append_to_perfect(acc, xx_word(len));
    append_to_perfect(acc, word_of(r));
    Realization out = from_sequence(acc);
    if (out.kind != r.kind) throw internal_error("inflation changed the grade");
    return out;
}

Realization realize_1y(long long a, int y, long long b) {
    if (y < 2) throw invalid_input("y must be at least 2");
    if (a < 0 || b < 0 || a + b == 0) throw invalid_input("need a, b >= 0, not both zero");
    if (a < (y - 1) / 2)
        throw precondition_violation("need a >= floor((y-1)/2) ones");
    if (b == 0) return perfect_ones(a);
    long long q = b / y;
    long long r = b % y;

    std::vector<int> inner;
    long long block_ones;
    if ((y - r) % 2 == 0) {
        // y_1..y_r  1-pairs  y_1..y_r  0   (perfect)
        block_ones = (y - r) / 2;
        inner.insert(inner.end(), r, y);
        append_ones_pairs(inner, block_ones);
        inner.insert(inner.end(), r, y);
        inner.push_back(0);
    } else {
        // y_1..y_r  1-pairs  0  y_1..y_r   (almost perfect iff r = 1)
        block_ones = (y - r - 1) / 2;
        inner.insert(inner.end(), r, y);
        append_ones_pairs(inner, block_ones);
        inner.push_back(0);
        inner.insert(inner.end(), r, y);
    }

    std::vector<int> acc;
    if (a - block_ones < 0) {
        // Only reachable when r = 0 and y is even with a = y/2 - 1: the
        // trailing block would be all ones anyway, so fold them into the
        // prefix instead.
        if (r != 0) throw internal_error("short of ones with a nonzero remainder");
        append_to_perfect(acc, word_of(perfect_ones(a)));
        for (long long c = 0; c < q; ++c) append_to_perfect(acc, xx_word(y));
        return from_sequence(acc);
    }
    append_to_perfect(acc, word_of(perfect_ones(a - block_ones)));
    for (long long c = 0; c < q; ++c) append_to_perfect(acc, xx_word(y));
    append_to_perfect(acc, inner);
    return from_sequence(acc);
}

Realization realize_12(long long a, long long b) { return realize_1y(a, 2, b); }

Realization all_ones_factor(long long n) {
    if (n <= 0) throw invalid_input("n must be positive");
    Realization r;
    r.factor.v = static_cast<int>(2 * n + 1);
    for (long long i = 0; i < n; ++i)
        r.factor.edges.emplace_back(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
    r.factor.isolated = static_cast<int>(2 * n);
    r.kind = Kind::Cyclic;
    r.list = LengthList(std::map<int, long long>{{1, n}});
    return r;
}

Realization realize_constant(int x, long long n) {
    if (n <= 0) throw invalid_input("n must be positive");
    if (x < 1 || x > n) throw invalid_input("need 1 <= x <= n");
    long long v = 2 * n + 1;
    int d = static_cast<int>(std::gcd(static_cast<long long>(x), v));
    if (d != 1)
        throw infeasible_error({false, d, n, (v - d) / 2});
    Realization ones = all_ones_factor(n);
    Realization out;
    out.factor = multiply(ones.factor, x);
    out.kind = Kind::Cyclic;
    out.list = LengthList(std::map<int, long long>{{x, n}});
    auto check = validate(out.factor, out.list, Mode::Cyclic);
    if (!check.ok) throw internal_error("constant construction invalid: " + check.reason);
    return out;
}

Realization patterned_starter(int n) {
    if (n <= 0) throw invalid_input("n must be positive");
    Realization r;
    r.factor.v = 2 * n + 1;
    for (int i = 0; i < n; ++i) r.factor.edges.emplace_back(i, 2 * n - 1 - i);
    r.factor.isolated = 2 * n;
    r.factor.sort_edges();
    r.kind = Kind::Cyclic;
    std::map<int, long long> counts;
    for (int l = 1; l <= n; ++l) counts[l] = 1;
    r.list = LengthList(counts);
    auto check = validate(r.factor, r.list, Mode::Cyclic);
    if (!check.ok) throw internal_error("starter construction invalid: " + check.reason);
    return r;
}

}  // namespace mpp
