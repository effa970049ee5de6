#include "mpp/one_two_t.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "mpp/blocks.hpp"
#include "mpp/feasibility.hpp"
#include "mpp/oracle.hpp"

namespace mpp {

namespace {

void note(Trace* trace, std::string op, std::string detail) {
    if (trace) trace->push_back({std::move(op), std::move(detail)});
}

void check_common(long long a, long long b, int t, long long c) {
    if (t < 3) throw invalid_input("three-length solver needs t >= 3");
    if (a < 0 || b < 0 || c < 1)
        throw invalid_input("three-length solver needs a, b >= 0 and c >= 1");
    if (a + b + c > std::numeric_limits<int>::max() / 2 - 1)
        throw invalid_input("instance too large");
}

LengthList list_12t(long long a, long long b, int t, long long c) {
    std::map<int, long long> m;
    if (a > 0) m[1] = a;
    if (b > 0) m[2] = b;
    m[t] = c;
    return LengthList(m);
}

// Split the column-1 block size `target` into (a~, b~): b~ is the smallest
// count of the same parity as b that leaves a~ = target - b~ within 0..a
// with a - a~ of the requested parity, i.e. a~ is maximal.
std::pair<long long, long long> pick_embed(long long target, long long a, long long b,
                                           long long a_parity) {
    for (long long bt = b % 2; bt <= std::min(b, target); bt += 2) {
        long long at = target - bt;
        if (at <= a && (a - at) % 2 == a_parity) return {at, bt};
    }
    throw precondition_violation("no {1,2}-block split fits the column");
}

Realization finish_grid(const VertexGrid& g, Placer& p, int t, std::optional<int> preferred,
                        long long a, long long b, long long c, const char* what) {
    int iso = finish_rows(g, p, t, preferred);
    Realization out;
    out.factor.v = p.v();
    out.factor.edges = p.edges();
    out.factor.isolated = iso;
    out.factor.sort_edges();
    out.kind = Kind::Cyclic;
    out.list = list_12t(a, b, t, c);
    auto check = validate(out.factor, out.list, Mode::Cyclic);
    if (!check.ok) throw internal_error(std::string(what) + " construction invalid: " + check.reason);
    return out;
}

// Inclusive 1-indexed rectangle of grid cells used by an edge schedule.
struct Rect {
    long long r1, r2, c1, c2;
};

bool rects_collide(const Rect& x, const Rect& y) {
    return !(x.r2 < y.r1 || y.r2 < x.r1 || x.c2 < y.c1 || y.c2 < x.c1);
}

void require_disjoint(const std::vector<Rect>& ones, const std::vector<Rect>& twos) {
    for (const Rect& x : ones)
        for (const Rect& y : twos)
            if (rects_collide(x, y))
                throw precondition_violation("1- and 2-edge schedules collide on the grid");
}

}  // namespace

// ---------------------------------------------------------------------------
// big: sequence composition

BigParts big_parts(long long a, long long b, int t, long long r) {
    if (r < 1 || r >= t) throw invalid_input("big_parts needs 0 < r < t");
    BigParts out;
    std::vector<int>& w = out.inner;
    const long long gap = t - r;  // inner slots between the two t-runs

    auto t_run = [&] {
        for (long long i = 0; i < r; ++i) w.push_back(t);
    };
    // e (even) twos as interleaved chunks: (2,2,2,2) pairs slots (0,2),(1,3).
    auto twos = [&](long long e) {
        for (long long i = 0; i < e / 2; ++i) w.insert(w.end(), {2, 2, 2, 2});
    };
    auto ones = [&](long long k) {
        for (long long i = 0; i < k; ++i) w.insert(w.end(), {1, 1});
    };
    auto straddle = [&] { w.insert(w.end(), {2, 0, 2}); };
    auto zero = [&] { w.push_back(0); };
    auto need_ones = [&](long long k) {
        if (a < k)
            throw precondition_violation("inner word needs " + std::to_string(k) +
                                         " ones, only " + std::to_string(a) + " available");
    };

    switch (gap % 4) {
        case 0: {
            const long long half = gap / 2;
            if (b >= half) {
                t_run(); twos(half); t_run(); zero();
                out.twos_used = half;
                out.inner_first = true;  // the leftover may be almost perfect
            } else if (b % 2 == 0) {
                const long long k1 = (gap - 2 * b) / 2;
                need_ones(k1);
                t_run(); twos(b); ones(k1); t_run(); zero();
                out.ones_used = k1;
                out.twos_used = b;
            } else {
                const long long k1 = (gap - 2 * (b - 1)) / 2;
                need_ones(k1);
                t_run(); twos(b - 1); ones(k1); t_run(); zero();
                out.ones_used = k1;
                out.twos_used = b - 1;  // the odd two goes to the leftover
                out.inner_first = true;
            }
            break;
        }
        case 2: {
            const long long half = gap / 2;  // odd
            if (b >= half - 1) {
                need_ones(1);
                t_run(); ones(1); twos(half - 1); t_run(); zero();
                out.ones_used = 1;
                out.twos_used = half - 1;
                out.inner_first = true;
            } else if (b % 2 == 0) {
                const long long k1 = (gap - 2 * b) / 2;
                need_ones(k1);
                t_run(); twos(b); ones(k1); t_run(); zero();
                out.ones_used = k1;
                out.twos_used = b;
            } else {
                const long long k1 = (gap - 2 * (b - 1)) / 2;
                need_ones(k1);
                t_run(); twos(b - 1); ones(k1); t_run(); zero();
                out.ones_used = k1;
                out.twos_used = b - 1;
                out.inner_first = true;
            }
            break;
        }
        case 1: {
            const long long h = (gap - 1) / 2;  // even
            if (b % 2 == 0) {
                if (b >= h) {
                    t_run(); twos(h); zero(); t_run();
                    out.twos_used = h;
                } else {
                    const long long k1 = (gap - 2 * b - 1) / 2;
                    need_ones(k1);
                    t_run(); twos(b); ones(k1); zero(); t_run();
                    out.ones_used = k1;
                    out.twos_used = b;
                }
            } else {
                if (gap == 1)
                    throw precondition_violation(
                        "an odd 2-count does not fit when c = t-1 (mod t)");
                if (b >= h) {
                    need_ones(1);
                    const long long ww = (gap - 3) / 2;  // odd
                    t_run(); ones(1); twos(ww - 1); straddle(); t_run();
                    out.ones_used = 1;
                    out.twos_used = ww;
                } else {
                    const long long k1 = (gap - 2 * b - 1) / 2;
                    need_ones(k1);
                    t_run(); twos(b - 1); straddle(); ones(k1); t_run();
                    out.ones_used = k1;
                    out.twos_used = b;
                }
            }
            break;
        }
        default: {  // gap % 4 == 3
            const long long h = (gap - 1) / 2;  // odd
            if (b % 2 == 0) {
                if (b >= h - 1) {
                    need_ones(1);
                    t_run(); ones(1); twos(h - 1); zero(); t_run();
                    out.ones_used = 1;
                    out.twos_used = h - 1;
                } else {
                    const long long k1 = (gap - 2 * b - 1) / 2;
                    need_ones(k1);
                    t_run(); twos(b); ones(k1); zero(); t_run();
                    out.ones_used = k1;
                    out.twos_used = b;
                }
            } else {
                if (b >= h) {
                    t_run(); twos(h - 1); straddle(); t_run();
                    out.twos_used = h;
                } else {
                    const long long k1 = (gap - 2 * b - 1) / 2;
                    need_ones(k1);
                    t_run(); twos(b - 1); straddle(); ones(k1); t_run();
                    out.ones_used = k1;
                    out.twos_used = b;
                }
            }
            break;
        }
    }
    return out;
}

Realization realize_12t_big(long long a, long long b, int t, long long c, Trace* trace) {
    check_common(a, b, t, c);
    if (t > 2 * (a + b + c)) throw invalid_input("length exceeds the linear range");

    const long long q = c / t, r = c % t;
    Realization acc = empty_realization();
    for (long long i = 0; i < q; ++i) acc = compose(acc, perfect_xx(t));

    if (r == 0) {
        if (a + b > 0) acc = compose(acc, realize_12(a, b));
        note(trace, "big", "c = " + std::to_string(q) + "*" + std::to_string(t) +
                               "; block prefix plus a {1,2}-block");
    } else {
        if (a + b < (t - 1) / 2)
            throw precondition_violation("composition needs a + b >= (t-1)/2");
        BigParts parts = big_parts(a, b, t, r);
        Realization inner = from_sequence(parts.inner);
        const long long la = a - parts.ones_used, lb = b - parts.twos_used;
        if (parts.inner_first) {
            acc = compose(acc, inner);
            if (la + lb > 0) acc = compose(acc, realize_12(la, lb));
        } else {
            if (la + lb > 0) acc = compose(acc, realize_12(la, lb));
            acc = compose(acc, inner);
        }
        note(trace, "big", "c = " + std::to_string(q) + "*" + std::to_string(t) + " + " +
                               std::to_string(r) + "; inner word holds 1^" +
                               std::to_string(parts.ones_used) + ",2^" +
                               std::to_string(parts.twos_used));
    }

    acc.list = list_12t(a, b, t, c);
    auto check = validate(acc.factor, acc.list, Mode::Linear);
    if (!check.ok) throw internal_error("composition construction invalid: " + check.reason);
    if (check.kind != acc.kind) throw internal_error("composition grade drifted");
    return acc;
}

// ---------------------------------------------------------------------------
// shared: alternating grid, d = gcd(t, v) > 1

Realization realize_12t_shared(long long a, long long b, int t, long long c, Trace* trace) {
    check_common(a, b, t, c);
    const long long n = a + b + c;
    if (t > n) throw invalid_input("length exceeds the cyclic range");
    const int v = static_cast<int>(2 * n + 1);
    const int d = std::gcd(t, v);
    if (d == 1) throw precondition_violation("no divisor shared with v");
    if (a + b < (d - 1) / 2)
        throw infeasible_error({false, d, c, (static_cast<long long>(v) - d) / 2});
    if (2 * static_cast<long long>(d) * c < v + d)
        throw precondition_violation("too few long edges to fill the grid rows");
    const int cols = v / d;
    if (cols < 5) throw precondition_violation("grid too narrow");

    const long long half = (d - 1) / 2;
    const long long parity = (a + b - half) % 2;
    auto [at, bt] = pick_embed(half, a, b, parity);
    Realization F = realize_12(at, bt);

    VertexGrid g = build_alternating_grid(v, t, d);
    Placer p(v);
    p.place(F.factor);  // column 1 holds exactly the values 0..d-1

    const long long beta = (b - bt) / 2;
    const long long q2 = (2 * beta) / (cols - 1), r2 = (2 * beta) % (cols - 1);
    if (q2 + (r2 ? 1 : 0) > half)
        throw precondition_violation("too many 2-edges for the grid");
    std::vector<Rect> two_rects;
    if (q2 > 0) two_rects.push_back({1, 2 * q2, 2, cols});
    if (r2 > 0) two_rects.push_back({2 * q2 + 1, 2 * q2 + 2, cols - r2 + 1, cols});

    std::vector<Rect> one_rects;
    std::optional<int> preferred;
    if (parity == 0) {
        const long long alpha = (a - at) / 2;
        const long long q1 = (2 * alpha) / (cols - 1), r1 = (2 * alpha) % (cols - 1);
        if (q1 + (r1 ? 1 : 0) > half)
            throw precondition_violation("too many 1-edges for the grid");
        if (q1 > 0) one_rects.push_back({d + 1 - 2 * q1, d, 2, cols});
        if (r1 > 0) one_rects.push_back({d - 1 - 2 * q1, d - 2 * q1, 2, r1 + 1});
        require_disjoint(one_rects, two_rects);

        for (long long i = half - q1 + 1; i <= half; ++i)
            for (int j = 2; j <= cols; ++j)
                p.edge(g.m(static_cast<int>(2 * i), j), g.m(static_cast<int>(2 * i + 1), j), 1);
        if (r1 > 0) {
            const long long i0 = half - q1;
            for (int j = 2; j <= static_cast<int>(r1) + 1; ++j)
                p.edge(g.m(static_cast<int>(2 * i0), j), g.m(static_cast<int>(2 * i0 + 1), j), 1);
        }
        preferred = F.factor.isolated;
        note(trace, "shared-grid",
             "grid " + std::to_string(d) + "x" + std::to_string(cols) + ", block 1^" +
                 std::to_string(at) + ",2^" + std::to_string(bt) + " in column 1");
    } else {
        const long long alpha = (a - at - 1) / 2;
        // One 1-edge on the bottom row pair, then alpha pairs leftward/up.
        if (2 * alpha <= cols - 3) {
            one_rects.push_back({d - 1, d, 3, 2 * alpha + 3});
        } else {
            one_rects.push_back({d - 1, d, 3, cols});
            const long long rest = 2 * alpha - (cols - 3);
            const long long q1 = rest / (cols - 1), r1 = rest % (cols - 1);
            if (d - 2 * q1 - 1 < 2 || (r1 > 0 && d - 2 * q1 - 3 < 2))
                throw precondition_violation("too many 1-edges for the grid");
            if (q1 > 0) one_rects.push_back({d - 2 * q1 - 1, d - 2, 2, cols});
            if (r1 > 0) one_rects.push_back({d - 2 * q1 - 3, d - 2 * q1 - 2, 2, r1 + 1});
        }
        require_disjoint(one_rects, two_rects);

        p.edge(g.m(d - 1, 3), g.m(d, 3), 1);
        if (2 * alpha <= cols - 3) {
            for (int j = 4; j <= static_cast<int>(2 * alpha) + 3; ++j)
                p.edge(g.m(d - 1, j), g.m(d, j), 1);
        } else {
            for (int j = 4; j <= cols; ++j) p.edge(g.m(d - 1, j), g.m(d, j), 1);
            const long long rest = 2 * alpha - (cols - 3);
            const long long q1 = rest / (cols - 1), r1 = rest % (cols - 1);
            for (long long i = 1; i <= q1; ++i)
                for (int j = 2; j <= cols; ++j)
                    p.edge(g.m(static_cast<int>(d - 2 * i), j),
                           g.m(static_cast<int>(d - 2 * i - 1), j), 1);
            for (int j = 2; j <= static_cast<int>(r1) + 1; ++j)
                p.edge(g.m(static_cast<int>(d - 2 * q1 - 2), j),
                       g.m(static_cast<int>(d - 2 * q1 - 3), j), 1);
        }
        note(trace, "shared-grid",
             "grid " + std::to_string(d) + "x" + std::to_string(cols) + ", block 1^" +
                 std::to_string(at) + ",2^" + std::to_string(bt) +
                 " in column 1, odd 1-surplus");
    }

    for (long long i = 1; i <= q2; ++i)
        for (int j = 2; j <= cols; ++j)
            p.edge(g.m(static_cast<int>(2 * i - 1), j), g.m(static_cast<int>(2 * i), j), 2);
    if (r2 > 0)
        for (int j = cols - static_cast<int>(r2) + 1; j <= cols; ++j)
            p.edge(g.m(static_cast<int>(2 * q2 + 1), j), g.m(static_cast<int>(2 * q2 + 2), j), 2);

    return finish_grid(g, p, t, preferred, a, b, c, "shared-divisor grid");
}

// ---------------------------------------------------------------------------
// coprime: ragged grid, gcd(t, v) = 1

Realization realize_12t_coprime(long long a, long long b, int t, long long c, Trace* trace) {
    check_common(a, b, t, c);
    const long long n = a + b + c;
    if (t > n) throw invalid_input("length exceeds the cyclic range");
    const int v = static_cast<int>(2 * n + 1);
    if (std::gcd(t, v) != 1) throw precondition_violation("shares a divisor with v");

    const long long q = v / t, r = v % t;  // r >= 1, q >= 2 since t <= n
    VertexGrid g = build_ragged_grid(v, t);
    Placer p(v);

    if (q % 2 == 0) {
        const long long rp = r;  // v mod 2t
        const long long s0 = (rp - 1) / 2;
        if (a + b < s0)
            throw precondition_violation("too few short edges for the ragged grid");
        if (a + b == s0) {
            Realization F = a + b > 0 ? realize_12(a, b) : empty_realization();
            p.place(F.factor);  // literally on 0..rp-1
            note(trace, "coprime-grid",
                 "ragged " + std::to_string(t) + "x" + std::to_string(q + 1) +
                     ", exact block on column 1");
            return finish_grid(g, p, t, std::nullopt, a, b, c, "coprime grid");
        }
        if (rp == 1) {
            // Two copies of a half-size block end the first two columns;
            // leftover parities are patched around vertex 0 / v-1.
            const long long ah = a / 2, bh = b / 2, s = 2 * (ah + bh);
            if (s > t - 2 || (b % 2 == 1 && s > t - 3))
                throw precondition_violation("half blocks too wide for the rows");
            Realization Ft = ah + bh > 0 ? realize_12(ah, bh) : empty_realization();
            p.place(translate(Ft.factor, static_cast<int>(t - s - 1)));
            p.place(translate(Ft.factor, static_cast<int>(2 * t - s - 1)));
            if (a % 2 == 1 && b % 2 == 0) p.edge(0, v - 1, 1);
            if (a % 2 == 0 && b % 2 == 1) p.edge(1, v - 1, 2);
            if (a % 2 == 1 && b % 2 == 1) {
                p.edge(v - t - 1, v - t, 1);
                p.edge(1, v - 1, 2);
            }
            note(trace, "coprime-grid",
                 "ragged " + std::to_string(t) + "x" + std::to_string(q + 1) +
                     ", doubled half block, v = 1 (mod t)");
            return finish_grid(g, p, t, std::nullopt, a, b, c, "coprime grid");
        }
        const long long parity = (a + b - s0) % 2;
        auto [at, bt] = pick_embed(s0, a, b, parity);
        const long long alpha = (a - at - parity) / 2, beta = (b - bt) / 2;
        Realization F = realize_12(at, bt);
        Realization Fp = alpha + beta > 0 ? realize_12(alpha, beta) : empty_realization();
        const long long w = 2 * (alpha + beta);
        if (t - w - 1 < rp)
            throw precondition_violation("surplus bands collide with the column block");
        p.place(translate(F.factor, static_cast<int>(t * q)));
        p.place(translate(Fp.factor, static_cast<int>(t - w - 1)));
        p.place(translate(Fp.factor, static_cast<int>(2 * t - w - 1)));
        if (parity == 1) {
            const int i = F.factor.isolated;  // >= 1 because rp >= 3
            p.edge(i - 1, i, 1);
        }
        note(trace, "coprime-grid",
             "ragged " + std::to_string(t) + "x" + std::to_string(q + 1) + ", block 1^" +
                 std::to_string(at) + ",2^" + std::to_string(bt) + " in the last column");
        return finish_grid(g, p, t, std::nullopt, a, b, c, "coprime grid");
    }

    // q odd: the block wraps past v, so it carries t + r slots.
    const long long rp = t + r;
    const long long s0 = t - (rp + 1) / 2;  // = (t - r - 1) / 2
    if (a + b < s0)
        throw precondition_violation("too few short edges for the ragged grid");
    if (a + b == s0) {
        Realization F = a + b > 0 ? realize_12(a, b) : empty_realization();
        p.place(translate(F.factor, static_cast<int>(r)));
        note(trace, "coprime-grid",
             "ragged " + std::to_string(t) + "x" + std::to_string(q + 1) +
                 ", exact block at the foot of column 1");
        return finish_grid(g, p, t, std::nullopt, a, b, c, "coprime grid");
    }
    const long long parity = (a + b - s0) % 2;
    auto [at, bt] = pick_embed(s0, a, b, parity);
    const long long alpha = (a - at - parity) / 2, beta = (b - bt) / 2;
    Realization F = at + bt > 0 ? realize_12(at, bt) : empty_realization();
    Realization Fp = alpha + beta > 0 ? realize_12(alpha, beta) : empty_realization();
    const long long w = 2 * (alpha + beta);
    if (w > t - 2) throw precondition_violation("surplus bands too tall for the column");
    if (parity == 1) {
        const long long i = r + F.factor.isolated;
        if (w + 1 > i - 1)
            throw precondition_violation("surplus bands collide with the parity patch");
    }
    p.place(translate(F.factor, v - t));
    p.place(Fp.factor);  // at 0
    p.place(translate(Fp.factor, t));
    if (parity == 1) {
        const int i = static_cast<int>(r) + F.factor.isolated;
        p.edge(i - 1, i, 1);
    }
    note(trace, "coprime-grid",
         "ragged " + std::to_string(t) + "x" + std::to_string(q + 1) + ", block 1^" +
             std::to_string(at) + ",2^" + std::to_string(bt) + " under the last column");
    return finish_grid(g, p, t, std::nullopt, a, b, c, "coprime grid");
}

// ---------------------------------------------------------------------------
// pattern: the two hand-built t = 19 families

Realization realize_12t_pattern(long long a, long long b, int t, long long c, Trace* trace) {
    check_common(a, b, t, c);
    if (t != 19 || a != 1 || b != 1)
        throw precondition_violation("pattern families cover {1, 2, 19^c} only");
    const long long n = 2 + c;
    const int v = static_cast<int>(2 * n + 1);
    const long long k = c / 19;
    if (k < 1) throw precondition_violation("pattern families need c > 19");

    VertexGrid g = build_ragged_grid(v, 19);
    Placer p(v);
    const int q = v / 19;

    if (c % 19 == 4) {
        // v = 38k + 13: q = 2k, r = 13.
        for (int i = 1; i <= 4; ++i) p.edge(g.m(i, q + 1), g.m(6 + i, 1), 19);
        p.edge(g.m(5, q + 1), g.m(6, q + 1), 1);
        p.edge(g.m(11, q + 1), g.m(13, q + 1), 2);
        note(trace, "pattern", "t = 19, c = 4 (mod 19) family");
        return finish_grid(g, p, 19, g.m(12, q + 1), a, b, c, "pattern");
    }
    if (c % 19 == 9) {
        // v = 38k + 23: q = 2k + 1, r = 4.
        for (int i = 1; i <= 4; ++i) p.edge(g.m(i, q + 1), g.m(15 + i, 1), 19);
        for (int i = 1; i <= 4; ++i) p.edge(g.m(i, 1), g.m(4 + i, q), 19);
        p.edge(g.m(9, 1), g.m(13, q), 19);
        p.edge(g.m(10, 1), g.m(12, 1), 2);
        p.edge(g.m(14, 1), g.m(15, 1), 1);
        note(trace, "pattern", "t = 19, c = 9 (mod 19) family");
        return finish_grid(g, p, 19, std::nullopt, a, b, c, "pattern");
    }
    throw precondition_violation("no pattern family for this residue");
}

// ---------------------------------------------------------------------------
// small: t <= 11

Realization realize_12t_small(long long a, long long b, int t, long long c, Trace* trace) {
    check_common(a, b, t, c);
    if (t > 11) throw precondition_violation("small-t solver covers t <= 11");
    const long long n = a + b + c;
    if (t > n) throw invalid_input("length exceeds the cyclic range");
    const int v = static_cast<int>(2 * n + 1);

    if (a == 1 && b == 1 && (t == 8 || t == 9)) {
        VertexGrid g = build_ragged_grid(v, t);
        Placer p(v);
        const int q = v / t;
        if (t == 8 && c % 8 == 1 && c >= 9) {
            // v = 16k + 7: q = 2k, r = 7.
            p.edge(g.m(2, 1), g.m(1, q + 1), 8);
            p.edge(g.m(3, 1), g.m(4, 1), 1);
            p.edge(g.m(5, 1), g.m(7, 1), 2);
            note(trace, "small", "t = 8, c = 1 (mod 8) family");
            return finish_grid(g, p, 8, std::nullopt, a, b, c, "small-t family");
        }
        if (t == 8 && c % 8 == 2 && c >= 10) {
            // v = 16k + 9: q = 2k + 1, r = 1.
            p.edge(g.m(2, 1), g.m(3, q), 8);
            p.edge(g.m(4, 1), g.m(5, 1), 1);
            p.edge(g.m(6, 1), g.m(8, 1), 2);
            note(trace, "small", "t = 8, c = 2 (mod 8) family");
            return finish_grid(g, p, 8, std::nullopt, a, b, c, "small-t family");
        }
        if (t == 9 && c % 9 == 1 && c >= 10) {
            // v = 18k + 7: q = 2k, r = 7.
            p.edge(g.m(3, 1), g.m(1, q + 1), 9);
            p.edge(g.m(2, 1), g.m(4, 1), 2);
            p.edge(g.m(5, 1), g.m(6, 1), 1);
            note(trace, "small", "t = 9, c = 1 (mod 9) family");
            return finish_grid(g, p, 9, std::nullopt, a, b, c, "small-t family");
        }
        if (t == 9 && c % 9 == 3 && c >= 12) {
            // v = 18k + 11: q = 2k + 1, r = 2.
            p.edge(g.m(7, 1), g.m(9, q), 9);
            p.edge(g.m(3, 1), g.m(4, 1), 1);
            p.edge(g.m(6, 1), g.m(8, 1), 2);
            note(trace, "small", "t = 9, c = 3 (mod 9) family");
            return finish_grid(g, p, 9, std::nullopt, a, b, c, "small-t family");
        }
    }

    // The handful of classes with no construction: settle by search.
    LengthList list = list_12t(a, b, t, c);
    FeasibilityVerdict fv = check_condition(list);
    if (!fv.feasible) throw infeasible_error(fv);
    note(trace, "small", "no fixed family; exhaustive backtracking");
    SearchOptions opts;
    opts.mode = Mode::Cyclic;
    SearchResult sr = search_realization(list, opts);
    if (sr.status != SearchStatus::Found)
        throw internal_error("no realization exists for " + list.to_string() +
                             " although the feasibility condition holds");
    Realization out;
    out.factor = *sr.factor;
    out.kind = Kind::Cyclic;
    out.list = list;
    return out;
}

// ---------------------------------------------------------------------------
// dispatcher

Realization realize_12t(long long a, long long b, int t, long long c, Trace* trace) {
    check_common(a, b, t, c);
    const long long n = a + b + c;
    if (t > n) throw invalid_input("length exceeds the cyclic range");
    FeasibilityVerdict fv = check_condition(list_12t(a, b, t, c));
    if (!fv.feasible) throw infeasible_error(fv);

    using Method = Realization (*)(long long, long long, int, long long, Trace*);
    struct Entry {
        const char* name;
        Method fn;
    };
    static constexpr Entry chain[] = {
        {"composition", &realize_12t_big},     {"shared-divisor grid", &realize_12t_shared},
        {"coprime grid", &realize_12t_coprime}, {"pattern family", &realize_12t_pattern},
        {"small-t", &realize_12t_small},
    };
    for (const Entry& e : chain) {
        try {
            Realization out = e.fn(a, b, t, c, trace);
            if (out.kind != Kind::Cyclic) {
                // Every length is <= n here, so the word reads cyclically.
                out.kind = Kind::Cyclic;
                auto check = validate(out.factor, out.list, Mode::Cyclic);
                if (!check.ok)
                    throw internal_error("cyclic reading failed: " + check.reason);
            }
            return out;
        } catch (const precondition_violation& ex) {
            note(trace, "declined", std::string(e.name) + ": " + ex.what());
        }
    }
    throw precondition_violation("no three-length construction covers this instance");
}

}  // namespace mpp
