#include "mpp/two_lengths.hpp"

#include <numeric>
#include <utility>

#include "mpp/blocks.hpp"
#include "mpp/feasibility.hpp"

namespace mpp {

namespace {

void note(Trace* trace, std::string op, std::string detail) {
    if (trace) trace->push_back({std::move(op), std::move(detail)});
}

long long modinv(long long m, long long v) {
    // Extended Euclid; gcd(m, v) = 1 is the caller's responsibility.
    long long old_r = m, r = v, old_s = 1, s = 0;
    while (r != 0) {
        long long qt = old_r / r;
        old_r = std::exchange(r, old_r - qt * r);
        old_s = std::exchange(s, old_s - qt * s);
    }
    if (old_r != 1) throw internal_error("modular inverse of non-unit");
    return ((old_s % v) + v) % v;
}

// Fold both lengths to {1, z} by multiplying with the inverse of m (one of
// x, y), realize {1^?, z^?} linearly (all differences <= n, so the factor
// reads cyclically as-is), and multiply back.
Realization multiply_route(int x, long long a, int y, long long b, int m, Trace* trace) {
    long long v = 2 * (a + b) + 1;
    long long m_inv = modinv(m, v);
    int zx = map_length(x, static_cast<int>(m_inv), static_cast<int>(v));
    int zy = map_length(y, static_cast<int>(m_inv), static_cast<int>(v));
    Realization folded;
    if (zx == zy) {
        // Cannot happen for x < y <= n (it would need x + y = v), but the
        // constant solver handles it if it ever did.
        folded = realize_constant(zx, a + b);
    } else if (zx == 1) {
        folded = realize_1y(a, zy, b);
        note(trace, "fold", "multiplied by " + std::to_string(m_inv) + " = " +
                                std::to_string(m) + "^-1; realized 1^" + std::to_string(a) +
                                "," + std::to_string(zy) + "^" + std::to_string(b));
    } else if (zy == 1) {
        folded = realize_1y(b, zx, a);
        note(trace, "fold", "multiplied by " + std::to_string(m_inv) + " = " +
                                std::to_string(m) + "^-1; realized 1^" + std::to_string(b) +
                                "," + std::to_string(zx) + "^" + std::to_string(a));
    } else {
        throw internal_error("multiplier folded neither length to 1");
    }
    Realization out;
    out.factor = multiply(folded.factor, m);
    out.kind = Kind::Cyclic;
    out.list = LengthList(std::map<int, long long>{{x, a}, {y, b}});
    return out;
}

// Grid route: cs-edges down the columns of the gcd(v, rs) x v/gcd(v, rs)
// grid, rs-edges pairing each row's leftovers.  cc/rc are the counts of
// cs/rs in the list.
Realization grid_route(int cs, long long cc, int rs, long long rc, Trace* trace) {
    long long n = cc + rc;
    int v = static_cast<int>(2 * n + 1);
    int d = std::gcd(rs, v);
    if (d <= 1) throw internal_error("grid route requires a shared divisor");
    if (2 * static_cast<long long>(d) * cc > static_cast<long long>(d - 1) * v)
        throw precondition_violation("column-length count too large for the grid route");
    if (cc < (d - 1) / 2)
        throw infeasible_error({false, d, rc, (static_cast<long long>(v) - d) / 2});

    VertexGrid g = build_xy_grid(v, cs, rs, d);
    int cols = g.cols;
    Placer p(v);

    if (static_cast<long long>(std::gcd(cs, v)) * d == v) {
        // Degenerate layout: gcd(cs,v) * gcd(rs,v) = v, so every column is a
        // closed cycle under +cs and every row a closed cycle under +rs.  The
        // generic schedule below would wrap its escape edge onto column 1.
        // Instead pair rows into bands: a two-row band holds any odd number
        // of column edges (columns 1..k, leftovers pair along both rows), and
        // the last three rows form one band holding any number 1..cols, which
        // absorbs the parity of cc and hosts the isolated vertex.
        const long long bands = (d - 3) / 2;
        long long v3 = std::max(1LL, cc - static_cast<long long>(cols) * bands);
        if (((cc - bands - v3) & 1LL) != 0) ++v3;
        if (v3 > cols || v3 > cc - bands)
            throw precondition_violation("column schedule exceeds the grid");
        long long spread = (cc - v3 - bands) / 2;  // extra edge pairs for the bands
        for (long long i = 1; i <= bands; ++i) {
            long long extra = std::min<long long>(spread, (cols - 1) / 2);
            spread -= extra;
            for (long long c = 1; c <= 1 + 2 * extra; ++c)
                p.edge(g.m(static_cast<int>(2 * i - 1), static_cast<int>(c)),
                       g.m(static_cast<int>(2 * i), static_cast<int>(c)), cs);
        }
        if (spread != 0) throw internal_error("band distribution failed");
        if (v3 % 2 == 1) {
            // Rows d-1, d take the edges; all of row d-2 is the odd run.
            for (long long c = 1; c <= v3; ++c)
                p.edge(g.m(d - 1, static_cast<int>(c)), g.m(d, static_cast<int>(c)), cs);
        } else {
            // One edge on rows (d-2, d-1) at column 1, v3 - 1 edges on rows
            // (d-1, d) at the right edge; row d-1 keeps the odd run.
            p.edge(g.m(d - 2, 1), g.m(d - 1, 1), cs);
            for (long long c = cols - (v3 - 1) + 1; c <= cols; ++c)
                p.edge(g.m(d - 1, static_cast<int>(c)), g.m(d, static_cast<int>(c)), cs);
        }
        int isolated = finish_rows(g, p, rs, std::nullopt);
        note(trace, "grid",
             "grid " + std::to_string(d) + "x" + std::to_string(cols) + ", column step " +
                 std::to_string(cs) + ", row step " + std::to_string(rs) + ", isolated " +
                 std::to_string(isolated));
        Realization out;
        out.factor.v = v;
        out.factor.edges = p.edges();
        out.factor.isolated = isolated;
        out.factor.sort_edges();
        out.kind = Kind::Cyclic;
        out.list = LengthList(std::map<int, long long>{{cs, cc}, {rs, rc}});
        return out;
    }

    // (d-1)/2 column edges in column 1; m(d,1) stays open.
    for (int i = 1; i + 1 <= d - 1; i += 2) p.edge(g.m(i, 1), g.m(i + 1, 1), cs);

    long long A = cc - (d - 1) / 2;
    std::optional<int> preferred;
    if (A % 2 == 0) {
        long long q = A / (cols - 1), rr = A % (cols - 1);
        if (2 * q + (rr > 0 ? 2 : 0) > d - 1)
            throw precondition_violation("column schedule exceeds the grid");
        for (long long i = 1; i <= q; ++i)
            for (int j = 2; j <= cols; ++j)
                p.edge(g.m(static_cast<int>(2 * i - 1), j), g.m(static_cast<int>(2 * i), j), cs);
        for (int j = 2; j <= rr + 1; ++j)
            p.edge(g.m(static_cast<int>(2 * q + 1), j), g.m(static_cast<int>(2 * q + 2), j), cs);
        preferred = g.m(d, 1);
    } else {
        // One extra column edge escapes to row 1: m(d,1) + cs is a multiple
        // of d, i.e. a row-1 cell.
        p.edge(g.m(d, 1), static_cast<int>((static_cast<long long>(g.m(d, 1)) + cs) % v), cs);
        long long A2 = A - 1;
        long long q = A2 / (cols - 1), rr = A2 % (cols - 1);
        if (2 * q + 1 + (rr > 0 ? 2 : 0) > d)
            throw precondition_violation("column schedule exceeds the grid");
        for (long long i = 1; i <= q; ++i)
            for (int j = 2; j <= cols; ++j)
                p.edge(g.m(static_cast<int>(2 * i), j), g.m(static_cast<int>(2 * i + 1), j), cs);
        for (int j = 2; j <= rr + 1; ++j)
            p.edge(g.m(static_cast<int>(2 * q + 2), j), g.m(static_cast<int>(2 * q + 3), j), cs);
    }

    int isolated = finish_rows(g, p, rs, preferred);
    note(trace, "grid",
         "grid " + std::to_string(d) + "x" + std::to_string(cols) + ", column step " +
             std::to_string(cs) + ", row step " + std::to_string(rs) + ", isolated " +
             std::to_string(isolated));

    Realization out;
    out.factor.v = v;
    out.factor.edges = p.edges();
    out.factor.isolated = isolated;
    out.factor.sort_edges();
    out.kind = Kind::Cyclic;
    out.list = LengthList(std::map<int, long long>{{cs, cc}, {rs, rc}});
    return out;
}

}  // namespace

Realization realize_two(int x, long long a, int y, long long b, Trace* trace) {
    if (x > 0 && y > 0 && x > y) return realize_two(y, b, x, a, trace);  // multisets are unordered
    if (x <= 0 || y <= 0 || x >= y) throw invalid_input("need 0 < x < y");
    if (a < 1 || b < 1) throw invalid_input("need a, b >= 1");
    long long n = a + b;
    if (y > n) throw invalid_input("length " + std::to_string(y) + " exceeds n");
    int v = static_cast<int>(2 * n + 1);

    int g3 = std::gcd(std::gcd(x, y), v);
    if (g3 > 1)
        throw infeasible_error({false, g3, n, (static_cast<long long>(v) - g3) / 2});

    int d1 = std::gcd(x, v), d2 = std::gcd(y, v);
    Realization out;
    if (d1 == 1 && d2 == 1) {
        note(trace, "two-length", "both lengths coprime with v; multiply route");
        out = multiply_route(x, a, y, b, a >= b ? x : y, trace);
    } else if (d2 > 1) {
        if (2 * static_cast<long long>(d2) * a <= static_cast<long long>(d2 - 1) * v) {
            note(trace, "two-length", "gcd(v," + std::to_string(y) + ") = " + std::to_string(d2) +
                                          "; grid route on the long length");
            out = grid_route(x, a, y, b, trace);
        } else if (d1 == 1) {
            note(trace, "two-length", "grid bound exceeded; multiply route via the short length");
            out = multiply_route(x, a, y, b, x, trace);
        } else {
            // The two bounds cannot both fail: v(d1 + d2 - d1 d2) <= d1 d2
            // holds for d1, d2 >= 3.
            note(trace, "two-length", "gcd(v," + std::to_string(x) + ") = " + std::to_string(d1) +
                                          "; grid route on the short length");
            out = grid_route(y, b, x, a, trace);
        }
    } else {
        // d2 = 1, d1 > 1: the mirrored split on the short length.
        if (2 * static_cast<long long>(d1) * b <= static_cast<long long>(d1 - 1) * v) {
            note(trace, "two-length", "gcd(v," + std::to_string(x) + ") = " + std::to_string(d1) +
                                          "; grid route on the short length");
            out = grid_route(y, b, x, a, trace);
        } else {
            note(trace, "two-length", "grid bound exceeded; multiply route via the long length");
            out = multiply_route(x, a, y, b, y, trace);
        }
    }

    auto check = validate(out.factor, out.list, Mode::Cyclic);
    if (!check.ok) throw internal_error("two-length construction invalid: " + check.reason);
    return out;
}

}  // namespace mpp
