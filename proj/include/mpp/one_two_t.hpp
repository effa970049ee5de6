#pragma once
//
// Realizations of three-length lists {1^a, 2^b, t^c}.
//
// Five methods, tried in order by realize_12t:
//
//   big      a+b >= floor((t-1)/2): write c = qt + r and compose q copies
//            of p{t^t} with one hand-built inner word holding the r
//            leftover t's (plus as many 1s/2s as it needs) and a {1^*,2^*}
//            block for the rest.  Pure sequence composition, so it scales
//            to arbitrarily large v; output is a linear-grade realization.
//
//   shared   d = gcd(t, v) > 1: on the alternating d x v/d grid, embed a
//            {1,2}-block in column 1 and schedule the remaining 1- and
//            2-edges down columns; rows pair off into t-edges.
//
//   coprime  gcd(t, v) = 1: on the ragged t x (q+1) grid (v = qt + r),
//            place one or three translated {1,2}-blocks and at most one
//            patch edge; rows pair off into t-edges.
//
//   pattern  two hand-built t = 19 families (a = b = 1, c = 4 or 9 mod 19)
//            that the general methods miss.
//
//   small    t <= 11: fixed ragged-grid families for t = 8, 9 and the
//            exhaustive search for the few remaining classes of t = 10, 11.
//
// Every method throws precondition_violation when the instance is outside
// its envelope and validates its factor before returning.

#include "mpp/core.hpp"
#include "mpp/grid.hpp"

namespace mpp {

Realization realize_12t_big(long long a, long long b, int t, long long c, Trace* trace = nullptr);
Realization realize_12t_shared(long long a, long long b, int t, long long c, Trace* trace = nullptr);
Realization realize_12t_coprime(long long a, long long b, int t, long long c, Trace* trace = nullptr);
Realization realize_12t_pattern(long long a, long long b, int t, long long c, Trace* trace = nullptr);
Realization realize_12t_small(long long a, long long b, int t, long long c, Trace* trace = nullptr);

// The constructive chain (big, shared, coprime, pattern, small); cyclic
// output.  precondition_violation if no method's envelope fits.
Realization realize_12t(long long a, long long b, int t, long long c, Trace* trace = nullptr);

// Exposed for tests: the big method's inner word (the piece holding the
// c mod t leftover t's) plus the 1/2-counts it consumes and whether it
// precedes the {1,2}-leftover block in the composition.
struct BigParts {
    std::vector<int> inner;
    long long ones_used = 0;
    long long twos_used = 0;
    bool inner_first = false;
};
BigParts big_parts(long long a, long long b, int t, long long r);

}  // namespace mpp
