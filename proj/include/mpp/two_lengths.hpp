#pragma once
//
// Cyclic realizations of two-length lists {x^a, y^b} on K_v, v = 2(a+b)+1.
//
// Strategy: after the trivial necessary check gcd(x, y, v) = 1, either fold
// one of the two lengths to 1 by a unit multiplication and fall back on the
// {1^*, z^*} block construction, or, when the longer length shares a
// divisor d with v and a is small enough, lay K_v out on the d x v/d grid
// stepping by x down columns and by y along rows: a scheduled set of
// x-edges uses up column cells so that every row's leftovers pair into
// adjacent y-edges (see grid.hpp).

#include "mpp/core.hpp"
#include "mpp/grid.hpp"

namespace mpp {

// Cyclic realization of {x^a, y^b}; throws infeasible_error when the
// divisor condition fails, invalid_input on malformed parameters.
Realization realize_two(int x, long long a, int y, long long b, Trace* trace = nullptr);

}  // namespace mpp
