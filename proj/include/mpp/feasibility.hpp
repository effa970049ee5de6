#pragma once
//
// The divisor-counting necessary condition for cyclic realizability.
//
// For a length list L with |L| = n on K_v, v = 2n+1: if d | v then the
// multiples of d among the lengths span edges inside the d-residue classes,
// and each class of size v/d can host at most (v/d - 1)/2 disjoint such
// edges.  Hence the condition
//
//     for every divisor d of v:   #{ l in L : d | l }  <=  (v - d) / 2.
//
// d = 1 is vacuous (n <= (v-1)/2 holds with equality), d = v never occurs
// among lengths <= n.  The interesting divisors are the proper ones.
// Sufficiency of the condition is the open conjecture this tool explores;
// the oracle-backed sweep (oracle.hpp) tests it exhaustively per v.

#include <vector>

#include "mpp/core.hpp"

namespace mpp {

// All positive divisors of v, ascending.
std::vector<int> divisors(int v);

struct FeasibilityVerdict {
    bool feasible = true;
    // When infeasible: the smallest violating divisor and the two sides of
    // the failed comparison.
    int divisor = 0;
    long long multiples = 0;
    long long bound = 0;
};

std::string describe(const FeasibilityVerdict& fv);

// Raised by solvers when the requested list provably fails the condition
// (CLI exit 1).
struct infeasible_error : std::runtime_error {
    FeasibilityVerdict verdict;
    explicit infeasible_error(const FeasibilityVerdict& fv)
        : std::runtime_error(describe(fv)), verdict(fv) {}
};

// Checks the condition against v = 2|L|+1, reporting the smallest violating
// divisor.  Also rejects lists outside cyclic range (max length > n) via
// invalid_input, since cyclic lengths cannot exceed n.
FeasibilityVerdict check_condition(const LengthList& list);

// All violating divisors (empty means feasible); same range check.
std::vector<FeasibilityVerdict> check_condition_all(const LengthList& list);

}  // namespace mpp
