#pragma once
//
// Top-level dispatcher: decide feasibility, pick the construction the list's
// shape calls for, and fall back to exhaustive search for shapes no
// construction covers.  The case analysis on the underlying set S of the
// list L:
//
//   |S| = 1        -> realize_constant      (multiplied all-ones factor)
//   S = {1,..,n}   -> patterned_starter     (|S| = n forces this, as all
//                                            lengths are <= n)
//   |S| = 2        -> realize_two           (grid or multiplier route)
//   S = {1, 2, t}  -> realize_12t           (composition / grids / patterns)
//   otherwise      -> search_realization    (verdict: supported by search
//                                            only, not by a construction)
//
// Every returned realization has been validated against L.

#include <cstdint>
#include <optional>
#include <string>

#include "mpp/core.hpp"
#include "mpp/feasibility.hpp"

namespace mpp {

enum class Method {
    Automatic,
    Constant,
    Starter,
    Two,
    Big,
    Shared,
    Coprime,
    Pattern,
    Small,
    Oracle,
};

const char* method_name(Method m);
Method parse_method(const std::string& name);  // invalid_input on junk

enum class Verdict {
    Realized,                  // a construction delivered the factor
    UnsupportedConstructively, // no construction applies; the search found it
    Infeasible,                // condition violated (or search exhausted)
    Indeterminate,             // search hit the node budget
};

const char* verdict_name(Verdict w);

struct SolveOptions {
    Method method = Method::Automatic;
    // Node budget for search fallbacks; unlimited when absent.
    std::optional<std::uint64_t> node_limit;
};

struct SolveResult {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Realization> realization;    // present for the two realized verdicts
    std::optional<FeasibilityVerdict> feasibility;  // violating divisor when infeasible
    Trace trace;
    std::uint64_t search_nodes = 0;
};

// Throws invalid_input for malformed lists and precondition_violation when a
// forced method (anything but Automatic) declines the list; never silently
// substitutes another method for a forced one.
SolveResult solve(const LengthList& list, const SolveOptions& opts = {});

}  // namespace mpp
