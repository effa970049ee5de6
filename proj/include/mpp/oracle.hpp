#pragma once
//
// Exhaustive backtracking oracle, list enumeration, and conjecture sweeps.
//
// The oracle decides, independently of every construction in the solvers,
// whether a length list admits a (cyclic or linear) realization.  It is the
// ground truth the constructive code is tested against.
//
// Search shape: branch on the least uncovered vertex u.  Either u is the
// isolated vertex (allowed once), or it is matched by an edge of one of the
// remaining lengths d — with partner (u+d) mod v or (u-d+v) mod v in cyclic
// mode, or u+d in linear mode (u-d is below u, hence already covered).
// Branch order is deterministic: lengths ascending, +d partner before -d,
// isolation last; so the first factor found is a pure function of the input.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpp/core.hpp"
#include "mpp/feasibility.hpp"

namespace mpp {

struct SearchOptions {
    Mode mode = Mode::Cyclic;
    // Pin the isolated vertex (e.g. v-1 to demand a perfect realization).
    std::optional<int> required_isolated;
    // In cyclic mode solutions are closed under translation, so demanding
    // isolated = 0 preserves existence while shrinking the tree v-fold.
    // Off by default; never combined with required_isolated.
    bool normalize_translation = false;
    // Give up (status Indeterminate) after this many nodes.
    std::optional<std::uint64_t> node_limit;
};

enum class SearchStatus { Found, Exhausted, Indeterminate };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<NearOneFactor> factor;   // set iff Found
    std::uint64_t nodes = 0;
};

// Complete and deterministic; validates any factor before returning it.
SearchResult search_realization(const LengthList& list, const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// enumeration of candidate lists

// Streams all multisets of size n over {1..n} in lexicographic order
// (exactly C(2n-1, n) of them).
class ListEnumerator {
  public:
    explicit ListEnumerator(int n);
    std::optional<LengthList> next();
    static std::uint64_t total(int n);   // C(2n-1, n)

  private:
    int n_;
    bool done_ = false;
    std::vector<int> current_;           // nondecreasing lengths
};

// ---------------------------------------------------------------------------
// sweeps

struct SweepOptions {
    int workers = 0;                 // 0: MPP_WORKERS env var, else hw threads
    bool verify_infeasible = false;  // exhaust (PP)-violating lists (v <= 15)
    std::optional<std::uint64_t> node_limit;
    bool normalize_translation = false;
};

struct SweepRow {
    int v = 0;
    std::uint64_t lists = 0;        // = C(2n-1, n)
    std::uint64_t feasible = 0;     // passed the divisor condition
    std::uint64_t realized = 0;     // feasible and realized by the oracle
    std::uint64_t violating = 0;    // failed the divisor condition
    std::uint64_t infeasible_verified = 0;  // violating and exhausted with no factor
    std::uint64_t indeterminate = 0;        // node-limited searches
    double wall_ms = 0.0;
    // Lists contradicting the conjecture or the necessary condition
    // (expected empty): feasible-but-unrealizable or violating-but-realized.
    std::vector<std::string> counterexamples;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    bool ok() const;   // no counterexamples, no indeterminate rows
};

// Runs the conjecture check for every odd v in [3, v_max]: every list
// passing the divisor condition must be realized by the oracle.  Whole
// lists are distributed to workers; results are deterministic counts.
SweepReport sweep(int v_max, const SweepOptions& opts = {});

int default_workers();   // MPP_WORKERS env var or hardware concurrency

}  // namespace mpp
