#pragma once
//
// Core model for near 1-factors of complete graphs K_v (v = 2n+1 odd) and
// their edge-length lists.
//
// Vertices are 0..v-1.  A near 1-factor is a set of n pairwise disjoint
// edges plus one isolated vertex.  The cyclic length of an edge [x,y] is
//     ell(x,y) = min(|x-y|, v - |x-y|)  in 1..n,
// and the plain difference is delta(x,y) = |x-y| in 1..v-1.  A factor F is
// a cyclic realization of a length multiset L when ell(F) = L, and a linear
// realization when delta(F) = L (which forces every difference <= 2n, i.e.
// the edge [0, v-1] is unused as a "wraparound").
//
// Linear realizations are graded by where the isolated vertex sits:
//   perfect        isolated = v-1   (= 2n)
//   almost perfect isolated = v-2   (= 2n-1)
//   linear         anything else
// Perfect/almost-perfect words concatenate, which is what the block
// constructions in blocks.hpp exploit.
//
// A linear realization is interchangeable with its slot word: a sequence of
// v slots where each edge [i,j] writes j-i into slots i and j and the
// isolated vertex's slot holds 0.  (These are the k-extended Skolem-type
// sequences; see to_sequence / from_sequence.)

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpp {

// ---------------------------------------------------------------------------
// errors

// Malformed or out-of-domain input (CLI exit 2).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A solver was invoked outside its precondition envelope; the automatic
// dispatcher treats this as "try the next method" (forced methods exit 2).
struct precondition_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A construction produced something that failed validation: always a bug
// (CLI exit 3).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// length lists

// Multiset of positive edge lengths, canonically stored as length -> count
// with counts >= 1, ascending by length.  For a list with n entries the
// ambient complete graph is K_{2n+1}.
class LengthList {
  public:
    LengthList() = default;
    explicit LengthList(const std::map<int, long long>& counts);
    explicit LengthList(const std::vector<int>& lengths);

    // Parses the CLI grammar "1^2,4^3,6" (length[^multiplicity], comma
    // separated, multiplicities >= 1).  Throws invalid_input on junk.
    static LengthList parse(const std::string& text);

    long long n() const { return n_; }       // multiset size
    long long v() const { return 2 * n_ + 1; }
    bool empty() const { return n_ == 0; }

    const std::map<int, long long>& counts() const { return counts_; }
    long long count(int length) const;
    int max_length() const;                   // 0 when empty
    std::vector<int> distinct() const;        // ascending underlying set

    // #entries divisible by d (the quantity bounded by the feasibility
    // condition).
    long long count_multiples(int d) const;

    // True when every length is <= n, i.e. the list can be read cyclically.
    bool cyclic_range() const;
    // True when every length is <= 2n (any linear-realizable list).
    bool linear_range() const;

    LengthList merged(const LengthList& other) const;

    std::string to_string() const;            // canonical grammar form

    bool operator==(const LengthList& other) const { return counts_ == other.counts_; }
    bool operator!=(const LengthList& other) const { return !(*this == other); }

  private:
    std::map<int, long long> counts_;
    long long n_ = 0;
};

// ---------------------------------------------------------------------------
// factors

// Undirected edge, kept normalized lo < hi.
struct Edge {
    int lo = 0, hi = 0;
    Edge() = default;
    Edge(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {
        if (a == b) throw invalid_input("edge endpoints must differ");
    }
    bool operator==(const Edge& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const Edge& o) const {
        return lo != o.lo ? lo < o.lo : hi < o.hi;
    }
};

// Plain data carrier; validity (disjointness, vertex cover, ranges) is
// checked by validate(), not enforced at construction, because intermediate
// objects (e.g. translated blocks being placed into a larger graph) pass
// through states where the invariants intentionally do not hold.
struct NearOneFactor {
    int v = 1;                  // ambient vertex count, odd
    std::vector<Edge> edges;    // the n matching edges
    int isolated = 0;           // the unmatched vertex

    void sort_edges();          // canonical order (by lo endpoint)
    bool operator==(const NearOneFactor& o) const {
        return v == o.v && edges == o.edges && isolated == o.isolated;
    }
};

// One-factor of K_{2n}: what is left of a perfect linear realization after
// dropping its isolated vertex 2n.
struct OneFactor {
    int vertex_count = 0;       // even
    std::vector<Edge> edges;
};

enum class Kind { Cyclic, Linear, AlmostPerfect, Perfect };

const char* kind_name(Kind k);

// Classify a linear realization by its isolated vertex (pure function).
Kind classify_kind(int isolated, int v);

// A factor together with how its lengths are to be read.  For Kind::Cyclic
// the list is ell(F); for the three linear kinds it is delta(F).
struct Realization {
    NearOneFactor factor;
    Kind kind = Kind::Cyclic;
    LengthList list;
};

// Slot word of a linear realization plus the induced pairing.
struct SlotSequence {
    std::vector<int> slots;                   // size v, one zero
    std::vector<std::pair<int, int>> pairs;   // (i, j) with slots[i]=slots[j]=j-i
    int zero_slot = 0;
};

// Human-readable record of which constructions produced a realization.
struct TraceStep {
    std::string op;
    std::string detail;
};
using Trace = std::vector<TraceStep>;

// ---------------------------------------------------------------------------
// operations

// Cyclic edge length; throws invalid_input when x == y or out of 0..v-1.
int edge_length(int x, int y, int v);

// Image of a length under vertex multiplication by y (mod v):
// x -> min(xy mod v, v - xy mod v).
int map_length(int x, int y, int v);

LengthList length_multiset(const NearOneFactor& f);   // ell(F), cyclic
LengthList diff_multiset(const NearOneFactor& f);     // delta(F), plain

enum class Mode { Cyclic, Linear };

// Structured verdict (no exceptions: the search oracle calls this in hot
// loops).  `kind` is filled on success: the linear grade, or Kind::Cyclic
// in cyclic mode.
struct ValidationResult {
    bool ok = false;
    std::string reason;         // first violated property when !ok
    std::optional<Kind> kind;
};

ValidationResult validate(const NearOneFactor& f, const LengthList& want, Mode mode);

// F + g: shift every vertex by g, no modular wrap.  The result lives on
// {g, ..., v-1+g}; it is a placement aid, not a standalone valid factor.
NearOneFactor translate(const NearOneFactor& f, int g);

// y * F: multiply vertices mod v.  Requires gcd(y, v) = 1 (invalid_input
// otherwise).  Maps a cyclic realization of L to one of map_length(L, y).
NearOneFactor multiply(const NearOneFactor& f, int y);

// Linear realization <-> slot word.  to_sequence rejects Kind::Cyclic
// input; from_sequence validates the word (one zero, greedy left-to-right
// pairing must succeed) and classifies the kind from the zero slot.
SlotSequence to_sequence(const Realization& r);
Realization from_sequence(const std::vector<int>& slots);

// Perfect linear realization -> 1-factor of K_{2n} (drops isolated 2n).
OneFactor perfect_to_one_factor(const Realization& r);

}  // namespace mpp
