#pragma once
//
// Vertex grids for the arithmetic constructions.
//
// The grid solvers lay the vertices of K_v out in a small matrix whose rows
// step by one designated length and whose column-adjacent cells differ by
// another; short edges are then placed by explicit schedules and the long
// edges fall out by pairing the leftover cells of each row.  Three layouts:
//
//   xy          d2 x v/d2,  m(i,j) = (i-1)x + (j-1)y   (mod v), d2 = gcd(v,y)
//   alternating d  x v/d,   m(i,j) = (j-1)t + row permutation of i so that
//               column-adjacent cells differ by 2,1,2,1,... down the column
//               (d = gcd(t,v); every cell value taken mod v)
//   ragged      t  x (q+1), m(i,j) = (i-1) + (j-1)t, v = qt + r with the
//               last column only present for rows 1..r (no wraparound)
//
// All cells are pairwise distinct; xy/alternating enumerate all of 0..v-1,
// ragged too (it is just 0..v-1 written column-major in steps of t).

#include <optional>
#include <string>
#include <vector>

#include "mpp/core.hpp"

namespace mpp {

struct VertexGrid {
    int v = 0, rows = 0, cols = 0;
    std::vector<int> cells;   // row-major, -1 where absent (ragged layout)
    std::string layout;

    bool present(int i0, int j0) const {
        return i0 >= 0 && i0 < rows && j0 >= 0 && j0 < cols &&
               cells[static_cast<size_t>(i0) * cols + j0] >= 0;
    }
    int at(int i0, int j0) const;     // 0-indexed, throws on absent cells
    int m(int i1, int j1) const { return at(i1 - 1, j1 - 1); }  // 1-indexed
    std::string render() const;       // aligned text matrix (debug output)
};

VertexGrid build_xy_grid(int v, int x, int y, int d2);
VertexGrid build_alternating_grid(int v, int t, int d);
VertexGrid build_ragged_grid(int v, int t);

// Records edges while asserting that every vertex is used at most once and
// that each edge has the cyclic length the schedule promised.  Violations
// are internal_error: the solvers check their envelopes up front.
class Placer {
  public:
    explicit Placer(int v) : v_(v), used_(v, 0) {}
    void take(int u);                       // mark used without an edge
    void edge(int a, int b, int want_len);  // place + length check
    // Place a translated block: its edges are taken, its isolated is not.
    void place(const NearOneFactor& block);
    bool used(int u) const;
    const std::vector<Edge>& edges() const { return edges_; }
    int v() const { return v_; }

  private:
    int v_;
    std::vector<char> used_;
    std::vector<Edge> edges_;
};

// Pair the unused cells of every row into column-adjacent edges of cyclic
// length `length`.  Requires the leftover cells to form even-sized maximal
// runs except for a single odd run overall; the cell left out of that run
// is the isolated vertex — its first cell by default, or `preferred`, which
// must sit in the odd run with an even number of cells on each side.
// Returns the isolated vertex.
int finish_rows(const VertexGrid& g, Placer& p, int length,
                std::optional<int> preferred = std::nullopt);

}  // namespace mpp
