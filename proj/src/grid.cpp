#include "mpp/grid.hpp"

#include <algorithm>
#include <numeric>

namespace mpp {

int VertexGrid::at(int i0, int j0) const {
    if (!present(i0, j0))
        throw internal_error("grid cell (" + std::to_string(i0 + 1) + "," +
                             std::to_string(j0 + 1) + ") absent in " + layout + " layout");
    return cells[static_cast<size_t>(i0) * cols + j0];
}

std::string VertexGrid::render() const {
    int width = 1;
    for (int c : cells) width = std::max(width, static_cast<int>(std::to_string(c).size()));
    std::string out;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::string s = present(i, j) ? std::to_string(at(i, j)) : std::string(".");
            out += std::string(width - s.size() + (j ? 1 : 0), ' ') + s;
        }
        out += '\n';
    }
    return out;
}

namespace {

void check_distinct_cover(const VertexGrid& g, bool full_cover) {
    std::vector<char> seen(g.v, 0);
    int count = 0;
    for (int c : g.cells) {
        if (c < 0) continue;
        if (c >= g.v) throw internal_error("grid cell out of range");
        if (seen[c]) throw internal_error("grid cell repeated");
        seen[c] = 1;
        ++count;
    }
    if (full_cover && count != g.v) throw internal_error("grid does not cover 0..v-1");
}

}  // namespace

VertexGrid build_xy_grid(int v, int x, int y, int d2) {
    if (v <= 0 || v % 2 == 0) throw invalid_input("v must be odd and positive");
    if (x <= 0 || y <= 0 || x >= v || y >= v) throw invalid_input("steps out of range");
    if (d2 != std::gcd(v, y) || d2 <= 1)
        throw invalid_input("d2 must equal gcd(v, y) and exceed 1");
    VertexGrid g;
    g.v = v;
    g.rows = d2;
    g.cols = v / d2;
    g.layout = "xy";
    g.cells.resize(static_cast<size_t>(g.rows) * g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j)
            g.cells[static_cast<size_t>(i) * g.cols + j] =
                static_cast<int>((static_cast<long long>(i) * x + static_cast<long long>(j) * y) % v);
    check_distinct_cover(g, true);
    return g;
}

VertexGrid build_alternating_grid(int v, int t, int d) {
    if (v <= 0 || v % 2 == 0) throw invalid_input("v must be odd and positive");
    if (d != std::gcd(t, v) || d <= 1) throw invalid_input("d must equal gcd(t, v) and exceed 1");
    VertexGrid g;
    g.v = v;
    g.rows = d;
    g.cols = v / d;
    g.layout = "alternating";
    g.cells.resize(static_cast<size_t>(g.rows) * g.cols);
    // Row permutation (1-indexed i): i = 0,1 mod 4 -> i-1;  i = 2 mod 4 -> i;
    // i = 3 mod 4 -> i-2.  Down a column the first coordinates then read
    // 0, 2, 1, 3, 4, 6, 5, 7, ... : consecutive rows differ by 2, 1, 2, 1, ...
    for (int i1 = 1; i1 <= d; ++i1) {
        int base;
        switch (i1 % 4) {
            case 0:
            case 1: base = i1 - 1; break;
            case 2: base = i1; break;
            default: base = i1 - 2; break;
        }
        for (int j1 = 1; j1 <= g.cols; ++j1)
            g.cells[static_cast<size_t>(i1 - 1) * g.cols + (j1 - 1)] =
                static_cast<int>((base + static_cast<long long>(j1 - 1) * t) % v);
    }
    check_distinct_cover(g, true);
    return g;
}

VertexGrid build_ragged_grid(int v, int t) {
    if (v <= 0 || v % 2 == 0) throw invalid_input("v must be odd and positive");
    if (t <= 0 || t >= v) throw invalid_input("t out of range");
    if (v % t == 0) throw invalid_input("ragged layout requires t not dividing v");
    int q = v / t, r = v % t;
    VertexGrid g;
    g.v = v;
    g.rows = t;
    g.cols = q + 1;
    g.layout = "ragged";
    g.cells.assign(static_cast<size_t>(g.rows) * g.cols, -1);
    for (int i1 = 1; i1 <= t; ++i1)
        for (int j1 = 1; j1 <= q + (i1 <= r ? 1 : 0); ++j1)
            g.cells[static_cast<size_t>(i1 - 1) * g.cols + (j1 - 1)] = (i1 - 1) + (j1 - 1) * t;
    check_distinct_cover(g, true);
    return g;
}

// ---------------------------------------------------------------------------

void Placer::take(int u) {
    if (u < 0 || u >= v_) throw internal_error("vertex " + std::to_string(u) + " out of range");
    if (used_[u]) throw internal_error("vertex " + std::to_string(u) + " placed twice");
    used_[u] = 1;
}

void Placer::edge(int a, int b, int want_len) {
    int len = edge_length(a, b, v_);
    if (len != want_len)
        throw internal_error("edge [" + std::to_string(a) + "," + std::to_string(b) +
                             "] has length " + std::to_string(len) + ", schedule wants " +
                             std::to_string(want_len));
    take(a);
    take(b);
    edges_.emplace_back(a, b);
}

void Placer::place(const NearOneFactor& block) {
    for (const Edge& e : block.edges) {
        take(e.lo);
        take(e.hi);
        edges_.emplace_back(e.lo, e.hi);
    }
}

bool Placer::used(int u) const {
    if (u < 0 || u >= v_) throw internal_error("vertex out of range");
    return used_[u] != 0;
}

// ---------------------------------------------------------------------------

int finish_rows(const VertexGrid& g, Placer& p, int length, std::optional<int> preferred) {
    struct Run {
        std::vector<int> cells;
    };
    std::vector<Run> odd_runs;
    std::vector<Run> even_runs;
    for (int i = 0; i < g.rows; ++i) {
        Run run;
        auto flush = [&]() {
            if (run.cells.empty()) return;
            (run.cells.size() % 2 ? odd_runs : even_runs).push_back(std::move(run));
            run.cells.clear();
        };
        for (int j = 0; j < g.cols; ++j) {
            if (!g.present(i, j) || p.used(g.at(i, j))) {
                flush();
                continue;
            }
            run.cells.push_back(g.at(i, j));
        }
        flush();
    }
    if (odd_runs.size() != 1)
        throw internal_error("leftover cells form " + std::to_string(odd_runs.size()) +
                             " odd runs, expected exactly 1");

    // Adjacent cells only: pairing across the removed cell would double the
    // edge length (Placer::edge would reject it).
    auto pair_span = [&](const std::vector<int>& cells, size_t from, size_t to) {
        for (size_t k = from; k + 1 < to; k += 2) p.edge(cells[k], cells[k + 1], length);
    };

    const auto& odd = odd_runs.front().cells;
    size_t skip = 0;
    if (preferred) {
        auto it = std::find(odd.begin(), odd.end(), *preferred);
        if (it == odd.end())
            throw internal_error("preferred isolated vertex not in the odd run");
        skip = static_cast<size_t>(it - odd.begin());
        if (skip % 2 != 0)
            throw internal_error("preferred isolated vertex splits its run unevenly");
    }
    int isolated = odd[skip];
    pair_span(odd, 0, skip);
    pair_span(odd, skip + 1, odd.size());
    for (const auto& run : even_runs) pair_span(run.cells, 0, run.cells.size());
    p.take(isolated);
    return isolated;
}

}  // namespace mpp
