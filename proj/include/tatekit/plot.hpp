#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tatekit/geometry.hpp"
#include "tatekit/lattice.hpp"
#include "tatekit/series.hpp"

namespace tatekit::plot {

enum class Cell { Blank, Shaded, Hatched };

// Cells over [x0, x1) x [y0, y1); x runs along axis `ax`, y along axis `ay`.
struct Grid {
    std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    int ax = 1, ay = 2;
    std::vector<Cell> cells;  // row-major from y0 upward
    std::string title;
    Cell at(std::int64_t x, std::int64_t y) const { return cells[(y - y0) * (x1 - x0) + (x - x0)]; }
};

struct View {
    std::int64_t lo = -3, hi = 4;  // box [lo, hi) on both plotted axes
    int ax = 1, ay = 2;            // 1-based plotted axes
    Exponent fixed;                // other coordinates (arity > 2); zeros if empty
};

// Shaded: known nonzero; hatched: unknown past precision; blank: certified zero.
Grid grid_of(const TruncatedSeries& s, const View& v);
// Shaded: member.
Grid grid_of(const MonomialSubspace& s, const View& v);
Grid grid_of(const OpenProfile& p, const View& v);
Grid grid_of_points(const std::set<Exponent>& pts, const View& v, const std::string& title);

// Rows printed top (largest y) first; '#', '/', '.'.
std::string ascii(const Grid& g);
std::string svg(const Grid& g);

// Arity-1 objects: one row along t1.
std::string number_line(const std::function<Cell(std::int64_t)>& at, std::int64_t lo, std::int64_t hi);

}  // namespace tatekit::plot
