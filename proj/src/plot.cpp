#include "tatekit/plot.hpp"

#include <sstream>

#include "tatekit/errors.hpp"

namespace tatekit::plot {

namespace {

Grid make(int n, const View& v, const std::string& title, const std::function<Cell(const Exponent&)>& at) {
    if (n < 2) throw ArityUnsupported("2-D plots need arity at least 2; use the number line");
    if (v.ax < 1 || v.ax > n || v.ay < 1 || v.ay > n || v.ax == v.ay)
        throw InvalidSpec("plot axes must be two distinct axes in 1.." + std::to_string(n));
    if (v.lo >= v.hi) throw InvalidSpec("empty plot box");
    Exponent base = v.fixed.empty() ? Exponent(n, 0) : v.fixed;
    if (static_cast<int>(base.size()) != n) throw ArityMismatch("fixed coordinates need " + std::to_string(n) + " entries");
    Grid g;
    g.x0 = g.y0 = v.lo;
    g.x1 = g.y1 = v.hi;
    g.ax = v.ax;
    g.ay = v.ay;
    g.title = title;
    for (std::int64_t y = v.lo; y < v.hi; ++y)
        for (std::int64_t x = v.lo; x < v.hi; ++x) {
            Exponent e = base;
            e[v.ax - 1] = x;
            e[v.ay - 1] = y;
            g.cells.push_back(at(e));
        }
    return g;
}

}  // namespace

Grid grid_of(const TruncatedSeries& s, const View& v) {
    return make(s.n(), v, "support of " + s.to_string(), [&](const Exponent& e) {
        switch (s.status(e)) {
            case PointStatus::Unknown:
                return Cell::Hatched;
            case PointStatus::Known:
                return s.coeff(e).is_zero() ? Cell::Blank : Cell::Shaded;
            default:
                return Cell::Blank;
        }
    });
}

Grid grid_of(const MonomialSubspace& s, const View& v) {
    return make(s.n(), v, s.to_string(),
                [&](const Exponent& e) { return s.contains_point(e) ? Cell::Shaded : Cell::Blank; });
}

Grid grid_of(const OpenProfile& p, const View& v) {
    return make(2, v, "open profile, FULL from t2^" + std::to_string(p.threshold),
                [&](const Exponent& e) { return p.contains(e) ? Cell::Shaded : Cell::Blank; });
}

Grid grid_of_points(const std::set<Exponent>& pts, const View& v, const std::string& title) {
    int n = pts.empty() ? 2 : static_cast<int>(pts.begin()->size());
    return make(n, v, title, [&](const Exponent& e) { return pts.count(e) ? Cell::Shaded : Cell::Blank; });
}

static char glyph(Cell c) { return c == Cell::Shaded ? '#' : c == Cell::Hatched ? '/' : '.'; }

std::string ascii(const Grid& g) {
    std::ostringstream os;
    if (!g.title.empty()) os << g.title << "\n";
    for (std::int64_t y = g.y1 - 1; y >= g.y0; --y) {
        std::string label = std::to_string(y);
        os << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ') << label << " ";
        for (std::int64_t x = g.x0; x < g.x1; ++x) os << glyph(g.at(x, y));
        os << "\n";
    }
    os << "     t" << g.ax << " from " << g.x0 << " to " << g.x1 - 1 << ", rows t" << g.ay << "\n";
    return os.str();
}

std::string svg(const Grid& g) {
    const int s = 20, pad = 30;
    const std::int64_t w = g.x1 - g.x0, h = g.y1 - g.y0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * s + 2 * pad << "\" height=\"" << h * s + 2 * pad
       << "\">\n";
    os << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
          "<path d=\"M0,6 L6,0\" stroke=\"#888\" stroke-width=\"1\"/></pattern></defs>\n";
    if (!g.title.empty()) os << "<title>" << g.title << "</title>\n";
    for (std::int64_t y = g.y0; y < g.y1; ++y)
        for (std::int64_t x = g.x0; x < g.x1; ++x) {
            Cell c = g.at(x, y);
            const char* fill = c == Cell::Shaded ? "#4a6fa5" : c == Cell::Hatched ? "url(#hatch)" : "white";
            os << "<rect x=\"" << pad + (x - g.x0) * s << "\" y=\"" << pad + (g.y1 - 1 - y) * s << "\" width=\"" << s
               << "\" height=\"" << s << "\" fill=\"" << fill << "\" stroke=\"#ccc\"/>\n";
        }
    // Axes through the origin when it is inside the box.
    if (g.x0 <= 0 && 0 < g.x1)
        os << "<line x1=\"" << pad + (0 - g.x0) * s << "\" y1=\"" << pad << "\" x2=\"" << pad + (0 - g.x0) * s
           << "\" y2=\"" << pad + h * s << "\" stroke=\"black\"/>\n";
    if (g.y0 <= 0 && 0 < g.y1)
        os << "<line x1=\"" << pad << "\" y1=\"" << pad + (g.y1 - 0) * s << "\" x2=\"" << pad + w * s << "\" y2=\""
           << pad + (g.y1 - 0) * s << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << pad + w * s / 2 << "\" y=\"" << h * s + 2 * pad - 8 << "\" font-size=\"12\">t" << g.ax
       << "</text>\n";
    os << "<text x=\"6\" y=\"" << pad + h * s / 2 << "\" font-size=\"12\">t" << g.ay << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string number_line(const std::function<Cell(std::int64_t)>& at, std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    for (std::int64_t x = lo; x < hi; ++x) os << glyph(at(x));
    os << "\n t1 from " << lo << " to " << hi - 1 << "\n";
    return os.str();
}

}  // namespace tatekit::plot
