#include "sturmian/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sturmian {

namespace {

struct LineShape {
    Rational value_at(long long twice_x) const {  // value at x = twice_x / 2
        return (slope * twice_x) / 2 + intercept;
    }
    Rational slope;
    Rational intercept;
};

LineShape line_shape(const RenderSpec& spec) {
    if (spec.line && spec.defining) {
        throw std::invalid_argument("render: give either a grid line or a defining line");
    }
    if (spec.line) return LineShape{spec.line->slope(), spec.line->intercept()};
    if (spec.defining) return LineShape{spec.defining->alpha, spec.defining->rho};
    throw std::invalid_argument("render: a line is required");
}

// Integer points of the straight line with 0 <= x <= n.
std::vector<GridPoint> integer_points(const RenderSpec& spec, const LineShape& shape) {
    if (spec.line) return grid_points(*spec.line, spec.n);
    std::vector<GridPoint> pts;
    for (long long x = 0; x <= spec.n; ++x) {
        Rational y = shape.value_at(2 * x);
        if (rat_den(y) == 1) pts.push_back(GridPoint{x, static_cast<long long>(rat_num(y))});
    }
    return pts;
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Rows of the figure: enough for the straight line and the broken line,
// never more than n+1 (reached only by intercept-1 slope-1 lines).
long long grid_rows(const RenderSpec& spec, const LineShape& shape) {
    Rational peak = std::max(shape.value_at(0), shape.value_at(2 * spec.n));
    Int needed = -floor_div(-rat_num(peak), rat_den(peak));  // ceiling
    long long rows = std::max<long long>(1, static_cast<long long>(needed));
    if (spec.word) {
        auto h = heights(*spec.word);
        rows = std::max(rows, h.back());
    }
    return std::min(rows, spec.n + 1);
}

std::string render_svg(const RenderSpec& spec) {
    const LineShape shape = line_shape(spec);
    const long long n = spec.n;
    const double cell = static_cast<double>(spec.cell);
    const long long rows = grid_rows(spec, shape);
    const double margin = cell / 2.0;
    const double width = 2 * margin + n * cell;
    const double height = 2 * margin + (rows + 1) * cell;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed3(width)
        << "\" height=\"" << fixed3(height) << "\" viewBox=\"0 0 " << fixed3(width) << " "
        << fixed3(height) << "\">\n";
    // Flip so y grows upward, as in the plane.
    svg << "  <g transform=\"translate(" << fixed3(margin) << "," << fixed3(height - margin)
        << ") scale(1,-1)\" fill=\"none\">\n";

    // Grid as one path: verticals x = 0..n, horizontals y = 0..rows.
    svg << "    <path stroke=\"#cccccc\" stroke-width=\"1\" d=\"";
    for (long long x = 0; x <= n; ++x) {
        svg << "M" << fixed3(x * cell) << " 0V" << fixed3(rows * cell);
    }
    for (long long y = 0; y <= rows; ++y) {
        svg << "M0 " << fixed3(y * cell) << "H" << fixed3(n * cell);
    }
    svg << "\"/>\n";

    const double y0 = static_cast<double>(shape.value_at(0).convert_to<double>()) * cell;
    const double y1 = static_cast<double>(shape.value_at(2 * n).convert_to<double>()) * cell;
    svg << "    <line stroke=\"#333333\" stroke-width=\"1.5\" x1=\"0\" y1=\"" << fixed3(y0)
        << "\" x2=\"" << fixed3(n * cell) << "\" y2=\"" << fixed3(y1) << "\"/>\n";

    if (spec.word) {
        svg << "    <polyline stroke=\"#1f6fb0\" stroke-width=\"2\" points=\"";
        auto h = heights(*spec.word);
        for (long long x = 0; x <= n; ++x) {
            if (x) svg << " ";
            svg << fixed3(x * cell) << "," << fixed3(h[static_cast<std::size_t>(x)] * cell);
        }
        svg << "\"/>\n";
    }

    for (const GridPoint& p : integer_points(spec, shape)) {
        svg << "    <circle fill=\"#333333\" cx=\"" << fixed3(p.x * cell) << "\" cy=\""
            << fixed3(p.y * cell) << "\" r=\"" << fixed3(cell / 8.0) << "\"/>\n";
    }

    svg << "  </g>\n</svg>\n";
    return svg.str();
}

// ASCII at half-cell resolution: lattice points at even/even coordinates,
// word steps at odd columns, the straight line sampled per half column.
std::string render_ascii(const RenderSpec& spec) {
    const LineShape shape = line_shape(spec);
    const long long n = spec.n;
    const long long rows = 2 * grid_rows(spec, shape) + 1;
    const long long cols = 2 * n + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(rows),
                                    std::string(static_cast<std::size_t>(cols), ' '));
    auto put = [&](long long col, long long row, char ch, bool weak = false) {
        if (col < 0 || col >= cols || row < 0 || row >= rows) return;
        char& cell = canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (weak && cell != ' ') return;
        cell = ch;
    };

    for (long long x = 0; x <= n; ++x) {
        for (long long y = 0; 2 * y < rows; ++y) put(2 * x, 2 * y, '.');
    }
    // Straight line: nearest half-row per half-column, drawn weakly.
    for (long long m = 0; m <= 2 * n; ++m) {
        Rational y2 = shape.value_at(m) * 2;  // in half rows
        Int row = floor_div(2 * rat_num(y2) + rat_den(y2), 2 * rat_den(y2));  // round
        put(m, static_cast<long long>(row), '~', /*weak=*/true);
    }
    if (spec.word) {
        auto h = heights(*spec.word);
        for (long long k = 0; k < n; ++k) {
            long long hk = h[static_cast<std::size_t>(k)];
            if ((*spec.word)[static_cast<std::size_t>(k)] == 0) {
                put(2 * k + 1, 2 * hk, '_');
            } else {
                put(2 * k + 1, 2 * hk + 1, '/');
            }
        }
        for (long long x = 0; x <= n; ++x) put(2 * x, 2 * h[static_cast<std::size_t>(x)], '#');
    }
    for (const GridPoint& p : integer_points(spec, shape)) {
        char mark = 'o';
        if (spec.word) {
            auto h = heights(*spec.word);
            if (h[static_cast<std::size_t>(p.x)] == p.y) mark = '@';  // word passes through
        }
        put(2 * p.x, 2 * p.y, mark);
    }

    std::ostringstream out;
    for (long long row = rows - 1; row >= 0; --row) {
        std::string& text = canvas[static_cast<std::size_t>(row)];
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << "\n";
    }
    if (spec.word) {
        std::string letters(static_cast<std::size_t>(cols), ' ');
        for (long long k = 0; k < n; ++k) {
            letters[static_cast<std::size_t>(2 * k + 1)] =
                (*spec.word)[static_cast<std::size_t>(k)] ? '1' : '0';
        }
        out << "\n" << letters << "\n";
    }
    return out.str();
}

}  // namespace

std::string render(const RenderSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("render: n must be >= 1");
    if (spec.word && static_cast<long long>(spec.word->size()) != spec.n) {
        throw std::invalid_argument("render: word length must equal n");
    }
    if (spec.cell < 1) throw std::invalid_argument("render: cell size must be >= 1");
    return spec.format == RenderFormat::svg ? render_svg(spec) : render_ascii(spec);
}

}  // namespace sturmian
