#include "frieze/synthesis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frieze/error.hpp"

namespace frieze {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Scalar motif_scalar(std::string_view text, int line_no) {
    try {
        return Scalar::parse(text);
    } catch (const ParseError&) {
        throw MalformedMotif("line " + std::to_string(line_no) + ": bad number '" +
                             std::string(text) + "'");
    }
}

std::string point_str(const Point& p) { return p.x.str() + "," + p.y.str(); }

}  // namespace

Motif parse_motif(std::string_view text) {
    Motif m;
    bool have_cell = false;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);

        if (tok[0] == "cell") {
            if (have_cell) throw MalformedMotif(where + ": duplicate cell directive");
            if (tok.size() != 4 || tok[2] != "height") {
                throw MalformedMotif(where + ": expected 'cell <width> height <h>'");
            }
            m.cell_width = motif_scalar(tok[1], line_no);
            m.half_height = motif_scalar(tok[3], line_no);
            if (m.cell_width <= Scalar(0) || m.half_height <= Scalar(0)) {
                throw MalformedMotif(where + ": cell width and height must be positive");
            }
            have_cell = true;
            continue;
        }

        Primitive prim;
        if (tok[0] == "polygon") {
            prim.shape = Shape::Polygon;
        } else if (tok[0] == "polyline") {
            prim.shape = Shape::Polyline;
        } else {
            throw MalformedMotif(where + ": unknown directive '" + std::string(tok[0]) + "'");
        }
        if (!have_cell) throw MalformedMotif(where + ": primitive before cell directive");
        for (std::size_t i = 1; i < tok.size(); ++i) {
            std::string_view t = tok[i];
            if (t == "filled") {
                if (prim.shape == Shape::Polyline) throw MalformedMotif(where + ": polyline cannot be filled");
                prim.filled = true;
            } else if (t.starts_with("shade=")) {
                auto v = t.substr(6);
                int shade = -1;
                auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), shade);
                if (ec != std::errc() || ptr != v.data() + v.size() || shade < 0 || shade > 255) {
                    throw MalformedMotif(where + ": shade must be an integer in 0..255");
                }
                prim.shade = shade;
            } else if (t.starts_with("width=")) {
                prim.stroke = motif_scalar(t.substr(6), line_no);
                if (prim.stroke <= Scalar(0)) throw MalformedMotif(where + ": width must be positive");
            } else if (auto comma = t.find(','); comma != std::string_view::npos) {
                Point p{motif_scalar(t.substr(0, comma), line_no),
                        motif_scalar(t.substr(comma + 1), line_no)};
                if (p.x < Scalar(0) || p.x >= m.cell_width || p.y.abs() > m.half_height) {
                    throw OutOfCell(where + ": " + point_str(p));
                }
                prim.points.push_back(p);
            } else {
                throw MalformedMotif(where + ": unexpected token '" + std::string(t) + "'");
            }
        }
        std::size_t need = prim.shape == Shape::Polygon ? 3 : 2;
        if (prim.points.size() < need) throw MalformedMotif(where + ": too few points");
        m.primitives.push_back(std::move(prim));
    }
    if (!have_cell) throw MalformedMotif("missing cell directive");
    if (m.primitives.empty()) throw MalformedMotif("motif has no primitives");
    return m;
}

Motif read_motif_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedMotif("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_motif(ss.str());
}

std::string format_motif(const Motif& m) {
    std::ostringstream os;
    os << "cell " << m.cell_width << " height " << m.half_height << "\n";
    for (const auto& p : m.primitives) {
        os << (p.shape == Shape::Polygon ? "polygon" : "polyline");
        if (p.filled) os << " filled";
        os << " shade=" << p.shade;
        if (!p.filled) os << " width=" << p.stroke;
        for (const auto& pt : p.points) os << " " << point_str(pt);
        os << "\n";
    }
    return os.str();
}

Motif bundled_flag_motif() {
    static constexpr std::string_view text =
        "# asymmetric flag: right triangle and an off-center square\n"
        "cell 2 height 1\n"
        "polygon filled shade=0 1/16,1/8 7/16,1/8 1/16,7/8\n"
        "polygon filled shade=0 5/16,5/8 7/16,5/8 7/16,3/4 5/16,3/4\n";
    return parse_motif(text);
}

Motif sinusoid_half_wave(const Scalar& period, const Scalar& half_height, int segments,
                         const Scalar& stroke, const Scalar& amplitude) {
    if (segments < 2 || segments % 2 != 0) {
        throw std::invalid_argument("sinusoid_half_wave: segments must be even and >= 2");
    }
    constexpr std::int64_t denom = 1024;
    Motif m;
    m.cell_width = period;
    m.half_height = half_height;
    Primitive wave;
    wave.shape = Shape::Polyline;
    wave.stroke = stroke;
    for (int j = 0; j <= segments; ++j) {
        int k = std::min(j, segments - j);
        double s = std::sin(std::numbers::pi * k / segments);
        auto y = Scalar(static_cast<std::int64_t>(std::llround(s * denom)), denom) * amplitude;
        wave.points.push_back({period * Scalar(j, 2 * segments), y});
    }
    m.primitives.push_back(std::move(wave));
    return m;
}

namespace {

Primitive map_primitive(const StripIsometry& e, const Primitive& p) {
    Primitive out = p;
    for (auto& pt : out.points) pt = apply(e, pt);
    return out;
}

bool same_primitive(const Primitive& a, const Primitive& b) {
    if (a.shape != b.shape || a.filled != b.filled || a.shade != b.shade ||
        a.points.size() != b.points.size()) {
        return false;
    }
    if (!a.filled && a.stroke != b.stroke) return false;
    const std::size_t n = a.points.size();
    auto matches = [&](std::size_t shift, bool reversed) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = reversed ? (shift + n - i) % n : (shift + i) % n;
            if (a.points[i] != b.points[j]) return false;
        }
        return true;
    };
    if (a.shape == Shape::Polyline) {
        if (matches(0, false)) return true;
        return std::equal(a.points.begin(), a.points.end(), b.points.rbegin());
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (matches(s, false) || matches(s, true)) return true;
    }
    return false;
}

bool maps_onto_itself(const Motif& m, const StripIsometry& e) {
    std::vector<bool> used(m.primitives.size(), false);
    for (const auto& p : m.primitives) {
        Primitive q = map_primitive(e, p);
        bool found = false;
        for (std::size_t i = 0; i < m.primitives.size() && !found; ++i) {
            if (!used[i] && same_primitive(q, m.primitives[i])) {
                used[i] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

std::vector<StripIsometry> motif_self_symmetries(const Motif& m) {
    std::vector<StripIsometry> out;
    if (m.primitives.empty()) return out;
    // Any symmetry sends the first vertex to some vertex; that pins the
    // parameter for each kind.
    const Point p = m.primitives.front().points.front();
    for (const auto& prim : m.primitives) {
        for (const auto& v : prim.points) {
            std::vector<StripIsometry> cands;
            if (v.y == p.y) {
                cands.push_back(StripIsometry::translation(v.x - p.x));
                cands.push_back(StripIsometry::vertical_mirror((v.x + p.x) / 2));
            }
            if (v.y == -p.y) {
                cands.push_back(StripIsometry::glide(v.x - p.x));
                cands.push_back(StripIsometry::rotation((v.x + p.x) / 2));
            }
            for (const auto& e : cands) {
                if (e.is_identity() || std::find(out.begin(), out.end(), e) != out.end()) continue;
                if (maps_onto_itself(m, e)) out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(), kind_param_less);
    return out;
}

Scene generate(const Motif& m, const FriezeGroup& g, int periods) {
    if (g.period != m.cell_width) {
        throw PeriodMismatch("group period " + g.period.str() + " vs motif cell " +
                             m.cell_width.str());
    }
    if (periods < 1) throw std::invalid_argument("generate: periods must be positive");
    Scene s;
    s.period = g.period;
    s.half_height = m.half_height;
    s.periods = periods;
    s.primitives = m.primitives;
    const Scalar width = s.extent_width();
    // R and V send the cell [0, p) to (2c - p, 2c]; keep the centers whose
    // image starts inside the extent.
    for (const auto& e : elements_in_window(g, Scalar(0), width + g.period)) {
        Scalar left;
        switch (e.kind()) {
            case Kind::Translation:
            case Kind::Glide: left = e.param(); break;
            case Kind::Rotation:
            case Kind::VerticalMirror: left = e.param() * 2 - g.period; break;
        }
        if (left < Scalar(0) || left >= width) continue;
        for (std::size_t i = 0; i < m.primitives.size(); ++i) s.placed.push_back({e, i});
    }
    return s;
}

namespace {

std::string svg_num(const Scalar& v) {
    if (v.is_integer()) return std::to_string(v.num());
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v.to_double();
    std::string s = os.str();
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string svg_gray(int shade) {
    return "rgb(" + std::to_string(shade) + "," + std::to_string(shade) + "," +
           std::to_string(shade) + ")";
}

}  // namespace

std::string render_svg(const Scene& s) {
    const Scalar width = s.extent_width();
    const Scalar height = s.half_height * 2;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << svg_num(width * Scalar(100)) << "\" height=\"" << svg_num(height * Scalar(100))
       << "\" viewBox=\"0 0 " << svg_num(width) << " " << svg_num(height) << "\">\n"
       << "<defs><clipPath id=\"extent\"><rect x=\"0\" y=\"0\" width=\"" << svg_num(width)
       << "\" height=\"" << svg_num(height) << "\"/></clipPath></defs>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << svg_num(width) << "\" height=\"" << svg_num(height)
       << "\" fill=\"white\"/>\n"
       << "<g clip-path=\"url(#extent)\">";
    for (const auto& pl : s.placed) {
        Primitive prim = map_primitive(pl.element, s.primitives.at(pl.primitive));
        auto [lo, hi] = std::minmax_element(prim.points.begin(), prim.points.end(),
                                            [](const Point& a, const Point& b) { return a.x < b.x; });
        std::vector<Scalar> shifts{Scalar(0)};
        if (hi->x > width) shifts.push_back(-width);
        if (lo->x < Scalar(0)) shifts.push_back(width);
        for (const auto& dx : shifts) {
            os << "\n<path d=\"";
            for (std::size_t i = 0; i < prim.points.size(); ++i) {
                const auto& pt = prim.points[i];
                os << (i == 0 ? "M" : " L") << svg_num(pt.x + dx) << " "
                   << svg_num(s.half_height - pt.y);
            }
            if (prim.shape == Shape::Polygon) os << " Z";
            os << "\" ";
            if (prim.filled) {
                os << "fill=\"" << svg_gray(prim.shade) << "\" stroke=\"none\"";
            } else {
                os << "fill=\"none\" stroke=\"" << svg_gray(prim.shade) << "\" stroke-width=\""
                   << svg_num(prim.stroke) << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"";
            }
            os << " data-element=\"" << pl.element << "\"/>";
        }
    }
    if (!s.placed.empty()) os << "\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

namespace {

using wide = __int128;

struct IPoint {
    std::int64_t x;
    std::int64_t y;
};

// A primitive in integer raster coordinates.
struct IShape {
    std::vector<IPoint> pts;
    bool filled = false;
    bool closed = false;
    std::int64_t radius = 0;  // stroke half-width
    std::uint8_t shade = 0;
    std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    wide l = static_cast<wide>(a) / std::gcd(a, b) * b;
    if (l > (std::int64_t{1} << 40)) {
        throw NonIntegralRaster("coordinate denominators too large for exact rasterization");
    }
    return static_cast<std::int64_t>(l);
}

std::int64_t to_int(const Scalar& v, std::int64_t scale) {
    Scalar s = v * Scalar(scale);
    if (!s.is_integer()) throw std::logic_error("rasterize: scale does not clear denominators");
    return s.num();
}

bool near_segment(const IPoint& a, const IPoint& b, const IPoint& p, std::int64_t r) {
    wide dx = b.x - a.x, dy = b.y - a.y;
    wide vx = p.x - a.x, vy = p.y - a.y;
    wide rr = static_cast<wide>(r) * r;
    wide t = vx * dx + vy * dy;
    wide len2 = dx * dx + dy * dy;
    if (t <= 0) return vx * vx + vy * vy <= rr;
    if (t >= len2) {
        wide wx = p.x - b.x, wy = p.y - b.y;
        return wx * wx + wy * wy <= rr;
    }
    wide cross = vx * dy - vy * dx;
    return cross * cross <= rr * len2;
}

bool inside_polygon(const std::vector<IPoint>& pts, const IPoint& p) {
    bool inside = false;
    const std::size_t n = pts.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const IPoint& a = pts[j];
        const IPoint& b = pts[i];
        if (near_segment(a, b, p, 0)) return true;  // closed set
        if ((a.y > p.y) != (b.y > p.y)) {
            wide den = b.y - a.y;
            wide lhs = static_cast<wide>(p.x - a.x) * den;
            wide rhs = static_cast<wide>(p.y - a.y) * (b.x - a.x);
            if (den > 0 ? lhs < rhs : lhs > rhs) inside = !inside;
        }
    }
    return inside;
}

bool covers(const IShape& s, const IPoint& p) {
    if (s.filled) return inside_polygon(s.pts, p);
    const std::size_t n = s.pts.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (near_segment(s.pts[i], s.pts[i + 1], p, s.radius)) return true;
    }
    return s.closed && near_segment(s.pts[n - 1], s.pts[0], p, s.radius);
}

}  // namespace

Image rasterize(const Scene& s, int px_per_unit, int supersample) {
    if (px_per_unit < 1) throw std::invalid_argument("rasterize: px_per_unit must be positive");
    if (supersample != 1 && supersample != 2 && supersample != 4) {
        throw std::invalid_argument("rasterize: supersample must be 1, 2 or 4");
    }
    const Scalar px(px_per_unit);
    const Scalar period_px = s.period * px;
    const Scalar height_px = s.half_height * 2 * px;
    if (!period_px.is_integer() || !height_px.is_integer()) {
        throw NonIntegralRaster("period*px = " + period_px.str() + ", height*px = " +
                                height_px.str() + "; choose px_per_unit to clear denominators");
    }
    const int width = static_cast<int>(period_px.num()) * s.periods;
    const int height = static_cast<int>(height_px.num());
    Image img(width, height, 255);
    if (width == 0 || height == 0) return img;

    // Work in integer coordinates X = x * scale. Sample centers of the
    // supersampled grid sit at odd multiples of `step`.
    std::vector<Primitive> mapped;
    mapped.reserve(s.placed.size());
    std::int64_t denom = 1;
    for (const auto& pl : s.placed) {
        mapped.push_back(map_primitive(pl.element, s.primitives.at(pl.primitive)));
        for (const auto& pt : mapped.back().points) {
            denom = checked_lcm(denom, pt.x.den());
            denom = checked_lcm(denom, pt.y.den());
        }
        denom = checked_lcm(denom, (mapped.back().stroke / 2).den());
    }
    denom = checked_lcm(denom, s.half_height.den());
    const std::int64_t step = denom;
    const std::int64_t scale = 2 * supersample * px_per_unit * denom;
    const std::int64_t ext = to_int(s.extent_width(), scale);
    const std::int64_t top = to_int(s.half_height, scale);

    std::vector<IShape> shapes;
    for (const auto& prim : mapped) {
        IShape base;
        base.filled = prim.filled && prim.shape == Shape::Polygon;
        base.closed = prim.shape == Shape::Polygon;
        base.radius = base.filled ? 0 : to_int(prim.stroke / 2, scale);
        base.shade = static_cast<std::uint8_t>(prim.shade);
        for (const auto& pt : prim.points) base.pts.push_back({to_int(pt.x, scale), to_int(pt.y, scale)});
        // Cyclic identification of the extent: also stamp one circumference
        // to either side.
        for (std::int64_t shift : {-ext, std::int64_t{0}, ext}) {
            IShape sh = base;
            for (auto& p : sh.pts) p.x += shift;
            auto [xl, xh] = std::minmax_element(sh.pts.begin(), sh.pts.end(),
                                                [](auto& a, auto& b) { return a.x < b.x; });
            auto [yl, yh] = std::minmax_element(sh.pts.begin(), sh.pts.end(),
                                                [](auto& a, auto& b) { return a.y < b.y; });
            sh.xmin = xl->x - sh.radius;
            sh.xmax = xh->x + sh.radius;
            sh.ymin = yl->y - sh.radius;
            sh.ymax = yh->y + sh.radius;
            if (sh.xmax < 0 || sh.xmin > ext) continue;
            shapes.push_back(std::move(sh));
        }
    }

    const int sw = width * supersample;
    const int sh = height * supersample;
    std::vector<std::uint8_t> samples(static_cast<std::size_t>(sw) * sh, 255);
    for (const auto& shape : shapes) {
        // Sample column m sits at X = (2m+1)*step, row r at Y = top - (2r+1)*step.
        auto col_lo = std::max<std::int64_t>(0, (shape.xmin / step - 1) / 2);
        auto col_hi = std::min<std::int64_t>(sw - 1, (shape.xmax / step + 1) / 2);
        auto row_lo = std::max<std::int64_t>(0, ((top - shape.ymax) / step - 1) / 2);
        auto row_hi = std::min<std::int64_t>(sh - 1, ((top - shape.ymin) / step + 1) / 2);
        for (auto r = row_lo; r <= row_hi; ++r) {
            IPoint p{0, top - (2 * r + 1) * step};
            for (auto c = col_lo; c <= col_hi; ++c) {
                p.x = (2 * c + 1) * step;
                auto& v = samples[static_cast<std::size_t>(r) * sw + c];
                if (shape.shade < v && covers(shape, p)) v = shape.shade;
            }
        }
    }
    const int n = supersample * supersample;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            int sum = 0;
            for (int dy = 0; dy < supersample; ++dy)
                for (int dx = 0; dx < supersample; ++dx)
                    sum += samples[static_cast<std::size_t>(y * supersample + dy) * sw +
                                   x * supersample + dx];
            img.at(x, y) = static_cast<std::uint8_t>((sum + n / 2) / n);
        }
    }
    return img;
}

}  // namespace frieze
