#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frieze/group.hpp"
#include "frieze/image.hpp"
#include "frieze/isometry.hpp"

namespace frieze {

enum class Shape { Polyline, Polygon };

struct Primitive {
    Shape shape = Shape::Polygon;
    std::vector<Point> points;
    bool filled = false;
    int shade = 0;              // 0 black .. 255 white
    Scalar stroke{1, 16};       // stroke width for polylines and unfilled polygons

    friend bool operator==(const Primitive&, const Primitive&) = default;
};

// Vector primitives inside one cell [0, cell_width) x [-half_height, half_height].
struct Motif {
    std::vector<Primitive> primitives;
    Scalar cell_width{1};
    Scalar half_height{1};

    friend bool operator==(const Motif&, const Motif&) = default;
};

// Line-oriented motif text:
//
//   # comment
//   cell 2 height 1
//   polygon filled shade=0 0,0 1/2,0 0,3/4
//   polyline shade=64 width=1/8 0,0 1,1/2
//
// Throws MalformedMotif on syntax errors and OutOfCell for points outside the
// half-open cell or the strip.
Motif parse_motif(std::string_view text);
Motif read_motif_file(const std::string& path);
std::string format_motif(const Motif& m);

// Right triangle plus an off-center square in the first quarter of a
// 2 x [-1, 1] cell. It has no nontrivial strip symmetry, so stamping it with
// a group yields exactly that group.
Motif bundled_flag_motif();

// Half a wave of y = amplitude * sin(2*pi*x/period) as a polyline with
// `segments` pieces on [0, period/2]. Ordinates are rounded to 1/1024 from a
// table that is exactly mirror-symmetric about period/4. Stamping it with
// <T,S'> at glide period/2 produces the full sinusoid.
Motif sinusoid_half_wave(const Scalar& period, const Scalar& half_height, int segments,
                         const Scalar& stroke, const Scalar& amplitude = Scalar(1));

// Non-identity strip isometries that map the motif's primitives onto
// themselves (as a set, vertex order up to cyclic shift / reversal).
std::vector<StripIsometry> motif_self_symmetries(const Motif& m);

struct Placement {
    StripIsometry element;
    std::size_t primitive = 0;
    friend bool operator==(const Placement&, const Placement&) = default;
};

// A motif stamped over [0, periods*period) x [-half_height, half_height].
// Each placed element maps the cell's left edge into [0, periods*period);
// images that stick out on the right wrap around to the left, i.e. the
// extent is a cylinder of circumference periods*period.
struct Scene {
    Scalar period{1};
    Scalar half_height{1};
    int periods = 0;
    std::vector<Primitive> primitives;
    std::vector<Placement> placed;

    Scalar extent_width() const { return period * Scalar(periods); }
};

// Throws PeriodMismatch when g.period != m.cell_width.
Scene generate(const Motif& m, const FriezeGroup& g, int periods);

// SVG 1.1, y up mapped to screen y down. Byte-deterministic.
std::string render_svg(const Scene& s);

// Box filter over supersample x supersample exact point samples per pixel;
// a sample is covered when it lies in a filled polygon (boundary included)
// or within stroke/2 of a stroked segment. Throws NonIntegralRaster unless
// period*px_per_unit and 2*half_height*px_per_unit are integers.
Image rasterize(const Scene& s, int px_per_unit, int supersample = 1);

}  // namespace frieze
