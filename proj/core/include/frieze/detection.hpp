#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "frieze/group.hpp"
#include "frieze/image.hpp"
#include "frieze/scalar.hpp"

namespace frieze {

// Pixel position on the half-integer grid, stored doubled. Positions are in
// pixel-index coordinates: pixel x has its center at x.
struct HalfPixel {
    std::int64_t twice = 0;

    double value() const { return static_cast<double>(twice) / 2.0; }
    std::string str() const;  // "3.5", "19", "0"
    friend auto operator<=>(const HalfPixel&, const HalfPixel&) = default;
};

enum class ProbeKind { Rotation, VerticalMirror, HorizontalReflection, ProperGlide };

struct DetectionTolerance {
    double eta = 0.02;     // max fraction of mismatching pixel pairs
    int delta = 10;        // pixel pair mismatches when |a - b| > delta

    static DetectionTolerance exact() { return {0.0, 0}; }
};

// mismatch is the fraction of pixels x whose image pixel differs by more
// than delta.
struct ProbeResult {
    std::optional<HalfPixel> parameter;  // center/axis, or 0 for parameter-free probes
    double mismatch = 1.0;               // at the returned parameter, or the best seen
};

struct SymmetryReport {
    int period_px = 0;
    SymmetryFlags flags;
    std::optional<HalfPixel> rot_center_px;
    std::optional<HalfPixel> mirror_axis_px;
    TypeTag tag = TypeTag::T;
    // Index 0: period shift, then one entry per ProbeKind.
    std::array<double, 5> mismatch{};

    GlidePhase glide() const;
    double max_accepted_mismatch() const;
    // tag=p2mg period=64 rot=3.5 mirror=19.5 glide=half mismatch=0.0 gens=<T,R,V,S'>
    std::string str() const;
};

// Smallest divisor d of the width whose cyclic shift matches. With
// require_repeat, a period equal to the full width throws NoPeriod.
int find_period(const Image& img, const DetectionTolerance& tol, bool require_repeat = false);

// Candidates for rotation and vertical mirror are scanned ascending over
// {0, 1/2, ..., period - 1/2}; the first qualifying one is returned.
// ProperGlide throws OddPeriodGlide for an odd period (classify_image
// upsamples first).
ProbeResult probe_symmetry(const Image& img, int period_px, ProbeKind kind,
                           const DetectionTolerance& tol);

// find_period, all four probes, tag_from_flags. On inconsistent flags the
// probes are retried once at eta/2 before InconsistentFlags propagates.
SymmetryReport classify_image(const Image& img, const DetectionTolerance& tol = {},
                              bool require_repeat = false);

enum class TransformOp { ScaleUniform, ScaleX, ScaleY, ShearX };

TransformOp parse_transform_op(const std::string& name);
std::string transform_op_name(TransformOp op);

// Nearest-neighbor resampling. Scales resize the canvas by k (rounded).
// Shear keeps the canvas and wraps horizontally, moving row y by
// round(k * (y - y_mid)) with halves rounded away from zero, so rows
// symmetric about the midline move by opposite amounts.
Image transform_image(const Image& img, TransformOp op, const Scalar& k);

// Doubles every column. Used to give odd periods an integral half period.
Image upsample_x2(const Image& img);

}  // namespace frieze
