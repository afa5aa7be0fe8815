#include "frieze/detection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "frieze/error.hpp"

namespace frieze {

std::string HalfPixel::str() const {
    std::string s = std::to_string(twice / 2);
    if (twice % 2 != 0) {
        if (twice < 0 && twice / 2 == 0) s = "-0";
        s += ".5";
    }
    return s;
}

namespace {

std::int64_t budget_for(const Image& img, const DetectionTolerance& tol) {
    const double n = static_cast<double>(img.pixels.size());
    return static_cast<std::int64_t>(std::floor(tol.eta * n + 1e-9));
}

// Number of pixels whose partner under `map` differs by more than delta;
// stops counting once `cap` is exceeded.
template <class Map>
std::int64_t count_mismatches(const Image& img, int delta, std::int64_t cap, Map map) {
    std::int64_t count = 0;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            auto [mx, my] = map(x, y);
            if (std::abs(int(img.at(x, y)) - int(img.at(mx, my))) > delta) {
                if (++count > cap) return count;
            }
        }
    }
    return count;
}

double fraction(const Image& img, std::int64_t count) {
    return static_cast<double>(count) / static_cast<double>(img.pixels.size());
}

int wrap(std::int64_t x, int w) {
    auto r = x % w;
    return static_cast<int>(r < 0 ? r + w : r);
}

// Scan candidates ascending; return the first within budget, otherwise the
// smallest mismatch seen.
template <class MapFor>
ProbeResult scan(const Image& img, const DetectionTolerance& tol, std::int64_t candidates,
                 MapFor map_for) {
    const std::int64_t budget = budget_for(img, tol);
    constexpr auto none = std::numeric_limits<std::int64_t>::max();
    std::int64_t best = none;
    for (std::int64_t t = 0; t < candidates; ++t) {
        // Counting past the best so far cannot change the minimum.
        std::int64_t cap = best == none ? none : std::max(budget, best - 1);
        std::int64_t c = count_mismatches(img, tol.delta, cap, map_for(t));
        if (c <= budget) return {HalfPixel{t}, fraction(img, c)};
        best = std::min(best, c);
    }
    return {std::nullopt, fraction(img, best)};
}

ProbeResult probe_impl(const Image& img, int p, ProbeKind kind, const DetectionTolerance& tol) {
    const int w = img.width;
    const int h = img.height;
    switch (kind) {
        case ProbeKind::Rotation:
            return scan(img, tol, 2 * std::int64_t{p}, [&](std::int64_t t) {
                return [t, w, h](int x, int y) { return std::pair{wrap(t - x, w), h - 1 - y}; };
            });
        case ProbeKind::VerticalMirror:
            return scan(img, tol, 2 * std::int64_t{p}, [&](std::int64_t t) {
                return [t, w](int x, int y) { return std::pair{wrap(t - x, w), y}; };
            });
        case ProbeKind::HorizontalReflection:
            return scan(img, tol, 1, [&](std::int64_t) {
                return [h](int x, int y) { return std::pair{x, h - 1 - y}; };
            });
        case ProbeKind::ProperGlide: {
            if (p % 2 != 0) throw OddPeriodGlide(p);
            const int shift = p / 2;
            return scan(img, tol, 1, [&](std::int64_t) {
                return [shift, w, h](int x, int y) { return std::pair{wrap(x + shift, w), h - 1 - y}; };
            });
        }
    }
    return {};
}

SymmetryReport probe_all(const Image& img, int period, const DetectionTolerance& tol) {
    SymmetryReport r;
    r.period_px = period;
    ProbeResult rot = probe_impl(img, period, ProbeKind::Rotation, tol);
    ProbeResult mir = probe_impl(img, period, ProbeKind::VerticalMirror, tol);
    ProbeResult hor = probe_impl(img, period, ProbeKind::HorizontalReflection, tol);
    ProbeResult gli;
    if (period % 2 == 0) {
        gli = probe_impl(img, period, ProbeKind::ProperGlide, tol);
    } else {
        Image up = upsample_x2(img);
        gli = probe_impl(up, 2 * period, ProbeKind::ProperGlide, tol);
    }
    r.rot_center_px = rot.parameter;
    r.mirror_axis_px = mir.parameter;
    r.flags.has_rotation = rot.parameter.has_value();
    r.flags.has_vertical_mirror = mir.parameter.has_value();
    r.flags.has_horizontal_reflection = hor.parameter.has_value();
    // With S0 present a half-period glide would mean a half-period
    // translation; that only happens for degenerate (e.g. constant) strips,
    // which are reported with S0.
    r.flags.has_proper_glide = gli.parameter.has_value() && !r.flags.has_horizontal_reflection;
    r.mismatch = {0.0, rot.mismatch, mir.mismatch, hor.mismatch, gli.mismatch};
    return r;
}

}  // namespace

GlidePhase SymmetryReport::glide() const {
    if (flags.has_horizontal_reflection) return GlidePhase::Zero;
    if (flags.has_proper_glide) return GlidePhase::Half;
    return GlidePhase::None;
}

double SymmetryReport::max_accepted_mismatch() const {
    double m = mismatch[0];
    const bool accepted[4] = {flags.has_rotation, flags.has_vertical_mirror,
                              flags.has_horizontal_reflection, flags.has_proper_glide};
    for (int i = 0; i < 4; ++i)
        if (accepted[i]) m = std::max(m, mismatch[i + 1]);
    return m;
}

std::string SymmetryReport::str() const {
    std::ostringstream mm;
    mm << max_accepted_mismatch();
    std::string ms = mm.str();
    if (ms.find_first_of(".e") == std::string::npos) ms += ".0";
    std::ostringstream os;
    os << "tag=" << crystallographic_name(tag) << " period=" << period_px
       << " rot=" << (rot_center_px ? rot_center_px->str() : "none")
       << " mirror=" << (mirror_axis_px ? mirror_axis_px->str() : "none")
       << " glide=" << glide_phase_name(glide()) << " mismatch=" << ms
       << " gens=" << generator_name(tag);
    return os.str();
}

int find_period(const Image& img, const DetectionTolerance& tol, bool require_repeat) {
    if (img.width < 1 || img.height < 1) throw NoPeriod();
    const std::int64_t budget = budget_for(img, tol);
    const int w = img.width;
    for (int d = 1; d < w; ++d) {
        if (w % d != 0) continue;
        auto c = count_mismatches(img, tol.delta, budget,
                                  [d, w](int x, int y) { return std::pair{(x + d) % w, y}; });
        if (c <= budget) return d;
    }
    if (require_repeat) throw NoPeriod();
    return w;
}

ProbeResult probe_symmetry(const Image& img, int period_px, ProbeKind kind,
                           const DetectionTolerance& tol) {
    if (period_px < 1 || period_px > img.width) {
        throw std::invalid_argument("probe_symmetry: period out of range");
    }
    return probe_impl(img, period_px, kind, tol);
}

SymmetryReport classify_image(const Image& img, const DetectionTolerance& tol,
                              bool require_repeat) {
    const int period = find_period(img, tol, require_repeat);
    const std::int64_t period_count = count_mismatches(
        img, tol.delta, std::numeric_limits<std::int64_t>::max(),
        [period, w = img.width](int x, int y) { return std::pair{(x + period) % w, y}; });
    DetectionTolerance current = tol;
    for (int attempt = 0;; ++attempt) {
        SymmetryReport r = probe_all(img, period, current);
        r.mismatch[0] = fraction(img, period_count);
        try {
            r.tag = tag_from_flags(r.flags);
            if (!r.flags.has_rotation) r.rot_center_px.reset();
            if (!r.flags.has_vertical_mirror) r.mirror_axis_px.reset();
            return r;
        } catch (const InconsistentFlags&) {
            if (attempt > 0 || current.eta == 0.0) throw;
            current.eta /= 2;
        }
    }
}

TransformOp parse_transform_op(const std::string& name) {
    if (name == "scale_uniform") return TransformOp::ScaleUniform;
    if (name == "scale_x") return TransformOp::ScaleX;
    if (name == "scale_y") return TransformOp::ScaleY;
    if (name == "shear_x") return TransformOp::ShearX;
    throw ParseError("unknown transform '" + name + "' (scale_uniform, scale_x, scale_y, shear_x)");
}

std::string transform_op_name(TransformOp op) {
    switch (op) {
        case TransformOp::ScaleUniform: return "scale_uniform";
        case TransformOp::ScaleX: return "scale_x";
        case TransformOp::ScaleY: return "scale_y";
        case TransformOp::ShearX: return "shear_x";
    }
    return "?";
}

namespace {

std::int64_t round_half_away(const Scalar& v) {
    Scalar a = v.abs() + Scalar(1, 2);
    std::int64_t r = a.floor();
    return v.sign() < 0 ? -r : r;
}

// Source index for output index i under scale k: floor((i + 1/2) / k).
int scaled_source(int i, const Scalar& k, int limit) {
    auto src = (Scalar(2 * i + 1, 2) / k).floor();
    return static_cast<int>(std::clamp<std::int64_t>(src, 0, limit - 1));
}

Image resample(const Image& img, const Scalar& kx, const Scalar& ky) {
    if (kx <= Scalar(0) || ky <= Scalar(0)) throw std::invalid_argument("scale factor must be positive");
    int w = static_cast<int>(std::max<std::int64_t>(1, round_half_away(kx * Scalar(img.width))));
    int h = static_cast<int>(std::max<std::int64_t>(1, round_half_away(ky * Scalar(img.height))));
    Image out(w, h);
    out.maxval = img.maxval;
    std::vector<int> xs(w);
    for (int x = 0; x < w; ++x) xs[x] = scaled_source(x, kx, img.width);
    for (int y = 0; y < h; ++y) {
        int sy = scaled_source(y, ky, img.height);
        for (int x = 0; x < w; ++x) out.at(x, y) = img.at(xs[x], sy);
    }
    return out;
}

}  // namespace

Image transform_image(const Image& img, TransformOp op, const Scalar& k) {
    switch (op) {
        case TransformOp::ScaleUniform: return resample(img, k, k);
        case TransformOp::ScaleX: return resample(img, k, Scalar(1));
        case TransformOp::ScaleY: return resample(img, Scalar(1), k);
        case TransformOp::ShearX: {
            Image out(img.width, img.height);
            out.maxval = img.maxval;
            for (int y = 0; y < img.height; ++y) {
                // k * (y - (h-1)/2)
                Scalar offset = k * Scalar(2 * std::int64_t{y} - img.height + 1, 2);
                std::int64_t shift = round_half_away(offset);
                for (int x = 0; x < img.width; ++x) {
                    out.at(x, y) = img.at(wrap(x - shift, img.width), y);
                }
            }
            return out;
        }
    }
    return img;
}

Image upsample_x2(const Image& img) {
    Image out(img.width * 2, img.height);
    out.maxval = img.maxval;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < out.width; ++x) out.at(x, y) = img.at(x / 2, y);
    return out;
}

}  // namespace frieze
