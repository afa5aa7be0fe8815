#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "frieze/frieze.hpp"

namespace frieze::fixtures {

inline constexpr int flag_px = 32;  // 64 px per period of the bundled motif

// Bundled motif stamped with the standard group (anchor 0), two periods.
inline Image standard_raster(TypeTag tag, int periods = 2, int supersample = 1) {
    Motif m = bundled_flag_motif();
    return rasterize(generate(m, standard_group(tag, m.cell_width), periods), flag_px, supersample);
}

// The sinusoid y = sin(2*pi*x/period): a 32-segment half wave stamped with
// <T,S'>, so the full period has 64 segments.
inline Scene sinusoid_scene(const Scalar& period, int periods = 2) {
    Motif m = sinusoid_half_wave(period, Scalar(1), 32, Scalar(1, 8));
    return generate(m, standard_group(TypeTag::TSg, period), periods);
}

// 2*pi rounded to 44/7, and 28 px per unit gives a 176 px period.
inline const Scalar sinusoid_period{44, 7};
inline constexpr int sinusoid_px = 28;

inline Scalar random_scalar(std::mt19937_64& rng, int max_num = 60, int max_den = 12) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Scalar(num(rng), den(rng));
}

inline StripIsometry random_isometry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    Scalar p = random_scalar(rng);
    switch (kind(rng)) {
        case 0: return StripIsometry::translation(p);
        case 1: return StripIsometry::rotation(p);
        case 2: return StripIsometry::vertical_mirror(p);
        default: return StripIsometry::glide(p);
    }
}

// Parameters k/4 with |k| <= 8.
inline StripIsometry random_quarter_isometry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> k(-8, 8);
    Scalar p(k(rng), 4);
    switch (kind(rng)) {
        case 0: return StripIsometry::translation(p);
        case 1: return StripIsometry::rotation(p);
        case 2: return StripIsometry::vertical_mirror(p);
        default: return StripIsometry::glide(p);
    }
}

// Mod that maps a half-pixel value into [0, m).
inline double wrap_mod(double v, double m) {
    double r = std::fmod(v, m);
    return r < 0 ? r + m : r;
}

// Distance on the circle of circumference m.
inline double circular_distance(double a, double b, double m) {
    double d = wrap_mod(a - b, m);
    return std::min(d, m - d);
}

}  // namespace frieze::fixtures
