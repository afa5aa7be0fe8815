#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "frieze/scalar.hpp"

namespace frieze {

// The four kinds of symmetry a horizontal strip admits. Rotation is always
// the half-turn about a point on the strip axis (y = 0).
enum class Kind { Translation, Rotation, VerticalMirror, Glide };

inline constexpr std::array<Kind, 4> all_kinds{Kind::Translation, Kind::Rotation,
                                               Kind::VerticalMirror, Kind::Glide};

// Single-letter name: T, R, V, S.
char kind_letter(Kind k);

struct Point {
    Scalar x;
    Scalar y;
    friend bool operator==(const Point&, const Point&) = default;
};

// Action x -> sigma*x + c, y -> mu*y. Every strip isometry has exactly one.
struct CanonicalForm {
    int sigma = 1;
    int mu = 1;
    Scalar c;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// T_t, R_A, V_A, S_t. For Translation and Glide the parameter is the
// x-component of the shift; for Rotation and VerticalMirror it is the
// x-coordinate of the fixed point on the strip axis. S_0 is the plain
// horizontal reflection.
class StripIsometry {
public:
    constexpr StripIsometry() = default;

    static StripIsometry translation(Scalar t) { return {Kind::Translation, t}; }
    static StripIsometry rotation(Scalar center) { return {Kind::Rotation, center}; }
    static StripIsometry vertical_mirror(Scalar axis) { return {Kind::VerticalMirror, axis}; }
    static StripIsometry glide(Scalar t) { return {Kind::Glide, t}; }
    static StripIsometry identity() { return translation(0); }
    static StripIsometry horizontal_reflection() { return glide(0); }

    Kind kind() const { return kind_; }
    const Scalar& param() const { return param_; }

    bool is_identity() const { return kind_ == Kind::Translation && param_.is_zero(); }
    bool is_horizontal_reflection() const { return kind_ == Kind::Glide && param_.is_zero(); }

    // "T(3/2)", "R(0)", "V(-1/4)", "S(1/2)".
    std::string str() const;
    static StripIsometry parse(std::string_view text);

    friend bool operator==(const StripIsometry&, const StripIsometry&) = default;

private:
    constexpr StripIsometry(Kind k, Scalar p) : kind_(k), param_(p) {}

    Kind kind_ = Kind::Translation;
    Scalar param_;
};

std::ostream& operator<<(std::ostream& os, const StripIsometry& p);

// Orders by (kind, parameter) in T, R, V, S order.
bool kind_param_less(const StripIsometry& a, const StripIsometry& b);

CanonicalForm canonical(const StripIsometry& p);
StripIsometry from_canonical(const CanonicalForm& f);

// p ∘ q: apply q first, then p. Evaluated cell by cell from the strip
// multiplication table, not through canonical forms.
StripIsometry compose(const StripIsometry& p, const StripIsometry& q);

StripIsometry inverse(const StripIsometry& p);

Point apply(const StripIsometry& p, const Point& pt);

// Kind of p ∘ q from the compact table; depends only on the kinds.
Kind compact_product(Kind p, Kind q);

}  // namespace frieze
