#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace frieze {

// Exact rational number with a normalized int64 representation
// (denominator > 0, gcd(|num|, den) = 1). Arithmetic is exact; a result that
// does not fit in 64 bits throws std::overflow_error rather than wrapping.
class Scalar {
public:
    constexpr Scalar() = default;
    constexpr Scalar(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integer
    Scalar(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar&, const Scalar&) = default;
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    Scalar abs() const { return num_ < 0 ? -*this : *this; }
    std::int64_t floor() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p", "-p" or "p/q". Accepts the same forms.
    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Euclidean remainder: result in [0, |m|). m must be nonzero.
Scalar mod(const Scalar& x, const Scalar& m);

// Largest r > 0 with a, b both integer multiples of r; gcd(x, 0) = |x|.
// For a/b and c/d this is gcd(ad, cb) / (bd), normalized.
Scalar gcd(const Scalar& a, const Scalar& b);

// True when x is an integer multiple of m (m nonzero).
bool divides(const Scalar& m, const Scalar& x);

}  // namespace frieze

template <>
struct std::hash<frieze::Scalar> {
    std::size_t operator()(const frieze::Scalar& s) const noexcept {
        return std::hash<std::int64_t>{}(s.num()) * 1000003u ^ std::hash<std::int64_t>{}(s.den());
    }
};
