#include "frieze/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "frieze/error.hpp"

namespace frieze {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("frieze::Scalar: 64-bit overflow");
    }
    return static_cast<std::int64_t>(v);
}

wide wgcd(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Scalar make(wide num, wide den) {
    if (den == 0) throw std::domain_error("frieze::Scalar: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide g = wgcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Scalar(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError("invalid rational '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("frieze::Scalar: zero denominator");
    wide n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide g = wgcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Scalar Scalar::operator-() const { return make(-static_cast<wide>(num_), den_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    return *this = make(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                        static_cast<wide>(den_) * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this = make(static_cast<wide>(num_) * o.den_ - static_cast<wide>(o.num_) * den_,
                        static_cast<wide>(den_) * o.den_);
}

Scalar& Scalar::operator*=(const Scalar& o) {
    return *this = make(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.num_ == 0) throw std::domain_error("frieze::Scalar: division by zero");
    return *this = make(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Scalar::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(parse_int(text, text));
    std::int64_t n = parse_int(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    std::int64_t d = parse_int(den_text, text);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar(n, d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar mod(const Scalar& x, const Scalar& m) {
    if (m.is_zero()) throw std::domain_error("frieze::mod: zero modulus");
    Scalar am = m.abs();
    Scalar q = x / am;
    return x - am * Scalar(q.floor());
}

Scalar gcd(const Scalar& a, const Scalar& b) {
    // gcd(p/q, r/s) = gcd(ps, rq) / (qs)
    wide num = wgcd(static_cast<wide>(a.num()) * b.den(), static_cast<wide>(b.num()) * a.den());
    wide den = static_cast<wide>(a.den()) * b.den();
    return make(num, den);
}

bool divides(const Scalar& m, const Scalar& x) {
    if (m.is_zero()) return x.is_zero();
    return (x / m).is_integer();
}

}  // namespace frieze
