#include "frieze/isometry.hpp"

#include <ostream>

#include "frieze/error.hpp"

namespace frieze {

char kind_letter(Kind k) {
    switch (k) {
        case Kind::Translation: return 'T';
        case Kind::Rotation: return 'R';
        case Kind::VerticalMirror: return 'V';
        case Kind::Glide: return 'S';
    }
    return '?';
}

std::string StripIsometry::str() const {
    return std::string(1, kind_letter(kind_)) + "(" + param_.str() + ")";
}

StripIsometry StripIsometry::parse(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
    if (trimmed.size() < 4 || trimmed[1] != '(' || trimmed.back() != ')') {
        throw ParseError("invalid isometry '" + std::string(text) + "', expected e.g. R(1/2)");
    }
    Scalar p = Scalar::parse(trimmed.substr(2, trimmed.size() - 3));
    switch (trimmed.front()) {
        case 'T': return translation(p);
        case 'R': return rotation(p);
        case 'V': return vertical_mirror(p);
        case 'S': return glide(p);
        default: break;
    }
    throw ParseError("unknown isometry kind in '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const StripIsometry& p) { return os << p.str(); }

bool kind_param_less(const StripIsometry& a, const StripIsometry& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    return a.param() < b.param();
}

CanonicalForm canonical(const StripIsometry& p) {
    switch (p.kind()) {
        case Kind::Translation: return {1, 1, p.param()};
        case Kind::Glide: return {1, -1, p.param()};
        case Kind::VerticalMirror: return {-1, 1, p.param() * 2};
        case Kind::Rotation: return {-1, -1, p.param() * 2};
    }
    return {};
}

StripIsometry from_canonical(const CanonicalForm& f) {
    if (f.sigma > 0) {
        return f.mu > 0 ? StripIsometry::translation(f.c) : StripIsometry::glide(f.c);
    }
    Scalar fixed = f.c / 2;
    return f.mu > 0 ? StripIsometry::vertical_mirror(fixed) : StripIsometry::rotation(fixed);
}

// Rows are the left factor p (applied second), columns the right factor q.
// With t, A the parameter of p and s, B the parameter of q:
//
//          T_s          R_B          V_B          S_s
//   T_t    T_{t+s}      R_{B+t/2}    V_{B+t/2}    S_{t+s}
//   R_A    R_{A-s/2}    T_{2(A-B)}   S_{2(A-B)}   V_{A-s/2}
//   V_A    V_{A-s/2}    S_{2(A-B)}   T_{2(A-B)}   R_{A-s/2}
//   S_t    S_{t+s}      V_{B+t/2}    R_{B+t/2}    T_{t+s}
StripIsometry compose(const StripIsometry& p, const StripIsometry& q) {
    using I = StripIsometry;
    const Scalar& a = p.param();
    const Scalar& b = q.param();
    switch (p.kind()) {
        case Kind::Translation:
            switch (q.kind()) {
                case Kind::Translation: return I::translation(a + b);
                case Kind::Rotation: return I::rotation(b + a / 2);
                case Kind::VerticalMirror: return I::vertical_mirror(b + a / 2);
                case Kind::Glide: return I::glide(a + b);
            }
            break;
        case Kind::Rotation:
            switch (q.kind()) {
                case Kind::Translation: return I::rotation(a - b / 2);
                case Kind::Rotation: return I::translation((a - b) * 2);
                case Kind::VerticalMirror: return I::glide((a - b) * 2);
                case Kind::Glide: return I::vertical_mirror(a - b / 2);
            }
            break;
        case Kind::VerticalMirror:
            switch (q.kind()) {
                case Kind::Translation: return I::vertical_mirror(a - b / 2);
                case Kind::Rotation: return I::glide((a - b) * 2);
                case Kind::VerticalMirror: return I::translation((a - b) * 2);
                case Kind::Glide: return I::rotation(a - b / 2);
            }
            break;
        case Kind::Glide:
            switch (q.kind()) {
                case Kind::Translation: return I::glide(a + b);
                case Kind::Rotation: return I::vertical_mirror(b + a / 2);
                case Kind::VerticalMirror: return I::rotation(b + a / 2);
                case Kind::Glide: return I::translation(a + b);
            }
            break;
    }
    return {};
}

StripIsometry inverse(const StripIsometry& p) {
    switch (p.kind()) {
        case Kind::Translation: return StripIsometry::translation(-p.param());
        case Kind::Glide: return StripIsometry::glide(-p.param());
        case Kind::Rotation:
        case Kind::VerticalMirror: return p;
    }
    return p;
}

Point apply(const StripIsometry& p, const Point& pt) {
    const Scalar& a = p.param();
    switch (p.kind()) {
        case Kind::Translation: return {pt.x + a, pt.y};
        case Kind::Rotation: return {a * 2 - pt.x, -pt.y};
        case Kind::VerticalMirror: return {a * 2 - pt.x, pt.y};
        case Kind::Glide: return {pt.x + a, -pt.y};
    }
    return pt;
}

Kind compact_product(Kind p, Kind q) {
    // Kinds form the Klein four-group: T is the identity, every kind squares
    // to T, and the product of two distinct non-T kinds is the third.
    static constexpr Kind table[4][4] = {
        {Kind::Translation, Kind::Rotation, Kind::VerticalMirror, Kind::Glide},
        {Kind::Rotation, Kind::Translation, Kind::Glide, Kind::VerticalMirror},
        {Kind::VerticalMirror, Kind::Glide, Kind::Translation, Kind::Rotation},
        {Kind::Glide, Kind::VerticalMirror, Kind::Rotation, Kind::Translation},
    };
    return table[static_cast<int>(p)][static_cast<int>(q)];
}

}  // namespace frieze
