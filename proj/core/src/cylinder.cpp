#include "frieze/cylinder.hpp"

#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

std::string substitute_n(std::string_view family, int n) {
    std::string out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i] == '2' && i + 1 < family.size() && family[i + 1] == 'n') {
            out += std::to_string(2 * n);
            ++i;
        } else if (family[i] == 'n') {
            out += std::to_string(n);
        } else {
            out += family[i];
        }
    }
    return out;
}

std::string_view family_of(TypeTag tag) {
    switch (tag) {
        case TypeTag::T: return "Cn";
        case TypeTag::TR: return "Dn";
        case TypeTag::TV: return "Cnv";
        case TypeTag::TS0: return "Cnh";
        case TypeTag::TSg: return "S2n";
        case TypeTag::TRVS0: return "Dnh";
        case TypeTag::TRVSg: return "Dnd";
    }
    return "Cn";
}

}  // namespace

CylinderReport wrap_report(TypeTag tag, int n) {
    if (n < 1) throw std::invalid_argument("wrap_report: n must be positive");
    const SymmetryFlags f = flags_of(tag);
    CylinderReport r;
    r.n = n;
    r.rotation_order = n;
    r.halfturn_axes = f.has_rotation ? n : 0;
    r.mirror_planes = f.has_vertical_mirror ? n : 0;
    r.horizontal_plane = f.has_horizontal_reflection;
    r.rotoreflection = f.has_proper_glide;
    r.label_family = family_of(tag);
    r.label = substitute_n(r.label_family, n);
    return r;
}

std::string CylinderReport::str() const {
    std::ostringstream os;
    os << "n=" << n << " " << label_family << ": rot=2pi/" << rotation_order
       << " mirrors=" << mirror_planes << " halfturns=" << halfturn_axes
       << " hplane=" << (horizontal_plane ? "yes" : "no")
       << " rotoreflection=" << (rotoreflection ? "yes" : "no") << " label=" << label
       << " (conventional)";
    return os.str();
}

Image wrap_texture(const Image& period_image, int n) {
    if (n < 1) throw std::invalid_argument("wrap_texture: n must be positive");
    const int w = period_image.width;
    Image out(w * n, period_image.height);
    out.maxval = period_image.maxval;
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) out.at(x, y) = period_image.at(x % w, y);
    out.comments.push_back("cyclic-x periods=" + std::to_string(n) + " period_px=" +
                           std::to_string(w));
    return out;
}

}  // namespace frieze
