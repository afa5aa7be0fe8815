#pragma once

#include <string>

#include "frieze/group.hpp"
#include "frieze/image.hpp"

namespace frieze {

// Symmetries of the ring obtained by cutting n periods out of a frieze and
// gluing the ends:
//   T_period -> rotation by 2pi/n about the vertical axis
//   R        -> n horizontal half-turn axes
//   V        -> n vertical mirror planes
//   S0       -> the horizontal mirror plane
//   S'       -> a rotoreflection (horizontal mirror then rotation by pi/n)
struct CylinderReport {
    int n = 1;
    int rotation_order = 1;
    int halfturn_axes = 0;
    int mirror_planes = 0;
    bool horizontal_plane = false;
    bool rotoreflection = false;
    // Conventional point-group name (Cn, Cnv, Cnh, Dn, Dnd, Dnh, S2n with n
    // substituted). A naming convenience, not derived from the frieze.
    std::string label;
    std::string label_family;

    friend bool operator==(const CylinderReport&, const CylinderReport&) = default;

    // n=6 Cnv: rot=2pi/6 mirrors=6 halfturns=0 hplane=no rotoreflection=no label=C6v (conventional)
    std::string str() const;
};

CylinderReport wrap_report(TypeTag tag, int n);

// n side-by-side copies of a one-period image, marked cyclic in the PGM
// comments (left and right edges are identified).
Image wrap_texture(const Image& period_image, int n);

}  // namespace frieze
