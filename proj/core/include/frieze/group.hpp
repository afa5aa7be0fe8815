#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frieze/isometry.hpp"
#include "frieze/scalar.hpp"

namespace frieze {

// The seven frieze types, in the order <T>, <T,R>, <T,V>, <T,S0>, <T,S'>,
// <T,R,V,S0>, <T,R,V,S'>.
enum class TypeTag { T, TR, TV, TS0, TSg, TRVS0, TRVSg };

inline constexpr std::array<TypeTag, 7> all_tags{TypeTag::T,   TypeTag::TR,    TypeTag::TV,
                                                 TypeTag::TS0, TypeTag::TSg,   TypeTag::TRVS0,
                                                 TypeTag::TRVSg};

// "<T,R,V,S'>" style.
std::string_view generator_name(TypeTag tag);
// "p2mg" style.
std::string_view crystallographic_name(TypeTag tag);
// Accepts either naming, plus the enumerator spelling ("TRVSg").
TypeTag parse_tag(std::string_view text);

enum class GlidePhase { None, Zero, Half };

std::string_view glide_phase_name(GlidePhase g);

struct SymmetryFlags {
    bool has_rotation = false;
    bool has_vertical_mirror = false;
    bool has_horizontal_reflection = false;
    bool has_proper_glide = false;
    friend bool operator==(const SymmetryFlags&, const SymmetryFlags&) = default;
};

// Throws InconsistentFlags when the combination cannot occur in a frieze
// group (R, V and the glide family come all together or at most one at a time;
// S0 and a proper glide exclude each other).
TypeTag tag_from_flags(const SymmetryFlags& f);
SymmetryFlags flags_of(TypeTag tag);

// A classified frieze group. Its elements are
//   T_{n*period}
//   R_{rot_anchor + n*period/2}        when rot_anchor is set
//   V_{mirror_anchor + n*period/2}     when mirror_anchor is set
//   S_{n*period} or S_{(n+1/2)*period} for glide Zero / Half
// Anchors are reduced into [0, period/2), so equal groups compare equal.
struct FriezeGroup {
    TypeTag tag = TypeTag::T;
    Scalar period{1};
    std::optional<Scalar> rot_anchor;
    std::optional<Scalar> mirror_anchor;
    GlidePhase glide = GlidePhase::None;

    friend bool operator==(const FriezeGroup&, const FriezeGroup&) = default;

    // tag=p2mg period=2 rot_anchor=0 mirror_anchor=1/2 glide=half
    std::string str() const;
    static FriezeGroup parse(std::string_view text);
};

// Closure of the generated group, classified. Throws NotAFrieze when the
// closure contains no nonzero translation.
FriezeGroup from_generators(std::span<const StripIsometry> gens);

FriezeGroup standard_group(TypeTag tag, const Scalar& period, const Scalar& anchor = Scalar(0));

// A generating set: T_period plus one representative per non-translation family.
std::vector<StripIsometry> generators(const FriezeGroup& g);

bool contains(const FriezeGroup& g, const StripIsometry& p);

// Elements whose parameter lies in [x0, x1), sorted by (kind, parameter).
std::vector<StripIsometry> elements_in_window(const FriezeGroup& g, const Scalar& x0,
                                              const Scalar& x1);

}  // namespace frieze
