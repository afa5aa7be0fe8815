#include "frieze/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "frieze/error.hpp"

namespace frieze {

namespace {

struct TagNames {
    TypeTag tag;
    std::string_view generators;
    std::string_view crystallographic;
    std::string_view enumerator;
};

constexpr std::array<TagNames, 7> tag_names{{
    {TypeTag::T, "<T>", "p1", "T"},
    {TypeTag::TR, "<T,R>", "p2", "TR"},
    {TypeTag::TV, "<T,V>", "p1m1", "TV"},
    {TypeTag::TS0, "<T,S0>", "p11m", "TS0"},
    {TypeTag::TSg, "<T,S'>", "p11g", "TSg"},
    {TypeTag::TRVS0, "<T,R,V,S0>", "p2mm", "TRVS0"},
    {TypeTag::TRVSg, "<T,R,V,S'>", "p2mg", "TRVSg"},
}};

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out.push_back(c);
    return out;
}

std::string anchor_str(const std::optional<Scalar>& a) { return a ? a->str() : "none"; }

// Group under construction, one representative canonical offset per
// (sigma, mu) class, indexed like Kind. Offsets in a class form a coset of
// the translation lattice, so representatives are kept reduced mod it.
struct Closure {
    Scalar lattice;  // 0 until a nonzero translation appears
    std::array<std::optional<Scalar>, 4> reps{Scalar(0), std::nullopt, std::nullopt, std::nullopt};

    Scalar reduce(const Scalar& c) const { return lattice.is_zero() ? c : mod(c, lattice); }

    void add_translation(const Scalar& t) {
        if (!t.is_zero()) lattice = gcd(lattice, t);
    }

    void insert(const StripIsometry& p) {
        CanonicalForm f = canonical(p);
        auto k = static_cast<std::size_t>(p.kind());
        if (k == 0) {
            add_translation(f.c);
            return;
        }
        if (!reps[k]) {
            reps[k] = reduce(f.c);
        } else {
            // Two members of one class differ by a translation.
            add_translation(f.c - *reps[k]);
        }
    }

    void normalize() {
        for (auto& r : reps)
            if (r) r = reduce(*r);
    }

    friend bool operator==(const Closure&, const Closure&) = default;
};

StripIsometry representative(std::size_t cls, const Scalar& offset) {
    constexpr std::array<std::pair<int, int>, 4> sm{{{1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};
    return from_canonical({sm[cls].first, sm[cls].second, offset});
}

}  // namespace

std::string_view generator_name(TypeTag tag) { return tag_names[static_cast<int>(tag)].generators; }

std::string_view crystallographic_name(TypeTag tag) {
    return tag_names[static_cast<int>(tag)].crystallographic;
}

TypeTag parse_tag(std::string_view text) {
    std::string s = strip_spaces(text);
    for (const auto& n : tag_names) {
        if (s == n.generators || s == n.crystallographic || s == n.enumerator) return n.tag;
    }
    // Common spellings of the generator names.
    if (s == "<T,S_0>" || s == "<T,S₀>") return TypeTag::TS0;
    if (s == "<T,R,V,S_0>" || s == "<T,R,V,S₀>") return TypeTag::TRVS0;
    throw ParseError("unknown frieze type '" + std::string(text) + "'");
}

std::string_view glide_phase_name(GlidePhase g) {
    switch (g) {
        case GlidePhase::None: return "none";
        case GlidePhase::Zero: return "zero";
        case GlidePhase::Half: return "half";
    }
    return "none";
}

TypeTag tag_from_flags(const SymmetryFlags& f) {
    if (f.has_horizontal_reflection && f.has_proper_glide) {
        throw InconsistentFlags("horizontal reflection and proper glide together");
    }
    bool glide = f.has_horizontal_reflection || f.has_proper_glide;
    int count = int(f.has_rotation) + int(f.has_vertical_mirror) + int(glide);
    if (count == 2) {
        // R ∘ S = V, S ∘ V = R, V ∘ R = S: any two force the third.
        throw InconsistentFlags("two of rotation/vertical mirror/glide without the third");
    }
    if (count == 0) return TypeTag::T;
    if (count == 3) return f.has_horizontal_reflection ? TypeTag::TRVS0 : TypeTag::TRVSg;
    if (f.has_rotation) return TypeTag::TR;
    if (f.has_vertical_mirror) return TypeTag::TV;
    return f.has_horizontal_reflection ? TypeTag::TS0 : TypeTag::TSg;
}

SymmetryFlags flags_of(TypeTag tag) {
    switch (tag) {
        case TypeTag::T: return {};
        case TypeTag::TR: return {true, false, false, false};
        case TypeTag::TV: return {false, true, false, false};
        case TypeTag::TS0: return {false, false, true, false};
        case TypeTag::TSg: return {false, false, false, true};
        case TypeTag::TRVS0: return {true, true, true, false};
        case TypeTag::TRVSg: return {true, true, false, true};
    }
    return {};
}

std::string FriezeGroup::str() const {
    std::ostringstream os;
    os << "tag=" << crystallographic_name(tag) << " period=" << period
       << " rot_anchor=" << anchor_str(rot_anchor) << " mirror_anchor=" << anchor_str(mirror_anchor)
       << " glide=" << glide_phase_name(glide);
    return os.str();
}

FriezeGroup FriezeGroup::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::optional<TypeTag> tag;
    std::optional<Scalar> period;
    FriezeGroup g;
    std::optional<GlidePhase> glide;
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "tag") {
            tag = parse_tag(value);
        } else if (key == "period") {
            period = Scalar::parse(value);
        } else if (key == "rot_anchor") {
            if (value != "none") g.rot_anchor = Scalar::parse(value);
        } else if (key == "mirror_anchor") {
            if (value != "none") g.mirror_anchor = Scalar::parse(value);
        } else if (key == "glide") {
            if (value == "none") glide = GlidePhase::None;
            else if (value == "zero") glide = GlidePhase::Zero;
            else if (value == "half") glide = GlidePhase::Half;
            else throw ParseError("glide must be none, zero or half");
        } else {
            throw ParseError("unknown group field '" + key + "'");
        }
    }
    if (!tag || !period) throw ParseError("group text needs tag= and period=");
    if (*period <= Scalar(0)) throw ParseError("period must be positive");
    g.tag = *tag;
    g.period = *period;
    SymmetryFlags want = flags_of(g.tag);
    g.glide = glide.value_or(want.has_horizontal_reflection ? GlidePhase::Zero
                             : want.has_proper_glide       ? GlidePhase::Half
                                                           : GlidePhase::None);
    SymmetryFlags have{g.rot_anchor.has_value(), g.mirror_anchor.has_value(),
                       g.glide == GlidePhase::Zero, g.glide == GlidePhase::Half};
    if (have != want) throw ParseError("group fields do not match tag " + std::string(generator_name(g.tag)));
    // Re-derive through the closure so anchors are canonical and the
    // TRVS0/TRVSg anchor relation is enforced.
    FriezeGroup closed = from_generators(generators(g));
    if (closed.tag != g.tag || closed.period != g.period) {
        throw ParseError("anchors are incompatible with tag " + std::string(generator_name(g.tag)));
    }
    return closed;
}

FriezeGroup from_generators(std::span<const StripIsometry> gens) {
    if (gens.empty()) throw std::invalid_argument("from_generators: empty generator set");
    Closure cl;
    for (const auto& g : gens) cl.insert(g);
    cl.normalize();
    // Each round multiplies every pair of class representatives. The lattice
    // only ever shrinks to a divisor and all offsets stay in (1/D)Z for the
    // common denominator D, so this reaches a fixpoint.
    for (;;) {
        Closure before = cl;
        for (std::size_t i = 0; i < 4; ++i) {
            if (!before.reps[i]) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (!before.reps[j]) continue;
                cl.insert(compose(representative(i, *before.reps[i]),
                                  representative(j, *before.reps[j])));
            }
        }
        cl.normalize();
        if (cl == before) break;
    }
    if (cl.lattice.is_zero()) throw NotAFrieze();

    FriezeGroup g;
    g.period = cl.lattice;
    Scalar half = g.period / 2;
    if (cl.reps[1]) g.rot_anchor = mod(*cl.reps[1] / 2, half);
    if (cl.reps[2]) g.mirror_anchor = mod(*cl.reps[2] / 2, half);
    if (cl.reps[3]) g.glide = cl.reps[3]->is_zero() ? GlidePhase::Zero : GlidePhase::Half;
    g.tag = tag_from_flags({g.rot_anchor.has_value(), g.mirror_anchor.has_value(),
                            g.glide == GlidePhase::Zero, g.glide == GlidePhase::Half});
    return g;
}

FriezeGroup standard_group(TypeTag tag, const Scalar& period, const Scalar& anchor) {
    if (period <= Scalar(0)) throw std::invalid_argument("standard_group: period must be positive");
    FriezeGroup g;
    g.tag = tag;
    g.period = period;
    Scalar half = period / 2;
    SymmetryFlags f = flags_of(tag);
    if (f.has_rotation) g.rot_anchor = mod(anchor, half);
    if (f.has_vertical_mirror) {
        Scalar offset = tag == TypeTag::TRVSg ? period / 4 : Scalar(0);
        g.mirror_anchor = mod(anchor + offset, half);
    }
    if (f.has_horizontal_reflection) g.glide = GlidePhase::Zero;
    if (f.has_proper_glide) g.glide = GlidePhase::Half;
    return g;
}

std::vector<StripIsometry> generators(const FriezeGroup& g) {
    std::vector<StripIsometry> out{StripIsometry::translation(g.period)};
    if (g.rot_anchor) out.push_back(StripIsometry::rotation(*g.rot_anchor));
    if (g.mirror_anchor) out.push_back(StripIsometry::vertical_mirror(*g.mirror_anchor));
    if (g.glide == GlidePhase::Zero) out.push_back(StripIsometry::glide(0));
    if (g.glide == GlidePhase::Half) out.push_back(StripIsometry::glide(g.period / 2));
    return out;
}

bool contains(const FriezeGroup& g, const StripIsometry& p) {
    // Compare parameters against the family base; R and V families step by
    // period/2 in the fixed-point coordinate, the others by period.
    switch (p.kind()) {
        case Kind::Translation: return divides(g.period, p.param());
        case Kind::Rotation:
            return g.rot_anchor && divides(g.period / 2, p.param() - *g.rot_anchor);
        case Kind::VerticalMirror:
            return g.mirror_anchor && divides(g.period / 2, p.param() - *g.mirror_anchor);
        case Kind::Glide:
            if (g.glide == GlidePhase::None) return false;
            return divides(g.period,
                           p.param() - (g.glide == GlidePhase::Half ? g.period / 2 : Scalar(0)));
    }
    return false;
}

std::vector<StripIsometry> elements_in_window(const FriezeGroup& g, const Scalar& x0,
                                              const Scalar& x1) {
    if (!(x0 < x1)) throw std::invalid_argument("elements_in_window: need x0 < x1");
    std::vector<StripIsometry> out;
    auto family = [&](const Scalar& base, const Scalar& step, auto make) {
        Scalar first = base + step * Scalar(((x0 - base) / step).floor());
        if (first < x0) first += step;
        for (Scalar x = first; x < x1; x += step) out.push_back(make(x));
    };
    family(Scalar(0), g.period, StripIsometry::translation);
    if (g.rot_anchor) family(*g.rot_anchor, g.period / 2, StripIsometry::rotation);
    if (g.mirror_anchor) family(*g.mirror_anchor, g.period / 2, StripIsometry::vertical_mirror);
    if (g.glide != GlidePhase::None) {
        family(g.glide == GlidePhase::Half ? g.period / 2 : Scalar(0), g.period,
               StripIsometry::glide);
    }
    std::sort(out.begin(), out.end(), kind_param_less);
    return out;
}

}  // namespace frieze
