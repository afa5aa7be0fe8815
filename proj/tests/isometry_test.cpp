#include <gtest/gtest.h>

#include <random>

#include "frieze/error.hpp"
#include "frieze/isometry.hpp"
#include "frieze/table_check.hpp"
#include "support/fixtures.hpp"

using namespace frieze;
using I = StripIsometry;

namespace {

Point pt(Scalar x, Scalar y) { return {x, y}; }

// The canonical action applied directly to a point.
Point act(const CanonicalForm& f, const Point& p) {
    return {p.x * Scalar(f.sigma) + f.c, p.y * Scalar(f.mu)};
}

}  // namespace

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical(I::translation(3)), (CanonicalForm{1, 1, Scalar(3)}));
    EXPECT_EQ(canonical(I::vertical_mirror(2)), (CanonicalForm{-1, 1, Scalar(4)}));
    EXPECT_EQ(canonical(I::glide(0)), (CanonicalForm{1, -1, Scalar(0)}));
}

TEST(Canonical, MirrorAboutTwoMatchesPointAction) {
    // x -> 4 - x, checked on x = 0, 1, 2
    const I v = I::vertical_mirror(2);
    for (int x = 0; x <= 2; ++x) {
        EXPECT_EQ(apply(v, pt(x, 1)), pt(4 - x, 1));
        EXPECT_EQ(act(canonical(v), pt(x, 1)), pt(4 - x, 1));
    }
}

TEST(FromCanonical, Examples) {
    EXPECT_EQ(from_canonical({1, 1, Scalar(0)}), I::identity());
    EXPECT_TRUE(from_canonical({1, 1, Scalar(0)}).is_identity());
    EXPECT_EQ(from_canonical({-1, -1, Scalar(5)}), I::rotation(Scalar(5, 2)));
    EXPECT_EQ(from_canonical({1, -1, Scalar(-2)}), I::glide(-2));
    // R_{5/2} acts as x -> 5 - x, y -> -y
    EXPECT_EQ(apply(I::rotation(Scalar(5, 2)), pt(1, 3)), pt(4, -3));
}

TEST(Canonical, RoundTripAndActionAgree) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        I p = fixtures::random_isometry(rng);
        EXPECT_EQ(from_canonical(canonical(p)), p);
        Point q{fixtures::random_scalar(rng), fixtures::random_scalar(rng)};
        EXPECT_EQ(apply(p, q), act(canonical(p), q));
    }
}

TEST(Compose, ReferenceExamples) {
    EXPECT_EQ(compose(I::translation(1), I::translation(2)), I::translation(3));
    for (int a = -3; a <= 3; ++a) EXPECT_EQ(compose(I::rotation(a), I::rotation(a)), I::identity());
    EXPECT_EQ(compose(I::rotation(3), I::vertical_mirror(1)), I::glide(4));
    EXPECT_EQ(compose(I::glide(1), I::rotation(0)), I::vertical_mirror(Scalar(1, 2)));
}

TEST(Compose, GlideFactorsThroughHorizontalReflection) {
    // S_t = T_t ∘ S_0, T_t ∘ S_s = S_t ∘ T_s = S_{s+t}
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Scalar t = fixtures::random_scalar(rng), s = fixtures::random_scalar(rng);
        EXPECT_EQ(compose(I::translation(t), I::glide(0)), I::glide(t));
        EXPECT_EQ(compose(I::translation(t), I::glide(s)), I::glide(s + t));
        EXPECT_EQ(compose(I::glide(t), I::translation(s)), I::glide(s + t));
        EXPECT_EQ(compose(I::glide(t), I::glide(s)), I::translation(s + t));
    }
}

TEST(Compose, OrderIsRightFactorFirst) {
    // T_1 ∘ V_0 reflects then shifts: x -> 1 - x, i.e. V_{1/2}; V_0 ∘ T_1 is V_{-1/2}.
    EXPECT_EQ(compose(I::translation(1), I::vertical_mirror(0)), I::vertical_mirror(Scalar(1, 2)));
    EXPECT_EQ(compose(I::vertical_mirror(0), I::translation(1)), I::vertical_mirror(Scalar(-1, 2)));
    Point x = pt(Scalar(1, 3), 1);
    EXPECT_EQ(apply(compose(I::translation(1), I::vertical_mirror(0)), x),
              apply(I::translation(1), apply(I::vertical_mirror(0), x)));
}

TEST(Compose, MatchesPointwiseCompositionForAllKindPairs) {
    std::mt19937_64 rng(17);
    for (Kind a : all_kinds) {
        for (Kind b : all_kinds) {
            for (int i = 0; i < 300; ++i) {
                I p = I::parse(std::string(1, kind_letter(a)) + "(" + fixtures::random_scalar(rng).str() + ")");
                I q = I::parse(std::string(1, kind_letter(b)) + "(" + fixtures::random_scalar(rng).str() + ")");
                I pq = compose(p, q);
                EXPECT_EQ(pq, from_canonical(canonical_product(canonical(p), canonical(q))));
                EXPECT_EQ(pq.kind(), compact_product(a, b));
                Point x{fixtures::random_scalar(rng), fixtures::random_scalar(rng)};
                EXPECT_EQ(apply(pq, x), apply(p, apply(q, x)));
            }
        }
    }
}

TEST(Compose, TriadIdentities) {
    EXPECT_EQ(compact_product(Kind::Rotation, Kind::Glide), Kind::VerticalMirror);
    EXPECT_EQ(compact_product(Kind::Glide, Kind::VerticalMirror), Kind::Rotation);
    EXPECT_EQ(compact_product(Kind::VerticalMirror, Kind::Rotation), Kind::Glide);
    EXPECT_EQ(compact_product(Kind::Rotation, Kind::VerticalMirror), Kind::Glide);
}

TEST(GroupLaws, AssociativityIdentityInverse) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 3000; ++i) {
        I a = fixtures::random_isometry(rng), b = fixtures::random_isometry(rng),
          c = fixtures::random_isometry(rng);
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_EQ(compose(I::identity(), a), a);
        EXPECT_EQ(compose(a, I::identity()), a);
        EXPECT_TRUE(compose(a, inverse(a)).is_identity());
        EXPECT_TRUE(compose(inverse(a), a).is_identity());
    }
}

TEST(GroupLaws, Involutions) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 500; ++i) {
        Scalar x = fixtures::random_scalar(rng);
        EXPECT_TRUE(compose(I::rotation(x), I::rotation(x)).is_identity());
        EXPECT_TRUE(compose(I::vertical_mirror(x), I::vertical_mirror(x)).is_identity());
        EXPECT_EQ(compose(I::glide(x), I::glide(x)), I::translation(x * 2));
    }
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(I::translation(5)), I::translation(-5));
    EXPECT_EQ(inverse(I::vertical_mirror(Scalar(7, 3))), I::vertical_mirror(Scalar(7, 3)));
    EXPECT_EQ(inverse(I::glide(Scalar(3, 2))), I::glide(Scalar(-3, 2)));
}

TEST(Apply, Examples) {
    EXPECT_EQ(apply(I::translation(2), pt(0, 1)), pt(2, 1));
    EXPECT_EQ(apply(I::rotation(1), pt(3, 2)), pt(-1, -2));
    EXPECT_EQ(act(canonical(I::rotation(1)), pt(3, 2)), pt(-1, -2));
    EXPECT_EQ(apply(I::glide(0), pt(4, -1)), pt(4, 1));
}

TEST(Apply, PreservesStripAxis) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        Point q = apply(fixtures::random_isometry(rng), pt(fixtures::random_scalar(rng), 0));
        EXPECT_TRUE(q.y.is_zero());
    }
}

TEST(TextForm, ParseAndPrint) {
    EXPECT_EQ(I::parse("T(3/2)"), I::translation(Scalar(3, 2)));
    EXPECT_EQ(I::parse("R(0)"), I::rotation(0));
    EXPECT_EQ(I::parse("V(-1/4)"), I::vertical_mirror(Scalar(-1, 4)));
    EXPECT_EQ(I::parse("S(1/2)"), I::glide(Scalar(1, 2)));
    EXPECT_TRUE(I::parse("S(0)").is_horizontal_reflection());
    EXPECT_EQ(I::glide(Scalar(-6, 4)).str(), "S(-3/2)");
    EXPECT_THROW(I::parse("X(1)"), ParseError);
    EXPECT_THROW(I::parse("R 1"), ParseError);
    EXPECT_THROW(I::parse("R()"), ParseError);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        I p = fixtures::random_isometry(rng);
        EXPECT_EQ(I::parse(p.str()), p);
    }
}
