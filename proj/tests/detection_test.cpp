#include <gtest/gtest.h>

#include <random>

#include "frieze/detection.hpp"
#include "frieze/error.hpp"
#include "frieze/image.hpp"
#include "support/fixtures.hpp"

using namespace frieze;

namespace {

Image constant_image(int w, int h, std::uint8_t v) {
    Image img;
    img.width = w;
    img.height = h;
    img.pixels.assign(static_cast<std::size_t>(w) * h, v);
    return img;
}

Image noise_image(int w, int h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, 255);
    Image img = constant_image(w, h, 0);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(d(rng));
    return img;
}

Image shift_x(const Image& img, int dx) {
    Image out = img;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.pixels[static_cast<std::size_t>(y) * img.width + ((x + dx) % img.width)] = img.at(x, y);
    return out;
}

}  // namespace

TEST(Pgm, ReadsMinimalImage) {
    std::vector<std::uint8_t> bytes{'P', '5', '\n', '2', ' ', '1', '\n', '2', '5', '5', '\n', 0, 255};
    Image img = read_pgm(bytes);
    EXPECT_EQ(img.width, 2);
    EXPECT_EQ(img.height, 1);
    EXPECT_EQ(img.pixels, (std::vector<std::uint8_t>{0, 255}));
}

TEST(Pgm, RejectsOtherFormats) {
    std::string ascii = "P2\n2 1\n255\n0 255\n";
    EXPECT_THROW(read_pgm(std::vector<std::uint8_t>(ascii.begin(), ascii.end())), MalformedPgm);
    std::string deep = "P5\n1 1\n65535\n";
    std::vector<std::uint8_t> b(deep.begin(), deep.end());
    b.push_back(0);
    b.push_back(0);
    EXPECT_THROW(read_pgm(b), MalformedPgm);
    std::string truncated = "P5\n2 2\n255\n";
    std::vector<std::uint8_t> t(truncated.begin(), truncated.end());
    t.push_back(7);
    EXPECT_THROW(read_pgm(t), MalformedPgm);
    EXPECT_THROW(read_pgm(std::vector<std::uint8_t>{}), MalformedPgm);
}

TEST(Pgm, CommentsAndRoundTrip) {
    std::string text = "P5\n# made by hand\n3 1 # width height\n255\n";
    std::vector<std::uint8_t> b(text.begin(), text.end());
    b.insert(b.end(), {10, 20, 30});
    Image img = read_pgm(b);
    ASSERT_EQ(img.comments.size(), 2u);
    EXPECT_EQ(img.at(2, 0), 30);
    Image again = read_pgm(write_pgm(img));
    EXPECT_EQ(again.pixels, img.pixels);
    EXPECT_EQ(again.comments, img.comments);
    EXPECT_EQ(write_pgm(again), write_pgm(img));
}

TEST(FindPeriod, Examples) {
    EXPECT_EQ(find_period(constant_image(10, 4, 255), DetectionTolerance::exact()), 1);
    EXPECT_EQ(find_period(fixtures::standard_raster(TypeTag::TR), DetectionTolerance::exact()), 64);
    EXPECT_EQ(find_period(fixtures::standard_raster(TypeTag::T, 3), DetectionTolerance::exact()), 64);
    EXPECT_THROW(find_period(noise_image(64, 32, 1), DetectionTolerance::exact(), true), NoPeriod);
    EXPECT_EQ(find_period(noise_image(64, 32, 1), DetectionTolerance::exact()), 64);
}

TEST(Probe, SinusoidHasAllFourSymmetries) {
    Image img = rasterize(fixtures::sinusoid_scene(Scalar(2)), 32);
    auto tol = DetectionTolerance::exact();
    int p = find_period(img, tol);
    EXPECT_EQ(p, 64);
    auto rot = probe_symmetry(img, p, ProbeKind::Rotation, tol);
    auto mir = probe_symmetry(img, p, ProbeKind::VerticalMirror, tol);
    ASSERT_TRUE(rot.parameter && mir.parameter);
    EXPECT_FALSE(probe_symmetry(img, p, ProbeKind::HorizontalReflection, tol).parameter);
    EXPECT_TRUE(probe_symmetry(img, p, ProbeKind::ProperGlide, tol).parameter);
    // mirror - center = quarter period (mod half period)
    EXPECT_EQ(fixtures::wrap_mod(mir.parameter->value() - rot.parameter->value(), p / 2.0), p / 4.0);
}

TEST(Probe, HorizontalReflectionIsParameterFree) {
    Image img = fixtures::standard_raster(TypeTag::TS0);
    auto r = probe_symmetry(img, 64, ProbeKind::HorizontalReflection, DetectionTolerance::exact());
    ASSERT_TRUE(r.parameter);
    EXPECT_EQ(r.parameter->twice, 0);
    EXPECT_EQ(r.mismatch, 0.0);
}

TEST(Probe, OddPeriodGlideThrows) {
    Image img = constant_image(9, 4, 0);
    img.pixels[0] = 255;
    EXPECT_THROW(probe_symmetry(img, 9, ProbeKind::ProperGlide, DetectionTolerance::exact()), OddPeriodGlide);
}

TEST(Classify, ConstantImageIsFullGroupWithReflection) {
    auto r = classify_image(constant_image(16, 8, 200), DetectionTolerance::exact());
    EXPECT_EQ(r.tag, TypeTag::TRVS0);
    EXPECT_EQ(r.period_px, 1);
}

TEST(Classify, NoiseWithoutRepeatThrows) {
    EXPECT_THROW(classify_image(noise_image(40, 20, 3), DetectionTolerance::exact(), true), NoPeriod);
    EXPECT_EQ(classify_image(noise_image(40, 20, 3), DetectionTolerance::exact()).tag, TypeTag::T);
}

TEST(Classify, ReportText) {
    auto r = classify_image(fixtures::standard_raster(TypeTag::TRVSg), DetectionTolerance::exact());
    EXPECT_EQ(r.str(), "tag=p2mg period=64 rot=31.5 mirror=15.5 glide=half mismatch=0.0 gens=<T,R,V,S'>");
    EXPECT_EQ(HalfPixel{7}.str(), "3.5");
    EXPECT_EQ(HalfPixel{38}.str(), "19");
}

TEST(Classify, OddPeriodGlideIsUpsampled) {
    // Period 45: the lower band is the upper band moved by 22.5 px, which
    // nearest-pixel sampling can only approximate.
    Image img = constant_image(90, 8, 255);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 90; ++x) {
            bool dark = y < 4 ? x % 45 < 20 : ((2 * x - 45) % 90 + 90) % 90 < 40;
            if (dark) img.pixels[static_cast<std::size_t>(y) * 90 + x] = 0;
        }
    auto r = classify_image(img, {0.03, 10});
    EXPECT_EQ(r.period_px, 45);
    EXPECT_TRUE(r.flags.has_proper_glide);
    // The bands are symmetric, so half-turns and mirrors come along.
    EXPECT_EQ(r.tag, TypeTag::TRVSg);
    EXPECT_GT(r.mismatch[4], 0.0);
}

class ClassifyByTag : public ::testing::TestWithParam<TypeTag> {};

TEST_P(ClassifyByTag, ExactRoundTrip) {
    auto r = classify_image(fixtures::standard_raster(GetParam()), DetectionTolerance::exact());
    EXPECT_EQ(r.tag, GetParam());
    EXPECT_EQ(r.period_px, 64);
    EXPECT_EQ(r.max_accepted_mismatch(), 0.0);
}

TEST_P(ClassifyByTag, SupersamplingKeepsTag) {
    for (int ss : {2, 4})
        EXPECT_EQ(classify_image(fixtures::standard_raster(GetParam(), 2, ss)).tag, GetParam()) << ss;
}

TEST_P(ClassifyByTag, LooserToleranceNeverLosesSymmetry) {
    Image img = fixtures::standard_raster(GetParam(), 2, 2);
    SymmetryFlags prev{};
    bool first = true;
    for (double eta : {0.0, 0.005, 0.02, 0.05}) {
        for (int delta : {0, 10, 40}) {
            auto r = classify_image(img, {eta, delta});
            if (!first && r.period_px == 64) {
                EXPECT_TRUE(!prev.has_rotation || r.flags.has_rotation);
                EXPECT_TRUE(!prev.has_vertical_mirror || r.flags.has_vertical_mirror);
            }
            if (r.period_px == 64) prev = r.flags;
            first = false;
        }
    }
}

TEST_P(ClassifyByTag, ShiftMovesAnchorsByShift) {
    Image img = fixtures::standard_raster(GetParam());
    auto base = classify_image(img, DetectionTolerance::exact());
    for (int dx : {1, 5, 17, 40}) {
        auto r = classify_image(shift_x(img, dx), DetectionTolerance::exact());
        EXPECT_EQ(r.tag, base.tag);
        double half = r.period_px / 2.0;
        if (base.rot_center_px) {
            ASSERT_TRUE(r.rot_center_px);
            EXPECT_EQ(fixtures::wrap_mod(r.rot_center_px->value() - base.rot_center_px->value() - dx, half), 0.0);
        }
        if (base.mirror_axis_px) {
            ASSERT_TRUE(r.mirror_axis_px);
            EXPECT_EQ(fixtures::wrap_mod(r.mirror_axis_px->value() - base.mirror_axis_px->value() - dx, half), 0.0);
        }
    }
}

TEST_P(ClassifyByTag, UniformScaleKeepsTag) {
    Image big = transform_image(fixtures::standard_raster(GetParam()), TransformOp::ScaleUniform, Scalar(2));
    EXPECT_EQ(big.width, 256);
    EXPECT_EQ(big.height, 128);
    EXPECT_EQ(classify_image(big, DetectionTolerance::exact()).tag, GetParam());
}

INSTANTIATE_TEST_SUITE_P(Frieze, ClassifyByTag, ::testing::ValuesIn(all_tags),
                         [](const auto& info) { return std::string(crystallographic_name(info.param)); });

TEST(Transform, ShearDemotesMirrorButKeepsHalfTurn) {
    auto sheared = [](TypeTag t) {
        return classify_image(transform_image(fixtures::standard_raster(t), TransformOp::ShearX, Scalar(1, 2)),
                              DetectionTolerance::exact())
            .tag;
    };
    EXPECT_EQ(sheared(TypeTag::TV), TypeTag::T);
    EXPECT_EQ(sheared(TypeTag::TR), TypeTag::TR);
    EXPECT_EQ(sheared(TypeTag::T), TypeTag::T);
}

TEST(Transform, OpNamesAndShapes) {
    EXPECT_EQ(parse_transform_op("shear_x"), TransformOp::ShearX);
    EXPECT_EQ(transform_op_name(TransformOp::ScaleY), "scale_y");
    EXPECT_THROW(parse_transform_op("rotate"), ParseError);
    Image img = fixtures::standard_raster(TypeTag::T);
    Image sx = transform_image(img, TransformOp::ScaleX, Scalar(2));
    Image sy = transform_image(img, TransformOp::ScaleY, Scalar(2));
    EXPECT_EQ(sx.width, 256);
    EXPECT_EQ(sx.height, 64);
    EXPECT_EQ(sy.width, 128);
    EXPECT_EQ(sy.height, 128);
    EXPECT_EQ(sx.at(2 * 37 + 1, 10), img.at(37, 10));
    Image sh = transform_image(img, TransformOp::ShearX, Scalar(0));
    EXPECT_EQ(sh.pixels, img.pixels);
}

TEST(Transform, UpsampleDoublesColumns) {
    Image img = noise_image(5, 3, 9);
    Image up = upsample_x2(img);
    EXPECT_EQ(up.width, 10);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 10; ++x) EXPECT_EQ(up.at(x, y), img.at(x / 2, y));
}
