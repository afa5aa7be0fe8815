#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "frieze/frieze.hpp"
#include "support/fixtures.hpp"

using namespace frieze;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("frieze_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST(Cli, Compose) {
    auto r = run({"compose", "R(3)", "V(1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "S(4)\n");
    EXPECT_EQ(run({"compose", "T(1/2)", "T(1/3)"}).out, "T(5/6)\n");
}

TEST(Cli, ClassifyGensMatchesLibrary) {
    auto r = run({"classify-gens", "R(0)", "V(1/2)"});
    EXPECT_EQ(r.code, 0);
    std::vector<StripIsometry> g{StripIsometry::rotation(0), StripIsometry::vertical_mirror(Scalar(1, 2))};
    FriezeGroup lib = from_generators(g);
    EXPECT_EQ(r.out, lib.str() + " gens=<T,R,V,S'>\n");
    EXPECT_NE(r.out.find("tag=p2mg period=2"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
    auto r = run({"classify-gens", "V(0)"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not a frieze"), std::string::npos);
    EXPECT_EQ(run({"detect", "/nonexistent/x.pgm"}).code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"compose", "R(3)"}).code, 2);
    EXPECT_EQ(run({"compose", "Q(3)", "V(1)"}).code, 2);
    EXPECT_EQ(run({"wrap", "--tag", "p3", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"wrap", "--tag", "p2", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"generate", "--tag", "p1", "--supersample", "3"}).code, 2);
}

TEST(Cli, WrapMatchesLibrary) {
    auto r = run({"wrap", "--tag", "p2mm", "--n", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, wrap_report(TypeTag::TRVS0, 8).str() + "\n");
}

TEST(Cli, VerifyAndPrintTable) {
    auto v = run({"verify-table", "--seed", "5", "--samples", "100"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, verify_table(5, 100).str());
    EXPECT_EQ(run({"print-table"}).out, print_table());
}

TEST(Cli, GenerateToStdoutIsSvg) {
    auto r = run({"generate", "--tag", "p11g", "--copies", "2"});
    EXPECT_EQ(r.code, 0);
    Motif m = bundled_flag_motif();
    EXPECT_EQ(r.out, render_svg(generate(m, standard_group(TypeTag::TSg, m.cell_width), 2)));
}

TEST_F(CliFiles, GenerateDetectTransformWrap) {
    std::string pgm = path("p2mg.pgm"), svg = path("p2mg.svg");
    auto g = run({"generate", "--tag", "p2mg", "--copies", "2", "--px", "32", "--pgm", pgm, "--svg", svg});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_TRUE(fs::exists(svg));
    Image img = read_pgm_file(pgm);
    EXPECT_EQ(img.pixels, fixtures::standard_raster(TypeTag::TRVSg).pixels);

    auto d = run({"detect", pgm, "--eta", "0", "--delta", "0"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, classify_image(img, DetectionTolerance::exact()).str() + "\n");

    std::string sheared = path("sheared.pgm");
    auto t = run({"transform", pgm, "--op", "scale_uniform", "--k", "2", "-o", sheared});
    EXPECT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(read_pgm_file(sheared).pixels,
              transform_image(img, TransformOp::ScaleUniform, Scalar(2)).pixels);
    EXPECT_EQ(run({"transform", pgm, "--op", "spin", "--k", "2", "-o", sheared}).code, 2);

    std::string one = path("one.pgm"), ring = path("ring.pgm");
    ASSERT_EQ(run({"generate", "--tag", "p2mg", "--copies", "1", "--pgm", one}).code, 0);
    auto w = run({"wrap", "--tag", "p2mg", "--n", "6", "--texture", one, "-o", ring});
    EXPECT_EQ(w.code, 0) << w.err;
    EXPECT_EQ(read_pgm_file(ring).width, 384);
    EXPECT_EQ(run({"wrap", "--tag", "p2mg", "--n", "6", "--texture", one}).code, 2);
}

TEST_F(CliFiles, MotifErrors) {
    std::string bad = path("bad.motif");
    {
        std::ofstream f(bad);
        f << "cell 1 height 1\npolygon 0,0 2,0 0,1\n";
    }
    auto r = run({"generate", "--tag", "p1", "--motif", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
}
