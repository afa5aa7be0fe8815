#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "frieze/frieze.hpp"

using namespace frieze;
using I = StripIsometry;

namespace {

std::vector<I> random_isometries(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> kind(0, 3), num(-500, 500), den(1, 48);
    std::vector<I> out;
    for (std::size_t i = 0; i < n; ++i) {
        Scalar p(num(rng), den(rng));
        switch (kind(rng)) {
            case 0: out.push_back(I::translation(p)); break;
            case 1: out.push_back(I::rotation(p)); break;
            case 2: out.push_back(I::vertical_mirror(p)); break;
            default: out.push_back(I::glide(p)); break;
        }
    }
    return out;
}

void BM_Compose(benchmark::State& state) {
    auto xs = random_isometries(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(xs[i & 1023], xs[(i + 1) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_Compose);

void BM_FromGenerators(benchmark::State& state) {
    std::vector<I> gens{I::rotation(Scalar(1, 3)), I::vertical_mirror(Scalar(5, 12)), I::translation(Scalar(7, 2))};
    for (auto _ : state) benchmark::DoNotOptimize(from_generators(gens));
}
BENCHMARK(BM_FromGenerators);

void BM_VerifyTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_table(default_table_seed, 1000));
}
BENCHMARK(BM_VerifyTable)->Unit(benchmark::kMillisecond);

void BM_Rasterize(benchmark::State& state) {
    Motif m = bundled_flag_motif();
    Scene s = generate(m, standard_group(TypeTag::TRVSg, m.cell_width), 2);
    const int ss = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rasterize(s, 32, ss));
}
BENCHMARK(BM_Rasterize)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyImage(benchmark::State& state) {
    Motif m = bundled_flag_motif();
    const auto tag = static_cast<TypeTag>(state.range(0));
    Image img = rasterize(generate(m, standard_group(tag, m.cell_width), 2), 32);
    for (auto _ : state) benchmark::DoNotOptimize(classify_image(img, DetectionTolerance::exact()));
    state.SetLabel(std::string(crystallographic_name(tag)));
}
BENCHMARK(BM_ClassifyImage)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
