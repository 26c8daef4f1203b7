#include "sepvol/estimators.hpp"
#include "sepvol/halton.hpp"
#include "sepvol/measures.hpp"
#include "sepvol/separability.hpp"
#include "sepvol/state_space.hpp"

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

namespace {

using namespace sepvol;
constexpr double kHalfPi = std::numbers::pi / 2.0;

void BM_HaltonPoint15(benchmark::State& state) {
    const HaltonStream stream(15, make_permutations(Scrambling::Seeded, 15, 1));
    std::vector<double> pt(15);
    std::uint64_t i = 1;
    for (auto _ : state) {
        stream.point(i++, pt);
        benchmark::DoNotOptimize(pt.data());
    }
}
BENCHMARK(BM_HaltonPoint15);

void BM_UnitaryFromCoords(benchmark::State& state) {
    const HaltonStream stream(12, make_permutations(Scrambling::Seeded, 12, 1));
    std::vector<double> pt(12);
    std::uint64_t i = 1;
    for (auto _ : state) {
        stream.point(i++, pt);
        UnitaryCoords uc;
        std::copy_n(pt.begin(), 12, uc.u.begin());
        const auto u = unitary_from_coords(uc);
        benchmark::DoNotOptimize(u.data());
    }
}
BENCHMARK(BM_UnitaryFromCoords);

void BM_VolumePipelinePoint(benchmark::State& state) {
    const HaltonStream stream(15, make_permutations(Scrambling::Seeded, 15, 1));
    std::vector<double> pt(15);
    std::uint64_t i = 1;
    for (auto _ : state) {
        stream.point(i++, pt);
        UnitaryCoords uc;
        std::copy_n(pt.begin(), 12, uc.u.begin());
        const EigenAngles a{pt[12] * kHalfPi, pt[13] * kHalfPi, pt[14] * kHalfPi};
        const auto s = spectrum_from_angles(a);
        const double w = conditional_density(s.lambda).value * angle_jacobian(a);
        const auto frame = unitary_from_coords(uc);
        const auto rho = assemble_density(frame, s);
        const auto ptower = partial_transpose(rho);
        const double neg = negativity(ptower);
        const Eigen::Vector4d lam(s.lambda[0], s.lambda[1], s.lambda[2], s.lambda[3]);
        const Eigen::Matrix4cd sq = frame * lam.cwiseSqrt().asDiagonal() * frame.adjoint();
        const double conc = concurrence_with_sqrt(rho, sq);
        benchmark::DoNotOptimize(w + neg + conc);
    }
}
BENCHMARK(BM_VolumePipelinePoint);

void BM_BoundaryRootScan(benchmark::State& state) {
    const HaltonStream stream(14, make_permutations(Scrambling::Seeded, 14, 1));
    std::vector<double> pt(14);
    std::uint64_t i = 1;
    for (auto _ : state) {
        stream.point(i++, pt);
        const auto roots = find_boundary_roots(pt);
        benchmark::DoNotOptimize(roots.data());
    }
}
BENCHMARK(BM_BoundaryRootScan);

void BM_Concurrence(benchmark::State& state) {
    const HaltonStream stream(15, make_permutations(Scrambling::Seeded, 15, 1));
    std::vector<double> pt(15);
    stream.point(12345, pt);
    UnitaryCoords uc;
    std::copy_n(pt.begin(), 12, uc.u.begin());
    const EigenAngles a{pt[12] * kHalfPi, pt[13] * kHalfPi, pt[14] * kHalfPi};
    const auto rho = assemble_density(unitary_from_coords(uc), spectrum_from_angles(a));
    for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

}  // namespace

BENCHMARK_MAIN();
