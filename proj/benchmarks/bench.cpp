#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "shrub/av321.hpp"
#include "shrub/bijections.hpp"
#include "shrub/forest.hpp"
#include "shrub/paths.hpp"
#include "shrub/perm.hpp"

namespace {

using namespace shrub;

// One series step at depth 200 (state vector of 601 big integers).
void BM_combined_step_deep(benchmark::State& state) {
    LifStateVector s = LifStateVector::seed();
    for (int i = 0; i < 200; ++i) s = combined_step(s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(combined_step(s));
    }
}
BENCHMARK(BM_combined_step_deep);

void BM_series_100(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(series(100));
    }
}
BENCHMARK(BM_series_100);

// Pruned brute-force enumeration, the workhorse of the oracle tests.
void BM_enumerate_321_n4(benchmark::State& state) {
    const PatternSet pats({parse_perm("321")});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_forests(2, 4, &pats));
    }
}
BENCHMARK(BM_enumerate_321_n4);

void BM_generate_club_paths_n3(benchmark::State& state) {
    const StepAlphabet club = StepAlphabet::club();
    const WedgeBound axis(1, 1, Sense::above_axis);
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_paths(club, axis, {12, 0}));
    }
}
BENCHMARK(BM_generate_club_paths_n3);

// Block-map round trip on a 60-shrub word (300-token path).
void BM_bij231_round_trip(benchmark::State& state) {
    std::string tokens;
    for (int i = 0; i < 60; ++i) tokens += "EEENN";
    const LatticePath path(StepAlphabet::east_north(), tokens);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bij231_perm_to_path(bij231_path_to_perm(path)));
    }
}
BENCHMARK(BM_bij231_round_trip);

void BM_verify_min_poly_100(benchmark::State& state) {
    const std::vector<BigCount> terms = series(101);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_min_poly(terms, 100));
    }
}
BENCHMARK(BM_verify_min_poly_100);

}  // namespace

BENCHMARK_MAIN();
