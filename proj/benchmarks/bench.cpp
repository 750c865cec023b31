#include <benchmark/benchmark.h>

#include <cstdint>

#include "cascade/channel.hpp"
#include "cascade/code.hpp"
#include "cascade/complex_matrix.hpp"
#include "cascade/engine.hpp"
#include "cascade/noise.hpp"
#include "cascade/random.hpp"

namespace {

using namespace cascade;

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m(r, c) = cdouble(rng.next_double(-1.0, 1.0), rng.next_double(-1.0, 1.0));
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return h;
}

void bm_eig_hermitian_4(benchmark::State& state) {
    const ComplexMatrix h = random_hermitian(4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(bm_eig_hermitian_4);

void bm_eig_hermitian_32(benchmark::State& state) {
    const ComplexMatrix h = random_hermitian(32, 2);
    for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(bm_eig_hermitian_32);

void bm_kron_16x8(benchmark::State& state) {
    const ComplexMatrix a = random_hermitian(16, 3);
    const ComplexMatrix b = random_hermitian(8, 4);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(bm_kron_16x8);

void bm_apply_product_channel_5(benchmark::State& state) {
    const QuantumChannel ch = depolarizing(0.92);
    ComplexMatrix rho(1 << 5, 1 << 5);
    rho(0, 0) = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(apply_product_channel(ch, 5, rho));
}
BENCHMARK(bm_apply_product_channel_5);

void bm_apply_product_channel_7(benchmark::State& state) {
    const QuantumChannel ch = depolarizing(0.92);
    ComplexMatrix rho(1 << 7, 1 << 7);
    rho(0, 0) = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(apply_product_channel(ch, 7, rho));
}
BENCHMARK(bm_apply_product_channel_7);

void bm_effective_channel_five(benchmark::State& state) {
    const QuantumChannel ch = depolarizing(0.92);
    const CodeSpec& code = five_qubit_code();
    for (auto _ : state) benchmark::DoNotOptimize(effective_channel(ch, code));
}
BENCHMARK(bm_effective_channel_five);

void bm_effective_channel_five_recovery(benchmark::State& state) {
    const QuantumChannel ch = depolarizing(0.92);
    const CodeSpec& code = five_qubit_code();
    for (auto _ : state) benchmark::DoNotOptimize(effective_channel_with_recovery(ch, code));
}
BENCHMARK(bm_effective_channel_five_recovery);

void bm_effective_channel_steane(benchmark::State& state) {
    const QuantumChannel ch = ad_from_fidelity(0.94);
    const CodeSpec& code = steane_code();
    for (auto _ : state) benchmark::DoNotOptimize(effective_channel(ch, code));
}
BENCHMARK(bm_effective_channel_steane);

void bm_kraus_round_trip(benchmark::State& state) {
    const ChoiMatrix chi = choi_from_kraus(general_noise({0.7, 1.1, 0.4, 0.9, 0.3}));
    for (auto _ : state) benchmark::DoNotOptimize(choi_from_kraus(kraus_from_choi(chi)));
}
BENCHMARK(bm_kraus_round_trip);

void bm_concatenate_five_6_levels(benchmark::State& state) {
    const CodeSpec& code = five_qubit_code();
    const QuantumChannel ch = depolarizing(0.9);
    for (auto _ : state) benchmark::DoNotOptimize(concatenate(ch, code, 6, 2.0));
}
BENCHMARK(bm_concatenate_five_6_levels);

void bm_sample_at_fidelity(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        SplitMix64 rng(99, i++);
        benchmark::DoNotOptimize(sample_at_fidelity(0.9, rng));
    }
}
BENCHMARK(bm_sample_at_fidelity);

}  // namespace

BENCHMARK_MAIN();
