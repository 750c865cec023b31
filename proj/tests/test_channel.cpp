#include "doctest.h"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cascade/channel.hpp"
#include "cascade/noise.hpp"
#include "cascade/random.hpp"
#include "oracles.hpp"

using namespace cascade;

TEST_SUITE("channel") {

TEST_CASE("make_channel validates its Kraus list") {
    CHECK_THROWS_AS(make_channel({}), std::invalid_argument);
    CHECK_THROWS_AS(make_channel({ComplexMatrix::identity(2), ComplexMatrix::identity(4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_channel({ComplexMatrix(2, 3)}), std::invalid_argument);

    ComplexMatrix shrunk = ComplexMatrix::identity(2);
    shrunk *= 0.9;
    CHECK_THROWS_AS(make_channel({shrunk}), std::invalid_argument);

    QuantumChannel dep = depolarizing(0.92);
    CHECK(dep.dim == 2);
    CHECK(dep.kraus.size() == 4);
}

TEST_CASE("vectorize matches the S+ picture") {
    SplitMix64 rng(3);
    ComplexMatrix a = oracle::random_matrix(2, rng);

    std::array<cdouble, 4> v = vectorize(a);
    CHECK(oracle::max_abs_diff(devectorize(v), a) == 0.0);

    // sqrt(2) (A x I) |S+> enumerates the entries of A row-major
    const double inv = 1.0 / std::sqrt(2.0);
    ComplexMatrix bell(4, 1);
    bell(0, 0) = inv;
    bell(3, 0) = inv;
    ComplexMatrix img = kron(a, ComplexMatrix::identity(2)) * bell;
    for (int i = 0; i < 4; ++i) CHECK(std::abs(img(i, 0) * std::sqrt(2.0) - v[(size_t)i]) < 1e-15);

    CHECK_THROWS_AS(vectorize(ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("choi matrices of the basic channels") {
    // identity channel: corners only
    ChoiMatrix id_chi = choi_from_kraus(make_channel({ComplexMatrix::identity(2)}));
    ComplexMatrix want(4, 4);
    want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 1.0;
    CHECK(oracle::max_abs_diff(id_chi.matrix(), want) == 0.0);

    // depolarizing at 0.92
    ChoiMatrix dep_chi = choi_from_kraus(depolarizing(0.92));
    CHECK(std::abs(dep_chi(0, 0).real() - 0.946667) < 5e-7);
    CHECK(std::abs(dep_chi(1, 1).real() - 0.053333) < 5e-7);
    CHECK(std::abs(dep_chi(2, 2).real() - 0.053333) < 5e-7);
    CHECK(std::abs(dep_chi(0, 3).real() - 0.893333) < 5e-7);
    CHECK(oracle::max_abs_diff(dep_chi.matrix(), depolarizing_choi(0.92).matrix()) < 1e-15);

    // bit flip keeps the chi support on {I, X}
    const double f = 0.87;
    ChoiMatrix bf = choi_from_kraus(bit_flip(f));
    ComplexMatrix wb(4, 4);
    wb(0, 0) = wb(3, 3) = wb(0, 3) = wb(3, 0) = f;
    wb(1, 1) = wb(2, 2) = wb(1, 2) = wb(2, 1) = 1.0 - f;
    CHECK(oracle::max_abs_diff(bf.matrix(), wb) < 1e-15);

    CHECK_THROWS_AS(depolarizing_choi(0.2), std::invalid_argument);
    CHECK_THROWS_AS(depolarizing_choi(1.1), std::invalid_argument);
}

TEST_CASE("ChoiMatrix construction enforces the invariants") {
    CHECK_THROWS_AS(ChoiMatrix{ComplexMatrix::identity(3)}, std::invalid_argument);

    ComplexMatrix skew(4, 4);
    skew(0, 0) = skew(3, 3) = 1.0;
    skew(0, 3) = 0.9;
    skew(3, 0) = 0.7;  // not Hermitian
    CHECK_THROWS_AS(ChoiMatrix{skew}, std::invalid_argument);

    ComplexMatrix lopsided(4, 4);
    lopsided(0, 0) = 2.0;  // trace 2, PSD, but the contraction gives 2 I on input |0>
    CHECK_THROWS_AS(ChoiMatrix{lopsided}, std::invalid_argument);

    ComplexMatrix dented(4, 4);
    dented(0, 0) = dented(3, 3) = 1.2;
    dented(1, 1) = dented(2, 2) = -0.2;  // trace 2 and TP hold, PSD does not
    CHECK_THROWS_AS(ChoiMatrix{dented}, std::invalid_argument);

    CHECK_NOTHROW(ChoiMatrix(depolarizing_choi(0.5).matrix()));
}

TEST_CASE("entangling fidelity") {
    for (double f : {0.25, 0.5, 0.86, 0.92, 0.97, 1.0})
        CHECK(entangling_fidelity(depolarizing_choi(f)) == f);

    const double g = 0.3;
    const double want = 0.25 * (1.0 + std::sqrt(1.0 - g)) * (1.0 + std::sqrt(1.0 - g));
    CHECK(std::abs(entangling_fidelity(choi_from_kraus(amplitude_damping(g))) - want) < 1e-14);

    // twirling is fidelity-preserving, and exactly so
    SplitMix64 rng(31);
    for (int i = 0; i < 5; ++i) {
        ChoiMatrix chi = choi_from_kraus(general_noise(oracle::random_noise_params(rng)));
        const double f = entangling_fidelity(chi);
        CHECK(entangling_fidelity(twirl_to_depolarizing(chi)) == f);
    }
}

TEST_CASE("kraus_from_choi") {
    CHECK(kraus_from_choi(choi_from_kraus(make_channel({ComplexMatrix::identity(2)}))).kraus.size()
          == 1);
    CHECK(kraus_from_choi(choi_from_kraus(amplitude_damping(0.3))).kraus.size() == 2);
    CHECK(kraus_from_choi(depolarizing_choi(0.92)).kraus.size() == 4);

    SplitMix64 rng(7);
    std::vector<ChoiMatrix> cases;
    cases.push_back(depolarizing_choi(0.92));
    cases.push_back(choi_from_kraus(amplitude_damping(0.4)));
    cases.push_back(choi_from_kraus(bit_flip(0.9)));
    for (int i = 0; i < 4; ++i)
        cases.push_back(choi_from_kraus(general_noise(oracle::random_noise_params(rng))));
    for (const ChoiMatrix& chi : cases) {
        ChoiMatrix back = choi_from_kraus(kraus_from_choi(chi));
        CHECK(oracle::max_abs_diff(back.matrix(), chi.matrix()) < 1e-10);
    }

    CHECK_THROWS_AS(kraus_from_choi(depolarizing_choi(0.92), 10.0), std::invalid_argument);
    // a cutoff that drops real weight breaks trace preservation downstream
    CHECK_THROWS_AS(kraus_from_choi(depolarizing_choi(0.92), 0.1), std::invalid_argument);
}

TEST_CASE("choi_distance") {
    ChoiMatrix ad = choi_from_kraus(ad_from_fidelity(0.92));
    ChoiMatrix bf = choi_from_kraus(bit_flip(0.92));
    ChoiMatrix dep = depolarizing_choi(0.92);

    CHECK(std::abs(choi_distance(ad, dep) - 0.0802) < 1e-4);
    CHECK(std::abs(choi_distance(bf, dep) - 0.0533) < 1e-4);
    CHECK(std::abs(trace_norm(ad.matrix() - dep.matrix()) - 0.32112) < 1e-5);

    CHECK(choi_distance(ad, ad) == 0.0);
    CHECK(std::abs(choi_distance(ad, bf) - choi_distance(bf, ad)) < 1e-15);
}

TEST_CASE("apply_channel and apply_product_channel") {
    SplitMix64 rng(41);
    QuantumChannel noisy = general_noise(oracle::random_noise_params(rng));
    ComplexMatrix rho = oracle::random_density(2, rng);
    CHECK(std::abs(apply_channel(noisy, rho).trace() - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(oracle::max_abs_diff(apply_channel(depolarizing(1.0), rho), rho) < 1e-15);
    CHECK_THROWS_AS(apply_channel(noisy, ComplexMatrix::identity(4)), std::invalid_argument);

    for (int n : {1, 2, 3}) {
        ComplexMatrix state = oracle::random_density(1 << n, rng);
        CHECK(oracle::max_abs_diff(apply_product_channel(noisy, n, state),
                                   oracle::product_channel_brute(noisy, n, state)) < 1e-11);
        QuantumChannel two = amplitude_damping(0.35);
        CHECK(oracle::max_abs_diff(apply_product_channel(two, n, state),
                                   oracle::product_channel_brute(two, n, state)) < 1e-11);
    }

    CHECK_THROWS_AS(apply_product_channel(noisy, 8, ComplexMatrix::identity(256)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_product_channel(noisy, 2, ComplexMatrix::identity(8)),
                    std::invalid_argument);
    QuantumChannel wide = make_channel({ComplexMatrix::identity(4)});
    CHECK_THROWS_AS(apply_product_channel(wide, 1, ComplexMatrix::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("Bloch affine representations") {
    BlochAffineMap dep = affine_from_channel(depolarizing_p(0.3));
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(dep.delta[(size_t)i]) < 1e-12);
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(dep.m[(size_t)i][(size_t)j] - (i == j ? 0.7 : 0.0)) < 1e-12);
    }

    const double g = 0.37;
    BlochAffineMap ad = affine_from_channel(amplitude_damping(g));
    const double s = std::sqrt(1.0 - g);
    const double diag[3] = {s, s, 1.0 - g};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(ad.m[(size_t)i][(size_t)i] - diag[i]) < 1e-12);
        CHECK(std::abs(ad.delta[(size_t)i] - (i == 2 ? g : 0.0)) < 1e-12);
    }

    BlochAffineMap x = affine_from_channel(pauli({0.0, 1.0, 0.0, 0.0}));
    const double want[3] = {1.0, -1.0, -1.0};
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x.m[(size_t)i][(size_t)i] - want[i]) < 1e-12);

    // the zero-parameter noise family member is full dephasing
    BlochAffineMap deph = affine_from_channel(general_noise({}));
    const double dd[3] = {0.0, 0.0, 1.0};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(deph.m[(size_t)i][(size_t)i] - dd[i]) < 1e-12);
        CHECK(std::abs(deph.delta[(size_t)i]) < 1e-12);
    }
}

}  // TEST_SUITE("channel")
