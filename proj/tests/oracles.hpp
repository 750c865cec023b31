#pragma once

// Test-only reference implementations. Everything here recomputes a result
// through an independent route (Eigen decompositions, brute-force tensor
// expansion, direct index bookkeeping) so the library never certifies
// itself with its own code paths.

#include <Eigen/Dense>

#include <algorithm>
#include <numbers>
#include <vector>

#include "cascade/channel.hpp"
#include "cascade/complex_matrix.hpp"
#include "cascade/noise.hpp"
#include "cascade/random.hpp"

namespace oracle {

inline Eigen::MatrixXcd to_eigen(const cascade::ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

inline std::vector<double> eigenvalues_desc(const cascade::ComplexMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h));
    std::vector<double> v(es.eigenvalues().size());
    for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = es.eigenvalues()(i);
    std::sort(v.rbegin(), v.rend());
    return v;
}

inline double trace_norm_svd(const cascade::ComplexMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    return svd.singularValues().sum();
}

inline double max_abs_diff(const cascade::ComplexMatrix& a, const cascade::ComplexMatrix& b) {
    return (a - b).max_abs();
}

inline cascade::ComplexMatrix random_matrix(int dim, cascade::SplitMix64& rng) {
    cascade::ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m(r, c) = cascade::cdouble(rng.next_double(-1.0, 1.0), rng.next_double(-1.0, 1.0));
    return m;
}

inline cascade::ComplexMatrix random_hermitian(int dim, cascade::SplitMix64& rng) {
    cascade::ComplexMatrix m = random_matrix(dim, rng);
    cascade::ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return h;
}

// G G^dag scaled to unit trace
inline cascade::ComplexMatrix random_density(int dim, cascade::SplitMix64& rng) {
    cascade::ComplexMatrix g = random_matrix(dim, rng);
    cascade::ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

inline cascade::FiveParamNoise random_noise_params(cascade::SplitMix64& rng) {
    const double pi = std::numbers::pi;
    cascade::FiveParamNoise w;
    w.theta = rng.next_double(0.0, pi);
    w.phi = rng.next_double(0.0, 2.0 * pi);
    w.alpha = rng.next_double(0.0, 0.5 * pi);
    w.beta = rng.next_double(0.0, 0.5 * pi);
    w.gamma = rng.next_double(0.0, 0.5 * pi);
    return w;
}

// every one of the k^n Kraus tensor products, i.e. the expansion
// apply_product_channel is built to avoid
inline cascade::ComplexMatrix product_channel_brute(const cascade::QuantumChannel& ch, int n,
                                                    const cascade::ComplexMatrix& state) {
    const int k = static_cast<int>(ch.kraus.size());
    long total = 1;
    for (int q = 0; q < n; ++q) total *= k;
    cascade::ComplexMatrix acc(state.rows(), state.cols());
    for (long idx = 0; idx < total; ++idx) {
        cascade::ComplexMatrix big(1, 1);
        big(0, 0) = 1.0;
        long rem = idx;
        for (int q = 0; q < n; ++q) {
            big = cascade::kron(big, ch.kraus[rem % k]);
            rem /= k;
        }
        acc += big * state * big.adjoint();
    }
    return acc;
}

inline cascade::ComplexMatrix partial_trace_brute(const cascade::ComplexMatrix& state, int n,
                                                  const std::vector<int>& keep) {
    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    // qubit q owns bit (n - 1 - q) of a register index
    auto embed = [&](int bits, const std::vector<int>& qubits, int base) {
        const int m = static_cast<int>(qubits.size());
        for (int i = 0; i < m; ++i)
            if (bits >> (m - 1 - i) & 1) base |= 1 << (n - 1 - qubits[i]);
        return base;
    };

    const int kd = 1 << keep.size();
    const int td = 1 << traced.size();
    cascade::ComplexMatrix out(kd, kd);
    for (int a = 0; a < kd; ++a)
        for (int b = 0; b < kd; ++b)
            for (int e = 0; e < td; ++e)
                out(a, b) += state(embed(a, keep, embed(e, traced, 0)),
                                   embed(b, keep, embed(e, traced, 0)));
    return out;
}

}  // namespace oracle
