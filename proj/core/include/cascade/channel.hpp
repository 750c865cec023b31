#pragma once

#include <array>
#include <vector>

#include "cascade/complex_matrix.hpp"

namespace cascade {

// A completely positive trace-preserving map held as its Kraus list.
// CP holds by construction; TP is checked on entry (never repaired).
struct QuantumChannel {
    int dim = 2;
    std::vector<ComplexMatrix> kraus;
};

// Validates square matching dims and the TP sum. Deviations up to the
// trace_preservation tolerance are accepted as-is; larger ones throw.
QuantumChannel make_channel(std::vector<ComplexMatrix> kraus);

// 4x4 chi in the ordered basis |00>,|01>,|10>,|11>, |ij> = (output, input)
// row-major per |A>> = sum_ij A_ij |ij>. Trace 2. Construction enforces
// hermiticity, the eigenvalue floor, the trace and the TP contraction.
class ChoiMatrix {
public:
    explicit ChoiMatrix(ComplexMatrix m);
    const ComplexMatrix& matrix() const { return m_; }
    const cdouble& operator()(int r, int c) const { return m_(r, c); }

private:
    ComplexMatrix m_;
};

struct BlochAffineMap {
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> delta{};
};

// |A>> = sum_ij A_ij |ij> as (A00, A01, A10, A11); devectorize inverts.
std::array<cdouble, 4> vectorize(const ComplexMatrix& a);
ComplexMatrix devectorize(const std::array<cdouble, 4>& v);

ChoiMatrix choi_from_kraus(const QuantumChannel& ch);

// Eigendecomposition route; eigenvalues below `cutoff` are dropped (pass a
// negative cutoff to use the central default), below the PSD floor they are
// a CP violation and throw. At most 4 operators come back.
QuantumChannel kraus_from_choi(const ChoiMatrix& chi, double cutoff = -1.0);

// F = <S+| chi |S+> / 2. The corner sum is paired as (m00+m33)+(m03+m30) so
// the depolarizing construction below round-trips exactly.
double entangling_fidelity(const ChoiMatrix& chi);

// Choi matrix of the depolarizing channel at the given fidelity, with the
// corner entries arranged so entangling_fidelity returns `fidelity` exactly.
ChoiMatrix depolarizing_choi(double fidelity);

// (1/4) |chi1 - chi2|_1.
double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);

ComplexMatrix apply_channel(const QuantumChannel& ch, const ComplexMatrix& state);

// ch applied independently to each of n qubits by sequential per-qubit
// contraction; never materializes the k^n Kraus products. n <= 7.
ComplexMatrix apply_product_channel(const QuantumChannel& ch, int n, const ComplexMatrix& state);

// Projects chi onto the depolarizing channel of equal entangling fidelity.
ChoiMatrix twirl_to_depolarizing(const ChoiMatrix& chi);

// M_ij = Tr(sigma_i ch(sigma_j)) / 2, delta_i = Tr(sigma_i ch(I)) / 2.
BlochAffineMap affine_from_channel(const QuantumChannel& ch);

}  // namespace cascade
