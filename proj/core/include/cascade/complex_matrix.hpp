#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cascade {

using cdouble = std::complex<double>;

// Dense row-major complex matrix. The universal carrier for states, Kraus
// operators, unitaries and Choi matrices; sized for registers up to 2^7.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);  // zero filled

    static ComplexMatrix identity(int n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cdouble>> rows);
    // 2^n x 2^n matrix with a single unit entry, handy for operator inputs
    static ComplexMatrix unit(int dim, int row, int col);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cdouble& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const cdouble& operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<cdouble>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cdouble s);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cdouble> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);

// Tensor product; dimensions multiply. Results beyond 2^14 x 2^14 are refused.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Throws unless u u^dag = I within the unitarity tolerance; returns u.
const ComplexMatrix& require_unitary(const ComplexMatrix& u, const char* what);

struct EigHermitian {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns, column k pairs with values[k]
};

// Cyclic complex Jacobi. Input must be Hermitian within tolerance (checked);
// deterministic, convergence target off-diagonal Frobenius < jacobi_offdiag,
// hard cap 100 sweeps.
EigHermitian eig_hermitian(const ComplexMatrix& h);

// Tr sqrt(a^dag a). Hermitian inputs go through their own eigenvalues
// (sum |lambda|), everything else through a^dag a.
double trace_norm(const ComplexMatrix& a);

// (I x ... x op x ... x I) * state with op acting on `target`. Qubit 0 is the
// leftmost (most significant) factor. The companion right-application
// multiplies by the adjoint from the right: state * (I x op^dag x I).
ComplexMatrix apply_single_qubit_op(const ComplexMatrix& op, int target, const ComplexMatrix& state);
ComplexMatrix apply_single_qubit_op_right(const ComplexMatrix& op, int target, const ComplexMatrix& state);

// Traces out every qubit not listed in `keep`; kept qubits preserve their
// relative order. `keep` must be a non-empty strictly ascending index list.
ComplexMatrix partial_trace(const ComplexMatrix& state, const std::vector<int>& keep);

}  // namespace cascade
