#include "cascade/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cascade/tolerances.hpp"

namespace cascade {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << op << ": shape mismatch " << a.rows() << "x" << a.cols()
            << " vs " << b.rows() << "x" << b.cols();
        throw std::invalid_argument(msg.str());
    }
}

int qubit_count(const ComplexMatrix& state, const char* what) {
    const int dim = state.rows();
    if (dim != state.cols() || dim < 2)
        throw std::invalid_argument(std::string(what) + ": state must be square with power-of-two size");
    int n = 0;
    while ((1 << n) < dim) ++n;
    if ((1 << n) != dim)
        throw std::invalid_argument(std::string(what) + ": state size is not a power of two");
    return n;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    entries_.assign(static_cast<size_t>(rows) * cols, cdouble(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cdouble>> rows) {
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw std::invalid_argument("from_rows: empty");
    const int c = static_cast<int>(rows.begin()->size());
    ComplexMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        int j = 0;
        for (const cdouble& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit(int dim, int row, int col) {
    ComplexMatrix m(dim, dim);
    m(row, col) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

cdouble ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    cdouble t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cdouble& v : entries_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cdouble& v : entries_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const cdouble& v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator+");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator-");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble s) {
    for (cdouble& v : entries_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("operator*: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cdouble aik = a(i, k);
            if (aik == cdouble(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    constexpr long kMaxDim = 1 << 14;
    const long rr = static_cast<long>(a.rows()) * b.rows();
    const long cc = static_cast<long>(a.cols()) * b.cols();
    if (rr > kMaxDim || cc > kMaxDim)
        throw std::invalid_argument("kron: result exceeds 2^14 x 2^14");
    ComplexMatrix out(static_cast<int>(rr), static_cast<int>(cc));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

const ComplexMatrix& require_unitary(const ComplexMatrix& u, const char* what) {
    if (u.rows() != u.cols())
        throw std::invalid_argument(std::string(what) + ": not square");
    ComplexMatrix g = u * u.adjoint();
    for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    const double dev = g.frobenius_norm();
    if (dev > tolerances().unitarity) {
        std::ostringstream msg;
        msg << what << ": unitarity violated, |U U^dag - I|_F = " << dev;
        throw std::invalid_argument(msg.str());
    }
    return u;
}

EigHermitian eig_hermitian(const ComplexMatrix& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("eig_hermitian: matrix not square");
    const int n = h.rows();

    double herm_dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            herm_dev = std::max(herm_dev, std::abs(h(i, j) - std::conj(h(j, i))));
    if (herm_dev > tolerances().hermiticity) {
        std::ostringstream msg;
        msg << "eig_hermitian: input not Hermitian, max |h - h^dag| = " << herm_dev;
        throw std::invalid_argument(msg.str());
    }

    // symmetrize once so round-off in the input cannot bias the sweeps
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    auto offdiag_fro = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const double tol = tolerances().jacobi_offdiag;
    for (int sweep = 0; sweep < 100 && offdiag_fro() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble z = a(p, q);
                const double az = std::abs(z);
                if (az == 0.0) continue;
                const cdouble u = z / az;  // phase of the pivot
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();

                // real-symmetric rotation for [[app, az], [az, aqq]]
                double c, s;
                if (app == aqq) {
                    c = std::sqrt(0.5);
                    s = std::sqrt(0.5);
                } else {
                    const double tau = (app - aqq) / (2.0 * az);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    c = 1.0 / std::sqrt(1.0 + t * t);
                    s = t * c;
                }

                // 2x2 unitary g = diag(1, conj(u)) . [[c, -s], [s, c]]
                const cdouble g00 = c;
                const cdouble g01 = -s;
                const cdouble g10 = std::conj(u) * s;
                const cdouble g11 = std::conj(u) * c;

                for (int k = 0; k < n; ++k) {  // columns: a <- a g
                    const cdouble hp = a(k, p), hq = a(k, q);
                    a(k, p) = hp * g00 + hq * g10;
                    a(k, q) = hp * g01 + hq * g11;
                }
                for (int k = 0; k < n; ++k) {  // rows: a <- g^dag a
                    const cdouble hp = a(p, k), hq = a(q, k);
                    a(p, k) = std::conj(g00) * hp + std::conj(g10) * hq;
                    a(q, k) = std::conj(g01) * hp + std::conj(g11) * hq;
                }
                for (int k = 0; k < n; ++k) {  // v <- v g
                    const cdouble vp = v(k, p), vq = v(k, q);
                    v(k, p) = vp * g00 + vq * g10;
                    v(k, q) = vp * g01 + vq * g11;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigHermitian out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }

    // Degenerate clusters: re-orthonormalize in index order so the basis
    // choice inside a cluster is pinned (Jacobi already leaves the columns
    // orthonormal; this is a deterministic tie-break, not a repair).
    const double cluster_tol = 1e-12 * std::max(1.0, std::abs(out.values.front()));
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && std::abs(out.values[end - 1] - out.values[end]) <= cluster_tol) ++end;
        for (int k = start; k < end; ++k) {
            for (int prev = start; prev < k; ++prev) {
                cdouble dot = 0.0;
                for (int r = 0; r < n; ++r) dot += std::conj(out.vectors(r, prev)) * out.vectors(r, k);
                for (int r = 0; r < n; ++r) out.vectors(r, k) -= dot * out.vectors(r, prev);
            }
            double nrm = 0.0;
            for (int r = 0; r < n; ++r) nrm += std::norm(out.vectors(r, k));
            nrm = std::sqrt(nrm);
            if (nrm > 0.0)
                for (int r = 0; r < n; ++r) out.vectors(r, k) /= nrm;
        }
        start = end;
    }

    return out;
}

double trace_norm(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("trace_norm: matrix not square");

    double herm_dev = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            herm_dev = std::max(herm_dev, std::abs(a(i, j) - std::conj(a(j, i))));

    if (herm_dev <= tolerances().hermiticity) {
        const EigHermitian e = eig_hermitian(a);
        double s = 0.0;
        for (double lam : e.values) s += std::abs(lam);
        return s;
    }

    const EigHermitian e = eig_hermitian(a.adjoint() * a);
    double s = 0.0;
    for (double lam : e.values) s += std::sqrt(std::max(lam, 0.0));
    return s;
}

ComplexMatrix apply_single_qubit_op(const ComplexMatrix& op, int target, const ComplexMatrix& state) {
    const int n = qubit_count(state, "apply_single_qubit_op");
    if (op.rows() != 2 || op.cols() != 2)
        throw std::invalid_argument("apply_single_qubit_op: op must be 2x2");
    if (target < 0 || target >= n)
        throw std::invalid_argument("apply_single_qubit_op: target out of range");

    const int dim = state.rows();
    const int stride = 1 << (n - 1 - target);  // qubit 0 is the leftmost factor
    const cdouble o00 = op(0, 0), o01 = op(0, 1), o10 = op(1, 0), o11 = op(1, 1);

    ComplexMatrix out(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (r & stride) continue;
        const int r1 = r | stride;
        for (int c = 0; c < dim; ++c) {
            const cdouble s0 = state(r, c), s1 = state(r1, c);
            out(r, c) = o00 * s0 + o01 * s1;
            out(r1, c) = o10 * s0 + o11 * s1;
        }
    }
    return out;
}

ComplexMatrix apply_single_qubit_op_right(const ComplexMatrix& op, int target, const ComplexMatrix& state) {
    const int n = qubit_count(state, "apply_single_qubit_op_right");
    if (op.rows() != 2 || op.cols() != 2)
        throw std::invalid_argument("apply_single_qubit_op_right: op must be 2x2");
    if (target < 0 || target >= n)
        throw std::invalid_argument("apply_single_qubit_op_right: target out of range");

    const int dim = state.rows();
    const int stride = 1 << (n - 1 - target);
    // state * (I x op^dag x I): column pairs mix through conj(op)
    const cdouble c00 = std::conj(op(0, 0)), c01 = std::conj(op(0, 1));
    const cdouble c10 = std::conj(op(1, 0)), c11 = std::conj(op(1, 1));

    ComplexMatrix out(dim, dim);
    for (int c = 0; c < dim; ++c) {
        if (c & stride) continue;
        const int c1 = c | stride;
        for (int r = 0; r < dim; ++r) {
            const cdouble s0 = state(r, c), s1 = state(r, c1);
            out(r, c) = s0 * c00 + s1 * c01;
            out(r, c1) = s0 * c10 + s1 * c11;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& state, const std::vector<int>& keep) {
    const int n = qubit_count(state, "partial_trace");
    if (keep.empty())
        throw std::invalid_argument("partial_trace: keep set must not be empty");
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n)
            throw std::invalid_argument("partial_trace: keep index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("partial_trace: keep indices must be strictly ascending");
    }

    const int k = static_cast<int>(keep.size());
    std::vector<int> traced;
    traced.reserve(n - k);
    for (int q = 0, ki = 0; q < n; ++q) {
        if (ki < k && keep[ki] == q) ++ki;
        else traced.push_back(q);
    }

    const int kd = 1 << k;
    const int td = 1 << (n - k);

    auto full_index = [&](int kept_bits, int traced_bits) {
        int idx = 0;
        for (int i = 0; i < k; ++i)
            if (kept_bits & (1 << (k - 1 - i))) idx |= 1 << (n - 1 - keep[i]);
        for (int i = 0; i < n - k; ++i)
            if (traced_bits & (1 << (n - k - 1 - i))) idx |= 1 << (n - 1 - traced[i]);
        return idx;
    };

    ComplexMatrix out(kd, kd);
    for (int a = 0; a < kd; ++a)
        for (int b = 0; b < kd; ++b) {
            cdouble s = 0.0;
            for (int e = 0; e < td; ++e) s += state(full_index(a, e), full_index(b, e));
            out(a, b) = s;
        }
    return out;
}

}  // namespace cascade
