#include "cascade/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cascade/tolerances.hpp"

namespace cascade {

QuantumChannel make_channel(std::vector<ComplexMatrix> kraus) {
    if (kraus.empty())
        throw std::invalid_argument("make_channel: empty Kraus list");
    const int dim = kraus.front().rows();
    for (const ComplexMatrix& k : kraus) {
        if (k.rows() != dim || k.cols() != dim)
            throw std::invalid_argument("make_channel: Kraus operators must be square with equal dims");
        if (!k.is_finite())
            throw std::invalid_argument("make_channel: non-finite Kraus entry");
    }

    ComplexMatrix sum(dim, dim);
    for (const ComplexMatrix& k : kraus) sum += k.adjoint() * k;
    for (int i = 0; i < dim; ++i) sum(i, i) -= 1.0;
    const double dev = sum.max_abs();
    if (dev > tolerances().trace_preservation) {
        std::ostringstream msg;
        msg << "make_channel: trace preservation violated, max |sum K^dag K - I| = " << dev;
        throw std::invalid_argument(msg.str());
    }

    QuantumChannel ch;
    ch.dim = dim;
    ch.kraus = std::move(kraus);
    return ch;
}

ChoiMatrix::ChoiMatrix(ComplexMatrix m) : m_(std::move(m)) {
    const Tolerances& tol = tolerances();
    if (m_.rows() != 4 || m_.cols() != 4)
        throw std::invalid_argument("ChoiMatrix: must be 4x4");
    if (!m_.is_finite())
        throw std::invalid_argument("ChoiMatrix: non-finite entry");

    double herm = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            herm = std::max(herm, std::abs(m_(i, j) - std::conj(m_(j, i))));
    if (herm > tol.hermiticity) {
        std::ostringstream msg;
        msg << "ChoiMatrix: not Hermitian, max |chi - chi^dag| = " << herm;
        throw std::invalid_argument(msg.str());
    }

    const double tr_dev = std::abs(m_.trace() - cdouble(2.0, 0.0));
    if (tr_dev > tol.choi_trace) {
        std::ostringstream msg;
        msg << "ChoiMatrix: trace is off by " << tr_dev << " from 2";
        throw std::invalid_argument(msg.str());
    }

    // TP contraction: sum_a chi_{(a b),(a d)} = delta_{b d}
    double tp_dev = 0.0;
    for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
            cdouble s = m_(0 * 2 + b, 0 * 2 + d) + m_(1 * 2 + b, 1 * 2 + d);
            if (b == d) s -= 1.0;
            tp_dev = std::max(tp_dev, std::abs(s));
        }
    if (tp_dev > tol.trace_preservation) {
        std::ostringstream msg;
        msg << "ChoiMatrix: trace-preservation contraction is off by " << tp_dev;
        throw std::invalid_argument(msg.str());
    }

    const EigHermitian eig = eig_hermitian(m_);
    if (eig.values.back() < -tol.psd_floor) {
        std::ostringstream msg;
        msg << "ChoiMatrix: negative eigenvalue " << eig.values.back() << " below the PSD floor";
        throw std::invalid_argument(msg.str());
    }
}

std::array<cdouble, 4> vectorize(const ComplexMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw std::invalid_argument("vectorize: input must be 2x2");
    return {a(0, 0), a(0, 1), a(1, 0), a(1, 1)};
}

ComplexMatrix devectorize(const std::array<cdouble, 4>& v) {
    ComplexMatrix a(2, 2);
    a(0, 0) = v[0];
    a(0, 1) = v[1];
    a(1, 0) = v[2];
    a(1, 1) = v[3];
    return a;
}

ChoiMatrix choi_from_kraus(const QuantumChannel& ch) {
    if (ch.dim != 2)
        throw std::invalid_argument("choi_from_kraus: single-qubit channels only");
    ComplexMatrix chi(4, 4);
    for (const ComplexMatrix& k : ch.kraus) {
        const std::array<cdouble, 4> v = vectorize(k);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) chi(i, j) += v[i] * std::conj(v[j]);
    }
    return ChoiMatrix(std::move(chi));
}

QuantumChannel kraus_from_choi(const ChoiMatrix& chi, double cutoff) {
    if (cutoff < 0.0) cutoff = tolerances().kraus_cutoff;
    const EigHermitian eig = eig_hermitian(chi.matrix());

    std::vector<ComplexMatrix> kraus;
    for (size_t m = 0; m < eig.values.size(); ++m) {
        const double lam = eig.values[m];
        if (lam < -tolerances().psd_floor) {
            std::ostringstream msg;
            msg << "kraus_from_choi: CP violation, eigenvalue " << lam;
            throw std::invalid_argument(msg.str());
        }
        if (lam <= cutoff) continue;
        const double w = std::sqrt(lam);
        std::array<cdouble, 4> v;
        for (int i = 0; i < 4; ++i) v[i] = w * eig.vectors(i, static_cast<int>(m));
        kraus.push_back(devectorize(v));
    }
    if (kraus.empty())
        throw std::invalid_argument("kraus_from_choi: all eigenvalues below cutoff");
    return make_channel(std::move(kraus));
}

double entangling_fidelity(const ChoiMatrix& chi) {
    const ComplexMatrix& m = chi.matrix();
    // pair diagonal with diagonal and corner with corner; see depolarizing_choi
    return 0.25 * ((m(0, 0) + m(3, 3)) + (m(0, 3) + m(3, 0))).real();
}

ChoiMatrix depolarizing_choi(double fidelity) {
    if (fidelity < 0.25 || fidelity > 1.0)
        throw std::invalid_argument("depolarizing_choi: fidelity outside [1/4, 1]");
    const double q = (1.0 - fidelity) / 3.0;
    const double diag = fidelity + q;
    // 2F - diag is exact (Sterbenz), so (diag + corner) recovers 2F exactly
    // and entangling_fidelity returns `fidelity` bit for bit.
    const double corner = 2.0 * fidelity - diag;
    const double mid = 2.0 * q;

    ComplexMatrix m(4, 4);
    m(0, 0) = diag;
    m(3, 3) = diag;
    m(0, 3) = corner;
    m(3, 0) = corner;
    m(1, 1) = mid;
    m(2, 2) = mid;
    return ChoiMatrix(std::move(m));
}

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
    return 0.25 * trace_norm(a.matrix() - b.matrix());
}

ComplexMatrix apply_channel(const QuantumChannel& ch, const ComplexMatrix& state) {
    if (state.rows() != ch.dim || state.cols() != ch.dim)
        throw std::invalid_argument("apply_channel: state dim does not match channel");
    ComplexMatrix out(state.rows(), state.cols());
    for (const ComplexMatrix& k : ch.kraus) out += k * state * k.adjoint();
    return out;
}

ComplexMatrix apply_product_channel(const QuantumChannel& ch, int n, const ComplexMatrix& state) {
    if (ch.dim != 2)
        throw std::invalid_argument("apply_product_channel: single-qubit channels only");
    if (n < 1 || n > 7)
        throw std::invalid_argument("apply_product_channel: n out of range [1, 7]");
    if (state.rows() != (1 << n) || state.cols() != (1 << n))
        throw std::invalid_argument("apply_product_channel: state must be 2^n x 2^n");

    ComplexMatrix cur = state;
    for (int q = 0; q < n; ++q) {
        ComplexMatrix next(state.rows(), state.cols());
        for (const ComplexMatrix& k : ch.kraus)
            next += apply_single_qubit_op_right(k, q, apply_single_qubit_op(k, q, cur));
        cur = std::move(next);
    }
    return cur;
}

ChoiMatrix twirl_to_depolarizing(const ChoiMatrix& chi) {
    return depolarizing_choi(entangling_fidelity(chi));
}

BlochAffineMap affine_from_channel(const QuantumChannel& ch) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const ComplexMatrix sx = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const ComplexMatrix sy = ComplexMatrix::from_rows({{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}});
    const ComplexMatrix sz = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    const ComplexMatrix* sigma[3] = {&sx, &sy, &sz};

    BlochAffineMap map;
    const ComplexMatrix eps_id = apply_channel(ch, id);
    for (int i = 0; i < 3; ++i)
        map.delta[i] = 0.5 * ((*sigma[i]) * eps_id).trace().real();
    for (int j = 0; j < 3; ++j) {
        const ComplexMatrix eps_j = apply_channel(ch, *sigma[j]);
        for (int i = 0; i < 3; ++i)
            map.m[i][j] = 0.5 * ((*sigma[i]) * eps_j).trace().real();
    }
    return map;
}

}  // namespace cascade
