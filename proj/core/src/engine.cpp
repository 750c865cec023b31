#include "cascade/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cascade/tolerances.hpp"

namespace cascade {

namespace {

void require_in(double x, double lo, double hi, const char* what) {
    if (!(x >= lo - 1e-9 && x <= hi + 1e-9))
        throw std::domain_error(std::string(what) + ": argument " + std::to_string(x) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// rho = U (|a0><a0| (x) |b><d|) U^dag is the outer product of encoder
// columns b and d: the register index of |a_0>|i> is i.
ComplexMatrix encoded_input(const ComplexMatrix& u, int b, int d) {
    const int dim = u.rows();
    ComplexMatrix rho(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int s = 0; s < dim; ++s)
            rho(r, s) = u(r, b) * std::conj(u(s, d));
    return rho;
}

}  // namespace

ChoiMatrix choi_from_map(const std::function<ComplexMatrix(int, int)>& eps) {
    ComplexMatrix chi(4, 4);
    for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
            ComplexMatrix out = eps(b, d);
            if (out.rows() != 2 || out.cols() != 2)
                throw std::invalid_argument("choi_from_map: map must return 2x2 images");
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c)
                    chi(2 * a + b, 2 * c + d) = out(a, c);
        }
    return ChoiMatrix(chi);
}

ChoiMatrix effective_channel(const QuantumChannel& noise, const CodeSpec& code) {
    if (noise.dim != 2)
        throw std::invalid_argument("effective_channel: noise must act on one qubit");
    const int dim = 1 << code.n;
    const int half = dim / 2;
    const ComplexMatrix& u = code.encoder;
    auto eps = [&](int b, int d) {
        ComplexMatrix rho = apply_product_channel(noise, code.n, encoded_input(u, b, d));
        // sum_m R_m rho R_m^dag with R_m = P_m U^dag keeps only the diagonal
        // ancilla blocks of U^dag rho U; tracing the ancilla then adds their
        // 2x2 principal blocks.
        ComplexMatrix dec = u.adjoint() * rho * u;
        ComplexMatrix out(2, 2);
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) {
                cdouble sum = 0.0;
                for (int m = 0; m < half; ++m) sum += dec(2 * m + a, 2 * m + c);
                out(a, c) = sum;
            }
        return out;
    };
    return choi_from_map(eps);
}

ChoiMatrix effective_channel_with_recovery(const QuantumChannel& noise, const CodeSpec& code) {
    if (noise.dim != 2)
        throw std::invalid_argument("effective_channel: noise must act on one qubit");
    const int dim = 1 << code.n;
    const int half = dim / 2;
    const ComplexMatrix udag = code.encoder.adjoint();
    std::vector<ComplexMatrix> recovery;
    recovery.reserve(half);
    for (int m = 0; m < half; ++m) {
        ComplexMatrix rm(dim, dim);
        for (int r = 2 * m; r <= 2 * m + 1; ++r)
            for (int s = 0; s < dim; ++s) rm(r, s) = udag(r, s);
        recovery.push_back(std::move(rm));
    }
    auto eps = [&](int b, int d) {
        ComplexMatrix rho = apply_product_channel(noise, code.n, encoded_input(code.encoder, b, d));
        ComplexMatrix rec(dim, dim);
        for (const auto& rm : recovery) rec += rm * rho * rm.adjoint();
        return partial_trace(rec, {code.n - 1});
    };
    return choi_from_map(eps);
}

ConcatenationTrace concatenate(const QuantumChannel& noise0, const CodeSpec& code,
                               int max_levels, double target) {
    if (max_levels < 0 || max_levels > 12)
        throw std::invalid_argument("concatenate: max_levels must lie in [0, 12]");
    if (target < 0.0) target = 1.0 - tolerances().near_perfect;

    ConcatenationTrace trace;
    ChoiMatrix chi = choi_from_kraus(noise0);
    double f = entangling_fidelity(chi);
    trace.F0 = f;
    trace.levels.push_back({0, chi, f, choi_distance(chi, twirl_to_depolarizing(chi))});

    for (int l = 1; l <= max_levels && trace.levels.back().F < target; ++l) {
        QuantumChannel ch = kraus_from_choi(trace.levels.back().chi);
        ChoiMatrix next = effective_channel(ch, code);
        f = entangling_fidelity(next);
        trace.levels.push_back({l, next, f, choi_distance(next, twirl_to_depolarizing(next))});
    }

    const double near_perfect = 1.0 - tolerances().near_perfect;
    for (const auto& rec : trace.levels)
        if (rec.F >= near_perfect) {
            trace.terminal_L = rec.l;
            break;
        }
    return trace;
}

double dep_fidelity_step(double f) {
    require_in(f, 0.25, 1.0, "dep_fidelity_step");
    return (5.0 + f * (20.0 + f * (-70.0 + f * (40.0 + f * (160.0 - 128.0 * f))))) / 27.0;
}

double dep_fidelity_step_p(double p) {
    require_in(p, 0.0, 1.0, "dep_fidelity_step_p");
    return 1.0 + p * p * (-45.0 + p * (75.0 + p * (-45.0 + 9.0 * p))) / 8.0;
}

ChoiMatrix reference_depolarizing_choi(double f0, int l) {
    require_in(f0, 0.25, 1.0, "reference_depolarizing_choi");
    if (l < 0) throw std::invalid_argument("reference_depolarizing_choi: negative level");
    double f = f0;
    for (int k = 0; k < l; ++k) f = dep_fidelity_step(f);
    return depolarizing_choi(f);
}

double closed_form_ad_five(double gamma) {
    require_in(gamma, 0.0, 1.0, "closed_form_ad_five");
    const double g = gamma;
    const double r = 1.0 - g;
    return 0.25 * (1.0 + 0.25 * r * r * (4.0 + g * (8.0 + g * (-3.0 + g))) +
                   0.5 * std::sqrt(r) * (4.0 + g * (2.0 + g * (-11.0 + 5.0 * g))));
}

double closed_form_ad_steane(double gamma) {
    require_in(gamma, 0.0, 1.0, "closed_form_ad_steane");
    const double g = gamma;
    const double r = 1.0 - g;
    const double sq = std::sqrt(r);
    return 0.25 * (1.0 + sq * (2.0 + g) +
                   r * r * r / 8.0 * (8.0 + g * (24.0 + g * (-33.0 + g * (21.0 - 42.0 * g)))) +
                   sq / 16.0 * (g * g * (-150.0 + g * (180.0 + g * (-117.0 + 39.0 * g)))));
}

double find_threshold() {
    auto gap = [](double p) { return dep_fidelity_step_p(p) - (1.0 - 0.75 * p); };
    double lo = 0.1, hi = 0.3;
    if (!(gap(lo) > 0.0 && gap(hi) < 0.0))
        throw std::logic_error("find_threshold: bracket does not straddle the fixed point");
    while (hi - lo > tolerances().bisection) {
        double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cascade
