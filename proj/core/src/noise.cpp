#include "cascade/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cascade/tolerances.hpp"

namespace cascade {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix scaled_identity(double s) {
    ComplexMatrix m(2, 2);
    m(0, 0) = s;
    m(1, 1) = s;
    return m;
}

ComplexMatrix scaled_sx(double s) {
    ComplexMatrix m(2, 2);
    m(0, 1) = s;
    m(1, 0) = s;
    return m;
}

ComplexMatrix scaled_sy(double s) {
    ComplexMatrix m(2, 2);
    m(0, 1) = cdouble(0.0, -s);
    m(1, 0) = cdouble(0.0, s);
    return m;
}

ComplexMatrix scaled_sz(double s) {
    ComplexMatrix m(2, 2);
    m(0, 0) = s;
    m(1, 1) = -s;
    return m;
}

void require_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo && v <= hi)) {
        std::ostringstream msg;
        msg << what << ": value " << v << " outside [" << lo << ", " << hi << "]";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

QuantumChannel depolarizing(double F0) {
    require_range(F0, 0.25, 1.0, "depolarizing");
    const double w = std::sqrt((1.0 - F0) / 3.0);
    return make_channel({scaled_identity(std::sqrt(F0)), scaled_sx(w), scaled_sy(w), scaled_sz(w)});
}

QuantumChannel depolarizing_p(double p) {
    require_range(p, 0.0, 1.0, "depolarizing_p");
    return depolarizing(1.0 - 0.75 * p);
}

QuantumChannel amplitude_damping(double gamma) {
    require_range(gamma, 0.0, 1.0, "amplitude_damping");
    ComplexMatrix a0(2, 2);
    a0(0, 0) = 1.0;
    a0(1, 1) = std::sqrt(1.0 - gamma);
    ComplexMatrix a1(2, 2);
    a1(0, 1) = std::sqrt(gamma);
    return make_channel({std::move(a0), std::move(a1)});
}

double ad_gamma_from_fidelity(double F0) {
    require_range(F0, 0.25, 1.0, "ad_from_fidelity");
    const double s = 2.0 * std::sqrt(F0) - 1.0;  // = sqrt(1 - gamma)
    return 1.0 - s * s;
}

QuantumChannel ad_from_fidelity(double F0) {
    return amplitude_damping(ad_gamma_from_fidelity(F0));
}

QuantumChannel bit_flip(double F0) {
    require_range(F0, 0.0, 1.0, "bit_flip");
    return make_channel({scaled_identity(std::sqrt(F0)), scaled_sx(std::sqrt(1.0 - F0))});
}

QuantumChannel pauli(const PauliChannel& p) {
    const double sum = ((p.p0 + p.px) + (p.py + p.pz));
    if (p.p0 < 0.0 || p.px < 0.0 || p.py < 0.0 || p.pz < 0.0 || std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("pauli: probabilities must be non-negative and sum to 1");
    return make_channel({scaled_identity(std::sqrt(p.p0)), scaled_sx(std::sqrt(p.px)),
                         scaled_sy(std::sqrt(p.py)), scaled_sz(std::sqrt(p.pz))});
}

QuantumChannel general_noise(const FiveParamNoise& p) {
    const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
    const double cb = std::cos(p.beta), sb = std::sin(p.beta);
    const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);

    ComplexMatrix a0(2, 2);
    a0(0, 0) = ca;
    a0(1, 1) = sb * cg;
    ComplexMatrix a1(2, 2);
    a1(1, 0) = sa * sg;
    ComplexMatrix a2(2, 2);
    a2(0, 1) = sb * sg;
    ComplexMatrix a3(2, 2);
    a3(0, 0) = sa * cg;
    a3(1, 1) = cb;

    const double ch = std::cos(0.5 * p.theta);
    const double sh = std::sin(0.5 * p.theta);
    const cdouble eip = std::polar(1.0, p.phi);
    ComplexMatrix u2(2, 2);
    u2(0, 0) = ch;
    u2(0, 1) = sh * std::conj(eip);
    u2(1, 0) = -sh * eip;
    u2(1, 1) = ch;
    const ComplexMatrix u2d = u2.adjoint();

    // diagonal pair first: their contributions to eps(I) then accumulate in
    // the same order on both diagonal entries, so delta_z is identically
    // zero whenever alpha = beta instead of a rounding residue
    std::vector<ComplexMatrix> kraus;
    for (ComplexMatrix* a : {&a0, &a3, &a1, &a2})
        kraus.push_back(u2 * (*a) * u2d);
    return make_channel(std::move(kraus));
}

double model_fidelity(const FiveParamNoise& p) {
    const double t0 = std::cos(p.alpha) + std::sin(p.beta) * std::cos(p.gamma);
    const double t1 = std::sin(p.alpha) * std::cos(p.gamma) + std::cos(p.beta);
    return 0.25 * (t0 * t0 + t1 * t1);
}

PauliChannel centered_to_pauli(double alpha, double gamma) {
    const double sa = std::sin(alpha), ca = std::cos(alpha);
    const double sg = std::sin(gamma), cg = std::cos(gamma);
    PauliChannel p;
    p.px = 0.5 * sa * sa * sg * sg;
    p.py = p.px;
    const double d = ca - sa * cg;
    p.pz = 0.5 * d * d;
    p.p0 = 1.0 - p.px - p.py - p.pz;
    return p;
}

FiveParamNoise sample_at_fidelity(double F0, SplitMix64& rng) {
    if (!(F0 > 0.25 && F0 < 1.0))
        throw std::invalid_argument("sample_at_fidelity: F0 must lie in (1/4, 1)");

    FiveParamNoise p;
    p.theta = rng.next_double(0.0, kPi);
    p.phi = rng.next_double(0.0, 2.0 * kPi);

    auto fid_at = [&](double alpha) {
        const double t0 = std::cos(alpha) + std::sin(p.beta) * std::cos(p.gamma);
        const double t1 = std::sin(alpha) * std::cos(p.gamma) + std::cos(p.beta);
        return 0.25 * (t0 * t0 + t1 * t1);
    };

    for (int attempt = 0; attempt < 1000; ++attempt) {
        p.gamma = rng.next_double(0.0, 0.5 * kPi);
        p.beta = rng.next_double(0.0, 0.5 * kPi);

        double lo = 0.0, hi = 0.5 * kPi;
        double glo = fid_at(lo) - F0;
        double ghi = fid_at(hi) - F0;
        if (glo == 0.0) { p.alpha = lo; return p; }
        if (ghi == 0.0) { p.alpha = hi; return p; }
        if ((glo > 0.0) == (ghi > 0.0)) continue;  // no bracket, redraw (gamma, beta)

        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = fid_at(mid) - F0;
            if (gm == 0.0) { lo = hi = mid; break; }
            if ((gm > 0.0) == (glo > 0.0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
            }
        }
        p.alpha = 0.5 * (lo + hi);
        return p;
    }

    std::ostringstream msg;
    msg << "sample_at_fidelity: no (beta, gamma) bracketed a root after 1000 attempts at F0 = " << F0;
    throw std::runtime_error(msg.str());
}

}  // namespace cascade
