#pragma once

#include <string>

namespace cascade {

// Central tolerance record. Every numeric gate in the library reads from this
// one struct so that an override (CASCADE_TOL) reaches all of them at once.
struct Tolerances {
    // The three trace/positivity gates sit at 1e-7, not machine scale: Kraus
    // drift compounds by roughly the register dimension per concatenation
    // level, and a nine-level seven-qubit chain measures up to ~9e-9 of
    // honest rounding. 1e-7 keeps an order of magnitude of headroom there
    // while still rejecting any genuinely unphysical channel.
    double hermiticity = 1e-9;         // max-entry |h - h^dag| accepted as Hermitian
    double unitarity = 1e-10;          // Frobenius norm of U U^dag - I
    double trace_preservation = 1e-7;  // max-entry of sum K^dag K - I
    double psd_floor = 1e-7;           // most negative admissible Choi eigenvalue (as magnitude)
    double choi_trace = 1e-7;          // |Tr chi - 2|
    double reconstruction = 1e-10;     // V diag(lam) V^dag vs input, Frobenius
    double equality = 1e-12;           // generic elementwise comparisons
    double kraus_cutoff = 1e-12;       // Choi eigenvalues below this are dropped
    double jacobi_offdiag = 1e-13;     // sweep convergence target, off-diagonal Frobenius
    double code_gram = 1e-10;          // Gram matrix vs identity, max entry
    double bisection = 1e-9;           // root bracket width
    double near_perfect = 1e-5;        // 1 - F threshold that stops concatenation
};

Tolerances& tolerances();

// Patches the global record from a "name=value,name=value" list, e.g.
// "hermiticity=1e-8,bisection=1e-10". Unknown names or malformed numbers
// throw std::invalid_argument. The CLI feeds CASCADE_TOL through here.
void apply_tolerance_overrides(const std::string& spec);

}  // namespace cascade
