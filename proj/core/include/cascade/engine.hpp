#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cascade/channel.hpp"
#include "cascade/code.hpp"

namespace cascade {

// Process tomography over the operator basis |b><d|: feed each through the
// map, then chi[2a+b][2c+d] = eps(|b><d|)(a, c). For a Kraus channel this
// reproduces choi_from_kraus entry for entry.
ChoiMatrix choi_from_map(const std::function<ComplexMatrix(int, int)>& eps);

// One level of protection: encode the principal qubit (register layout
// ancilla (x) principal, principal last), push every physical qubit through
// `noise`, apply the recovery sum R_m rho R_m^dag with R_m = P_m U^dag, and
// trace out the ancilla. The R_m embed the decode, so no further U^dag.
ChoiMatrix effective_channel(const QuantumChannel& noise, const CodeSpec& code);

// Same map with the recovery operators materialized as full matrices and the
// partial trace taken explicitly; agrees with effective_channel bit for bit.
ChoiMatrix effective_channel_with_recovery(const QuantumChannel& noise, const CodeSpec& code);

struct LevelRecord {
    int l = 0;
    ChoiMatrix chi;
    double F = 0.0;  // entangling fidelity of chi
    double D = 0.0;  // distance to the equal-fidelity depolarizing channel
};

struct ConcatenationTrace {
    double F0 = 0.0;
    std::vector<LevelRecord> levels;       // level 0 is the bare channel
    std::optional<int> terminal_L;         // first level at F >= 1 - near_perfect
};

// Iterates the effective-channel map from a bare channel. Level l >= 1 draws
// its Kraus list from the level l-1 Choi matrix. Stops once F reaches
// `target` (default 1 - near_perfect; pass a value > 1 to always run to
// max_levels). max_levels is capped at 12.
ConcatenationTrace concatenate(const QuantumChannel& noise0, const CodeSpec& code,
                               int max_levels = 12, double target = -1.0);

// Fidelity recursion of the five-qubit code on depolarizing inputs, in the
// fidelity and error-probability parametrizations (F = 1 - 3p/4).
double dep_fidelity_step(double f);
double dep_fidelity_step_p(double p);

// Depolarizing channel after l exact recursion steps from fidelity f0.
ChoiMatrix reference_depolarizing_choi(double f0, int l);

// One level of the five-qubit / Steane code on amplitude damping of strength
// gamma, as closed forms in gamma.
double closed_form_ad_five(double gamma);
double closed_form_ad_steane(double gamma);

// Fixed point of dep_fidelity_step_p(p) = 1 - 3p/4, bisected on [0.1, 0.3].
double find_threshold();

}  // namespace cascade
