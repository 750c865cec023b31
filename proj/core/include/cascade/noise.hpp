#pragma once

#include "cascade/channel.hpp"
#include "cascade/random.hpp"

namespace cascade {

// Five-parameter single-qubit noise family: four base Kraus operators shaped
// by (alpha, beta, gamma), conjugated by the unitary U2(theta, phi). The base
// set satisfies sum Abar^dag Abar = I for every parameter choice.
struct FiveParamNoise {
    double theta = 0.0;
    double phi = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct PauliChannel {
    double p0 = 1.0;
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;
};

QuantumChannel depolarizing(double F0);     // F0 in [1/4, 1]
QuantumChannel depolarizing_p(double p);    // p in [0, 1]; same as depolarizing(1 - 3p/4)
QuantumChannel amplitude_damping(double gamma);
QuantumChannel ad_from_fidelity(double F0);
double ad_gamma_from_fidelity(double F0);   // gamma = 1 - (2 sqrt(F0) - 1)^2
QuantumChannel bit_flip(double F0);
QuantumChannel pauli(const PauliChannel& p);

QuantumChannel general_noise(const FiveParamNoise& p);

// 1/4 [(cos a + sin b cos g)^2 + (sin a cos g + cos b)^2]; theta and phi
// drop out because traces are conjugation invariant.
double model_fidelity(const FiveParamNoise& p);

// Centered case (alpha = beta): px = py = sin^2(a) sin^2(g) / 2,
// pz = (cos a - sin a cos g)^2 / 2.
PauliChannel centered_to_pauli(double alpha, double gamma);

// Draws theta, phi once, then rejection-samples (gamma, beta) on [0, pi/2]^2
// until the fidelity equation brackets a root in alpha, solved by bisection.
// Throws after 1000 rejected draws.
FiveParamNoise sample_at_fidelity(double F0, SplitMix64& rng);

}  // namespace cascade
