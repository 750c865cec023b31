#pragma once

#include <string>
#include <vector>

#include "cascade/complex_matrix.hpp"

namespace cascade {

// Tensor product of single-qubit Pauli factors; qubit 0 is the leftmost.
struct PauliString {
    int n = 0;
    std::string factors;  // one of I, X, Y, Z per qubit

    int weight() const;
};

ComplexMatrix pauli_string_matrix(const PauliString& p);

// An [[n, 1]] code: logical codewords, the ordered correctable-error list
// (E_0 = identity, 2^(n-1) entries) and the encoder unitary whose column
// (2m + i) is E_m |i_L>. Ancilla basis states |a_m> are the computational
// basis of the first n-1 qubits, |a_0> = |0...0>, principal qubit last.
struct CodeSpec {
    int n = 0;
    ComplexMatrix logical0;  // 2^n x 1
    ComplexMatrix logical1;  // 2^n x 1
    std::vector<PauliString> errors;
    ComplexMatrix encoder;  // 2^n x 2^n
};

ComplexMatrix build_encoder(const ComplexMatrix& logical0, const ComplexMatrix& logical1,
                            const std::vector<PauliString>& errors);

// Both constructions are immutable singletons; they validate themselves on
// first use and abort with the first violated error pair if that ever fails.
const CodeSpec& five_qubit_code();
const CodeSpec& steane_code();

struct ValidationReport {
    double norm_dev = 0.0;        // codeword norms and mutual overlap
    double gram_dev = 0.0;        // Gram matrix of the 2^n images vs identity
    double kl_dev = 0.0;          // P E_m^dag E_n P - delta_mn P, worst pair
    double unitarity_dev = 0.0;   // |U U^dag - I|_F
    bool pass = false;
    std::string detail;           // first violation, when not passing
};

ValidationReport validate_code(const CodeSpec& c);

}  // namespace cascade
