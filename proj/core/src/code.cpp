#include "cascade/code.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "cascade/tolerances.hpp"

namespace cascade {

namespace {

constexpr cdouble kI{0.0, 1.0};

ComplexMatrix pauli_factor(char p) {
    ComplexMatrix m(2, 2);
    switch (p) {
        case 'I': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 'X': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'Y': m(0, 1) = -kI; m(1, 0) = kI; break;
        case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::invalid_argument("pauli_string_matrix: bad factor '" + std::string(1, p) + "'");
    }
    return m;
}

ComplexMatrix codeword(int n, double amp, const std::vector<std::string>& plus,
                       const std::vector<std::string>& minus) {
    ComplexMatrix v(1 << n, 1);
    for (const auto& s : plus) v(std::stoi(s, nullptr, 2), 0) = amp;
    for (const auto& s : minus) v(std::stoi(s, nullptr, 2), 0) = -amp;
    return v;
}

std::vector<PauliString> weight1_errors(int n) {
    std::vector<PauliString> out;
    out.push_back({n, std::string(n, 'I')});
    for (char p : {'X', 'Y', 'Z'})
        for (int i = 0; i < n; ++i) {
            std::string f(n, 'I');
            f[i] = p;
            out.push_back({n, f});
        }
    return out;
}

CodeSpec make_five_qubit() {
    CodeSpec c;
    c.n = 5;
    c.logical0 = codeword(5, 0.25,
        {"00000", "10010", "01001", "10100", "01010", "00101"},
        {"11011", "00110", "11000", "11101", "00011", "11110",
         "01111", "10001", "01100", "10111"});
    c.logical1 = codeword(5, 0.25,
        {"11111", "01101", "10110", "01011", "10101", "11010"},
        {"00100", "11001", "00111", "00010", "11100", "00001",
         "10000", "01110", "10011", "01000"});
    c.errors = weight1_errors(5);
    c.encoder = build_encoder(c.logical0, c.logical1, c.errors);
    return c;
}

// Parity-check rows of the [7,4] Hamming code, chosen so that column i
// (1-based) reads out the binary value i. An X error on qubit i then has
// X-syndrome i, a Z error has Z-syndrome i, and Y contributes to both.
constexpr int kSteaneRows[3] = {0b0001111, 0b0110011, 0b1010101};

ComplexMatrix steane_codeword(bool flip) {
    ComplexMatrix v(1 << 7, 1);
    const double amp = 1.0 / std::sqrt(8.0);
    for (int b = 0; b < 8; ++b) {
        int word = 0;
        for (int r = 0; r < 3; ++r)
            if (b >> r & 1) word ^= kSteaneRows[r];
        if (flip) word ^= 0b1111111;
        v(word, 0) = amp;
    }
    return v;
}

// The 21 weight-1 errors cover syndrome pairs (s, 0), (0, t) and (s, s).
// Every remaining pair (s, t) with distinct nonzero s, t admits exactly
// three weight-2 corrections:
//   A: X on qubit s, Z on qubit t
//   B: Y on qubit s, Z on qubit s^t
//   C: X on qubit s^t, Y on qubit t
// Walking the pairs in lexicographic order, the first 3 take form C, the
// next 20 form B and the remaining 19 form A. This split (not the choice
// of which pairs take which form) is what fixes the code's behaviour on
// non-Pauli noise.
std::vector<PauliString> steane_weight2() {
    std::vector<PauliString> out;
    int k = 0;
    for (int s = 1; s <= 7; ++s)
        for (int t = 1; t <= 7; ++t) {
            if (t == s) continue;
            std::string f(7, 'I');
            if (k < 3) {
                f[(s ^ t) - 1] = 'X';
                f[t - 1] = 'Y';
            } else if (k < 23) {
                f[s - 1] = 'Y';
                f[(s ^ t) - 1] = 'Z';
            } else {
                f[s - 1] = 'X';
                f[t - 1] = 'Z';
            }
            out.push_back({7, f});
            ++k;
        }
    return out;
}

CodeSpec make_steane() {
    CodeSpec c;
    c.n = 7;
    c.logical0 = steane_codeword(false);
    c.logical1 = steane_codeword(true);
    c.errors = weight1_errors(7);
    for (auto& e : steane_weight2()) c.errors.push_back(std::move(e));
    c.encoder = build_encoder(c.logical0, c.logical1, c.errors);
    return c;
}

CodeSpec checked(CodeSpec c, const char* name) {
    ValidationReport report = validate_code(c);
    if (!report.pass)
        throw std::logic_error(std::string(name) + " failed self-check: " + report.detail);
    return c;
}

}  // namespace

int PauliString::weight() const {
    int w = 0;
    for (char f : factors)
        if (f != 'I') ++w;
    return w;
}

ComplexMatrix pauli_string_matrix(const PauliString& p) {
    if (p.n <= 0 || p.n > 7 || static_cast<int>(p.factors.size()) != p.n)
        throw std::invalid_argument("pauli_string_matrix: bad length");
    ComplexMatrix m(1, 1);
    m(0, 0) = 1.0;
    for (char f : p.factors) m = kron(m, pauli_factor(f));
    return m;
}

ComplexMatrix build_encoder(const ComplexMatrix& logical0, const ComplexMatrix& logical1,
                            const std::vector<PauliString>& errors) {
    if (logical0.cols() != 1 || logical1.cols() != 1 || logical0.rows() != logical1.rows())
        throw std::invalid_argument("build_encoder: codewords must be equal-length columns");
    const int dim = logical0.rows();
    if (static_cast<int>(errors.size()) * 2 != dim)
        throw std::invalid_argument("build_encoder: need dim/2 errors");
    ComplexMatrix u(dim, dim);
    for (int m = 0; m < dim / 2; ++m) {
        ComplexMatrix em = pauli_string_matrix(errors[m]);
        ComplexMatrix c0 = em * logical0;
        ComplexMatrix c1 = em * logical1;
        for (int r = 0; r < dim; ++r) {
            u(r, 2 * m) = c0(r, 0);
            u(r, 2 * m + 1) = c1(r, 0);
        }
    }
    require_unitary(u, "encoder");
    return u;
}

const CodeSpec& five_qubit_code() {
    static const CodeSpec spec = checked(make_five_qubit(), "five-qubit code");
    return spec;
}

const CodeSpec& steane_code() {
    static const CodeSpec spec = checked(make_steane(), "Steane code");
    return spec;
}

ValidationReport validate_code(const CodeSpec& c) {
    ValidationReport rep;
    const int dim = 1 << c.n;
    const int half = dim / 2;

    auto overlap = [](const ComplexMatrix& a, const ComplexMatrix& b) {
        cdouble s = 0.0;
        for (int r = 0; r < a.rows(); ++r) s += std::conj(a(r, 0)) * b(r, 0);
        return s;
    };

    rep.norm_dev = std::max({std::abs(overlap(c.logical0, c.logical0) - 1.0),
                             std::abs(overlap(c.logical1, c.logical1) - 1.0),
                             std::abs(overlap(c.logical0, c.logical1))});

    std::vector<ComplexMatrix> images;
    images.reserve(dim);
    for (int m = 0; m < half; ++m) {
        ComplexMatrix em = pauli_string_matrix(c.errors[m]);
        images.push_back(em * c.logical0);
        images.push_back(em * c.logical1);
    }

    int bad_a = -1, bad_b = -1;
    double bad_mag = 0.0;
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            double dev = std::abs(overlap(images[a], images[b]) - (a == b ? 1.0 : 0.0));
            rep.gram_dev = std::max(rep.gram_dev, dev);
            // P E_m^dag E_n P in the logical basis is the 2x2 block of this
            // same Gram matrix, so one scan covers both invariants.
            rep.kl_dev = std::max(rep.kl_dev, dev);
            if (dev > tolerances().code_gram && bad_a < 0) {
                bad_a = a;
                bad_b = b;
                bad_mag = std::abs(overlap(images[a], images[b]));
            }
        }

    if (c.encoder.rows() == dim && c.encoder.cols() == dim) {
        ComplexMatrix resid = c.encoder * c.encoder.adjoint();
        for (int r = 0; r < dim; ++r) resid(r, r) -= 1.0;
        rep.unitarity_dev = resid.frobenius_norm();
    } else {
        rep.unitarity_dev = 1.0;
        rep.detail = "encoder has wrong shape";
    }

    rep.pass = rep.norm_dev <= tolerances().code_gram &&
               rep.gram_dev <= tolerances().code_gram &&
               rep.kl_dev <= tolerances().code_gram &&
               rep.unitarity_dev <= tolerances().unitarity && rep.detail.empty();

    if (!rep.pass && rep.detail.empty() && bad_a >= 0) {
        int m = bad_a / 2, n = bad_b / 2;
        rep.detail = "images of " + c.errors[m].factors + "|" + std::to_string(bad_a % 2) +
                     "_L> and " + c.errors[n].factors + "|" + std::to_string(bad_b % 2) + "_L>";
        rep.detail += bad_mag > 0.5 && m != n
                          ? " coincide: errors " + std::to_string(m) + " and " + std::to_string(n) +
                                " share a syndrome"
                          : " are not orthogonal";
    } else if (!rep.pass && rep.detail.empty()) {
        rep.detail = "norm or unitarity deviation above tolerance";
    }
    return rep;
}

}  // namespace cascade
