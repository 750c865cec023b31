#include "cascade/tolerances.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace cascade {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

void apply_tolerance_overrides(const std::string& spec) {
    Tolerances& t = tolerances();
    const std::map<std::string, double*> fields = {
        {"hermiticity", &t.hermiticity},
        {"unitarity", &t.unitarity},
        {"trace_preservation", &t.trace_preservation},
        {"psd_floor", &t.psd_floor},
        {"choi_trace", &t.choi_trace},
        {"reconstruction", &t.reconstruction},
        {"equality", &t.equality},
        {"kraus_cutoff", &t.kraus_cutoff},
        {"jacobi_offdiag", &t.jacobi_offdiag},
        {"code_gram", &t.code_gram},
        {"bisection", &t.bisection},
        {"near_perfect", &t.near_perfect},
    };

    size_t pos = 0;
    while (pos < spec.size()) {
        size_t end = spec.find(',', pos);
        if (end == std::string::npos) end = spec.size();
        const std::string item = spec.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;

        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("tolerance override '" + item + "' is not name=value");
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);

        auto it = fields.find(name);
        if (it == fields.end())
            throw std::invalid_argument("unknown tolerance '" + name + "'");

        double parsed = 0.0;
        const char* first = value.data();
        const char* last = value.data() + value.size();
        auto [ptr, ec] = std::from_chars(first, last, parsed);
        if (ec != std::errc() || ptr != last || !(parsed > 0.0))
            throw std::invalid_argument("tolerance '" + name + "' needs a positive number, got '" + value + "'");
        *it->second = parsed;
    }
}

}  // namespace cascade
