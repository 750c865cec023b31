#pragma once

#include <string>

#include "cascade/channel.hpp"
#include "cascade/code.hpp"
#include "cascade/engine.hpp"
#include "cascade/ensemble.hpp"
#include "cascade/noise.hpp"

namespace cascade {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

// {"dim":2,"chi":[[[re,im] x4] x4]}; the parse re-runs every ChoiMatrix
// invariant check and round-trips bit for bit.
std::string choi_to_json(const ChoiMatrix& chi);
ChoiMatrix choi_from_json(const std::string& text);

std::string noise_to_json(const FiveParamNoise& w);
FiveParamNoise noise_from_json(const std::string& text);

// {"F0":..,"code":..,"noise":{..},"levels":[{"l","F","D","chi"},..],
//  "terminal_L":..}; terminal_L is omitted when the run never went
// near-perfect. noise_desc_json must already be a JSON object.
std::string trace_to_json(const ConcatenationTrace& tr, const std::string& code_name,
                          const std::string& noise_desc_json);

// {"F0","M","seed","levels","D_max","F_min"}; retained samples are not
// serialized here (the CLI writes them as CSV instead).
std::string ensemble_to_json(const EnsembleSummary& s);

// {"n","logical0","logical1","errors"} with codeword amplitudes as [re,im]
// pairs and errors as factor strings, for cross-implementation diffing.
std::string code_to_json(const CodeSpec& c);

}  // namespace cascade
