#include "cascade/serialization.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace cascade {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

json chi_entries(const ChoiMatrix& chi) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c)
            row.push_back(json::array({chi(r, c).real(), chi(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string choi_to_json(const ChoiMatrix& chi) {
    json j;
    j["dim"] = 2;
    j["chi"] = chi_entries(chi);
    return j.dump();
}

ChoiMatrix choi_from_json(const std::string& text) {
    json j = parse(text, "choi_from_json");
    if (!j.is_object() || j.value("dim", 0) != 2 || !j.contains("chi"))
        throw std::invalid_argument("choi_from_json: expected {\"dim\":2,\"chi\":[..]}");
    const json& rows = j["chi"];
    if (!rows.is_array() || rows.size() != 4)
        throw std::invalid_argument("choi_from_json: chi must be 4x4");
    ComplexMatrix m(4, 4);
    for (int r = 0; r < 4; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("choi_from_json: chi must be 4x4");
        for (int c = 0; c < 4; ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw std::invalid_argument("choi_from_json: entries must be [re, im]");
            m(r, c) = cdouble(e[0].get<double>(), e[1].get<double>());
        }
    }
    return ChoiMatrix(m);
}

std::string noise_to_json(const FiveParamNoise& w) {
    json j;
    j["theta"] = w.theta;
    j["phi"] = w.phi;
    j["alpha"] = w.alpha;
    j["beta"] = w.beta;
    j["gamma"] = w.gamma;
    return j.dump();
}

FiveParamNoise noise_from_json(const std::string& text) {
    json j = parse(text, "noise_from_json");
    FiveParamNoise w;
    for (auto [name, slot] : {std::pair<const char*, double*>{"theta", &w.theta},
                              {"phi", &w.phi},
                              {"alpha", &w.alpha},
                              {"beta", &w.beta},
                              {"gamma", &w.gamma}}) {
        if (!j.contains(name) || !j[name].is_number())
            throw std::invalid_argument(std::string("noise_from_json: missing ") + name);
        *slot = j[name].get<double>();
    }
    return w;
}

std::string trace_to_json(const ConcatenationTrace& tr, const std::string& code_name,
                          const std::string& noise_desc_json) {
    json j;
    j["F0"] = tr.F0;
    j["code"] = code_name;
    j["noise"] = parse(noise_desc_json, "trace_to_json");
    json levels = json::array();
    for (const auto& rec : tr.levels) {
        json row;
        row["l"] = rec.l;
        row["F"] = rec.F;
        row["D"] = rec.D;
        row["chi"] = chi_entries(rec.chi);
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    if (tr.terminal_L) j["terminal_L"] = *tr.terminal_L;
    return j.dump();
}

std::string ensemble_to_json(const EnsembleSummary& s) {
    json j;
    j["F0"] = s.F0;
    j["M"] = s.M;
    j["seed"] = s.seed;
    j["levels"] = s.levels;
    j["D_max"] = s.D_max;
    j["F_min"] = s.F_min;
    return j.dump();
}

std::string code_to_json(const CodeSpec& c) {
    auto amplitudes = [](const ComplexMatrix& v) {
        json arr = json::array();
        for (int r = 0; r < v.rows(); ++r)
            arr.push_back(json::array({v(r, 0).real(), v(r, 0).imag()}));
        return arr;
    };
    json j;
    j["n"] = c.n;
    j["logical0"] = amplitudes(c.logical0);
    j["logical1"] = amplitudes(c.logical1);
    json errs = json::array();
    for (const auto& e : c.errors) errs.push_back(e.factors);
    j["errors"] = std::move(errs);
    return j.dump();
}

}  // namespace cascade
