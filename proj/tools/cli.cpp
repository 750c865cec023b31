#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cascade/channel.hpp"
#include "cascade/code.hpp"
#include "cascade/engine.hpp"
#include "cascade/ensemble.hpp"
#include "cascade/noise.hpp"
#include "cascade/serialization.hpp"
#include "cascade/tolerances.hpp"

namespace cascade_cli {
namespace {

using json = nlohmann::ordered_json;
using cascade::format_double;

constexpr const char* kNearPerfectCell = ">=1-1e-5";

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\nRun with --help for usage.\n";
    return 2;
}

int write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << body;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

struct RunOptions {
    std::string code;
    std::string noise;
    std::optional<double> fidelity;
    std::optional<double> gamma;
    std::vector<double> params;
    int levels = 12;
    std::string out;
};

int do_run(const RunOptions& o) {
    const cascade::CodeSpec* code = nullptr;
    if (o.code == "five")
        code = &cascade::five_qubit_code();
    else if (o.code == "steane")
        code = &cascade::steane_code();
    else
        return usage_error("--code must be five or steane");
    if (o.levels < 0 || o.levels > 12) return usage_error("--levels must lie in [0, 12]");

    cascade::QuantumChannel ch;
    json desc;
    if (o.noise == "dep") {
        if (!o.fidelity) return usage_error("--noise dep needs --fidelity");
        ch = cascade::depolarizing(*o.fidelity);
        desc = {{"kind", "dep"}, {"fidelity", *o.fidelity}};
    } else if (o.noise == "ad") {
        if (o.gamma) {
            ch = cascade::amplitude_damping(*o.gamma);
            desc = {{"kind", "ad"}, {"gamma", *o.gamma}};
        } else if (o.fidelity) {
            double g = cascade::ad_gamma_from_fidelity(*o.fidelity);
            ch = cascade::amplitude_damping(g);
            desc = {{"kind", "ad"}, {"fidelity", *o.fidelity}, {"gamma", g}};
        } else {
            return usage_error("--noise ad needs --fidelity or --gamma");
        }
    } else if (o.noise == "bitflip") {
        if (!o.fidelity) return usage_error("--noise bitflip needs --fidelity");
        ch = cascade::bit_flip(*o.fidelity);
        desc = {{"kind", "bitflip"}, {"fidelity", *o.fidelity}};
    } else if (o.noise == "pauli") {
        if (o.params.size() != 4) return usage_error("--noise pauli needs --params p0 px py pz");
        ch = cascade::pauli({o.params[0], o.params[1], o.params[2], o.params[3]});
        desc = {{"kind", "pauli"}, {"p", o.params}};
    } else if (o.noise == "general") {
        if (o.params.size() != 5)
            return usage_error("--noise general needs --params theta phi alpha beta gamma");
        cascade::FiveParamNoise w{o.params[0], o.params[1], o.params[2], o.params[3], o.params[4]};
        ch = cascade::general_noise(w);
        desc = {{"kind", "general"}, {"theta", w.theta}, {"phi", w.phi},
                {"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}};
    } else {
        return usage_error("--noise must be dep, ad, bitflip, pauli or general");
    }

    cascade::ConcatenationTrace tr = cascade::concatenate(ch, *code, o.levels);
    return write_output(o.out, cascade::trace_to_json(tr, o.code, desc.dump()) + "\n");
}

int do_tables(int which, const std::string& out, const std::string& format) {
    if (format != "csv" && format != "json") return usage_error("--format must be csv or json");
    std::ostringstream csv;
    json rows = json::array();

    if (which == 1 || which == 2) {
        const cascade::CodeSpec& code = cascade::five_qubit_code();
        // run all six levels even past near-perfect so every row is numeric
        auto dep = cascade::concatenate(cascade::depolarizing(0.92), code, 5, 2.0);
        auto ad = cascade::concatenate(cascade::ad_from_fidelity(0.92), code, 5, 2.0);
        auto bf = cascade::concatenate(cascade::bit_flip(0.92), code, 5, 2.0);
        if (which == 1) {
            csv << "l,dep,ad,bitflip\n";
            for (int l = 0; l <= 5; ++l) {
                csv << l << ',' << format_double(dep.levels[l].F) << ','
                    << format_double(ad.levels[l].F) << ',' << format_double(bf.levels[l].F) << '\n';
                rows.push_back({{"l", l}, {"dep", dep.levels[l].F},
                                {"ad", ad.levels[l].F}, {"bitflip", bf.levels[l].F}});
            }
        } else {
            csv << "l,ad,bitflip\n";
            for (int l = 0; l <= 5; ++l) {
                csv << l << ',' << format_double(ad.levels[l].D) << ','
                    << format_double(bf.levels[l].D) << '\n';
                rows.push_back({{"l", l}, {"ad", ad.levels[l].D}, {"bitflip", bf.levels[l].D}});
            }
        }
    } else if (which == 3) {
        const cascade::CodeSpec& code = cascade::steane_code();
        auto dep = cascade::concatenate(cascade::depolarizing(0.94), code, 9);
        auto ad = cascade::concatenate(cascade::ad_from_fidelity(0.94), code, 9);
        auto bf = cascade::concatenate(cascade::bit_flip(0.94), code, 9);
        const double near_perfect = 1.0 - cascade::tolerances().near_perfect;
        auto cell = [&](const cascade::ConcatenationTrace& tr, int l) -> std::optional<double> {
            if (l < static_cast<int>(tr.levels.size()) && tr.levels[l].F < near_perfect)
                return tr.levels[l].F;
            return std::nullopt;
        };
        csv << "l,dep,ad,bitflip\n";
        for (int l = 0; l <= 9; ++l) {
            json row = {{"l", l}};
            csv << l;
            for (auto [name, tr] : {std::pair<const char*, const cascade::ConcatenationTrace*>
                                        {"dep", &dep}, {"ad", &ad}, {"bitflip", &bf}}) {
                auto v = cell(*tr, l);
                csv << ',' << (v ? format_double(*v) : std::string(kNearPerfectCell));
                if (v)
                    row[name] = *v;
                else
                    row[name] = kNearPerfectCell;
            }
            csv << '\n';
            rows.push_back(std::move(row));
        }
    } else {
        return usage_error("--which must be 1, 2 or 3");
    }

    return write_output(out, format == "json" ? rows.dump() + "\n" : csv.str());
}

int do_threshold(const std::string& out) {
    double p = cascade::find_threshold();
    std::string body = "p* = " + format_double(p) + "\nF0* = " + format_double(1.0 - 0.75 * p) + "\n";
    return write_output(out, body);
}

struct CurveOptions {
    std::string which;
    std::optional<double> from, to;
    int points = 50;
    std::string out;
    std::string format = "csv";
};

int do_curves(const CurveOptions& o) {
    if (o.format != "csv" && o.format != "json") return usage_error("--format must be csv or json");
    if (o.points < 1) return usage_error("--points must be >= 1");

    double lo = 0.0, hi = 1.0;
    double (*closed)(double) = nullptr;
    std::function<double(double)> numeric;
    auto fidelity_of = [](const cascade::QuantumChannel& ch, const cascade::CodeSpec& code) {
        return cascade::entangling_fidelity(cascade::effective_channel(ch, code));
    };
    if (o.which == "eq-dep-F") {
        lo = 0.25;
        closed = cascade::dep_fidelity_step;
        numeric = [&](double x) { return fidelity_of(cascade::depolarizing(x), cascade::five_qubit_code()); };
    } else if (o.which == "eq-dep-p") {
        closed = cascade::dep_fidelity_step_p;
        numeric = [&](double x) { return fidelity_of(cascade::depolarizing_p(x), cascade::five_qubit_code()); };
    } else if (o.which == "ad-five") {
        closed = cascade::closed_form_ad_five;
        numeric = [&](double x) { return fidelity_of(cascade::amplitude_damping(x), cascade::five_qubit_code()); };
    } else if (o.which == "ad-steane") {
        closed = cascade::closed_form_ad_steane;
        numeric = [&](double x) { return fidelity_of(cascade::amplitude_damping(x), cascade::steane_code()); };
    } else {
        return usage_error("--which must be eq-dep-F, eq-dep-p, ad-five or ad-steane");
    }

    double from = o.from.value_or(lo), to = o.to.value_or(hi);
    if (from < lo - 1e-12 || to > hi + 1e-12 || from > to)
        return usage_error("grid bounds must satisfy " + format_double(lo) + " <= from <= to <= " +
                           format_double(hi));

    std::ostringstream csv;
    csv << "param,closed,numeric,absdiff\n";
    json rows = json::array();
    for (int i = 0; i < o.points; ++i) {
        double x = o.points == 1 ? from : from + (to - from) * i / (o.points - 1);
        double c = closed(x);
        double n = numeric(x);
        double d = std::abs(c - n);
        csv << format_double(x) << ',' << format_double(c) << ',' << format_double(n) << ','
            << format_double(d) << '\n';
        rows.push_back({{"param", x}, {"closed", c}, {"numeric", n}, {"absdiff", d}});
    }
    return write_output(o.out, o.format == "json" ? rows.dump() + "\n" : csv.str());
}

struct EnsembleOptions {
    double fidelity = 0.0;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::optional<int> levels;
    int workers = 0;
    std::string out;
    std::string samples_out;
};

int do_ensemble(const EnsembleOptions& o) {
    if (!(o.fidelity > 0.86 && o.fidelity < 1.0))
        return usage_error("--fidelity must lie in (0.86, 1)");
    if (o.samples < 1) return usage_error("--samples must be >= 1");
    int levels;
    if (o.levels) {
        levels = *o.levels;
        if (levels < 0 || levels > 12) return usage_error("--levels must lie in [0, 12]");
    } else {
        // depth of the depolarizing reference at the same fidelity
        auto ref = cascade::concatenate(cascade::depolarizing(o.fidelity), cascade::five_qubit_code(), 12);
        levels = ref.terminal_L.value_or(12);
    }

    cascade::EnsembleSummary summary = cascade::run_ensemble(
        o.fidelity, o.samples, o.seed, levels, o.workers, !o.samples_out.empty());
    int rc = write_output(o.out, cascade::ensemble_to_json(summary) + "\n");
    if (rc != 0) return rc;

    if (!o.samples_out.empty()) {
        std::ostringstream csv;
        csv << "sample,theta,phi,alpha,beta,gamma";
        for (int l = 0; l <= levels; ++l) csv << ",F_" << l;
        for (int l = 0; l <= levels; ++l) csv << ",D_" << l;
        csv << '\n';
        for (int i = 0; i < summary.M; ++i) {
            const cascade::SampleRecord& s = summary.samples[i];
            csv << i << ',' << format_double(s.noise.theta) << ',' << format_double(s.noise.phi)
                << ',' << format_double(s.noise.alpha) << ',' << format_double(s.noise.beta)
                << ',' << format_double(s.noise.gamma);
            for (double f : s.F) csv << ',' << format_double(f);
            for (double d : s.D) csv << ',' << format_double(d);
            csv << '\n';
        }
        rc = write_output(o.samples_out, csv.str());
    }
    return rc;
}

}  // namespace

int run_cli(int argc, char** argv) {
    if (const char* tol = std::getenv("CASCADE_TOL")) {
        try {
            cascade::apply_tolerance_overrides(tol);
        } catch (const std::exception& e) {
            return usage_error(std::string("CASCADE_TOL: ") + e.what());
        }
    }

    CLI::App app{"Effective-channel cascade for concatenated qubit codes"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Concatenate one channel; write the trace as JSON");
    run_cmd->add_option("--code", run_opts.code, "five or steane")->required();
    run_cmd->add_option("--noise", run_opts.noise, "dep, ad, bitflip, pauli or general")->required();
    run_cmd->add_option("--fidelity", run_opts.fidelity, "initial entangling fidelity");
    run_cmd->add_option("--gamma", run_opts.gamma, "damping strength (ad only)");
    run_cmd->add_option("--params", run_opts.params,
                        "pauli: p0 px py pz | general: theta phi alpha beta gamma");
    run_cmd->add_option("--levels", run_opts.levels, "maximum concatenation level, default 12");
    run_cmd->add_option("--out", run_opts.out, "output path, default stdout");

    int table_which = 0;
    std::string table_out, table_format = "csv";
    auto* tables_cmd = app.add_subcommand("tables", "Emit the three study tables");
    tables_cmd->add_option("--which", table_which, "1, 2 or 3")->required();
    tables_cmd->add_option("--out", table_out, "output path, default stdout");
    tables_cmd->add_option("--format", table_format, "csv (default) or json");

    std::string threshold_out;
    auto* threshold_cmd = app.add_subcommand("threshold", "Locate the depolarizing threshold");
    threshold_cmd->add_option("--out", threshold_out, "output path, default stdout");

    CurveOptions curve_opts;
    auto* curves_cmd = app.add_subcommand("curves", "Closed form vs numeric engine on a grid");
    curves_cmd->add_option("--which", curve_opts.which, "eq-dep-F, eq-dep-p, ad-five or ad-steane")
        ->required();
    curves_cmd->add_option("--from", curve_opts.from, "grid start (default: domain start)");
    curves_cmd->add_option("--to", curve_opts.to, "grid end (default: domain end)");
    curves_cmd->add_option("--points", curve_opts.points, "grid size, default 50");
    curves_cmd->add_option("--out", curve_opts.out, "output path, default stdout");
    curves_cmd->add_option("--format", curve_opts.format, "csv (default) or json");

    EnsembleOptions ens_opts;
    auto* ensemble_cmd = app.add_subcommand("ensemble", "Seeded sweep over random channels");
    ensemble_cmd->add_option("--fidelity", ens_opts.fidelity, "common model fidelity, in (0.86, 1)")
        ->required();
    ensemble_cmd->add_option("--samples", ens_opts.samples, "sample count M, default 1000");
    ensemble_cmd->add_option("--seed", ens_opts.seed, "RNG seed, default 1");
    ensemble_cmd->add_option("--levels", ens_opts.levels,
                             "levels per sample (default: depolarizing-reference depth)");
    ensemble_cmd->add_option("--workers", ens_opts.workers, "thread count, 0 = hardware");
    ensemble_cmd->add_option("--out", ens_opts.out, "summary JSON path, default stdout");
    ensemble_cmd->add_option("--samples-out", ens_opts.samples_out, "per-sample CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) return do_run(run_opts);
        if (*tables_cmd) return do_tables(table_which, table_out, table_format);
        if (*threshold_cmd) return do_threshold(threshold_out);
        if (*curves_cmd) return do_curves(curve_opts);
        if (*ensemble_cmd) return do_ensemble(ens_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return usage_error("missing subcommand");
}

}  // namespace cascade_cli
