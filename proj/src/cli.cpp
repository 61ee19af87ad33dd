#include "qsc/cli.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsc/io.hpp"
#include "qsc/plot.hpp"

namespace qsc {

namespace {

double strict_double(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    // from_chars rejects an explicit plus sign, so skip one ourselves
    if (begin != end && *begin == '+' && end - begin > 1 && begin[1] != '+' && begin[1] != '-')
        ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw DomainError("'" + text + "' is not a number");
    return value;
}

// Position of the sign splitting "a+bi" into its parts, skipping a leading
// sign and exponent signs. npos when there is no split.
size_t rectangular_split(const std::string& body) {
    for (size_t p = 1; p < body.size(); ++p) {
        if (body[p] != '+' && body[p] != '-') continue;
        const char before = body[p - 1];
        if (before == 'e' || before == 'E') continue;
        return p;
    }
    return std::string::npos;
}

} // namespace

cd parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty complex number");

    const size_t at = s.find('@');
    if (at != std::string::npos) {
        const double mag = strict_double(s.substr(0, at));
        const double angle = strict_double(s.substr(at + 1));
        return cd{mag * std::cos(angle), mag * std::sin(angle)};
    }

    if (s.back() == 'i') {
        const std::string body = s.substr(0, s.size() - 1);
        const size_t split = rectangular_split(body);
        std::string imag_text = (split == std::string::npos) ? body : body.substr(split);
        if (imag_text.empty() || imag_text == "+") imag_text = "1";
        else if (imag_text == "-") imag_text = "-1";
        const double re = (split == std::string::npos) ? 0.0 : strict_double(body.substr(0, split));
        return cd{re, strict_double(imag_text)};
    }
    return cd{strict_double(s), 0.0};
}

namespace {

// One config-file key: the flag that can override it and how to store the
// file's value when that flag was not given.
struct Binding {
    std::string key;
    CLI::Option* opt;
    std::function<void(const nlohmann::json&)> apply;
};

// Per-subcommand config plumbing.
struct ConfigHook {
    CLI::Option* config = nullptr;
    CLI::Option* out = nullptr;
    std::vector<Binding> bindings;
};

void apply_config(const std::string& path, const std::vector<Binding>& bindings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("config " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw DomainError("config " + path + ": expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        const Binding* hit = nullptr;
        for (const Binding& b : bindings)
            if (b.key == key) {
                hit = &b;
                break;
            }
        if (!hit) throw DomainError("config " + path + ": unknown key '" + key + "'");
        if (hit->opt->count() > 0) continue; // flags win over the file
        try {
            hit->apply(value);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError("config " + path + ", key '" + key + "': " + e.what());
        }
    }
}

std::function<void(const nlohmann::json&)> store_double(double& target) {
    return [&target](const nlohmann::json& v) { target = v.get<double>(); };
}

std::function<void(const nlohmann::json&)> store_int(int& target) {
    return [&target](const nlohmann::json& v) { target = v.get<int>(); };
}

std::function<void(const nlohmann::json&)> store_bool(bool& target) {
    return [&target](const nlohmann::json& v) { target = v.get<bool>(); };
}

CLI::Validator complex_validator() {
    return CLI::Validator(
        [](std::string& input) -> std::string {
            try {
                parse_complex(input);
            } catch (const std::exception& e) {
                return std::string(e.what());
            }
            return {};
        },
        "COMPLEX");
}

void print_report(const ArrowReport& report) {
    std::cout << "interior samples: " << report.interior << "\n";
    std::cout << "normal: " << report.normal << "  reversed: " << report.reversed
              << "  stalled: " << report.stalled << "\n";
    if (report.consistency)
        std::cout << "consistency: " << format_sig12(*report.consistency) << " ("
                  << report.consistent << "/" << report.classified << ")\n";
    else
        std::cout << "consistency: undefined (no classified samples)\n";
    if (report.mismatch_times.empty()) {
        std::cout << "mismatches: none\n";
        return;
    }
    std::cout << "mismatches at:";
    for (double t : report.mismatch_times) std::cout << ' ' << format_sig12(t);
    std::cout << "\n";
}

int execute(const RunConfig& cfg, const std::string& alpha_text) {
    switch (cfg.kind) {
    case ExperimentKind::TwoQubit: {
        TwoQubitScenario scenario = cfg.two;
        scenario.alpha = parse_complex(alpha_text);
        const std::vector<TimeSeriesRecord> records = run_two_qubit(scenario, cfg.jobs);
        write_file_atomic(cfg.out + ".csv", to_csv(records));
        std::cout << cfg.out << ".csv: " << records.size() << " rows\n";
        if (cfg.plot) {
            write_file_atomic(cfg.out + ".svg", timeseries_svg(records));
            std::cout << cfg.out << ".svg written\n";
        }
        return 0;
    }
    case ExperimentKind::ThreeQubitGrid: {
        const std::vector<GridRecord> records = run_three_qubit_grid(cfg.grid, cfg.jobs);
        write_file_atomic(cfg.out + ".csv", to_csv(records));
        std::cout << cfg.out << ".csv: " << records.size() << " rows\n";
        if (cfg.plot) {
            write_file_atomic(cfg.out + ".svg", grid_svg(records, cfg.grid.resolution));
            std::cout << cfg.out << ".svg written\n";
        }
        return 0;
    }
    case ExperimentKind::ThreeQubitTrace: {
        const std::vector<TraceRecord> records = run_three_qubit_trace(cfg.trace, cfg.jobs);
        write_file_atomic(cfg.out + ".csv", to_csv(records));
        std::cout << cfg.out << ".csv: " << records.size() << " rows\n";
        if (cfg.plot) {
            write_file_atomic(cfg.out + ".svg", timeseries_svg(records));
            std::cout << cfg.out << ".svg written\n";
        }
        return 0;
    }
    case ExperimentKind::Report: {
        const std::vector<TimeSeriesRecord> records =
            parse_two_qubit_csv(read_file(cfg.report_csv));
        print_report(arrow_complexity_report(records, cfg.report_options));
        return 0;
    }
    }
    return 1; // unreachable
}

} // namespace

int run_cli(int argc, char** argv) {
    RunConfig cfg;
    std::string alpha_text = "0";
    std::string against = "complexity";
    std::string config_path;

    CLI::App app{"heat exchange between small collections of qubits: evolve, measure, plot"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub, ConfigHook& hook) {
        hook.out = sub->add_option("--out", cfg.out, "output path prefix");
        CLI::Option* plot = sub->add_flag("--plot", cfg.plot, "also write an SVG plot");
        CLI::Option* jobs = sub->add_option("--jobs", cfg.jobs, "worker threads");
        jobs->check(CLI::PositiveNumber);
        hook.config = sub->add_option("--config", config_path, "JSON config file");
        hook.config->check(CLI::ExistingFile);
        hook.bindings.push_back({"out", hook.out, [&cfg](const nlohmann::json& v) {
                                     cfg.out = v.get<std::string>();
                                     if (cfg.out.empty())
                                         throw DomainError("output prefix must not be empty");
                                 }});
        hook.bindings.push_back({"plot", plot, store_bool(cfg.plot)});
        hook.bindings.push_back({"jobs", jobs, store_int(cfg.jobs)});
    };

    ConfigHook two_hook;
    CLI::App* two = app.add_subcommand("two-qubit", "thermal pair under the exchange coupling");
    {
        CLI::Option* o;
        o = two->add_option("--alpha", alpha_text, "initial coherence (complex)");
        o->check(complex_validator());
        two_hook.bindings.push_back({"alpha", o, [&alpha_text](const nlohmann::json& v) {
                                         if (v.is_string()) alpha_text = v.get<std::string>();
                                         else alpha_text = std::to_string(v.get<double>());
                                     }});
        o = two->add_option("--beta-a", cfg.two.beta_a, "inverse temperature of qubit A");
        two_hook.bindings.push_back({"beta_a", o, store_double(cfg.two.beta_a)});
        o = two->add_option("--beta-b", cfg.two.beta_b, "inverse temperature of qubit B");
        two_hook.bindings.push_back({"beta_b", o, store_double(cfg.two.beta_b)});
        o = two->add_option("--t-start", cfg.two.t_start, "first sampled time");
        two_hook.bindings.push_back({"t_start", o, store_double(cfg.two.t_start)});
        o = two->add_option("--t-end", cfg.two.t_end, "last sampled time");
        two_hook.bindings.push_back({"t_end", o, store_double(cfg.two.t_end)});
        o = two->add_option("--steps", cfg.two.steps, "sample count");
        o->check(CLI::Range(2, 1000000));
        two_hook.bindings.push_back({"steps", o, store_int(cfg.two.steps)});
        add_common(two, two_hook);
    }

    ConfigHook grid_hook;
    CLI::App* grid = app.add_subcommand("three-qubit-grid", "sweep the coupling-strength plane");
    {
        CLI::Option* o;
        o = grid->add_option("--tau", cfg.grid.tau, "evolution time per cell");
        grid_hook.bindings.push_back({"tau", o, store_double(cfg.grid.tau)});
        o = grid->add_option("--s-min", cfg.grid.s_min, "B-C coupling range start");
        grid_hook.bindings.push_back({"s_min", o, store_double(cfg.grid.s_min)});
        o = grid->add_option("--s-max", cfg.grid.s_max, "B-C coupling range end");
        grid_hook.bindings.push_back({"s_max", o, store_double(cfg.grid.s_max)});
        o = grid->add_option("--t-min", cfg.grid.t_min, "A-B coupling range start");
        grid_hook.bindings.push_back({"t_min", o, store_double(cfg.grid.t_min)});
        o = grid->add_option("--t-max", cfg.grid.t_max, "A-B coupling range end");
        grid_hook.bindings.push_back({"t_max", o, store_double(cfg.grid.t_max)});
        o = grid->add_option("--resolution", cfg.grid.resolution, "cells per axis");
        o->check(CLI::Range(2, 100000));
        grid_hook.bindings.push_back({"resolution", o, store_int(cfg.grid.resolution)});
        o = grid->add_option("--lambda-a", cfg.grid.lambda_a, "qubit A marginal population");
        grid_hook.bindings.push_back({"lambda_a", o, store_double(cfg.grid.lambda_a)});
        o = grid->add_option("--lambda-c", cfg.grid.lambda_c, "qubit C marginal population");
        grid_hook.bindings.push_back({"lambda_c", o, store_double(cfg.grid.lambda_c)});
        o = grid->add_option("--gamma", cfg.grid.gamma, "A-C pair spectral weight");
        grid_hook.bindings.push_back({"gamma", o, store_double(cfg.grid.gamma)});
        o = grid->add_option("--temp-b", cfg.grid.temp_b, "temperature of qubit B");
        grid_hook.bindings.push_back({"temp_b", o, store_double(cfg.grid.temp_b)});
        add_common(grid, grid_hook);
    }

    ConfigHook trace_hook;
    CLI::App* trace = app.add_subcommand("three-qubit-trace", "fixed couplings, swept time");
    {
        CLI::Option* o;
        o = trace->add_option("--s", cfg.trace.s, "B-C coupling strength");
        trace_hook.bindings.push_back({"s", o, store_double(cfg.trace.s)});
        o = trace->add_option("--t", cfg.trace.t, "A-B coupling strength");
        trace_hook.bindings.push_back({"t", o, store_double(cfg.trace.t)});
        o = trace->add_option("--tau-start", cfg.trace.tau_start, "first sampled time");
        trace_hook.bindings.push_back({"tau_start", o, store_double(cfg.trace.tau_start)});
        o = trace->add_option("--tau-end", cfg.trace.tau_end, "last sampled time");
        trace_hook.bindings.push_back({"tau_end", o, store_double(cfg.trace.tau_end)});
        o = trace->add_option("--steps", cfg.trace.steps, "sample count");
        o->check(CLI::Range(2, 1000000));
        trace_hook.bindings.push_back({"steps", o, store_int(cfg.trace.steps)});
        o = trace->add_option("--lambda-a", cfg.trace.lambda_a, "qubit A marginal population");
        trace_hook.bindings.push_back({"lambda_a", o, store_double(cfg.trace.lambda_a)});
        o = trace->add_option("--lambda-c", cfg.trace.lambda_c, "qubit C marginal population");
        trace_hook.bindings.push_back({"lambda_c", o, store_double(cfg.trace.lambda_c)});
        o = trace->add_option("--gamma", cfg.trace.gamma, "A-C pair spectral weight");
        trace_hook.bindings.push_back({"gamma", o, store_double(cfg.trace.gamma)});
        o = trace->add_option("--temp-b", cfg.trace.temp_b, "temperature of qubit B");
        trace_hook.bindings.push_back({"temp_b", o, store_double(cfg.trace.temp_b)});
        add_common(trace, trace_hook);
    }

    CLI::App* report = app.add_subcommand("report", "arrow-of-time summary of an existing run");
    {
        report->add_option("csv", cfg.report_csv, "two-qubit CSV to analyze")
            ->required()
            ->check(CLI::ExistingFile);
        report->add_option("--dead-band", cfg.report_options.dead_band,
                           "derivative magnitude treated as stalled")
            ->check(CLI::NonNegativeNumber);
        report->add_option("--against", against, "observable to pair with the arrow")
            ->check(CLI::IsMember({"complexity", "concurrence"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const ConfigHook* hook = nullptr;
        if (two->parsed()) {
            cfg.kind = ExperimentKind::TwoQubit;
            hook = &two_hook;
        } else if (grid->parsed()) {
            cfg.kind = ExperimentKind::ThreeQubitGrid;
            hook = &grid_hook;
        } else if (trace->parsed()) {
            cfg.kind = ExperimentKind::ThreeQubitTrace;
            hook = &trace_hook;
        } else {
            cfg.kind = ExperimentKind::Report;
        }

        if (hook) {
            if (hook->config->count() > 0) apply_config(config_path, hook->bindings);
            if (hook->out->count() > 0 && cfg.out.empty())
                throw DomainError("output prefix must not be empty");
            if (cfg.out.empty())
                cfg.out = app.get_subcommands().front()->get_name();
        }
        cfg.report_options.observable = against == "concurrence" ? ArrowObservable::Concurrence
                                                                 : ArrowObservable::Complexity;
        return execute(cfg, alpha_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qsc
