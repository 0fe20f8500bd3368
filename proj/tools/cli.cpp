#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndbound/analysis.hpp"
#include "ndbound/averaging.hpp"
#include "ndbound/bounds.hpp"
#include "ndbound/exact_expectation.hpp"
#include "ndbound/simulator.hpp"
#include "ndbound/topology_io.hpp"
#include "ndbound/verify.hpp"

namespace ndbound::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

std::string format_number(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string cell_text(const ordered_json& v, int digits) {
    if (v.is_null()) return "";
    if (v.is_number_float()) return format_number(v.get<double>(), digits);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

// Rows share the column list; missing cells render as empty / null.
struct Table {
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;

    void write(std::ostream& out, Format format) const {
        switch (format) {
            case Format::Json: {
                ordered_json doc = ordered_json::array();
                for (const auto& row : rows) {
                    ordered_json obj = ordered_json::object();
                    for (const auto& c : columns) obj[c] = row.contains(c) ? row.at(c) : ordered_json();
                    doc.push_back(obj);
                }
                out << doc.dump(2) << "\n";
                break;
            }
            case Format::Csv: {
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    out << (i ? "," : "") << csv_escape(columns[i]);
                }
                out << "\r\n";
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < columns.size(); ++i) {
                        const auto& c = columns[i];
                        out << (i ? "," : "") << csv_escape(row.contains(c) ? cell_text(row.at(c), 17) : "");
                    }
                    out << "\r\n";
                }
                break;
            }
            case Format::Table: {
                std::vector<std::vector<std::string>> cells;
                std::vector<std::size_t> width(columns.size());
                for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
                for (const auto& row : rows) {
                    auto& line = cells.emplace_back();
                    for (std::size_t i = 0; i < columns.size(); ++i) {
                        const auto& c = columns[i];
                        line.push_back(row.contains(c) ? cell_text(row.at(c), 10) : "");
                        width[i] = std::max(width[i], line.back().size());
                    }
                }
                auto emit = [&](const std::vector<std::string>& line) {
                    for (std::size_t i = 0; i < line.size(); ++i) {
                        out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << line[i];
                    }
                    out << "\n";
                };
                emit(columns);
                for (const auto& line : cells) emit(line);
                break;
            }
        }
    }
};

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(); }

void add_simulation(ordered_json& row, const SimulationReport& s) {
    row["sim_mean"] = s.mean;
    row["sim_std_error"] = s.std_error;
    row["ci95_low"] = s.ci95_low;
    row["ci95_high"] = s.ci95_high;
    row["reps"] = s.reps;
    row["model"] = std::string(to_string(s.model));
    row["seed"] = s.seed;
}

const std::vector<std::string> kSimulationColumns = {"sim_mean", "sim_std_error", "ci95_low",
                                                     "ci95_high", "reps",          "model",
                                                     "seed"};

struct Common {
    Format format = Format::Table;
    std::string model = "exponential";
    std::uint64_t reps = 100000;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    std::size_t max_exact_n = kDefaultMaxExactN;
    int threads = 0;

    TimeModel time_model() const {
        return model == "slotted" ? TimeModel::SlottedGeometric : TimeModel::ContinuousExponential;
    }
};

void add_format(CLI::App* cmd, Common& c) {
    const std::map<std::string, Format> formats{
        {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    cmd->add_option("--format", c.format, "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_model(CLI::App* cmd, Common& c) {
    cmd->add_option("--model", c.model, "Time model: exponential or slotted")
        ->check(CLI::IsMember({"exponential", "slotted"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Expected neighbor-discovery times, the harmonic lower bound and its checks"};
    app.name(args.empty() ? "ndbound" : args.front());
    app.require_subcommand(1);

    Common c;
    app.add_option("--threads", c.threads, "OpenMP worker threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    std::vector<double> values;
    bool with_quadrature = false;
    bool no_exact = false;
    bool simulate = false;
    std::size_t max_iters = 1000000;
    std::string topology_path;
    VerifyOptions verify;

    auto* exact = app.add_subcommand("exact", "Exact expected time to discover every neighbor");
    exact->add_option("probabilities", values, "Per-neighbor discovery probabilities")->required();
    add_model(exact, c);
    add_format(exact, c);
    exact->add_option("--max-exact-n", c.max_exact_n, "Largest n to enumerate");
    exact->add_flag("--quadrature", with_quadrature, "Add the quadrature cross-check (exponential model)");
    exact->add_option("--tol", c.tol, "Relative tolerance of the quadrature");

    auto* bound = app.add_subcommand("bound", "Harmonic lower bound H_n / mean(p) and its gap");
    bound->add_option("probabilities", values, "Per-neighbor discovery probabilities")->required();
    bound->add_option("--max-exact-n", c.max_exact_n, "Largest n to enumerate for the gap");
    add_format(bound, c);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the expected time");
    sim->add_option("probabilities", values, "Per-neighbor discovery probabilities")->required();
    add_model(sim, c);
    add_format(sim, c);
    sim->add_option("--reps", c.reps, "Replications (>= 100)");
    sim->add_option("--seed", c.seed, "Random seed");

    auto* converge = app.add_subcommand("converge", "CSV trace of repeated sweep averaging");
    converge->add_option("values", values, "Real vector to average")->required();
    converge->add_option("--tol", c.tol, "Stop when max |p_u - mean| <= tol");
    converge->add_option("--max-iters", max_iters, "Sweep budget");

    auto* verify_cmd = app.add_subcommand("verify", "Random-instance checks of the averaging argument");
    verify_cmd->add_option("--instances", verify.instances, "Random instances");
    verify_cmd->add_option("--seed", verify.seed, "Random seed");
    verify_cmd->add_option("--min-n", verify.min_n, "Smallest neighbor count");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest neighbor count");
    verify_cmd->add_option("--x-step", verify.x_step, "Convexity grid step over (0, 1]");
    verify_cmd->add_option("--t-step", verify.t_step, "Z grid step");
    verify_cmd->add_option("--t-max", verify.t_max, "Z grid end");
    add_format(verify_cmd, c);

    auto* analyze = app.add_subcommand("analyze", "Per-node report for a JSON topology");
    analyze->add_option("topology", topology_path, "Topology JSON file, or - for stdin")->required();
    analyze->add_flag("--no-exact", no_exact, "Skip enumeration");
    analyze->add_flag("--simulate", simulate, "Add a Monte Carlo estimate per node");
    add_model(analyze, c);
    add_format(analyze, c);
    analyze->add_option("--reps", c.reps, "Replications (>= 100)");
    analyze->add_option("--seed", c.seed, "Random seed");
    analyze->add_option("--max-exact-n", c.max_exact_n, "Largest n to enumerate");

    std::vector<std::string> argv_rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    if (c.threads > 0) omp_set_num_threads(c.threads);

    try {
        if (*exact) {
            const auto p = ProbabilityVector::validate(values);
            Table table{{"method", "n", "value", "terms_evaluated"}, {}};
            auto emit = [&](const ExpectationReport& r) {
                table.rows.push_back(ordered_json{{"method", std::string(to_string(r.method))},
                                                  {"n", r.n},
                                                  {"value", r.value},
                                                  {"terms_evaluated", r.terms_evaluated}});
            };
            emit(expected_time(p, c.time_model(), c.max_exact_n));
            if (with_quadrature) emit(expected_time_quadrature(p, c.tol));
            table.write(out, c.format);
        } else if (*bound) {
            const auto p = ProbabilityVector::validate(values);
            const BoundReport r = lower_bound(p, c.max_exact_n);
            Table table{{"n", "harmonic", "mean_probability", "bound", "exact", "gap"}, {}};
            table.rows.push_back(ordered_json{{"n", p.size()},
                                              {"harmonic", r.harmonic},
                                              {"mean_probability", r.mean_probability},
                                              {"bound", r.bound},
                                              {"exact", optional_number(r.exact)},
                                              {"gap", optional_number(r.gap)}});
            table.write(out, c.format);
        } else if (*sim) {
            const auto p = ProbabilityVector::validate(values);
            const SimulationReport r = simulate_discovery(p, c.time_model(), c.reps, c.seed);
            Table table{{"n"}, {}};
            table.columns.insert(table.columns.end(), kSimulationColumns.begin(), kSimulationColumns.end());
            ordered_json row{{"n", p.size()}};
            add_simulation(row, r);
            table.rows.push_back(row);
            table.write(out, c.format);
        } else if (*converge) {
            ConvergenceTrace trace;
            int status = kOk;
            try {
                trace = iterate_average(values, c.tol, max_iters);
            } catch (const ConvergenceError& e) {
                err << "error: " << e.what() << "\n";
                trace = e.trace();
                status = kUsageError;
            }
            out << "iteration,max_deviation\r\n";
            for (std::size_t u = 0; u < trace.deviations.size(); ++u) {
                out << u << "," << format_number(trace.deviations[u], 17) << "\r\n";
            }
            return status;
        } else if (*verify_cmd) {
            const auto results = run_verification(verify);
            Table table{{"check", "evaluations", "violations", "worst_margin", "tolerance", "status"}, {}};
            bool ok = true;
            for (const auto& r : results) {
                ok = ok && r.passed();
                table.rows.push_back(ordered_json{{"check", r.name},
                                                  {"evaluations", r.evaluations},
                                                  {"violations", r.violations},
                                                  {"worst_margin", r.worst_margin},
                                                  {"tolerance", r.tolerance},
                                                  {"status", r.passed() ? "pass" : "FAIL"}});
            }
            table.write(out, c.format);
            return ok ? kOk : kVerificationFailed;
        } else if (*analyze) {
            std::optional<NetworkTopology> topology;
            if (topology_path == "-") {
                topology = read_topology(in);
            } else {
                std::ifstream file(topology_path);
                if (!file) {
                    err << "error: cannot open " << topology_path << "\n";
                    return kUsageError;
                }
                topology = read_topology(file);
            }
            AnalysisOptions options;
            options.exact = !no_exact;
            options.simulate = simulate;
            options.model = c.time_model();
            options.reps = c.reps;
            options.seed = c.seed;
            options.max_exact_n = c.max_exact_n;

            Table table{{"node_id", "n", "exact", "bound", "gap"}, {}};
            if (options.model == TimeModel::SlottedGeometric && options.exact) {
                table.columns.push_back("slotted_exact");
            }
            if (simulate) {
                table.columns.insert(table.columns.end(), kSimulationColumns.begin(), kSimulationColumns.end());
            }
            table.columns.push_back("error");
            for (const AnalysisRow& r : analyze_topology(*topology, options)) {
                ordered_json row{{"node_id", r.node_id},      {"n", r.n},
                                 {"exact", optional_number(r.exact)}, {"bound", r.bound},
                                 {"gap", optional_number(r.gap)}};
                row["slotted_exact"] = optional_number(r.slotted_exact);
                if (r.simulation) add_simulation(row, *r.simulation);
                row["error"] = r.error ? ordered_json(*r.error) : ordered_json();
                if (r.error) err << "warning: node " << r.node_id << ": " << *r.error << "\n";
                table.rows.push_back(row);
            }
            table.write(out, c.format);
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kUsageError;
    }
    return kOk;
}

}  // namespace ndbound::cli
