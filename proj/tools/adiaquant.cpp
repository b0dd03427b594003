// Copyright 2026 The adiaquant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// adiaquant: command-line front end.
//
// The primary artifact of every command (CSV, gate file or JSON) goes to
// --output when given and to stdout otherwise. The JSON side report goes to
// stdout when --output is given and to stderr otherwise.
//
// Exit codes: 0 success, 1 other failure, 2 usage, 3 parse, 4 capacity,
// 5 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adiaquant/adiaquant.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace adiaquant;

constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitNumerical = 5;

// Defaults that are conventions rather than derived values; echoed in every report.
constexpr std::size_t kDefaultGrid = 1000;
constexpr std::size_t kDefaultLevels = 8;
constexpr double kDefaultSafety = 10.0;
constexpr double kDefaultThreshold = 0.99;

/// JSON config: top-level scalars are global options, objects hold one subcommand's options.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App *, bool, bool, std::string) const override { return "{}\n"; }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        json j;
        try {
            input >> j;
        } catch (const json::exception &e) {
            throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
        }
        std::vector<CLI::ConfigItem> items;
        flatten(j, {}, items);
        return items;
    }

  private:
    static void flatten(const json &j, std::vector<std::string> parents, std::vector<CLI::ConfigItem> &items) {
        for (const auto &[key, value] : j.items()) {
            if (value.is_object()) {
                auto p = parents;
                p.push_back(key);
                flatten(value, p, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto &v : value) {
                    item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
                }
            } else if (value.is_boolean()) {
                item.inputs.push_back(value.get<bool>() ? "true" : "false");
            } else {
                item.inputs.push_back(value.is_string() ? value.get<std::string>() : value.dump());
            }
            items.push_back(std::move(item));
        }
    }
};

struct Common {
    std::string output;
    unsigned max_qubits = 24;
};

struct Target {
    std::string file;
    std::string family;
    unsigned n = 0;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CLI::ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SatInstance load_instance(const std::string &path) { return parse_instance(read_file(path)); }

SatInstance family_instance(const std::string &family, unsigned n) {
    if (family == "ring") {
        return make_ring(n);
    }
    if (family == "grover") {
        return make_grover(n);
    }
    if (family == "bush" || family == "bush-uniform") {
        return make_bush(n);
    }
    if (family == "overconstrained") {
        return make_overconstrained(n);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
}

/// full | negation | symmetric | symmetric:1,2,3 | symmetric+negation | symmetric:1,2+negation
SectorProjector parse_sector(const std::string &text, unsigned n) {
    if (text == "full") {
        return SectorProjector::full();
    }
    if (text == "negation" || text == "global-negation") {
        return SectorProjector::global_negation();
    }
    if (text.rfind("symmetric", 0) == 0) {
        std::string rest = text.substr(9);
        bool negation = false;
        if (auto pos = rest.find("+negation"); pos != std::string::npos) {
            negation = true;
            rest.erase(pos);
        }
        std::vector<unsigned> bits;
        if (rest.empty()) {
            for (unsigned b = 1; b <= n; ++b) {
                bits.push_back(b);
            }
        } else if (rest[0] == ':') {
            std::stringstream ss(rest.substr(1));
            std::string item;
            while (std::getline(ss, item, ',')) {
                unsigned b = static_cast<unsigned>(std::stoul(item));
                if (b < 1 || b > n) {
                    throw Error(ErrorKind::InvalidArgument, "sector bit " + item + " out of range");
                }
                bits.push_back(b);
            }
        } else {
            throw Error(ErrorKind::InvalidArgument, "cannot parse sector '" + text + "'");
        }
        return SectorProjector::symmetric(bits, n, negation);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown sector '" + text + "'");
}

std::vector<unsigned> parse_range(const std::string &text) {
    // a..b or a..b..step
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find("..", pos);
        parts.push_back(static_cast<unsigned>(std::stoul(text.substr(pos, next - pos))));
        if (next == std::string::npos) {
            break;
        }
        pos = next + 2;
    }
    if (parts.size() < 2 || parts.size() > 3 || parts[0] > parts[1] || (parts.size() == 3 && parts[2] == 0)) {
        throw Error(ErrorKind::InvalidArgument, "n-range must look like a..b or a..b..step");
    }
    std::vector<unsigned> out;
    const unsigned step = parts.size() == 3 ? parts[2] : 1;
    for (unsigned n = parts[0]; n <= parts[1]; n += step) {
        out.push_back(n);
    }
    return out;
}

json defaults_json() {
    return json{{"grid", kDefaultGrid},
                {"levels", kDefaultLevels},
                {"safety", kDefaultSafety},
                {"threshold", kDefaultThreshold}};
}

json gap_json(const GapReport &r) {
    json j{{"g_min", r.g_min},
           {"s_star", r.s_star},
           {"refinement_tolerance", r.refinement_tolerance},
           {"sector", r.sector},
           {"method", r.method},
           {"coarse_points", r.coarse_points},
           {"evaluations", r.evaluations},
           {"degenerate_endpoint", r.degenerate_endpoint},
           {"gap_at_s0", r.gap_at_0},
           {"gap_at_s1", r.gap_at_1}};
    if (!r.warning.empty()) {
        j["warning"] = r.warning;
    }
    return j;
}

/// Writes the primary artifact and the side report to their destinations.
class Sink {
  public:
    explicit Sink(const std::string &path) : path_(path) {
        if (!path_.empty()) {
            file_.open(path_);
            if (!file_) {
                throw CLI::ValidationError("cannot write '" + path_ + "'");
            }
        }
    }
    std::ostream &artifact() { return path_.empty() ? std::cout : file_; }
    std::ostream &report() { return path_.empty() ? std::cerr : std::cout; }

  private:
    std::string path_;
    std::ofstream file_;
};

int run_solve(const Common &common, const Target &t) {
    SatInstance inst = load_instance(t.file);
    Limits limits{common.max_qubits, common.max_qubits};
    auto result = brute_force_solve(inst, limits);
    json j{{"command", "solve"}, {"n", inst.n()}, {"m", inst.m()}, {"min_energy", result.min_energy}};
    json mins = json::array();
    for (const auto &a : result.minimizers) {
        mins.push_back(a.str());
    }
    j["minimizers"] = mins;
    j["defaults"] = defaults_json();
    Sink sink(common.output);
    sink.artifact() << j.dump(2) << '\n';
    return 0;
}

struct SpectrumArgs {
    std::size_t levels = kDefaultLevels;
    std::size_t grid = kDefaultGrid;
    std::string sector = "full";
    std::string demo;
    double epsilon = 0.01;
};

int run_spectrum(const Common &common, const Target &t, const SpectrumArgs &a) {
    SpectrumScan scan;
    json j{{"command", "spectrum"}};
    auto clamp_levels = [&](std::size_t dim) {
        std::size_t k = std::min(a.levels, dim);
        if (k != a.levels) {
            j["levels_clamped_to"] = k;
        }
        return k;
    };
    if (!a.demo.empty()) {
        if (a.demo != "crossing" && a.demo != "avoided") {
            throw Error(ErrorKind::InvalidArgument, "demo must be 'crossing' or 'avoided'");
        }
        MatrixPair op = a.demo == "crossing" ? crossing_demo() : avoided_crossing_demo(a.epsilon);
        scan = scan_spectrum(op, clamp_levels(2), a.grid);
        j["source"] = "demo:" + a.demo;
        if (a.demo == "avoided") {
            j["epsilon"] = a.epsilon;
        }
    } else if (!t.family.empty() && t.file.empty()) {
        Family f = parse_family(t.family);
        j["source"] = "family:" + t.family;
        j["n"] = t.n;
        if (f == Family::Ring) {
            scan.k = 2;
            scan.s_grid.resize(a.grid);
            scan.levels.resize(a.grid);
            for (std::size_t i = 0; i < a.grid; ++i) {
                const double s = static_cast<double>(i) / static_cast<double>(a.grid - 1);
                auto [e0, e1] = ring_levels(t.n, s);
                scan.s_grid[i] = s;
                scan.levels[i] = {e0, e1};
            }
            j["method"] = "analytic";
        } else {
            ReducedOperator op = family_reduced(f, t.n);
            scan = scan_spectrum(op, clamp_levels(op.dimension()), a.grid);
            j["method"] = "reduced";
        }
    } else {
        SatInstance inst = load_instance(t.file);
        Limits limits{common.max_qubits, common.max_qubits};
        auto pair = OperatorPair::from_instance(inst, InitialMode::ClauseWeighted, limits);
        auto sector = parse_sector(a.sector, inst.n());
        std::size_t dim = sector.kind() == SectorProjector::Kind::Full
                              ? pair.dimension()
                              : SectorBasis::build(inst.n(), sector).dimension();
        scan = scan_spectrum(pair, clamp_levels(dim), a.grid, sector);
        j["source"] = t.file;
        j["sector"] = sector.description();
    }
    j["grid"] = a.grid;
    j["levels"] = scan.k;
    j["defaults"] = defaults_json();
    Sink sink(common.output);
    write_scan_csv(sink.artifact(), scan);
    sink.report() << j.dump(2) << '\n';
    return 0;
}

struct GapArgs {
    std::string sector = "full";
    std::size_t coarse = 200;
    double refine_tol = 1e-8;
    double safety = kDefaultSafety;
    bool full_space = false;
    bool estimate = true;
};

int run_gap(const Common &common, const Target &t, const GapArgs &a) {
    GapOptions options;
    options.coarse_points = a.coarse;
    options.refine_tol = a.refine_tol;
    json j{{"command", "gap"}};
    std::optional<AdiabaticEstimate> est;
    GapReport report;
    if (!t.family.empty() && t.file.empty() && !a.full_space) {
        Family f = parse_family(t.family);
        report = family_gap(f, t.n, options);
        j["source"] = "family:" + t.family;
        j["n"] = t.n;
        if (f != Family::Ring && a.estimate) {
            est = adiabatic_time_estimate(family_reduced(f, t.n), report);
        }
    } else {
        SatInstance inst = t.file.empty() ? family_instance(t.family, t.n) : load_instance(t.file);
        Limits limits{common.max_qubits, common.max_qubits};
        InitialMode mode = t.family == "bush-uniform" ? InitialMode::Uniform : InitialMode::ClauseWeighted;
        auto pair = OperatorPair::from_instance(inst, mode, limits);
        auto sector = parse_sector(a.sector, inst.n());
        report = find_min_gap(pair, sector, options.coarse_points, options.refine_tol);
        j["source"] = t.file.empty() ? "family:" + t.family + " (full space)" : t.file;
        j["n"] = inst.n();
        if (a.estimate && report.g_min > 0.0) {
            if (sector.kind() == SectorProjector::Kind::Full) {
                est = adiabatic_time_estimate(pair, report);
            } else {
                est = adiabatic_time_estimate(SectorOperator(pair, sector), report);
            }
        }
    }
    j["report"] = gap_json(report);
    if (est) {
        j["adiabatic"] = json{{"matrix_element", est->matrix_element},
                              {"s_at_max", est->s_at_max},
                              {"crude_bound", est->crude_bound},
                              {"ratio", est->ratio},
                              {"safety", a.safety},
                              {"T_suggested", a.safety * est->ratio}};
    }
    j["defaults"] = defaults_json();
    Sink sink(common.output);
    sink.artifact() << j.dump(2) << '\n';
    return 0;
}

struct EvolveArgs {
    double T = 0.0;
    double dt = 0.0;
    std::size_t shots = 1000;
    std::uint64_t seed = 0;
    double threshold = kDefaultThreshold;
    std::vector<double> curve;
};

int run_evolve(const Common &common, const Target &t, const EvolveArgs &a) {
    SatInstance inst = t.file.empty() ? family_instance(t.family, t.n) : load_instance(t.file);
    Limits limits{common.max_qubits, common.max_qubits};
    auto pair = OperatorPair::from_instance(inst, InitialMode::ClauseWeighted, limits);
    Sink sink(common.output);
    if (!a.curve.empty()) {
        const double dt = a.dt;
        auto curve = success_curve(pair, a.curve, [dt](double) { return dt; });
        write_success_csv(sink.artifact(), curve);
        json j{{"command", "evolve"}, {"mode", "curve"}, {"points", curve.size()}, {"defaults", defaults_json()}};
        sink.report() << j.dump(2) << '\n';
        return 0;
    }
    EvolutionOptions opt;
    opt.dt = a.dt;
    auto r = evolve(pair, Schedule::linear(a.T), opt);
    StateVector psi = r.final_state;
    auto samples = measure(psi, inst.n(), a.shots, a.seed);
    auto counts = tally(samples);
    json js = json::array();
    for (const auto &[z, c] : counts) {
        js.push_back(json{{"assignment", bitstring(inst.n(), z)}, {"count", c}, {"energy", inst.energy_index(z)}});
    }
    json j{{"command", "evolve"},
           {"n", inst.n()},
           {"T", r.T},
           {"dt", r.dt},
           {"steps", r.steps},
           {"overlap", r.overlap},
           {"norm_drift", r.norm_drift},
           {"threshold", a.threshold},
           {"success", r.overlap >= a.threshold},
           {"unsatisfiable", r.unsatisfiable},
           {"ground_energy", r.ground_energy},
           {"expected_energy", expected_energy(pair, psi)},
           {"shots", a.shots},
           {"seed", a.seed},
           {"samples", js},
           {"defaults", defaults_json()}};
    if (r.unsatisfiable) {
        j["note"] = "no satisfying assignment; overlap is with the minimum-energy states";
    }
    sink.artifact() << j.dump(2) << '\n';
    return 0;
}

struct ScalingArgs {
    std::string range;
    std::size_t coarse = 200;
    double refine_tol = 1e-8;
};

int run_scaling(const Common &common, const Target &t, const ScalingArgs &a) {
    Family f = parse_family(t.family);
    GapOptions options;
    options.coarse_points = a.coarse;
    options.refine_tol = a.refine_tol;
    auto study = gap_scaling_study(f, parse_range(a.range), options);
    Sink sink(common.output);
    write_scaling_csv(sink.artifact(), study);
    json j{{"command", "scaling"},
           {"family", family_name(f)},
           {"fit", json{{"slope", study.power_law.slope},
                        {"intercept", study.power_law.intercept},
                        {"residual", study.power_law.residual}}},
           {"exponential_fit", json{{"slope", study.exponential.slope},
                                    {"intercept", study.exponential.intercept},
                                    {"residual", study.exponential.residual}}},
           {"exponential_preferred", study.exponential_preferred()},
           {"defaults", defaults_json()}};
    sink.report() << j.dump(2) << '\n';
    return 0;
}

struct TrotterArgs {
    double T = 0.0;
    double epsilon = 0.01;
    double safety = 1.0;
    bool execute = false;
    bool no_gates = false;
};

int run_trotter(const Common &common, const Target &t, const TrotterArgs &a) {
    SatInstance inst = t.file.empty() ? family_instance(t.family, t.n) : load_instance(t.file);
    Limits limits{common.max_qubits, common.max_qubits};
    require_qubits(inst.n(), limits.max_qubits, "trotter");
    auto budget = plan_budget(inst, a.T, a.epsilon, a.safety);
    auto seq = compile(inst, a.T, budget);
    Sink sink(common.output);
    if (!a.no_gates) {
        write_sequence(sink.artifact(), seq);
    }
    json j{{"command", "trotter"},
           {"n", inst.n()},
           {"m", inst.m()},
           {"T", a.T},
           {"budget", json{{"M", budget.M},
                           {"K", budget.K},
                           {"delta", budget.delta},
                           {"epsilon", budget.epsilon},
                           {"safety", budget.safety},
                           {"slicing_surrogate", budget.slicing_surrogate},
                           {"slicing_limit", budget.slicing_limit},
                           {"substep_requirement", budget.substep_requirement}}},
           {"gate_count", seq.size()}};
    if (a.execute) {
        auto pair = OperatorPair::from_instance(inst, InitialMode::ClauseWeighted, limits);
        auto start = pair.initial_state();
        auto trotter_state = execute(seq, start);
        auto continuous = evolve(pair, Schedule::linear(a.T));
        const double f = fidelity(trotter_state, continuous.final_state);
        j["fidelity"] = f;
        j["certified"] = f >= 1.0 - a.epsilon;
        j["trotter_overlap"] = ground_overlap(pair, trotter_state);
        j["continuous_overlap"] = continuous.overlap;
    }
    j["defaults"] = defaults_json();
    (a.no_gates ? sink.artifact() : sink.report()) << j.dump(2) << '\n';
    return 0;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidClause: return kExitParse;
        case ErrorKind::Capacity: return kExitCapacity;
        case ErrorKind::NumericalFailure:
        case ErrorKind::StepSize:
        case ErrorKind::UndefinedEstimate: return kExitNumerical;
        case ErrorKind::InvalidArgument:
        case ErrorKind::Unsupported: return kExitUsage;
        default: return kExitOther;
    }
}

void add_target(CLI::App *cmd, Target &t, bool file_required) {
    auto *file = cmd->add_option("instance", t.file, "Instance file (p asat format)");
    auto *family = cmd->add_option("--family", t.family, "Built-in family: ring, grover, bush, bush-uniform, overconstrained");
    cmd->add_option("--n", t.n, "Family size");
    if (file_required) {
        file->required();
    } else {
        file->excludes(family);
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Adiabatic quantum computation: spectra, gaps, evolution and Trotter compilation"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config file; command-line flags take precedence");

    Common common;
    app.add_option("-o,--output", common.output, "Write the primary artifact here instead of stdout");
    app.add_option("--max-qubits", common.max_qubits, "Dimension cap for 2^n vectors")->check(CLI::Range(1u, 40u));

    Target target;

    auto *solve = app.add_subcommand("solve", "Exhaustive classical ground truth");
    add_target(solve, target, true);

    SpectrumArgs sp;
    auto *spectrum = app.add_subcommand("spectrum", "Lowest levels of H(s) on a grid, as CSV");
    add_target(spectrum, target, false);
    spectrum->add_option("--levels,-k", sp.levels, "Number of levels")->check(CLI::PositiveNumber);
    spectrum->add_option("--grid", sp.grid, "Grid points including both endpoints")->check(CLI::Range(2ul, 10000000ul));
    spectrum->add_option("--sector", sp.sector, "full | negation | symmetric[:bits][+negation]");
    spectrum->add_option("--demo", sp.demo, "Two-level example: crossing | avoided");
    spectrum->add_option("--epsilon", sp.epsilon, "Off-diagonal strength of the avoided-crossing demo");

    GapArgs gp;
    auto *gap = app.add_subcommand("gap", "Minimum gap report, as JSON");
    add_target(gap, target, false);
    gap->add_option("--sector", gp.sector, "full | negation | symmetric[:bits][+negation]");
    gap->add_option("--coarse", gp.coarse, "Coarse grid points")->check(CLI::Range(16ul, 10000000ul));
    gap->add_option("--refine-tol", gp.refine_tol, "Golden-section bracket tolerance")->check(CLI::PositiveNumber);
    gap->add_option("--safety", gp.safety, "Multiplier applied to E/g^2")->check(CLI::PositiveNumber);
    gap->add_flag("--full-space", gp.full_space, "Build a family member on the full register");
    gap->add_flag("!--no-estimate", gp.estimate, "Skip the adiabatic time estimate");

    EvolveArgs ev;
    auto *evolve_cmd = app.add_subcommand("evolve", "Run the adiabatic algorithm and sample the result");
    add_target(evolve_cmd, target, false);
    evolve_cmd->add_option("--T", ev.T, "Total evolution time")->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--dt", ev.dt, "Step size (0 selects 0.01 / norm bound)")->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--shots", ev.shots, "Measurement shots")->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--seed", ev.seed, "Sampling seed");
    evolve_cmd->add_option("--threshold", ev.threshold, "Overlap counted as success")->check(CLI::Range(0.0, 1.0));
    evolve_cmd->add_option("--curve", ev.curve, "Emit a success curve CSV for these T values instead")->delimiter(',');

    ScalingArgs sc;
    auto *scaling = app.add_subcommand("scaling", "Gap scaling study over a family, as CSV plus fit");
    scaling->add_option("--family", target.family, "grover, bush, bush-uniform, overconstrained or ring")->required();
    scaling->add_option("--n-range", sc.range, "a..b or a..b..step")->required();
    scaling->add_option("--coarse", sc.coarse, "Coarse grid points")->check(CLI::Range(16ul, 10000000ul));
    scaling->add_option("--refine-tol", sc.refine_tol, "Golden-section bracket tolerance")->check(CLI::PositiveNumber);

    TrotterArgs tr;
    auto *trotter = app.add_subcommand("trotter", "Compile the evolution into one-bit and clause gates");
    add_target(trotter, target, false);
    trotter->add_option("--T", tr.T, "Total evolution time")->required()->check(CLI::PositiveNumber);
    trotter->add_option("--epsilon", tr.epsilon, "Target infidelity")->check(CLI::Range(1e-12, 0.999999));
    trotter->add_option("--safety", tr.safety, "Safety factor on the substep condition")->check(CLI::PositiveNumber);
    trotter->add_flag("--execute", tr.execute, "Also run the sequence and compare with the integrator");
    trotter->add_flag("--no-gates", tr.no_gates, "Do not write the gate list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    auto need_target = [&](const CLI::App *cmd) {
        if (target.file.empty() && target.family.empty()) {
            throw CLI::ValidationError(cmd->get_name() + ": give an instance file or --family with --n");
        }
        if (!target.family.empty() && target.n == 0) {
            throw CLI::ValidationError(cmd->get_name() + ": --family needs --n");
        }
    };

    try {
        if (solve->parsed()) {
            return run_solve(common, target);
        }
        if (spectrum->parsed()) {
            if (sp.demo.empty()) {
                need_target(spectrum);
            }
            return run_spectrum(common, target, sp);
        }
        if (gap->parsed()) {
            need_target(gap);
            return run_gap(common, target, gp);
        }
        if (evolve_cmd->parsed()) {
            need_target(evolve_cmd);
            return run_evolve(common, target, ev);
        }
        if (scaling->parsed()) {
            return run_scaling(common, target, sc);
        }
        if (trotter->parsed()) {
            need_target(trotter);
            return run_trotter(common, target, tr);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOther;
    }
    return kExitUsage;
}
