// Copyright 2026 The qimp developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qimp/annealer.hpp"
#include "qimp/circuit.hpp"
#include "qimp/encoder.hpp"
#include "qimp/experiment.hpp"
#include "qimp/rng.hpp"
#include "qimp/verify.hpp"

namespace {

using namespace qimp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;    // usage or parse errors
constexpr int kExitNoModel = 2;  // no satisfying decode / unsatisfiable input

struct SaFlags {
    int samples = 1000;
    int round_samples = 100;
    int sweeps = 64;
    std::uint64_t seed = 0;
    bool iter = false;
    int max_rounds = 10;
    int threads = 1;
};

struct WeightFlags {
    double gamma = 0.0;  // 0 means default
    double lambda = 0.0;
    double big_m = 0.0;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QIMP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable QIMP_SEED\n";
        }
    }
    return 0;
}

void add_sa_flags(CLI::App* cmd, SaFlags& sa) {
    cmd->add_option("--samples", sa.samples, "Annealing restarts in the initial run");
    cmd->add_option("--round-samples", sa.round_samples, "Restarts per refinement round");
    cmd->add_option("--sweeps", sa.sweeps, "Sweeps per restart (one sweep = dim flips)");
    cmd->add_option("--seed", sa.seed, "Random seed (default: QIMP_SEED or 0)");
    cmd->add_flag("--iter", sa.iter, "Iterative polarity-freezing refinement");
    cmd->add_option("--max-rounds", sa.max_rounds, "Refinement round cap");
    cmd->add_option("--threads", sa.threads, "Parallel restart workers");
}

void add_weight_flags(CLI::App* cmd, WeightFlags& w) {
    cmd->add_option("--gamma", w.gamma, "Sparsity weight (default 1)");
    cmd->add_option("--lambda", w.lambda, "Clause penalty weight (default base+1)");
    cmd->add_option("--big-m", w.big_m, "Consistency penalty weight (default base+1)");
}

struct LoadedInput {
    CnfFormula original;
    std::optional<BoolExpr> expr;             // set for .bexpr inputs
    std::optional<CnfConversion> conversion;  // set for .bexpr inputs
};

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    LoadedInput loaded;
    if (has_suffix(path, ".bexpr")) {
        std::ostringstream text;
        text << in.rdbuf();
        loaded.expr = parse_expr(text.str());
        loaded.conversion = plaisted_greenbaum(to_nnf(*loaded.expr));
        loaded.original = loaded.conversion->cnf;
    } else {
        loaded.original = parse_dimacs(in);
    }
    return loaded;
}

std::vector<Literal> parse_literal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file " + path);
    std::vector<Literal> lits;
    long long code;
    while (in >> code) {
        if (code == 0) continue;  // tolerate DIMACS-style terminators
        lits.push_back(Literal::from_dimacs(static_cast<int>(code)));
    }
    if (!in.eof()) throw std::runtime_error("model file " + path + " contains non-integer tokens");
    return lits;
}

std::vector<int> parse_var_list(const std::string& text) {
    std::vector<int> vars;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        vars.push_back(std::stoi(item));
    }
    return vars;
}

json literals_json(const std::vector<Literal>& lits) {
    json arr = json::array();
    for (const Literal& lit : lits) arr.push_back(lit.to_dimacs());
    return arr;
}

void write_report(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << report.dump(2) << '\n';
}

// Shared pipeline for solve / shrink / project.
struct PipelineOptions {
    std::string command;
    std::string input;
    std::string model_file;          // shrink only
    std::vector<int> projection;     // explicit visible vars
    double projection_fraction = 0;  // draw a seeded subset when > 0
    bool project_originals = false;  // .bexpr: visible = original vars
    SaFlags sa;
    WeightFlags weights;
    std::uint64_t oracle_budget = 2'000'000;
    std::string out_path;
};

int run_pipeline(const PipelineOptions& opt) {
    LoadedInput loaded = load_input(opt.input);
    PreprocessResult pre = preprocess(loaded.original);

    json report;
    report["command"] = opt.command;
    report["input"] = opt.input;
    json config;
    config["samples"] = opt.sa.samples;
    config["round_samples"] = opt.sa.round_samples;
    config["sweeps"] = opt.sa.sweeps;
    config["seed"] = opt.sa.seed;
    config["iter"] = opt.sa.iter;
    config["max_rounds"] = opt.sa.max_rounds;
    config["threads"] = opt.sa.threads;
    config["oracle_budget"] = opt.oracle_budget;

    json formula_info;
    formula_info["vars"] = loaded.original.num_vars();
    formula_info["clauses"] = loaded.original.num_clauses();
    formula_info["reduced_clauses"] = pre.formula.num_clauses();
    formula_info["forced"] = literals_json(pre.forced);
    formula_info["status"] = pre.status == PreprocessStatus::UnsatDetected ? "unsat"
                             : pre.status == PreprocessStatus::TriviallySat ? "trivially_sat"
                                                                            : "reduced";
    report["formula"] = formula_info;

    if (pre.status == PreprocessStatus::UnsatDetected) {
        report["config"] = config;
        report["result"] = nullptr;
        report["note"] = "unsatisfiable: unit propagation derived a conflict";
        write_report(report, opt.out_path);
        return kExitNoModel;
    }

    // Resolve the visible scope.
    std::vector<int> visible;
    if (opt.project_originals && loaded.conversion) {
        visible.assign(loaded.conversion->visible.begin(), loaded.conversion->visible.end());
    } else if (!opt.projection.empty()) {
        visible = opt.projection;
    } else if (opt.projection_fraction > 0) {
        std::vector<int> vars(static_cast<std::size_t>(pre.formula.num_vars()));
        for (int v = 1; v <= pre.formula.num_vars(); ++v)
            vars[static_cast<std::size_t>(v) - 1] = v;
        Rng rng(derive_seed(opt.sa.seed, 0x766973ULL));
        for (std::size_t i = vars.size(); i > 1; --i) std::swap(vars[i - 1], vars[rng.below(i)]);
        const auto keep = static_cast<std::size_t>(std::max<long>(
            1, std::lround(opt.projection_fraction * pre.formula.num_vars())));
        vars.resize(std::min(keep, vars.size()));
        std::sort(vars.begin(), vars.end());
        visible = vars;
    }
    const bool projected = !visible.empty();

    // Shrink assignment; for expression inputs the hidden gate variables are
    // completed by evaluating each gate's defining subformula.
    std::optional<PartialAssignment> eta;
    if (!opt.model_file.empty()) {
        const std::vector<Literal> lits = parse_literal_file(opt.model_file);
        PartialAssignment assignment(pre.formula.num_vars());
        for (const Literal& lit : lits) {
            if (lit.var > pre.formula.num_vars())
                throw std::runtime_error("model literal outside the formula's variables");
            assignment.set(lit);
        }
        if (loaded.conversion) {
            std::vector<bool> total(static_cast<std::size_t>(loaded.original.num_vars()) + 1,
                                    false);
            for (int v : loaded.conversion->visible) {
                if (!assignment.assigned(v))
                    throw std::runtime_error("model must assign every original variable");
                total[static_cast<std::size_t>(v)] = assignment.value(v) == Ternary::True;
            }
            for (const auto& [aux, definition] : loaded.conversion->definitions) {
                const bool value = eval(definition, total);
                assignment.set(aux, value ? Ternary::True : Ternary::False);
                total[static_cast<std::size_t>(aux)] = value;
            }
        }
        for (int v = 1; v <= pre.formula.num_vars(); ++v)
            if (!assignment.assigned(v)) assignment.set(v, Ternary::False);
        for (const Literal& lit : pre.forced) {
            if (!assignment.satisfies(lit)) {
                report["config"] = config;
                report["note"] = "model contradicts a forced literal";
                write_report(report, opt.out_path);
                return kExitError;
            }
        }
        eta = std::move(assignment);
    }

    const int base =
        projected ? static_cast<int>(visible.size()) : std::max(pre.formula.num_vars(), 1);
    Weights weights = default_weights(std::max(base, 1));
    if (opt.weights.gamma > 0) weights.gamma = opt.weights.gamma;
    if (opt.weights.lambda > 0) weights.lambda = opt.weights.lambda;
    if (opt.weights.big_m > 0) weights.big_m = opt.weights.big_m;
    if (!weights.in_regime(base))
        std::cerr << "warning: weights violate the ground-state regime"
                  << " (lambda and big-m should exceed base*gamma = " << base * weights.gamma
                  << ")\n";

    EncodeMode mode = eta ? EncodeMode::shrink(*eta) : EncodeMode::full();
    if (projected) mode = std::move(mode).projected(visible);

    Encoding enc;
    try {
        enc = encode(pre.formula, weights, mode);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }

    config["gamma"] = weights.gamma;
    config["lambda"] = weights.lambda;
    config["big_m"] = weights.big_m;
    config["regime_ok"] = enc.weights_in_regime;
    config["projection"] = projected ? json(visible) : json(nullptr);
    report["config"] = config;

    json mode_info;
    mode_info["task"] = eta ? "shrink" : "full";
    mode_info["scope"] = projected ? "projected" : "standard";
    report["mode"] = mode_info;

    SaConfig initial;
    initial.num_samples = opt.sa.samples;
    initial.sweeps_per_sample = opt.sa.sweeps;
    initial.seed = derive_seed(opt.sa.seed, 0x696e6974ULL);
    initial.threads = opt.sa.threads;

    SampleResult best;
    int rounds = 0;
    bool converged = true;
    json trace_sizes = json::array();
    if (opt.sa.iter) {
        SaConfig round = initial;
        round.num_samples = opt.sa.round_samples;
        round.seed = derive_seed(opt.sa.seed, 0x726f756e64ULL);
        RefineTrace trace = iterate_shrink(enc, initial, round, opt.sa.max_rounds);
        best = trace.final_best();
        rounds = trace.refine_rounds_used;
        converged = trace.converged;
        for (const RefineRound& r : trace.rounds) trace_sizes.push_back(r.best.assigned_in_scope);
    } else {
        best = best_of(sample(enc, initial));
        trace_sizes.push_back(best.assigned_in_scope);
    }

    const Verdict v = verdict(best, enc, opt.oracle_budget);

    json result;
    std::string bits;
    bits.reserve(best.bits.size());
    for (std::uint8_t b : best.bits) bits.push_back(b ? '1' : '0');
    result["bits"] = bits;
    result["energy"] = best.energy;
    result["energy_bound"] = enc.feasible_energy_bound;
    const std::vector<Literal> decoded = best.decoded.literals();
    result["literals"] = literals_json(decoded);
    std::vector<Literal> with_forced = pre.forced;
    with_forced.insert(with_forced.end(), decoded.begin(), decoded.end());
    std::sort(with_forced.begin(), with_forced.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });
    result["literals_with_forced"] = literals_json(with_forced);
    result["size"] = best.decoded.size();
    result["size_with_forced"] = static_cast<int>(with_forced.size());
    result["size_in_scope"] = best.assigned_in_scope;
    result["verdict"] = to_json(v);
    result["rounds"] = rounds;
    result["converged"] = converged;
    result["trace_sizes"] = trace_sizes;
    report["result"] = result;

    write_report(report, opt.out_path);
    return v.satisfying ? kExitOk : kExitNoModel;
}

int cmd_encode(const std::string& input, bool ising, const WeightFlags& wf,
               const std::vector<int>& projection, const std::string& model_file,
               std::uint64_t seed, const std::string& out_path) {
    LoadedInput loaded = load_input(input);
    PreprocessResult pre = preprocess(loaded.original);
    if (pre.status == PreprocessStatus::UnsatDetected) {
        std::cerr << "warning: input is unsatisfiable; encoding an empty reduction\n";
        pre.formula = CnfFormula(loaded.original.num_vars());
    }

    const bool projected = !projection.empty();
    const int base =
        projected ? static_cast<int>(projection.size()) : std::max(pre.formula.num_vars(), 1);
    Weights weights = default_weights(base);
    if (wf.gamma > 0) weights.gamma = wf.gamma;
    if (wf.lambda > 0) weights.lambda = wf.lambda;
    if (wf.big_m > 0) weights.big_m = wf.big_m;

    EncodeMode mode = EncodeMode::full();
    if (!model_file.empty()) {
        PartialAssignment eta(pre.formula.num_vars());
        for (const Literal& lit : parse_literal_file(model_file)) eta.set(lit);
        for (int v = 1; v <= pre.formula.num_vars(); ++v)
            if (!eta.assigned(v)) eta.set(v, Ternary::False);
        mode = EncodeMode::shrink(std::move(eta));
    }
    if (projected) mode = std::move(mode).projected(projection);

    Encoding enc = encode(pre.formula, weights, mode);
    if (!enc.weights_in_regime)
        std::cerr << "warning: weights violate the ground-state regime\n";

    json out;
    out["weights"] = {{"gamma", weights.gamma},
                      {"lambda", weights.lambda},
                      {"big_m", weights.big_m}};
    out["energy_bound"] = enc.feasible_energy_bound;
    out["forced"] = literals_json(pre.forced);
    if (ising) {
        const IsingModel ising_model = to_ising(enc.model);
        out["ising"] = to_json(ising_model);
        out["registry"] = to_json(enc.registry);
        // Conversion identity spot check on a few seeded vectors.
        Rng rng(derive_seed(seed, 0x6973696eULL));
        double max_diff = 0.0;
        const int trials = 8;
        for (int t = 0; t < trials; ++t) {
            Bits x(static_cast<std::size_t>(enc.model.dim()));
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = static_cast<std::uint8_t>(rng.coin());
            for (const auto& [i, v] : enc.model.fixed())
                x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
            std::vector<int> z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] ? 1 : -1;
            max_diff = std::max(max_diff, std::abs(ising_model.energy(z) - enc.model.energy(x)));
        }
        out["ising_check"] = {{"vectors", trials}, {"max_abs_diff", max_diff}};
    } else {
        out["qubo"] = to_json(enc.model, enc.registry);
    }
    write_report(out, out_path);
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& model_file, std::uint64_t budget,
               const std::string& out_path) {
    LoadedInput loaded = load_input(input);
    PreprocessResult pre = preprocess(loaded.original);

    PartialAssignment mu(loaded.original.num_vars());
    for (const Literal& lit : parse_literal_file(model_file)) mu.set(lit);

    json report;
    report["command"] = "verify";
    report["input"] = input;
    report["model"] = literals_json(mu.literals());
    report["size"] = mu.size();

    if (pre.status == PreprocessStatus::UnsatDetected) {
        report["satisfying"] = false;
        report["note"] = "formula is unsatisfiable";
        write_report(report, out_path);
        return kExitNoModel;
    }

    // Judge against the original formula by checking the reduced one plus the
    // forced literals (tautological clauses need no cover).
    bool forced_ok = true;
    for (const Literal& lit : pre.forced)
        if (mu.assigned(lit.var) && !mu.satisfies(lit)) forced_ok = false;
    PartialAssignment with_forced = mu;
    for (const Literal& lit : pre.forced) with_forced.set(lit);

    const bool satisfying = forced_ok && entails(with_forced, pre.formula);
    report["satisfying"] = satisfying;
    if (satisfying) {
        report["minimal"] = is_minimal_implicant(with_forced, pre.formula) &&
                            with_forced.size() == mu.size();
        OracleResult oracle = minimum_implicant_oracle(pre.formula, budget);
        if (oracle.status == OracleResult::Status::Found) {
            report["minimum"] = mu.size() == oracle.size;
            report["minimum_size"] = oracle.size;
        } else {
            report["minimum"] = nullptr;
        }
    }
    write_report(report, out_path);
    return satisfying ? kExitOk : kExitNoModel;
}

int cmd_bench(const ExperimentSpec& spec, const std::string& out_dir) {
    const std::vector<RunRecord> records = run_experiment(spec);
    emit(records, out_dir);
    int failures = 0;
    for (const RunRecord& rec : records)
        if (rec.failed) ++failures;
    std::cout << "wrote " << records.size() << " records to " << out_dir << " (" << failures
              << " failed)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAT-to-QUBO encoder and annealer for short partial satisfying assignments"};
    app.require_subcommand(1);

    const std::uint64_t env_seed = default_seed();

    PipelineOptions solve_opt;
    solve_opt.command = "solve";
    solve_opt.sa.seed = env_seed;
    auto* solve = app.add_subcommand("solve", "Find a short implicant of a CNF or expression file");
    solve->add_option("input", solve_opt.input, "Input file (.cnf or .bexpr)")->required();
    add_sa_flags(solve, solve_opt.sa);
    add_weight_flags(solve, solve_opt.weights);
    solve->add_option("--budget", solve_opt.oracle_budget, "Minimum-cardinality oracle budget");
    solve->add_option("-o,--out", solve_opt.out_path, "Write the JSON report here");

    PipelineOptions shrink_opt;
    shrink_opt.command = "shrink";
    shrink_opt.sa.seed = env_seed;
    std::string shrink_projection;
    auto* shrink = app.add_subcommand("shrink", "Shrink a given total satisfying assignment");
    shrink->add_option("input", shrink_opt.input, "Input file (.cnf or .bexpr)")->required();
    shrink->add_option("--model", shrink_opt.model_file, "File of literals of the total model")
        ->required();
    shrink->add_option("-P,--projection", shrink_projection, "Comma-separated visible variables");
    add_sa_flags(shrink, shrink_opt.sa);
    add_weight_flags(shrink, shrink_opt.weights);
    shrink->add_option("--budget", shrink_opt.oracle_budget, "Oracle budget");
    shrink->add_option("-o,--out", shrink_opt.out_path, "Write the JSON report here");

    PipelineOptions project_opt;
    project_opt.command = "project";
    project_opt.sa.seed = env_seed;
    std::string project_projection;
    auto* project = app.add_subcommand("project", "Minimize over a visible variable subset");
    project->add_option("input", project_opt.input, "Input file (.cnf or .bexpr)")->required();
    project->add_option("-P,--projection", project_projection, "Comma-separated visible variables");
    project->add_option("--fraction", project_opt.projection_fraction,
                        "Draw a seeded visible subset of this fraction");
    add_sa_flags(project, project_opt.sa);
    add_weight_flags(project, project_opt.weights);
    project->add_option("--budget", project_opt.oracle_budget, "Oracle budget");
    project->add_option("-o,--out", project_opt.out_path, "Write the JSON report here");

    std::string encode_input, encode_out, encode_projection, encode_model;
    bool encode_ising = false;
    WeightFlags encode_weights;
    std::uint64_t encode_seed = env_seed;
    auto* encode_cmd = app.add_subcommand("encode", "Emit the QUBO (or Ising) model as JSON");
    encode_cmd->add_option("input", encode_input, "Input file (.cnf or .bexpr)")->required();
    encode_cmd->add_flag("--ising", encode_ising, "Convert to the Ising form");
    encode_cmd->add_option("-P,--projection", encode_projection,
                           "Comma-separated visible variables");
    encode_cmd->add_option("--model", encode_model, "Shrink-mode total model file");
    encode_cmd->add_option("--seed", encode_seed, "Seed for the conversion spot check");
    add_weight_flags(encode_cmd, encode_weights);
    encode_cmd->add_option("-o,--out", encode_out, "Write the JSON here");

    std::string verify_input, verify_model, verify_out;
    std::uint64_t verify_budget = 2'000'000;
    auto* verify_cmd = app.add_subcommand("verify", "Check a partial assignment against a formula");
    verify_cmd->add_option("input", verify_input, "Input file (.cnf or .bexpr)")->required();
    verify_cmd->add_option("--model", verify_model, "File of literals to check")->required();
    verify_cmd->add_option("--budget", verify_budget, "Minimum-cardinality oracle budget");
    verify_cmd->add_option("-o,--out", verify_out, "Write the JSON report here");

    ExperimentSpec bench_spec;
    bench_spec.seed = env_seed;
    std::string bench_family = "3sat";
    std::string bench_ns = "8,12";
    std::string bench_modes = "full-standard-basic";
    std::string bench_out = "bench-out";
    int bench_instances = 10;
    double bench_density = 1.5;
    int bench_depth = 3, bench_fanin = 5;
    int bench_samples = 1000, bench_round_samples = 100, bench_sweeps = 64, bench_threads = 1;
    auto* bench = app.add_subcommand("bench", "Run a batch experiment and emit records + summary");
    bench->add_option("--family", bench_family, "3sat or noncnf");
    bench->add_option("--n", bench_ns, "Comma-separated instance sizes");
    bench->add_option("--instances", bench_instances, "Instances per size");
    bench->add_option("--density", bench_density, "Clause-to-variable ratio (3sat)");
    bench->add_option("--depth", bench_depth, "Nesting depth (noncnf)");
    bench->add_option("--fanin", bench_fanin, "Gate arity (noncnf)");
    bench->add_option("--modes", bench_modes, "Comma-separated task-scope-strategy triples");
    bench->add_option("--samples", bench_samples, "Initial run restarts");
    bench->add_option("--round-samples", bench_round_samples, "Refinement round restarts");
    bench->add_option("--sweeps", bench_sweeps, "Sweeps per restart");
    bench->add_option("--seed", bench_spec.seed, "Batch seed");
    bench->add_option("--max-rounds", bench_spec.max_rounds, "Refinement round cap");
    bench->add_option("--proj-fraction", bench_spec.projected_fraction, "Visible fraction (3sat)");
    bench->add_option("--budget", bench_spec.oracle_budget, "Oracle budget per record");
    bench->add_option("--threads", bench_threads, "Parallel restart workers");
    bench->add_option("--out", bench_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_pipeline(solve_opt);
        if (shrink->parsed()) {
            if (!shrink_projection.empty())
                shrink_opt.projection = parse_var_list(shrink_projection);
            return run_pipeline(shrink_opt);
        }
        if (project->parsed()) {
            if (!project_projection.empty())
                project_opt.projection = parse_var_list(project_projection);
            else if (project_opt.projection_fraction <= 0)
                project_opt.project_originals = true;  // .bexpr default: original vars
            if (!project_opt.projection.empty() || project_opt.projection_fraction > 0 ||
                has_suffix(project_opt.input, ".bexpr"))
                return run_pipeline(project_opt);
            std::cerr << "error: project needs -P, --fraction, or a .bexpr input\n";
            return kExitError;
        }
        if (encode_cmd->parsed())
            return cmd_encode(encode_input, encode_ising, encode_weights,
                              encode_projection.empty() ? std::vector<int>{}
                                                        : parse_var_list(encode_projection),
                              encode_model, encode_seed, encode_out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_input, verify_model, verify_budget, verify_out);
        if (bench->parsed()) {
            if (bench_family == "3sat") {
                Random3SatSpec family;
                family.density = bench_density;
                family.instances_per_n = bench_instances;
                for (int n : parse_var_list(bench_ns)) family.n_values.push_back(n);
                bench_spec.family = family;
            } else if (bench_family == "noncnf") {
                NonCnfSpec family;
                family.depth = bench_depth;
                family.fanin = bench_fanin;
                family.instances_per_n = bench_instances;
                for (int n : parse_var_list(bench_ns)) family.n_values.push_back(n);
                bench_spec.family = family;
            } else {
                std::cerr << "error: unknown family '" << bench_family << "'\n";
                return kExitError;
            }
            bench_spec.modes.clear();
            std::stringstream ss(bench_modes);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) bench_spec.modes.push_back(ModeSpec::parse(item));
            bench_spec.sa_initial.num_samples = bench_samples;
            bench_spec.sa_initial.sweeps_per_sample = bench_sweeps;
            bench_spec.sa_initial.threads = bench_threads;
            bench_spec.sa_round.num_samples = bench_round_samples;
            bench_spec.sa_round.sweeps_per_sample = bench_sweeps;
            bench_spec.sa_round.threads = bench_threads;
            return cmd_bench(bench_spec, bench_out);
        }
    } catch (const DimacsError& e) {
        if (e.kind() == DimacsError::Kind::EmptyClause) {
            std::cerr << "UNSAT: " << e.what() << '\n';
            return kExitNoModel;
        }
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
