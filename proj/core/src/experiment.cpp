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

#include "qimp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qimp/circuit.hpp"
#include "qimp/rng.hpp"

namespace qimp {

std::string ModeSpec::name() const {
    std::string out = task == Task::Full ? "full" : "shrink";
    out += scope == Scope::Standard ? "-standard" : "-projected";
    out += strategy == Strategy::Basic ? "-basic" : "-iter";
    return out;
}

ModeSpec ModeSpec::parse(const std::string& name) {
    ModeSpec spec;
    std::string part;
    std::vector<std::string> parts;
    std::istringstream in(name);
    while (std::getline(in, part, '-')) parts.push_back(part);
    if (parts.size() != 3) throw std::invalid_argument("mode must be task-scope-strategy");
    if (parts[0] == "full") spec.task = Task::Full;
    else if (parts[0] == "shrink") spec.task = Task::Shrink;
    else throw std::invalid_argument("unknown task '" + parts[0] + "'");
    if (parts[1] == "standard") spec.scope = Scope::Standard;
    else if (parts[1] == "projected") spec.scope = Scope::Projected;
    else throw std::invalid_argument("unknown scope '" + parts[1] + "'");
    if (parts[2] == "basic") spec.strategy = Strategy::Basic;
    else if (parts[2] == "iter") spec.strategy = Strategy::Iter;
    else throw std::invalid_argument("unknown strategy '" + parts[2] + "'");
    return spec;
}

namespace {

// First satisfying total assignment in counting order (x1 most significant,
// False before True), or nullopt.
std::optional<PartialAssignment> first_model(const CnfFormula& f) {
    const int n = f.num_vars();
    if (n > 26) throw std::invalid_argument("brute-force model search capped at n <= 26");
    PartialAssignment eta(n);
    const std::uint64_t count = 1ULL << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int v = 1; v <= n; ++v) {
            const bool value = (mask >> (n - v)) & 1;
            eta.set(v, value ? Ternary::True : Ternary::False);
        }
        if (entails(eta, f)) return eta;
    }
    return std::nullopt;
}

bool brute_force_satisfiable(const CnfFormula& f) { return first_model(f).has_value(); }

// Annealing probe: satisfiable if some sample lands at or below the feasible
// bound (sound by the energy threshold criterion; may miss, in which case the
// caller regenerates).
bool sa_probe_satisfiable(const CnfFormula& f, std::uint64_t seed) {
    const PreprocessResult pre = preprocess(f);
    if (pre.status == PreprocessStatus::UnsatDetected) return false;
    if (pre.status == PreprocessStatus::TriviallySat) return true;
    Encoding enc = encode(pre.formula, default_weights(pre.formula.num_vars()),
                          EncodeMode::full());
    SaConfig cfg;
    cfg.num_samples = 100;
    cfg.sweeps_per_sample = 64;
    cfg.seed = derive_seed(seed, 0x70726f6265ULL);
    for (const SampleResult& r : sample(enc, cfg))
        if (r.flags.below_bound) return true;
    return false;
}

// Total satisfying assignment used to seed Shrink modes.
std::optional<PartialAssignment> shrink_model(const CnfFormula& f, std::uint64_t seed) {
    if (f.num_vars() <= 20) return first_model(f);
    Encoding enc = encode(f, default_weights(f.num_vars()), EncodeMode::full());
    SaConfig cfg;
    cfg.num_samples = 200;
    cfg.sweeps_per_sample = 64;
    cfg.seed = derive_seed(seed, 0x6d6f64656cULL);
    const std::vector<SampleResult> pool = sample(enc, cfg);
    const SampleResult& best = best_of(pool);
    if (!best.flags.satisfying) return std::nullopt;
    PartialAssignment eta = best.decoded;
    for (int v = 1; v <= f.num_vars(); ++v)
        if (!eta.assigned(v)) eta.set(v, Ternary::False);  // any completion satisfies
    if (!entails(eta, f)) return std::nullopt;
    return eta;
}

struct Instance {
    std::string family;
    int n = 0;
    int index = 0;
    std::uint64_t seed = 0;
    CnfFormula reduced;
    std::vector<Literal> forced;
    std::set<int> visible;  // set for NonCnf; 3-SAT projected sets are drawn per mode
};

std::vector<int> draw_visible_subset(int n, double fraction, std::uint64_t seed) {
    std::vector<int> vars(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) vars[static_cast<std::size_t>(v) - 1] = v;
    Rng rng(derive_seed(seed, 0x766973ULL));
    for (std::size_t i = vars.size(); i > 1; --i)
        std::swap(vars[i - 1], vars[rng.below(i)]);
    const int keep = std::max(1, static_cast<int>(std::lround(fraction * n)));
    vars.resize(static_cast<std::size_t>(std::min(keep, n)));
    std::sort(vars.begin(), vars.end());
    return vars;
}

}  // namespace

CnfFormula gen_random_3sat(int n, double density, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("gen_random_3sat needs n >= 4");
    if (density <= 0) throw std::invalid_argument("density must be positive");
    const int m = static_cast<int>(std::lround(density * n));

    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        CnfFormula f(n);
        std::set<std::vector<Literal>> seen;
        while (static_cast<int>(f.num_clauses()) < m) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            if (a == b || a == c || b == c) continue;
            Clause clause{Literal(a, rng.coin()), Literal(b, rng.coin()), Literal(c, rng.coin())};
            std::vector<Literal> key = clause;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            f.add_clause(std::move(clause));
        }
        const bool satisfiable =
            n <= 20 ? brute_force_satisfiable(f) : sa_probe_satisfiable(f, derive_seed(seed, attempt));
        if (satisfiable) return f;
    }
}

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec) {
    std::vector<Instance> instances;

    if (const auto* sat = std::get_if<Random3SatSpec>(&spec.family)) {
        for (int n : sat->n_values) {
            for (int i = 0; i < sat->instances_per_n; ++i) {
                Instance inst;
                inst.family = "3sat";
                inst.n = n;
                inst.index = i;
                inst.seed = derive_seed(spec.seed, (static_cast<std::uint64_t>(n) << 20) | static_cast<std::uint64_t>(i));
                CnfFormula f = gen_random_3sat(n, sat->density, inst.seed);
                PreprocessResult pre = preprocess(f);
                inst.reduced = std::move(pre.formula);
                inst.forced = std::move(pre.forced);
                instances.push_back(std::move(inst));
            }
        }
    } else {
        const auto& family = std::get<NonCnfSpec>(spec.family);
        for (int n : family.n_values) {
            for (int i = 0; i < family.instances_per_n; ++i) {
                Instance inst;
                inst.family = "noncnf";
                inst.n = n;
                inst.index = i;
                inst.seed = derive_seed(spec.seed, (static_cast<std::uint64_t>(n) << 20) | static_cast<std::uint64_t>(i) | (1ULL << 40));
                // Regenerate until the expression is satisfiable (checked on
                // the expression itself for small n, on the CNF above).
                for (std::uint64_t attempt = 0;; ++attempt) {
                    BoolExpr expr = random_nested(n, family.depth, family.fanin,
                                                  derive_seed(inst.seed, attempt));
                    CnfConversion conv = plaisted_greenbaum(to_nnf(expr));
                    const bool satisfiable =
                        conv.cnf.num_vars() <= 20
                            ? brute_force_satisfiable(conv.cnf)
                            : sa_probe_satisfiable(conv.cnf, derive_seed(inst.seed, attempt));
                    if (!satisfiable) continue;
                    PreprocessResult pre = preprocess(conv.cnf);
                    if (pre.status == PreprocessStatus::UnsatDetected) continue;
                    inst.reduced = std::move(pre.formula);
                    inst.forced = std::move(pre.forced);
                    inst.visible = conv.visible;
                    break;
                }
                instances.push_back(std::move(inst));
            }
        }
    }

    std::vector<RunRecord> records;
    for (const Instance& inst : instances) {
        for (const ModeSpec& mode : spec.modes) {
            RunRecord rec;
            rec.family = inst.family;
            rec.n = inst.n;
            rec.instance = inst.index;
            rec.instance_seed = inst.seed;
            rec.mode = mode.name();
            const auto started = std::chrono::steady_clock::now();
            try {
                std::vector<int> visible;
                if (mode.scope == Scope::Projected) {
                    if (inst.family == "noncnf")
                        visible.assign(inst.visible.begin(), inst.visible.end());
                    else
                        visible = draw_visible_subset(inst.reduced.num_vars(),
                                                      spec.projected_fraction, inst.seed);
                }

                EncodeMode enc_mode = EncodeMode::full();
                if (mode.task == Task::Shrink) {
                    auto eta = shrink_model(inst.reduced, inst.seed);
                    if (!eta) throw std::runtime_error("no total model found for shrink seed");
                    enc_mode = EncodeMode::shrink(std::move(*eta));
                }
                if (mode.scope == Scope::Projected)
                    enc_mode = std::move(enc_mode).projected(visible);

                const int base = mode.scope == Scope::Projected
                                     ? static_cast<int>(visible.size())
                                     : inst.reduced.num_vars();
                Encoding enc = encode(inst.reduced, default_weights(std::max(base, 1)), enc_mode);

                SaConfig initial = spec.sa_initial;
                initial.seed = derive_seed(inst.seed, 0x696e6974ULL);
                SampleResult best;
                if (mode.strategy == Strategy::Basic) {
                    best = best_of(sample(enc, initial));
                    rec.rounds = 0;
                    rec.converged = true;
                } else {
                    SaConfig round = spec.sa_round;
                    round.seed = derive_seed(inst.seed, 0x726f756e64ULL);
                    RefineTrace trace = iterate_shrink(enc, initial, round, spec.max_rounds);
                    best = trace.final_best();
                    rec.rounds = trace.refine_rounds_used;
                    rec.converged = trace.converged;
                }

                rec.bits = best.bits;
                rec.energy = best.energy;
                rec.size = best.flags.consistent ? best.decoded.size() : 0;
                rec.size_in_scope = best.assigned_in_scope;
                rec.scope_size = static_cast<int>(enc.sparsity_vars.size());
                rec.ratio = rec.scope_size > 0
                                ? static_cast<double>(rec.size_in_scope) / rec.scope_size
                                : 0.0;
                rec.verdict = verdict(best, enc, spec.oracle_budget);
            } catch (const std::exception& e) {
                rec.failed = true;
                rec.error = e.what();
            }
            rec.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

nlohmann::json to_json(const RunRecord& rec) {
    nlohmann::json j;
    j["family"] = rec.family;
    j["n"] = rec.n;
    j["instance"] = rec.instance;
    j["seed"] = rec.instance_seed;
    j["mode"] = rec.mode;
    if (rec.failed) {
        j["failed"] = true;
        j["error"] = rec.error;
        return j;
    }
    std::string bits;
    bits.reserve(rec.bits.size());
    for (std::uint8_t b : rec.bits) bits.push_back(b ? '1' : '0');
    j["bits"] = std::move(bits);
    j["energy"] = rec.energy;
    j["size"] = rec.size;
    j["size_in_scope"] = rec.size_in_scope;
    j["scope_size"] = rec.scope_size;
    j["ratio"] = rec.ratio;
    j["verdict"] = to_json(rec.verdict);
    j["rounds"] = rec.rounds;
    j["converged"] = rec.converged;
    return j;
}

std::string summary_csv(const std::vector<RunRecord>& records) {
    struct Agg {
        std::string family;
        std::vector<double> ratios;
        int minimal_known = 0, minimal_true = 0;
        int minimum_known = 0, minimum_true = 0;
        long rounds_total = 0;
        int count = 0;
    };
    std::map<std::pair<int, std::string>, Agg> groups;
    for (const RunRecord& rec : records) {
        if (rec.failed) continue;
        Agg& agg = groups[{rec.n, rec.mode}];
        agg.family = rec.family;
        agg.ratios.push_back(rec.ratio);
        if (rec.verdict.minimal) {
            ++agg.minimal_known;
            if (*rec.verdict.minimal) ++agg.minimal_true;
        }
        if (rec.verdict.minimum) {
            ++agg.minimum_known;
            if (*rec.verdict.minimum) ++agg.minimum_true;
        }
        agg.rounds_total += rec.rounds;
        ++agg.count;
    }

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };

    std::string out = "family,n,mode,instances,mean_ratio,std_ratio,minimal_rate,minimum_rate,mean_rounds\n";
    for (const auto& [key, agg] : groups) {
        double mean = 0;
        for (double r : agg.ratios) mean += r;
        mean /= agg.ratios.empty() ? 1 : static_cast<double>(agg.ratios.size());
        double var = 0;
        for (double r : agg.ratios) var += (r - mean) * (r - mean);
        var /= agg.ratios.empty() ? 1 : static_cast<double>(agg.ratios.size());

        out += agg.family + ',' + std::to_string(key.first) + ',' + key.second + ',' +
               std::to_string(agg.count) + ',' + fmt(mean) + ',' + fmt(std::sqrt(var)) + ',';
        out += agg.minimal_known ? fmt(static_cast<double>(agg.minimal_true) / agg.minimal_known)
                                 : std::string();
        out += ',';
        out += agg.minimum_known ? fmt(static_cast<double>(agg.minimum_true) / agg.minimum_known)
                                 : std::string();
        out += ',';
        out += fmt(agg.count ? static_cast<double>(agg.rounds_total) / agg.count : 0.0);
        out += '\n';
    }
    return out;
}

void emit(const std::vector<RunRecord>& records, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + out_dir.string());

    const auto jsonl_path = out_dir / "records.jsonl";
    std::ofstream jsonl(jsonl_path);
    if (!jsonl) throw std::runtime_error("cannot write " + jsonl_path.string());
    for (const RunRecord& rec : records) jsonl << to_json(rec).dump() << '\n';
    jsonl.close();
    if (!jsonl) throw std::runtime_error("write failed for " + jsonl_path.string());

    const auto csv_path = out_dir / "summary.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
    csv << summary_csv(records);
    csv.close();
    if (!csv) throw std::runtime_error("write failed for " + csv_path.string());
}

}  // namespace qimp
