// Copyright 2026 The pps-sim Authors
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

#include "pps/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "pps/experiments.h"
#include "pps/infotheory.h"
#include "pps/oracles.h"
#include "pps/qstate.h"
#include "pps/rational.h"
#include "pps/rng.h"
#include "pps/simd/kernels.h"
#include "pps/verify.h"

namespace pps::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Three significant digits; fixed notation down to 1e-5, scientific below.
std::string display(double v) {
    if (v == 0) {
        return "0";
    }
    char buf[40];
    double mag = std::abs(v);
    if (mag >= 1e-5 && mag < 1e4) {
        int decimals = std::max(0, 2 - static_cast<int>(std::floor(std::log10(mag))));
        std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    } else {
        std::snprintf(buf, sizeof(buf), "%.3g", v);
    }
    return buf;
}

std::string describe(const ExactReal &x) {
    if (x.exact && x.exact->den() == 1) {
        return x.exact->str();
    }
    return x.str() + " (" + fmt17(x.value) + ")";
}

json number_json(const ExactReal &x) {
    json j;
    j["text"] = x.str();
    j["value"] = x.value;
    return j;
}

ExactReal parse_unit_interval(const std::string &text, const char *what) {
    ExactReal x;
    try {
        x = ExactReal::parse(text);
    } catch (const std::exception &e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
    bool in_range = x.exact ? (*x.exact >= Rational(0) && *x.exact <= Rational(1)) : (x.value >= 0 && x.value <= 1);
    if (!in_range) {
        throw UsageError(std::string(what) + " must lie in [0, 1], got " + text);
    }
    return x;
}

ThresholdRelation relation_for(const ExactReal &eps, unsigned qubits) {
    if (eps.exact && qubits <= 31) {
        return compare_to_threshold(*eps.exact, qubits);
    }
    return compare_to_threshold(eps.value, qubits);
}

std::string relation_key(ThresholdRelation r) {
    switch (r) {
        case ThresholdRelation::Below:
            return "below_threshold";
        case ThresholdRelation::AtThreshold:
            return "at_threshold";
        case ThresholdRelation::Above:
            return "above_threshold";
    }
    return "unknown";
}

std::string threshold_text(unsigned qubits) {
    if (qubits <= 31) {
        return separability_threshold_exact(qubits).str();
    }
    return fmt17(separability_threshold(qubits));
}

json separability_json(const ExactReal &eps, unsigned qubits) {
    json j;
    ThresholdRelation r = relation_for(eps, qubits);
    j["total_qubits"] = qubits;
    j["threshold_text"] = threshold_text(qubits);
    j["threshold"] = separability_threshold(qubits);
    j["relation"] = relation_key(r);
    j["certified_separable"] = r == ThresholdRelation::Below;
    return j;
}

void write_output(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    file << content;
    if (!file) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

std::optional<std::string> read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Table {
   public:
    void row(const std::string &key, const std::string &value) { rows_.emplace_back(key, value); }
    void blank() { rows_.emplace_back("", ""); }
    std::string str(const std::string &title) const {
        size_t width = 0;
        for (const auto &[k, v] : rows_) {
            width = std::max(width, k.size());
        }
        std::ostringstream s;
        s << title << "\n";
        for (const auto &[k, v] : rows_) {
            if (k.empty()) {
                s << "\n";
                continue;
            }
            s << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
        }
        return s.str();
    }

   private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string bits(double v) {
    return display(v) + " bits  [" + fmt17(v) + "]";
}

struct CommonOptions {
    unsigned n = 0;
    std::string epsilon;
    std::string mode = "exact";
    uint64_t seed = 1;
    std::string out;
    bool json = false;
    std::string function_path;
    unsigned shots = 0;
    int functions = -1;
};

// --- dj -------------------------------------------------------------------

struct DjOptions : CommonOptions {
    std::string p = "1/2";
    bool improved = false;
};

std::vector<DjFunction> dj_functions(const DjOptions &o, unsigned n) {
    if (!o.function_path.empty()) {
        auto text = read_file(o.function_path);
        if (!text) {
            throw UsageError("cannot read function file '" + o.function_path + "'");
        }
        auto parsed = parse_function_text(*text);
        if (!std::holds_alternative<DjFunction>(parsed)) {
            throw UsageError("function file does not hold a DJ function");
        }
        return {std::get<DjFunction>(parsed)};
    }
    std::vector<DjFunction> fs{make_constant_dj_function(n, 0), make_constant_dj_function(n, 1)};
    int balanced = o.functions >= 0 ? o.functions : (n <= 5 ? 20 : 3);
    for (int k = 0; k < balanced; k++) {
        fs.push_back(make_dj_function(n, DjKind::Balanced, o.seed + static_cast<uint64_t>(k)));
    }
    return fs;
}

uint64_t sample_index(std::span<const double> dist, Rng &rng) {
    double u = rng.uniform_unit();
    double acc = 0;
    for (size_t i = 0; i < dist.size(); i++) {
        acc += dist[i];
        if (u < acc) {
            return i;
        }
    }
    return dist.size() - 1;
}

int cmd_dj(const DjOptions &o, std::ostream &out) {
    ExactReal eps = parse_unit_interval(o.epsilon, "--epsilon");
    ExactReal p = parse_unit_interval(o.p, "--p");
    bool run_exact = o.mode == "exact" || o.mode == "both";
    bool run_sim = o.mode == "simulate" || o.mode == "both";

    std::vector<DjFunction> functions;
    unsigned n = o.n;
    if (run_sim) {
        if (!o.function_path.empty()) {
            functions = dj_functions(o, n);
            if (n != 0 && functions.front().n() != n) {
                throw UsageError("--n disagrees with the function file");
            }
            n = functions.front().n();
        } else {
            if (n < 1) {
                throw UsageError("--n is required");
            }
            if (n > kDjSimulationCap) {
                throw UsageError("--mode simulate supports n <= " + std::to_string(kDjSimulationCap));
            }
            functions = dj_functions(o, n);
        }
    }
    if (n < 1 || n > 60) {
        throw UsageError("--n must lie in [1, 60]");
    }

    unsigned qubits = n + 1;
    auto closed = dj_closed_form(n, eps.value);
    auto table = dj_joint_table(n, eps.value, p.value);
    auto report = dj_info_report(n, eps.value, p.value, false);
    ThresholdRelation rel = relation_for(eps, qubits);

    json j;
    j["command"] = "dj";
    j["n"] = n;
    j["epsilon"] = number_json(eps);
    j["p"] = number_json(p);
    j["improved"] = o.improved;
    j["mode"] = o.mode;
    j["separability"] = separability_json(eps, qubits);

    Table t;
    t.row("n", std::to_string(n));
    t.row("epsilon", describe(eps));
    t.row("prior P(constant)", describe(p));
    t.row("qubits", std::to_string(qubits));
    t.row("separability", to_string(rel) + " (threshold " + threshold_text(qubits) + ")");

    if (run_exact) {
        j["outcomes"] = {{"p_zero_given_const", closed.p_zero_given_const},
                         {"p_nonzero_given_const", closed.p_nonzero_given_const},
                         {"p_zero_given_bal", closed.p_zero_given_bal},
                         {"p_nonzero_given_bal", closed.p_nonzero_given_bal}};
        j["joint_table"] = {{"const_zero", table.const_zero},
                            {"const_nonzero", table.const_nonzero},
                            {"bal_zero", table.bal_zero},
                            {"bal_nonzero", table.bal_nonzero},
                            {"p_zero", table.p_zero()}};
        t.blank();
        t.row("P(z=0 | constant)", fmt17(closed.p_zero_given_const));
        t.row("P(z!=0 | constant)", fmt17(closed.p_nonzero_given_const));
        t.row("P(z=0 | balanced)", fmt17(closed.p_zero_given_bal));
        t.row("P(z!=0 | balanced)", fmt17(closed.p_nonzero_given_bal));
        t.row("joint const,zero", fmt17(table.const_zero));
        t.row("joint const,nonzero", fmt17(table.const_nonzero));
        t.row("joint bal,zero", fmt17(table.bal_zero));
        t.row("joint bal,nonzero", fmt17(table.bal_nonzero));
        t.row("P(z=0)", fmt17(table.p_zero()));
        if (o.improved) {
            auto imp = dj_improved_closed_form(n, eps.value);
            j["improved_outcome"] = {{"epsilon_hat", imp.epsilon_hat},
                                     {"p_ancilla_one", imp.p_ancilla_one},
                                     {"p_zero_given_const_and_ancilla_one", imp.given_ancilla_one.p_zero_given_const},
                                     {"p_zero_given_bal_and_ancilla_one", imp.given_ancilla_one.p_zero_given_bal}};
            std::string eps_hat_text = fmt17(imp.epsilon_hat);
            if (eps.exact) {
                Rational hat = Rational(2) * *eps.exact / (Rational(1) + *eps.exact);
                eps_hat_text = hat.str() + " (" + fmt17(imp.epsilon_hat) + ")";
            }
            t.blank();
            t.row("ancilla measured", "yes");
            t.row("epsilon_hat", eps_hat_text);
            t.row("P(ancilla=1)", fmt17(imp.p_ancilla_one));
            t.row("P(z=0 | const, anc=1)", fmt17(imp.given_ancilla_one.p_zero_given_const));
            t.row("P(z=0 | bal, anc=1)", fmt17(imp.given_ancilla_one.p_zero_given_bal));
        }
        std::optional<InfoReport> improved;
        if (o.improved) {
            improved = dj_info_report(n, eps.value, p.value, true);
        }
        j["info"] = {{"prior_entropy_bits", report.prior_entropy},
                     {"conditional_entropy_bits", report.conditional_entropy},
                     {"mutual_information_bits", report.mutual_information},
                     {"asymptotic_bits", report.asymptotic}};
        t.blank();
        t.row("H(X)", bits(report.prior_entropy));
        t.row("H(X|Y)", bits(report.conditional_entropy));
        t.row("I(X;Y)", bits(report.mutual_information));
        t.row("small-eps asymptotic", bits(report.asymptotic));
        if (improved) {
            j["info_improved"] = {{"mutual_information_bits", improved->mutual_information},
                                  {"asymptotic_bits", improved->asymptotic}};
            t.row("I(X;Y,ancilla)", bits(improved->mutual_information));
            t.row("small-eps asymptotic, ancilla", bits(improved->asymptotic));
        }
    }

    if (run_sim) {
        json sims = json::array();
        double worst = 0;
        Rng rng(o.seed);
        auto imp = dj_improved_closed_form(n, eps.value);
        for (const auto &f : functions) {
            auto sim = dj_simulate(f, eps.value);
            double gap = std::abs(sim.p_zero() - closed.p_zero(f.kind()));
            json s = {{"kind", to_string(f.kind())}, {"p_zero", sim.p_zero()}, {"closed_form_p_zero", closed.p_zero(f.kind())}};
            if (o.improved) {
                const auto &branch = f.kind() == DjKind::Constant ? imp.constant_ancilla_one : imp.balanced_ancilla_one;
                gap = std::max(gap, std::abs(sim.p_zero_and_ancilla(1) - branch.p_zero));
                s["p_ancilla_one"] = sim.p_ancilla(1);
                s["p_zero_and_ancilla_one"] = sim.p_zero_and_ancilla(1);
            }
            s["abs_gap"] = gap;
            if (o.shots > 0) {
                unsigned zeros = 0;
                for (unsigned k = 0; k < o.shots; k++) {
                    zeros += sample_index(sim.z_distribution, rng) == 0;
                }
                s["sampled_zero_fraction"] = static_cast<double>(zeros) / o.shots;
            }
            worst = std::max(worst, gap);
            sims.push_back(std::move(s));
        }
        j["simulation"] = {{"functions", sims}, {"max_abs_gap", worst}};
        size_t constants = std::count_if(functions.begin(), functions.end(),
                                         [](const DjFunction &f) { return f.kind() == DjKind::Constant; });
        t.blank();
        t.row("simulated functions",
              std::to_string(functions.size()) + " (" + std::to_string(constants) + " constant, " +
                  std::to_string(functions.size() - constants) + " balanced)");
        // One line per kind; every function of a kind shares the closed form.
        for (const char *kind : {"constant", "balanced"}) {
            auto it = std::find_if(sims.begin(), sims.end(), [&](const json &s) { return s["kind"] == kind; });
            if (it == sims.end()) {
                continue;
            }
            std::string line = "P(z=0) " + fmt17((*it)["p_zero"].get<double>());
            if (it->contains("sampled_zero_fraction")) {
                line += ", sampled " + display((*it)["sampled_zero_fraction"].get<double>()) + " over " +
                        std::to_string(o.shots) + " shots";
            }
            t.row(std::string("  first ") + kind, line);
        }
        t.row("max |simulated - closed|", fmt17(worst));
    }

    std::string text = o.json ? j.dump(2) + "\n" : t.str("Deutsch-Jozsa, one query on a pseudo-pure state");
    write_output(o.out, text, out);
    return kExitOk;
}

// --- simon ----------------------------------------------------------------

struct SimonOptions : CommonOptions {
    uint64_t mask = 0;
};

int cmd_simon(const SimonOptions &o, std::ostream &out) {
    ExactReal eps = parse_unit_interval(o.epsilon, "--epsilon");
    bool run_exact = o.mode == "exact" || o.mode == "both";
    bool run_sim = o.mode == "simulate" || o.mode == "both";

    std::vector<SimonFunction> functions;
    unsigned n = o.n;
    if (run_sim && !o.function_path.empty()) {
        auto text = read_file(o.function_path);
        if (!text) {
            throw UsageError("cannot read function file '" + o.function_path + "'");
        }
        auto parsed = parse_function_text(*text);
        if (!std::holds_alternative<SimonFunction>(parsed)) {
            throw UsageError("function file does not hold a Simon function");
        }
        functions.push_back(std::get<SimonFunction>(parsed));
        if (n != 0 && functions.front().n() != n) {
            throw UsageError("--n disagrees with the function file");
        }
        n = functions.front().n();
    }
    if (n < 2 || n > 60) {
        throw UsageError("--n must lie in [2, 60]");
    }
    if (o.mask != 0 && (n > 62 || o.mask >= (uint64_t{1} << n))) {
        throw UsageError("--mask must lie in [1, 2^n - 1]");
    }
    if (run_sim && functions.empty()) {
        if (n > kSimonSimulationCap) {
            throw UsageError("--mode simulate supports n <= " + std::to_string(kSimonSimulationCap));
        }
        std::vector<uint64_t> masks;
        Rng rng(o.seed);
        if (o.mask != 0) {
            masks.push_back(o.mask);
        } else if (n <= 3) {
            for (uint64_t s = 1; s < (uint64_t{1} << n); s++) {
                masks.push_back(s);
            }
        } else {
            masks.push_back(1 + rng.uniform_below((uint64_t{1} << n) - 1));
        }
        int permuted = o.functions >= 0 ? o.functions : (n <= 3 ? 5 : 1);
        for (uint64_t s : masks) {
            functions.push_back(make_simon_function(n, s, SimonLabeling::Canonical));
            for (int k = 0; k < permuted; k++) {
                functions.push_back(make_simon_function(n, s, SimonLabeling::Permuted, o.seed + static_cast<uint64_t>(k)));
            }
        }
    }

    unsigned qubits = 2 * n;
    auto report = simon_info_report(n, eps.value);
    auto entropies = simon_entropies(n, eps.value);
    double N = std::ldexp(1.0, static_cast<int>(n));
    ThresholdRelation rel = relation_for(eps, qubits);

    json j;
    j["command"] = "simon";
    j["n"] = n;
    j["epsilon"] = number_json(eps);
    j["mode"] = o.mode;
    j["separability"] = separability_json(eps, qubits);

    Table t;
    t.row("n", std::to_string(n));
    t.row("epsilon", describe(eps));
    t.row("qubits", std::to_string(qubits));
    t.row("separability", to_string(rel) + " (threshold " + threshold_text(qubits) + ")");

    if (run_exact) {
        double orth = (1 + eps.value) / N;
        double non_orth = (1 - eps.value) / N;
        double marginal_nonzero = (1 - orth) / (N - 1);
        j["conditional"] = {{"p_orthogonal_j", orth}, {"p_non_orthogonal_j", non_orth}};
        j["marginal"] = {{"p_j_zero", orth}, {"p_j_nonzero", marginal_nonzero}};
        j["info"] = {{"prior_entropy_bits", report.prior_entropy},
                     {"h_j_bits", entropies.h_j},
                     {"h_j_given_s_bits", entropies.h_j_given_s},
                     {"mutual_information_bits", report.mutual_information},
                     {"asymptotic_bits", report.asymptotic}};
        t.blank();
        t.row("P(J=j | S=s), j.s=0", fmt17(orth));
        t.row("P(J=j | S=s), j.s=1", fmt17(non_orth));
        t.row("P(J=0)", fmt17(orth));
        t.row("P(J=j), j!=0", fmt17(marginal_nonzero));
        t.blank();
        t.row("H(S)", bits(report.prior_entropy));
        t.row("H(J)", bits(entropies.h_j));
        t.row("H(J|S)", bits(entropies.h_j_given_s));
        t.row("I(S;J)", bits(report.mutual_information));
        t.row("small-eps asymptotic", bits(report.asymptotic));
    }

    if (run_sim) {
        json sims = json::array();
        double worst = 0;
        Rng rng(o.seed);
        for (const auto &f : functions) {
            auto sim = simon_simulate(f, eps.value);
            auto closed = simon_closed_form(n, eps.value, f.mask());
            double gap = 0;
            double orthogonal_mass = 0;
            for (size_t jdx = 0; jdx < sim.probabilities.size(); jdx++) {
                gap = std::max(gap, std::abs(sim.probabilities[jdx] - closed.probabilities[jdx]));
                if (dot_mod2(jdx, f.mask()) == 0) {
                    orthogonal_mass += sim.probabilities[jdx];
                }
            }
            json s = {{"mask", f.mask()}, {"p_orthogonal", orthogonal_mass}, {"abs_gap", gap}};
            if (o.shots > 0) {
                unsigned orth_hits = 0;
                for (unsigned k = 0; k < o.shots; k++) {
                    orth_hits += dot_mod2(sample_index(sim.probabilities, rng), f.mask()) == 0;
                }
                s["sampled_orthogonal_fraction"] = static_cast<double>(orth_hits) / o.shots;
            }
            worst = std::max(worst, gap);
            sims.push_back(std::move(s));
        }
        j["simulation"] = {{"functions", sims}, {"max_abs_gap", worst}};
        t.blank();
        t.row("simulated functions", std::to_string(functions.size()));
        t.row("P(j.s=0) simulated", fmt17(sims.front()["p_orthogonal"].get<double>()) + " (mask " +
                                        std::to_string(functions.front().mask()) + ")");
        if (o.shots > 0) {
            t.row("sampled j.s=0 fraction",
                  display(sims.front()["sampled_orthogonal_fraction"].get<double>()) + " over " +
                      std::to_string(o.shots) + " shots");
        }
        t.row("max |simulated - closed|", fmt17(worst));
    }

    std::string text = o.json ? j.dump(2) + "\n" : t.str("Simon, one query on a pseudo-pure state");
    write_output(o.out, text, out);
    return kExitOk;
}

// --- sweep ----------------------------------------------------------------

struct SweepOptions {
    std::string problem;
    unsigned n = 0;
    std::string p = "1/2";
    std::string eps = "0:1:0.01";
    std::string out;
};

int cmd_sweep(const SweepOptions &o, std::ostream &out) {
    GridSpec eps_grid;
    GridSpec p_grid;
    try {
        eps_grid = parse_grid(o.eps);
        if (o.problem == "dj") {
            p_grid = parse_grid(o.p);
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    auto check_unit = [](const GridSpec &g, const char *what) {
        for (double v : g.values) {
            if (!(v >= 0 && v <= 1)) {
                throw UsageError(std::string(what) + " grid leaves [0, 1]");
            }
        }
    };
    check_unit(eps_grid, "--eps");
    check_unit(p_grid, "--p");

    std::ostringstream csv;
    size_t rows = 0;
    if (o.problem == "dj") {
        unsigned n = o.n ? o.n : 3;
        if (n > 60) {
            throw UsageError("--n must lie in [1, 60]");
        }
        csv << "p,epsilon,mi_bits\n";
        for (double p : p_grid.values) {
            for (double e : eps_grid.values) {
                csv << fmt17(p) << "," << fmt17(e) << "," << fmt17(dj_mutual_information(n, e, p)) << "\n";
                rows++;
            }
        }
    } else if (o.problem == "simon") {
        unsigned n = o.n ? o.n : 10;
        if (n < 2 || n > 60) {
            throw UsageError("--n must lie in [2, 60]");
        }
        csv << "epsilon,mi_bits\n";
        for (double e : eps_grid.values) {
            csv << fmt17(e) << "," << fmt17(simon_mutual_information(n, e)) << "\n";
            rows++;
        }
    } else {
        throw UsageError("sweep problem must be 'dj' or 'simon'");
    }
    write_output(o.out, csv.str(), out);
    if (!o.out.empty()) {
        out << "wrote " << rows << " rows to " << o.out << "\n";
    }
    return kExitOk;
}

// --- werner ---------------------------------------------------------------

int cmd_werner(const std::string &lambda_text, bool as_json, std::ostream &out) {
    ExactReal lambda = parse_unit_interval(lambda_text, "--lambda");
    double eps = werner_epsilon(lambda.value);
    double ppt = ppt_min_eigenvalue(werner(lambda.value), {0});

    std::string verdict;
    std::string eps_text = fmt17(eps);
    if (lambda.exact) {
        Rational e = (Rational(4) * *lambda.exact - Rational(1)) / Rational(3);
        eps_text = e.str();
        if (e == Rational(0)) {
            verdict = "fully mixed";
        } else if (e == Rational(1, 3)) {
            verdict = "separable (boundary)";
        } else if (e > Rational(1, 3)) {
            verdict = "entangled";
        } else {
            verdict = "separable";
        }
    } else {
        verdict = std::abs(ppt) <= 1e-12 ? "separable (boundary)" : (ppt < 0 ? "entangled" : "separable");
        if (eps == 0) {
            verdict = "fully mixed";
        }
    }
    double shown = std::abs(ppt) <= 1e-12 ? 0.0 : ppt;

    if (as_json) {
        json j;
        j["command"] = "werner";
        j["lambda"] = number_json(lambda);
        j["epsilon"] = eps;
        j["epsilon_text"] = eps_text;
        j["ppt_min_eigenvalue"] = ppt;
        j["verdict"] = verdict;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    Table t;
    t.row("lambda", describe(lambda));
    t.row("epsilon", eps_text);
    t.row("PPT min eigenvalue", display(shown) + "  [" + fmt17(ppt) + "]");
    t.row("verdict", verdict);
    out << t.str("Werner state");
    return kExitOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(bool as_json, bool inject_fault, uint64_t seed, std::ostream &out) {
    VerifyOptions options;
    options.inject_entropy_fault = inject_fault;
    options.seed = seed;
    auto results = run_cross_checks(options);
    bool all = std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
    if (as_json) {
        json checks = json::array();
        for (const auto &r : results) {
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"delta", r.delta}, {"tolerance", r.tolerance}});
        }
        json j = {{"passed", all}, {"simd_backend", std::string(simd::backend_name(simd::active_kernels().backend))},
                  {"checks", checks}};
        out << j.dump(2) << "\n";
    } else {
        size_t width = 0;
        for (const auto &r : results) {
            width = std::max(width, r.name.size());
        }
        for (const auto &r : results) {
            char line[160];
            std::snprintf(line, sizeof(line), "%s  %-*s  delta=%-10.3g tol=%.0e\n", r.passed ? "PASS" : "FAIL",
                          static_cast<int>(width), r.name.c_str(), r.delta, r.tolerance);
            out << line;
        }
        out << (all ? "all checks passed" : "FAILED:");
        if (!all) {
            for (const auto &r : results) {
                if (!r.passed) {
                    out << " " << r.name;
                }
            }
        }
        out << "\n";
    }
    return all ? kExitOk : kExitCheckFailure;
}

void add_common(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--n", o.n, "Input register width");
    cmd->add_option("--epsilon", o.epsilon, "Purity, e.g. 1/129 or 0.01")->required();
    cmd->add_option("--mode", o.mode, "exact | simulate | both")->check(CLI::IsMember({"exact", "simulate", "both"}));
    cmd->add_option("--seed", o.seed, "Seed for generated functions and sampling");
    cmd->add_option("--out", o.out, "Write the report to this file");
    cmd->add_flag("--json", o.json, "Emit JSON");
    cmd->add_option("--function", o.function_path, "Simulate the function in this table file");
    cmd->add_option("--shots", o.shots, "Monte-Carlo samples per simulated function");
    cmd->add_option("--functions", o.functions, "Number of generated seeded functions per mask/kind");
}

}  // namespace

GridSpec parse_grid(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream s(text);
    std::string part;
    while (std::getline(s, part, ':')) {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == ':') {
        parts.push_back("");
    }
    GridSpec g;
    if (parts.size() == 1) {
        ExactReal v = ExactReal::parse(parts[0]);
        g.values.push_back(v.value);
        g.labels.push_back(v.str());
        return g;
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid '" + text + "' must be start:stop:step or a single value");
    }
    ExactReal start = ExactReal::parse(parts[0]);
    ExactReal stop = ExactReal::parse(parts[1]);
    ExactReal step = ExactReal::parse(parts[2]);
    if (!(step.value > 0)) {
        throw std::invalid_argument("grid '" + text + "' needs a positive step");
    }
    if (stop.value < start.value) {
        throw std::invalid_argument("grid '" + text + "' is empty");
    }
    if (start.exact && stop.exact && step.exact) {
        Rational span = (*stop.exact - *start.exact) / *step.exact;
        int64_t count = span.num() / span.den() + 1;
        if (count > 10'000'000) {
            throw std::invalid_argument("grid '" + text + "' is too large");
        }
        for (int64_t i = 0; i < count; i++) {
            Rational v = *start.exact + Rational(i) * *step.exact;
            g.values.push_back(v.to_double());
            g.labels.push_back(v.str());
        }
        return g;
    }
    double span = (stop.value - start.value) / step.value;
    if (span > 1e7) {
        throw std::invalid_argument("grid '" + text + "' is too large");
    }
    auto count = static_cast<int64_t>(std::floor(span + 1e-9)) + 1;
    for (int64_t i = 0; i < count; i++) {
        double v = start.value + static_cast<double>(i) * step.value;
        g.values.push_back(v);
        g.labels.push_back(fmt17(v));
    }
    return g;
}

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Single-query Deutsch-Jozsa and Simon experiments on pseudo-pure states", "pps"};
    app.require_subcommand(1);
    std::string backend = "auto";
    app.add_option("--simd", backend, "Kernel backend: auto | scalar | avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    DjOptions dj;
    auto *dj_cmd = app.add_subcommand("dj", "Deutsch-Jozsa on a PPS: outcome probabilities and I(X;Y)");
    add_common(dj_cmd, dj);
    dj_cmd->add_option("--p", dj.p, "Prior probability that f is constant");
    dj_cmd->add_flag("--improved", dj.improved, "Also measure the ancilla qubit");

    SimonOptions simon;
    auto *simon_cmd = app.add_subcommand("simon", "Simon on a PPS: distribution of j and I(S;J)");
    add_common(simon_cmd, simon);
    simon_cmd->add_option("--mask", simon.mask, "Simulate only this mask s");

    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Mutual information over a grid, as CSV");
    sweep_cmd->add_option("problem", sweep.problem, "dj | simon")->required();
    sweep_cmd->add_option("--n", sweep.n, "Input register width (default 3 for dj, 10 for simon)");
    sweep_cmd->add_option("--p", sweep.p, "Prior grid (dj only)");
    sweep_cmd->add_option("--eps,--epsilon", sweep.eps, "Purity grid start:stop:step");
    sweep_cmd->add_option("--out", sweep.out, "CSV output path (stdout when omitted)");

    std::string lambda;
    bool werner_json = false;
    auto *werner_cmd = app.add_subcommand("werner", "Werner state purity and PPT witness");
    werner_cmd->add_option("--lambda", lambda, "Singlet weight in [0, 1]")->required();
    werner_cmd->add_flag("--json", werner_json, "Emit JSON");

    bool verify_json = false;
    bool inject_fault = false;
    uint64_t verify_seed = VerifyOptions{}.seed;
    auto *verify_cmd = app.add_subcommand("verify", "Run the cross-check suite");
    verify_cmd->add_flag("--json", verify_json, "Emit JSON");
    verify_cmd->add_option("--seed", verify_seed, "Seed for randomized checks");
    verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

    std::vector<std::string> argv_storage{"pps"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << "run 'pps --help' for usage\n";
        return kExitUsage;
    }

    if (backend == "scalar") {
        simd::force_backend(simd::Backend::Scalar);
    } else if (backend == "avx2" && !simd::force_backend(simd::Backend::Avx2)) {
        err << "error: avx2 kernels are not available on this machine\n";
        return kExitUsage;
    }

    try {
        if (dj_cmd->parsed()) {
            return cmd_dj(dj, out);
        }
        if (simon_cmd->parsed()) {
            return cmd_simon(simon, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep, out);
        }
        if (werner_cmd->parsed()) {
            return cmd_werner(lambda, werner_json, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_json, inject_fault, verify_seed, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}

}  // namespace pps::cli
