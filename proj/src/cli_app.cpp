/**
 * Copyright 2026 The qmeasure Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qmeasure/cli_app.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmeasure/catalog.hpp"
#include "qmeasure/checks.hpp"
#include "qmeasure/finite_integral.hpp"
#include "qmeasure/induced.hpp"
#include "qmeasure/json_io.hpp"
#include "qmeasure/pair_matrix.hpp"
#include "qmeasure/real_integral.hpp"

namespace qmeasure::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

RealQMeasure parse_measure_spec(const std::string& spec) {
    if (spec == "lebesgue") return RealQMeasure::lebesgue();
    if (spec == "qlebesgue") return RealQMeasure::q_lebesgue();
    if (spec.rfind("destructive:", 0) == 0) return RealQMeasure::destructive(parse_rational(spec.substr(12)));
    throw std::invalid_argument("unknown measure spec: " + spec);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

struct OutputSink {
    std::ostream& fallback;
    std::string path;

    void write(const std::string& content) const {
        if (path.empty()) {
            fallback << content;
            return;
        }
        std::ofstream file(path);
        if (!file) throw std::invalid_argument("cannot write " + path);
        file << content;
    }
};

int cmd_integrate(const std::string& measure_spec, const std::string& function_spec, const std::string& domain_spec,
                  double tol, std::uint64_t budget, const std::string& format, const OutputSink& sink,
                  std::ostream& err) {
    RealQMeasure mu = parse_measure_spec(measure_spec);
    PiecewiseMonotone f = parse_function_spec(function_spec);
    std::vector<double> d = parse_list(domain_spec);
    if (d.size() != 2 || !(0.0 <= d[0] && d[0] < d[1] && d[1] <= 1.0))
        throw std::invalid_argument("domain must be a,b with 0 <= a < b <= 1");
    IntervalUnionD domain = IntervalUnionD::interval(d[0], d[1], d[1] == 1.0);

    QuadratureResult result;
    try {
        result = q_integral_real(mu, f, domain, tol, budget);
    } catch (const QuadratureBudgetExceeded& e) {
        err << "tolerance failure: " << e.what() << "\n";
        return 3;
    }

    std::ostringstream body;
    if (format == "json") {
        nlohmann::json j;
        j["value"] = format_decimal(result.value);
        j["error_estimate"] = format_decimal(result.error_estimate);
        j["evaluations"] = result.evaluations;
        j["measure"] = mu.name();
        j["function"] = f.description();
        body << j.dump(2) << "\n";
    } else if (format == "csv") {
        body << "value,error_estimate,evaluations,measure,function\n";
        body << format_decimal(result.value) << "," << format_decimal(result.error_estimate) << ","
             << result.evaluations << "," << mu.name() << "," << f.description() << "\n";
    } else {
        body << "integral of " << f.description() << " d(" << mu.name() << ") over [" << format_decimal(d[0]) << ","
             << format_decimal(d[1]) << "] = " << format_decimal(result.value)
             << " (error estimate " << format_decimal(result.error_estimate) << ", " << result.evaluations
             << " evaluations)\n";
    }
    sink.write(body.str());
    return 0;
}

void print_line(std::ostringstream& body, bool pass, const std::string& text) {
    body << (pass ? "[PASS] " : "[FAIL] ") << text << "\n";
}

int cmd_check(const std::string& input, const std::string& suite, double tol, std::uint64_t seed,
              const OutputSink& sink) {
    CheckConfig config;
    config.tolerance = tol;
    config.seed = seed;
    std::ostringstream body;
    bool all_pass = true;

    auto run_report = [&](const CheckReport& r) {
        print_line(body, r.pass, r.summary());
        all_pass = all_pass && r.pass;
    };

    if (suite == "decoherence") {
        DecoherenceMatrix d = load_decoherence(input);
        DecoherenceReport r = decoherence_check(d, tol);
        print_line(body, r.hermitian, "hermitian atoms" + (r.hermitian ? "" : ": " + r.witness));
        print_line(body, r.diagonal_nonnegative,
                   "diagonal nonnegative" + (r.diagonal_nonnegative ? "" : ": " + r.witness));
        print_line(body, r.cauchy_schwarz, "cauchy-schwarz bound" + (r.cauchy_schwarz ? "" : ": " + r.witness));
        for (const auto& note : r.notes) body << "note: " << note << "\n";
        all_pass = r.pass();
    } else if (suite == "pairmatrix") {
        PairMeasureMatrix lambda = load_pair_matrix(input);
        QMeasureTable table = from_pair_matrix(lambda);  // throws with witness if not diagonally positive
        run_report(grade2_check(table, config));
        PairMeasureMatrix recovered = recover_pair_matrix(table);
        bool round_trip = recovered.entries() == lambda.entries();
        print_line(body, round_trip, "atom-matrix round trip");
        all_pass = all_pass && round_trip;
    } else {
        QMeasureTable table = load_table(input);
        bool want_all = suite == "all";
        if (want_all || suite == "grade2") run_report(grade2_check(table, config));
        if (want_all || suite == "graden") {
            run_report(graden_check(table, 3, config));
            run_report(graden_check(table, 4, config));
        }
        if (want_all || suite == "theorem21") run_report(theorem21_check(table, config));
        if (want_all || suite == "regularity") {
            RegularityReport r = regularity_check(table, tol);
            std::ostringstream line;
            line << "regularity: regular=" << (r.regular ? "true" : "false")
                 << " completely_regular=" << (r.completely_regular ? "true" : "false");
            if (!r.regular) line << " (" << r.witness_regular << ")";
            else if (!r.completely_regular) line << " (" << r.witness_complete << ")";
            body << line.str() << "\n";
        }
        if (want_all || suite == "center") {
            CheckReport r = center_measure_check(table, config);
            run_report(r);
        }
        if (want_all || suite == "theorem24") {
            EquivalenceReport r = theorem24_check(table, table[table.universe().full()], tol);
            print_line(body, r.equivalent,
                       "center / self-compatibility / mu(A)+mu(A') = mu(X) equivalence" +
                           (r.equivalent ? "" : ": " + r.witness));
            all_pass = all_pass && r.equivalent;
        }
        if (!want_all && suite != "grade2" && suite != "graden" && suite != "theorem21" && suite != "regularity" &&
            suite != "center" && suite != "theorem24")
            throw std::invalid_argument("unknown suite: " + suite);
    }
    sink.write(body.str());
    return all_pass ? 0 : 1;
}

struct DemoLine {
    std::string label;
    std::string computed;
    std::string expected;
    bool ok = false;
};

int emit_demo(std::ostringstream& body, const std::vector<DemoLine>& lines, const OutputSink& sink) {
    bool all_ok = true;
    for (const auto& l : lines) {
        body << (l.ok ? "[OK]   " : "[BAD]  ") << l.label << ": computed " << l.computed << ", expected "
             << l.expected << "\n";
        all_ok = all_ok && l.ok;
    }
    sink.write(body.str());
    return all_ok ? 0 : 1;
}

int cmd_demo(const std::string& name, const OutputSink& sink) {
    std::ostringstream body;
    std::vector<DemoLine> lines;

    if (name == "quantum-coin") {
        QMeasureTable mu = catalog::quantum_coin();
        SubsetMask heads = catalog::quantum_coin_heads_event();
        FiniteFunction head_count(mu.universe(), {Rat(2), Rat(1), Rat(1), Rat(0)});
        body << "quantum coin: two fair flips, mu = nu^2\n";
        Rat event = mu[heads];
        lines.push_back({"mu({x1,x2,x3})", format_rational(event), "9/16", event == Rat(9, 16)});
        Rat integral = q_integral(mu, head_count);
        lines.push_back({"integral of head count", format_rational(integral), "5/8", integral == Rat(5, 8)});
        Rat naive = naive_integral(mu, head_count);
        lines.push_back({"naive integral of head count", format_rational(naive), "3/8", naive == Rat(3, 8)});
        return emit_demo(body, lines, sink);
    }
    if (name == "naive-failure") {
        ConvergenceFailureReport r = convergence_failure_demo(100);
        body << "increasing sequence f_n -> 1 on the null-singleton space\n";
        lines.push_back({"naive integral of f_2", format_rational(r.naive_sequence[1]), "3/2",
                         r.naive_sequence[1] == Rat(3, 2)});
        lines.push_back({"limit of naive integrals", format_rational(r.naive_limit), "2", r.naive_limit == 2});
        lines.push_back(
            {"naive integral of the limit", format_rational(r.naive_of_limit), "1", r.naive_of_limit == 1});
        lines.push_back({"naive sequence converges to the wrong value", r.naive_converges_wrong ? "yes" : "no",
                         "yes", r.naive_converges_wrong});
        lines.push_back({"q-integral sequence stays at the right value", r.q_converges_right ? "yes" : "no", "yes",
                         r.q_converges_right});
        return emit_demo(body, lines, sink);
    }
    if (name == "grade2-integral-gap") {
        Grade2GapReport r = grade2_integral_counterexample();
        body << "overlapping supports break grade-2 additivity of the integral\n";
        lines.push_back({"integral of chi_A+chi_B+chi_C", format_rational(r.combined), "5/4", r.combined == Rat(5, 4)});
        lines.push_back({"six-term expansion", format_rational(r.expansion), "3/2", r.expansion == Rat(3, 2)});
        lines.push_back({"expressions differ (mismatch expected)", r.gap ? "yes" : "no", "yes", r.gap});
        return emit_demo(body, lines, sink);
    }
    if (name == "radon-nikodym") {
        RadonNikodymReport r = radon_nikodym_counterexample();
        body << "no density represents nu against the null-singleton q-measure\n";
        lines.push_back({"nu << mu", r.absolutely_continuous ? "yes" : "no", "yes", r.absolutely_continuous});
        lines.push_back({"forced f(x2)", format_rational(r.forced_x2), "1", r.forced_x2 == 1});
        lines.push_back({"forced f(x3)", format_rational(r.forced_x3), "1", r.forced_x3 == 1});
        lines.push_back({"nu({x2,x3})", format_rational(r.nu_pair), "2", r.nu_pair == 2});
        lines.push_back({"integral of forced density over {x2,x3}", format_rational(r.integral_pair), "1",
                         r.integral_pair == 1});
        lines.push_back({"contradiction reproduced", r.contradiction ? "yes" : "no", "yes", r.contradiction});
        lines.push_back({"grid densities representing nu (of " + std::to_string(r.grid_candidates) + ")",
                         std::to_string(r.grid_representers), "0", r.grid_representers == 0});
        return emit_demo(body, lines, sink);
    }
    if (name == "ftc") {
        body << "(1/2) F''(y) = f(y) for F(y) = q-Lebesgue integral over [0,y]\n";
        std::vector<double> grid{0.2, 0.4, 0.6, 0.8};
        for (const char* spec : {"x", "x^2", "exp"}) {
            FtcReport r = quantum_ftc_check(parse_function_spec(spec), grid, 1e-2, 5e-3, 1e-10);
            lines.push_back({std::string("max second-difference error for ") + spec, format_decimal(r.max_error),
                             "<= 0.005", r.pass});
        }
        return emit_demo(body, lines, sink);
    }
    if (name == "surprise-additivity") {
        body << "q-Lebesgue integral of x^2+x equals the sum of the two integrals\n";
        for (double y : {0.5, 1.0}) {
            SurpriseAdditivityReport r = surprise_additivity_check(y, 1e-6);
            lines.push_back({"y=" + format_decimal(y) + " integral", format_decimal(r.computed),
                             format_decimal(r.expected) + " +- 1e-6", r.pass});
        }
        return emit_demo(body, lines, sink);
    }
    throw std::invalid_argument("unknown demo: " + name);
}

int cmd_table(const std::string& sweep, int n_max, const std::string& ys_spec, const std::string& hs_spec,
              const std::string& function_spec, double quad_tol, const OutputSink& sink) {
    std::ostringstream body;
    if (sweep == "monomial") {
        body << "n,y,computed,closed_form,abs_error\n";
        for (double y : parse_list(ys_spec)) {
            for (int n = 0; n <= n_max; ++n) {
                QuadratureResult q = q_integral_real(RealQMeasure::q_lebesgue(), PiecewiseMonotone::monomial(n),
                                                     IntervalUnionD::interval(0.0, y, y == 1.0), quad_tol);
                double closed = monomial_integral_closed(n, y);
                body << n << "," << format_decimal(y) << "," << format_decimal(q.value) << ","
                     << format_decimal(closed) << "," << format_decimal(std::fabs(q.value - closed)) << "\n";
            }
        }
        sink.write(body.str());
        return 0;
    }
    if (sweep == "ftc") {
        body << "function,h,y,computed,closed_form,abs_error\n";
        PiecewiseMonotone f = parse_function_spec(function_spec);
        RealQMeasure mu = RealQMeasure::q_lebesgue();
        for (double h : parse_list(hs_spec)) {
            for (double y : parse_list(ys_spec)) {
                if (!(y > 2 * h && y < 1 - 2 * h)) continue;
                auto accumulated = [&](double t) {
                    return q_integral_real(mu, f, IntervalUnionD::interval(0.0, t, t == 1.0), quad_tol).value;
                };
                double second = (accumulated(y + h) - 2.0 * accumulated(y) + accumulated(y - h)) / (h * h);
                double computed = 0.5 * second;
                double expected = f(y);
                body << f.description() << "," << format_decimal(h) << "," << format_decimal(y) << ","
                     << format_decimal(computed) << "," << format_decimal(expected) << ","
                     << format_decimal(std::fabs(computed - expected)) << "\n";
            }
        }
        sink.write(body.str());
        return 0;
    }
    throw std::invalid_argument("unknown sweep: " + sweep);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite and continuum q-measure toolkit"};
    app.require_subcommand(1);

    std::string measure = "qlebesgue", function = "x", domain = "0,1", format = "text";
    std::string input, output, suite = "all", demo_name, sweep = "monomial";
    std::string ys = "0.25,0.5,0.75,1", hs = "0.1,0.01,0.001";
    double tol = 1e-8;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = 1'000'000;
    int n_max = 6;

    CLI::App* integrate = app.add_subcommand("integrate", "q-integral of a function on [0,1]");
    integrate->add_option("--measure", measure, "lebesgue | qlebesgue | destructive:s");
    integrate->add_option("--function", function, "x | x^n | exp | x^2+x | const:c | indicator:a,b:h | linear:m,b");
    integrate->add_option("--domain", domain, "a,b within [0,1]");
    integrate->add_option("--tol", tol, "quadrature tolerance");
    integrate->add_option("--budget", budget, "evaluation budget");
    integrate->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    integrate->add_option("--output", output, "write to file instead of stdout");
    integrate->add_option("--seed", seed, "reproducibility seed");

    CLI::App* check = app.add_subcommand("check", "verification sweeps on a JSON space");
    check->add_option("--input", input, "measure-space or matrix JSON")->required();
    check->add_option("--suite", suite,
                      "grade2 | graden | theorem21 | regularity | center | theorem24 | pairmatrix | decoherence | all");
    check->add_option("--tol", tol, "identity tolerance");
    check->add_option("--seed", seed, "sampling seed");
    check->add_option("--output", output);

    CLI::App* demo = app.add_subcommand("demo", "worked reproductions");
    demo->add_option("name", demo_name,
                     "quantum-coin | naive-failure | grade2-integral-gap | radon-nikodym | ftc | surprise-additivity")
        ->required();
    demo->add_option("--output", output);

    CLI::App* table = app.add_subcommand("table", "CSV sweeps");
    table->add_option("--sweep", sweep, "monomial | ftc");
    table->add_option("--n-max", n_max, "largest monomial degree");
    table->add_option("--ys", ys, "comma-separated upper endpoints (empty for header only)");
    table->add_option("--hs", hs, "comma-separated steps (ftc sweep)");
    table->add_option("--function", function, "integrand for the ftc sweep");
    table->add_option("--tol", tol, "quadrature tolerance");
    table->add_option("--output", output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    OutputSink sink{out, output};
    try {
        if (integrate->parsed()) {
            double quad_tol = integrate->count("--tol") ? tol : 1e-8;
            return cmd_integrate(measure, function, domain, quad_tol, budget, format, sink, err);
        }
        if (check->parsed()) {
            double check_tol = check->count("--tol") ? tol : 1e-9;
            return cmd_check(input, suite, check_tol, seed, sink);
        }
        if (demo->parsed()) return cmd_demo(demo_name, sink);
        if (table->parsed()) return cmd_table(sweep, n_max, ys, hs, function, tol, sink);
    } catch (const QuadratureBudgetExceeded& e) {
        err << "tolerance failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace qmeasure::cli
