// randiv: exact probabilities for the random division of the unit interval.
//
// Subcommands expose the exact engine (P_{n,k} as piecewise polynomials in
// eps), the closed-form families, a seeded Monte Carlo estimator, the
// quantized balls-in-boxes model, three-dimensional generalized Catalan
// numbers, derivative extraction at eps = 0, and a cross-validation harness.
//
// Exit codes: 0 ok, 1 validation failure, 2 bad arguments, 3 budget exceeded.

#include <cstdio>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "randiv/catalan3d.hpp"
#include "randiv/closed_forms.hpp"
#include "randiv/discrete.hpp"
#include "randiv/engine.hpp"
#include "randiv/errors.hpp"
#include "randiv/montecarlo.hpp"
#include "randiv/validation.hpp"

namespace {

using namespace randiv;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitBudgetExceeded = 3;

void print_piecewise(const PiecewisePoly& pw, const std::string& format) {
    if (format == "json") {
        std::cout << pw.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "piece,lo,hi,degree,coeffs\n";
        for (std::size_t i = 0; i < pw.pieces().size(); ++i) {
            const UPoly& p = pw.pieces()[i];
            std::cout << i << "," << pw.breakpoints()[i].str() << ","
                      << pw.breakpoints()[i + 1].str() << "," << p.degree() << ",";
            if (p.is_zero()) {
                std::cout << "0";
            } else {
                for (std::size_t d = 0; d < p.coeffs().size(); ++d)
                    std::cout << (d ? " " : "") << p.coeffs()[d].str();
            }
            std::cout << "\n";
        }
    } else {
        std::cout << pw.pretty() << "\n";
    }
}

std::string decimal(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and statistical analysis of random interval division"};
    app.require_subcommand(1);

    std::size_t term_budget = 10'000'000;
    app.add_option("--term-budget", term_budget, "Maximum live terms in the exact engine")
        ->capture_default_str();

    // --- exact ---
    auto* exact = app.add_subcommand("exact", "Compute P_{n,k} as an exact piecewise polynomial");
    int ex_n = 0, ex_k = 0;
    std::string ex_format = "pretty";
    std::string ex_order = "ascending";
    bool ex_no_prune = false;
    exact->add_option("--n", ex_n, "Number of points")->required();
    exact->add_option("--k", ex_k, "Window capacity")->required();
    exact->add_option("--format", ex_format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    exact->add_option("--order", ex_order, "Variable elimination order")
        ->check(CLI::IsMember({"ascending", "greedy"}))
        ->capture_default_str();
    exact->add_flag("--no-prune", ex_no_prune, "Disable exact feasibility pruning");

    // --- eval ---
    auto* eval = app.add_subcommand("eval", "Evaluate a piecewise polynomial JSON at a rational eps");
    std::string ev_eps;
    std::string ev_file;
    eval->add_option("--eps", ev_eps, "Evaluation point as p/q")->required();
    eval->add_option("--file", ev_file, "Piecewise JSON file (stdin when omitted)");

    // --- closed ---
    auto* closed = app.add_subcommand("closed", "Closed-form families");
    std::string cl_family;
    int cl_n = 0, cl_m = 0;
    std::string cl_format = "pretty";
    closed->add_option("--family", cl_family, "n1 | even2 | odd2 | catalan")
        ->check(CLI::IsMember({"n1", "even2", "odd2", "catalan"}))
        ->required();
    closed->add_option("--n", cl_n, "n for the n1 family");
    closed->add_option("--m", cl_m, "m for even2/odd2/catalan");
    closed->add_option("--format", cl_format, "Output format")
        ->check(CLI::IsMember({"pretty", "json"}))
        ->capture_default_str();

    // --- derivs ---
    auto* derivs = app.add_subcommand("derivs", "Derivatives of P_{n,k} at eps -> 0+");
    int de_n = 0, de_k = 0, de_jmax = -1;
    std::string de_backend = "both";
    derivs->add_option("--n", de_n, "Number of points")->required();
    derivs->add_option("--k", de_k, "Window capacity")->required();
    derivs->add_option("--jmax", de_jmax, "Highest derivative order (default n)");
    derivs->add_option("--backend", de_backend, "engine | delta | both")
        ->check(CLI::IsMember({"engine", "delta", "both"}))
        ->capture_default_str();

    // --- mc ---
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of P_{n,k}(eps)");
    int mc_n = 0, mc_k = 0;
    std::vector<std::string> mc_eps;
    std::uint64_t mc_trials = 1'000'000;
    std::uint64_t mc_seed = 1;
    unsigned mc_threads = 0;
    bool mc_csv = false;
    bool mc_no_exact = false;
    mc->add_option("--n", mc_n, "Number of points")->required();
    mc->add_option("--k", mc_k, "Window capacity")->required();
    mc->add_option("--eps", mc_eps, "Window length(s), decimal or p/q")->required();
    mc->add_option("--trials", mc_trials, "Trials per eps")->capture_default_str();
    mc->add_option("--seed", mc_seed, "RNG seed")->capture_default_str();
    mc->add_option("--threads", mc_threads, "Worker threads (0 = auto)")->capture_default_str();
    mc->add_flag("--csv", mc_csv, "Emit a CSV sweep table");
    mc->add_flag("--no-exact", mc_no_exact, "Skip the exact reference column");

    // --- discrete ---
    auto* discrete = app.add_subcommand("discrete", "Quantized balls-in-boxes model");
    long di_r = 0, di_n = -1, di_l = 0, di_k = 0;
    std::string di_eps;
    std::vector<long> di_rlist;
    std::size_t di_enum_budget = 10'000'000;
    bool di_brute = false;
    discrete->add_option("--n", di_n, "Number of balls")->required();
    discrete->add_option("--k", di_k, "Per-window capacity")->required();
    discrete->add_option("--r", di_r, "Number of boxes (single-configuration mode)");
    discrete->add_option("--l", di_l, "Window length in boxes (single-configuration mode)");
    discrete->add_option("--eps", di_eps, "Target eps as p/q (convergence mode)");
    discrete->add_option("--r-list", di_rlist, "Box counts for the convergence table")
        ->delimiter(',');
    discrete->add_option("--enum-budget", di_enum_budget, "Brute-force enumeration budget")
        ->capture_default_str();
    discrete->add_flag("--brute", di_brute, "Also run the brute-force oracle");

    // --- catalan3d ---
    auto* cat = app.add_subcommand("catalan3d", "Three-dimensional generalized Catalan numbers");
    int ca_l = -1, ca_m = -1, ca_n = -1, ca_max = -1;
    std::string ca_format = "pretty";
    bool ca_words = false;
    cat->add_option("--l", ca_l, "Count of letter a");
    cat->add_option("--m", ca_m, "Count of letter b");
    cat->add_option("--n", ca_n, "Count of letter c");
    cat->add_option("--max", ca_max, "Emit a table over all l,m,n <= max");
    cat->add_option("--format", ca_format, "Table format")
        ->check(CLI::IsMember({"pretty", "csv", "json"}))
        ->capture_default_str();
    cat->add_flag("--words", ca_words, "List the admissible words (small sizes)");

    // --- validate ---
    auto* validate = app.add_subcommand("validate", "Run the full cross-validation matrix");
    ValidationOptions vopt;
    bool va_quiet = false;
    validate->add_option("--max-n", vopt.max_n, "Top n for the k=1 family")->capture_default_str();
    validate->add_option("--max-lmn", vopt.max_lmn, "Catalan grid bound")->capture_default_str();
    validate->add_option("--trials", vopt.trials, "Monte Carlo trials per case")
        ->capture_default_str();
    validate->add_option("--seed", vopt.seed, "Monte Carlo seed")->capture_default_str();
    validate->add_option("--threads", vopt.mc_threads, "Monte Carlo threads (0 = auto)")
        ->capture_default_str();
    validate->add_flag("--quiet", va_quiet, "Suppress per-check progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        EngineOptions eopt;
        eopt.term_budget = term_budget;

        if (exact->parsed()) {
            eopt.order = ex_order == "greedy" ? ElimOrder::greedy : ElimOrder::ascending;
            eopt.pruning = !ex_no_prune;
            print_piecewise(compute_pnk(ex_n, ex_k, eopt), ex_format);
        } else if (eval->parsed()) {
            nlohmann::json j;
            if (ev_file.empty()) {
                j = nlohmann::json::parse(std::cin);
            } else {
                std::ifstream in(ev_file);
                if (!in) throw std::invalid_argument("cannot open " + ev_file);
                j = nlohmann::json::parse(in);
            }
            const PiecewisePoly pw = PiecewisePoly::from_json(j);
            std::cout << pw.eval(Rational::parse(ev_eps)).str() << "\n";
        } else if (closed->parsed()) {
            if (cl_family == "n1") {
                if (cl_n < 2) throw std::invalid_argument("closed --family n1 needs --n >= 2");
                const PiecewisePoly pw = p_n1(cl_n);
                if (cl_format == "json") std::cout << pw.to_json().dump(2) << "\n";
                else std::cout << pw.pretty() << "\n";
            } else if (cl_family == "catalan") {
                if (cl_m < 1) throw std::invalid_argument("closed --family catalan needs --m >= 1");
                std::cout << catalan(cl_m).get_str() << "\n";
            } else {
                const RangedFormula f = cl_family == "even2" ? p_2m_2(cl_m) : p_2m1_2(cl_m);
                if (cl_format == "json") {
                    nlohmann::json j{{"lo", f.lo.str()}, {"hi", f.hi.str()}};
                    nlohmann::json coeffs = nlohmann::json::array();
                    for (const auto& c : f.poly.coeffs()) coeffs.push_back(c.str());
                    j["coeffs"] = coeffs;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << f.poly.str() << " on (" << f.lo.str() << "," << f.hi.str()
                              << ")\n";
                }
            }
        } else if (derivs->parsed()) {
            const int jmax = de_jmax < 0 ? de_n : de_jmax;
            auto print_list = [](const std::vector<Rational>& vs) {
                for (std::size_t i = 0; i < vs.size(); ++i)
                    std::cout << (i ? " " : "") << vs[i].str();
                std::cout << "\n";
            };
            if (de_backend == "engine" || de_backend == "both")
                print_list(derivatives_at_zero(de_n, de_k, jmax, DerivBackend::engine_diff, eopt));
            if (de_backend == "delta" || de_backend == "both")
                print_list(derivatives_at_zero(de_n, de_k, jmax, DerivBackend::delta, eopt));
            if (de_backend == "both") {
                const auto a = derivatives_at_zero(de_n, de_k, jmax, DerivBackend::engine_diff, eopt);
                const auto b = derivatives_at_zero(de_n, de_k, jmax, DerivBackend::delta, eopt);
                std::cout << (a == b ? "backends agree" : "BACKEND MISMATCH") << "\n";
                if (a != b) return kExitValidationFailure;
            }
        } else if (mc->parsed()) {
            if (mc_csv) std::cout << "n,k,eps,trials,p_hat,stderr,exact,z\n";
            for (const auto& eps_text : mc_eps) {
                Rational eps_rat;
                bool have_rat = true;
                try {
                    if (eps_text.find('.') != std::string::npos) {
                        // decimal literal -> exact rational
                        const auto dot = eps_text.find('.');
                        const std::string frac = eps_text.substr(dot + 1);
                        Integer den(1);
                        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
                        eps_rat = Rational(Integer(eps_text.substr(0, dot) + frac, 10), den);
                    } else {
                        eps_rat = Rational::parse(eps_text);
                    }
                } catch (...) {
                    have_rat = false;
                }
                if (!have_rat) throw std::invalid_argument("bad eps value: " + eps_text);
                TrialPlan plan{mc_n, mc_k, eps_rat.to_double(), mc_trials, mc_seed};
                const Estimate est = estimate(plan, mc_threads);
                std::string exact_s, z_s;
                if (!mc_no_exact) {
                    const Rational exact = compute_pnk(mc_n, mc_k, eopt).eval(eps_rat);
                    exact_s = exact.str();
                    const double z = est.stderr_ > 0
                                         ? (est.p_hat - exact.to_double()) / est.stderr_
                                         : 0.0;
                    z_s = decimal(z);
                }
                if (mc_csv) {
                    std::cout << mc_n << "," << mc_k << "," << eps_text << "," << est.trials
                              << "," << decimal(est.p_hat) << "," << decimal(est.stderr_) << ","
                              << exact_s << "," << z_s << "\n";
                } else {
                    std::cout << "p_hat = " << decimal(est.p_hat)
                              << "  stderr = " << decimal(est.stderr_) << "  ci95 = ["
                              << decimal(est.ci_lo) << ", " << decimal(est.ci_hi) << "]";
                    if (!exact_s.empty())
                        std::cout << "  exact = " << exact_s << "  z = " << z_s;
                    std::cout << "\n";
                }
            }
        } else if (discrete->parsed()) {
            if (!di_eps.empty()) {
                if (di_rlist.empty()) di_rlist = {50, 100, 200, 400};
                const Rational eps = Rational::parse(di_eps);
                std::cout << "r,l,ratio_decimal,ratio\n";
                for (const auto& [r, ratio] : limit_ratio(di_n, di_k, eps, di_rlist)) {
                    std::cout << r << "," << window_len_for(eps, r) << ","
                              << decimal(ratio.to_double()) << "," << ratio.str() << "\n";
                }
            } else {
                if (di_r < 1 || di_l < 1)
                    throw std::invalid_argument("discrete needs --r and --l (or --eps)");
                const DiscreteConfig cfg{di_r, di_n, di_l, di_k};
                const Integer adm = count_admissible(cfg);
                const Integer total = count_total(di_r, di_n);
                std::cout << "admissible = " << adm.get_str() << "\n";
                std::cout << "total      = " << total.get_str() << "\n";
                std::cout << "ratio      = " << Rational(adm, total).str() << "\n";
                if (di_brute)
                    std::cout << "brute      = "
                              << brute_force_admissible(cfg, di_enum_budget).get_str() << "\n";
            }
        } else if (cat->parsed()) {
            auto row_json = [](int l, int m, int n) {
                nlohmann::json j;
                j["l"] = l; j["m"] = m; j["n"] = n;
                j["total"] = total_words(l, m, n).get_str();
                const auto rc = reflection_counts(l, m, n);
                j["q1"] = rc.q1.get_str();
                j["q2"] = rc.q2.get_str();
                j["q12"] = rc.q12.get_str();
                j["paths"] = count_paths_dp(l, m, n).get_str();
                if (m + n < l + 2) j["formula"] = q3d_formula(l, m, n).get_str();
                if (m <= l && n <= l) j["general"] = q3d_general(l, m, n).get_str();
                return j;
            };
            if (ca_max >= 0) {
                if (ca_format == "json") {
                    nlohmann::json rows = nlohmann::json::array();
                    for (int l = 0; l <= ca_max; ++l)
                        for (int m = 0; m <= ca_max; ++m)
                            for (int n = 0; n <= ca_max; ++n) rows.push_back(row_json(l, m, n));
                    std::cout << rows.dump(2) << "\n";
                } else {
                    std::cout << "l,m,n,total,q1,q2,q12,paths,formula,general\n";
                    for (int l = 0; l <= ca_max; ++l)
                        for (int m = 0; m <= ca_max; ++m)
                            for (int n = 0; n <= ca_max; ++n) {
                                const auto j = row_json(l, m, n);
                                std::cout << l << "," << m << "," << n << ","
                                          << j["total"].get<std::string>() << ","
                                          << j["q1"].get<std::string>() << ","
                                          << j["q2"].get<std::string>() << ","
                                          << j["q12"].get<std::string>() << ","
                                          << j["paths"].get<std::string>() << ","
                                          << (j.contains("formula") ? j["formula"].get<std::string>() : "")
                                          << ","
                                          << (j.contains("general") ? j["general"].get<std::string>() : "")
                                          << "\n";
                            }
                }
            } else {
                if (ca_l < 0 || ca_m < 0 || ca_n < 0)
                    throw std::invalid_argument("catalan3d needs --l --m --n (or --max)");
                const auto j = row_json(ca_l, ca_m, ca_n);
                if (ca_format == "json") {
                    nlohmann::json out = j;
                    if (ca_words) {
                        std::vector<std::string> words;
                        enumerate_words(ca_l, ca_m, ca_n, &words);
                        out["words"] = words;
                    }
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "total = " << j["total"].get<std::string>() << "\n"
                              << "q1 = " << j["q1"].get<std::string>()
                              << "  q2 = " << j["q2"].get<std::string>()
                              << "  q12 = " << j["q12"].get<std::string>() << "\n"
                              << "paths = " << j["paths"].get<std::string>() << "\n";
                    if (j.contains("formula"))
                        std::cout << "formula = " << j["formula"].get<std::string>() << "\n";
                    if (j.contains("general"))
                        std::cout << "general = " << j["general"].get<std::string>() << "\n";
                    if (ca_words) {
                        std::vector<std::string> words;
                        enumerate_words(ca_l, ca_m, ca_n, &words);
                        std::cout << "words:";
                        for (const auto& w : words) std::cout << " " << w;
                        std::cout << "\n";
                    }
                }
            }
        } else if (validate->parsed()) {
            vopt.term_budget = term_budget;
            const ValidationReport report = run_acceptance(vopt, va_quiet ? nullptr : &std::cerr);
            std::cout << report.to_json().dump(2) << "\n";
            return report.all_pass() ? kExitOk : kExitValidationFailure;
        }
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailure;
    }
}
