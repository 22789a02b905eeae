#include "rsg/cli/commands.hpp"
#include "rsg/numkernel/precision.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace rsg;
using namespace rsg::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--digits", cfg.digits, "Significant digits (15-400)")->capture_default_str();
    sub->add_flag("--fast", cfg.fast_mode, "Double-like working precision");
    sub->add_option("--format", cfg.output_format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.output_path, "Write the report to this file");
    sub->add_option("--jobs", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

int emit(const Report& report, const RunConfig& cfg) {
    std::string text = render(report, cfg.output_format);
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary);
        if (!out || !(out << text)) {
            std::cerr << "error: cannot write " << *cfg.output_path << "\n";
            return 2;
        }
    } else {
        std::cout << text;
    }
    return exit_status(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-Siegel expansions with partial sums of different lengths"};
    app.require_subcommand(1);

    RunConfig cfg;

    int table_id = 0;
    auto* table = app.add_subcommand("table", "Reproduce a reference table and check it");
    table->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, 7));
    add_common(table, cfg);

    EvalArgs eval;
    auto* ev = app.add_subcommand("eval", "Evaluate R(s; alpha, beta) or an expansion of it");
    ev->add_option("--s", eval.s, "s, e.g. 1/2+600i")->required();
    ev->add_option("--alpha", eval.alpha, "Length of the first partial sum");
    ev->add_option("--beta", eval.beta, "Length of the second partial sum");
    ev->add_option("--lambda", eval.lambda, "sqrt(alpha/beta)");
    ev->add_option("--N", eval.n_terms, "Number of terms")->capture_default_str();
    ev->add_option("--mode", eval.mode, "Evaluator")
        ->check(CLI::IsMember({"general", "intermediate", "exact"}))
        ->capture_default_str();
    add_common(ev, cfg);

    CoeffsArgs coeffs;
    auto* co = app.add_subcommand("coeffs", "Dump the polynomials P_{n,k}(x, sigma)");
    co->add_option("n", coeffs.n, "Order n")->required();
    co->add_option("--k-min", coeffs.k_min, "Smallest k (default 0)");
    co->add_option("--k-max", coeffs.k_max, "Largest k (default 3n)");
    co->add_option("--sigma", coeffs.sigma, "Specialize sigma to an exact rational");
    co->add_option("--cap", coeffs.cap, "Largest n allowed")->capture_default_str();
    add_common(co, cfg);

    MordellArgs mordell;
    auto* mo = app.add_subcommand("mordell", "Evaluate G^(k)(u; tau)");
    mo->add_option("--u", mordell.u, "u")->required();
    mo->add_option("--tau", mordell.tau, "tau; m/n with integers also uses the closed form")->required();
    mo->add_option("--k", mordell.k, "Derivative order")->capture_default_str();
    add_common(mo, cfg);

    DecayArgs decay;
    auto* de = app.add_subcommand("decay", "Error decay studies with a fitted log-log slope");
    de->add_option("study", decay.study, "afe, order or theta")
        ->check(CLI::IsMember({"afe", "order", "theta"}))
        ->capture_default_str();
    de->add_option("--lambda", decay.lambda, "sqrt(alpha/beta)");
    de->add_option("--sigma", decay.sigma, "Real part of s");
    de->add_option("--N", decay.n_terms, "Number of terms");
    de->add_option("--t", decay.t_values, "Explicit t values")->delimiter(',');
    de->add_option("--t-min", decay.t_min, "Smallest t of the log grid")->capture_default_str();
    de->add_option("--t-max", decay.t_max, "Largest t of the log grid")->capture_default_str();
    de->add_option("--points", decay.points, "Points in the log grid")->capture_default_str();
    de->add_option("--frac-beta", decay.frac_beta, "Fractional part of beta along the grid")->capture_default_str();
    de->add_option("--s", decay.s, "Fixed point for an order sweep");
    de->add_option("--alpha", decay.alpha, "alpha at the fixed point");
    de->add_option("--beta", decay.beta, "beta at the fixed point");
    de->add_option("--orders", decay.orders, "Orders N for the sweep")->delimiter(',');
    add_common(de, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto notify = [](const std::string& msg) { std::cerr << msg << "\n"; };
    try {
        if (table->parsed())
            return emit(cmd_table(table_id, cfg), cfg);
        if (ev->parsed())
            return emit(cmd_eval(eval, cfg, notify), cfg);
        if (co->parsed())
            return emit(cmd_coeffs(coeffs, cfg), cfg);
        if (mo->parsed())
            return emit(cmd_mordell(mordell, cfg, notify), cfg);
        if (de->parsed())
            return emit(cmd_decay(decay, cfg), cfg);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
