#include "rsg/cli/commands.hpp"

#include "rsg/cli/fixtures.hpp"
#include "rsg/coeffs/coeffs.hpp"
#include "rsg/mordell/mordell.hpp"
#include "rsg/numkernel/expr.hpp"
#include "rsg/numkernel/gamma.hpp"
#include "rsg/numkernel/regression.hpp"
#include "rsg/rsformula/decay.hpp"
#include "rsg/rsformula/rsformula.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <regex>
#include <thread>

namespace rsg::cli {

using W = WideReal;
using C = WideComplex;

void RunConfig::validate() const {
    PrecisionConfig{digits, fast_mode}.validate();
    if (parallelism < 1)
        throw DomainError("--jobs must be at least 1");
    if (output_format != "text" && output_format != "csv" && output_format != "json")
        throw DomainError("--format must be csv, json or text");
}

Json RunConfig::to_json() const {
    Json j;
    j["digits"] = digits;
    j["fast"] = fast_mode;
    j["format"] = output_format;
    if (output_path)
        j["out"] = *output_path;
    j["jobs"] = parallelism;
    return j;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min(jobs, count); ++j)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

int exit_status(const Report& r) { return r.failed() > 0 ? 1 : 0; }

namespace {

PrecisionConfig precision(const RunConfig& cfg) {
    PrecisionConfig p;
    p.digits = cfg.digits;
    p.fast_mode = cfg.fast_mode;
    return p;
}

int shown_digits(const RunConfig& cfg) { return cfg.fast_mode ? std::min(cfg.digits, 15) : cfg.digits; }

Report start(const std::string& command, const RunConfig& cfg) {
    Report r;
    r.command = command;
    r.config = cfg.to_json();
    return r;
}

std::string marked_complex(const std::string& re, const std::string& im) {
    if (!im.empty() && im[0] == '-')
        return re + " - " + im.substr(1) + "i";
    return re + " + " + im + "i";
}

void score(ReportRow& row, const W& re, const std::string& re_marked, const std::optional<W>& im,
           const std::string& im_marked) {
    PrintedValue pr = parse_printed(re_marked);
    bool pass = within_black(re, pr);
    int digits = digits_matched(re, pr);
    if (im) {
        PrintedValue pi = parse_printed(im_marked);
        pass = pass && within_black(*im, pi);
        digits = std::min(digits, digits_matched(*im, pi));
        row.expected = marked_complex(re_marked, im_marked);
    } else {
        row.expected = re_marked;
    }
    row.pass = pass;
    row.digits_matched = digits;
}

EvalPoint<W> make_point(const C& s, const std::optional<std::string>& alpha, const std::optional<std::string>& beta,
                        const std::optional<std::string>& lambda) {
    if (lambda && (alpha || beta))
        throw DomainError("give either lambda or alpha/beta, not both");
    if (lambda)
        return EvalPoint<W>::from_lambda(s, evaluate_real_expression<W>(*lambda));
    if (alpha && beta)
        return EvalPoint<W>::from_alpha_beta(s, evaluate_real_expression<W>(*alpha), evaluate_real_expression<W>(*beta));
    if (alpha)
        return EvalPoint<W>::from_alpha(s, evaluate_real_expression<W>(*alpha));
    if (beta) {
        W b = evaluate_real_expression<W>(*beta);
        return EvalPoint<W>::from_alpha_beta(s, s.im / (2 * pi_of<W>() * b), b);
    }
    return EvalPoint<W>::from_lambda(s, W(1));
}

} // namespace

Report cmd_table(int id, const RunConfig& cfg) {
    cfg.validate();
    const TableFixture& fx = table_fixture(id);
    PrecisionScope scope(precision(cfg));
    Report r = start("table", cfg);
    const int shown = shown_digits(cfg);

    const int count = static_cast<int>(fx.rows.size()) + 1;
    std::vector<ReportRow> rows(count);
    const C s = evaluate_expression<W>(fx.s);
    parallel_for(count, cfg.parallelism, [&](int i) {
        const bool exact = i == count - 1;
        const FixtureRow& fr = exact ? fx.exact : fx.rows[i];
        ReportRow& row = rows[i];
        row.inputs = {{"table", std::to_string(id)}, {"N", exact ? "exact" : std::to_string(fr.n_terms)}};
        if (id == 1) {
            W t = s.im;
            W z = exact ? hardy_z_exact(t) : hardy_z(t, fr.n_terms);
            row.computed = format_significant(z, shown);
            score(row, z, fr.re, std::nullopt, "");
            return;
        }
        auto pt = EvalPoint<W>::from_alpha_beta(s, evaluate_real_expression<W>(fx.alpha),
                                                evaluate_real_expression<W>(fx.beta));
        C v = exact ? remainder_exact(pt) : rs_general(pt, fr.n_terms).value();
        row.computed = format_complex(v, shown);
        score(row, v.re, fr.re, v.im, fr.im);
    });
    r.rows = std::move(rows);
    return r;
}

Report cmd_eval(const EvalArgs& args, const RunConfig& cfg, const Notify& notify) {
    cfg.validate();
    if (args.n_terms < 0)
        throw DomainError("N must be nonnegative");
    PrecisionScope scope(precision(cfg));
    Report r = start("eval", cfg);
    const int shown = shown_digits(cfg);
    C s = evaluate_expression<W>(args.s);
    EvalPoint<W> pt = make_point(s, args.alpha, args.beta, args.lambda);

    ReportRow row;
    row.inputs = {{"s", format_complex(pt.s, shown)},
                  {"alpha", format_significant(pt.alpha, shown)},
                  {"beta", format_significant(pt.beta, shown)},
                  {"N", std::to_string(args.n_terms)},
                  {"mode", args.mode}};
    if (args.mode == "exact") {
        row.computed = format_complex(remainder_exact(pt), shown);
    } else if (args.mode == "general") {
        auto g = rs_general(pt, args.n_terms);
        if (g.regime_warning && notify)
            notify("warning: lambda or 1/lambda is at least t^(1/6); the expansion may not be asymptotic here");
        row.computed = format_complex(g.value(), shown);
        for (int n = 0; n < args.n_terms; ++n)
            row.terms.push_back(format_complex(g.value(n + 1) - g.value(n), shown));
    } else if (args.mode == "intermediate") {
        auto im = rs_intermediate(pt, args.n_terms);
        row.computed = format_complex(im.remainder, shown);
        C theta_phase = exp(C::i() * theta_exact(pt.s));
        for (int k = 0; k < args.n_terms; ++k)
            row.terms.push_back(format_complex(theta_phase * im.scale * im.a[k] * im.c[k], shown));
    } else {
        throw DomainError("mode must be general, intermediate or exact");
    }
    r.rows.push_back(std::move(row));
    return r;
}

Report cmd_coeffs(const CoeffsArgs& args, const RunConfig& cfg) {
    cfg.validate();
    if (args.n < 0)
        throw DomainError("n must be nonnegative");
    if (args.n > args.cap)
        throw DomainError("n = " + std::to_string(args.n) + " exceeds the cap " + std::to_string(args.cap));
    int lo = args.k_min.value_or(0), hi = args.k_max.value_or(3 * args.n);
    if (lo < 0 || hi > 3 * args.n || lo > hi)
        throw DomainError("k range must lie in [0, 3n]");
    std::optional<BigRational> sigma;
    if (args.sigma) {
        static const std::regex rational(R"(\s*-?\d+(\s*/\s*\d+)?\s*)");
        if (!std::regex_match(*args.sigma, rational))
            throw DomainError("sigma must be an exact rational such as 1/2");
        std::string compact;
        for (char c : *args.sigma)
            if (!std::isspace(static_cast<unsigned char>(c)))
                compact += c;
        sigma = BigRational(compact);
    }
    Report r = start("coeffs", cfg);
    const bool text = cfg.output_format == "text";
    std::vector<ReportRow> rows(hi - lo + 1);
    parallel_for(hi - lo + 1, cfg.parallelism, [&](int i) {
        int k = lo + i;
        ReportRow& row = rows[i];
        row.inputs = {{"n", std::to_string(args.n)}, {"k", std::to_string(k)}};
        const BiPoly& p = p_poly(args.n, k);
        if (sigma) {
            row.inputs.emplace_back("sigma", sigma->str());
            GaussPoly q = p.at_sigma(*sigma);
            row.computed = text ? pretty(q, "x") : serialize(BiPoly::from_x(q));
        } else {
            row.computed = text ? pretty(p) : serialize(p);
        }
    });
    r.rows = std::move(rows);
    return r;
}

Report cmd_mordell(const MordellArgs& args, const RunConfig& cfg, const Notify& notify) {
    cfg.validate();
    if (args.k < 0)
        throw DomainError("k must be nonnegative");
    PrecisionScope scope(precision(cfg));
    Report r = start("mordell", cfg);
    const int shown = shown_digits(cfg);
    C u = evaluate_expression<W>(args.u);
    C tau = evaluate_expression<W>(args.tau);
    if (!(tau.re > 0))
        throw DomainError("tau must have positive real part");

    Fields base = {{"u", format_complex(u, shown)}, {"tau", format_complex(tau, shown)}, {"k", std::to_string(args.k)}};
    C quad = g_value(u, tau, args.k);
    ReportRow q;
    q.inputs = base;
    q.inputs.emplace_back("method", "quadrature");
    q.computed = format_complex(quad, shown);
    r.rows.push_back(q);

    std::smatch m;
    static const std::regex rational(R"(\s*(\d+)\s*/\s*(\d+)\s*)");
    if (std::regex_match(args.tau, m, rational)) {
        long long num = std::stoll(m[1]), den = std::stoll(m[2]);
        auto closed = g_rational(u, num, den, args.k);
        if (!closed.closed_form && notify)
            notify("notice: u is near a pole of the closed form; the closed-form row uses quadrature");
        ReportRow c;
        c.inputs = base;
        c.inputs.emplace_back("method", closed.closed_form ? "closed_form" : "closed_form_fallback");
        c.computed = format_complex(closed.derivatives[args.k], shown);
        r.rows.push_back(c);
        ReportRow d;
        d.inputs = base;
        d.inputs.emplace_back("method", "difference");
        d.computed = format_significant(abs(closed.derivatives[args.k] - quad), 6);
        r.rows.push_back(d);
    }
    return r;
}

Report cmd_decay(const DecayArgs& args, const RunConfig& cfg) {
    cfg.validate();
    PrecisionScope scope(precision(cfg));
    Report r = start("decay", cfg);
    r.value_label = "error";
    const int shown = shown_digits(cfg);
    const W frac = evaluate_real_expression<W>(args.frac_beta);
    if (!(frac >= 0 && frac < 1))
        throw DomainError("--frac-beta must lie in [0, 1)");

    if (args.s) {
        if (args.study != "order")
            throw DomainError("a fixed point is only used by the order study");
        auto pt = make_point(evaluate_expression<W>(*args.s), args.alpha, args.beta, args.lambda);
        std::vector<int> orders = args.orders.empty() ? std::vector<int>{1, 3, 5} : args.orders;
        int top = *std::max_element(orders.begin(), orders.end());
        auto g = rs_general(pt, top);
        C exact = remainder_exact(pt);
        std::vector<double> ns, logs;
        W previous = -1;
        for (int n : orders) {
            if (n < 0)
                throw DomainError("orders must be nonnegative");
            W err = abs(g.value(n) - exact);
            ReportRow row;
            row.inputs = {{"N", std::to_string(n)}};
            row.computed = format_significant(err, std::min(shown, 10));
            row.pass = previous < 0 || err < previous;
            previous = err;
            r.rows.push_back(row);
            ns.push_back(n);
            logs.push_back(std::log10(to_double(err)));
        }
        if (ns.size() >= 2)
            r.slope = format_significant(fit_line(ns, logs).slope, 6);
        return r;
    }

    std::vector<double> grid = args.t_values;
    DecayStudy d;
    if (args.study == "afe") {
        if (grid.empty())
            grid = log_grid(args.t_min, args.t_max, args.points);
        W lambda = args.lambda ? evaluate_real_expression<W>(*args.lambda) : W(1);
        d = afe_decay(lambda, grid, frac);
    } else if (args.study == "order") {
        if (grid.empty())
            grid = {600, 1200, 2400, 4800};
        W lambda = args.lambda ? evaluate_real_expression<W>(*args.lambda) : sqrt(W(3));
        W sigma = args.sigma ? evaluate_real_expression<W>(*args.sigma) : W(0.5);
        d = order_decay(sigma, lambda, args.n_terms.value_or(1), grid, frac, QuadratureSpec<W>{});
    } else if (args.study == "theta") {
        if (grid.empty())
            grid = log_grid(args.t_min, args.t_max, 5);
        W sigma = args.sigma ? evaluate_real_expression<W>(*args.sigma) : W(3);
        d = theta_decay(sigma, args.n_terms.value_or(2), grid);
    } else {
        throw DomainError("study must be afe, order or theta");
    }
    for (std::size_t i = 0; i < d.t.size(); ++i) {
        ReportRow row;
        row.inputs = {{"t", format_significant(d.t[i], 15)}};
        row.computed = format_significant(d.error[i], std::min(shown, 10));
        r.rows.push_back(row);
    }
    r.slope = format_significant(d.slope, 6);
    return r;
}

} // namespace rsg::cli
