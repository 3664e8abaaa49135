#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ar2/error.hpp"
#include "ar2/horadam.hpp"
#include "ar2/noise.hpp"
#include "ar2/simulation.hpp"
#include "ar2/version.hpp"

namespace ar2::cli {

namespace {

std::string shell_quote(const std::string& arg) {
    if (!arg.empty() && arg.find_first_not_of(
                            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_=+.,/:@%") ==
                            std::string::npos) {
        return arg;
    }
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'') quoted += "'\\''";
        else quoted += c;
    }
    return quoted + "'";
}

}  // namespace

std::string invocation_text(const std::vector<std::string>& args) {
    std::string text = "ar2";
    for (const auto& a : args) text += " " + shell_quote(a);
    return text;
}

namespace {

std::string exact_text(double v) { return format_double(v, 0); }

// Header block shared by every command: enough to rerun the invocation.
void write_header(const RunConfig& config, Report& report) {
    report.meta("tool", std::string("ar2"));
    report.meta("version", std::string(ar2::version));
    report.meta("command", config.command);
    report.meta("invocation", invocation_text(config.args));
    report.meta("phi1", exact_text(config.params.phi1));
    report.meta("phi2", exact_text(config.params.phi2));
    report.meta("sigma", exact_text(config.params.sigma));
}

double relative_diff(double a, double b) {
    const double mag = std::max(std::fabs(a), std::fabs(b));
    if (mag == 0.0) return 0.0;
    return std::fabs(a - b) / mag;
}

void require_stationary(const AR2Params& p, const std::string& command) {
    const auto st = is_stationary(p);
    if (!st.stationary) {
        throw DomainError(command + " requires a stationary model; max root modulus is " +
                          format_double(1.0 - st.margin, 17) + " >= 1");
    }
}

}  // namespace

Report cmd_coeffs(const RunConfig& config) {
    const auto& p = config.params;
    validate(p);
    const horadam::Params hp{p.phi1, p.phi2};
    if (config.exact && !horadam::has_exact_representation(hp)) {
        throw std::invalid_argument("--exact requires integer phi1 and phi2");
    }
    Report report;
    write_header(config, report);
    report.meta("order", static_cast<std::uint64_t>(config.order));
    report.meta("exact", config.exact);

    const std::size_t n = config.order;
    const auto rec = horadam::recursive(hp, n).values;
    const auto closed = horadam::closed_form_sequence(hp, n).values;
    const auto roots = characteristic_roots(p);
    std::vector<exact_int> exact;
    if (config.exact) {
        exact = horadam::recursive_exact(static_cast<std::int64_t>(p.phi1), static_cast<std::int64_t>(p.phi2), n);
    }

    report.columns = {"u", "psi_recursion", "psi_closed_form", "psi_partial_fractions", "psi_cauchy",
                      "max_pairwise_relative_diff"};
    if (config.exact) report.columns.emplace_back("psi_exact");
    for (std::size_t u = 0; u <= n; ++u) {
        const double values[4] = {rec[u], closed[u], psi_partial_fractions(roots, u), psi_cauchy_product(roots, u)};
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) worst = std::max(worst, relative_diff(values[i], values[j]));
        std::vector<Cell> row = {static_cast<std::uint64_t>(u), values[0], values[1], values[2], values[3], worst};
        if (config.exact) row.emplace_back(to_string(exact[u]));
        report.rows.push_back(std::move(row));
    }
    return report;
}

Report cmd_check(const RunConfig& config) {
    const auto& p = config.params;
    validate(p);
    const auto roots = characteristic_roots(p);
    const auto st = is_stationary(p);
    const bool box = box_condition(p);

    Report report;
    write_header(config, report);
    if (box && !st.stationary) {
        report.warnings.push_back("box condition |phi1| < 2, |phi2| < 1 holds but the model is not stationary "
                                  "(max root modulus " + format_double(roots.max_modulus(), 17) + ")");
    }
    report.columns = {"c1_re", "c1_im", "c2_re", "c2_im", "kind", "max_modulus", "stationary", "margin",
                      "box_condition"};
    report.rows.push_back({roots.c1.real(), roots.c1.imag(), roots.c2.real(), roots.c2.imag(),
                           std::string(to_string(roots.kind)), roots.max_modulus(), st.stationary, st.margin, box});
    return report;
}

Report cmd_acf(const RunConfig& config) {
    const auto& p = config.params;
    validate(p);
    require_stationary(p, "acf");
    const double tol = config.tol.value_or(default_truncation_tol);
    const std::size_t order = std::max(truncation_order(p, tol), acf_required_order(p, config.max_lag, acf_reference_gate));
    const auto ir = impulse_response(p, order, config.method);
    const auto ma = acf_from_ma(ir, config.max_lag);
    const auto yw = acf_yule_walker(p, config.max_lag);

    Report report;
    write_header(config, report);
    report.meta("max_lag", static_cast<std::uint64_t>(config.max_lag));
    report.meta("method", std::string(to_string(config.method)));
    report.meta("tol", exact_text(tol));
    report.meta("truncation_order", static_cast<std::uint64_t>(order));
    report.meta("tail_bound", ir.tail_bound);
    report.columns = {"h", "gamma_ma_sum", "gamma_yule_walker", "relative_diff"};
    for (std::size_t h = 0; h <= config.max_lag; ++h) {
        report.rows.push_back({static_cast<std::uint64_t>(h), ma.gamma[h], yw.gamma[h],
                               relative_diff(ma.gamma[h], yw.gamma[h])});
    }
    return report;
}

Report cmd_simulate(const RunConfig& config) {
    const auto& p = config.params;
    validate(p);
    if (config.length == 0) throw std::invalid_argument("--n must be positive");
    const bool stationary = is_stationary(p).stationary;
    const bool want_ma = config.generator != GeneratorMode::Recursive;
    const bool want_rec = config.generator != GeneratorMode::Ma;
    if (want_ma) require_stationary(p, "simulate with the truncated MA generator");

    const double tol = config.tol.value_or(default_truncation_tol);
    const std::size_t order = stationary ? truncation_order(p, tol) : 0;
    const std::size_t burn_in = config.burn_in.value_or(config.impulse || !stationary ? 0 : order);
    if (burn_in >= config.length) throw std::invalid_argument("--burn-in must be less than --n");

    std::vector<double> eps;
    if (config.impulse) {
        eps.assign(config.length, 0.0);
        eps[0] = 1.0;
    } else {
        eps = noise::white_noise({config.seed, config.length, p.sigma});
    }

    Report report;
    write_header(config, report);
    report.meta("n", static_cast<std::uint64_t>(config.length));
    report.meta("seed", config.seed);
    report.meta("impulse", config.impulse);
    report.meta("noise_algorithm", std::string(noise::algorithm_id));
    report.meta("burn_in", static_cast<std::uint64_t>(burn_in));
    report.meta("generator", std::string(config.generator == GeneratorMode::Both        ? "both"
                                         : config.generator == GeneratorMode::Recursive ? "recursive"
                                                                                         : "ma"));
    if (!stationary) {
        report.warnings.push_back("model is not stationary; the recursive series is not a stationary process");
    }

    std::vector<double> y_rec;
    if (want_rec) y_rec = run_recursion(p, eps, 0);
    std::vector<double> y_ma;
    if (want_ma) {
        const auto ir = impulse_response(p, order, config.method);
        if (order >= eps.size()) {
            throw DomainError("truncation order " + std::to_string(order) + " needs more than --n " +
                              std::to_string(eps.size()) + " draws");
        }
        y_ma = run_moving_average(ir.psi, eps);
        double max_eps = 0.0;
        for (double e : eps) max_eps = std::max(max_eps, std::fabs(e));
        report.meta("method", std::string(to_string(config.method)));
        report.meta("tol", exact_text(tol));
        report.meta("truncation_order", static_cast<std::uint64_t>(order));
        report.meta("tail_bound", ir.tail_bound);
        report.meta("agreement_bound", simulator_agreement_bound(p, order, max_eps));
    }

    report.columns = {"t", "epsilon"};
    if (want_rec) report.columns.emplace_back("y_recursive");
    if (want_ma) report.columns.emplace_back("y_ma");
    if (want_rec && want_ma) report.columns.emplace_back("abs_diff");

    const std::size_t first = want_rec ? burn_in : std::max(burn_in, order);
    for (std::size_t t = first; t < eps.size(); ++t) {
        std::vector<Cell> row = {static_cast<std::uint64_t>(t), eps[t]};
        if (want_rec) row.emplace_back(y_rec[t]);
        if (want_ma) {
            if (t >= order) row.emplace_back(y_ma[t - order]);
            else row.emplace_back(std::monostate{});
        }
        if (want_rec && want_ma) {
            if (t >= order) row.emplace_back(std::fabs(y_rec[t] - y_ma[t - order]));
            else row.emplace_back(std::monostate{});
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

void add_common(CLI::App* sub, RunConfig& c, std::string& format) {
    sub->add_option("--phi1", c.params.phi1, "first AR coefficient");
    sub->add_option("--phi2", c.params.phi2, "second AR coefficient");
    sub->add_option("--sigma", c.params.sigma, "innovation standard deviation")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out_path, "output file (default stdout)");
    sub->add_option("--precision", c.precision, "significant digits for CSV numbers")->check(CLI::Range(1, 17));
}

const std::map<std::string, CoefficientMethod> method_names = {
    {"recursion", CoefficientMethod::Recursion},
    {"closed", CoefficientMethod::ClosedForm},
    {"pf", CoefficientMethod::PartialFractions},
    {"cauchy", CoefficientMethod::CauchyProduct},
};

const std::map<std::string, GeneratorMode> generator_names = {
    {"both", GeneratorMode::Both},
    {"recursive", GeneratorMode::Recursive},
    {"ma", GeneratorMode::Ma},
};

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json e;
    e["error"] = kind;
    e["message"] = message;
    err << e.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    config.args = args;
    std::string format = "csv";
    std::string method_name = "recursion";
    std::string generator_name = "both";

    CLI::App app{"AR(2) linear-process coefficients, autocovariances and simulation", "ar2"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ar2::version));

    auto* coeffs = app.add_subcommand("coeffs", "MA(inf) coefficients by four methods");
    add_common(coeffs, config, format);
    coeffs->add_option("--order", config.order, "largest index u");
    coeffs->add_flag("--exact", config.exact, "add an exact integer column (integer phi only)");

    auto* check = app.add_subcommand("check", "roots, stationarity and the box condition");
    add_common(check, config, format);

    auto* acf = app.add_subcommand("acf", "autocovariances from the MA sum and Yule-Walker");
    add_common(acf, config, format);
    acf->add_option("--maxlag", config.max_lag, "largest lag h");
    acf->add_option("--method", method_name, "coefficient method")->check(CLI::IsMember(method_names));
    acf->add_option("--tol", config.tol, "truncation tolerance on the MA tail")->check(CLI::PositiveNumber);

    auto* simulate = app.add_subcommand("simulate", "simulate by recursion and by the truncated MA");
    add_common(simulate, config, format);
    simulate->add_option("--n", config.length, "number of noise draws")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", config.seed, "noise seed");
    simulate->add_option("--burn-in", config.burn_in, "discarded leading values");
    simulate->add_option("--method", method_name, "coefficient method")->check(CLI::IsMember(method_names));
    simulate->add_option("--tol", config.tol, "truncation tolerance on the MA tail")->check(CLI::PositiveNumber);
    simulate->add_flag("--impulse", config.impulse, "use a unit impulse instead of random noise");
    simulate->add_option("--generator", generator_name, "which simulators to run")
        ->check(CLI::IsMember(generator_names));

    auto* verify = app.add_subcommand("verify", "cross-method and statistical verification suite");
    add_common(verify, config, format);
    verify->add_option("--grid", config.grid, "grid resolution per axis")->check(CLI::Range(1, 101));
    verify->add_option("--tol", config.tol, "override the relative tolerance of every check")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    config.command = app.get_subcommands().front()->get_name();
    const bool format_given = app.get_subcommands().front()->count("--format") > 0;
    config.method = method_names.at(method_name);
    config.generator = generator_names.at(generator_name);
    config.format = format == "json" ? Format::Json : Format::Csv;
    if (config.command == "verify" && !format_given) config.format = Format::Json;

    try {
        Report report;
        int code = exit_success;
        if (config.command == "coeffs") {
            report = cmd_coeffs(config);
        } else if (config.command == "check") {
            report = cmd_check(config);
        } else if (config.command == "acf") {
            report = cmd_acf(config);
        } else if (config.command == "simulate") {
            report = cmd_simulate(config);
        } else {
            auto outcome = cmd_verify(config);
            report = std::move(outcome.report);
            if (!outcome.passed) {
                code = exit_verification_failed;
                for (const auto& f : outcome.failures) err << f << '\n';
            }
        }
        for (const auto& w : report.warnings) err << "WARNING: " << w << '\n';

        if (config.out_path) {
            std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
            if (!file) {
                emit_error(err, "io", "cannot open " + *config.out_path + " for writing");
                return exit_usage;
            }
            write_report(file, report, config.format, config.precision);
        } else {
            write_report(out, report, config.format, config.precision);
        }
        return code;
    } catch (const std::invalid_argument& e) {
        emit_error(err, "invalid_argument", e.what());
        return exit_usage;
    } catch (const OverflowError& e) {
        emit_error(err, "overflow", e.what());
        return exit_domain;
    } catch (const DomainError& e) {
        emit_error(err, "domain", e.what());
        return exit_domain;
    } catch (const std::exception& e) {
        emit_error(err, "internal", e.what());
        return exit_verification_failed;
    }
}

}  // namespace ar2::cli
