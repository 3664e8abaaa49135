#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "ar2/grid.hpp"
#include "ar2/horadam.hpp"
#include "ar2/noise.hpp"
#include "ar2/simulation.hpp"
#include "ar2/version.hpp"
#include "commands.hpp"

namespace ar2::cli {

namespace {

// Running tally for one check category.
struct Tally {
    std::string name;
    double tolerance = 0.0;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    double max_error = 0.0;
    nlohmann::ordered_json worst = nullptr;

    // error is normalised so that a pass means error <= tolerance; NaN ranks worst.
    void record(double error, bool ok, nlohmann::ordered_json where) {
        ++cases;
        if (!ok || std::isnan(error)) ++failures;
        const double rank = std::isnan(error) ? std::numeric_limits<double>::infinity() : error;
        if (worst.is_null() || rank > max_error) {
            max_error = rank;
            worst = std::move(where);
        }
    }

    void record(double error, nlohmann::ordered_json where) { record(error, error <= tolerance, std::move(where)); }

    [[nodiscard]] bool passed() const { return failures == 0 && cases > 0; }

    [[nodiscard]] nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["check"] = name;
        j["passed"] = passed();
        j["cases"] = cases;
        j["failures"] = failures;
        j["max_error"] = max_error;
        j["tolerance"] = tolerance;
        j["worst_case"] = worst;
        return j;
    }
};

// Relative error with an absolute floor for tiny reference values.
double scaled_error(double value, double reference, double rel, double abs_floor, double small) {
    const double diff = std::fabs(value - reference);
    if (std::fabs(reference) < small) return diff / abs_floor * rel;
    return diff / std::fabs(reference);
}

nlohmann::ordered_json where(const AR2Params& p) {
    nlohmann::ordered_json j;
    j["phi1"] = p.phi1;
    j["phi2"] = p.phi2;
    return j;
}

std::vector<AR2Params> grid_with_repeated(const RunConfig& config) {
    auto points = stationary_grid(config.grid, config.params.sigma);
    for (const auto& r : repeated_root_points(config.params.sigma)) points.push_back(r);
    return points;
}

Tally method_equivalence(const RunConfig& config) {
    Tally t{"method_equivalence", config.tol.value_or(1e-9)};
    const double abs_floor = 1e-12 * (t.tolerance / 1e-9);
    constexpr std::size_t max_u = 50;
    for (const auto& p : grid_with_repeated(config)) {
        const horadam::Params hp{p.phi1, p.phi2};
        const auto rec = horadam::recursive(hp, max_u).values;
        const auto closed = horadam::closed_form_sequence(hp, max_u).values;
        const auto roots = characteristic_roots(p);
        for (std::size_t u = 0; u <= max_u; ++u) {
            const double values[3] = {closed[u], psi_partial_fractions(roots, u), psi_cauchy_product(roots, u)};
            double worst = 0.0;
            for (double v : values) worst = std::max(worst, scaled_error(v, rec[u], t.tolerance, abs_floor, 1e-6));
            auto w = where(p);
            w["u"] = u;
            w["kind"] = std::string(to_string(roots.kind));
            t.record(worst, std::move(w));
        }
    }
    return t;
}

Tally fibonacci(const RunConfig& config) {
    Tally t{"fibonacci", config.tol.value_or(1e-12)};
    // Exact leg: integer recursion against additive Fibonacci, zero error.
    constexpr std::size_t exact_n = 70;
    const auto exact = horadam::recursive_exact(1, 1, exact_n);
    exact_int f_prev = 1, f_cur = 1;  // F_1, F_2
    for (std::size_t u = 0; u <= exact_n; ++u) {
        const bool ok = exact[u] == f_prev;
        nlohmann::ordered_json w;
        w["leg"] = "exact";
        w["u"] = u;
        w["expected"] = to_string(f_prev);
        w["got"] = to_string(exact[u]);
        t.record(ok ? 0.0 : 1.0, ok, std::move(w));
        const exact_int next = f_prev + f_cur;
        f_prev = f_cur;
        f_cur = next;
    }
    // phi2 = phi1^2 leg: psi_u / phi1^u = F_{u+1}.
    constexpr double phi1 = 0.6;
    constexpr std::size_t scaled_n = 30;
    const auto psi = horadam::recursive({phi1, phi1 * phi1}, scaled_n).values;
    double fa = 1.0, fb = 1.0;
    double scale = 1.0;
    for (std::size_t u = 0; u <= scaled_n; ++u) {
        const double ratio = psi[u] / scale;
        nlohmann::ordered_json w;
        w["leg"] = "phi2=phi1^2";
        w["u"] = u;
        t.record(std::fabs(ratio - fa) / fa, std::move(w));
        const double next = fa + fb;
        fa = fb;
        fb = next;
        scale *= phi1;
    }
    return t;
}

Tally box_gap(const RunConfig& config) {
    Tally t{"box_gap", 0.0};
    {
        const AR2Params witness{1.5, 0.6, config.params.sigma};
        const bool box = box_condition(witness);
        const bool stationary = is_stationary(witness).stationary;
        const auto psi = horadam::recursive({witness.phi1, witness.phi2}, 400).values;
        double s200 = 0.0, s400 = 0.0;
        for (std::size_t u = 0; u <= 400; ++u) {
            if (u <= 200) s200 += psi[u] * psi[u];
            s400 += psi[u] * psi[u];
        }
        const bool diverges = s400 > 10.0 * s200;
        auto w = where(witness);
        w["box_condition"] = box;
        w["stationary"] = stationary;
        w["sum_sq_200"] = s200;
        w["sum_sq_400"] = s400;
        const bool ok = box && !stationary && diverges;
        t.record(ok ? 0.0 : 1.0, ok, std::move(w));
    }
    // Rejection-sample the stationarity triangle from a fixed Philox stream.
    constexpr std::uint64_t stream = 0x626f78;
    constexpr std::size_t wanted = 10000;
    std::size_t found = 0;
    for (std::uint64_t i = 0; found < wanted; i += 2) {
        const AR2Params p{4.0 * noise::uniform_at(stream, i) - 2.0, 2.0 * noise::uniform_at(stream, i + 1) - 1.0,
                          config.params.sigma};
        if (!is_stationary(p).stationary) continue;
        ++found;
        const bool ok = box_condition(p);
        t.record(ok ? 0.0 : 1.0, ok, where(p));
    }
    return t;
}

Tally acf_oracle(const RunConfig& config) {
    Tally t{"acf_oracle", config.tol.value_or(1e-8)};
    constexpr std::size_t max_lag = 10;
    for (const auto& p : stationary_grid(config.grid, config.params.sigma)) {
        const double var = p.sigma * p.sigma;
        const std::size_t order =
            std::max(truncation_order(p, 1e-12 * var), acf_required_order(p, max_lag, acf_reference_gate));
        const auto ir = impulse_response(p, order);
        const auto ma = acf_from_ma(ir, max_lag);
        const auto yw = acf_yule_walker(p, max_lag);
        for (std::size_t h = 0; h <= max_lag; ++h) {
            auto w = where(p);
            w["h"] = h;
            t.record(scaled_error(ma.gamma[h], yw.gamma[h], t.tolerance, 1e-12 * var, 1e-6 * var), std::move(w));
        }
        // gamma(0) against sigma^2 sum psi^2, allowed the truncated tail.
        long double sum_sq = 0.0L;
        for (double v : ir.psi) sum_sq += static_cast<long double>(v) * v;
        const double gap = std::fabs(yw.gamma[0] - static_cast<double>(var * sum_sq));
        const double allowed = var * coefficient_envelope(p).squared_tail(order + 1) +
                               8.0 * std::numeric_limits<double>::epsilon() * yw.gamma[0];
        auto w = where(p);
        w["h"] = "gamma0_vs_l2";
        w["gap"] = gap;
        w["allowed"] = allowed;
        t.record(gap / allowed * t.tolerance, gap <= allowed, std::move(w));
    }
    return t;
}

// Agreement is measured as |diff| / bound, so the tolerance is 1.
void agreement_case(Tally& t, const AR2Params& p, std::uint64_t seed, std::size_t n) {
    const std::size_t order = truncation_order(p, default_truncation_tol);
    const auto eps = noise::white_noise({seed, n, p.sigma});
    const auto y_rec = run_recursion(p, eps, 0);
    const auto y_ma = run_moving_average(impulse_response(p, order).psi, eps);
    double max_eps = 0.0;
    for (double e : eps) max_eps = std::max(max_eps, std::fabs(e));
    const double bound = simulator_agreement_bound(p, order, max_eps);
    double worst = 0.0;
    for (std::size_t i = order; i < n; ++i) worst = std::max(worst, std::fabs(y_rec[i] - y_ma[i - order]));
    auto w = where(p);
    w["seed"] = seed;
    w["n"] = n;
    w["truncation_order"] = order;
    w["max_abs_diff"] = worst;
    w["bound"] = bound;
    const bool ok = worst <= bound;
    t.record(bound > 0.0 ? worst / bound : (worst == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()), ok,
             std::move(w));
}

Tally simulator_agreement(const RunConfig& config) {
    Tally t{"simulator_agreement", 1.0};
    agreement_case(t, {0.5, 0.3, config.params.sigma}, 42, 10000);
    for (const auto& p : stationary_grid(config.grid, config.params.sigma)) {
        if (is_stationary(p).margin < 0.1) continue;
        agreement_case(t, p, 42, 2000);
    }
    return t;
}

Tally impulse_identity(const RunConfig& config) {
    Tally t{"impulse_identity", 0.0};
    constexpr std::size_t max_u = 50;
    std::vector<double> impulse(max_u + 1, 0.0);
    impulse[0] = 1.0;
    for (const auto& p : grid_with_repeated(config)) {
        const auto y = run_recursion(p, impulse, 0);
        const auto psi = horadam::recursive({p.phi1, p.phi2}, max_u).values;
        std::size_t mismatches = 0;
        for (std::size_t u = 0; u <= max_u; ++u) mismatches += y[u] != psi[u];
        auto w = where(p);
        w["mismatches"] = mismatches;
        t.record(static_cast<double>(mismatches), mismatches == 0, std::move(w));
    }
    return t;
}

}  // namespace

VerifyOutcome cmd_verify(const RunConfig& config) {
    validate(config.params);
    if (config.grid == 0) throw std::invalid_argument("--grid must be positive");

    const Tally tallies[] = {method_equivalence(config), fibonacci(config),          box_gap(config),
                             acf_oracle(config),         simulator_agreement(config), impulse_identity(config)};

    VerifyOutcome outcome;
    auto& report = outcome.report;
    report.meta("tool", std::string("ar2"));
    report.meta("version", std::string(ar2::version));
    report.meta("command", config.command);
    report.meta("invocation", invocation_text(config.args));
    report.meta("grid", static_cast<std::uint64_t>(config.grid));
    report.meta("sigma", format_double(config.params.sigma, 0));
    report.meta("tol_override", config.tol ? Cell{format_double(*config.tol, 0)} : Cell{});
    report.columns = {"check", "passed", "cases", "failures", "max_error", "tolerance", "worst_case"};
    for (const auto& t : tallies) {
        report.rows.push_back({t.name, t.passed(), t.cases, t.failures, t.max_error, t.tolerance, t.worst.dump()});
        if (!t.passed()) {
            outcome.passed = false;
            outcome.failures.push_back(t.json().dump());
        }
    }
    report.meta("checks", static_cast<std::uint64_t>(std::size(tallies)));
    report.meta("all_passed", outcome.passed);
    return outcome;
}

}  // namespace ar2::cli
