#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltoid/acceptance.hpp"
#include "deltoid/cdcheck.hpp"
#include "deltoid/eigen_poly.hpp"
#include "deltoid/spectral.hpp"
#include "deltoid/su3.hpp"

#ifndef DELTOID_VERSION
#define DELTOID_VERSION "0.0.0"
#endif

using json = nlohmann::ordered_json;
using namespace deltoid;

namespace {

constexpr int schema_version = 1;

struct RunConfig {
    std::string lambda = "4";
    std::uint64_t seed = 1;
    std::string output;
    std::string format = "json";
    json echo = json::object();
};

struct Outcome {
    json report;
    bool ok = true;
    // header row then data rows
    std::vector<std::vector<std::string>> csv;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

json cplx(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json fit_json(const FitReport& f) {
    json data = json::array();
    for (const auto& [x, y] : f.data) data.push_back(json::array({x, y}));
    return {{"window", json::array({f.window_min, f.window_max})},
            {"slope", f.slope},
            {"intercept", f.intercept},
            {"residual", f.residual},
            {"target", f.target},
            {"constant", f.constant},
            {"max_tail_ratio", f.max_tail_ratio},
            {"data", data}};
}

std::vector<std::vector<std::string>> fit_csv(const FitReport& f, const std::string& x, const std::string& y) {
    std::vector<std::vector<std::string>> rows{{x, y}};
    for (const auto& [a, b] : f.data) rows.push_back({num(a), num(b)});
    return rows;
}

Lambda parse_lambda(const std::string& s) { return Lambda(parse_rat(s)); }

// "num/den", an integer or a decimal
double real_arg(const std::string& s) {
    try {
        return to_double(parse_rat(s));
    } catch (const std::invalid_argument&) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw;
        return v;
    }
}

Outcome eigen_cmd(const RunConfig& cfg, const std::vector<int>& pq) {
    if (pq.size() != 2 || pq[0] < 0 || pq[1] < 0) throw CLI::ValidationError("--pq", "expects p,q >= 0");
    const auto e = solve_eigenpoly(pq[0], pq[1], parse_lambda(cfg.lambda));
    json coeffs = json::array();
    for (const auto& [m, c] : e.poly.terms())
        coeffs.push_back({{"monomial", json::array({m.i, m.j})}, {"coefficient", to_string(c)}});
    Outcome o;
    o.report = {{"p", e.p},     {"q", e.q},           {"mu", to_string(e.mu)},
                {"norm2", to_string(e.norm2)}, {"poly", to_string(e.poly)}, {"coefficients", coeffs}};
    o.csv = {{"i", "j", "coefficient"}};
    for (const auto& [m, c] : e.poly.terms()) o.csv.push_back({std::to_string(m.i), std::to_string(m.j), to_string(c)});
    return o;
}

Outcome moments_cmd(const RunConfig& cfg, int max_degree) {
    const auto m = moments(parse_lambda(cfg.lambda), max_degree);
    Outcome o;
    json rows = json::array();
    o.csv = {{"i", "j", "moment"}};
    for (int d = 0; d <= max_degree; ++d)
        for (int j = 0; j <= d; ++j) {
            const auto v = to_string(m(d - j, j));
            rows.push_back({{"i", d - j}, {"j", j}, {"value", v}});
            o.csv.push_back({std::to_string(d - j), std::to_string(j), v});
        }
    o.report = {{"moments", rows}};
    return o;
}

Outcome cd_verify(const std::string& a1, const std::string& b1, std::size_t grid) {
    const auto r = psd_check(tensor_residual(parse_rat(a1), parse_rat(b1)), mapped_grid(grid));
    Outcome o;
    o.ok = r.pass;
    o.report = {{"points", r.points.size()},
                {"tolerance", r.tolerance},
                {"min_r12", r.min_r12},
                {"min_det", r.min_det},
                {"failures", r.failures},
                {"worst_z", cplx(r.worst_z)},
                {"worst_cusp_distance", r.worst_cusp_distance},
                {"nearest_cusp_failure", r.failures ? json(r.nearest_cusp_failure) : json(nullptr)},
                {"pass", r.pass}};
    o.csv = {{"re_z", "im_z", "r12", "det", "pass"}};
    for (const auto& p : r.points)
        o.csv.push_back({num(p.z.real()), num(p.z.imag()), num(p.r12), num(p.det), p.pass ? "1" : "0"});
    return o;
}

Outcome cd_scan(double a, int grid, bool refine, int levels) {
    const auto r = scan_inf_b(a, grid, refine, levels);
    json trace = json::array();
    Outcome o;
    o.csv = {{"level", "scale", "level_min", "running_inf"}};
    for (const auto& t : r.trace) {
        trace.push_back({{"level", t.level}, {"scale", t.scale}, {"level_min", t.level_min}, {"running_inf", t.running_inf}});
        o.csv.push_back({std::to_string(t.level), num(t.scale), num(t.level_min), num(t.running_inf)});
    }
    o.report = {{"evaluated", r.evaluated},
                {"skipped", r.skipped},
                {"inf_estimate", r.inf_estimate},
                {"argmin_angles", json::array({r.argmin_theta, r.argmin_phi})},
                {"argmin_triangle", json::array({r.argmin.x, r.argmin.y})},
                {"trace", trace}};
    return o;
}

Outcome cd_probe(double a, const std::string& curve, double c) {
    const auto r = divergence_probe(a, curve == "linear" ? Curve::linear : Curve::quadratic, c, default_probe_thetas());
    json samples = json::array();
    Outcome o;
    o.csv = {{"theta", "phi", "b", "b_theta2"}};
    for (const auto& s : r.samples) {
        samples.push_back({{"theta", s.theta},
                           {"phi", s.phi},
                           {"b", s.b},
                           {"b_theta2", s.b_theta2},
                           {"A1_ratio", s.A1_ratio},
                           {"B1_ratio", s.B1_ratio},
                           {"C1_ratio", s.C1_ratio}});
        o.csv.push_back({num(s.theta), num(s.phi), num(s.b), num(s.b_theta2)});
    }
    o.ok = r.asymptotics_ok;
    o.report = {{"predicted_limit", r.curve == Curve::quadratic ? json(r.predicted_limit) : json(nullptr)},
                {"predicted_ratios", json::array({r.predicted_A1, r.predicted_B1, r.predicted_C1})},
                {"max_ratio_error", r.max_ratio_error},
                {"asymptotics_ok", r.asymptotics_ok},
                {"limit_sign_ok", r.limit_sign_ok},
                {"min_b", r.min_b},
                {"samples", samples}};
    return o;
}

json nonneg_json(const NonnegativityResult& n) {
    json j = {{"nonnegative", n.nonnegative}};
    if (!n.nonnegative) {
        j["witness"] = to_string(n.witness);
        j["witness_value"] = to_string(n.witness_value);
    }
    return j;
}

Outcome cd_factor(const std::string& a1, const std::string& b1) {
    Outcome o;
    try {
        const auto r = factorization_check(parse_rat(a1), parse_rat(b1));
        o.report = {{"identity", r.identity},
                    {"lhs", to_string(r.lhs)},
                    {"factored", to_string(r.factored)},
                    {"nonnegative_ray", nonneg_json(r.nonneg_ray)},
                    {"nonnegative_opposite_ray", nonneg_json(r.nonneg_opposite)}};
        if (r.short_form_equal) {
            o.report["short_form"] = to_string(*r.short_form);
            o.report["short_form_equal"] = *r.short_form_equal;
        }
        o.ok = r.identity;
    } catch (const IdentityMismatch& e) {
        o.report = {{"identity", false}, {"error", e.what()}};
        o.ok = false;
    }
    return o;
}

Outcome su3_cmd(const RunConfig& cfg, std::size_t samples) {
    const auto r = ricci_report();
    const auto us = haar_sample(cfg.seed, samples);
    const auto Z = BivarPoly::Z(), Zb = BivarPoly::Zbar();
    const auto push = pushforward_check({Z, Z * Zb, pow(Z, 3), GaussRat(Rat(2), Rat(-1)) * Z * Z * Zb + Zb}, us);
    double g = 0, l = 0;
    for (const auto& u : us) {
        const auto c = charpoly_identity_check(u, 2.0, {0, 3});
        g = std::max(g, c.gamma);
        l = std::max(l, c.generator);
    }
    const auto cd = cd38_sample_check(12, 20, cfg.seed);
    const auto ts = trace_statistics(haar_sample(cfg.seed, 100000));
    Outcome o;
    o.ok = std::abs(r.constant - 3) <= 1e-10 && r.max_table_residual < 1e-12 && push.max_gamma_residual < 1e-9 &&
           push.max_generator_residual < 1e-9 && g < 1e-9 && l < 1e-9 && cd.pass;
    o.report = {{"ricci_constant", r.constant},
                {"commutator_entries", commutator_table().size()},
                {"commutator_table_residual", r.max_table_residual},
                {"expansion_residual", r.max_expansion_residual},
                {"pushforward", {{"gamma_residual", push.max_gamma_residual},
                                 {"generator_residual", push.max_generator_residual}}},
                {"charpoly", {{"gamma_residual", g}, {"generator_residual", l}}},
                {"cd38", {{"points", cd.points}, {"min_margin", cd.min_margin}, {"pass", cd.pass}}},
                {"trace_moments", {{"samples", ts.samples},
                                   {"mean_abs2", ts.mean_abs2},
                                   {"abs2_se", ts.abs2_se},
                                   {"exact", "1/9"}}},
                {"pass", o.ok}};
    return o;
}

Outcome heat_cmd(const RunConfig& cfg, int n, double tmin, double tmax, int steps, std::size_t grid) {
    const HeatKernelTruncation t(parse_lambda(cfg.lambda), n);
    const auto r = ultracontractivity_fit(t, tmin, tmax, steps, grid);
    Outcome o;
    o.report = {{"fit", fit_json(r)}};
    o.csv = fit_csv(r, "t", "sup_heat_diag");
    return o;
}

Outcome supnorm_cmd(const RunConfig& cfg, int max_degree, int n, int grid) {
    const HeatKernelTruncation t(parse_lambda(cfg.lambda), std::max(n, max_degree));
    const auto r = supnorm_bound_check(t, max_degree, grid);
    Outcome o;
    o.ok = r.slope <= r.target + 0.1;
    o.report = {{"fit", fit_json(r)}, {"exponent_bound", r.target + 0.1}, {"pass", o.ok}};
    o.csv = fit_csv(r, "mu", "max_sup_ratio");
    return o;
}

Outcome hk_cmd(const RunConfig& cfg, int max_k, int combos, int grid) {
    const HeatKernelTruncation t(parse_lambda(cfg.lambda), max_k);
    const auto r = hk_bound_check(t, max_k, combos, cfg.seed, grid);
    Outcome o;
    o.ok = r.random.slope <= r.random.target + 0.1;
    o.report = {{"random", fit_json(r.random)},
                {"kernel", fit_json(r.kernel)},
                {"exponent_bound", r.random.target + 0.1},
                {"pass", o.ok}};
    o.csv = {{"k", "random_sup_ratio", "kernel_sup_ratio"}};
    for (std::size_t i = 0; i < r.random.data.size(); ++i)
        o.csv.push_back({num(r.random.data[i].first), num(r.random.data[i].second), num(r.kernel.data[i].second)});
    return o;
}

Outcome series_cmd(double p, double a, double tmin, double tmax) {
    const auto r = sobolev_series_check(p, a, dyadic_times(tmin, tmax));
    Outcome o;
    o.ok = r.pass;
    o.report = {{"p", r.p},
                {"a", r.a},
                {"fit", fit_json(r.fit)},
                {"normalized_sup", r.normalized_sup},
                {"normalized_inf", r.normalized_inf},
                {"ratio", r.ratio},
                {"corrected_ratio", r.corrected_ratio},
                {"pass", r.pass}};
    o.csv = fit_csv(r.fit, "t", "S");
    return o;
}

Outcome kernel_cmd(const RunConfig& cfg, std::vector<double> nu, double decay, int max_k, int n, std::size_t grid) {
    if (nu.empty())
        for (int k = 1; k <= max_k; ++k) nu.push_back(std::exp(-decay * k));
    const HeatKernelTruncation t(parse_lambda(cfg.lambda), std::max<int>(n, static_cast<int>(nu.size())));
    const auto r = kernel_bound_check(nu, t, sup_candidates(grid));
    Outcome o;
    o.ok = r.pass;
    o.report = {{"max_k", r.max_k},
                {"kernel_sup", r.kernel_sup},
                {"argsup", json::array({cplx(r.argsup_x), cplx(r.argsup_y)})},
                {"c1", r.c1},
                {"series", r.series},
                {"bound", r.bound},
                {"pass", r.pass}};
    return o;
}

Outcome accept_cmd(const RunConfig& cfg, int criterion) {
    std::vector<CriterionResult> results;
    if (criterion == 0)
        results = run_primary_suite(cfg.seed);
    else
        results.push_back(run_criterion(criterion, cfg.seed));
    Outcome o;
    json list = json::array();
    o.csv = {{"criterion", "metric", "value", "bound", "ok"}};
    for (const auto& r : results) {
        json metrics = json::array();
        for (const auto& m : r.metrics) {
            metrics.push_back({{"name", m.name}, {"value", m.value}, {"bound", m.bound}, {"ok", m.ok}});
            o.csv.push_back({std::to_string(r.id), m.name, num(m.value), m.bound, m.ok ? "1" : "0"});
        }
        json entry = {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"metrics", metrics}};
        if (!r.note.empty()) entry["note"] = r.note;
        list.push_back(entry);
        std::cerr << "criterion " << r.id << (r.pass ? " PASS " : " FAIL ") << r.title << " (" << r.seconds
                  << " s)\n";
        o.ok = o.ok && r.pass;
    }
    o.report = {{"suite", "primary"}, {"criteria", list}, {"pass", o.ok}};
    return o;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void emit(const RunConfig& cfg, const std::string& command, const Outcome& o) {
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) throw std::runtime_error("cannot open " + cfg.output);
    }
    std::ostream& os = cfg.output.empty() ? std::cout : file;
    if (cfg.format == "csv") {
        if (o.csv.empty()) throw CLI::ValidationError("--format", "no CSV form for " + command);
        for (const auto& row : o.csv) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
            os << '\n';
        }
        return;
    }
    json out = {{"tool", "deltoid"},
                {"version", DELTOID_VERSION},
                {"schema_version", schema_version},
                {"command", command},
                {"config", cfg.echo},
                {"ok", o.ok},
                {"report", o.report}};
    os << out.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deltoid operator toolkit: exact polynomials, curvature checks, SU(3) and heat kernel bounds."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", DELTOID_VERSION);

    RunConfig cfg;
    app.add_option("--lambda", cfg.lambda, "lambda as num/den")->capture_default_str();
    app.add_option("--seed", cfg.seed)->capture_default_str();
    app.add_option("--output,-o", cfg.output, "write the report here instead of stdout");
    app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    std::function<Outcome()> action;
    std::string command;
    auto on = [&](CLI::App* sub, std::string name, std::function<Outcome()> f) {
        sub->callback([&, name = std::move(name), f = std::move(f)] {
            command = name;
            action = f;
        });
    };

    std::vector<int> pq{1, 1};
    auto* eigen = app.add_subcommand("eigen", "eigenpolynomial P_{p,q}");
    eigen->add_option("--pq", pq, "p,q")->delimiter(',')->expected(2)->capture_default_str();
    on(eigen, "eigen", [&] { return eigen_cmd(cfg, pq); });

    int max_degree = 4;
    auto* mom = app.add_subcommand("moments", "exact moments m_{i,j}");
    mom->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber)->capture_default_str();
    on(mom, "moments", [&] { return moments_cmd(cfg, max_degree); });

    auto* cd = app.add_subcommand("cd", "curvature-dimension checks");
    cd->require_subcommand(1);
    std::string a1 = "1/6", b1 = "9/4";
    std::size_t psd_grid = 200;
    auto* verify = cd->add_subcommand("verify", "psd check of the CD tensor residual on the mapped grid");
    verify->add_option("--a1", a1)->capture_default_str();
    verify->add_option("--b1", b1)->capture_default_str();
    verify->add_option("--grid", psd_grid)->check(CLI::PositiveNumber)->capture_default_str();
    on(verify, "cd verify", [&] { return cd_verify(a1, b1, psd_grid); });

    std::string a = "1/3";
    int scan_grid = 2000, levels = 10;
    bool refine = false;
    auto* scan = cd->add_subcommand("scan-b", "infimum of b(a) over the triangle");
    scan->add_option("--a", a)->capture_default_str();
    scan->add_option("--grid", scan_grid)->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_flag("--refine", refine);
    scan->add_option("--levels", levels)->check(CLI::NonNegativeNumber)->capture_default_str();
    on(scan, "cd scan-b", [&] { return cd_scan(real_arg(a), scan_grid, refine, levels); });

    std::string probe_a = "0.4", probe_c = "1";
    std::string curve = "quadratic";
    auto* probe = cd->add_subcommand("probe", "b(a) along a curve into the vertex");
    probe->add_option("--a", probe_a)->capture_default_str();
    probe->add_option("--curve", curve)->check(CLI::IsMember({"quadratic", "linear"}))->capture_default_str();
    probe->add_option("--c", probe_c)->capture_default_str();
    on(probe, "cd probe", [&] { return cd_probe(real_arg(probe_a), curve, real_arg(probe_c)); });

    auto* factor = cd->add_subcommand("factor-check", "exact factorization on the ray cos 3theta = 1");
    factor->add_option("--a1", a1)->capture_default_str();
    factor->add_option("--b1", b1)->capture_default_str();
    on(factor, "cd factor-check", [&] { return cd_factor(a1, b1); });

    auto* su3 = app.add_subcommand("su3", "SU(3) checks");
    su3->require_subcommand(1);
    std::size_t samples = 100;
    auto* su3_check = su3->add_subcommand("check", "Ricci, commutators, pushforward, charpoly, CD(3,8)");
    su3_check->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
    on(su3_check, "su3 check", [&] { return su3_cmd(cfg, samples); });

    int trunc_n = 40, steps = 10;
    double tmin = 0.02, tmax = 0.2;
    std::size_t heat_grid = 12;
    auto* heat = app.add_subcommand("heat", "heat kernel");
    heat->require_subcommand(1);
    auto* trace = heat->add_subcommand("trace", "sup of the diagonal heat kernel against t");
    trace->add_option("--truncation,-N", trunc_n)->check(CLI::PositiveNumber)->capture_default_str();
    trace->add_option("--t-min", tmin)->capture_default_str();
    trace->add_option("--t-max", tmax)->capture_default_str();
    trace->add_option("--steps", steps)->check(CLI::Range(2, 1000))->capture_default_str();
    trace->add_option("--grid", heat_grid)->capture_default_str();
    on(trace, "heat trace", [&] { return heat_cmd(cfg, trunc_n, tmin, tmax, steps, heat_grid); });

    auto* bounds = app.add_subcommand("bounds", "sup-norm growth of eigenpolynomials");
    bounds->require_subcommand(1);
    int sup_degree = 30, sup_grid = 48, max_k = 20, combos = 12;
    auto* supnorm = bounds->add_subcommand("supnorm", "sup |P| / |P|_2 against mu");
    supnorm->add_option("--max-degree", sup_degree)->check(CLI::PositiveNumber)->capture_default_str();
    supnorm->add_option("--grid", sup_grid)->check(CLI::PositiveNumber)->capture_default_str();
    on(supnorm, "bounds supnorm", [&] { return supnorm_cmd(cfg, sup_degree, sup_degree, sup_grid); });
    auto* hk = bounds->add_subcommand("hk", "sup-norm ratios in H_k against k");
    hk->add_option("--max-k", max_k)->check(CLI::PositiveNumber)->capture_default_str();
    hk->add_option("--combos", combos)->check(CLI::PositiveNumber)->capture_default_str();
    hk->add_option("--grid", sup_grid)->check(CLI::PositiveNumber)->capture_default_str();
    on(hk, "bounds hk", [&] { return hk_cmd(cfg, max_k, combos, sup_grid); });

    auto* sobolev = app.add_subcommand("sobolev", "series estimates");
    sobolev->require_subcommand(1);
    std::string sp = "9/2", sa = "3/4", st_min = "1e-4", st_max = "1";
    auto* series = sobolev->add_subcommand("series", "sum_k k^{2p} e^{-2atk^2} on dyadic t");
    series->add_option("--p", sp)->capture_default_str();
    series->add_option("--a", sa)->capture_default_str();
    series->add_option("--t-min", st_min)->capture_default_str();
    series->add_option("--t-max", st_max)->capture_default_str();
    on(series, "sobolev series", [&] { return series_cmd(real_arg(sp), real_arg(sa), real_arg(st_min), real_arg(st_max)); });

    auto* kernel = app.add_subcommand("kernel", "kernel of K^2 for a multiplier on the H_k");
    kernel->require_subcommand(1);
    std::vector<double> nu;
    double decay = 1;
    int kernel_k = 10, kernel_n = 12;
    std::size_t kernel_grid = 6;
    auto* kcheck = kernel->add_subcommand("check", "sup of the kernel against sum nu_k^2 C1^2 k^{2 lambda + 1}");
    kcheck->add_option("--nu", nu, "explicit nu_1,nu_2,...")->delimiter(',');
    kcheck->add_option("--decay", decay, "nu_k = exp(-decay k) when --nu is absent")->capture_default_str();
    kcheck->add_option("--max-k", kernel_k)->check(CLI::PositiveNumber)->capture_default_str();
    kcheck->add_option("--truncation,-N", kernel_n)->check(CLI::PositiveNumber)->capture_default_str();
    kcheck->add_option("--grid", kernel_grid)->check(CLI::PositiveNumber)->capture_default_str();
    on(kcheck, "kernel check", [&] { return kernel_cmd(cfg, nu, decay, kernel_k, kernel_n, kernel_grid); });

    std::string suite = "primary";
    int criterion = 0;
    auto* accept = app.add_subcommand("accept", "acceptance suite");
    accept->add_option("--suite", suite)->check(CLI::IsMember({"primary"}))->capture_default_str();
    accept->add_option("--criterion", criterion, "1..12; 0 runs all")
        ->check(CLI::Range(0, criterion_count))
        ->capture_default_str();
    on(accept, "accept", [&] { return accept_cmd(cfg, criterion); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }

    try {
        parse_lambda(cfg.lambda);
    } catch (const std::exception& e) {
        std::cerr << "--lambda: " << e.what() << '\n' << app.help();
        return 2;
    }
    // every option of the parent and the selected subcommands, in declaration order
    std::vector<const CLI::App*> chain{&app};
    while (!chain.back()->get_subcommands().empty()) chain.push_back(chain.back()->get_subcommands().front());
    for (const auto* sub : chain)
        for (const auto* opt : sub->get_options()) {
            const auto& key = opt->get_single_name();
            if (key.empty() || key == "help" || key == "version" || key == "output") continue;
            auto r = opt->results();
            if (r.empty()) {
                const auto d = opt->get_default_str();
                if (d.empty()) continue;
                r = {d};
            }
            cfg.echo[key] = r.size() == 1 ? json(r.front()) : json(r);
        }

    try {
        const auto o = action();
        emit(cfg, command, o);
        return o.ok ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
