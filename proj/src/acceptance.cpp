#include "deltoid/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "deltoid/cdcheck.hpp"
#include "deltoid/eigen_poly.hpp"
#include "deltoid/geometry.hpp"
#include "deltoid/operator.hpp"
#include "deltoid/spectral.hpp"
#include "deltoid/su3.hpp"

namespace deltoid {

namespace {

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    void at_most(const std::string& name, double v, double limit) {
        add(name, v, "<= " + g(limit), v <= limit);
    }
    void below(const std::string& name, double v, double limit) {
        add(name, v, "< " + g(limit), v < limit);
    }
    void at_least(const std::string& name, double v, double limit) {
        add(name, v, ">= " + g(limit), v >= limit);
    }
    void within(const std::string& name, double v, double lo, double hi) {
        add(name, v, "in [" + g(lo) + ", " + g(hi) + "]", v >= lo && v <= hi);
    }
    void holds(const std::string& name, bool ok) { add(name, ok ? 1 : 0, "true", ok); }
    void add(const std::string& name, double v, std::string bound, bool ok) {
        r_.metrics.push_back({name, v, std::move(bound), ok});
    }

private:
    CriterionResult& r_;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void discriminant(Recorder& rec, std::uint64_t seed) {
    const auto t0 = Clock::now();
    const auto d = derive_discriminant_constant();
    rec.holds("disc proportional to P", d.proportional);
    rec.within("derived constant", to_double(d.constant), 108, 108);
    const auto r = discriminant_check(1000, seed);
    rec.within("points", static_cast<double>(r.points), 1000, 1000);
    rec.below("max relative error", r.max_relative_error, 1e-10);
    rec.below("seconds", since(t0), 1);
}

void boundary(Recorder& rec, std::uint64_t) {
    const auto b = check_boundary_equation();
    rec.holds("Gamma(Z,P) + 3ZP = 0", b.residual_z.is_zero());
    rec.holds("Gamma(Zbar,P) + 3Zbar P = 0", b.residual_zbar.is_zero());
}

void hessian(Recorder& rec, std::uint64_t) {
    const auto d = hessian_logP_direct(), r = hessian_logP_reduced();
    rec.holds("H11", d.r11 == r.r11);
    rec.holds("H12", d.r12 == r.r12);
    rec.holds("H22", d.r22 == r.r22);
}

void eigen_system(Recorder& rec, std::uint64_t) {
    const auto t0 = Clock::now();
    for (const Rat& l : {Rat(4), Rat(1), Rat(7, 2)}) {
        const Lambda lam(l);
        const EigenTable table(lam, 20);
        bool eq = true, mu_ok = true, orth = true;
        for (const auto& e : table.all()) {
            const Rat mu = (l - 1) * (e.p + e.q) + e.p * e.p + e.q * e.q + e.p * e.q;
            mu_ok = mu_ok && e.mu == mu;
            eq = eq && (generator(e.poly, lam) + GaussRat(e.mu) * e.poly).is_zero();
        }
        const auto& all = table.all();
        for (std::size_t a = 0; a < all.size() && all[a].p + all[a].q <= 12; ++a)
            for (std::size_t b = a + 1; b < all.size() && all[b].p + all[b].q <= 12; ++b)
                orth = orth && inner_product(all[a].poly, all[b].poly, table.moment_table()).is_zero();
        const auto tag = to_string(l);
        rec.holds("L P + mu P = 0, lambda " + tag, eq);
        rec.holds("mu formula, lambda " + tag, mu_ok);
        rec.holds("orthogonal p+q <= 12, lambda " + tag, orth);
    }
    rec.below("seconds", since(t0), 60);
}

void moment_check(Recorder& rec, std::uint64_t seed) {
    for (const Rat& l : {Rat(4), Rat(1), Rat(7, 2)})
        rec.holds("m11 = 1/(2 lambda + 1), lambda " + to_string(l),
                  moments(Lambda(l), 2)(1, 1) == Rat(1) / (2 * l + 1));
    const auto s = trace_statistics(haar_sample(seed, 100000));
    rec.at_most("|E|tr U/3|^2 - 1/9| / se", std::abs(s.mean_abs2 - 1.0 / 9) / s.abs2_se, 3);
}

void factorization(Recorder& rec, std::uint64_t) {
    bool all = true;
    std::size_t count = 0;
    try {
        for (const auto& f : factorization_grid()) {
            all = all && f.identity;
            ++count;
        }
    } catch (const std::exception&) {
        all = false;
    }
    rec.holds("identity on the 5x5 grid", all);
    rec.within("pairs", static_cast<double>(count), 25, 25);
    const auto ok = factorization_check(Rat(1, 6), Rat(9, 4));
    const auto bad = factorization_check(Rat(1, 6), Rat(9, 4) + Rat(1, 100));
    rec.holds("b1 = 9/4 nonnegative on [0,1]", ok.nonneg_ray.nonnegative);
    rec.holds("b1 = 9/4 + 1/100 negative somewhere", !bad.nonneg_ray.nonnegative);
    rec.within("largest admissible b1", to_double(max_b1_nonnegative(Rat(1, 6), Rat(1, 1 << 20))), 2.25 - 1e-6,
               2.25);
}

void optimal_constants(Recorder& rec, std::uint64_t) {
    const auto grid = mapped_grid(200);
    const auto ok = psd_check(tensor_residual(Rat(1, 6), Rat(9, 4)), grid, -1e-12);
    rec.holds("(1/6, 9/4) psd on 200x200", ok.pass);
    rec.at_least("(1/6, 9/4) min det", ok.min_det, -1e-12);
    const auto bad = psd_check(tensor_residual(Rat(1, 6), parse_rat("2.26")), grid, -1e-12);
    rec.holds("(1/6, 2.26) fails", !bad.pass);
    rec.below("(1/6, 2.26) nearest failure to a cusp", bad.nearest_cusp_failure, 0.1);
    const auto s = scan_inf_b(1.0 / 3, 2000, true);
    rec.within("inf b(1/3)", s.inf_estimate, 1.125 - 1e-6, 1.135);
    const auto p = divergence_probe(0.4, Curve::quadratic, 1.0, default_probe_thetas());
    rec.below("min b at a = 0.4", p.min_b, -1e3);
    const auto& last = p.samples.back();
    const auto& prev = p.samples[p.samples.size() - 2];
    rec.below("b theta^2 at smallest theta", last.b_theta2, 0);
    rec.below("relative change of b theta^2", std::abs(last.b_theta2 - prev.b_theta2) / std::abs(last.b_theta2),
              1e-2);
}

void gamma2_sampling(Recorder& rec, std::uint64_t seed) {
    const Lambda lam(4);
    const auto ok = gamma2_sample_check(lam, Rat(9, 4), Rat(8), 10000, seed);
    rec.at_least("pairs", static_cast<double>(ok.pairs), 10000);
    rec.at_least("n = 8 random margin", ok.min_margin_random, -1e-10);
    rec.at_least("n = 8 quadratic-jet margin", ok.min_margin_jet, -1e-10);
    const auto bad = gamma2_sample_check(lam, Rat(9, 4), Rat(7), 10000, seed);
    rec.holds("n = 7 violation found", bad.violation_found);
}

void su3(Recorder& rec, std::uint64_t seed) {
    const auto r = ricci_report();
    rec.at_most("|Ricci - 3|", std::abs(r.constant - 3), 1e-10);
    rec.within("commutator entries", static_cast<double>(commutator_table().size()), 36, 36);
    rec.below("commutator table residual", r.max_table_residual, 1e-12);
    const auto us = haar_sample(seed + 100, 100);
    const auto Z = BivarPoly::Z(), Zb = BivarPoly::Zbar();
    const auto push = pushforward_check({Z, Z * Zb, pow(Z, 3), GaussRat(Rat(2), Rat(-1)) * Z * Z * Zb + Zb}, us);
    rec.below("pushforward Gamma residual", push.max_gamma_residual, 1e-9);
    rec.below("pushforward L residual", push.max_generator_residual, 1e-9);
    double g = 0, l = 0;
    for (const auto& u : us) {
        for (const auto& [x, y] : {std::pair<std::complex<double>, std::complex<double>>{2.0, {0, 3}},
                                   {{0.3, -0.7}, {-1.1, 0.4}},
                                   {{0.4, 0.9}, {0.4, 0.9}}}) {
            const auto c = charpoly_identity_check(u, x, y);
            g = std::max(g, c.gamma);
            l = std::max(l, c.generator);
        }
    }
    rec.below("charpoly Gamma residual", g, 1e-9);
    rec.below("charpoly L residual", l, 1e-9);
    const auto cd = cd38_sample_check(12, 20, seed + 60);
    rec.at_least("CD(3,8) margin", cd.min_margin, -1e-8);
}

void ultracontractivity(Recorder& rec, std::uint64_t) {
    const auto t0 = Clock::now();
    const HeatKernelTruncation t4(Lambda(4), 40);
    const auto r4 = ultracontractivity_fit(t4, 0.02, 0.2);
    rec.within("slope lambda = 4", r4.slope, -4.5, -3.5);
    rec.below("tail / value lambda = 4", r4.max_tail_ratio, 0.01);
    const HeatKernelTruncation t1(Lambda(1), 40);
    const auto r1 = ultracontractivity_fit(t1, 0.02, 0.2);
    rec.within("slope lambda = 1", r1.slope, -1.3, -0.8);
    rec.below("seconds", since(t0), 300);
}

void supnorms(Recorder& rec, std::uint64_t seed) {
    const HeatKernelTruncation t(Lambda(4), 30);
    const auto s = supnorm_bound_check(t, 30);
    rec.at_most("sup-norm exponent in mu", s.slope, 2.1);
    rec.add("C(4)", s.constant, "reported", true);
    const auto h = hk_bound_check(t, 20, 12, seed);
    rec.at_most("H_k exponent (random combinations)", h.random.slope, 4.6);
    rec.at_most("H_k exponent (reproducing kernel)", h.kernel.slope, 4.6);
}

void series(Recorder& rec, std::uint64_t) {
    const auto r = sobolev_series_check(4.5, 0.75, dyadic_times(1e-4, 1));
    rec.below("sup/inf of t^{(p+1)/2} S(t)", r.ratio, 10);
    rec.add("sup/inf of t^{(2p+1)/2} S(t)", r.corrected_ratio, "reported", true);
    rec.add("fitted exponent of S", r.fit.slope, "reported", true);
}

struct Entry {
    const char* title;
    void (*run)(Recorder&, std::uint64_t);
    const char* note;
};

const Entry entries[criterion_count] = {
    {"discriminant identity W = 108 P", discriminant, ""},
    {"boundary equation", boundary, ""},
    {"Hessian reduction", hessian, ""},
    {"eigen system", eigen_system, ""},
    {"moments", moment_check, ""},
    {"CD factorization", factorization, ""},
    {"optimal constants", optimal_constants, ""},
    {"Gamma2 sampling at lambda = 4", gamma2_sampling, ""},
    {"SU(3)", su3, ""},
    {"ultracontractivity", ultracontractivity, ""},
    {"sup-norm exponents", supnorms, ""},
    {"series lemma", series,
     "S(t) grows like t^{-(2p+1)/2}, so t^{(p+1)/2} S(t) is unbounded as t -> 0; the corrected "
     "normalization is reported alongside"},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > criterion_count) throw std::out_of_range("criterion must be in 1..12");
    const auto& e = entries[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = e.title;
    r.note = e.note;
    const auto t0 = Clock::now();
    Recorder rec(r);
    try {
        e.run(rec, seed);
    } catch (const std::exception& ex) {
        rec.holds(std::string("exception: ") + ex.what(), false);
    }
    r.seconds = since(t0);
    r.pass = !r.metrics.empty();
    for (const auto& m : r.metrics) r.pass = r.pass && m.ok;
    return r;
}

std::vector<CriterionResult> run_primary_suite(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= criterion_count; ++i) out.push_back(run_criterion(i, seed));
    return out;
}

}  // namespace deltoid
