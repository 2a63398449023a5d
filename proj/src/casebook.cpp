#include "asympt/casebook.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asympt/errors.hpp"
#include "asympt/two_point.hpp"

namespace asympt {

namespace {

constexpr double kPi = 3.14159265358979323846;

CaseValue cv(std::string name, double computed) {
    CaseValue v;
    v.name = std::move(name);
    v.computed = computed;
    return v;
}

CaseValue cv(std::string name, double computed, double reference,
             std::string provenance) {
    CaseValue v;
    v.name = std::move(name);
    v.computed = computed;
    v.has_reference = true;
    v.reference = reference;
    v.provenance = std::move(provenance);
    v.deviation = std::abs(computed - reference);
    return v;
}

PowerSeries eps_variable(int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    if (order >= 1) c[1] = 1.0;
    return PowerSeries(c);
}

PowerSeries const_series(double v, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = v;
    return PowerSeries(c);
}

}  // namespace

const CaseValue* CaseResult::find(const std::string& name) const {
    for (const auto& v : values)
        if (v.name == name) return &v;
    return nullptr;
}

double CaseResult::value(const std::string& name) const {
    const CaseValue* v = find(name);
    if (!v) throw InvalidInput("case '" + case_id + "' has no value '" + name + "'");
    return v->computed;
}

// -- quintic ---------------------------------------------------------------

PowerSeries quintic_direct_series(int order) {
    if (order < 0) throw InvalidInput("order must be nonnegative");
    std::vector<double> a(static_cast<std::size_t>(order) + 1);
    a[0] = 1.0;
    for (int k = 0; k + 1 <= order; ++k) {
        double num = 1.0, den = 1.0;
        for (int i = 1; i <= 5; ++i) num *= 5.0 * k + i;
        den *= k + 1;
        for (int i = 2; i <= 5; ++i) den *= 4.0 * k + i;
        a[static_cast<std::size_t>(k + 1)] = -a[static_cast<std::size_t>(k)] * num / den;
    }
    return PowerSeries(std::move(a));
}

PowerSeries quintic_root_series(int order) {
    if (order < 0) throw InvalidInput("order must be nonnegative");
    const PowerSeries eps = eps_variable(order);
    PowerSeries x = const_series(1.0, order);
    const int steps = 3 + static_cast<int>(std::ceil(std::log2(order + 1.0)));
    for (int s = 0; s < steps; ++s) {
        const PowerSeries x4 = pow(x, 4.0);
        const PowerSeries g =
            sub(add(mul(x4, x), mul(eps, x)), const_series(1.0, order));
        const PowerSeries gp = add(scale(x4, 5.0), eps);
        x = sub(x, divide(g, gp));
    }
    return x;
}

PowerSeries quintic_exponent_series(int order) {
    if (order < 0) throw InvalidInput("order must be nonnegative");
    const PowerSeries delta = eps_variable(order);
    PowerSeries x = const_series(0.5, order);
    const int steps = 3 + static_cast<int>(std::ceil(std::log2(order + 1.0)));
    for (int s = 0; s < steps; ++s) {
        const PowerSeries e = exp(mul(delta, log(x)));  // x^delta
        const PowerSeries g = sub(add(mul(x, e), x), const_series(1.0, order));
        const PowerSeries gp =
            add(mul(e, add(const_series(1.0, order), delta)), const_series(1.0, order));
        x = sub(x, divide(g, gp));
    }
    return x;
}

double quintic_exact_root() {
    double lo = 0.7, hi = 0.8;
    auto f = [](double x) { return x * x * x * x * x + x - 1.0; };
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

CaseResult quintic_case() {
    CaseResult r;
    r.case_id = "quintic";
    const double root = quintic_exact_root();

    const PowerSeries direct = quintic_direct_series(6);
    const double p33 = evaluate(construct(direct, 3, 3), 1.0);

    const PowerSeries root7 = quintic_root_series(6);
    const double sum7 = root7.evaluate(1.0);

    const PowerSeries expo = quintic_exponent_series(12);
    const double e33 = evaluate(construct(expo.truncated(6), 3, 3), 4.0);
    const double e66 = evaluate(construct(expo, 6, 6), 4.0);

    const double l5 = std::log(5.0);
    const double it1 = std::pow(l5 / 5.0, 0.2);
    const double it2 = std::pow((l5 - std::log(l5)) / 5.0, 0.2);

    r.values.push_back(cv("exact_root", root));
    r.values.push_back(cv("direct_pade33_at_1", p33, 0.76369, "reference-table"));
    r.values.push_back(cv("root_series_sum7_at_1", sum7, root, "closed-form"));
    r.values.push_back(cv("exponent_pade33_at_4", e33, root, "closed-form"));
    r.values.push_back(cv("exponent_pade66_at_4", e66, 0.75487654, "reference-table"));
    r.values.push_back(cv("iterated_log_first", it1, 0.7972, "reference-table"));
    r.values.push_back(cv("iterated_log_second", it2, 0.7432, "reference-table"));

    r.grid.columns = {"k", "coefficient", "partial_sum_at_1"};
    double ps = 0.0;
    for (int k = 0; k <= 6; ++k) {
        ps += direct[k];
        r.grid.rows.push_back({static_cast<double>(k), direct[k], ps});
    }
    return r;
}

// -- oscillator --------------------------------------------------------------

double oscillator_period(double n) {
    if (!(n > 0.0)) throw InvalidInput("exponent must be positive");
    const double lam = 2.0 / (n + 1.0);
    return 4.0 * std::pow(kPi / (2.0 * std::sqrt(lam)), lam);
}

CaseResult oscillator_case(double n) {
    CaseResult r;
    r.case_id = "oscillator";
    const double T = oscillator_period(n);
    if (std::abs(n - 1.0) <= 1e-12)
        r.values.push_back(cv("period", T, 2.0 * kPi, "closed-form"));
    else
        r.values.push_back(cv("period", T));

    // Leading amplitude constants of the strongly anharmonic regime.
    const double lam = 0.5;  // cubic case
    const double a1 = 0.5 * lam * std::tgamma(0.5 * lam) * std::tgamma(0.5) /
                      std::tgamma(0.5 * lam + 0.5);
    const double a2 = std::sqrt(kPi / 2.0);
    r.values.push_back(cv("first_amplitude_constant", a1, 1.30, "reference-table"));
    r.values.push_back(cv("second_amplitude_constant", a2, 1.25, "reference-table"));

    r.grid.columns = {"n", "period"};
    for (double nn : {1.0, 2.0, 3.0, 5.0, 10.0, 100.0, 10001.0})
        r.grid.rows.push_back({nn, oscillator_period(nn)});
    return r;
}

// -- relaxation-oscillation period (two-point fit) ---------------------------

RationalApproximant vdp_tppa() {
    const double L = 3.0 - 2.0 * std::log(2.0);
    TwoPointData d;
    d.at_zero = PowerSeries({2.0 * kPi, 0.0, kPi / 8.0, 0.0});
    d.at_infinity = PowerSeries({L, 0.0}, VarKind::AtInfinity);
    d.k_zero = 4;
    d.far_offset = 1;
    return construct_tppa(d, 3, 2);
}

double vdp_period(double eps) {
    if (eps < 0.0) throw OutOfRange("eps must be nonnegative");
    return evaluate(vdp_tppa(), eps);
}

namespace {

struct TableRow {
    double eps;
    double ref;
};

const TableRow kPeriodTable[] = {
    {1, 6.61},   {2, 7.37},   {3, 8.40},   {4, 9.55},   {5, 10.81},
    {6, 12.15},  {7, 13.54},  {8, 14.96},  {9, 16.42},  {10, 17.89},
    {20, 33.30}, {30, 49.13}, {40, 65.10}, {50, 81.14}, {60, 97.20},
    {70, 113.29},{80, 129.40},{90, 145.49},{100, 161.61}};

}  // namespace

CaseResult vdp_case(double eps) {
    CaseResult r;
    r.case_id = "vdp";
    const RationalApproximant ra = vdp_tppa();
    const double T = evaluate(ra, eps);

    bool tabulated = false;
    for (const auto& row : kPeriodTable)
        if (std::abs(row.eps - eps) <= 1e-12) {
            r.values.push_back(cv("period", T, row.ref, "reference-table"));
            tabulated = true;
            break;
        }
    if (!tabulated) r.values.push_back(cv("period", T));

    r.grid.columns = {"eps", "period", "reference"};
    for (const auto& row : kPeriodTable)
        r.grid.rows.push_back({row.eps, evaluate(ra, row.eps), row.ref});
    return r;
}

// -- descending-tail fits for 1/sqrt(1+t^2) and 1/sqrt(t^2-1) ----------------

RationalApproximant laplace_tppa_approximant() {
    TwoPointData d;
    d.at_zero = PowerSeries({1.0, 0.0, -0.5});
    d.at_infinity = PowerSeries({1.0}, VarKind::AtInfinity);
    d.k_zero = 3;
    d.far_offset = -1;
    return construct_tppa(d, 1, 2);
}

CaseResult laplace_tppa_case() {
    CaseResult r;
    r.case_id = "laplace-tppa";
    const RationalApproximant ra = laplace_tppa_approximant();
    double mx = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = 20.0 * i / 1000.0;
        const double exact = 1.0 / std::sqrt(1.0 + t * t);
        mx = std::max(mx, std::abs(evaluate(ra, t) / exact - 1.0));
    }
    r.values.push_back(cv("max_rel_dev", mx, 0.129385, "derived-oracle"));

    r.grid.columns = {"t", "approximant", "exact"};
    for (int t = 0; t <= 20; t += 2)
        r.grid.rows.push_back({static_cast<double>(t), evaluate(ra, t),
                               1.0 / std::sqrt(1.0 + static_cast<double>(t) * t)});
    return r;
}

double laplace_k0_model(double t) {
    if (!(t > 1.0)) throw OutOfRange("model is defined for t > 1");
    const double al = 0.3192, be = 0.9927;
    const double u = t - 1.0;
    return (1.0 - std::exp(-al * u)) / u + std::exp(-be * u) / std::sqrt(2.0 * u);
}

CaseResult laplace_k0_case() {
    CaseResult r;
    r.case_id = "laplace-k0";
    auto exact = [](double t) { return 1.0 / std::sqrt(t * t - 1.0); };

    double mx = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = 1.2 + (10.0 - 1.2) * i / 999.0;
        mx = std::max(mx, std::abs(laplace_k0_model(t) / exact(t) - 1.0));
    }
    const double t0 = 1.0 + 1e-8;
    const double scaled = std::sqrt(t0 - 1.0) * laplace_k0_model(t0);

    r.values.push_back(cv("value_at_2", laplace_k0_model(2.0),
                          1.0 / std::sqrt(3.0), "closed-form"));
    r.values.push_back(cv("max_rel_dev", mx, 0.139731, "derived-oracle"));
    r.values.push_back(cv("scaled_limit", scaled, 1.0 / std::sqrt(2.0), "closed-form"));

    r.grid.columns = {"t", "model", "exact"};
    for (int i = 0; i <= 8; ++i) {
        const double t = 1.2 + 1.1 * i;
        r.grid.rows.push_back({t, laplace_k0_model(t), exact(t)});
    }
    return r;
}

// -- ground-state energy interpolation ---------------------------------------

double schrodinger_ground_energy(double n) {
    if (!(n > 0.0)) throw InvalidInput("index must be positive");
    const double alpha_star = kPi * kPi * kPi / 4.0 - 2.0;
    const double g = std::tgamma(n / (n + 1.0));
    return kPi * kPi * g * g / (4.0 * std::pow(2.0 * n + alpha_star, 2.0 / (n + 1.0)));
}

CaseResult schrodinger_case(double n) {
    CaseResult r;
    r.case_id = "schrodinger";
    const double e = schrodinger_ground_energy(n);
    const struct {
        double n, ref;
    } refs[] = {{1, 1.0}, {10, 1.5398}, {50, 2.1035}, {200, 2.3376}, {500, 2.4058}};
    bool tabulated = false;
    for (const auto& row : refs)
        if (std::abs(row.n - n) <= 1e-12) {
            r.values.push_back(cv("ground_energy", e, row.ref, "reference-table"));
            tabulated = true;
            break;
        }
    if (!tabulated) r.values.push_back(cv("ground_energy", e));

    r.grid.columns = {"n", "ground_energy"};
    for (double nn : {1.0, 2.0, 4.0, 10.0, 50.0, 200.0, 500.0, 1500.0})
        r.grid.rows.push_back({nn, schrodinger_ground_energy(nn)});
    return r;
}

// -- effective conductivity of regular sphere lattices ------------------------

namespace {

struct LatticeData {
    double cmax;
    double a[6];
    double m1;
    double m2;
};

const LatticeData& lattice_data(Lattice l) {
    static const LatticeData sc{kPi / 6.0,
                                {1.305, 0.231, 0.405, 0.0723, 0.153, 0.0105},
                                kPi / 2.0,
                                0.7};
    static const LatticeData bcc{std::sqrt(3.0) * kPi / 8.0,
                                 {0.129, -0.413, 0.764, 0.257, 0.0113, 0.00562},
                                 std::sqrt(3.0) * kPi / 2.0,
                                 2.4};
    static const LatticeData fcc{std::sqrt(2.0) * kPi / 6.0,
                                 {0.0753, 0.697, -7.41, 0.0420, 0.0231, 9.14e-7},
                                 std::sqrt(2.0) * kPi,
                                 7.1};
    switch (l) {
        case Lattice::SC: return sc;
        case Lattice::BCC: return bcc;
        case Lattice::FCC: return fcc;
    }
    throw InvalidInput("unknown lattice");
}

}  // namespace

double conductivity_cmax(Lattice l) { return lattice_data(l).cmax; }

double conductivity_virial(Lattice l, double c) {
    const LatticeData& d = lattice_data(l);
    if (c < 0.0 || c > d.cmax) throw OutOfRange("volume fraction outside [0, cmax]");
    const double* a = d.a;
    const double den = -1.0 + c +
                       a[0] * std::pow(c, 10.0 / 3.0) *
                           (1.0 + a[1] * std::pow(c, 11.0 / 3.0)) /
                           (1.0 - a[2] * std::pow(c, 7.0 / 3.0)) +
                       a[3] * std::pow(c, 14.0 / 3.0) + a[4] * std::pow(c, 6.0) +
                       a[5] * std::pow(c, 22.0 / 3.0);
    return 1.0 - 3.0 * c / den;
}

double conductivity_aef(Lattice l, double c) {
    const LatticeData& d = lattice_data(l);
    if (c < 0.0 || c >= d.cmax)
        throw OutOfRange("volume fraction outside [0, cmax)");
    const double a1 = d.a[0];
    const double cm = d.cmax;
    const double qm = 1.0 - cm - a1 * std::pow(cm, 10.0 / 3.0);
    const double p3 = -qm * d.m1;
    constexpr int kTerms = 19;

    auto alpha = [&](int j) {
        if (j == 0) return 1.0;
        double t = 0.0;
        if (j == 3) t = 2.0;
        if (j == 10) t = -a1;
        return t - qm * d.m1 / (j * std::pow(cm, j / 3.0));
    };
    auto p1 = [&](double x) {
        double acc = 0.0;
        for (int j = 0; j <= kTerms; ++j) acc += alpha(j) * std::pow(x, j / 3.0);
        return acc;
    };
    const double p2 =
        -(p1(cm) + qm * d.m2) / std::pow(cm, (kTerms + 1) / 3.0);
    const double q = 1.0 - c - a1 * std::pow(c, 10.0 / 3.0);
    const double chi = 1.0 - std::cbrt(c / cm);
    return (p1(c) + p2 * std::pow(c, (kTerms + 1) / 3.0) + p3 * std::log(chi)) / q;
}

CaseResult conductivity_case(Lattice l, double c) {
    CaseResult r;
    r.case_id = "conductivity";
    r.values.push_back(cv("virial", conductivity_virial(l, c)));
    r.values.push_back(cv("aef", conductivity_aef(l, c)));
    r.values.push_back(cv("c_max", conductivity_cmax(l)));

    r.grid.columns = {"c", "virial", "aef"};
    const double cm = conductivity_cmax(l);
    for (int j = 0; j <= 12; ++j) {
        const double cj = cm * j / 13.0;
        r.grid.rows.push_back({cj, conductivity_virial(l, cj), conductivity_aef(l, cj)});
    }
    return r;
}

// -- lattice dispersion ------------------------------------------------------

double dispersion_discrete(double kh) { return 2.0 * std::sin(0.5 * kh); }
double dispersion_continuum(double kh) { return kh; }

double dispersion_higher_order(double kh) {
    const double s = kh * kh;
    return kh * std::sqrt(1.0 - s / 12.0 + s * s / 360.0);
}

double dispersion_quasi(double kh) {
    return kh / std::sqrt(1.0 + kh * kh / 12.0);
}

CaseResult dispersion_case(double kh) {
    if (!(kh > 0.0)) throw InvalidInput("kh must be positive");
    CaseResult r;
    r.case_id = "dispersion";
    const double w = dispersion_discrete(kh);
    r.values.push_back(cv("discrete", w));
    r.values.push_back(cv("continuum", dispersion_continuum(kh)));
    r.values.push_back(cv("higher_order", dispersion_higher_order(kh)));
    r.values.push_back(cv("quasi", dispersion_quasi(kh)));
    const double ce = std::abs(dispersion_continuum(kh) / w - 1.0);
    const double qe = std::abs(dispersion_quasi(kh) / w - 1.0);
    if (std::abs(kh - kPi) <= 1e-12) {
        r.values.push_back(cv("continuum_rel_err", ce, (kPi - 2.0) / 2.0, "closed-form"));
        r.values.push_back(cv("quasi_rel_err", qe, 0.16356336, "derived-oracle"));
    } else {
        r.values.push_back(cv("continuum_rel_err", ce));
        r.values.push_back(cv("quasi_rel_err", qe));
    }

    r.grid.columns = {"kh", "discrete", "continuum", "quasi"};
    for (int j = 1; j <= 10; ++j) {
        const double x = kPi * j / 10.0;
        r.grid.rows.push_back({x, dispersion_discrete(x), dispersion_continuum(x),
                               dispersion_quasi(x)});
    }
    return r;
}

// -- localized-wave approximant ----------------------------------------------

RationalApproximant padeon_approximant() {
    return construct(PowerSeries({0.0, 1.0, 0.0, -0.25}), 1, 2);
}

double padeon_wave(double x, double amplitude) {
    const double u = amplitude * std::exp(-x);
    return evaluate(padeon_approximant(), u);
}

CaseResult padeon_case() {
    CaseResult r;
    r.case_id = "padeon";
    r.values.push_back(cv("wave_at_5", padeon_wave(5.0, 2.0),
                          1.0 / std::cosh(5.0), "closed-form"));
    r.grid.columns = {"x", "approximant", "exact"};
    for (int x = 0; x <= 6; ++x)
        r.grid.rows.push_back({static_cast<double>(x), padeon_wave(x, 2.0),
                               1.0 / std::cosh(static_cast<double>(x))});
    return r;
}

// -- finite-time blow-up from the amplitude expansion --------------------------

PowerSeries blowup_series(double alpha, double t) {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be positive");
    const double e = std::exp(alpha * t);
    const double r = (e - 1.0) / alpha;
    return PowerSeries({0.0, e, e * r});
}

double blowup_time(double alpha, double eps) {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be positive");
    if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
    // The [1/1] amplitude approximant has its pole at 1/r(t); blow-up is
    // where the pole reaches eps, i.e. r(t) = 1/eps with r monotone.
    auto f = [&](double t) { return (std::exp(alpha * t) - 1.0) / alpha - 1.0 / eps; };
    double lo = 0.0, hi = 1.0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e9) throw NoSignChange("no pole crossing below t = 1e9");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CaseResult blowup_case() {
    CaseResult r;
    r.case_id = "blowup";
    const double alpha = 0.1, eps = 0.01;
    const double ref = std::log((alpha + eps) / eps) / alpha;
    r.values.push_back(cv("blowup_time", blowup_time(alpha, eps), ref, "closed-form"));

    r.grid.columns = {"t", "pole_amplitude"};
    for (int t = 4; t <= 24; t += 4) {
        const double rr = (std::exp(alpha * t) - 1.0) / alpha;
        r.grid.rows.push_back({static_cast<double>(t), 1.0 / rr});
    }
    return r;
}

// -- decaying boundary-value profile -------------------------------------------

namespace {

double bvp_a() { return std::cbrt(3.0) * std::tgamma(2.0 / 3.0) / std::tgamma(1.0 / 3.0); }
double bvp_b() {
    return std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0) / (2.0 * std::sqrt(kPi));
}

// RK4 for y'' = xi*y from 0 to L = 12; returns y(L) (or the saturated value
// once |y| exceeds 1e6). Optionally records y every 10 steps up to xi = 5.
double bvp_integrate(double slope, std::vector<double>* record) {
    const double h = 1e-3;
    const int steps = 12000;
    double x = 0.0, y = 1.0, yp = slope;
    if (record) record->reserve(501);
    for (int i = 0; i < steps; ++i) {
        if (record && i % 10 == 0 && i <= 5000) record->push_back(y);
        const double k1y = yp, k1p = x * y;
        const double k2y = yp + 0.5 * h * k1p, k2p = (x + 0.5 * h) * (y + 0.5 * h * k1y);
        const double k3y = yp + 0.5 * h * k2p, k3p = (x + 0.5 * h) * (y + 0.5 * h * k2y);
        const double k4y = yp + h * k3p, k4p = (x + h) * (y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        x += h;
        if (std::abs(y) > 1e6) return y;
    }
    return y;
}

}  // namespace

double bvp_aef_value(double xi) {
    if (xi < 0.0) throw OutOfRange("profile is defined for xi >= 0");
    const double a = bvp_a(), b = bvp_b();
    const double num = 1.0 - a * xi + (2.0 / 3.0) * std::pow(xi, 1.5) -
                       (2.0 / 3.0) * a * std::pow(xi, 2.5) +
                       (32.0 / 5.0) * a * std::pow(xi, 4.0);
    const double den = 1.0 + (32.0 / 5.0) * (a / b) * std::pow(xi, 4.25);
    return num / den * std::exp(-(2.0 / 3.0) * std::pow(xi, 1.5));
}

double bvp_slope() {
    double lo = -0.9, hi = -0.5;
    double flo = bvp_integrate(lo, nullptr);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bvp_integrate(mid, nullptr);
        if ((flo > 0.0) == (fm > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> bvp_oracle_grid() {
    std::vector<double> rec;
    bvp_integrate(bvp_slope(), &rec);
    return rec;
}

CaseResult bvp_case() {
    CaseResult r;
    r.case_id = "bvp";
    const double slope = bvp_slope();
    std::vector<double> rec;
    bvp_integrate(slope, &rec);

    double mx = 0.0;
    for (int i = 0; i < static_cast<int>(rec.size()); ++i) {
        const double xi = i / 100.0;
        if (rec[static_cast<std::size_t>(i)] == 0.0) continue;
        mx = std::max(mx,
                      std::abs(bvp_aef_value(xi) / rec[static_cast<std::size_t>(i)] - 1.0));
    }
    const double b = bvp_b();
    const double asym5 = b * std::pow(5.0, -0.25) * std::exp(-(2.0 / 3.0) * std::pow(5.0, 1.5));

    r.values.push_back(cv("initial_slope", slope, -bvp_a(), "closed-form"));
    r.values.push_back(cv("max_rel_dev", mx, 0.0042606, "derived-oracle"));
    r.values.push_back(cv("far_field_ratio_at_5", bvp_aef_value(5.0) / asym5, 1.0,
                          "closed-form"));

    r.grid.columns = {"xi", "matched_form", "shooting"};
    for (int j = 0; j <= 10; ++j) {
        const double xi = 0.5 * j;
        r.grid.rows.push_back({xi, bvp_aef_value(xi),
                               rec[static_cast<std::size_t>(j * 50)]});
    }
    return r;
}

// -- dispatch ------------------------------------------------------------------

const std::vector<std::string>& case_ids() {
    static const std::vector<std::string> ids = {
        "quintic",      "oscillator", "vdp",       "laplace-tppa",
        "laplace-k0",   "schrodinger", "conductivity", "dispersion",
        "padeon",       "blowup",     "bvp"};
    return ids;
}

CaseResult run_case(const std::string& id, const CaseParams& params) {
    if (id == "quintic") return quintic_case();
    if (id == "oscillator") return oscillator_case(params.n);
    if (id == "vdp") return vdp_case(params.eps);
    if (id == "laplace-tppa") return laplace_tppa_case();
    if (id == "laplace-k0") return laplace_k0_case();
    if (id == "schrodinger") return schrodinger_case(params.n);
    if (id == "conductivity") return conductivity_case(params.lattice, params.c);
    if (id == "dispersion") return dispersion_case(params.kh);
    if (id == "padeon") return padeon_case();
    if (id == "blowup") return blowup_case();
    if (id == "bvp") return bvp_case();
    throw InvalidInput("unknown case id '" + id + "'");
}

}  // namespace asympt
