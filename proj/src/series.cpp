#include "asympt/series.hpp"

#include <algorithm>
#include <cmath>

namespace asympt {

namespace {

void check_same_kind(const PowerSeries& a, const PowerSeries& b) {
    if (a.kind() != b.kind())
        throw MismatchedVariable("series expanded about different points");
}

void check_finite(const std::vector<double>& c) {
    for (double v : c)
        if (!std::isfinite(v)) throw InvalidInput("non-finite series coefficient");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<double> coeffs, VarKind kind)
    : c_(std::move(coeffs)), kind_(kind) {
    if (c_.empty()) throw InvalidInput("series needs at least one coefficient");
    check_finite(c_);
}

PowerSeries PowerSeries::zero(int order, VarKind kind) {
    if (order < 0) throw InvalidInput("negative series order");
    return PowerSeries(std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0), kind);
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw InvalidInput("truncation order out of range");
    return PowerSeries(std::vector<double>(c_.begin(), c_.begin() + new_order + 1), kind_);
}

double PowerSeries::evaluate(double x) const {
    double acc = 0.0;
    for (int i = order(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
    return acc;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    check_same_kind(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
    return PowerSeries(std::move(c), a.kind());
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
    return add(a, scale(b, -1.0));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    check_same_kind(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= b.order(); ++j)
            if (i <= a.order()) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return PowerSeries(std::move(c), a.kind());
}

PowerSeries scale(const PowerSeries& a, double s) {
    std::vector<double> c = a.coeffs();
    for (double& v : c) v *= s;
    return PowerSeries(std::move(c), a.kind());
}

PowerSeries derivative(const PowerSeries& f) {
    if (f.order() == 0) return PowerSeries({0.0}, f.kind());
    std::vector<double> c(static_cast<std::size_t>(f.order()));
    for (int i = 1; i <= f.order(); ++i) c[static_cast<std::size_t>(i - 1)] = i * f[i];
    return PowerSeries(std::move(c), f.kind());
}

PowerSeries invert(const PowerSeries& f) {
    if (f[0] == 0.0) throw InvalidInput("cannot invert a series vanishing at 0");
    int n = f.order();
    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
    b[0] = 1.0 / f[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += f.at(i) * b[static_cast<std::size_t>(k - i)];
        b[static_cast<std::size_t>(k)] = -s / f[0];
    }
    return PowerSeries(std::move(b), f.kind());
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
    return mul(a, invert(b.truncated(std::min(a.order(), b.order()))));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    check_same_kind(f, g);
    if (g[0] != 0.0) throw InvalidInput("composition requires inner series with g(0) = 0");
    int n = std::min(f.order(), g.order());
    // Horner over the outer coefficients with truncated products.
    PowerSeries acc = PowerSeries::zero(n, f.kind());
    PowerSeries gt = g.truncated(n);
    for (int i = std::min(f.order(), n); i >= 0; --i) {
        acc = mul(acc, gt);
        std::vector<double> c = acc.coeffs();
        c[0] += f[i];
        acc = PowerSeries(std::move(c), f.kind());
    }
    return acc;
}

PowerSeries exp(const PowerSeries& f) {
    int n = f.order();
    std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
    g[0] = std::exp(f[0]);
    // g' = f' g  =>  k g_k = sum_{i=1..k} i f_i g_{k-i}
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += i * f[i] * g[static_cast<std::size_t>(k - i)];
        g[static_cast<std::size_t>(k)] = s / k;
    }
    return PowerSeries(std::move(g), f.kind());
}

PowerSeries log(const PowerSeries& f) {
    if (f[0] <= 0.0) throw InvalidInput("series log requires f(0) > 0");
    int n = f.order();
    std::vector<double> h(static_cast<std::size_t>(n) + 1, 0.0);
    h[0] = std::log(f[0]);
    // f' = h' f  =>  k f_k = sum_{i=1..k} i h_i f_{k-i}
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i < k; ++i) s += i * h[static_cast<std::size_t>(i)] * f[k - i];
        h[static_cast<std::size_t>(k)] = (k * f[k] - s) / (k * f[0]);
    }
    return PowerSeries(std::move(h), f.kind());
}

PowerSeries pow(const PowerSeries& f, double r) {
    double ri = std::round(r);
    if (ri == r && std::abs(r) < 64.0) {
        int e = static_cast<int>(std::abs(ri));
        PowerSeries acc = PowerSeries::zero(f.order(), f.kind());
        {
            std::vector<double> c = acc.coeffs();
            c[0] = 1.0;
            acc = PowerSeries(std::move(c), f.kind());
        }
        PowerSeries base = f;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return ri < 0 ? invert(acc) : acc;
    }
    if (f[0] <= 0.0) throw InvalidInput("fractional power requires f(0) > 0");
    return exp(scale(log(f), r));
}

PowerSeries revert(const PowerSeries& f) {
    if (f.order() < 1) throw InvalidInput("reversion needs a linear term");
    if (f[0] != 0.0) throw InvalidInput("reversion requires f(0) = 0");
    if (f[1] == 0.0) throw InvalidInput("reversion requires f'(0) != 0");
    int n = f.order();
    std::vector<double> id(static_cast<std::size_t>(n) + 1, 0.0);
    if (n >= 1) id[1] = 1.0;
    PowerSeries x(id, f.kind());
    std::vector<double> g0(static_cast<std::size_t>(n) + 1, 0.0);
    g0[1] = 1.0 / f[1];
    PowerSeries g(g0, f.kind());
    // Pad f' to order n so the composition below keeps full order; the
    // padded coefficient never reaches the update because res starts at
    // order 2.
    std::vector<double> fpc = derivative(f).coeffs();
    fpc.resize(static_cast<std::size_t>(n) + 1, 0.0);
    PowerSeries fp(std::move(fpc), f.kind());
    // Newton iteration on formal series; quadratic convergence in the
    // number of correct coefficients.
    int steps = 2;
    for (int m = 1; m < n + 1; m *= 2) ++steps;
    for (int it = 0; it < steps; ++it) {
        PowerSeries res = sub(compose(f, g), x);
        PowerSeries den = compose(fp, g);          // den(0) = f'(0) != 0
        g = sub(g, divide(res, den));
    }
    return g;
}

PowerSeries euler_transform(const PowerSeries& f, double eps0) {
    if (eps0 == 0.0) throw InvalidInput("euler transform requires eps0 != 0");
    if (f.kind() != VarKind::AtZero)
        throw MismatchedVariable("euler transform applies to expansions about 0");
    int n = f.order();
    // eps(t) = t/(1 + t/eps0): substitute and re-expand.
    std::vector<double> den(static_cast<std::size_t>(n) + 1, 0.0);
    den[0] = 1.0;
    if (n >= 1) den[1] = 1.0 / eps0;
    std::vector<double> tnum(static_cast<std::size_t>(n) + 1, 0.0);
    if (n >= 1) tnum[1] = 1.0;
    PowerSeries inner =
        mul(PowerSeries(tnum, f.kind()), invert(PowerSeries(den, f.kind())));
    return compose(f, inner);
}

PowerSeries singularity_series(const SingularityModel& s, int order) {
    if (s.location == 0.0) throw InvalidInput("singularity location must be nonzero");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    if (s.is_log) {
        // A*log(1 - eps/eps0) = -A * sum_k (eps/eps0)^k / k
        for (int k = 1; k <= order; ++k)
            c[static_cast<std::size_t>(k)] =
                -s.amplitude / (k * std::pow(s.location, k));
        return PowerSeries(std::move(c), VarKind::AtZero);
    }
    // A*(1 - eps/eps0)^alpha via the binomial ratio recurrence.
    double term = s.amplitude;
    c[0] = term;
    for (int k = 0; k < order; ++k) {
        term *= (s.exponent - k) / (k + 1) * (-1.0 / s.location);
        c[static_cast<std::size_t>(k) + 1] = term;
    }
    return PowerSeries(std::move(c), VarKind::AtZero);
}

PowerSeries extract_singularity(const PowerSeries& f, const SingularityModel& s,
                                ExtractionRule rule) {
    PowerSeries model = singularity_series(s, f.order());
    if (rule == ExtractionRule::Multiplicative) return divide(f, model);
    return sub(f, model);
}

}  // namespace asympt
