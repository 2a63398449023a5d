#include "asympt/domb_sykes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "asympt/errors.hpp"

namespace asympt {

namespace {

struct Line {
    double intercept = 0.0;
    double slope = 0.0;
    double rms = 0.0;  // weighted RMS residual
    double r2 = 0.0;   // weighted coefficient of determination
};

// Weighted least squares of y against x for the model y = b + m*x.
Line weighted_line(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& w) {
    Eigen::Matrix2d ata = Eigen::Matrix2d::Zero();
    Eigen::Vector2d atb = Eigen::Vector2d::Zero();
    double wsum = 0.0, ymean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double wi = w[i];
        ata(0, 0) += wi;
        ata(0, 1) += wi * x[i];
        ata(1, 1) += wi * x[i] * x[i];
        atb(0) += wi * y[i];
        atb(1) += wi * x[i] * y[i];
        wsum += wi;
        ymean += wi * y[i];
    }
    ata(1, 0) = ata(0, 1);
    ymean /= wsum;
    const Eigen::Vector2d sol = ata.ldlt().solve(atb);
    Line ln;
    ln.intercept = sol(0);
    ln.slope = sol(1);
    double ssr = 0.0, sst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = ln.intercept + ln.slope * x[i] - y[i];
        ssr += w[i] * e * e;
        sst += w[i] * (y[i] - ymean) * (y[i] - ymean);
    }
    ln.rms = std::sqrt(ssr / wsum);
    ln.r2 = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
    return ln;
}

void check_window(const PowerSeries& f, int n_min) {
    if (n_min < 1) throw InvalidInput("ratio analysis needs n_min >= 1");
    if (f.order() - n_min + 1 < 3)
        throw TooFewPoints("ratio analysis needs at least three points; order " +
                           std::to_string(f.order()) + " with n_min " +
                           std::to_string(n_min) + " gives fewer");
}

}  // namespace

std::vector<std::pair<double, double>> plot_points(const PowerSeries& f,
                                                   int n_min) {
    check_window(f, n_min);
    std::vector<std::pair<double, double>> pts;
    for (int n = n_min; n <= f.order(); ++n) {
        if (f[n - 1] == 0.0)
            throw ZeroCoefficientInWindow(
                "coefficient " + std::to_string(n - 1) +
                " vanishes inside the ratio window");
        pts.emplace_back(1.0 / n, f[n] / f[n - 1]);
    }
    return pts;
}

DombSykesFit fit(const PowerSeries& f, int n_min) {
    const auto pts = plot_points(f, n_min);

    std::vector<double> xs, ys, ws, ns;
    for (int n = n_min; n <= f.order(); ++n) {
        const auto& p = pts[static_cast<std::size_t>(n - n_min)];
        xs.push_back(p.first);
        ys.push_back(p.second);
        ws.push_back(static_cast<double>(n) * n);
        ns.push_back(static_cast<double>(n));
    }
    const Line ln = weighted_line(xs, ys, ws);

    double rscale = 0.0;
    for (double r : ys) rscale = std::max(rscale, std::abs(r));
    if (std::abs(ln.intercept) <= 1e-10 * std::max(rscale, 1e-300))
        throw DegenerateFit(
            "ratio intercept vanishes; no finite singularity at this order");

    DombSykesFit out;
    out.intercept = ln.intercept;
    out.slope = ln.slope;
    out.fit_residual = ln.rms;
    out.eps0 = 1.0 / std::abs(ln.intercept);
    out.alpha = -ln.slope / ln.intercept - 1.0;
    out.points_used = static_cast<int>(xs.size());
    out.pattern = sign_pattern(f);

    // Factorial growth shows as |r_n| rising linearly in n.
    std::vector<double> ays(ys.size()), ones(ys.size(), 1.0);
    for (std::size_t i = 0; i < ys.size(); ++i) ays[i] = std::abs(ys[i]);
    const Line gl = weighted_line(ns, ays, ones);
    out.factorial_k = gl.slope;
    out.factorial_growth = gl.slope > 0.25 && gl.r2 > 0.98;
    return out;
}

SignPattern sign_pattern(const PowerSeries& f) {
    std::vector<int> idx;
    std::vector<int> sgn;
    for (int i = 0; i <= f.order(); ++i) {
        if (f[i] == 0.0) continue;
        idx.push_back(i);
        sgn.push_back(f[i] > 0.0 ? 1 : -1);
    }
    if (sgn.size() < 2) return SignPattern::SameSign;

    bool same = true;
    for (int s : sgn) same = same && (s == sgn[0]);
    if (same) return SignPattern::SameSign;

    // Sign fixed by index parity.
    bool alt = true;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const int expect = (idx[k] % 2 == idx[0] % 2) ? sgn[0] : -sgn[0];
        alt = alt && (sgn[k] == expect);
    }
    if (alt) return SignPattern::Alternating;

    // Antiperiod 2: sign flips every second index (++-- style).
    int base[4] = {0, 0, 0, 0};
    bool p4 = true;
    for (std::size_t k = 0; k < idx.size() && p4; ++k) {
        const int r = idx[k] % 4;
        if (base[r] == 0) {
            base[r] = sgn[k];
            const int opp = (r + 2) % 4;
            if (base[opp] != 0 && base[opp] != -sgn[k]) p4 = false;
            base[opp] = -sgn[k];
        } else if (base[r] != sgn[k]) {
            p4 = false;
        }
    }
    if (p4) return SignPattern::PeriodFour;
    return SignPattern::Irregular;
}

SquareRatioFit square_ratio_fit(const PowerSeries& f, int n_min) {
    if (n_min < 2) throw InvalidInput("square-ratio analysis needs n_min >= 2");
    std::vector<double> xs, ys, ws;
    for (int n = n_min; n <= f.order(); ++n) {
        if (f[n] == 0.0 || f[n - 2] == 0.0) continue;
        xs.push_back(1.0 / n);
        ys.push_back(std::sqrt(std::abs(f[n] / f[n - 2])));
        ws.push_back(static_cast<double>(n) * n);
    }
    if (xs.size() < 3)
        throw TooFewPoints("square-ratio analysis needs at least three usable pairs");
    const Line ln = weighted_line(xs, ys, ws);

    double rscale = 0.0;
    for (double r : ys) rscale = std::max(rscale, std::abs(r));
    if (std::abs(ln.intercept) <= 1e-10 * std::max(rscale, 1e-300))
        throw DegenerateFit(
            "square-ratio intercept vanishes; no finite singularity at this order");

    SquareRatioFit out;
    out.intercept = ln.intercept;
    out.slope = ln.slope;
    out.eps0 = 1.0 / std::abs(ln.intercept);
    out.points_used = static_cast<int>(xs.size());
    return out;
}

}  // namespace asympt
