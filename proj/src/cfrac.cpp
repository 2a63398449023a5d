#include "asympt/cfrac.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "asympt/errors.hpp"

namespace asympt {

namespace {

// A QD pivot this small relative to its row is treated as an exact zero:
// either the input is rational (the fraction terminates) or the scheme has
// hit a genuine breakdown. Both stop production cleanly.
constexpr double kPivotTol = 1e-13;

double row_scale(const std::vector<double>& row) {
    double s = 0.0;
    for (double v : row) s = std::max(s, std::abs(v));
    return std::max(s, 1.0);
}

}  // namespace

CFraction from_series(const PowerSeries& f, int depth) {
    if (depth < 0) throw InvalidInput("cfrac depth must be nonnegative");
    if (f.order() < depth)
        throw InsufficientCoefficients(
            "cfrac depth " + std::to_string(depth) + " needs " +
            std::to_string(depth + 1) + " trusted coefficients, got " +
            std::to_string(f.order() + 1));
    if (f[0] == 0.0)
        throw InvalidInput("cfrac requires a nonzero constant term");

    CFraction cf;
    cf.c.reserve(static_cast<std::size_t>(depth) + 1);
    cf.c.push_back(f[0]);
    if (depth == 0) return cf;

    double cscale = 0.0;
    for (int k = 0; k <= depth; ++k) cscale = std::max(cscale, std::abs(f[k]));

    // q_1 row: q1^{(k)} = c_{k+1}/c_k. A vanishing interior coefficient
    // truncates the row; heads further down then become unreachable.
    std::vector<double> q;
    for (int k = 0; k < depth; ++k) {
        if (std::abs(f[k]) <= kPivotTol * cscale) break;
        q.push_back(f[k + 1] / f[k]);
    }
    std::vector<double> e_prev(q.size() + 1, 0.0);  // e_0 row is identically 0

    bool broke = false;
    while (static_cast<int>(cf.c.size()) <= depth) {
        // c_{2j-1} = -q_j^{(0)}
        if (q.empty() || std::abs(q[0]) <= kPivotTol * row_scale(q)) {
            broke = true;
            break;
        }
        cf.c.push_back(-q[0]);
        if (static_cast<int>(cf.c.size()) > depth) break;

        // e_j^{(k)} = q_j^{(k+1)} - q_j^{(k)} + e_{j-1}^{(k+1)}
        std::vector<double> e(q.size() - 1);
        for (std::size_t k = 0; k + 1 < q.size(); ++k)
            e[k] = q[k + 1] - q[k] + e_prev[k + 1];

        // c_{2j} = -e_j^{(0)}
        if (e.empty() || std::abs(e[0]) <= kPivotTol * row_scale(q)) {
            broke = true;
            break;
        }
        cf.c.push_back(-e[0]);
        if (static_cast<int>(cf.c.size()) > depth) break;

        // q_{j+1}^{(k)} = q_j^{(k+1)} e_j^{(k+1)} / e_j^{(k)}
        std::vector<double> qn;
        for (std::size_t k = 0; k + 1 < e.size(); ++k) {
            const double ref = std::max(
                {std::abs(q[k + 1]), std::abs(e[k + 1]), std::abs(e[k]), 1.0});
            if (std::abs(e[k]) <= kPivotTol * ref) break;
            qn.push_back(q[k + 1] * e[k + 1] / e[k]);
        }
        q = std::move(qn);
        e_prev = std::move(e);
    }
    if (broke) cf.breakdown_index = static_cast<int>(cf.c.size());
    return cf;
}

namespace {

// Bottom-up evaluation; returns NaN/inf on breakdown instead of throwing.
double eval_raw(const CFraction& cf, double x, int depth) {
    double t = 1.0;
    for (int i = depth; i >= 1; --i)
        t = 1.0 + cf.c[static_cast<std::size_t>(i)] * x / t;
    return cf.head + cf.c[0] / t;
}

}  // namespace

double evaluate(const CFraction& cf, double x, int depth) {
    if (depth < 0 || depth > cf.depth())
        throw InvalidInput("cfrac evaluation depth out of range");
    const double v = eval_raw(cf, x, depth);
    if (!std::isfinite(v))
        throw EvaluationBreakdown("cfrac tail vanished during evaluation");
    return v;
}

ConvergentSeq convergents(const CFraction& cf, double x) {
    ConvergentSeq out;
    const int d = cf.depth();
    out.values.resize(static_cast<std::size_t>(d) + 1);
    out.valid.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        const double v = eval_raw(cf, x, k);
        out.values[static_cast<std::size_t>(k)] = v;
        out.valid[static_cast<std::size_t>(k)] = std::isfinite(v);
    }
    return out;
}

PowerSeries to_series(const CFraction& cf, int depth, int order) {
    if (depth < 0 || depth > cf.depth())
        throw InvalidInput("cfrac depth out of range");
    if (order < 0) throw InvalidInput("series order must be nonnegative");

    std::vector<double> one(static_cast<std::size_t>(order) + 1, 0.0);
    one[0] = 1.0;
    const PowerSeries unit(one);

    // Each tail has constant term 1, so inversion below is always defined.
    PowerSeries t = unit;
    for (int i = depth; i >= 1; --i) {
        std::vector<double> lc(static_cast<std::size_t>(order) + 1, 0.0);
        if (order >= 1) lc[1] = cf.c[static_cast<std::size_t>(i)];
        t = add(unit, mul(PowerSeries(lc), invert(t)));
    }
    PowerSeries body = scale(invert(t), cf.c[0]);
    std::vector<double> hc(static_cast<std::size_t>(order) + 1, 0.0);
    hc[0] = cf.head;
    return add(PowerSeries(hc), body);
}

}  // namespace asympt
