#include "asympt/baryinterp.hpp"

#include <algorithm>
#include <cmath>

#include "asympt/errors.hpp"

namespace asympt {

BarycentricInterpolant::BarycentricInterpolant(std::vector<double> nodes,
                                               std::vector<double> values,
                                               std::vector<double> weights)
    : x_(std::move(nodes)), f_(std::move(values)), w_(std::move(weights)) {
    if (x_.size() < 2) throw TooFewPoints("interpolation needs at least two nodes");
    if (x_.size() != f_.size() || x_.size() != w_.size())
        throw InvalidInput("nodes, values and weights must have equal length");

    double span = 0.0;
    for (double v : x_) span = std::max(span, std::abs(v));
    std::vector<double> sorted = x_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (std::abs(sorted[i + 1] - sorted[i]) <= 1e-14 * std::max(span, 1.0))
            throw DuplicateNodes("coincident interpolation nodes");
}

double BarycentricInterpolant::operator()(double t) const {
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (std::abs(t - x_[i]) <= 1e-14 * std::max(1.0, std::abs(x_[i])))
            return f_[i];
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        const double r = w_[i] / (t - x_[i]);
        num += r * f_[i];
        den += r;
    }
    if (den == 0.0) throw EvaluationAtPole("barycentric denominator vanishes");
    return num / den;
}

double BarycentricInterpolant::denominator(double t) const {
    double den = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i) den += w_[i] / (t - x_[i]);
    return den;
}

BarycentricInterpolant build_interpolant(const std::vector<double>& nodes,
                                         const std::vector<double>& values,
                                         WeightScheme scheme,
                                         const std::vector<double>& custom_weights) {
    std::vector<double> w;
    switch (scheme) {
        case WeightScheme::AlternatingSigns:
            w.resize(nodes.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = (i % 2 == 0) ? 1.0 : -1.0;
            break;
        case WeightScheme::Custom:
            if (custom_weights.size() != nodes.size())
                throw InvalidInput("custom weights must match the node count");
            w = custom_weights;
            break;
    }
    return BarycentricInterpolant(nodes, values, w);
}

std::vector<double> equispaced_polynomial_weights(int n) {
    if (n < 2) throw TooFewPoints("need at least two nodes");
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double lb = std::lgamma(n) - std::lgamma(i + 1.0) -
                          std::lgamma(static_cast<double>(n - i));
        w[static_cast<std::size_t>(i)] = (i % 2 == 0 ? 1.0 : -1.0) * std::exp(lb);
    }
    return w;
}

}  // namespace asympt
