// Barycentric rational interpolation on arbitrary nodes. The default
// alternating-sign weights give the pole-free linear blend; custom weights
// cover the classical polynomial interpolant and everything between.
#pragma once

#include <vector>

namespace asympt {

enum class WeightScheme { AlternatingSigns, Custom };

class BarycentricInterpolant {
public:
    BarycentricInterpolant(std::vector<double> nodes, std::vector<double> values,
                           std::vector<double> weights);

    double operator()(double t) const;
    // sum_i w_i / (t - x_i); its sign changes locate real poles.
    double denominator(double t) const;

    const std::vector<double>& nodes() const { return x_; }
    const std::vector<double>& values() const { return f_; }
    const std::vector<double>& weights() const { return w_; }

private:
    std::vector<double> x_, f_, w_;
};

BarycentricInterpolant build_interpolant(
    const std::vector<double>& nodes, const std::vector<double>& values,
    WeightScheme scheme = WeightScheme::AlternatingSigns,
    const std::vector<double>& custom_weights = {});

// Weights (-1)^i * C(n-1, i) reproducing the degree-(n-1) polynomial
// interpolant on n equispaced nodes.
std::vector<double> equispaced_polynomial_weights(int n);

}  // namespace asympt
