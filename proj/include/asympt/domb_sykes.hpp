// Domb-Sykes ratio analysis: locate the nearest singularity of a series
// from the trend of successive coefficient ratios r_n = C_n/C_{n-1}
// plotted against 1/n, plus growth and sign-pattern diagnostics.
#pragma once

#include <utility>
#include <vector>

#include "asympt/series.hpp"

namespace asympt {

enum class SignPattern { SameSign, Alternating, PeriodFour, Irregular };

struct DombSykesFit {
    double eps0 = 0.0;       // estimated singularity distance, 1/|intercept|
    double alpha = 0.0;      // estimated exponent, -slope/intercept - 1
    double intercept = 0.0;  // fitted r at 1/n -> 0
    double slope = 0.0;      // fitted d r / d(1/n)
    double fit_residual = 0.0;  // weighted RMS misfit of the ratio line
    SignPattern pattern = SignPattern::Irregular;
    int points_used = 0;
    bool factorial_growth = false;  // |r_n| grows ~ k*n
    double factorial_k = 0.0;
};

struct SquareRatioFit {
    double eps0 = 0.0;
    double intercept = 0.0;
    double slope = 0.0;
    int points_used = 0;
};

// Weighted least squares (weights n^2) of r_n against 1/n for
// n = n_min..order. Requires n_min >= 1, at least three points, and no
// vanishing C_{n-1} inside the window. Throws DegenerateFit when the
// intercept vanishes (no finite singularity visible at this order).
DombSykesFit fit(const PowerSeries& f, int n_min);

// The (1/n, r_n) pairs the fit consumes, for plotting.
std::vector<std::pair<double, double>> plot_points(const PowerSeries& f,
                                                   int n_min);

// Sign classification over the nonzero coefficients.
SignPattern sign_pattern(const PowerSeries& f);

// Two-step ratio variant |C_n/C_{n-2}|^{1/2} against 1/n, immune to
// period-2 sign/zero structure; pairs with a vanishing member are skipped.
SquareRatioFit square_ratio_fit(const PowerSeries& f, int n_min);

}  // namespace asympt
