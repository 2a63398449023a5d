// Trigonometric rational approximation of the odd square wave:
// an odd-sine numerator over an even-cosine denominator, constructed so the
// mismatch against the square wave's Fourier data starts beyond the last
// retained harmonic. Includes Gibbs-overshoot measurement utilities.
#pragma once

#include <functional>
#include <vector>

namespace asympt {

// F(x) = sum_j q[j] sin((2j+1)x) / (1 + sum_i s[i-1] cos(2ix)).
struct FourierPadeSign {
    int N = 0;
    std::vector<double> q;  // numerator, q[j] on sin((2j+1)x)
    std::vector<double> s;  // denominator, s[i-1] on cos(2ix)
    double operator()(double x) const;
};

// Build with J+1 = floor((N-1)/2)+1 sine terms and M = floor(N/2) cosine
// terms; the denominator solves the annihilation conditions on the first M
// neglected odd harmonics.
FourierPadeSign fourier_pade_sign(int N);

// Plain truncated Fourier sum of the square wave: (4/pi) sum sin((2j+1)x)/(2j+1).
struct SquareWavePartialSum {
    int terms = 1;
    double operator()(double x) const;
};

// max over (0, pi) of f minus the plateau value 1, located on a uniform
// grid (at least 1000 points) and sharpened by golden-section refinement.
double gibbs_overshoot(const std::function<double(double)>& f, int grid = 2000);

// Closed-form factorial expression for the denominator coefficients.
// Matches the solved system only for i <= 1; kept as a cross-check.
double s_reference(int N, int i);

}  // namespace asympt
