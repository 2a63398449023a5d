// Implicit (algebraic) approximation: fit a bivariate polynomial
// F(eps, g) with F(eps, g(eps)) = O(eps^{N+1}), where g = f - f(0) and the
// coefficient of g^1 is pinned to 1. Branch tracking solves F(eps, .) = 0
// pointwise. Also hosts the even soliton-profile series and the matching
// amplitude condition solved by bisection.
#pragma once

#include <complex>
#include <vector>

#include "asympt/series.hpp"

namespace asympt {

class ImplicitPoly {
public:
    ImplicitPoly(int p, double shift);

    int p() const { return p_; }
    double shift() const { return shift_; }
    // Coefficient of eps^i g^k (zero when i + k > p).
    double coeff(int i, int k) const;
    void set_coeff(int i, int k, double v);

    bool degenerate = false;  // rank-deficient but consistent fit
    int rank_deficiency = 0;

    double operator()(double eps, double g) const;

private:
    int p_;
    double shift_;
    std::vector<double> c_;  // dense (p+1) x (p+1), index i*(p+1)+k
};

// Number of free coefficients of the degree-p form: (p^2+3p-2)/2.
int implicit_unknowns(int p);

// Fit F so the residual starts at order eps^{N+1}, N = implicit_unknowns(p).
// Requires f.order() >= N. Rank-deficient consistent systems take the
// least-norm coefficient set and mark the result degenerate.
ImplicitPoly construct_implicit(const PowerSeries& f, int p);

// Residual series F(eps, f(eps) - shift) through f's trusted order.
PowerSeries implicit_residual(const ImplicitPoly& F, const PowerSeries& f);

// All solutions f = shift + g of F(eps, g) = 0 at fixed eps.
std::vector<std::complex<double>> branches(const ImplicitPoly& F, double eps);

// Even soliton-profile series in z = xi^2: coefficients C_{2k} with
//   C_{2k+2} = (C_{2k} - sum_{i+j+l=k} C_{2i} C_{2j} C_{2l}) / (4 (k+1)^2),
// C_0 = a0. Returned with order_in_z + 1 coefficients.
PowerSeries soliton_series(double a0, int order_in_z);

// Amplitude a0 at which the [N/N] approximant (in z) of the profile decays:
// bisection on the top numerator coefficient over [lo, hi] to width 1e-10.
double soliton_a0(int N, double lo, double hi);

}  // namespace asympt
