// Two-point Pade approximants: rational functions matching a Maclaurin
// expansion at zero together with a descending expansion at infinity.
// Also: asymptotically-equivalent rational forms on a fractional-power
// lattice, expansion of a rational at infinity, and the two-coefficient
// power-law (Sommerfeld-style) fit.
#pragma once

#include <vector>

#include "asympt/pade.hpp"
#include "asympt/series.hpp"

namespace asympt {

struct TwoPointData {
    PowerSeries at_zero;      // kind AtZero: c_0 + c_1 t + ...
    PowerSeries at_infinity;  // kind AtInfinity: d_0 + d_1/t + ... times t^far_offset
    int k_zero = 0;           // how many near conditions to impose
    int far_offset = 0;       // leading power at infinity
};

// Build the [n/m] two-point approximant: k_zero conditions at t = 0, the
// remaining n+m+1-k_zero at t = infinity. Requires far_offset == n-m when
// any far condition is used. k_zero == n+m+1 reduces to the one-point case.
RationalApproximant construct_tppa(const TwoPointData& d, int n, int m);

// Descending expansion of r at infinity: returns e_0..e_order with
//   r(t) = t^(n-m) * (e_0 + e_1/t + ...),
// as an AtInfinity series. Requires a nonvanishing denominator leading
// coefficient (otherwise the true leading power is lower than n-m).
PowerSeries far_expansion(const RationalApproximant& r, int order);

// Rational form on the exponent lattice {j/q}: terms carry integer lattice
// indices, exponent = index/q.
struct FracRational {
    int q = 1;
    std::vector<int> num_idx;
    std::vector<double> num_c;
    std::vector<int> den_idx;
    std::vector<double> den_c;
    double operator()(double z) const;  // z > 0
};

// Fit a lattice rational to near data (lattice coefficients of z^0, z^(1/q),
// ... in order) plus one far condition: leading behavior far_amp * z^(p/q)
// where p = max(num_indices) - max(den_indices). The denominator's lowest
// term is pinned to 1. Rank-deficient but consistent systems take the
// least-norm member of the solution family; inconsistent data throws
// InconsistentAsymptotics.
FracRational rational_aef(const std::vector<double>& near, int q,
                          double far_amp, int far_index,
                          const std::vector<int>& num_indices,
                          const std::vector<int>& den_indices);

// Near re-expansion of a lattice rational: lattice coefficients 0..len-1.
// Requires a nonzero denominator constant (lattice index 0) term.
std::vector<double> frac_near_expansion(const FracRational& r, int len);

// Two-coefficient power-law fit f ~ (1 + A x)^mu from c_0 = 1, c_1, c_2.
struct SommerfeldFit {
    double A = 0.0;
    double mu = 0.0;
    double operator()(double x) const;
};
SommerfeldFit sommerfeld_fit(const PowerSeries& f);

}  // namespace asympt
