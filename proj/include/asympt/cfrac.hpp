// Regular C-fraction expansion of a power series,
//   f = head + c0/(1 + c1*x/(1 + c2*x/(1 + ...))),
// built by the quotient-difference scheme, with convergent evaluation.
#pragma once

#include <vector>

#include "asympt/series.hpp"

namespace asympt {

struct CFraction {
    double head = 0.0;       // additive constant in front of the fraction
    std::vector<double> c;   // c[0] is the fraction's top numerator
    int breakdown_index = -1;  // first index the scheme could not produce, -1 if none
    int depth() const { return static_cast<int>(c.size()) - 1; }
};

// Quotient-difference construction. Requires depth+1 trusted coefficients
// and f(0) != 0. A vanishing QD pivot stops construction cleanly: the
// returned fraction is exact up to the recorded breakdown index.
CFraction from_series(const PowerSeries& f, int depth);

// Bottom-up evaluation of the depth-truncated fraction.
double evaluate(const CFraction& cf, double x, int depth);

struct ConvergentSeq {
    std::vector<double> values;  // entry k = evaluation at depth k
    std::vector<bool> valid;
};

ConvergentSeq convergents(const CFraction& cf, double x);

// Maclaurin re-expansion of the depth-truncated fraction (for contact
// checks and cross-module comparisons).
PowerSeries to_series(const CFraction& cf, int depth, int order);

}  // namespace asympt
