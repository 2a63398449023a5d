// Sequence acceleration: Aitken delta-squared, the Shanks transformation,
// the Wynn epsilon recursion, and a convergence-type classifier.
#pragma once

#include <vector>

#include "asympt/errors.hpp"

namespace asympt {

struct AitkenResult {
    std::vector<double> values;  // length = input length - 2
    std::vector<bool> valid;     // false where the second difference underflowed
};

// T_n = S_n - (dS_n)^2 / d2S_n over a sliding window of three.
AitkenResult aitken(const std::vector<double>& s);

class EpsilonTable {
public:
    EpsilonTable(int source_len, int k_max);

    int source_len() const { return source_len_; }
    int k_max() const { return k_max_; }
    int column_size(int k) const { return source_len_ - k; }

    double entry(int k, int n) const;
    bool is_valid(int k, int n) const;
    void set(int k, int n, double v, bool ok);

    // Deepest valid even-column entry (the accelerated estimate); falls
    // back to the last input iterate when nothing deeper is valid.
    double best() const;

private:
    int source_len_, k_max_;
    std::vector<double> v_;
    std::vector<bool> ok_;
    std::size_t idx(int k, int n) const;
};

// Wynn recursion T_{k+1}^(n) = T_{k-1}^(n+1) + 1/(T_k^(n+1) - T_k^(n)).
// Underflowing denominators mark entries invalid; invalidity propagates to
// all descendants. Even columns carry the estimates.
EpsilonTable wynn_epsilon(const std::vector<double>& s, int k_max);

// Order-k Shanks value at offset p, computed through the epsilon recursion
// (equals the even column T_{2k}^(p)).
double shanks(const std::vector<double>& s, int k, int p);

// Determinant form of the Shanks transformation, usable as a cross-check
// for k <= 3; ill-conditioned beyond that.
double shanks_determinant(const std::vector<double>& s, int k, int p);

enum class ConvergenceKind { Superlinear, Linear, Logarithmic, Divergent, Unknown };

struct ConvergenceClass {
    ConvergenceKind kind = ConvergenceKind::Unknown;
    double ratio_estimate = 0.0;  // extrapolated limit of successive difference ratios
};

// Classifies from the difference ratios (S_{n+1}-S_n)/(S_n-S_{n-1})
// extrapolated linearly against 1/(n+1); the intercept estimates the error
// ratio a. a -> 0 superlinear, 0 < a < 1 linear, a = 1 logarithmic,
// |a| > 1 divergent.
ConvergenceClass classify(const std::vector<double>& s);

}  // namespace asympt
