// One-point Pade approximants: construction from a truncated series,
// the Pade table, pole/zero diagnostics with Froissart-doublet detection,
// the conjugate-weighted diagonal smoothing blend, and the diagonal/
// off-diagonal bounds triple.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "asympt/series.hpp"

namespace asympt {

class RationalApproximant {
public:
    RationalApproximant() : num_{0.0}, den_{1.0} {}
    // den[0] must be 1 (normalization).
    RationalApproximant(std::vector<double> num, std::vector<double> den);

    int n() const { return static_cast<int>(num_.size()) - 1; }
    int m() const { return static_cast<int>(den_.size()) - 1; }
    const std::vector<double>& num() const { return num_; }
    const std::vector<double>& den() const { return den_; }

    double operator()(double x) const;
    std::complex<double> operator()(std::complex<double> x) const;

private:
    std::vector<double> num_, den_;
};

struct PoleInfo {
    std::complex<double> location;
    double residue_magnitude = 0.0;
};

struct FroissartPair {
    std::complex<double> pole;
    std::complex<double> zero;
    double separation = 0.0;
};

struct PoleZeroReport {
    std::vector<PoleInfo> poles;                 // |z| <= radius
    std::vector<std::complex<double>> zeros;     // all numerator roots
    std::vector<FroissartPair> froissart_pairs;  // separation < tolerance
};

struct BoundsTriple {
    double lower = 0.0;   // [n/n-1]
    double diagonal = 0.0;  // [n/n]
    double upper = 0.0;   // [n/n+1]
    bool ordered = false;  // lower <= diagonal <= upper at the sample point
};

// Solve the [n/m] matching conditions. Requires n+m+1 trusted coefficients.
// A rank-deficient denominator system is resolved by the least-norm
// solution; if the order-of-contact check still fails the table cell is a
// genuine degenerate block and SingularSystem is thrown.
RationalApproximant construct(const PowerSeries& f, int n, int m);

// num(x)/den(x); throws EvaluationAtPole when the denominator underflows
// relative to the coefficient scale.
double evaluate(const RationalApproximant& r, double x);
std::complex<double> evaluate(const RationalApproximant& r, std::complex<double> x);

// Grid of approximants; degenerate cells are left empty.
struct PadeTable {
    int max_n = 0, max_m = 0;
    std::vector<std::optional<RationalApproximant>> cells;  // row-major (n, m)
    const std::optional<RationalApproximant>& cell(int n, int m) const {
        return cells[static_cast<std::size_t>(n) * (max_m + 1) + m];
    }
};
PadeTable pade_table(const PowerSeries& f, int max_n, int max_m);

// Companion-matrix roots of denominator and numerator. Poles are reported
// inside |z| <= radius; Froissart pairs are pole/zero pairs closer than
// froissart_tol.
PoleZeroReport pole_zero_report(const RationalApproximant& r, double radius,
                                double froissart_tol = 1e-6);

// Conjugate-weighted blend of [n/n] and [n-1/n-1]:
//   (conj(q_n) p_n + conj(q_{n-1}) p_{n-1}) / (|q_n|^2 + |q_{n-1}|^2)
// where p, q are the numerator/denominator values. Real on the real axis.
class SmoothedDiagonal {
public:
    SmoothedDiagonal(const PowerSeries& f, int n);
    std::complex<double> operator()(std::complex<double> x) const;
    double operator()(double x) const;
    const RationalApproximant& high() const { return high_; }
    const RationalApproximant& low() const { return low_; }

private:
    RationalApproximant high_, low_;
};

// Values of [n/n-1], [n/n], [n/n+1] at x, with the observed ordering flag.
// The chain ordering is a report, not a guarantee.
BoundsTriple bounds_check(const PowerSeries& f, int n, double x);

// Roots of a real polynomial (trailing near-zero coefficients stripped)
// via the companion matrix. Exposed for reuse by other modules.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

}  // namespace asympt
