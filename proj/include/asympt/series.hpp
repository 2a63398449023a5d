// Truncated formal power series over double, with explicit trusted-order
// tracking. All operations are pure; the trusted order of a result never
// exceeds that of any operand.
#pragma once

#include <vector>

#include "asympt/errors.hpp"

namespace asympt {

enum class VarKind { AtZero, AtInfinity };

class PowerSeries {
public:
    PowerSeries() : c_{0.0}, kind_(VarKind::AtZero) {}
    explicit PowerSeries(std::vector<double> coeffs,
                         VarKind kind = VarKind::AtZero);

    static PowerSeries zero(int order, VarKind kind = VarKind::AtZero);

    // Trusted order N; coefficients are c[0..N].
    int order() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    // Coefficient with zero-extension beyond the trusted order.
    double at(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size()))
                   ? c_[static_cast<std::size_t>(i)]
                   : 0.0;
    }
    const std::vector<double>& coeffs() const { return c_; }
    VarKind kind() const { return kind_; }

    PowerSeries truncated(int new_order) const;

    // Horner evaluation of the truncated polynomial in the series variable.
    double evaluate(double x) const;

private:
    std::vector<double> c_;
    VarKind kind_;
};

struct SingularityModel {
    double location = 1.0;   // eps0, nonzero
    double exponent = 0.0;   // alpha
    double amplitude = 1.0;  // A
    bool is_log = false;     // A*log(1 - eps/eps0) instead of a power
};

enum class ExtractionRule { Multiplicative, Additive };

// Arithmetic; results are truncated to the shorter operand's order.
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, double s);

PowerSeries derivative(const PowerSeries& f);

// 1/f; requires f(0) != 0.
PowerSeries invert(const PowerSeries& f);
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

// f(g(x)); requires g(0) = 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

// f^r. Integer r uses repeated multiplication; fractional r requires
// f(0) > 0 and goes through exp(r*log f).
PowerSeries pow(const PowerSeries& f, double r);

// exp(f) and log(f) as formal series; log requires f(0) > 0.
PowerSeries exp(const PowerSeries& f);
PowerSeries log(const PowerSeries& f);

// Compositional inverse: g with f(g(x)) = x. Requires f(0) = 0, f'(0) != 0.
PowerSeries revert(const PowerSeries& f);

// Change of variable t = eps/(1 - eps/eps0): returns the series of f in t.
// Applying the transform again with -eps0 undoes it.
PowerSeries euler_transform(const PowerSeries& f, double eps0);

// Remove a modeled singular factor (Multiplicative: divide by the model's
// expansion) or term (Additive: subtract it).
PowerSeries extract_singularity(const PowerSeries& f, const SingularityModel& s,
                                ExtractionRule rule);

// Expansion of A*(1 - eps/eps0)^alpha, or A*log(1 - eps/eps0) when is_log.
PowerSeries singularity_series(const SingularityModel& s, int order);

}  // namespace asympt
