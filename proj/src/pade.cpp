#include "asympt/pade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace asympt {

namespace {

double coeff_scale(const PowerSeries& f, int upto) {
    double s = 0.0;
    for (int i = 0; i <= upto && i <= f.order(); ++i) s = std::max(s, std::abs(f[i]));
    return s;
}

template <typename Scalar>
Scalar horner(const std::vector<double>& c, Scalar x) {
    Scalar acc = Scalar(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
}

double poly_scale(const std::vector<double>& c) {
    double s = 0.0;
    for (double v : c) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace

RationalApproximant::RationalApproximant(std::vector<double> num,
                                         std::vector<double> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.empty() || den_.empty() || den_[0] != 1.0)
        throw InvalidInput("rational approximant requires den[0] = 1");
    for (double v : num_)
        if (!std::isfinite(v)) throw InvalidInput("non-finite numerator coefficient");
    for (double v : den_)
        if (!std::isfinite(v)) throw InvalidInput("non-finite denominator coefficient");
}

double RationalApproximant::operator()(double x) const {
    return evaluate(*this, x);
}

std::complex<double> RationalApproximant::operator()(std::complex<double> x) const {
    return evaluate(*this, x);
}

RationalApproximant construct(const PowerSeries& f, int n, int m) {
    if (n < 0 || m < 0) throw InvalidInput("negative degree");
    if (f.order() < n + m)
        throw InsufficientCoefficients("need n+m+1 trusted coefficients");
    double cs = coeff_scale(f, n + m);

    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    if (m > 0) {
        Eigen::MatrixXd A(m, m);
        Eigen::VectorXd rhs(m);
        for (int r = 0; r < m; ++r) {
            int j = n + 1 + r;
            for (int i = 1; i <= m; ++i) A(r, i - 1) = f.at(j - i);
            rhs(r) = -f.at(j);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-12);
        if (lu.rank() == m) {
            b = lu.solve(rhs);
        } else {
            // Degenerate block: take the least-norm solution and let the
            // contact check below decide whether the cell exists.
            Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
            cod.setThreshold(1e-12);
            b = cod.solve(rhs);
        }
        double resid = (A * b - rhs).lpNorm<Eigen::Infinity>();
        if (resid > 1e-10 * std::max(1.0, cs))
            throw SingularSystem("pade denominator system is inconsistent");
    }

    std::vector<double> den(static_cast<std::size_t>(m) + 1, 0.0);
    den[0] = 1.0;
    for (int i = 1; i <= m; ++i) den[static_cast<std::size_t>(i)] = b(i - 1);

    std::vector<double> num(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double s = f.at(k);
        for (int i = 1; i <= std::min(k, m); ++i)
            s += den[static_cast<std::size_t>(i)] * f.at(k - i);
        num[static_cast<std::size_t>(k)] = s;
    }

    // Order-of-contact check: f*den - num must vanish through x^(n+m).
    for (int k = 0; k <= n + m; ++k) {
        double s = -(k <= n ? num[static_cast<std::size_t>(k)] : 0.0);
        for (int i = 0; i <= std::min(k, m); ++i)
            s += den[static_cast<std::size_t>(i)] * f.at(k - i);
        if (std::abs(s) > 1e-9 * (1.0 + cs))
            throw SingularSystem("pade contact conditions not satisfiable");
    }

    return RationalApproximant(std::move(num), std::move(den));
}

double evaluate(const RationalApproximant& r, double x) {
    double den = horner(r.den(), x);
    double ref = poly_scale(r.den()) * std::max(1.0, std::pow(std::abs(x), r.m()));
    if (std::abs(den) < 1e-13 * ref)
        throw EvaluationAtPole("denominator vanishes at evaluation point");
    return horner(r.num(), x) / den;
}

std::complex<double> evaluate(const RationalApproximant& r, std::complex<double> x) {
    std::complex<double> den = horner(r.den(), x);
    double ref = poly_scale(r.den()) * std::max(1.0, std::pow(std::abs(x), r.m()));
    if (std::abs(den) < 1e-13 * ref)
        throw EvaluationAtPole("denominator vanishes at evaluation point");
    return horner(r.num(), x) / den;
}

PadeTable pade_table(const PowerSeries& f, int max_n, int max_m) {
    if (max_n < 0 || max_m < 0) throw InvalidInput("negative table extent");
    if (f.order() < max_n + max_m)
        throw InsufficientCoefficients("series too short for requested table");
    PadeTable t;
    t.max_n = max_n;
    t.max_m = max_m;
    t.cells.resize(static_cast<std::size_t>(max_n + 1) * (max_m + 1));
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_m; ++m) {
            try {
                t.cells[static_cast<std::size_t>(n) * (max_m + 1) + m] =
                    construct(f, n, m);
            } catch (const SingularSystem&) {
                // gap: degenerate block
            }
        }
    return t;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    double s = poly_scale(c);
    if (s == 0.0) return {};
    while (c.size() > 1 && std::abs(c.back()) < 1e-14 * s) c.pop_back();
    int deg = static_cast<int>(c.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(0, i) = -c[static_cast<std::size_t>(deg - 1 - i)] / c.back();
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success)
        throw NumericalError("companion-matrix eigenvalue iteration failed");
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        return std::abs(a) < std::abs(b);
    });
    return roots;
}

PoleZeroReport pole_zero_report(const RationalApproximant& r, double radius,
                                double froissart_tol) {
    PoleZeroReport rep;
    std::vector<double> dnum = r.num();
    std::vector<double> dden = r.den();
    rep.zeros = polynomial_roots(dnum);

    // derivative of the denominator, for residue magnitudes
    std::vector<double> dp(std::max<std::size_t>(dden.size() - 1, 1), 0.0);
    for (std::size_t i = 1; i < dden.size(); ++i) dp[i - 1] = static_cast<double>(i) * dden[i];

    for (auto z : polynomial_roots(dden)) {
        if (std::abs(z) > radius) continue;
        PoleInfo p;
        p.location = z;
        std::complex<double> der = horner(dp, z);
        std::complex<double> numv = horner(dnum, z);
        p.residue_magnitude =
            std::abs(der) > 0 ? std::abs(numv / der) : std::numeric_limits<double>::infinity();
        rep.poles.push_back(p);
    }
    for (const auto& p : rep.poles)
        for (auto z : rep.zeros) {
            double sep = std::abs(p.location - z);
            if (sep < froissart_tol)
                rep.froissart_pairs.push_back({p.location, z, sep});
        }
    return rep;
}

SmoothedDiagonal::SmoothedDiagonal(const PowerSeries& f, int n)
    : high_(construct(f, n, n)), low_(construct(f, n - 1, n - 1)) {
    if (n < 1) throw InvalidInput("smoothing needs n >= 1");
}

std::complex<double> SmoothedDiagonal::operator()(std::complex<double> x) const {
    std::complex<double> pn = horner(high_.num(), x);
    std::complex<double> qn = horner(high_.den(), x);
    std::complex<double> pm = horner(low_.num(), x);
    std::complex<double> qm = horner(low_.den(), x);
    double w = std::norm(qn) + std::norm(qm);
    if (w < 1e-300) throw EvaluationAtPole("both denominators vanish");
    return (std::conj(qn) * pn + std::conj(qm) * pm) / w;
}

double SmoothedDiagonal::operator()(double x) const {
    return (*this)(std::complex<double>(x, 0.0)).real();
}

BoundsTriple bounds_check(const PowerSeries& f, int n, double x) {
    if (n < 1) throw InvalidInput("bounds triple needs n >= 1");
    BoundsTriple t;
    t.lower = evaluate(construct(f, n, n - 1), x);
    t.diagonal = evaluate(construct(f, n, n), x);
    t.upper = evaluate(construct(f, n, n + 1), x);
    t.ordered = t.lower <= t.diagonal && t.diagonal <= t.upper;
    return t;
}

}  // namespace asympt
