#include "asympt/hermite_pade.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "asympt/errors.hpp"
#include "asympt/pade.hpp"

namespace asympt {

ImplicitPoly::ImplicitPoly(int p, double shift) : p_(p), shift_(shift) {
    if (p < 1) throw InvalidInput("implicit degree must be >= 1");
    c_.assign(static_cast<std::size_t>(p + 1) * (p + 1), 0.0);
    set_coeff(0, 1, 1.0);
}

double ImplicitPoly::coeff(int i, int k) const {
    if (i < 0 || k < 0 || i > p_ || k > p_) return 0.0;
    return c_[static_cast<std::size_t>(i) * (p_ + 1) + k];
}

void ImplicitPoly::set_coeff(int i, int k, double v) {
    if (i < 0 || k < 0 || i + k > p_)
        throw InvalidInput("implicit coefficient index out of range");
    c_[static_cast<std::size_t>(i) * (p_ + 1) + k] = v;
}

double ImplicitPoly::operator()(double eps, double g) const {
    double acc = 0.0;
    for (int i = p_; i >= 0; --i) {
        double row = 0.0;
        for (int k = p_ - i; k >= 0; --k) row = row * g + coeff(i, k);
        acc = acc * eps + row;
    }
    return acc;
}

int implicit_unknowns(int p) { return (p * p + 3 * p - 2) / 2; }

namespace {

// Unknown monomials in canonical order: total degree m = 1..p, within a
// degree k = 0..m (i = m-k), skipping the pinned (0,1).
std::vector<std::pair<int, int>> monomials(int p) {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= p; ++m)
        for (int k = 0; k <= m; ++k) {
            if (m - k == 0 && k == 1) continue;
            out.emplace_back(m - k, k);
        }
    return out;
}

}  // namespace

ImplicitPoly construct_implicit(const PowerSeries& f, int p) {
    if (p < 1) throw InvalidInput("implicit degree must be >= 1");
    const int N = implicit_unknowns(p);
    if (f.order() < N)
        throw InsufficientCoefficients(
            "implicit fit of degree " + std::to_string(p) + " needs order " +
            std::to_string(N));

    const double shift = f[0];
    std::vector<double> gc(f.coeffs().begin(),
                           f.coeffs().begin() + (N + 1));
    gc[0] = 0.0;
    const PowerSeries g(gc);

    double gscale = 0.0;
    for (double v : gc) gscale = std::max(gscale, std::abs(v));

    // Powers g^0..g^p at order N.
    std::vector<PowerSeries> gp;
    std::vector<double> one(static_cast<std::size_t>(N) + 1, 0.0);
    one[0] = 1.0;
    gp.emplace_back(one);
    for (int k = 1; k <= p; ++k) gp.push_back(mul(gp.back(), g));

    const auto mons = monomials(p);
    Eigen::MatrixXd A(N, N);
    Eigen::VectorXd rhs(N);
    for (int j = 1; j <= N; ++j) rhs(j - 1) = -g[j];
    for (int col = 0; col < N; ++col) {
        const auto [i, k] = mons[static_cast<std::size_t>(col)];
        for (int j = 1; j <= N; ++j)
            A(j - 1, col) = gp[static_cast<std::size_t>(k)].at(j - i);
    }

    ImplicitPoly F(p, shift);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-12);
    Eigen::VectorXd x;
    if (lu.rank() == N) {
        x = lu.solve(rhs);
    } else {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
        cod.setThreshold(1e-12);
        x = cod.solve(rhs);
        if ((A * x - rhs).lpNorm<Eigen::Infinity>() >
            1e-9 * std::max(1.0, gscale))
            throw SingularSystem("implicit matching conditions are inconsistent");
        F.degenerate = true;
        F.rank_deficiency = N - static_cast<int>(cod.rank());
    }
    for (int col = 0; col < N; ++col) {
        const auto [i, k] = mons[static_cast<std::size_t>(col)];
        F.set_coeff(i, k, x(col));
    }
    return F;
}

PowerSeries implicit_residual(const ImplicitPoly& F, const PowerSeries& f) {
    const int N = f.order();
    std::vector<double> gc = f.coeffs();
    gc[0] -= F.shift();
    const PowerSeries g(gc);

    std::vector<double> acc(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<double> one(static_cast<std::size_t>(N) + 1, 0.0);
    one[0] = 1.0;
    PowerSeries gk(one);
    for (int k = 0; k <= F.p(); ++k) {
        for (int i = 0; i + k <= F.p(); ++i) {
            const double cik = F.coeff(i, k);
            if (cik == 0.0) continue;
            for (int j = i; j <= N; ++j)
                acc[static_cast<std::size_t>(j)] += cik * gk.at(j - i);
        }
        if (k < F.p()) gk = mul(gk, g);
    }
    return PowerSeries(acc);
}

std::vector<std::complex<double>> branches(const ImplicitPoly& F, double eps) {
    std::vector<double> poly(static_cast<std::size_t>(F.p()) + 1, 0.0);
    for (int k = 0; k <= F.p(); ++k) {
        double acc = 0.0;
        for (int i = F.p() - k; i >= 0; --i) acc = acc * eps + F.coeff(i, k);
        poly[static_cast<std::size_t>(k)] = acc;
    }
    double tail = 0.0;
    for (std::size_t k = 1; k < poly.size(); ++k)
        tail = std::max(tail, std::abs(poly[k]));
    if (tail <= 1e-13 * (std::abs(poly[0]) + 1.0))
        throw DegeneratePolynomial("no g dependence left at this point");

    auto roots = polynomial_roots(poly);
    for (auto& r : roots) r += F.shift();
    return roots;
}

PowerSeries soliton_series(double a0, int order_in_z) {
    if (order_in_z < 0) throw InvalidInput("order must be nonnegative");
    std::vector<double> c(static_cast<std::size_t>(order_in_z) + 1, 0.0);
    c[0] = a0;
    for (int k = 0; k + 1 <= order_in_z; ++k) {
        double cube = 0.0;
        for (int i = 0; i <= k; ++i)
            for (int j = 0; i + j <= k; ++j)
                cube += c[static_cast<std::size_t>(i)] *
                        c[static_cast<std::size_t>(j)] *
                        c[static_cast<std::size_t>(k - i - j)];
        c[static_cast<std::size_t>(k + 1)] =
            (c[static_cast<std::size_t>(k)] - cube) / (4.0 * (k + 1) * (k + 1));
    }
    return PowerSeries(std::move(c));
}

namespace {

// Top numerator coefficient of the [N/N] approximant of the profile in z.
double top_numerator(int N, double a0) {
    const PowerSeries s = soliton_series(a0, 2 * N);
    const RationalApproximant r = construct(s, N, N);
    double bscale = 0.0;
    for (double v : r.den()) bscale = std::max(bscale, std::abs(v));
    if (std::abs(r.den().back()) <= 1e-8 * bscale)
        throw NumericalError("approximant denominator degenerates at this amplitude");
    return r.num().back();
}

}  // namespace

double soliton_a0(int N, double lo, double hi) {
    if (N < 1) throw InvalidInput("approximant order must be >= 1");
    if (!(lo < hi)) throw InvalidInput("bracket must satisfy lo < hi");
    double flo = top_numerator(N, lo);
    double fhi = top_numerator(N, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChange("matching condition does not change sign on the bracket");
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = top_numerator(N, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace asympt
