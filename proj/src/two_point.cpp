#include "asympt/two_point.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "asympt/errors.hpp"

namespace asympt {

namespace {

double vec_scale(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

}  // namespace

RationalApproximant construct_tppa(const TwoPointData& d, int n, int m) {
    if (n < 0 || m < 0) throw InvalidInput("negative degree");
    if (d.at_zero.kind() != VarKind::AtZero)
        throw MismatchedVariable("near data must be an at-zero series");
    if (d.at_infinity.kind() != VarKind::AtInfinity)
        throw MismatchedVariable("far data must be an at-infinity series");

    const int N = n + m + 1;
    const int k = d.k_zero;
    if (k < 0 || k > N)
        throw InvalidInput("k_zero must lie in [0, n+m+1]");
    const int far_count = N - k;
    if (far_count > 0 && d.far_offset != n - m)
        throw InconsistentDegrees(
            "far leading power " + std::to_string(d.far_offset) +
            " does not match n-m = " + std::to_string(n - m));
    if (k > 0 && d.at_zero.order() < k - 1)
        throw InsufficientCoefficients("near series too short for k_zero conditions");
    if (far_count > 0 && d.at_infinity.order() < far_count - 1)
        throw InsufficientCoefficients("far series too short for remaining conditions");

    const auto& c = d.at_zero;
    const auto& e = d.at_infinity;
    double scale = std::max(1.0, std::max(vec_scale(c.coeffs()), vec_scale(e.coeffs())));

    // Unknowns: a_0..a_n then b_1..b_m.
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(N);

    int row = 0;
    for (int j = 0; j < k; ++j, ++row) {
        if (j <= n) A(row, j) = 1.0;
        for (int i = 1; i <= m && i <= j; ++i) A(row, n + i) = -c.at(j - i);
        rhs(row) = c[j];
    }
    for (int r = 0; r < far_count; ++r, ++row) {
        if (n - r >= 0) A(row, n - r) = 1.0;
        for (int i = std::max(1, m - r); i <= m; ++i)
            A(row, n + i) = -e.at(i - m + r);
        rhs(row) = (r >= m) ? e.at(r - m) : 0.0;
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-12);
    Eigen::VectorXd x;
    if (lu.rank() == N) {
        x = lu.solve(rhs);
    } else {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
        cod.setThreshold(1e-12);
        x = cod.solve(rhs);
    }
    if ((A * x - rhs).lpNorm<Eigen::Infinity>() > 1e-9 * scale)
        throw SingularSystem("two-point matching conditions are inconsistent");

    std::vector<double> num(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) num[static_cast<std::size_t>(j)] = x(j);
    std::vector<double> den(static_cast<std::size_t>(m) + 1, 0.0);
    den[0] = 1.0;
    for (int i = 1; i <= m; ++i) den[static_cast<std::size_t>(i)] = x(n + i);
    return RationalApproximant(std::move(num), std::move(den));
}

PowerSeries far_expansion(const RationalApproximant& r, int order) {
    if (order < 0) throw InvalidInput("expansion order must be nonnegative");
    const auto& num = r.num();
    const auto& den = r.den();
    if (std::abs(den.back()) <= 1e-13 * vec_scale(den))
        throw DegeneratePolynomial(
            "denominator leading coefficient vanishes; far power below n-m");

    const std::size_t len = static_cast<std::size_t>(order) + 1;
    std::vector<double> rn(len, 0.0), rd(len, 0.0);
    for (std::size_t i = 0; i < num.size() && i < len; ++i)
        rn[i] = num[num.size() - 1 - i];
    for (std::size_t i = 0; i < den.size() && i < len; ++i)
        rd[i] = den[den.size() - 1 - i];

    PowerSeries prod = mul(PowerSeries(rn), invert(PowerSeries(rd)));
    return PowerSeries(prod.coeffs(), VarKind::AtInfinity);
}

double FracRational::operator()(double z) const {
    double nv = 0.0, dv = 0.0;
    for (std::size_t i = 0; i < num_idx.size(); ++i)
        nv += num_c[i] * std::pow(z, num_idx[i] / static_cast<double>(q));
    for (std::size_t i = 0; i < den_idx.size(); ++i)
        dv += den_c[i] * std::pow(z, den_idx[i] / static_cast<double>(q));
    return nv / dv;
}

FracRational rational_aef(const std::vector<double>& near, int q,
                          double far_amp, int far_index,
                          const std::vector<int>& num_indices,
                          const std::vector<int>& den_indices) {
    if (q < 1) throw InvalidInput("lattice denominator q must be >= 1");
    if (near.empty()) throw TooFewPoints("no near coefficients given");
    if (num_indices.empty() || den_indices.empty())
        throw InvalidInput("empty exponent list");
    for (int i : num_indices)
        if (i < 0) throw InvalidInput("negative numerator lattice index");
    for (int i : den_indices)
        if (i < 0) throw InvalidInput("negative denominator lattice index");

    auto has_dup = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (has_dup(num_indices) || has_dup(den_indices))
        throw InvalidInput("duplicate lattice index");

    const int pin = *std::min_element(den_indices.begin(), den_indices.end());
    const int pmax = *std::max_element(num_indices.begin(), num_indices.end());
    const int qmax = *std::max_element(den_indices.begin(), den_indices.end());
    if (pmax - qmax != far_index)
        throw InconsistentDegrees(
            "far power " + std::to_string(far_index) +
            "/q does not match degree gap " + std::to_string(pmax - qmax) + "/q");

    const int K1 = static_cast<int>(num_indices.size());
    const int K2 = static_cast<int>(den_indices.size()) - 1;
    const int cols = K1 + K2;
    const int J = static_cast<int>(near.size());
    const int rows = J + 1;

    // Column layout: numerator coefficients in list order, then denominator
    // coefficients (skipping the pinned lowest term) in list order.
    std::vector<int> den_free;
    for (int di : den_indices)
        if (di != pin) den_free.push_back(di);

    auto near_at = [&](int j) { return (j >= 0 && j < J) ? near[static_cast<std::size_t>(j)] : 0.0; };

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
    for (int j = 0; j < J; ++j) {
        for (int t = 0; t < K1; ++t)
            if (num_indices[static_cast<std::size_t>(t)] == j) A(j, t) = 1.0;
        for (int t = 0; t < K2; ++t) {
            const int di = den_free[static_cast<std::size_t>(t)];
            if (j - di >= 0) A(j, K1 + t) = -near_at(j - di);
        }
        rhs(j) = near_at(j - pin);
    }
    // Far condition: a_{pmax} = far_amp * b_{qmax}.
    for (int t = 0; t < K1; ++t)
        if (num_indices[static_cast<std::size_t>(t)] == pmax) A(J, t) = 1.0;
    if (qmax == pin) {
        rhs(J) = far_amp;
    } else {
        for (int t = 0; t < K2; ++t)
            if (den_free[static_cast<std::size_t>(t)] == qmax) A(J, K1 + t) = -far_amp;
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
    cod.setThreshold(1e-12);
    Eigen::VectorXd x = cod.solve(rhs);
    const double scale = std::max({1.0, vec_scale(near), std::abs(far_amp)});
    if ((A * x - rhs).lpNorm<Eigen::Infinity>() > 1e-9 * scale)
        throw InconsistentAsymptotics(
            "near and far data admit no rational form on this lattice");

    FracRational out;
    out.q = q;
    out.num_idx = num_indices;
    out.num_c.resize(num_indices.size());
    for (int t = 0; t < K1; ++t) out.num_c[static_cast<std::size_t>(t)] = x(t);
    out.den_idx.push_back(pin);
    out.den_c.push_back(1.0);
    for (int t = 0; t < K2; ++t) {
        out.den_idx.push_back(den_free[static_cast<std::size_t>(t)]);
        out.den_c.push_back(x(K1 + t));
    }
    return out;
}

std::vector<double> frac_near_expansion(const FracRational& r, int len) {
    if (len < 1) throw InvalidInput("expansion length must be positive");
    std::vector<double> nd(static_cast<std::size_t>(len), 0.0);
    std::vector<double> dd(static_cast<std::size_t>(len), 0.0);
    for (std::size_t i = 0; i < r.num_idx.size(); ++i) {
        if (r.num_idx[i] < 0) throw InvalidInput("negative lattice index");
        if (r.num_idx[i] < len) nd[static_cast<std::size_t>(r.num_idx[i])] += r.num_c[i];
    }
    for (std::size_t i = 0; i < r.den_idx.size(); ++i) {
        if (r.den_idx[i] < 0) throw InvalidInput("negative lattice index");
        if (r.den_idx[i] < len) dd[static_cast<std::size_t>(r.den_idx[i])] += r.den_c[i];
    }
    if (dd[0] == 0.0)
        throw InvalidInput("denominator constant term vanishes");
    std::vector<double> c(static_cast<std::size_t>(len), 0.0);
    for (int j = 0; j < len; ++j) {
        double s = nd[static_cast<std::size_t>(j)];
        for (int i = 1; i <= j; ++i)
            s -= dd[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
        c[static_cast<std::size_t>(j)] = s / dd[0];
    }
    return c;
}

double SommerfeldFit::operator()(double x) const {
    return std::pow(1.0 + A * x, mu);
}

SommerfeldFit sommerfeld_fit(const PowerSeries& f) {
    if (f.order() < 2)
        throw InsufficientCoefficients("power-law fit needs coefficients through x^2");
    if (std::abs(f[0] - 1.0) > 1e-12)
        throw InvalidInput("power-law fit expects a series normalized to c0 = 1");
    const double a1 = f[1], a2 = f[2];
    if (a1 == 0.0) throw InvalidInput("power-law fit needs a nonzero linear term");
    const double disc = a1 * a1 - 2.0 * a2;
    if (std::abs(disc) <= 1e-12 * std::max({a1 * a1, std::abs(2.0 * a2), 1e-300}))
        throw DegenerateFit("exponential-type data: the power-law exponent diverges");
    SommerfeldFit out;
    out.A = disc / a1;
    out.mu = a1 * a1 / disc;
    return out;
}

}  // namespace asympt
