#include "asympt/fourier_pade.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "asympt/errors.hpp"

namespace asympt {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double FourierPadeSign::operator()(double x) const {
    double num = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j)
        num += q[j] * std::sin((2.0 * j + 1.0) * x);
    double den = 1.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        den += s[i] * std::cos(2.0 * (i + 1.0) * x);
    if (std::abs(den) < 1e-13)
        throw EvaluationAtPole("trigonometric denominator vanishes");
    return num / den;
}

FourierPadeSign fourier_pade_sign(int N) {
    if (N < 1) throw InvalidInput("order must be >= 1");
    const int J = (N - 1) / 2;
    const int M = N / 2;

    FourierPadeSign fp;
    fp.N = N;
    fp.s.assign(static_cast<std::size_t>(M), 0.0);

    if (M > 0) {
        // Annihilate the residual's first M odd harmonics beyond 2J+1:
        // rows h = 2J+3, 2J+5, ...
        Eigen::MatrixXd A(M, M);
        Eigen::VectorXd rhs(M);
        for (int r = 0; r < M; ++r) {
            const double h = 2.0 * J + 3.0 + 2.0 * r;
            for (int i = 1; i <= M; ++i)
                A(r, i - 1) = 1.0 / (h * h - 4.0 * i * i);
            rhs(r) = -1.0 / (h * h);
        }
        Eigen::VectorXd sol = A.fullPivLu().solve(rhs);
        if ((A * sol - rhs).lpNorm<Eigen::Infinity>() > 1e-9)
            throw SingularSystem("harmonic annihilation system is singular");
        for (int i = 0; i < M; ++i) fp.s[static_cast<std::size_t>(i)] = sol(i);
    }

    fp.q.assign(static_cast<std::size_t>(J) + 1, 0.0);
    for (int j = 0; j <= J; ++j) {
        const double h = 2.0 * j + 1.0;
        double acc = 1.0 / (h * h);
        for (int i = 1; i <= M; ++i)
            acc += fp.s[static_cast<std::size_t>(i - 1)] / (h * h - 4.0 * i * i);
        fp.q[static_cast<std::size_t>(j)] = (4.0 / kPi) * h * acc;
    }
    return fp;
}

double SquareWavePartialSum::operator()(double x) const {
    double acc = 0.0;
    for (int j = 0; j < terms; ++j) {
        const double h = 2.0 * j + 1.0;
        acc += std::sin(h * x) / h;
    }
    return (4.0 / kPi) * acc;
}

double gibbs_overshoot(const std::function<double(double)>& f, int grid) {
    const int n = std::max(grid, 1000);
    int best = 1;
    double best_v = -1e300;
    for (int k = 1; k < n; ++k) {
        const double v = f(kPi * k / n);
        if (v > best_v) {
            best_v = v;
            best = k;
        }
    }
    double a = kPi * (best - 1) / n;
    double b = kPi * (best + 1) / n;

    constexpr double gr = 0.61803398874989484820;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 60; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::max({best_v, fc, fd}) - 1.0;
}

double s_reference(int N, int i) {
    if (N < 1 || i < 0 || 2 * i > N) throw InvalidInput("index out of range");
    if (i == 0) return 1.0;
    auto lf = [](int k) { return std::lgamma(static_cast<double>(k) + 1.0); };
    const double lg = 4.0 * lf(N) + lf(2 * N + 2 * i) + lf(2 * N - 2 * i) -
                      lf(N - 1) - lf(N + 1) - lf(N - 2 * i) - lf(N + 2 * i) -
                      2.0 * lf(2 * N);
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign * std::exp(lg);
}

}  // namespace asympt
