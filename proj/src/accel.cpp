#include "asympt/accel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace asympt {

namespace {

// Near-zero test for epsilon-recursion denominators: absolute underflow or
// relative cancellation below 1e-14.
bool denom_underflow(double diff, double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(diff) < 1e-300 || std::abs(diff) < 1e-14 * scale;
}

}  // namespace

AitkenResult aitken(const std::vector<double>& s) {
    if (s.size() < 3) throw TooShort("aitken needs at least 3 iterates");
    AitkenResult r;
    r.values.resize(s.size() - 2, 0.0);
    r.valid.resize(s.size() - 2, false);
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        double d1 = s[i + 1] - s[i];
        double d2 = s[i + 2] - s[i + 1];
        double dd = d2 - d1;
        if (denom_underflow(dd, d1, d2)) {
            r.values[i] = s[i + 2];
            r.valid[i] = false;
        } else {
            r.values[i] = s[i + 2] - d2 * d2 / dd;
            r.valid[i] = true;
        }
    }
    return r;
}

EpsilonTable::EpsilonTable(int source_len, int k_max)
    : source_len_(source_len), k_max_(k_max) {
    std::size_t total = 0;
    for (int k = 0; k <= k_max; ++k) total += static_cast<std::size_t>(source_len - k);
    v_.assign(total, 0.0);
    ok_.assign(total, false);
}

std::size_t EpsilonTable::idx(int k, int n) const {
    std::size_t off = 0;
    for (int j = 0; j < k; ++j) off += static_cast<std::size_t>(source_len_ - j);
    return off + static_cast<std::size_t>(n);
}

double EpsilonTable::entry(int k, int n) const { return v_[idx(k, n)]; }
bool EpsilonTable::is_valid(int k, int n) const { return ok_[idx(k, n)]; }
void EpsilonTable::set(int k, int n, double v, bool ok) {
    v_[idx(k, n)] = v;
    ok_[idx(k, n)] = ok;
}

double EpsilonTable::best() const {
    for (int k = k_max_ - (k_max_ % 2); k >= 2; k -= 2)
        for (int n = 0; n < column_size(k); ++n)
            if (is_valid(k, n)) return entry(k, n);
    return entry(0, source_len_ - 1);
}

EpsilonTable wynn_epsilon(const std::vector<double>& s, int k_max) {
    if (s.size() < 2) throw TooShort("epsilon table needs at least 2 iterates");
    int len = static_cast<int>(s.size());
    k_max = std::min(k_max, len - 1);
    EpsilonTable t(len, k_max);
    for (int n = 0; n < len; ++n) t.set(0, n, s[static_cast<std::size_t>(n)], true);
    // Virtual column k = -1 is identically zero.
    for (int k = 0; k < k_max; ++k) {
        for (int n = 0; n + 1 < t.column_size(k); ++n) {
            bool in_ok = t.is_valid(k, n) && t.is_valid(k, n + 1) &&
                         (k == 0 || t.is_valid(k - 1, n + 1));
            if (!in_ok) {
                t.set(k + 1, n, 0.0, false);
                continue;
            }
            double hi = t.entry(k, n + 1), lo = t.entry(k, n);
            double diff = hi - lo;
            if (denom_underflow(diff, hi, lo)) {
                t.set(k + 1, n, 0.0, false);
                continue;
            }
            double prev = (k == 0) ? 0.0 : t.entry(k - 1, n + 1);
            double val = prev + 1.0 / diff;
            t.set(k + 1, n, val, std::isfinite(val));
        }
    }
    return t;
}

double shanks(const std::vector<double>& s, int k, int p) {
    if (k < 0 || p < 0) throw InvalidInput("negative shanks index");
    if (k == 0) {
        if (p >= static_cast<int>(s.size())) throw TooShort("offset beyond sequence");
        return s[static_cast<std::size_t>(p)];
    }
    if (p + 2 * k >= static_cast<int>(s.size()))
        throw TooShort("sequence too short for requested shanks order");
    EpsilonTable t = wynn_epsilon(s, 2 * k);
    if (!t.is_valid(2 * k, p))
        throw SingularDeterminant("shanks stencil is degenerate here");
    return t.entry(2 * k, p);
}

double shanks_determinant(const std::vector<double>& s, int k, int p) {
    if (k < 1 || k > 3) throw InvalidInput("determinant form kept for k in 1..3");
    if (p + 2 * k >= static_cast<int>(s.size()))
        throw TooShort("sequence too short for requested shanks order");
    // Numerator: Hankel determinant bordered with iterates; denominator:
    // the same with a top row of ones (classical ratio form).
    int d = k + 1;
    Eigen::MatrixXd num(d, d), den(d, d);
    for (int c = 0; c < d; ++c) {
        num(0, c) = s[static_cast<std::size_t>(p + c)];
        den(0, c) = 1.0;
        for (int r = 1; r < d; ++r) {
            double diff = s[static_cast<std::size_t>(p + c + r)] -
                          s[static_cast<std::size_t>(p + c + r - 1)];
            num(r, c) = diff;
            den(r, c) = diff;
        }
    }
    double dden = den.determinant();
    if (std::abs(dden) < 1e-300) throw SingularDeterminant("denominator determinant vanishes");
    return num.determinant() / dden;
}

ConvergenceClass classify(const std::vector<double>& s) {
    if (s.size() < 5) throw TooShort("classification needs at least 5 iterates");
    std::vector<double> xs, ys;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        double dprev = s[i] - s[i - 1];
        double dnext = s[i + 1] - s[i];
        double scale = std::max(std::abs(s[i]), 1.0);
        if (std::abs(dprev) < 1e-300 || std::abs(dprev) < 1e-15 * scale) continue;
        xs.push_back(1.0 / (static_cast<double>(i) + 2.0));
        ys.push_back(dnext / dprev);
    }
    ConvergenceClass c;
    if (xs.size() < 3) return c;  // Unknown
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-300) return c;
    double slope = (n * sxy - sx * sy) / det;
    double a = (sy - slope * sx) / n;
    c.ratio_estimate = a;
    double mag = std::abs(a);
    if (mag <= 0.15)
        c.kind = ConvergenceKind::Superlinear;
    else if (std::abs(a - 1.0) <= 0.05)
        c.kind = ConvergenceKind::Logarithmic;
    else if (mag <= 0.95)
        c.kind = ConvergenceKind::Linear;
    else if (mag > 1.05)
        c.kind = ConvergenceKind::Divergent;
    else
        c.kind = ConvergenceKind::Unknown;
    return c;
}

}  // namespace asympt
