#include <cmath>
#include <vector>

#include "asympt/accel.hpp"
#include "asympt/pade.hpp"
#include "asympt/series.hpp"
#include "doctest.h"

using asympt::aitken;
using asympt::EpsilonTable;
using asympt::shanks;
using asympt::wynn_epsilon;

namespace {

std::vector<double> ln2_partials(int n) {
    std::vector<double> s;
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) {
        acc += (k % 2 ? 1.0 : -1.0) / k;
        s.push_back(acc);
    }
    return s;
}

std::vector<double> exp_partials(double x, int terms) {
    std::vector<double> s;
    double acc = 0.0, term = 1.0;
    for (int k = 0; k < terms; ++k) {
        acc += term;
        s.push_back(acc);
        term *= x / (k + 1);
    }
    return s;
}

}  // namespace

TEST_CASE("aitken annihilates a single geometric transient exactly") {
    std::vector<double> s;
    for (int n = 0; n < 8; ++n) s.push_back(2.0 - std::pow(0.5, n));
    asympt::AitkenResult r = aitken(s);
    REQUIRE(r.values.size() == 6);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        CHECK(r.valid[i]);
        CHECK(std::abs(r.values[i] - 2.0) <= 1e-13);
    }
}

TEST_CASE("aitken flags vanishing second differences") {
    asympt::AitkenResult r = aitken({1.0, 2.0, 3.0, 4.0, 5.0});
    for (std::size_t i = 0; i < r.valid.size(); ++i) CHECK(!r.valid[i]);
    CHECK_THROWS_AS(aitken({1.0, 2.0}), asympt::TooShort);
}

TEST_CASE("aitken on seven alternating-harmonic partial sums") {
    asympt::AitkenResult r = aitken(ln2_partials(7));
    REQUIRE(r.values.size() == 5);
    CHECK(std::abs(r.values.back() - 0.6935897436) <= 1e-9);
    CHECK(std::abs(r.values.back() - std::log(2.0)) <= 2e-3);
}

TEST_CASE("wynn kills a two-transient sequence in column four") {
    std::vector<double> s;
    for (int n = 0; n < 10; ++n)
        s.push_back(3.0 + std::pow(0.5, n) + std::pow(1.0 / 3.0, n));
    EpsilonTable t = wynn_epsilon(s, 6);
    for (int n = 0; n < t.column_size(4); ++n) {
        CAPTURE(n);
        REQUIRE(t.is_valid(4, n));
        CHECK(std::abs(t.entry(4, n) - 3.0) <= 1e-10);
    }
    // Beyond exactness the recursion divides by zero; invalidity propagates.
    CHECK(!t.is_valid(6, 0));
    CHECK(std::abs(t.best() - 3.0) <= 1e-10);
}

TEST_CASE("wynn even columns match the Pade staircase") {
    // T_{2k}^{(n)} on power-series partial sums equals [n+k/k] at x.
    const double x = 0.7;
    std::vector<double> s = exp_partials(x, 8);
    EpsilonTable t = wynn_epsilon(s, 6);
    std::vector<double> coeffs(8);
    double c = 1.0;
    for (int k = 0; k < 8; ++k) {
        coeffs[static_cast<std::size_t>(k)] = c;
        c /= k + 1;
    }
    asympt::PowerSeries f(coeffs);
    for (int k = 1; k <= 2; ++k)
        for (int n = 0; n + 2 * k < 8; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(t.is_valid(2 * k, n));
            const double pa =
                evaluate(asympt::construct(f.truncated(n + 2 * k), n + k, k), x);
            CHECK(std::abs(t.entry(2 * k, n) - pa) <= 1e-8);
        }
}

TEST_CASE("wynn resums the divergent quintic expansion") {
    // Partial sums at eps = 1 reach 21476 before the table pulls them back.
    std::vector<double> a = {1.0, -1.0, 5.0, -35.0, 285.0, -2530.0, 23751.0};
    for (int k = 7; k <= 12; ++k) {
        double num = 1.0, den = 1.0;
        const int j = k - 1;
        for (int i = 1; i <= 5; ++i) num *= 5.0 * j + i;
        den *= j + 1;
        for (int i = 2; i <= 5; ++i) den *= 4.0 * j + i;
        a.push_back(-a.back() * num / den);
    }
    std::vector<double> s;
    double acc = 0.0;
    for (double v : a) s.push_back(acc += v);
    EpsilonTable t = wynn_epsilon(s, 12);
    REQUIRE(t.is_valid(12, 0));
    CHECK(std::abs(t.entry(12, 0) - 0.7551897) <= 1e-6);
    CHECK(std::abs(t.entry(12, 0) - 0.7548776662) <= 1e-3);
}

TEST_CASE("shanks equals the even epsilon column and aitken at order one") {
    std::vector<double> s = ln2_partials(9);
    asympt::AitkenResult a = aitken(s);
    for (int p = 0; p + 2 < static_cast<int>(s.size()); ++p) {
        CAPTURE(p);
        CHECK(std::abs(shanks(s, 1, p) - a.values[static_cast<std::size_t>(p)]) <=
              1e-12);
    }
    EpsilonTable t = wynn_epsilon(s, 4);
    CHECK(std::abs(shanks(s, 2, 1) - t.entry(4, 1)) <= 1e-14);
}

TEST_CASE("shanks order k is exact on k-transient sequences") {
    std::vector<double> s;
    for (int n = 0; n < 11; ++n)
        s.push_back(5.0 + std::pow(0.8, n) - 0.5 * std::pow(-0.3, n));
    for (int p = 0; p + 4 < static_cast<int>(s.size()); ++p) {
        CAPTURE(p);
        CHECK(std::abs(shanks(s, 2, p) - 5.0) <= 1e-10);
    }
    std::vector<double> s3;
    for (int n = 0; n < 12; ++n)
        s3.push_back(1.0 + std::pow(0.7, n) + 2.0 * std::pow(0.4, n) -
                     std::pow(-0.2, n));
    for (int p = 0; p + 6 < static_cast<int>(s3.size()); ++p) {
        CAPTURE(p);
        CHECK(std::abs(shanks(s3, 3, p) - 1.0) <= 1e-8);
    }
}

TEST_CASE("determinant form cross-checks the recursion for small k") {
    std::vector<double> s = ln2_partials(10);
    for (int k = 1; k <= 3; ++k)
        for (int p = 0; p <= 2; ++p) {
            CAPTURE(k);
            CAPTURE(p);
            CHECK(std::abs(shanks(s, k, p) - asympt::shanks_determinant(s, k, p)) <=
                  1e-9);
        }
}

TEST_CASE("even columns are equivariant under affine maps of the sequence") {
    std::vector<double> s = ln2_partials(9);
    std::vector<double> m;
    for (double v : s) m.push_back(2.5 * v - 1.0);
    EpsilonTable ts = wynn_epsilon(s, 4);
    EpsilonTable tm = wynn_epsilon(m, 4);
    for (int k : {2, 4})
        for (int n = 0; n < ts.column_size(k); ++n) {
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(ts.is_valid(k, n));
            REQUIRE(tm.is_valid(k, n));
            CHECK(std::abs(tm.entry(k, n) - (2.5 * ts.entry(k, n) - 1.0)) <= 1e-10);
        }
}

TEST_CASE("convergence classifier") {
    using asympt::ConvergenceKind;
    std::vector<double> fact;
    double acc = 0.0, term = 1.0;
    for (int k = 0; k < 12; ++k) {
        acc += term;
        fact.push_back(acc);
        term /= (k + 1);
    }
    CHECK(asympt::classify(fact).kind == ConvergenceKind::Superlinear);

    std::vector<double> geo;
    for (int n = 0; n < 12; ++n) geo.push_back(2.0 - std::pow(0.5, n));
    asympt::ConvergenceClass g = asympt::classify(geo);
    CHECK(g.kind == ConvergenceKind::Linear);
    CHECK(std::abs(g.ratio_estimate - 0.5) <= 0.05);

    std::vector<double> logseq;
    double h = 0.0;
    for (int k = 1; k <= 20; ++k) {
        h += 1.0 / k;
        logseq.push_back(h);
    }
    CHECK(asympt::classify(logseq).kind == ConvergenceKind::Logarithmic);

    std::vector<double> div;
    for (int n = 0; n < 10; ++n) div.push_back(std::pow(2.0, n));
    CHECK(asympt::classify(div).kind == ConvergenceKind::Divergent);

    CHECK_THROWS_AS((void)asympt::classify({1.0, 2.0, 3.0, 4.0}), asympt::TooShort);

    // pure oscillation: ratio sits at -1, outside every band
    std::vector<double> osc;
    for (int n = 0; n < 12; ++n) osc.push_back(n % 2 == 0 ? 1.0 : -1.0);
    CHECK(asympt::classify(osc).kind == ConvergenceKind::Unknown);

    // stagnant sequence: no usable difference ratios
    CHECK(asympt::classify(std::vector<double>(8, 3.0)).kind ==
          ConvergenceKind::Unknown);
}
