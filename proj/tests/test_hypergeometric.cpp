#include <cmath>

#include "doctest.h"
#include "maass/hypergeometric.hpp"

using namespace maass;

namespace {
RationalK rk(long n, long d = 1) { return RationalK(rat(n, d)); }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(rk(3), 2) == rk(12));
    CHECK(pochhammer(RationalK::k(), 0) == rk(1));
    RationalK k = RationalK::k();
    CHECK(pochhammer(k, 3) == k * (k + rk(1)) * (k + rk(2)));
}

TEST_CASE("pfq_formal exponential case") {
    HypergeometricSpec spec;  // 0F0(;;z) = e^z
    spec.var = 'v';
    auto s = pfq_formal(spec, 4);
    CHECK(s.coeff(0) == rk(1));
    CHECK(s.coeff(1) == rk(1));
    CHECK(s.coeff(2) == rk(1, 2));
    CHECK(s.coeff(3) == rk(1, 6));
    CHECK(s.coeff(4) == rk(1, 24));
}

TEST_CASE("pfq_formal parameter cancellation 1F1(a;a;z)") {
    HypergeometricSpec spec;
    spec.upper = {RationalK::k() + rk(1, 3)};
    spec.lower = {RationalK::k() + rk(1, 3)};
    auto s = pfq_formal(spec, 6);
    Rational fact(1);
    for (long n = 1; n <= 6; ++n) {
        fact /= n;
        CHECK(s.coeff(n) == RationalK(fact));
    }
}

TEST_CASE("pfq_formal first coefficient of the leading indefinite solution") {
    // 1F2(1/2; (1+k)/2, 1+k/2; v/4): coefficient of v^1 is
    // (1/2) / ((1+k)/2 * (1+k/2)) / 4.
    RationalK k = RationalK::k();
    HypergeometricSpec spec;
    spec.upper = {rk(1, 2)};
    spec.lower = {(rk(1) + k) / rk(2), rk(1) + k / rk(2)};
    spec.scale = rat(1, 4);
    auto s = pfq_formal(spec, 2);
    RationalK expect = rk(1, 2) / ((rk(1) + k) / rk(2)) / (rk(1) + k / rk(2)) / rk(4);
    CHECK(s.coeff(1) == expect);
}

TEST_CASE("lower parameter hypothesis") {
    HypergeometricSpec bad;
    bad.upper = {rk(1)};
    bad.lower = {rk(-2)};
    CHECK_THROWS_AS(pfq_formal(bad, 3), std::domain_error);
    HypergeometricSpec zero_low;
    zero_low.lower = {rk(0)};
    CHECK_THROWS_AS(pfq_formal(zero_low, 3), std::domain_error);
    HypergeometricSpec ok;
    ok.lower = {rk(-3, 2)};  // negative but nonintegral is allowed
    CHECK_NOTHROW(pfq_formal(ok, 3));
}

TEST_CASE("contiguous differentiation formula d/dv F(a;b;v) = (prod a/prod b) F(a+1;b+1;v)") {
    RationalK k = RationalK::k();
    HypergeometricSpec spec;
    spec.upper = {rk(1, 2), k + rk(2)};
    spec.lower = {(rk(1) + k) / rk(2), rk(1) + k / rk(2), k + rk(7, 2)};
    long N = 10;
    auto f = pfq_formal(spec, N);

    RationalK ratio(1);
    for (const auto& a : spec.upper) ratio *= a;
    for (const auto& b : spec.lower) ratio /= b;

    auto fup = pfq_formal(shifted_parameters(spec), N);
    auto rhs = fup.scaled(ratio);
    CHECK((series_diff(f) - rhs).is_zero());
}

TEST_CASE("derivative relation d/dv v^l F = v^(l-1)((prod a/prod b) v F(a+1;b+1) + l F)") {
    RationalK k = RationalK::k();
    HypergeometricSpec spec;
    spec.upper = {rk(1)};
    spec.lower = {rk(5, 2) - k, rk(2) - k / rk(2)};
    spec.prefactor = SymbolicExponent{rat(3, 2), rat(-1)};
    long N = 9;
    auto f = pfq_formal(spec, N);
    auto lhs = series_diff(f);

    RationalK ratio(1);
    for (const auto& a : spec.upper) ratio *= a;
    for (const auto& b : spec.lower) ratio /= b;
    RationalK l = RationalK::affine(spec.prefactor.base, spec.prefactor.kcoef);

    auto fup = pfq_formal(shifted_parameters(spec), N);
    auto rhs = fup.shifted(0, ratio) + f.shifted(-1, l);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("pfq_numeric") {
    CHECK(pfq_numeric({1.0}, {2.0}, 1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(pfq_numeric({}, {}, 0.0) == doctest::Approx(1.0));
    // brute-force partial-sum oracle for 1F2(1/2; 3, 3.5; 2)
    double term = 1.0, oracle = 1.0;
    for (int n = 0; n < 200; ++n) {
        term *= (0.5 + n) / ((3.0 + n) * (3.5 + n)) * 2.0 / (n + 1.0);
        oracle += term;
    }
    CHECK(pfq_numeric({0.5}, {3.0, 3.5}, 2.0) == doctest::Approx(oracle).epsilon(1e-13));
    CHECK_THROWS(pfq_numeric({1.0, 2.0, 3.0}, {1.5}, 0.5));
    CHECK_THROWS(pfq_numeric({1.0, 2.0}, {1.5}, 1.5));
}
