#include <cmath>

#include "doctest.h"
#include "maass/growth.hpp"

using namespace maass;

namespace {
std::vector<double> default_grid() {
    std::vector<double> g;
    for (double u = 4.0; u <= 40.0; u += 4.0) g.push_back(u);
    return g;
}
}  // namespace

TEST_CASE("zero seed is moderate") {
    auto rep = growth_diagnostic(GrowthSeed::zero, 5, 12, default_grid());
    CHECK(rep.verdict == "moderate");
}

TEST_CASE("laurent-poly seed is rapid via exact coefficient positivity") {
    for (long k : {5L, -5L}) {
        auto rep = growth_diagnostic(GrowthSeed::laurent_poly, k, 12, default_grid());
        INFO("k = ", k);
        CHECK(rep.positivity_checked);
        CHECK(rep.positivity_holds);
        CHECK(rep.verdict == "rapid");
        for (double c : rep.window_coefficients) CHECK(c > 0.0);
        // desk-scale partial sums stay polynomially small; the verdict comes
        // from the exact route, not the envelope
        CHECK_FALSE(rep.envelope_exceeded);
    }
}

TEST_CASE("m-integral seed is rapid via the envelope") {
    for (long k : {5L, -5L}) {
        auto rep = growth_diagnostic(GrowthSeed::m_integral, k, 12, default_grid());
        INFO("k = ", k);
        CHECK(rep.envelope_exceeded);
        CHECK(rep.verdict == "rapid");
    }
}

TEST_CASE("w-integral seed is moderate") {
    for (long k : {5L, -5L}) {
        auto rep = growth_diagnostic(GrowthSeed::w_integral, k, 12, default_grid());
        INFO("k = ", k);
        CHECK_FALSE(rep.envelope_exceeded);
        CHECK(rep.verdict == "moderate");
    }
}

TEST_CASE("ratio decay at k = -2") {
    auto rep = coeff_ratio_decay(-2, 400);
    CHECK(rep.ratios.size() == 401);
    CHECK(rep.monotone_from >= 0);
    // monotone decrease beyond the reported index, spot checked at +10 strides
    for (long n = rep.monotone_from; n + 10 <= 400; n += 10)
        CHECK(abs(rep.ratios[static_cast<size_t>(n + 10)]) <
              abs(rep.ratios[static_cast<size_t>(n)]));
    CHECK(to_double(abs(rep.final_ratio)) < 1e-6);
    CHECK(rep.tail_positive_a);
    CHECK(rep.tail_positive_b);
}

TEST_CASE("ratio decay at k = -5 reaches 1e-6 by n = 400") {
    auto rep = coeff_ratio_decay(-5, 400);
    CHECK(to_double(abs(rep.final_ratio)) < 1e-6);
    CHECK(rep.monotone_from >= 0);
    CHECK(rep.monotone_from < 380);
}

TEST_CASE("ratio decay rejects nonnegative k") {
    CHECK_THROWS_AS(coeff_ratio_decay(2, 10), std::invalid_argument);
}
