#include <cmath>

#include "doctest.h"
#include "serre/quadrature.hpp"

using serre::gauss_legendre;

TEST_CASE("monomial exactness up to degree 2n-1") {
    for (int n = 1; n <= 10; ++n) {
        auto rule = gauss_legendre(n);
        REQUIRE(rule.size() == n);
        for (int p = 0; p <= 2 * n - 1; ++p) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
            CHECK(std::fabs(s - 1.0 / (p + 1)) <= 1e-14);
        }
    }
}

TEST_CASE("degree 2n is not integrated exactly") {
    auto rule = gauss_legendre(2);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 4);
    CHECK(std::fabs(s - 0.2) > 1e-4);
}

TEST_CASE("nodes interior, increasing, symmetric about 1/2") {
    for (int n = 1; n <= 10; ++n) {
        auto rule = gauss_legendre(n);
        for (int i = 0; i < n; ++i) {
            CHECK(rule.nodes[i] > 0.0);
            CHECK(rule.nodes[i] < 1.0);
            CHECK(rule.weights[i] > 0.0);
            CHECK(rule.nodes[i] + rule.nodes[n - 1 - i] == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(rule.weights[i] == doctest::Approx(rule.weights[n - 1 - i]).epsilon(1e-14));
        }
        for (int i = 0; i + 1 < n; ++i) CHECK(rule.nodes[i] < rule.nodes[i + 1]);
    }
}

TEST_CASE("weights sum to one") {
    for (int n = 1; n <= 10; ++n) {
        auto rule = gauss_legendre(n);
        double s = 0.0;
        for (double w : rule.weights) s += w;
        CHECK(std::fabs(s - 1.0) <= 1e-15);
    }
}
