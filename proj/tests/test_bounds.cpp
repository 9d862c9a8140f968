#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgkappa/bounds.hpp"
#include "support/properties.hpp"

using namespace pgkappa;

namespace {

FactoredInteger fi(long long n) { return factor(Int(n)); }
FactoredInteger lit(const std::string& s) { return FactoredInteger::parse(s); }

}  // namespace

TEST_CASE("beta frozen examples") {
    auto b = beta(fi(4290), 5, 1);
    CHECK(b.value == 1210);
    CHECK(b.phi_n == 960);
    CHECK(b.cofactor == 1);
    CHECK(b.inner == Rat(250));

    auto c = beta(fi(210), 4, 1);
    CHECK(c.value == 70);
    CHECK(c.inner == Rat(22));   // 30 - phi(30)

    CHECK(beta(fi(30), 3, 1).value == 12);
    CHECK(beta(fi(12), 2, 1).value == 6);

    CHECK_THROWS_AS(beta(fi(8), 1, 1), std::domain_error);
    CHECK_THROWS(beta(fi(12), 3, 1));
    CHECK_THROWS(beta(fi(12), 1, 5));
}

TEST_CASE("theta frozen examples") {
    auto t = theta(fi(4290), 4, 5, 1, 1);
    CHECK(t.value == 1158);
    CHECK(t.inner == Rat(198));

    CHECK(theta(fi(210), 3, 4, 1, 1).value == 72);
    CHECK(theta(fi(210), 3, 4, 1, 1).inner == Rat(24));
    CHECK(theta(fi(30), 2, 3, 1, 1).value == 15);
    CHECK(theta(fi(30), 2, 3, 1, 1).inner == Rat(7));

    CHECK_THROWS_AS(theta(fi(12), 1, 2, 1, 1), std::domain_error);   // r = 2
    CHECK_THROWS(theta(fi(30), 2, 2, 1, 1));                         // a = b
    CHECK_THROWS(theta(fi(30), 1, 2, 2, 1));                         // s out of range
}

TEST_CASE("theta hits all four branches and matches the direct class count") {
    // s,t relative to the exponents select the branch; 180 = 2^2 * 3^2 * 5.
    auto f = fi(180);
    CHECK(theta(f, 1, 2, 1, 1).value == 110);   // s < e_a, t < e_b, counted by hand
    CHECK(theta(f, 1, 2, 2, 2).value == theta(f, 2, 1, 2, 2).value);
    for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t)
            CHECK(theta(f, 1, 2, s, t).value == theta(f, 2, 1, t, s).value);
}

TEST_CASE("two_phi_deficient") {
    CHECK(two_phi_deficient(fi(4290), {5}));
    CHECK(two_phi_deficient(fi(210), {4}));
    CHECK(two_phi_deficient(lit("3*5*7*11"), {4}));          // 2*48 = 96 < 105
    CHECK_FALSE(two_phi_deficient(lit("5*7*11*13"), {4}));   // 2*240 = 480 > 385
    CHECK_FALSE(two_phi_deficient(fi(15), {}));              // 2*8 = 16 > 15
    CHECK(two_phi_deficient(fi(30), {}));                    // 2*8 = 16 < 30
    CHECK_THROWS(two_phi_deficient(fi(30), {1, 2, 3}));      // not a proper subset
    CHECK_THROWS(two_phi_deficient(fi(30), {4}));
    CHECK_THROWS(two_phi_deficient(fi(30), {1, 1}));
}

TEST_CASE("omega_set") {
    CHECK(omega_set(lit("2*3*5*7*11^3*13^2")) == std::vector<int>{5});
    CHECK(omega_set(lit("2^4*3*5*7*11^4*13^2")) == std::vector<int>{5});
    CHECK(omega_set(lit("2^3*3^3*5^3*7^2")).empty());        // r = 4
    CHECK(omega_set(lit("2^3*3^3*5^3*7^3*11^2")).empty());   // r = 5
    CHECK(omega_set(lit("2^2*3^2*5^2*7^2*11^2*13^2")).empty());   // all e_j <= 2
    CHECK_THROWS_AS(omega_set(fi(30)), std::domain_error);           // r = 3
    CHECK_THROWS_AS(omega_set(lit("2*3*5*7*11")), std::domain_error);   // e_r = 1
}

TEST_CASE("alpha") {
    CHECK(alpha(lit("2*3*5^2*7"), 4, 3) == Rat(0));
    CHECK(alpha(lit("2^2*3^3*5^4*7"), 4, 3) == Rat(0));   // exponents elsewhere do not matter
    CHECK(alpha(lit("2*3*5*7*11"), 5, 4) == Rat(-26, 7));
    CHECK_THROWS_AS(alpha(lit("2^2*3^2"), 1, 2), std::domain_error);   // r = 2
    CHECK_THROWS(alpha(fi(30), 2, 2));
}

TEST_CASE("squarefree_tiebreak") {
    CHECK(squarefree_tiebreak(fi(4290)));         // (2 + 11/10) * 8 <= 30
    CHECK_FALSE(squarefree_tiebreak(fi(210)));    // (2 + 5/4) * 2 > 6
    CHECK(squarefree_tiebreak(lit("2*3*5*7*11*13*17")));   // (2 + 15/12) * 480 <= 2310
    CHECK_THROWS(squarefree_tiebreak(fi(30)));    // r = 3
    CHECK_THROWS(squarefree_tiebreak(fi(1050)));  // not squarefree
}

TEST_CASE("property suite on fixed shapes") {
    for (const char* text : {"2^2*3", "2*3^2", "2^3*3^2*5", "2*3*5*7", "3*5*7*11",
                             "2*3*5^2*7", "3*5*7*11^2*13", "2*3*5*7*11^3*13^2",
                             "2^5*3^4*5^3*7^2*11", "5*7*11*13", "199^5*197^4"}) {
        auto f = lit(text);
        auto violations = props::check_all(f);
        for (const auto& msg : violations) FAIL_CHECK(msg);
        CHECK(violations.empty());
    }
}

TEST_CASE("property suite on seeded random instances") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 60; ++i) {
        auto f = props::random_factored(rng, 2, 7);
        auto violations = props::check_all(f);
        for (const auto& msg : violations) FAIL_CHECK(msg);
        CHECK(violations.empty());
    }
}
