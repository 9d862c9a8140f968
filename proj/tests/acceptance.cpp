// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every expected value is exact; each criterion also carries a wall
// clock budget that is enforced.

#include "pgkappa/engine.hpp"
#include "support/properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace pgkappa;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    double budget_ms;
    std::function<std::string()> run;   // returns "" on success, else a reason
};

void run_all(const std::vector<Criterion>& criteria) {
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = criteria[i].run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        bool in_budget = ms <= criteria[i].budget_ms;
        bool pass = reason.empty() && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %zu: %s  %s  (%.1f ms / budget %.0f ms)%s%s\n", i + 1,
                    pass ? "PASS" : "FAIL", criteria[i].label.c_str(), ms,
                    criteria[i].budget_ms, reason.empty() ? "" : "  -- ",
                    reason.c_str());
    }
}

FactoredInteger fi(long long n) { return factor(Int(n)); }
FactoredInteger lit(const std::string& s) { return FactoredInteger::parse(s); }

template <typename T, typename U>
std::string expect_eq(const T& got, const U& want, const std::string& what) {
    if (got == want) return "";
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    return os.str();
}

std::string criterion1() {
    auto f = fi(4290);
    Int phi_n = totient(f);
    if (auto e = expect_eq(phi_n, Int(960), "phi(4290)"); !e.empty()) return e;
    auto th = theta(f, 4, 5, 1, 1);
    if (auto e = expect_eq(th.value, phi_n + 198, "theta_{4,5}^{1,1}"); !e.empty()) return e;
    auto bz = beta(f, 5, 1);
    if (auto e = expect_eq(bz.value, phi_n + 250, "beta_5^1"); !e.empty()) return e;
    auto res = kappa(f);
    if (auto e = expect_eq(res.kappa, Int(1158), "kappa(4290)"); !e.empty()) return e;
    if (res.minimizers.size() != 1 || res.minimizers[0].str() != "X:4:5:1:1")
        return "minimizer of n=4290 is not X:4:5:1:1";
    return "";
}

std::string criterion2() {
    for (int n5 : {3, 4, 5, 6}) {
        auto f = lit("2*3*5*7*11^" + std::to_string(n5) + "*13^2");
        auto res = kappa(f);
        auto u6 = beta(f, 6, 2);
        auto u5 = beta(f, 5, n5);
        if (auto e = expect_eq(u6.inner, Rat(7590, 13), "u_6 inner term"); !e.empty()) return e;
        Rat expected_u5 = Rat(1578, pow_int(Int(11), n5 - 1)) + 576;
        if (auto e = expect_eq(u5.inner, expected_u5, "u_5 inner term"); !e.empty()) return e;
        const Int& want = n5 == 3 ? u6.value : u5.value;
        if (auto e = expect_eq(res.kappa, want, "kappa with n_5=" + std::to_string(n5));
            !e.empty())
            return e;
    }
    return "";
}

std::string criterion3() {
    for (int n3 : {2, 3}) {
        auto f = lit("2*3*5^" + std::to_string(n3) + "*7");
        auto res = kappa(f);
        auto u4 = beta(f, 4, 1);
        auto u3 = beta(f, 3, n3);
        if (auto e = expect_eq(u4.inner, Rat(22), "u_4 inner term"); !e.empty()) return e;
        Rat expected_u3 = Rat(18, pow_int(Int(5), n3 - 1)) + 12;
        if (auto e = expect_eq(u3.inner, expected_u3, "u_3 inner term"); !e.empty()) return e;
        if (auto e = expect_eq(res.kappa, u3.value, "kappa"); !e.empty()) return e;
        if (res.minimizers.size() != 1 ||
            res.minimizers[0].str() != "Z:3:" + std::to_string(n3))
            return "minimizer is not Z:3:" + std::to_string(n3);
        if (res.uniqueness.tag != Uniqueness::Tag::Unique) return "uniqueness tag not Unique";
    }
    return "";
}

std::string criterion4() {
    for (int n4 : {2, 3}) {
        auto f = lit("3*5*7*11^" + std::to_string(n4) + "*13");
        auto res = kappa(f);
        auto w5 = beta(f, 5, 1);
        auto w4 = beta(f, 4, n4);
        if (auto e = expect_eq(w5.inner, Rat(675), "w_5 inner term"); !e.empty()) return e;
        Rat expected_w4 = Rat(213, pow_int(Int(11), n4 - 1)) + 576;
        if (auto e = expect_eq(w4.inner, expected_w4, "w_4 inner term"); !e.empty()) return e;
        if (auto e = expect_eq(res.kappa, w4.value, "kappa"); !e.empty()) return e;
        if (res.minimizers.size() != 1 ||
            res.minimizers[0].str() != "Z:4:" + std::to_string(n4))
            return "minimizer is not Z:4:" + std::to_string(n4);
        if (res.uniqueness.tag != Uniqueness::Tag::Unique) return "uniqueness tag not Unique";
    }
    return "";
}

std::string criterion5() {
    for (long long n = 2; n <= 300; ++n) {
        auto f = fi(n);
        if (f.r() < 2) continue;
        auto res = kappa(f);
        ExplicitGraph g(f);
        long long oracle = oracle_vertex_connectivity(g);
        if (res.kappa != oracle)
            return "n=" + std::to_string(n) + ": engine " + res.kappa.str() + " vs oracle " +
                   std::to_string(oracle);
    }
    return "";
}

std::string criterion6() {
    for (long long n = 2; n <= 3000; ++n) {
        auto f = fi(n);
        if (f.r() < 2) continue;
        OrderClassGraph quotient(f);
        auto check = [&](const CutSetDescriptor& d, const Int& bound) -> std::string {
            DivisorSet dset = build_cutset(f, d);
            if (dset.cardinality() != bound)
                return "n=" + std::to_string(n) + " " + d.str() + ": built size " +
                       dset.cardinality().str() + " != bound " + bound.str();
            if (!is_cutset(quotient, dset).disconnects)
                return "n=" + std::to_string(n) + " " + d.str() + " does not disconnect";
            return "";
        };
        for (int a = 1; a <= f.r(); ++a)
            for (int s = 1; s <= f.exponent(a); ++s)
                if (auto e = check(CutSetDescriptor::make_z(a, s), beta(f, a, s).value);
                    !e.empty())
                    return e;
        if (f.r() >= 3)
            for (int a = 1; a <= f.r(); ++a)
                for (int b = a + 1; b <= f.r(); ++b)
                    for (int s = 1; s <= f.exponent(a); ++s)
                        for (int t = 1; t <= f.exponent(b); ++t)
                            if (auto e = check(CutSetDescriptor::make_x(a, b, s, t),
                                               theta(f, a, b, s, t).value);
                                !e.empty())
                                return e;
    }
    return "";
}

std::string criterion7() {
    std::mt19937_64 rng(20250301);
    for (int i = 0; i < 200; ++i) {
        auto f = props::random_factored(rng, 2, 7, 200, 5);
        auto violations = props::check_all(f);
        if (!violations.empty())
            return "instance " + std::to_string(i) + ": " + violations.front();
    }
    return "";
}

std::string criterion8() {
    struct Expected {
        long long n;
        std::vector<std::string> family;
    };
    // Families pinned from the two- and three-prime rules: with smallest prime 2
    // the whole level family of the largest prime (its exponent counts them);
    // with smallest prime >= 3 the level-1 cut-set alone.
    std::vector<Expected> table{
        {12, {"Z:2:1"}},  {15, {"Z:2:1"}}, {24, {"Z:2:1"}}, {30, {"Z:3:1"}},
        {45, {"Z:2:1"}},  {60, {"Z:3:1"}}, {105, {"Z:3:1"}},
    };
    for (const auto& row : table) {
        auto f = fi(row.n);
        auto enumeration = minimum_class_cutsets(f);   // no hint: bound derived internally
        auto res = kappa(f);
        if (enumeration.min_weight != res.kappa)
            return "n=" + std::to_string(row.n) + ": brute weight " +
                   enumeration.min_weight.str() + " != engine " + res.kappa.str();
        if (enumeration.cutsets.size() != row.family.size())
            return "n=" + std::to_string(row.n) + ": found " +
                   std::to_string(enumeration.cutsets.size()) + " minimum cut-sets, want " +
                   std::to_string(row.family.size());
        std::set<std::vector<Int>> found;
        for (const auto& cs : enumeration.cutsets) found.insert(cs.member_values());
        std::set<std::vector<Int>> want;
        for (const auto& name : row.family)
            want.insert(build_cutset(f, CutSetDescriptor::parse(name)).member_values());
        if (found != want) return "n=" + std::to_string(row.n) + ": family mismatch";
        std::set<std::vector<Int>> engine_family;
        for (const auto& m : res.minimizers)
            engine_family.insert(build_cutset(f, m).member_values());
        if (engine_family != want)
            return "n=" + std::to_string(row.n) + ": engine family mismatch";
    }
    return "";
}

std::string criterion9() {
    std::mt19937_64 rng(777000111);
    for (int i = 0; i < 500; ++i) {
        auto f = props::random_factored(rng, 4, 7, 200, 5);
        auto res = kappa(f);
        Int table_min = -1;
        for (const auto& c : res.candidates)
            if (table_min < 0 || c.bound.value < table_min) table_min = c.bound.value;
        if (res.kappa != table_min)
            return "instance " + std::to_string(i) + " (" + f.to_literal() + "): rule " +
                   rule_name(res.rule) + " gave " + res.kappa.str() + ", table min " +
                   table_min.str();
    }
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"n=4290 bound decompositions, kappa and minimizer", 1000, criterion1},
        {"2*3*5*7*11^k*13^2 family: rule crossover and inner terms", 1000, criterion2},
        {"2*3*5^k*7 family: kappa, unique minimizer, inner terms", 1000, criterion3},
        {"3*5*7*11^k*13 family: kappa, unique minimizer, inner terms", 1000, criterion4},
        {"engine equals max-flow oracle for all non-prime-power n <= 300", 300000, criterion5},
        {"cut-set sizes match closed forms and disconnect for n <= 3000", 600000, criterion6},
        {"inequality and comparison properties on 200 seeded instances", 60000, criterion7},
        {"minimum cut-set families by brute force at tiny scale", 60000, criterion8},
        {"dispatched rule equals candidate minimum on 500 seeded instances", 60000, criterion9},
    };
    run_all(criteria);
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
    return 0;
}
