#pragma once

#include "pgkappa/numbers.hpp"

#include <compare>
#include <string>
#include <vector>

namespace pgkappa {

struct PrimePower {
    Int prime;
    int exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// n = p_1^{e_1} p_2^{e_2} ... p_r^{e_r} with p_1 < p_2 < ... < p_r and every e_i >= 1.
/// Prime indices in the public API are 1-based throughout.
class FactoredInteger {
public:
    static FactoredInteger from_factors(std::vector<PrimePower> factors);
    /// Accepts a decimal string or a factored literal like "2^3*3*5^2".
    static FactoredInteger parse(const std::string& text);

    int r() const { return static_cast<int>(factors_.size()); }
    const Int& prime(int a) const;
    int exponent(int a) const;
    const Int& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    bool squarefree() const;
    std::string to_literal() const;

    bool operator==(const FactoredInteger&) const = default;

private:
    std::vector<PrimePower> factors_;
    Int value_;
};

/// A divisor of a FactoredInteger, stored as its exponent vector.
struct Divisor {
    std::vector<int> exps;
    auto operator<=>(const Divisor&) const = default;
};

/// Trial division up to 10^6, then Pollard rho on probable-prime-checked cofactors.
FactoredInteger factor(const Int& n);

Int totient(const FactoredInteger& f);
Int totient(const FactoredInteger& f, const Divisor& d);
Int radical(const FactoredInteger& f);
Int radical_cofactor(const FactoredInteger& f);   // n / rad(n)

/// All divisors in lexicographic order on exponent vectors.
std::vector<Divisor> divisors(const FactoredInteger& f);
Int divisor_value(const FactoredInteger& f, const Divisor& d);
Divisor full_divisor(const FactoredInteger& f);
Divisor divisor_from_value(const FactoredInteger& f, const Int& d);

/// Sum of phi(n / p_a^l) over l = k..s, where 0 <= k <= s <= e_a, by closed form.
Int partial_totient_sum(const FactoredInteger& f, int a, int k, int s);

/// Sum of phi(n / (p_a^k p_b^l)) over k = 1..s, l = 1..t, with a != b, by closed form.
Int double_totient_sum(const FactoredInteger& f, int a, int b, int s, int t);

}
