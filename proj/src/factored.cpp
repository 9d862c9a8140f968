#include "pgkappa/factored.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pgkappa {

namespace {

void check_prime_index(const FactoredInteger& f, int a) {
    if (a < 1 || a > f.r())
        throw std::out_of_range("prime index " + std::to_string(a) + " out of range [1," +
                                std::to_string(f.r()) + "]");
}

Int pollard_rho(const Int& n) {
    using boost::multiprecision::gcd;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x >= y ? Int(x - y) : Int(y - x), n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, int>& acc) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        acc[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, acc);
    factor_into(n / d, acc);
}

}  // namespace

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    if (factors.empty()) throw std::invalid_argument("factorization must be non-empty");
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    std::vector<PrimePower> merged;
    for (auto& pp : factors) {
        if (pp.exponent < 1) throw std::invalid_argument("exponents must be >= 1");
        if (!is_probable_prime(pp.prime))
            throw std::invalid_argument(pp.prime.str() + " is not prime");
        if (!merged.empty() && merged.back().prime == pp.prime)
            merged.back().exponent += pp.exponent;
        else
            merged.push_back(std::move(pp));
    }
    FactoredInteger f;
    f.factors_ = std::move(merged);
    f.value_ = 1;
    for (const auto& pp : f.factors_) f.value_ *= pow_int(pp.prime, pp.exponent);
    return f;
}

FactoredInteger FactoredInteger::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty number");

    if (s.find('*') == std::string::npos && s.find('^') == std::string::npos) {
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("not a decimal integer: " + text);
        return factor(Int(s));
    }

    std::vector<PrimePower> fs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.empty()) throw std::invalid_argument("malformed factored literal: " + text);
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        std::string exp = caret == std::string::npos ? "1" : tok.substr(caret + 1);
        if (base.empty() || exp.empty())
            throw std::invalid_argument("malformed factored literal: " + text);
        for (char ch : base + exp)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("malformed factored literal: " + text);
        long long e = std::stoll(exp);
        if (e < 1 || e > 1000000)
            throw std::invalid_argument("exponent out of range in: " + text);
        Int base_value(base);
        if (is_probable_prime(base_value)) {
            fs.push_back({base_value, static_cast<int>(e)});
        } else {
            // composite base: factor it, so literals like "15015*11" work
            FactoredInteger base_factored = factor(base_value);
            for (const auto& pp : base_factored.factors()) {
                long long scaled = static_cast<long long>(pp.exponent) * e;
                if (scaled > 1000000)
                    throw std::invalid_argument("exponent out of range in: " + text);
                fs.push_back({pp.prime, static_cast<int>(scaled)});
            }
        }
    }
    return from_factors(std::move(fs));
}

const Int& FactoredInteger::prime(int a) const {
    check_prime_index(*this, a);
    return factors_[a - 1].prime;
}

int FactoredInteger::exponent(int a) const {
    check_prime_index(*this, a);
    return factors_[a - 1].exponent;
}

bool FactoredInteger::squarefree() const {
    for (const auto& pp : factors_)
        if (pp.exponent > 1) return false;
    return true;
}

std::string FactoredInteger::to_literal() const {
    std::string out;
    for (const auto& pp : factors_) {
        if (!out.empty()) out += '*';
        out += pp.prime.str();
        if (pp.exponent > 1) out += '^' + std::to_string(pp.exponent);
    }
    return out;
}

FactoredInteger factor(const Int& n) {
    if (n < 2) throw std::domain_error("factor: n must be >= 2");
    std::map<Int, int> acc;
    Int m = n;
    for (int p : {2, 3, 5}) {
        while (m % p == 0) {
            acc[p] += 1;
            m /= p;
        }
    }
    for (Int p = 7; p <= 1000000 && p * p <= m; p += 6) {
        for (Int q : {p, Int(p + 4)}) {
            while (m % q == 0) {
                acc[q] += 1;
                m /= q;
            }
        }
    }
    if (m > 1) factor_into(m, acc);
    std::vector<PrimePower> fs;
    fs.reserve(acc.size());
    for (const auto& [p, e] : acc) fs.push_back({p, e});
    return FactoredInteger::from_factors(std::move(fs));
}

Int totient(const FactoredInteger& f) {
    Int result = 1;
    for (const auto& pp : f.factors())
        result *= pow_int(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    return result;
}

Int totient(const FactoredInteger& f, const Divisor& d) {
    if (static_cast<int>(d.exps.size()) != f.r())
        throw std::invalid_argument("divisor has wrong number of exponents");
    Int result = 1;
    for (int i = 0; i < f.r(); ++i) {
        int e = d.exps[i];
        if (e < 0 || e > f.factors()[i].exponent)
            throw std::invalid_argument("divisor exponent out of range");
        if (e > 0) result *= pow_int(f.factors()[i].prime, e - 1) * (f.factors()[i].prime - 1);
    }
    return result;
}

Int radical(const FactoredInteger& f) {
    Int result = 1;
    for (const auto& pp : f.factors()) result *= pp.prime;
    return result;
}

Int radical_cofactor(const FactoredInteger& f) {
    Int result = 1;
    for (const auto& pp : f.factors()) result *= pow_int(pp.prime, pp.exponent - 1);
    return result;
}

std::vector<Divisor> divisors(const FactoredInteger& f) {
    std::vector<Divisor> out;
    Divisor cur;
    cur.exps.assign(f.r(), 0);
    // odometer with the last index fastest gives lexicographic order
    while (true) {
        out.push_back(cur);
        int i = f.r() - 1;
        while (i >= 0 && cur.exps[i] == f.factors()[i].exponent) {
            cur.exps[i] = 0;
            --i;
        }
        if (i < 0) break;
        cur.exps[i] += 1;
    }
    return out;
}

Int divisor_value(const FactoredInteger& f, const Divisor& d) {
    if (static_cast<int>(d.exps.size()) != f.r())
        throw std::invalid_argument("divisor has wrong number of exponents");
    Int result = 1;
    for (int i = 0; i < f.r(); ++i) result *= pow_int(f.factors()[i].prime, d.exps[i]);
    return result;
}

Divisor full_divisor(const FactoredInteger& f) {
    Divisor d;
    d.exps.reserve(f.r());
    for (const auto& pp : f.factors()) d.exps.push_back(pp.exponent);
    return d;
}

Divisor divisor_from_value(const FactoredInteger& f, const Int& d) {
    if (d < 1) throw std::invalid_argument("divisor value must be >= 1");
    Int m = d;
    Divisor out;
    out.exps.assign(f.r(), 0);
    for (int i = 0; i < f.r(); ++i) {
        while (m % f.factors()[i].prime == 0) {
            m /= f.factors()[i].prime;
            out.exps[i] += 1;
            if (out.exps[i] > f.factors()[i].exponent)
                throw std::invalid_argument(d.str() + " does not divide " + f.value().str());
        }
    }
    if (m != 1) throw std::invalid_argument(d.str() + " does not divide " + f.value().str());
    return out;
}

namespace {

Int phi_of_radical_excluding(const FactoredInteger& f, int skip_a, int skip_b) {
    Int result = 1;
    for (int i = 1; i <= f.r(); ++i)
        if (i != skip_a && i != skip_b) result *= f.prime(i) - 1;
    return result;
}

}  // namespace

Int partial_totient_sum(const FactoredInteger& f, int a, int k, int s) {
    check_prime_index(f, a);
    if (k < 0 || k > s || s > f.exponent(a))
        throw std::domain_error("partial_totient_sum: need 0 <= k <= s <= e_a");
    Rat sum = Rat(radical_cofactor(f)) * pow_rat(f.prime(a), 1 - k) *
              phi_of_radical_excluding(f, a, 0);
    if (s < f.exponent(a)) sum *= Rat(1) - pow_rat(f.prime(a), -(s - k + 1));
    return to_integer(sum);
}

Int double_totient_sum(const FactoredInteger& f, int a, int b, int s, int t) {
    check_prime_index(f, a);
    check_prime_index(f, b);
    if (a == b) throw std::domain_error("double_totient_sum: indices must differ");
    if (s < 1 || s > f.exponent(a) || t < 1 || t > f.exponent(b))
        throw std::domain_error("double_totient_sum: levels out of range");
    Rat sum = Rat(radical_cofactor(f)) * phi_of_radical_excluding(f, a, b);
    if (s < f.exponent(a)) sum *= Rat(1) - pow_rat(f.prime(a), -s);
    if (t < f.exponent(b)) sum *= Rat(1) - pow_rat(f.prime(b), -t);
    return to_integer(sum);
}

}
