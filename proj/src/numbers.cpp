#include "pgkappa/numbers.hpp"

#include <stdexcept>

namespace pgkappa {

Int pow_int(const Int& base, long long exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int result = 1;
    Int b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

Rat pow_rat(const Int& base, long long exp) {
    if (exp >= 0) return Rat(pow_int(base, exp));
    return Rat(Int(1), pow_int(base, -exp));
}

Int to_integer(const Rat& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error("expected an integral value, got " + q.str());
    return boost::multiprecision::numerator(q);
}

namespace {
constexpr int kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : kBases) {
        if (n % p == 0) return n == p;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : kBases) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = boost::multiprecision::powm(x, Int(2), n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

}
