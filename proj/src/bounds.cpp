#include "pgkappa/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace pgkappa {

namespace {

Int rad_excluding(const FactoredInteger& f, int skip_a, int skip_b) {
    Int result = 1;
    for (int i = 1; i <= f.r(); ++i)
        if (i != skip_a && i != skip_b) result *= f.prime(i);
    return result;
}

Int phi_rad_excluding(const FactoredInteger& f, int skip_a, int skip_b) {
    Int result = 1;
    for (int i = 1; i <= f.r(); ++i)
        if (i != skip_a && i != skip_b) result *= f.prime(i) - 1;
    return result;
}

BoundValue finish(const FactoredInteger& f, CutSetDescriptor desc, const Rat& inner) {
    BoundValue bv;
    bv.descriptor = desc;
    bv.phi_n = totient(f);
    bv.cofactor = radical_cofactor(f);
    bv.inner = inner;
    bv.value = bv.phi_n + to_integer(Rat(bv.cofactor) * inner);
    assert(bv.value < f.value());
    return bv;
}

}  // namespace

BoundValue beta(const FactoredInteger& f, int a, int s) {
    if (f.r() < 2) throw std::domain_error("beta: no cut-sets exist for prime powers");
    validate_descriptor(f, CutSetDescriptor::make_z(a, s));
    Int rad_a = rad_excluding(f, a, 0);
    Int phi_a = phi_rad_excluding(f, a, 0);
    Int pa_pow = pow_int(f.prime(a), s - 1);
    Rat inner = Rat(rad_a + phi_a * (pa_pow - 2), pa_pow);
    return finish(f, CutSetDescriptor::make_z(a, s), inner);
}

BoundValue theta(const FactoredInteger& f, int a, int b, int s, int t) {
    if (f.r() < 3)
        throw std::domain_error("theta: X cut-sets need at least three prime divisors");
    validate_descriptor(f, CutSetDescriptor::make_x(a, b, s, t));
    const Int& pa = f.prime(a);
    const Int& pb = f.prime(b);
    int na = f.exponent(a);
    int nb = f.exponent(b);
    Rat A(phi_rad_excluding(f, a, b));
    Rat B(phi_rad_excluding(f, a, 0));
    Rat C(phi_rad_excluding(f, b, 0));
    Rat P(rad_excluding(f, 0, 0));
    Rat inner;
    if (s == na && t == nb) {
        inner = A * (1 - 2 * pow_rat(pa, -(na - 1)) * pow_rat(pb, -(nb - 1))) + B + C +
                P * pow_rat(pa, -na) * pow_rat(pb, -nb);
    } else if (s == na && t < nb) {
        inner = A * (1 - pow_rat(pb, -t)) + B * (1 - 2 * pow_rat(pa, -(na - 1)) * pow_rat(pb, -t)) +
                C * (1 - pow_rat(pb, -t)) + P * pow_rat(pa, -na) * pow_rat(pb, -t);
    } else if (s < na && t == nb) {
        inner = A * (1 - pow_rat(pa, -s)) + B * (1 - pow_rat(pa, -s)) +
                C * (1 - 2 * pow_rat(pa, -s) * pow_rat(pb, -(nb - 1))) +
                P * pow_rat(pa, -s) * pow_rat(pb, -nb);
    } else {
        Rat phi_P(phi_rad_excluding(f, 0, 0));
        inner = A * (1 - pow_rat(pa, -s)) * (1 - pow_rat(pb, -t)) + B * (1 - pow_rat(pa, -s)) +
                C * (1 - pow_rat(pb, -t)) - 2 * phi_P * pow_rat(pa, -s) * pow_rat(pb, -t) +
                P * pow_rat(pa, -s) * pow_rat(pb, -t);
    }
    return finish(f, CutSetDescriptor::make_x(a, b, s, t), inner);
}

bool two_phi_deficient(const FactoredInteger& f, const std::vector<int>& exclude) {
    std::set<int> skip;
    for (int i : exclude) {
        if (i < 1 || i > f.r()) throw std::out_of_range("exclude index out of range");
        if (!skip.insert(i).second) throw std::invalid_argument("duplicate exclude index");
    }
    if (static_cast<int>(skip.size()) >= f.r())
        throw std::domain_error("exclude must be a proper subset of the prime indices");
    Int m = 1, phi_m = 1;
    for (int i = 1; i <= f.r(); ++i) {
        if (skip.count(i)) continue;
        m *= f.prime(i);
        phi_m *= f.prime(i) - 1;
    }
    return 2 * phi_m < m;
}

std::vector<int> omega_set(const FactoredInteger& f) {
    if (f.r() < 4) throw std::domain_error("omega_set: requires at least four prime divisors");
    if (f.exponent(f.r()) < 2)
        throw std::domain_error("omega_set: requires the largest prime to appear squared");
    std::vector<int> out;
    for (int j = 1; j < f.r(); ++j) {
        if (f.exponent(j) < 3) continue;
        if (f.prime(f.r()) - f.prime(j) > f.r() - 4) continue;
        if (!two_phi_deficient(f, {j})) continue;
        out.push_back(j);
    }
    return out;
}

Rat alpha(const FactoredInteger& f, int a, int b) {
    if (f.r() < 3) throw std::domain_error("alpha: requires at least three prime divisors");
    if (a < 1 || a > f.r() || b < 1 || b > f.r()) throw std::out_of_range("alpha: index out of range");
    if (a == b) throw std::domain_error("alpha: indices must differ");
    Rat factor = 2 + Rat(pow_int(f.prime(a), f.exponent(a)) - 2, f.prime(b));
    return factor * phi_rad_excluding(f, a, b) - rad_excluding(f, a, b);
}

bool squarefree_tiebreak(const FactoredInteger& f) {
    if (f.r() < 4)
        throw std::domain_error("squarefree_tiebreak: requires at least four prime divisors");
    if (!f.squarefree()) throw std::domain_error("squarefree_tiebreak: n must be squarefree");
    int r = f.r();
    Rat lhs = (2 + Rat(f.prime(r) - 2, f.prime(r - 1) - 1)) * phi_rad_excluding(f, r - 1, r);
    return lhs <= Rat(rad_excluding(f, r - 1, r));
}

}
