#pragma once

#include "pgkappa/descriptor.hpp"
#include "pgkappa/errors.hpp"
#include "pgkappa/factored.hpp"

#include <vector>

namespace pgkappa {

/// A union of whole order classes E_d, stored by divisor. The cardinality is
/// the sum of phi(d) over members, since distinct classes are disjoint.
class DivisorSet {
public:
    DivisorSet(FactoredInteger parent, std::vector<Divisor> members);

    const FactoredInteger& parent() const { return parent_; }
    const std::vector<Divisor>& members() const { return members_; }
    const Int& cardinality() const { return cardinality_; }
    bool contains(const Divisor& d) const;
    bool covers_all() const;
    std::vector<Int> member_values() const;   // sorted ascending

private:
    FactoredInteger parent_;
    std::vector<Divisor> members_;   // sorted lexicographically, unique
    Int cardinality_;
};

/// Order of the residue x in the additive group of integers mod n: n / gcd(n, x).
Divisor element_order(const FactoredInteger& f, const Int& x);

/// Classes {n/p_a^l : l < s} plus every divisor of n/(p_i p_a^s) for i != a.
DivisorSet build_Z(const FactoredInteger& f, int a, int s);

/// Classes {n/(p_a^i p_b^j) : i <= s, j <= t, (i,j) != (s,t)} plus the proper
/// divisors of n/(p_a^s p_b^t).
DivisorSet build_X(const FactoredInteger& f, int a, int b, int s, int t);

DivisorSet build_cutset(const FactoredInteger& f, const CutSetDescriptor& d);

/// All residues whose order lies in the set; requires n <= limit.
std::vector<long long> expand(const DivisorSet& dset, long long limit = 100000);

}
