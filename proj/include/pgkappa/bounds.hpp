#pragma once

#include "pgkappa/descriptor.hpp"
#include "pgkappa/factored.hpp"

#include <vector>

namespace pgkappa {

/// Exact size of a candidate cut-set, kept with its decomposition
/// value = phi(n) + (n / rad(n)) * inner, where inner is an exact rational.
struct BoundValue {
    CutSetDescriptor descriptor;
    Int value;
    Int phi_n;
    Int cofactor;
    Rat inner;
};

/// |Z_a^s| for r >= 2, a in [r], s in [e_a].
BoundValue beta(const FactoredInteger& f, int a, int s);

/// |X_{a,b}^{s,t}| for r >= 3, a != b, s in [e_a], t in [e_b]. Symmetric under
/// swapping (a,s) with (b,t).
BoundValue theta(const FactoredInteger& f, int a, int b, int s, int t);

/// Whether 2 * phi(m) < m for m = rad(n) with the primes at `exclude` removed.
/// `exclude` must be a proper subset of [r].
bool two_phi_deficient(const FactoredInteger& f, const std::vector<int>& exclude);

/// The index set of competitors to Z_r^{e_r}: all j < r with e_j >= 3,
/// p_r - p_j <= r - 4 and 2 phi(rad/p_j) < rad/p_j. Requires r >= 4, e_r >= 2.
std::vector<int> omega_set(const FactoredInteger& f);

/// Discriminant whose sign orders beta_a^{e_a} against theta_{a,b}^{e_a,t} in t.
/// Requires r >= 3 and a != b.
Rat alpha(const FactoredInteger& f, int a, int b);

/// For squarefree n with r >= 4: whether |X_{r-1,r}^{1,1}| attains the minimum,
/// i.e. (2 + (p_r - 2)/(p_{r-1} - 1)) * phi(p_1...p_{r-2}) <= p_1...p_{r-2}.
bool squarefree_tiebreak(const FactoredInteger& f);

}
