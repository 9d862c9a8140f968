#pragma once

#include "pgkappa/cutsets.hpp"

#include <iosfwd>
#include <vector>

namespace pgkappa {

/// Quotient of the power graph by order classes: one vertex per divisor of n,
/// weighted by phi(d), with an edge when one divisor divides the other.
class OrderClassGraph {
public:
    explicit OrderClassGraph(FactoredInteger f);

    const FactoredInteger& parent() const { return parent_; }
    int size() const { return static_cast<int>(divisors_.size()); }
    const Divisor& divisor(int i) const { return divisors_[i]; }
    const Int& value(int i) const { return values_[i]; }
    const Int& weight(int i) const { return weights_[i]; }
    bool adjacent(int i, int j) const;
    int index_of(const Divisor& d) const;   // -1 when absent

private:
    FactoredInteger parent_;
    std::vector<Divisor> divisors_;   // lexicographic order
    std::vector<Int> values_;
    std::vector<Int> weights_;
    std::vector<char> adj_;           // dense matrix, only kept while small
    int matrix_dim_ = 0;
};

OrderClassGraph build_quotient(const FactoredInteger& f);

struct CutCheck {
    bool disconnects = false;
    /// Divisor values of the surviving classes, grouped by connected component;
    /// values sorted within a component, components ordered by smallest value.
    std::vector<std::vector<Int>> components;
};

/// Removes the classes of `removed` and reports whether the survivors fall
/// apart. Throws std::domain_error when `removed` covers every class.
CutCheck is_cutset(const OrderClassGraph& q, const DivisorSet& removed);
CutCheck is_cutset(const FactoredInteger& f, const DivisorSet& removed);

/// The power graph on residues 0..n-1. Adjacency is decided through order
/// classes, so only the quotient and a class index per residue are stored.
class ExplicitGraph {
public:
    explicit ExplicitGraph(const FactoredInteger& f, long long limit = 100000);

    long long order() const { return n_; }
    const OrderClassGraph& quotient() const { return quotient_; }
    int class_of(long long x) const { return class_of_[static_cast<size_t>(x)]; }
    const std::vector<std::vector<long long>>& class_members() const { return class_members_; }
    bool adjacent(long long x, long long y) const;
    long long edge_count() const;

private:
    long long n_ = 0;
    OrderClassGraph quotient_;
    std::vector<int> class_of_;
    std::vector<std::vector<long long>> class_members_;
};

/// st-vertex-connectivity of an arbitrary simple graph: unit-capacity max-flow
/// on the split digraph, stopping early once `cap_limit` is reached. s and t
/// must be non-adjacent.
int max_flow_vertex_disjoint(const std::vector<std::vector<int>>& adjacency, int s, int t,
                             int cap_limit);

/// Exact vertex connectivity by Menger's theorem. Endpoint pairs are taken
/// from a minimum-degree vertex's non-neighborhood plus non-adjacent pairs of
/// its neighbors, deduplicated by order class. Returns n-1 for complete graphs.
long long oracle_vertex_connectivity(const ExplicitGraph& g, long long limit = 600);

/// Every union of order classes with the given total weight whose removal
/// disconnects the graph. Requires the divisor count to stay within max_classes.
std::vector<DivisorSet> min_cutsets_brute(const FactoredInteger& f, const Int& weight,
                                          int max_classes = 16);

struct ClassCutEnumeration {
    Int min_weight;
    std::vector<DivisorSet> cutsets;
};

/// Smallest-weight disconnecting class unions. `upper_bound` must be a valid
/// upper bound on the answer (pass 0 to derive one internally).
ClassCutEnumeration minimum_class_cutsets(const FactoredInteger& f, int max_classes = 16,
                                          const Int& upper_bound = 0);

/// Unrestricted search over explicit kappa-element subsets, with the universal
/// vertices forced in. Exhaustive cross-check for tiny n only.
std::vector<std::vector<long long>> paranoid_min_cutsets(const FactoredInteger& f,
                                                         long long limit = 40);

/// One "u v" pair per line, 0-based residues.
void export_edge_list(const ExplicitGraph& g, std::ostream& out);

}
