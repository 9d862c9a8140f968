#include "pgkappa/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace pgkappa {

namespace {

bool comparable(const Divisor& x, const Divisor& y) {
    bool le = true, ge = true;
    for (size_t i = 0; i < x.exps.size(); ++i) {
        le = le && x.exps[i] <= y.exps[i];
        ge = ge && x.exps[i] >= y.exps[i];
        if (!le && !ge) return false;
    }
    return le || ge;
}

}  // namespace

OrderClassGraph::OrderClassGraph(FactoredInteger f) : parent_(std::move(f)) {
    divisors_ = divisors(parent_);
    values_.reserve(divisors_.size());
    weights_.reserve(divisors_.size());
    for (const auto& d : divisors_) {
        values_.push_back(divisor_value(parent_, d));
        weights_.push_back(totient(parent_, d));
    }
    int n = size();
    if (n <= 2048) {
        matrix_dim_ = n;
        adj_.assign(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (comparable(divisors_[i], divisors_[j]))
                    adj_[static_cast<size_t>(i) * n + j] = adj_[static_cast<size_t>(j) * n + i] = 1;
    }
}

bool OrderClassGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    if (matrix_dim_) return adj_[static_cast<size_t>(i) * matrix_dim_ + j] != 0;
    return comparable(divisors_[i], divisors_[j]);
}

int OrderClassGraph::index_of(const Divisor& d) const {
    auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
    if (it == divisors_.end() || *it != d) return -1;
    return static_cast<int>(it - divisors_.begin());
}

OrderClassGraph build_quotient(const FactoredInteger& f) { return OrderClassGraph(f); }

CutCheck is_cutset(const OrderClassGraph& q, const DivisorSet& removed) {
    if (removed.parent().value() != q.parent().value())
        throw std::invalid_argument("divisor set belongs to a different n");
    int n = q.size();
    std::vector<char> gone(n, 0);
    for (const auto& d : removed.members()) {
        int i = q.index_of(d);
        if (i < 0) throw std::invalid_argument("divisor set member is not a divisor of n");
        gone[i] = 1;
    }
    std::vector<int> survivors;
    for (int i = 0; i < n; ++i)
        if (!gone[i]) survivors.push_back(i);
    if (survivors.empty())
        throw std::domain_error("removed classes cover the whole graph; not a cut-set question");

    CutCheck result;
    std::vector<char> seen(n, 0);
    for (int start : survivors) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int v : survivors) {
                if (!seen[v] && q.adjacent(u, v)) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::vector<Int> vals;
        vals.reserve(comp.size());
        for (int u : comp) vals.push_back(q.value(u));
        std::sort(vals.begin(), vals.end());
        result.components.push_back(std::move(vals));
    }
    std::sort(result.components.begin(), result.components.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    result.disconnects = result.components.size() >= 2;
    return result;
}

CutCheck is_cutset(const FactoredInteger& f, const DivisorSet& removed) {
    return is_cutset(OrderClassGraph(f), removed);
}

ExplicitGraph::ExplicitGraph(const FactoredInteger& f, long long limit)
    : quotient_(f) {
    if (f.value() > limit)
        throw ResourceLimitError("explicit graph for n=" + f.value().str() + " exceeds limit " +
                                 std::to_string(limit));
    n_ = f.value().convert_to<long long>();
    class_of_.assign(static_cast<size_t>(n_), -1);
    class_members_.assign(quotient_.size(), {});
    for (long long x = 0; x < n_; ++x) {
        int c = quotient_.index_of(element_order(f, Int(x)));
        class_of_[static_cast<size_t>(x)] = c;
        class_members_[c].push_back(x);
    }
}

bool ExplicitGraph::adjacent(long long x, long long y) const {
    if (x == y) return false;
    int cx = class_of(x), cy = class_of(y);
    return cx == cy || quotient_.adjacent(cx, cy);
}

long long ExplicitGraph::edge_count() const {
    long long total = 0;
    int d = quotient_.size();
    std::vector<long long> w(d);
    for (int i = 0; i < d; ++i) w[i] = static_cast<long long>(class_members_[i].size());
    for (int i = 0; i < d; ++i) {
        total += w[i] * (w[i] - 1) / 2;
        for (int j = i + 1; j < d; ++j)
            if (quotient_.adjacent(i, j)) total += w[i] * w[j];
    }
    return total;
}

namespace {

// Unit-capacity split digraph with arc pairs at indices (2k, 2k+1).
struct SplitFlowNet {
    int nodes;
    std::vector<int> head, to, nxt, cap;

    explicit SplitFlowNet(int vertex_count) : nodes(2 * vertex_count), head(nodes, -1) {}

    static int in_node(int v) { return 2 * v; }
    static int out_node(int v) { return 2 * v + 1; }

    void add_arc(int u, int v, int c) {
        to.push_back(v); cap.push_back(c); nxt.push_back(head[u]);
        head[u] = static_cast<int>(to.size()) - 1;
        to.push_back(u); cap.push_back(0); nxt.push_back(head[v]);
        head[v] = static_cast<int>(to.size()) - 1;
    }

    // Augments one unit at a time until cap_limit is hit or no path remains.
    int run(int s, int t, int cap_limit) {
        int flow = 0;
        std::vector<int> parent_arc(nodes);
        while (flow < cap_limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::deque<int> queue{s};
            parent_arc[s] = -2;
            bool reached = false;
            while (!queue.empty() && !reached) {
                int u = queue.front();
                queue.pop_front();
                for (int e = head[u]; e != -1; e = nxt[e]) {
                    if (cap[e] <= 0 || parent_arc[to[e]] != -1) continue;
                    parent_arc[to[e]] = e;
                    if (to[e] == t) { reached = true; break; }
                    queue.push_back(to[e]);
                }
            }
            if (!reached) break;
            for (int v = t; v != s;) {
                int e = parent_arc[v];
                cap[e] -= 1;
                cap[e ^ 1] += 1;
                v = to[e ^ 1];
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int max_flow_vertex_disjoint(const std::vector<std::vector<int>>& adjacency, int s, int t,
                             int cap_limit) {
    int n = static_cast<int>(adjacency.size());
    if (s == t || s < 0 || t < 0 || s >= n || t >= n)
        throw std::invalid_argument("bad flow endpoints");
    SplitFlowNet net(n);
    int big = n + 1;
    for (int v = 0; v < n; ++v)
        net.add_arc(SplitFlowNet::in_node(v), SplitFlowNet::out_node(v),
                    (v == s || v == t) ? big : 1);
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u])
            net.add_arc(SplitFlowNet::out_node(u), SplitFlowNet::in_node(v), big);
    return net.run(SplitFlowNet::out_node(s), SplitFlowNet::in_node(t), cap_limit);
}

long long oracle_vertex_connectivity(const ExplicitGraph& g, long long limit) {
    long long n = g.order();
    if (n > limit)
        throw ResourceLimitError("connectivity oracle limited to n <= " + std::to_string(limit));
    const auto& q = g.quotient();
    int d = q.size();

    bool any_nonadjacent = false;
    for (int i = 0; i < d && !any_nonadjacent; ++i)
        for (int j = i + 1; j < d && !any_nonadjacent; ++j)
            if (!q.adjacent(i, j)) any_nonadjacent = true;
    if (!any_nonadjacent) return n - 1;   // complete graph

    std::vector<long long> class_size(d), degree(d);
    for (int i = 0; i < d; ++i) class_size[i] = static_cast<long long>(g.class_members()[i].size());
    int min_class = 0;
    for (int i = 0; i < d; ++i) {
        degree[i] = class_size[i] - 1;
        for (int j = 0; j < d; ++j)
            if (q.adjacent(i, j)) degree[i] += class_size[j];
        if (degree[i] < degree[min_class]) min_class = i;
    }

    std::vector<std::vector<int>> adjacency(static_cast<size_t>(n));
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y)
            if (x != y && g.adjacent(x, y)) adjacency[static_cast<size_t>(x)].push_back(static_cast<int>(y));

    auto rep = [&](int c) { return static_cast<int>(g.class_members()[c].front()); };
    long long best = degree[min_class];
    auto probe = [&](int sx, int tx) {
        if (best <= 0) return;
        best = std::min(best, static_cast<long long>(max_flow_vertex_disjoint(
                                  adjacency, sx, tx, static_cast<int>(best))));
    };

    // Source fixed in the minimum-degree class; one flow per non-neighbor class.
    for (int e = 0; e < d; ++e)
        if (e != min_class && !q.adjacent(min_class, e)) probe(rep(min_class), rep(e));
    // Then one flow per non-adjacent pair of neighbor classes.
    for (int e = 0; e < d; ++e) {
        if (!q.adjacent(min_class, e)) continue;
        for (int h = e + 1; h < d; ++h) {
            if (!q.adjacent(min_class, h)) continue;
            if (!q.adjacent(e, h)) probe(rep(e), rep(h));
        }
    }
    return best;
}

namespace {

std::vector<int> universal_classes(const OrderClassGraph& q) {
    std::vector<int> out;
    for (int i = 0; i < q.size(); ++i) {
        bool universal = true;
        for (int j = 0; j < q.size() && universal; ++j)
            if (i != j && !q.adjacent(i, j)) universal = false;
        if (universal) out.push_back(i);
    }
    return out;
}

bool survivors_disconnected(const OrderClassGraph& q, const std::vector<char>& removed) {
    int n = q.size();
    int start = -1, alive = 0;
    for (int i = 0; i < n; ++i)
        if (!removed[i]) {
            if (start < 0) start = i;
            ++alive;
        }
    if (alive <= 1) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    int visited = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && !seen[v] && q.adjacent(u, v)) {
                seen[v] = 1;
                ++visited;
                queue.push_back(v);
            }
        }
    }
    return visited < alive;
}

// Include/exclude search over the non-universal classes. `best` is an
// inclusive weight bound; everything at the smallest disconnecting weight
// found within it ends up in `found`.
struct ClassSearch {
    const OrderClassGraph& q;
    std::vector<int> optional_order;   // optional class indices, heaviest first
    std::vector<char> removed;
    Int weight;
    Int best;
    bool exact_only = false;           // when set, only collect weight == best
    std::vector<std::vector<int>> found;   // removed-class index lists
    Int found_weight = -1;

    void dfs(size_t pos) {
        if (pos == optional_order.size()) {
            if (weight > best) return;
            if (exact_only && weight != best) return;
            if (!survivors_disconnected(q, removed)) return;
            if (found_weight < 0 || weight < found_weight) {
                found.clear();
                found_weight = weight;
                best = weight;
            }
            std::vector<int> set;
            for (int i = 0; i < q.size(); ++i)
                if (removed[i]) set.push_back(i);
            found.push_back(std::move(set));
            return;
        }
        int c = optional_order[pos];
        if (weight + q.weight(c) <= best) {
            removed[c] = 1;
            weight += q.weight(c);
            dfs(pos + 1);
            weight -= q.weight(c);
            removed[c] = 0;
        }
        dfs(pos + 1);
    }
};

ClassSearch make_search(const OrderClassGraph& q, const Int& bound, bool exact_only) {
    ClassSearch search{q, {}, std::vector<char>(q.size(), 0), 0, bound, exact_only, {}, -1};
    for (int u : universal_classes(q)) {
        search.removed[u] = 1;
        search.weight += q.weight(u);
    }
    for (int i = 0; i < q.size(); ++i)
        if (!search.removed[i]) search.optional_order.push_back(i);
    std::sort(search.optional_order.begin(), search.optional_order.end(),
              [&](int x, int y) { return q.weight(x) > q.weight(y); });
    return search;
}

std::vector<DivisorSet> to_divisor_sets(const OrderClassGraph& q,
                                        const std::vector<std::vector<int>>& sets) {
    std::vector<DivisorSet> out;
    out.reserve(sets.size());
    for (const auto& idxs : sets) {
        std::vector<Divisor> ds;
        ds.reserve(idxs.size());
        for (int i : idxs) ds.push_back(q.divisor(i));
        out.emplace_back(q.parent(), std::move(ds));
    }
    return out;
}

}  // namespace

std::vector<DivisorSet> min_cutsets_brute(const FactoredInteger& f, const Int& weight,
                                          int max_classes) {
    OrderClassGraph q(f);
    if (q.size() > max_classes)
        throw ResourceLimitError("class enumeration limited to " + std::to_string(max_classes) +
                                 " classes, n has " + std::to_string(q.size()));
    ClassSearch search = make_search(q, weight, /*exact_only=*/true);
    if (search.weight > weight) return {};
    search.dfs(0);
    return to_divisor_sets(q, search.found);
}

ClassCutEnumeration minimum_class_cutsets(const FactoredInteger& f, int max_classes,
                                          const Int& upper_bound) {
    OrderClassGraph q(f);
    if (q.size() > max_classes)
        throw ResourceLimitError("class enumeration limited to " + std::to_string(max_classes) +
                                 " classes, n has " + std::to_string(q.size()));
    Int bound = upper_bound;
    if (bound <= 0) {
        // removing everything but a heaviest non-adjacent pair always disconnects
        Int keep = -1;
        for (int i = 0; i < q.size(); ++i)
            for (int j = i + 1; j < q.size(); ++j)
                if (!q.adjacent(i, j)) keep = std::max(keep, Int(q.weight(i) + q.weight(j)));
        if (keep < 0) throw std::domain_error("complete graph: no cut-sets exist");
        bound = f.value() - keep;
    }
    ClassSearch search = make_search(q, bound, /*exact_only=*/false);
    if (search.weight <= search.best) search.dfs(0);
    ClassCutEnumeration out;
    out.min_weight = search.found_weight;
    out.cutsets = to_divisor_sets(q, search.found);
    return out;
}

std::vector<std::vector<long long>> paranoid_min_cutsets(const FactoredInteger& f,
                                                         long long limit) {
    if (f.value() > limit)
        throw ResourceLimitError("paranoid search limited to n <= " + std::to_string(limit));
    ExplicitGraph g(f, limit);
    long long n = g.order();
    long long kappa = oracle_vertex_connectivity(g, limit);
    const auto& q = g.quotient();

    std::vector<char> forced(static_cast<size_t>(n), 0);
    long long forced_count = 0;
    for (int c : universal_classes(q))
        for (long long x : g.class_members()[c]) {
            forced[static_cast<size_t>(x)] = 1;
            ++forced_count;
        }
    std::vector<long long> pool;
    for (long long x = 0; x < n; ++x)
        if (!forced[static_cast<size_t>(x)]) pool.push_back(x);
    long long need = kappa - forced_count;
    if (need < 0) return {};

    std::vector<std::vector<long long>> results;
    std::vector<char> removed = forced;

    auto disconnected = [&]() {
        long long start = -1, alive = 0;
        for (long long x = 0; x < n; ++x)
            if (!removed[static_cast<size_t>(x)]) {
                if (start < 0) start = x;
                ++alive;
            }
        if (alive <= 1) return false;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::deque<long long> queue{start};
        seen[static_cast<size_t>(start)] = 1;
        long long visited = 1;
        while (!queue.empty()) {
            long long u = queue.front();
            queue.pop_front();
            for (long long v = 0; v < n; ++v) {
                if (removed[static_cast<size_t>(v)] || seen[static_cast<size_t>(v)]) continue;
                if (g.adjacent(u, v)) {
                    seen[static_cast<size_t>(v)] = 1;
                    ++visited;
                    queue.push_back(v);
                }
            }
        }
        return visited < alive;
    };

    std::function<void(size_t, long long)> pick = [&](size_t from, long long left) {
        if (left == 0) {
            if (disconnected()) {
                std::vector<long long> set;
                for (long long x = 0; x < n; ++x)
                    if (removed[static_cast<size_t>(x)]) set.push_back(x);
                results.push_back(std::move(set));
            }
            return;
        }
        if (from + left > pool.size()) return;
        removed[static_cast<size_t>(pool[from])] = 1;
        pick(from + 1, left - 1);
        removed[static_cast<size_t>(pool[from])] = 0;
        pick(from + 1, left);
    };
    pick(0, need);
    return results;
}

void export_edge_list(const ExplicitGraph& g, std::ostream& out) {
    const auto& q = g.quotient();
    int d = q.size();
    for (int i = 0; i < d; ++i) {
        const auto& mi = g.class_members()[i];
        for (size_t a = 0; a < mi.size(); ++a)
            for (size_t b = a + 1; b < mi.size(); ++b)
                out << mi[a] << ' ' << mi[b] << '\n';
        for (int j = i + 1; j < d; ++j) {
            if (!q.adjacent(i, j)) continue;
            for (long long x : mi)
                for (long long y : g.class_members()[j])
                    out << std::min(x, y) << ' ' << std::max(x, y) << '\n';
        }
    }
}

}
