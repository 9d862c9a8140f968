#include "pgkappa/cutsets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pgkappa {

namespace {

// Inserts every exponent vector componentwise <= caps.
void insert_all_below(const std::vector<int>& caps, std::set<Divisor>& out) {
    int r = static_cast<int>(caps.size());
    Divisor cur;
    cur.exps.assign(r, 0);
    while (true) {
        out.insert(cur);
        int i = r - 1;
        while (i >= 0 && cur.exps[i] == caps[i]) {
            cur.exps[i] = 0;
            --i;
        }
        if (i < 0) break;
        cur.exps[i] += 1;
    }
}

}  // namespace

DivisorSet::DivisorSet(FactoredInteger parent, std::vector<Divisor> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    for (const auto& d : members_) {
        if (static_cast<int>(d.exps.size()) != parent_.r())
            throw std::invalid_argument("divisor has wrong number of exponents");
        for (int i = 0; i < parent_.r(); ++i)
            if (d.exps[i] < 0 || d.exps[i] > parent_.factors()[i].exponent)
                throw std::invalid_argument("divisor exponent out of range");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    cardinality_ = 0;
    for (const auto& d : members_) cardinality_ += totient(parent_, d);
}

bool DivisorSet::contains(const Divisor& d) const {
    return std::binary_search(members_.begin(), members_.end(), d);
}

bool DivisorSet::covers_all() const {
    long long total = 1;
    for (const auto& pp : parent_.factors()) total *= pp.exponent + 1;
    return static_cast<long long>(members_.size()) == total;
}

std::vector<Int> DivisorSet::member_values() const {
    std::vector<Int> vals;
    vals.reserve(members_.size());
    for (const auto& d : members_) vals.push_back(divisor_value(parent_, d));
    std::sort(vals.begin(), vals.end());
    return vals;
}

Divisor element_order(const FactoredInteger& f, const Int& x) {
    if (x < 0 || x >= f.value()) throw std::domain_error("residue out of range [0, n)");
    Int o = f.value() / boost::multiprecision::gcd(f.value(), x);
    return divisor_from_value(f, o);
}

DivisorSet build_Z(const FactoredInteger& f, int a, int s) {
    validate_descriptor(f, CutSetDescriptor::make_z(a, s));
    std::set<Divisor> members;
    Divisor top = full_divisor(f);
    for (int l = 0; l < s; ++l) {
        Divisor d = top;
        d.exps[a - 1] = f.exponent(a) - l;
        members.insert(d);
    }
    for (int i = 1; i <= f.r(); ++i) {
        if (i == a) continue;
        std::vector<int> caps = top.exps;
        caps[i - 1] -= 1;
        caps[a - 1] = f.exponent(a) - s;
        insert_all_below(caps, members);
    }
    return DivisorSet(f, {members.begin(), members.end()});
}

DivisorSet build_X(const FactoredInteger& f, int a, int b, int s, int t) {
    validate_descriptor(f, CutSetDescriptor::make_x(a, b, s, t));
    std::set<Divisor> members;
    Divisor top = full_divisor(f);
    for (int i = 0; i <= s; ++i) {
        for (int j = 0; j <= t; ++j) {
            if (i == s && j == t) continue;
            Divisor d = top;
            d.exps[a - 1] = f.exponent(a) - i;
            d.exps[b - 1] = f.exponent(b) - j;
            members.insert(d);
        }
    }
    std::vector<int> caps = top.exps;
    caps[a - 1] = f.exponent(a) - s;
    caps[b - 1] = f.exponent(b) - t;
    insert_all_below(caps, members);
    Divisor generator;
    generator.exps = caps;
    members.erase(generator);
    return DivisorSet(f, {members.begin(), members.end()});
}

DivisorSet build_cutset(const FactoredInteger& f, const CutSetDescriptor& d) {
    if (d.kind == CutSetDescriptor::Kind::Z) return build_Z(f, d.a, d.s);
    return build_X(f, d.a, d.b, d.s, d.t);
}

std::vector<long long> expand(const DivisorSet& dset, long long limit) {
    const auto& f = dset.parent();
    if (f.value() > limit)
        throw ResourceLimitError("expansion of n=" + f.value().str() + " exceeds limit " +
                                 std::to_string(limit));
    long long n = f.value().convert_to<long long>();
    std::set<long long> orders;
    for (const auto& d : dset.members())
        orders.insert(divisor_value(f, d).convert_to<long long>());
    std::vector<long long> out;
    for (long long x = 0; x < n; ++x) {
        long long o = n / std::gcd(n, x);
        if (orders.count(o)) out.push_back(x);
    }
    return out;
}

}
