#include "pgkappa/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pgkappa {

std::string rule_name(Rule rule) {
    switch (rule) {
        case Rule::PrimePower: return "PrimePower";
        case Rule::R2: return "R2";
        case Rule::R3_SmallPrime3: return "R3_SmallPrime3";
        case Rule::R3_Prime2: return "R3_Prime2";
        case Rule::LargePhi: return "LargePhi";
        case Rule::SquarefreeR4: return "SquarefreeR4";
        case Rule::NrGe2: return "NrGe2";
        case Rule::R4_Nr1: return "R4_Nr1";
        case Rule::R5_Nr1_P3: return "R5_Nr1_P3";
        case Rule::CandidateEnum: return "CandidateEnum";
    }
    return "?";
}

std::string Uniqueness::tag_name() const {
    switch (tag) {
        case Tag::Unique: return "Unique";
        case Tag::ExactFamily: return "ExactFamily";
        case Tag::CandidatesOnly: return "CandidatesOnly";
    }
    return "?";
}

std::vector<Candidate> candidates(const FactoredInteger& f) {
    int r = f.r();
    if (r < 2) throw std::domain_error("no cut-sets exist for prime powers");
    std::vector<Candidate> out;
    auto add_z = [&](int a, int s) {
        out.push_back({CutSetDescriptor::make_z(a, s), beta(f, a, s)});
    };
    if (r <= 3) {
        for (int a = 1; a <= r; ++a)
            for (int s = 1; s <= f.exponent(a); ++s) add_z(a, s);
    } else {
        add_z(r, 1);
        for (int a = 1; a <= r; ++a)
            if (f.exponent(a) >= 2) add_z(a, f.exponent(a));
    }
    if (r >= 3) {
        for (int a = 1; a <= r; ++a)
            for (int b = a + 1; b <= r; ++b)
                for (int s = 1; s <= f.exponent(a); ++s)
                    for (int t = 1; t <= f.exponent(b); ++t)
                        out.push_back({CutSetDescriptor::make_x(a, b, s, t),
                                       theta(f, a, b, s, t)});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
        return x.descriptor < y.descriptor;
    });
    return out;
}

Int candidate_minimum(const FactoredInteger& f) {
    Int best = -1;
    for (const auto& c : candidates(f))
        if (best < 0 || c.bound.value < best) best = c.bound.value;
    return best;
}

namespace {

struct Pick {
    CutSetDescriptor descriptor;
    Int size;
};

// Minimizers among a short membership list, with the tag resolved the way the
// decision procedure allows: a strictly smallest member is the unique minimum
// cut-set; exact ties are reported without an exclusivity claim.
void resolve_members(KappaResult& res, const std::vector<Pick>& picks, bool ties_are_exact) {
    Int best = picks.front().size;
    for (const auto& p : picks) best = std::min(best, p.size);
    res.kappa = best;
    for (const auto& p : picks)
        if (p.size == best) res.minimizers.push_back(p.descriptor);
    if (res.minimizers.size() == 1)
        res.uniqueness = Uniqueness::unique();
    else if (ties_are_exact)
        res.uniqueness = Uniqueness::exact_family(static_cast<long long>(res.minimizers.size()));
    else
        res.uniqueness = Uniqueness::candidates_only(static_cast<long long>(res.minimizers.size()));
}

}  // namespace

KappaResult kappa(const FactoredInteger& f) {
    KappaResult res;
    res.n = f;
    int r = f.r();

    if (r == 1) {
        res.kappa = f.value() - 1;
        res.rule = Rule::PrimePower;
        res.uniqueness = Uniqueness::exact_family(0);   // no cut-set exists
        return res;
    }

    res.candidates = candidates(f);

    if (r == 2) {
        res.rule = Rule::R2;
        res.kappa = beta(f, 2, 1).value;
        if (f.prime(1) >= 3) {
            res.minimizers = {CutSetDescriptor::make_z(2, 1)};
            res.uniqueness = Uniqueness::unique();
        } else {
            for (int s = 1; s <= f.exponent(2); ++s) {
                res.minimizers.push_back(CutSetDescriptor::make_z(2, s));
                assert(beta(f, 2, s).value == res.kappa);
            }
            res.uniqueness = Uniqueness::exact_family(f.exponent(2));
        }
    } else if (r == 3) {
        if (f.prime(1) >= 3) {
            res.rule = Rule::R3_SmallPrime3;
            res.kappa = beta(f, 3, 1).value;
            res.minimizers = {CutSetDescriptor::make_z(3, 1)};
        } else {
            res.rule = Rule::R3_Prime2;
            res.kappa = beta(f, 3, f.exponent(3)).value;
            res.minimizers = {CutSetDescriptor::make_z(3, f.exponent(3))};
        }
        res.uniqueness = Uniqueness::unique();
    } else if (!two_phi_deficient(f, {r})) {
        res.rule = Rule::LargePhi;
        res.kappa = beta(f, r, 1).value;
        res.minimizers = {CutSetDescriptor::make_z(r, 1)};
        res.uniqueness = Uniqueness::unique();
    } else if (f.squarefree()) {
        res.rule = Rule::SquarefreeR4;
        Int bz = beta(f, r, 1).value;
        Int bx = theta(f, r - 1, r, 1, 1).value;
        auto x_desc = CutSetDescriptor::make_x(r - 1, r, 1, 1);
        if (squarefree_tiebreak(f)) {
            res.kappa = bx;
            res.minimizers = {x_desc};
            if (bz == bx) {
                res.minimizers.push_back(CutSetDescriptor::make_z(r, 1));
                res.uniqueness = Uniqueness::exact_family(2);
            } else {
                assert(bx < bz);
                res.uniqueness = Uniqueness::unique();
            }
        } else {
            assert(bz < bx);
            res.kappa = bz;
            res.minimizers = {CutSetDescriptor::make_z(r, 1)};
            res.uniqueness = Uniqueness::unique();
        }
    } else if (f.exponent(r) >= 2) {
        res.rule = Rule::NrGe2;
        auto omega = omega_set(f);
        if (f.exponent(r) >= 3 || omega.empty()) {
            res.kappa = beta(f, r, f.exponent(r)).value;
            res.minimizers = {CutSetDescriptor::make_z(r, f.exponent(r))};
            res.uniqueness = Uniqueness::unique();
        } else {
            int b = omega.back();
            std::vector<Pick> picks{
                {CutSetDescriptor::make_z(r, f.exponent(r)), beta(f, r, f.exponent(r)).value},
                {CutSetDescriptor::make_z(b, f.exponent(b)), beta(f, b, f.exponent(b)).value},
            };
            resolve_members(res, picks, /*ties_are_exact=*/false);
        }
    } else if (r == 4) {
        res.rule = Rule::R4_Nr1;
        if (f.prime(1) > 3)
            throw std::logic_error("dispatch reached the r=4 rule with p_1 >= 5");
        std::vector<Pick> picks{{CutSetDescriptor::make_z(4, 1), beta(f, 4, 1).value}};
        if (f.exponent(3) >= 2 && two_phi_deficient(f, {3}))
            picks.push_back(
                {CutSetDescriptor::make_z(3, f.exponent(3)), beta(f, 3, f.exponent(3)).value});
        resolve_members(res, picks, /*ties_are_exact=*/false);
    } else if (r == 5 && f.prime(1) == 3) {
        res.rule = Rule::R5_Nr1_P3;
        std::vector<Pick> picks{{CutSetDescriptor::make_z(5, 1), beta(f, 5, 1).value}};
        if (f.exponent(4) >= 2 && two_phi_deficient(f, {4}))
            picks.push_back(
                {CutSetDescriptor::make_z(4, f.exponent(4)), beta(f, 4, f.exponent(4)).value});
        resolve_members(res, picks, /*ties_are_exact=*/false);
    } else {
        res.rule = Rule::CandidateEnum;
        Int best = -1;
        for (const auto& c : res.candidates)
            if (best < 0 || c.bound.value < best) best = c.bound.value;
        res.kappa = best;
        for (const auto& c : res.candidates)
            if (c.bound.value == best) res.minimizers.push_back(c.descriptor);
        res.uniqueness =
            Uniqueness::candidates_only(static_cast<long long>(res.minimizers.size()));
    }

#ifndef NDEBUG
    // Fast paths must agree with the candidate-table minimum.
    {
        Int best = -1;
        for (const auto& c : res.candidates)
            if (best < 0 || c.bound.value < best) best = c.bound.value;
        assert(res.kappa == best);
        if (r >= 3)
            for (const auto& m : res.minimizers)
                assert(!(m.kind == CutSetDescriptor::Kind::Z && m.a == 1 && m.s == f.exponent(1)));
    }
#endif
    return res;
}

std::pair<std::vector<CutSetDescriptor>, Uniqueness> minimum_cutset_family(
    const FactoredInteger& f) {
    if (f.r() < 2)
        throw std::domain_error("prime powers have a complete power graph and no cut-sets");
    KappaResult res = kappa(f);
    return {res.minimizers, res.uniqueness};
}

OracleReport verify_against_oracle(const FactoredInteger& f, long long oracle_limit) {
    OracleReport report;
    report.n = f.value();
    if (f.value() > oracle_limit)
        throw ResourceLimitError("oracle verification limited to n <= " +
                                 std::to_string(oracle_limit));
    KappaResult res = kappa(f);
    report.engine_kappa = res.kappa;
    ExplicitGraph g(f, oracle_limit);
    report.oracle_kappa = oracle_vertex_connectivity(g, oracle_limit);
    report.kappa_match = Int(report.oracle_kappa) == res.kappa;
    report.ok = report.kappa_match;
    for (const auto& m : res.minimizers) {
        MinimizerCheck check;
        check.descriptor = m;
        DivisorSet dset = build_cutset(f, m);
        check.disconnects = is_cutset(g.quotient(), dset).disconnects;
        check.size_matches = dset.cardinality() == res.kappa;
        report.ok = report.ok && check.disconnects && check.size_matches;
        report.minimizers.push_back(check);
    }
    return report;
}

}
