#include "pgkappa/record.hpp"

namespace pgkappa {

OutputRecord make_record(const KappaResult& result, double timing_ms) {
    OutputRecord rec;
    rec.n = result.n.value().str();
    rec.factorization = result.n.to_literal();
    rec.kappa = result.kappa.str();
    rec.rule = rule_name(result.rule);
    for (const auto& m : result.minimizers) rec.minimizers.push_back(m.str());
    rec.uniqueness_tag = result.uniqueness.tag_name();
    rec.uniqueness_count = result.uniqueness.count;
    for (const auto& c : result.candidates) {
        OutputRecord::CandidateRow row;
        row.descriptor = c.descriptor.str();
        row.size = c.bound.value.str();
        row.phi = c.bound.phi_n.str();
        row.cofactor = c.bound.cofactor.str();
        row.inner = c.bound.inner.str();
        rec.candidates.push_back(std::move(row));
    }
    rec.timing_ms = timing_ms;
    return rec;
}

void to_json(nlohmann::json& j, const OutputRecord::CandidateRow& row) {
    j = nlohmann::json{{"descriptor", row.descriptor},
                       {"size", row.size},
                       {"phi", row.phi},
                       {"cofactor", row.cofactor},
                       {"inner", row.inner}};
}

void from_json(const nlohmann::json& j, OutputRecord::CandidateRow& row) {
    j.at("descriptor").get_to(row.descriptor);
    j.at("size").get_to(row.size);
    j.at("phi").get_to(row.phi);
    j.at("cofactor").get_to(row.cofactor);
    j.at("inner").get_to(row.inner);
}

void to_json(nlohmann::json& j, const OutputRecord& rec) {
    j = nlohmann::json{{"n", rec.n},
                       {"factorization", rec.factorization},
                       {"kappa", rec.kappa},
                       {"rule", rec.rule},
                       {"minimizers", rec.minimizers},
                       {"uniqueness", {{"tag", rec.uniqueness_tag}, {"count", rec.uniqueness_count}}},
                       {"candidates", rec.candidates},
                       {"timing_ms", rec.timing_ms}};
}

void from_json(const nlohmann::json& j, OutputRecord& rec) {
    j.at("n").get_to(rec.n);
    j.at("factorization").get_to(rec.factorization);
    j.at("kappa").get_to(rec.kappa);
    j.at("rule").get_to(rec.rule);
    j.at("minimizers").get_to(rec.minimizers);
    j.at("uniqueness").at("tag").get_to(rec.uniqueness_tag);
    j.at("uniqueness").at("count").get_to(rec.uniqueness_count);
    j.at("candidates").get_to(rec.candidates);
    j.at("timing_ms").get_to(rec.timing_ms);
}

}
