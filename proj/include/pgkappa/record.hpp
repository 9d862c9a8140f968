#pragma once

#include "pgkappa/engine.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pgkappa {

/// Flat, schema-stable rendering of a KappaResult. Every integer is carried as
/// a decimal string so arbitrary-precision values survive JSON round trips.
struct OutputRecord {
    std::string n;
    std::string factorization;             // factored literal, parseable back
    std::string kappa;
    std::string rule;
    std::vector<std::string> minimizers;
    std::string uniqueness_tag;
    long long uniqueness_count = 0;

    struct CandidateRow {
        std::string descriptor;
        std::string size;
        std::string phi;
        std::string cofactor;
        std::string inner;
        bool operator==(const CandidateRow&) const = default;
    };
    std::vector<CandidateRow> candidates;
    double timing_ms = 0.0;

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const KappaResult& result, double timing_ms);

void to_json(nlohmann::json& j, const OutputRecord::CandidateRow& row);
void from_json(const nlohmann::json& j, OutputRecord::CandidateRow& row);
void to_json(nlohmann::json& j, const OutputRecord& rec);
void from_json(const nlohmann::json& j, OutputRecord& rec);

}
