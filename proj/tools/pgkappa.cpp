// Command-line surface: compute the vertex connectivity of the power graph of
// a cyclic group, print candidate cut-set tables, construct and certify the
// cut-sets themselves, and sweep ranges against the max-flow oracle.

#include "pgkappa/engine.hpp"
#include "pgkappa/record.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace pgkappa;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

FactoredInteger parse_n(const std::string& text) {
    FactoredInteger f = FactoredInteger::parse(text);
    if (f.value() < 2) throw std::invalid_argument("n must be >= 2");
    return f;
}

// Comma-separated items, each "A..B" inclusive or a single value.
std::vector<FactoredInteger> parse_range(const std::string& text) {
    std::vector<FactoredInteger> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("bad range: " + text);
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_n(item));
            continue;
        }
        long long lo = std::stoll(item.substr(0, dots));
        long long hi = std::stoll(item.substr(dots + 2));
        if (lo < 2 || hi < lo) throw std::invalid_argument("bad range: " + item);
        out.reserve(out.size() + static_cast<size_t>(hi - lo + 1));
        for (long long v = lo; v <= hi; ++v) out.push_back(factor(Int(v)));
    }
    if (out.empty()) throw std::invalid_argument("bad range: " + text);
    return out;
}

void print_record_text(const OutputRecord& rec) {
    std::cout << "n = " << rec.n << " = " << rec.factorization << "\n";
    std::cout << "kappa = " << rec.kappa << "\n";
    std::cout << "rule = " << rec.rule << "\n";
    std::cout << "minimum cut-sets:";
    for (const auto& m : rec.minimizers) std::cout << ' ' << m;
    if (rec.minimizers.empty()) std::cout << " (none: complete graph)";
    std::cout << "  [" << rec.uniqueness_tag;
    if (rec.uniqueness_tag == "ExactFamily") std::cout << " " << rec.uniqueness_count;
    std::cout << "]\n";
    if (!rec.candidates.empty()) {
        std::cout << "candidates:\n";
        for (const auto& c : rec.candidates)
            std::cout << "  " << c.descriptor << "  " << c.size << " = " << c.phi << " + "
                      << c.cofactor << " * (" << c.inner << ")\n";
    }
}

int cmd_kappa(const std::string& n_text, bool as_json, const std::string& export_path,
              long long graph_limit) {
    auto start = std::chrono::steady_clock::now();
    FactoredInteger f = parse_n(n_text);
    KappaResult res = kappa(f);
    OutputRecord rec = make_record(res, ms_since(start));
    if (as_json)
        std::cout << json(rec).dump(2) << "\n";
    else
        print_record_text(rec);
    if (!export_path.empty()) {
        ExplicitGraph g(f, graph_limit);
        std::ofstream out(export_path);
        if (!out) throw std::runtime_error("cannot open " + export_path);
        export_edge_list(g, out);
    }
    return 0;
}

int cmd_cutset(const std::string& n_text, const std::string& desc_text, bool check,
               bool list_elements, long long expand_limit, bool as_json) {
    FactoredInteger f = parse_n(n_text);
    CutSetDescriptor desc = CutSetDescriptor::parse(desc_text);
    validate_descriptor(f, desc);
    DivisorSet dset = build_cutset(f, desc);

    json j{{"n", f.value().str()},
           {"descriptor", desc.str()},
           {"size", dset.cardinality().str()}};
    std::vector<std::string> class_values;
    for (const auto& v : dset.member_values()) class_values.push_back(v.str());
    j["classes"] = class_values;

    std::optional<CutCheck> cut;
    if (check) {
        cut = is_cutset(f, dset);
        json comps = json::array();
        for (const auto& comp : cut->components) {
            json one = json::array();
            for (const auto& v : comp) one.push_back(v.str());
            comps.push_back(one);
        }
        j["check"] = {{"disconnects", cut->disconnects}, {"components", comps}};
    }
    std::vector<long long> elements;
    if (list_elements) {
        elements = expand(dset, expand_limit);
        j["elements"] = elements;
    }

    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << desc.str() << " on n=" << f.value() << ": size " << dset.cardinality()
                  << "\n";
        std::cout << "order classes:";
        for (const auto& v : class_values) std::cout << ' ' << v;
        std::cout << "\n";
        if (cut) {
            std::cout << (cut->disconnects ? "removal disconnects; components:"
                                           : "removal does NOT disconnect")
                      << "\n";
            if (cut->disconnects)
                for (const auto& comp : cut->components) {
                    std::cout << "  {";
                    for (size_t i = 0; i < comp.size(); ++i)
                        std::cout << (i ? "," : "") << comp[i];
                    std::cout << "}\n";
                }
        }
        if (list_elements) {
            std::cout << "elements:";
            for (long long x : elements) std::cout << ' ' << x;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bounds(const std::string& n_text, bool as_json) {
    FactoredInteger f = parse_n(n_text);
    auto table = candidates(f);
    if (as_json) {
        json rows = json::array();
        for (const auto& c : table)
            rows.push_back({{"descriptor", c.descriptor.str()},
                            {"size", c.bound.value.str()},
                            {"phi", c.bound.phi_n.str()},
                            {"cofactor", c.bound.cofactor.str()},
                            {"inner", c.bound.inner.str()}});
        std::cout << json{{"n", f.value().str()}, {"candidates", rows}}.dump(2) << "\n";
    } else {
        std::cout << "candidate cut-set sizes for n=" << f.value() << " (value = phi + cofactor * inner):\n";
        for (const auto& c : table)
            std::cout << "  " << c.descriptor.str() << "  " << c.bound.value << " = "
                      << c.bound.phi_n << " + " << c.bound.cofactor << " * (" << c.bound.inner
                      << ")\n";
    }
    return 0;
}

struct VerifyOutcome {
    std::string n;
    bool pass = true;
    long long cardinality_checks = 0;
    long long cutset_checks = 0;
    bool oracle_ran = false;
    std::string detail;
};

VerifyOutcome verify_one(const FactoredInteger& f, long long oracle_limit) {
    VerifyOutcome out;
    out.n = f.value().str();
    if (f.r() >= 2) {
        OrderClassGraph quotient(f);
        auto check_descriptor = [&](const CutSetDescriptor& d, const Int& expected) {
            DivisorSet dset = build_cutset(f, d);
            if (dset.cardinality() != expected) {
                out.pass = false;
                out.detail += " |" + d.str() + "| != bound;";
            }
            ++out.cardinality_checks;
            if (!is_cutset(quotient, dset).disconnects) {
                out.pass = false;
                out.detail += " " + d.str() + " fails to disconnect;";
            }
            ++out.cutset_checks;
        };
        for (int a = 1; a <= f.r(); ++a)
            for (int s = 1; s <= f.exponent(a); ++s)
                check_descriptor(CutSetDescriptor::make_z(a, s), beta(f, a, s).value);
        if (f.r() >= 3)
            for (int a = 1; a <= f.r(); ++a)
                for (int b = a + 1; b <= f.r(); ++b)
                    for (int s = 1; s <= f.exponent(a); ++s)
                        for (int t = 1; t <= f.exponent(b); ++t)
                            check_descriptor(CutSetDescriptor::make_x(a, b, s, t),
                                             theta(f, a, b, s, t).value);
    }
    if (f.value() <= oracle_limit) {
        OracleReport report = verify_against_oracle(f, oracle_limit);
        out.oracle_ran = true;
        if (!report.ok) {
            out.pass = false;
            out.detail += " engine kappa " + report.engine_kappa.str() + " vs oracle " +
                          std::to_string(report.oracle_kappa) + ";";
        }
    }
    return out;
}

int cmd_verify(const std::string& range_text_arg, long long oracle_limit, bool as_json, long long random_count,
               unsigned long long seed) {
    std::vector<VerifyOutcome> outcomes;
    if (random_count > 0) {
        // Seeded self-consistency sweep: dispatched rule vs candidate-table minimum.
        std::mt19937_64 rng(seed);
        std::vector<long long> primes;
        for (long long p = 2; p <= 200; ++p) {
            bool is_p = p >= 2;
            for (long long q = 2; q * q <= p && is_p; ++q)
                if (p % q == 0) is_p = false;
            if (is_p) primes.push_back(p);
        }
        for (long long i = 0; i < random_count; ++i) {
            int r = 4 + static_cast<int>(rng() % 4);
            std::vector<PrimePower> pps;
            std::vector<long long> pool = primes;
            for (int k = 0; k < r; ++k) {
                size_t at = rng() % pool.size();
                pps.push_back({Int(pool[at]), static_cast<int>(1 + rng() % 5)});
                pool.erase(pool.begin() + static_cast<long long>(at));
            }
            FactoredInteger f = FactoredInteger::from_factors(pps);
            VerifyOutcome out;
            out.n = f.to_literal();
            KappaResult res = kappa(f);
            Int table_min = candidate_minimum(f);
            out.cardinality_checks = 1;
            if (res.kappa != table_min) {
                out.pass = false;
                out.detail = " rule " + rule_name(res.rule) + " kappa " + res.kappa.str() +
                             " != table minimum " + table_min.str() + ";";
            }
            outcomes.push_back(std::move(out));
        }
    } else {
        for (const auto& f : parse_range(range_text_arg)) outcomes.push_back(verify_one(f, oracle_limit));
    }

    bool all_pass = true;
    if (as_json) {
        json arr = json::array();
        for (const auto& o : outcomes) {
            all_pass = all_pass && o.pass;
            arr.push_back({{"n", o.n},
                           {"pass", o.pass},
                           {"cardinality_checks", o.cardinality_checks},
                           {"cutset_checks", o.cutset_checks},
                           {"oracle", o.oracle_ran},
                           {"detail", o.detail}});
        }
        std::cout << json{{"results", arr}, {"pass", all_pass}}.dump(2) << "\n";
    } else {
        for (const auto& o : outcomes) {
            all_pass = all_pass && o.pass;
            std::cout << "n=" << o.n << (o.pass ? " PASS" : " FAIL") << " (" << o.cardinality_checks
                      << " cardinality, " << o.cutset_checks << " cut-set checks"
                      << (o.oracle_ran ? ", oracle ok" : ", oracle skipped") << ")";
            if (!o.detail.empty()) std::cout << o.detail;
            std::cout << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "FAILURES detected") << "\n";
    }
    return all_pass ? 0 : kExitVerifyFailure;
}

int cmd_sweep(const std::string& range, const std::string& format, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        os = &file;
    }
    auto values = parse_range(range);
    if (format == "csv") {
        *os << "n,factorization,kappa,rule,minimizers,uniqueness\n";
        for (const auto& f : values) {
            KappaResult res = kappa(f);
            *os << f.value() << "," << f.to_literal() << "," << res.kappa << ","
                << rule_name(res.rule) << ",";
            for (size_t i = 0; i < res.minimizers.size(); ++i)
                *os << (i ? ";" : "") << res.minimizers[i].str();
            *os << "," << res.uniqueness.tag_name() << "\n";
        }
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& f : values) {
            auto start = std::chrono::steady_clock::now();
            KappaResult res = kappa(f);
            arr.push_back(json(make_record(res, ms_since(start))));
        }
        *os << arr.dump(2) << "\n";
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex connectivity of power graphs of cyclic groups"};
    app.require_subcommand(1);

    std::string n_text, desc_text, range_text, export_path, format = "csv", out_path;
    bool as_json = false, check = false, list_elements = false;
    long long oracle_limit = 600, expand_limit = 100000, graph_limit = 100000;
    long long random_count = 0;
    unsigned long long seed = 20240901ULL;

    auto* kappa_cmd = app.add_subcommand("kappa", "compute the vertex connectivity of P(C_n)");
    kappa_cmd->add_option("n", n_text, "n as a decimal or factored literal like 2^3*3*5^2")
        ->required();
    kappa_cmd->add_flag("--json", as_json, "emit JSON");
    kappa_cmd->add_option("--export-edges", export_path, "write the explicit graph as an edge list");
    kappa_cmd->add_option("--graph-limit", graph_limit, "explicit graph size limit");

    auto* cutset_cmd = app.add_subcommand("cutset", "build a named candidate cut-set");
    cutset_cmd->add_option("n", n_text)->required();
    cutset_cmd->add_option("descriptor", desc_text, "Z:a:s or X:a:b:s:t (1-based prime indices)")
        ->required();
    cutset_cmd->add_flag("--check", check, "verify the removal disconnects and print components");
    cutset_cmd->add_flag("--list-elements", list_elements, "expand to explicit residues");
    cutset_cmd->add_option("--expand-limit", expand_limit, "largest n that may be expanded");
    cutset_cmd->add_flag("--json", as_json, "emit JSON");

    auto* bounds_cmd = app.add_subcommand("bounds", "print the candidate table with decompositions");
    bounds_cmd->add_option("n", n_text)->required();
    bounds_cmd->add_flag("--json", as_json, "emit JSON");

    auto* verify_cmd = app.add_subcommand("verify", "cross-check formulas, cut-sets and the oracle");
    verify_cmd->add_option("range", range_text, "single n or inclusive range A..B");
    verify_cmd->add_option("--oracle-limit", oracle_limit, "largest n for the max-flow oracle");
    verify_cmd->add_option("--random", random_count,
                           "instead: run K random factored instances (r >= 4) of rule-vs-table checks");
    verify_cmd->add_option("--seed", seed, "seed for --random");
    verify_cmd->add_flag("--json", as_json, "emit JSON");

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate kappa over a range");
    sweep_cmd->add_option("range", range_text, "inclusive range A..B")->required();
    sweep_cmd->add_option("--format", format, "csv or json");
    sweep_cmd->add_option("--output,-o", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (kappa_cmd->parsed()) return cmd_kappa(n_text, as_json, export_path, graph_limit);
        if (cutset_cmd->parsed())
            return cmd_cutset(n_text, desc_text, check, list_elements, expand_limit, as_json);
        if (bounds_cmd->parsed()) return cmd_bounds(n_text, as_json);
        if (verify_cmd->parsed()) {
            if (random_count <= 0 && range_text.empty())
                throw std::invalid_argument("verify needs a range or --random");
            return cmd_verify(range_text, oracle_limit, as_json, random_count, seed);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(range_text, format, out_path);
    } catch (const pgkappa::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
