#pragma once

#include <compare>
#include <string>

namespace pgkappa {

class FactoredInteger;

/// Symbolic name of a candidate cut-set, Z(a,s) or X(a,b,s,t), with 1-based
/// prime indices. X is kept canonical with a < b, since X(a,b,s,t) and
/// X(b,a,t,s) denote the same vertex set.
struct CutSetDescriptor {
    enum class Kind { Z, X };

    Kind kind = Kind::Z;
    int a = 0;
    int b = 0;
    int s = 0;
    int t = 0;

    static CutSetDescriptor make_z(int a, int s);
    static CutSetDescriptor make_x(int a, int b, int s, int t);

    /// "Z:a:s" or "X:a:b:s:t".
    static CutSetDescriptor parse(const std::string& text);
    std::string str() const;

    auto operator<=>(const CutSetDescriptor&) const = default;
};

/// Range-checks the descriptor against a factorization; throws std::domain_error.
void validate_descriptor(const FactoredInteger& f, const CutSetDescriptor& d);

}
