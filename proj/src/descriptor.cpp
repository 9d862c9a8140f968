#include "pgkappa/descriptor.hpp"

#include "pgkappa/factored.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace pgkappa {

CutSetDescriptor CutSetDescriptor::make_z(int a, int s) {
    CutSetDescriptor d;
    d.kind = Kind::Z;
    d.a = a;
    d.s = s;
    return d;
}

CutSetDescriptor CutSetDescriptor::make_x(int a, int b, int s, int t) {
    CutSetDescriptor d;
    d.kind = Kind::X;
    if (a <= b) {
        d.a = a; d.b = b; d.s = s; d.t = t;
    } else {
        d.a = b; d.b = a; d.s = t; d.t = s;
    }
    return d;
}

CutSetDescriptor CutSetDescriptor::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    auto to_int = [&](const std::string& p) {
        try {
            size_t pos = 0;
            int v = std::stoi(p, &pos);
            if (pos != p.size()) throw std::invalid_argument(p);
            return v;
        } catch (...) {
            throw std::invalid_argument("bad descriptor field '" + p + "' in " + text);
        }
    };
    if (parts.size() == 3 && parts[0] == "Z")
        return make_z(to_int(parts[1]), to_int(parts[2]));
    if (parts.size() == 5 && parts[0] == "X")
        return make_x(to_int(parts[1]), to_int(parts[2]), to_int(parts[3]), to_int(parts[4]));
    throw std::invalid_argument("descriptor must be Z:a:s or X:a:b:s:t, got " + text);
}

std::string CutSetDescriptor::str() const {
    if (kind == Kind::Z) return "Z:" + std::to_string(a) + ":" + std::to_string(s);
    return "X:" + std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(s) + ":" +
           std::to_string(t);
}

void validate_descriptor(const FactoredInteger& f, const CutSetDescriptor& d) {
    auto fail = [&](const std::string& why) {
        throw std::domain_error("descriptor " + d.str() + " invalid for n=" + f.value().str() +
                                ": " + why);
    };
    if (d.kind == CutSetDescriptor::Kind::Z) {
        if (f.r() < 2) fail("Z cut-sets need at least two prime divisors");
        if (d.a < 1 || d.a > f.r()) fail("prime index out of range");
        if (d.s < 1 || d.s > f.exponent(d.a)) fail("level out of range");
    } else {
        if (f.r() < 3) fail("X cut-sets need at least three prime divisors");
        if (d.a < 1 || d.a > f.r() || d.b < 1 || d.b > f.r()) fail("prime index out of range");
        if (d.a == d.b) fail("prime indices must differ");
        if (d.s < 1 || d.s > f.exponent(d.a)) fail("first level out of range");
        if (d.t < 1 || d.t > f.exponent(d.b)) fail("second level out of range");
    }
}

}
