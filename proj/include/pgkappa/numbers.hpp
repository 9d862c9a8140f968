#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pgkappa {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0.
Int pow_int(const Int& base, long long exp);

// base^exp as an exact rational; exp may be negative.
Rat pow_rat(const Int& base, long long exp);

// Exact rational -> integer; throws std::logic_error if the value is not integral.
Int to_integer(const Rat& q);

// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
bool is_probable_prime(const Int& n);

}
