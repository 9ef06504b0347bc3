#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace entgeo {

// Exact rational arithmetic. Every order-relevant quantity in the library is
// a Rat; floating point appears only on the entropy surface.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "a/b", integers, and decimal literals with a finite expansion
// ("0.25" parses exactly as 1/4).
Rat parse_rat(const std::string& token);

// "a/b" in lowest terms, or just "a" for integers.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

}  // namespace entgeo
