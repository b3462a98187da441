#ifndef WAVECL_RATIONAL_HPP
#define WAVECL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace wavecl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

Int int_pow(Int base, unsigned long e);

// r^e for integer e; e < 0 requires r != 0.
Rat rat_pow(const Rat& r, long e);

// Exact square root, if r is a square of a rational (r >= 0).
std::optional<Rat> rat_sqrt(const Rat& r);

// "p" or "p/q", q > 0 after normalization.
std::string rat_to_string(const Rat& r);

// Parses "p", "-p/q", "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rat> rat_parse(const std::string& s);

double rat_to_double(const Rat& r);

}  // namespace wavecl

#endif
