#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace primhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string rat_to_string(const Rat& r) {
  if (rat_is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q".
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    check(den != 0, Err::Schema, "rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception& e) {
    fail(Err::Schema, "bad rational literal '" + s + "'");
  }
}

inline long long rat_to_ll(const Rat& r) {
  check(rat_is_integer(r), Err::InternalNonInteger, "expected integer, got " + rat_to_string(r));
  return numerator(r).convert_to<long long>();
}

}  // namespace primhom
