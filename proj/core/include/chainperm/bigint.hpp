#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainperm {

// Exact integer used for every count and sequence value.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace chainperm
