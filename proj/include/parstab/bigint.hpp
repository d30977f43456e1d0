#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace parstab {

// Group orders fit in 64 bits at the scales handled here, but they are kept
// arbitrary-precision so there is no silent ceiling.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace parstab
