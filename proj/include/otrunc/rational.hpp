#pragma once

#include <boost/rational.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace otrunc {

/// Exact rational scalar used everywhere in the library. No floating point
/// enters any computation; equality and order are exact.
using Rat = boost::rational<long long>;

using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

/// Narrows an exact rational to long long; throws if q is not an integer.
long long to_integer(const Rat& q);

/// Largest integer <= q.
long long rat_floor(const Rat& q);

/// Smallest integer >= q.
long long rat_ceil(const Rat& q);

/// "3", "-5/2"; denominator omitted when 1.
std::string format_rat(const Rat& q);

/// Parses "3", "-5/2", "+1/3". Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

// Overflow-checked 64-bit arithmetic for multiplicity bookkeeping.
// Character coefficients can grow combinatorially; wrap-around would be a
// silent wrong answer, so these throw instead.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace otrunc

namespace Eigen {

template <>
struct NumTraits<otrunc::Rat> : GenericNumTraits<otrunc::Rat> {
  typedef otrunc::Rat Real;
  typedef otrunc::Rat NonInteger;
  typedef otrunc::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };
  // Exact scalar: pivoting thresholds degenerate to "nonzero", which is what
  // we want from FullPivLU over the rationals.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
