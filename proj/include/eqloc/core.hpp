#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqloc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define EQLOC_DECLARE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

EQLOC_DECLARE_ERROR(GroupTooLarge);
EQLOC_DECLARE_ERROR(NotSubgroup);
EQLOC_DECLARE_ERROR(InvalidInput);
EQLOC_DECLARE_ERROR(ParseError);
EQLOC_DECLARE_ERROR(NotRegular);
EQLOC_DECLARE_ERROR(StructureMismatch);
EQLOC_DECLARE_ERROR(MorphismCheckFailed);
EQLOC_DECLARE_ERROR(NotAFamily);
EQLOC_DECLARE_ERROR(EDoesNotVanish);
EQLOC_DECLARE_ERROR(UnsupportedModule);

#undef EQLOC_DECLARE_ERROR

/// Default bound on group order for subgroup-lattice and character computations.
inline constexpr std::size_t kDefaultGroupBound = 200;

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

}  // namespace eqloc
