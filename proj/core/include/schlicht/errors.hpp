#pragma once

#include <stdexcept>
#include <string>

namespace schlicht {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SCHLICHT_DEFINE_ERROR(NAME) \
  struct NAME : Error {             \
    explicit NAME(const std::string& what) : Error(what) {} \
  }

SCHLICHT_DEFINE_ERROR(OrderMismatchError);
SCHLICHT_DEFINE_ERROR(NonInvertibleError);
SCHLICHT_DEFINE_ERROR(OutOfDomainError);
SCHLICHT_DEFINE_ERROR(DegenerateSeriesError);
SCHLICHT_DEFINE_ERROR(InvalidFunctionalError);
SCHLICHT_DEFINE_ERROR(InvalidMeasureError);
SCHLICHT_DEFINE_ERROR(InvalidGridError);
SCHLICHT_DEFINE_ERROR(NonconstantRequiredError);
SCHLICHT_DEFINE_ERROR(NonFiniteError);
SCHLICHT_DEFINE_ERROR(ParseError);

#undef SCHLICHT_DEFINE_ERROR

}  // namespace schlicht
