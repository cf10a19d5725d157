#pragma once

#include <cstdint>

#include "gex/grading.hpp"
#include "gex/scalar.hpp"

namespace gex {

// A concrete graded exterior algebra to evaluate in: coefficient field,
// truncation rank, and the grading.
struct Algebra {
  Field field;
  std::uint32_t rank;
  GradingSpec grading;
};

}  // namespace gex
