#pragma once

#include <cstddef>
#include <vector>

#include "ubp/integer.hpp"

namespace ubp {

  //! Rank over the rationals of an integer matrix given by rows, computed by
  //! fraction-free (Bareiss) elimination. Rows may have different lengths;
  //! missing entries are zero.
  std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

}  // namespace ubp
