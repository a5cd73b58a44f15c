#include "ubp/exact_rank.hpp"

#include <algorithm>

namespace ubp {

  std::size_t integer_rank(std::vector<std::vector<Integer>> rows) {
    std::size_t cols = 0;
    for (auto const& row : rows) {
      cols = std::max(cols, row.size());
    }
    for (auto& row : rows) {
      row.resize(cols, 0);
    }
    std::size_t rank = 0;
    Integer     prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
      auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank),
                                rows.end(),
                                [c](auto const& row) { return row[c] != 0; });
      if (pivot == rows.end()) {
        continue;
      }
      std::swap(*pivot, rows[rank]);
      auto const& p = rows[rank];
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        auto& row = rows[i];
        for (std::size_t j = c + 1; j < cols; ++j) {
          // Every entry is a minor of the input, so the division is exact.
          Integer value = p[c] * row[j] - row[c] * p[j];
          mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
          row[j] = std::move(value);
        }
        row[c] = 0;
      }
      prev = p[c];
      ++rank;
    }
    return rank;
  }

}  // namespace ubp
