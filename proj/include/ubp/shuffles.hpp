#pragma once

#include <vector>

#include "ubp/permutation.hpp"
#include "ubp/set_partition.hpp"

namespace ubp {

  //! Sh(p, q): permutations of [p + q] increasing on 1..p and on p+1..p+q,
  //! lexicographic in one-line form.
  std::vector<Permutation> enumerate_shuffles(int p, int q);

  //! The maximum of Sh(p, q) in the weak order: i -> q + i for i <= p,
  //! p + i -> i.
  Permutation max_shuffle(int p, int q);

  //! The (n, m)-shuffle i -> m + i for i <= n, i -> i - n otherwise. Its
  //! inverse is beta_shuffle(m, n).
  Permutation beta_shuffle(int n, int m);

  //! Sh(A): permutations increasing on every block of \p a. These are the
  //! minimal-length representatives of the left cosets of the parabolic
  //! subgroup S_A.
  std::vector<Permutation> enumerate_A_shuffles(SetPartition const& a);

  //! S_A: permutations mapping every block of \p a onto itself.
  std::vector<Permutation> parabolic_stabilizer(SetPartition const& a);

}  // namespace ubp
