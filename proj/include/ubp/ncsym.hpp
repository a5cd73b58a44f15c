#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "ubp/error.hpp"
#include "ubp/hopf.hpp"
#include "ubp/linear_combination.hpp"
#include "ubp/set_partition.hpp"

namespace ubp {

  //! Element of NCSym written in the p-basis; the key A stands for p_A.
  using NCSymElement = LinearCombination<SetPartition>;
  using NCSymTensor  = LinearCombination<std::pair<SetPartition, SetPartition>>;

  //! A word over the alphabet {1, ..., alphabet}.
  struct Word {
    int              alphabet = 1;
    std::vector<int> letters;

    friend auto operator<=>(Word const&, Word const&) = default;
  };

  //! Throws ValidationError if a letter is outside 1..alphabet.
  Word make_word(int alphabet, std::vector<int> letters);

  //! Partition of the positions of \p w into its non-empty fibers.
  SetPartition kernel(Word const& w);

  //! The words of p_A over \p alphabet letters: every word constant on each
  //! block of \p a, each exactly once, in lexicographic order. Finite-alphabet
  //! truncation used as a test oracle.
  std::vector<Word> expand_p(SetPartition const& a, int alphabet);

  //! p_A p_B = p_{A x B}.
  NCSymElement p_product(NCSymElement const& u, NCSymElement const& v);

  //! Delta(p_A) = sum over S disjoint-union T = A of p_{A_S} (x) p_{A_T}.
  NCSymTensor p_coproduct(NCSymElement const& u);

  //! p_A -> Z_A.
  Element       to_Z_element(NCSymElement const& u);
  TensorElement to_Z_tensor(NCSymTensor const& t);

  //! Raised by from_Z_element for input outside span{Z_A}.
  class NotInZSpanError : public ValidationError {
   public:
    explicit NotInZSpanError(Element residual);

    Element const& residual() const noexcept {
      return residual_;
    }

   private:
    Element residual_;
  };

  //! Inverse of to_Z_element on span{Z_A}; throws NotInZSpanError otherwise.
  NCSymElement from_Z_element(Element const& x);

}  // namespace ubp
