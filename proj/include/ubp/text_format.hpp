#pragma once

#include <string>
#include <string_view>

#include "ubp/hopf.hpp"
#include "ubp/monoid.hpp"
#include "ubp/ncsym.hpp"
#include "ubp/permutation.hpp"
#include "ubp/set_partition.hpp"

// Text grammars (printers are canonical, parsers reject non-canonical
// partitions and block arrows with a hint showing the normalized form):
//
//   partition    {1,3}{2,5,7}{4}{6,8}          empty partition: {}
//   permutation  [2,3,1]                       empty permutation: []
//   ubp          {1,3}->{1,2};{2}->{3}         empty diagram: {}->{}
//   element      1*{1}->{1} + -1*{1,2}->{1,2}  zero: 0
//   tensor       1*{1}->{1} | {}->{} + ...     zero: 0
//   ncsym        2*p{1,3}{2,4} + -1*p{1}       zero: 0
//   ncsym tensor 1*p{1} | p{} + ...            zero: 0

namespace ubp {

  std::string to_text(SetPartition const& a);
  std::string to_text(Permutation const& s);
  std::string to_text(Ubp const& f);
  std::string to_text(Element const& x);
  std::string to_text(TensorElement const& t);
  std::string to_text(NCSymElement const& u);
  std::string to_text(NCSymTensor const& t);

  SetPartition  parse_set_partition(std::string_view text);
  Permutation   parse_permutation(std::string_view text);
  Ubp           parse_ubp(std::string_view text);
  Element       parse_element(std::string_view text);
  TensorElement parse_tensor(std::string_view text);
  NCSymElement  parse_ncsym(std::string_view text);
  NCSymTensor   parse_ncsym_tensor(std::string_view text);

}  // namespace ubp
