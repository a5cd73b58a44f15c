#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ubp/integer.hpp"
#include "ubp/linear_combination.hpp"
#include "ubp/monoid.hpp"
#include "ubp/set_partition.hpp"

namespace ubp {

  //! Integer linear combination of uniform block permutations (of possibly
  //! different degrees).
  using Element = LinearCombination<Ubp>;

  //! Integer linear combination of pairs f (x) g.
  using TensorElement = LinearCombination<std::pair<Ubp, Ubp>>;

  //! The unit: the empty diagram with coefficient 1.
  Element unit_element();

  //! The common degree of all terms, or nullopt if \p x is zero or mixes
  //! degrees.
  std::optional<int> homogeneous_degree(Element const& x);

  //! x (x) y, expanded bilinearly.
  TensorElement tensor(Element const& x, Element const& y);

  //! sum_{xi in Sh(n, m)} xi . (f x g).
  Element product(Ubp const& f, Ubp const& g);
  Element product(Element const& x, Element const& y);

  //! Componentwise product (a (x) b)(c (x) d) = (a * c) (x) (b * d).
  TensorElement product(TensorElement const& x, TensorElement const& y);

  //! sum over breaking points i of f_(i) (x) f'_(n - i).
  TensorElement coproduct(Ubp const& f);
  TensorElement coproduct(Element const& x);

  //! Coefficient of the empty diagram.
  Integer counit(Element const& x);

  //! S(empty) = empty and S(f) = -f - sum_{0 < i < n} S(f_(i)) * f'_(n - i).
  Element antipode(Element const& x);

  //! Multiplication map m : x (x) y -> x * y extended linearly.
  Element multiply(TensorElement const& t);

  //! Applies \p left and \p right to the two tensor factors.
  template <class LeftMap, class RightMap>
  TensorElement apply_factorwise(TensorElement const& t, LeftMap&& left, RightMap&& right) {
    TensorElement result;
    for (auto const& [pair, coeff] : t) {
      result += coeff * tensor(left(Element::basis(pair.first)), right(Element::basis(pair.second)));
    }
    return result;
  }

  //! <f, g> = 1 if g = tilde(f), 0 otherwise, extended bilinearly.
  Integer pairing(Element const& x, Element const& y);

  //! Factorwise pairing on tensors.
  Integer pairing(TensorElement const& x, TensorElement const& y);

  //! Sum of all f : A -> B with domain \p a.
  Element Z_of_partition(SetPartition const& a);

  //! Each term f of \p x replaced by compose(f, h). Throws ValidationError
  //! on a degree mismatch.
  Element right_action(Element const& x, Ubp const& h);

  //! Left multiplication by a monoid element, f -> compose(h, f).
  Element left_action(Ubp const& h, Element const& x);

  //! True iff coproduct(x) == x (x) empty + empty (x) x. Throws
  //! ValidationError unless \p x is homogeneous of degree >= 1.
  bool is_primitive(Element const& x);

  //! Coefficients v_0, ..., v_N of V(x) = 1 - 1/P(x), where
  //! P(x) = sum u_n x^n. v_0 = 0.
  std::vector<Integer> primitive_series(int terms);

  //! Coefficients of 1/(1 - V(x)) up to the length of \p v (requires v[0] = 0).
  std::vector<Integer> series_from_primitives(std::vector<Integer> const& v);

}  // namespace ubp
