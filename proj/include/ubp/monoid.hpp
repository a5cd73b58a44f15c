#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ubp/integer.hpp"
#include "ubp/permutation.hpp"
#include "ubp/set_partition.hpp"

namespace ubp {

  //! Default upper bound on n for anything that materializes P_n.
  inline constexpr int kDefaultEnumerationCeiling = 6;

  //! A uniform block permutation f : A -> B of [n].
  //!
  //! block_map()[k] is the canonical index in the codomain of the image of
  //! the k-th domain block. Every block is mapped onto a block of the same
  //! size.
  class Ubp {
   public:
    //! The empty diagram, the unique element of P_0.
    Ubp() = default;

    //! Throws ValidationError if the partitions live on different ground
    //! sets, have different block counts, if \p block_map is not a
    //! bijection, or if some block is sent to a block of another size.
    Ubp(SetPartition domain, SetPartition codomain, std::vector<std::size_t> block_map);

    int size() const noexcept {
      return domain_.size();
    }

    SetPartition const& domain() const noexcept {
      return domain_;
    }

    SetPartition const& codomain() const noexcept {
      return codomain_;
    }

    std::span<std::size_t const> block_map() const noexcept {
      return map_;
    }

    //! The codomain block that domain block \p k is sent to.
    Block const& image(std::size_t k) const {
      return codomain_.block(map_.at(k));
    }

    //! True iff every block is a singleton.
    bool is_permutation() const noexcept {
      return domain_.block_count() == static_cast<std::size_t>(size());
    }

    //! Throws ValidationError unless is_permutation().
    Permutation as_permutation() const;

    friend auto operator<=>(Ubp const&, Ubp const&) = default;

   private:
    struct Unchecked {};
    Ubp(SetPartition domain, SetPartition codomain, std::vector<std::size_t> map, Unchecked)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {}

    friend Ubp make_ubp_unchecked(SetPartition, SetPartition, std::vector<std::size_t>);

    SetPartition             domain_;
    SetPartition             codomain_;
    std::vector<std::size_t> map_;
  };

  //! Same as the validating constructor.
  Ubp make_ubp(SetPartition domain, SetPartition codomain, std::vector<std::size_t> block_map);

  //! g . f : apply f first, then g (the bottom of f glued to the top of g).
  Ubp compose(Ubp const& g, Ubp const& f);

  //! compose(from_permutation(s), f), computed by relabelling the codomain.
  Ubp left_multiply(Permutation const& s, Ubp const& f);

  //! compose(f, from_permutation(s)), computed by relabelling the domain.
  Ubp right_multiply(Ubp const& f, Permutation const& s);

  Ubp identity(int n);
  Ubp id_of_partition(SetPartition const& a);
  Ubp from_permutation(Permutation const& s);

  //! The adjacent transposition s_i of [n], 1 <= i <= n - 1.
  Ubp generator_s(int n, int i);
  //! The element merging i and i + 1 on both sides, 1 <= i <= n - 1.
  Ubp generator_b(int n, int i);

  //! The inverse bijection B -> A.
  Ubp tilde(Ubp const& f);

  //! f x g: the diagram of g shifted by f.size() placed to the right of f.
  Ubp concat(Ubp const& f, Ubp const& g);

  //! All of P_n, sorted canonically. Throws CeilingError if n > ceiling.
  std::vector<Ubp> enumerate_ubp(int n, int ceiling = kDefaultEnumerationCeiling);

  //! The closure of {identity, s_i, b_i} under composition, sorted
  //! canonically. Throws CeilingError if n > ceiling.
  std::vector<Ubp> closure_from_generators(int n, int ceiling = kDefaultEnumerationCeiling);

  //! |P_n| as the sum over partition types of (n! / prod (i!)^{m_i})^2 / prod m_i!.
  Integer count_ubp(int n);

  //! |P_n| from u_{k+1} = sum_j C(k, j) C(k + 1, j) u_j with u_0 = 1.
  Integer count_ubp_recursive(int n);

  //! All 0 <= i <= n such that {1..i} is a union of codomain blocks.
  std::vector<int> breaking_points(Ubp const& f);

  struct BreakingSplit {
    Permutation xi;     //!< the (i, n - i)-shuffle
    Ubp         left;   //!< f_(i) in P_i
    Ubp         right;  //!< f'_(n - i) in P_{n - i}
  };

  //! The decomposition f = (left x right) . xi^{-1} at breaking point \p i.
  //! Throws ValidationError if \p i is not a breaking point.
  BreakingSplit split_at_breaking_point(Ubp const& f, int i);

  //! The factorization f = xi . id_dom with xi an A-shuffle of the domain.
  struct UbpOrderCertificate {
    Permutation  xi;
    SetPartition dom;
  };

  UbpOrderCertificate shuffle_factorization(Ubp const& f);

  //! Weak order on P_n: same domain and xi_f <= xi_g. Elements with
  //! different domains are incomparable.
  bool ubp_leq(Ubp const& f, Ubp const& g);

  //! Hasse diagram of the weak order restricted to elements with a fixed
  //! domain. Nodes are sorted canonically; an edge (i, j) means nodes[i] is
  //! covered by nodes[j]. Edges are sorted.
  struct HasseDiagram {
    SetPartition                                 domain;
    std::vector<Ubp>                             nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };

  HasseDiagram hasse_component(SetPartition const& a);

}  // namespace ubp

template <>
struct std::hash<ubp::Ubp> {
  std::size_t operator()(ubp::Ubp const& f) const noexcept {
    std::size_t h = std::hash<ubp::SetPartition>{}(f.domain());
    h             = h * 31 + std::hash<ubp::SetPartition>{}(f.codomain());
    for (auto k : f.block_map()) {
      h = (h ^ k) * 0x100000001b3ULL;
    }
    return h;
  }
};
