#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ubp/hopf.hpp"
#include "ubp/integer.hpp"
#include "ubp/monoid.hpp"
#include "ubp/permutation.hpp"

namespace ubp {

  //! Default bound on m^n for action matrices.
  inline constexpr std::size_t kDefaultActionCeiling = 4096;

  //! Element sum_j c_j zeta^j of Z[zeta] / (zeta^r - 1). Identities proved in
  //! this ring hold for zeta a primitive r-th root of unity.
  class CycScalar {
   public:
    explicit CycScalar(int order = 1);

    static CycScalar monomial(int order, long exponent, Integer coeff = 1);

    int order() const noexcept {
      return static_cast<int>(coeffs_.size());
    }

    std::vector<Integer> const& coefficients() const noexcept {
      return coeffs_;
    }

    bool is_zero() const;

    CycScalar& operator+=(CycScalar const& other);
    friend CycScalar operator+(CycScalar lhs, CycScalar const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend CycScalar operator*(CycScalar const& lhs, CycScalar const& rhs);
    friend bool      operator==(CycScalar const&, CycScalar const&) = default;

   private:
    std::vector<Integer> coeffs_;
  };

  std::string to_string(CycScalar const& x);

  //! Sparse square matrix over Z[zeta] / (zeta^r - 1), acting on row vectors
  //! indexed by words of [m]^n in lexicographic order.
  class ActionMatrix {
   public:
    using Row = std::map<std::size_t, CycScalar>;

    ActionMatrix(std::size_t dim, int order);

    static ActionMatrix identity(std::size_t dim, int order);

    std::size_t dim() const noexcept {
      return rows_.size();
    }

    int order() const noexcept {
      return order_;
    }

    std::vector<Row> const& rows() const noexcept {
      return rows_;
    }

    void add(std::size_t row, std::size_t col, CycScalar const& value);

    CycScalar entry(std::size_t row, std::size_t col) const;

    std::size_t nonzeros() const;

    //! Embeds an order-1 (integer) matrix into order \p r.
    ActionMatrix lifted(int r) const;

    friend ActionMatrix operator*(ActionMatrix const& a, ActionMatrix const& b);
    friend ActionMatrix operator+(ActionMatrix const& a, ActionMatrix const& b);
    friend bool         operator==(ActionMatrix const&, ActionMatrix const&) = default;

   private:
    int              order_;
    std::vector<Row> rows_;
  };

  //! Element of G(r, 1, m) = Z_r wr S_m acting by e_i -> zeta^{torus[i]} e_{perm(i)}.
  struct GroupElement {
    std::vector<long> torus;
    Permutation       perm;
  };

  //! Index of a word of [m]^n in lexicographic order (first letter most
  //! significant), and its inverse.
  std::size_t      word_index(std::vector<int> const& letters, int m);
  std::vector<int> word_at(std::size_t index, int m, int n);

  //! m^n, throwing CeilingError if it exceeds \p ceiling.
  std::size_t checked_power(int m, int n, std::size_t ceiling);

  //! The right action of f on a word: defined iff the word is constant on
  //! every codomain block; the result carries on each domain block the letter
  //! of its image block.
  std::optional<std::vector<int>> act_on_word(std::vector<int> const& letters, Ubp const& f);

  //! Matrix M with M[w][w . f] = 1, so that M(g . f) = M(g) M(f).
  ActionMatrix ubp_action_matrix(Ubp const& f, int m, std::size_t ceiling = kDefaultActionCeiling);

  //! The same matrix obtained by writing f as a product of generators s_i,
  //! b_i (found by breadth-first search) and multiplying their matrices.
  ActionMatrix ubp_action_matrix_via_generators(Ubp const&  f,
                                                int         m,
                                                std::size_t ceiling = kDefaultActionCeiling);

  //! Matrix of the diagonal action of \p g on V^{(x) n}, dim V = m.
  ActionMatrix group_action_matrix(GroupElement const& g,
                                   int                 m,
                                   int                 r,
                                   int                 n,
                                   std::size_t         ceiling = kDefaultActionCeiling);

  struct CommutationResult {
    std::string monoid_generator;
    std::string group_generator;
    bool        commutes;
  };

  //! Every pair (P_n generator, group generator) with its outcome. Group
  //! generators are the torus generator on each coordinate and the adjacent
  //! transpositions of S_m; P_n generators are the identity, s_i and b_i.
  std::vector<CommutationResult> commutation_report(int         n,
                                                    int         m,
                                                    int         r,
                                                    std::size_t ceiling = kDefaultActionCeiling);

  bool commutation_check(int n, int m, int r, std::size_t ceiling = kDefaultActionCeiling);

  //! Rank of {ubp_action_matrix(f, m) : f in P_n} as vectors over Q.
  std::size_t action_span_rank(int n, int m, std::size_t ceiling = kDefaultActionCeiling);

  //! Degree p + q block of m o (f (x) g) o Delta on the tensor algebra with
  //! the unshuffle coproduct.
  ActionMatrix convolution_action(Ubp const&  f,
                                  Ubp const&  g,
                                  int         m,
                                  std::size_t ceiling = kDefaultActionCeiling);

  //! Integer-linear combination of ubp_action_matrix over the terms of \p x
  //! (all of degree n).
  ActionMatrix element_action_matrix(Element const& x,
                                     int            m,
                                     int            n,
                                     std::size_t    ceiling = kDefaultActionCeiling);

}  // namespace ubp
