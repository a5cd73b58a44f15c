#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ubp {

  //! A permutation of [n] = {1, ..., n} in one-line form: images()[i - 1] is
  //! the image of i.
  //!
  //! Composition follows function notation, (s * t)(i) = s(t(i)), so t is
  //! applied first. Every other module inherits this convention.
  class Permutation {
   public:
    Permutation() = default;

    //! Throws ValidationError unless \p images is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const noexcept {
      return static_cast<int>(images_.size());
    }

    int operator()(int i) const {
      return images_[static_cast<std::size_t>(i - 1)];
    }

    std::span<int const> images() const noexcept {
      return images_;
    }

    Permutation inverse() const;

    //! Number of inversions.
    std::size_t length() const;

    bool is_identity() const;

    friend Permutation operator*(Permutation const& s, Permutation const& t);

    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

    std::vector<int> images_;
  };

  //! The permutation s x t of [p + q] acting as s on 1..p and as t shifted
  //! by p on p+1..p+q.
  Permutation direct_sum(Permutation const& s, Permutation const& t);

  //! All of S_n in lexicographic order of one-line forms.
  std::vector<Permutation> enumerate_permutations(int n);

  //! Inversion set {(i, j) : i < j, s(i) > s(j)} in lexicographic order.
  std::vector<std::pair<int, int>> inversions(Permutation const& s);

  //! Weak order on S_n: s <= t iff inversions(s) is a subset of inversions(t).
  //! Throws ValidationError on a size mismatch.
  bool weak_leq(Permutation const& s, Permutation const& t);

}  // namespace ubp

template <>
struct std::hash<ubp::Permutation> {
  std::size_t operator()(ubp::Permutation const& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.images()) {
      h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    }
    return h;
  }
};
