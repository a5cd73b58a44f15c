#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ubp/integer.hpp"
#include "ubp/permutation.hpp"

namespace ubp {

  using Block = std::vector<int>;

  //! The type of a set partition of [n], stored as multiplicities:
  //! multiplicities()[i - 1] is the number of blocks of size i.
  class PartitionType {
   public:
    PartitionType() = default;
    //! Trailing zero multiplicities are dropped; throws on negative entries.
    explicit PartitionType(std::vector<int> multiplicities);

    std::vector<int> const& multiplicities() const noexcept {
      return mult_;
    }

    //! Number of blocks of size \p i (0 if i exceeds the stored range).
    int multiplicity(int i) const;

    //! The integer n = sum of i * m_i.
    int size() const;

    friend auto operator<=>(PartitionType const&, PartitionType const&) = default;

   private:
    std::vector<int> mult_;
  };

  //! All partition types of n (i.e. integer partitions of n).
  std::vector<PartitionType> enumerate_partition_types(int n);

  //! A set partition of [n] in canonical form: blocks sorted by their minima,
  //! elements increasing within each block. The canonical form is the
  //! equality, ordering and hashing key.
  class SetPartition {
   public:
    //! The empty partition of [0].
    SetPartition() = default;

    //! Validates and canonicalizes \p raw_blocks. Throws ValidationError
    //! naming the offending element on overlap, out-of-range or missing
    //! elements, or on an empty block.
    SetPartition(int n, std::vector<Block> raw_blocks);

    static SetPartition singletons(int n);
    static SetPartition single_block(int n);

    //! Groups 1..n by equal \p labels (labels may be arbitrary integers).
    static SetPartition from_labels(std::span<int const> labels);

    int size() const noexcept {
      return n_;
    }

    std::size_t block_count() const noexcept {
      return blocks_.size();
    }

    std::vector<Block> const& blocks() const noexcept {
      return blocks_;
    }

    Block const& block(std::size_t k) const {
      return blocks_.at(k);
    }

    //! Index (in canonical order) of the block containing \p element.
    std::size_t block_index_of(int element) const {
      return label_.at(static_cast<std::size_t>(element - 1));
    }

    //! Restricted growth string: entry i - 1 is the block index of i.
    std::span<std::uint32_t const> labels() const noexcept {
      return label_;
    }

    PartitionType type() const;

    friend auto operator<=>(SetPartition const&, SetPartition const&) = default;

   private:
    friend SetPartition restrict_standardize(SetPartition const&, std::span<std::size_t const>);
    friend SetPartition cross_partition(SetPartition const&, SetPartition const&);

    struct Canonical {};
    SetPartition(int n, std::vector<Block> blocks, Canonical);
    void build_labels();

    int                        n_ = 0;
    std::vector<Block>         blocks_;
    std::vector<std::uint32_t> label_;
  };

  //! Same as the validating constructor.
  SetPartition make_set_partition(int n, std::vector<Block> raw_blocks);

  //! All set partitions of [n], each once, ordered lexicographically by the
  //! canonical block sequence.
  std::vector<SetPartition> enumerate_set_partitions(int n);

  //! n! / (m_1! ... m_n! (1!)^{m_1} ... (n!)^{m_n}).
  Integer count_partitions_of_type(PartitionType const& type);

  //! The partition with blocks s(A) for A a block of \p a.
  SetPartition partition_action(Permutation const& s, SetPartition const& a);

  //! Finest partition coarser than both arguments (the meet for the
  //! coarse-is-smaller order used throughout).
  SetPartition coarsen_meet(SetPartition const& a, SetPartition const& b);

  //! True iff every block of \p b lies inside a block of \p a.
  bool refines_leq(SetPartition const& a, SetPartition const& b);

  //! Restriction of \p a to the blocks with the given indices, standardized
  //! to [m] by order-preserving relabelling.
  SetPartition restrict_standardize(SetPartition const&      a,
                                    std::span<std::size_t const> block_indices);

  //! Blocks of \p a followed by the blocks of \p b shifted by a.size().
  SetPartition cross_partition(SetPartition const& a, SetPartition const& b);

}  // namespace ubp

template <>
struct std::hash<ubp::SetPartition> {
  std::size_t operator()(ubp::SetPartition const& a) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(a.size());
    for (auto x : a.labels()) {
      h = (h ^ x) * 0x100000001b3ULL;
    }
    return h;
  }
};
