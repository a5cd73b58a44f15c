#include "ubp/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ubp/error.hpp"

namespace ubp {

  namespace {
    std::string block_text(Block const& b) {
      std::string s = "{";
      for (std::size_t i = 0; i < b.size(); ++i) {
        s += (i ? "," : "") + std::to_string(b[i]);
      }
      return s + "}";
    }

    void sort_canonically(std::vector<Block>& blocks) {
      for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
      }
      std::sort(blocks.begin(), blocks.end(), [](Block const& x, Block const& y) {
        return x.front() < y.front();
      });
    }

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
      std::vector<std::size_t> parent;
    };

    void require_same_size(SetPartition const& a, SetPartition const& b, char const* what) {
      if (a.size() != b.size()) {
        throw ValidationError(std::string(what) + ": partitions of [" + std::to_string(a.size())
                              + "] and [" + std::to_string(b.size()) + "]");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PartitionType
  ////////////////////////////////////////////////////////////////////////

  PartitionType::PartitionType(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int m : mult_) {
      if (m < 0) {
        throw ValidationError("negative multiplicity in partition type");
      }
    }
    while (!mult_.empty() && mult_.back() == 0) {
      mult_.pop_back();
    }
  }

  int PartitionType::multiplicity(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > mult_.size()) {
      return 0;
    }
    return mult_[static_cast<std::size_t>(i - 1)];
  }

  int PartitionType::size() const {
    int n = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
      n += static_cast<int>(i + 1) * mult_[i];
    }
    return n;
  }

  std::vector<PartitionType> enumerate_partition_types(int n) {
    std::vector<PartitionType> result;
    std::vector<int>           mult(static_cast<std::size_t>(std::max(n, 0)), 0);
    // Fill multiplicities from the largest part downwards.
    auto rec = [&](auto&& self, int part, int remaining) -> void {
      if (remaining == 0) {
        result.emplace_back(mult);
        return;
      }
      if (part == 0) {
        return;
      }
      for (int k = remaining / part; k >= 0; --k) {
        mult[static_cast<std::size_t>(part - 1)] = k;
        self(self, part - 1, remaining - k * part);
      }
      mult[static_cast<std::size_t>(part - 1)] = 0;
    };
    rec(rec, n, n);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // SetPartition
  ////////////////////////////////////////////////////////////////////////

  SetPartition::SetPartition(int n, std::vector<Block> raw_blocks) : n_(n) {
    if (n < 0) {
      throw ValidationError("set partition size must be non-negative");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (auto const& b : raw_blocks) {
      if (b.empty()) {
        throw ValidationError("set partition has an empty block");
      }
      for (int x : b) {
        if (x < 1 || x > n) {
          throw ValidationError("element " + std::to_string(x) + " is outside 1.."
                                + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(x - 1)]) {
          throw ValidationError("element " + std::to_string(x) + " occurs in more than one block");
        }
        seen[static_cast<std::size_t>(x - 1)] = true;
      }
    }
    for (int x = 1; x <= n; ++x) {
      if (!seen[static_cast<std::size_t>(x - 1)]) {
        throw ValidationError("element " + std::to_string(x) + " is missing from every block");
      }
    }
    blocks_ = std::move(raw_blocks);
    sort_canonically(blocks_);
    build_labels();
  }

  SetPartition::SetPartition(int n, std::vector<Block> blocks, Canonical)
      : n_(n), blocks_(std::move(blocks)) {
    build_labels();
  }

  void SetPartition::build_labels() {
    label_.assign(static_cast<std::size_t>(n_), 0);
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      for (int x : blocks_[k]) {
        label_[static_cast<std::size_t>(x - 1)] = static_cast<std::uint32_t>(k);
      }
    }
  }

  SetPartition SetPartition::singletons(int n) {
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) {
      blocks.push_back({i});
    }
    return SetPartition(n, std::move(blocks), Canonical{});
  }

  SetPartition SetPartition::single_block(int n) {
    if (n == 0) {
      return SetPartition();
    }
    Block b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return SetPartition(n, {b}, Canonical{});
  }

  SetPartition SetPartition::from_labels(std::span<int const> labels) {
    std::vector<Block> blocks;
    std::vector<int>   seen_labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find(seen_labels.begin(), seen_labels.end(), labels[i]);
      if (it == seen_labels.end()) {
        seen_labels.push_back(labels[i]);
        blocks.push_back({static_cast<int>(i + 1)});
      } else {
        blocks[static_cast<std::size_t>(it - seen_labels.begin())].push_back(
            static_cast<int>(i + 1));
      }
    }
    return SetPartition(static_cast<int>(labels.size()), std::move(blocks), Canonical{});
  }

  PartitionType SetPartition::type() const {
    std::vector<int> mult(static_cast<std::size_t>(n_), 0);
    for (auto const& b : blocks_) {
      ++mult[b.size() - 1];
    }
    return PartitionType(std::move(mult));
  }

  SetPartition make_set_partition(int n, std::vector<Block> raw_blocks) {
    return SetPartition(n, std::move(raw_blocks));
  }

  std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> result;
    if (n < 0) {
      return result;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int max_label) -> void {
      if (i == n) {
        result.push_back(SetPartition::from_labels(rgs));
        return;
      }
      for (int label = 0; label <= max_label + 1; ++label) {
        rgs[static_cast<std::size_t>(i)] = label;
        self(self, i + 1, std::max(max_label, label));
      }
    };
    if (n == 0) {
      result.emplace_back();
    } else {
      rgs[0] = 0;
      rec(rec, 1, 0);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Integer count_partitions_of_type(PartitionType const& type) {
    int const n      = type.size();
    Integer   result = factorial(static_cast<unsigned long>(n));
    for (int i = 1; i <= n; ++i) {
      int const m = type.multiplicity(i);
      result /= factorial(static_cast<unsigned long>(m));
      for (int k = 0; k < m; ++k) {
        result /= factorial(static_cast<unsigned long>(i));
      }
    }
    return result;
  }

  SetPartition partition_action(Permutation const& s, SetPartition const& a) {
    if (s.size() != a.size()) {
      throw ValidationError("permutation of size " + std::to_string(s.size())
                            + " cannot act on a partition of [" + std::to_string(a.size()) + "]");
    }
    std::vector<int> labels(static_cast<std::size_t>(a.size()));
    for (int x = 1; x <= a.size(); ++x) {
      labels[static_cast<std::size_t>(s(x) - 1)] = static_cast<int>(a.block_index_of(x));
    }
    return SetPartition::from_labels(labels);
  }

  SetPartition coarsen_meet(SetPartition const& a, SetPartition const& b) {
    require_same_size(a, b, "coarsen_meet");
    UnionFind uf(static_cast<std::size_t>(a.size()));
    for (auto const* p : {&a, &b}) {
      for (auto const& block : p->blocks()) {
        for (int x : block) {
          uf.unite(static_cast<std::size_t>(block.front() - 1), static_cast<std::size_t>(x - 1));
        }
      }
    }
    std::vector<int> labels(static_cast<std::size_t>(a.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      labels[i] = static_cast<int>(uf.find(i));
    }
    return SetPartition::from_labels(labels);
  }

  bool refines_leq(SetPartition const& a, SetPartition const& b) {
    require_same_size(a, b, "refines_leq");
    for (auto const& block : b.blocks()) {
      auto const label = a.block_index_of(block.front());
      for (int x : block) {
        if (a.block_index_of(x) != label) {
          return false;
        }
      }
    }
    return true;
  }

  SetPartition restrict_standardize(SetPartition const&          a,
                                    std::span<std::size_t const> block_indices) {
    std::vector<bool> chosen(a.block_count(), false);
    for (auto k : block_indices) {
      if (k >= a.block_count()) {
        throw ValidationError("block index " + std::to_string(k) + " out of range for "
                              + std::to_string(a.block_count()) + " blocks");
      }
      if (chosen[k]) {
        throw ValidationError("block " + block_text(a.block(k)) + " selected twice");
      }
      chosen[k] = true;
    }
    // rank[x] = new label of element x among the chosen elements.
    std::vector<int> rank(static_cast<std::size_t>(a.size()) + 1, 0);
    int              m = 0;
    for (int x = 1; x <= a.size(); ++x) {
      if (chosen[a.block_index_of(x)]) {
        rank[static_cast<std::size_t>(x)] = ++m;
      }
    }
    std::vector<Block> blocks;
    for (std::size_t k = 0; k < a.block_count(); ++k) {
      if (chosen[k]) {
        Block b;
        for (int x : a.block(k)) {
          b.push_back(rank[static_cast<std::size_t>(x)]);
        }
        blocks.push_back(std::move(b));
      }
    }
    return SetPartition(m, std::move(blocks), SetPartition::Canonical{});
  }

  SetPartition cross_partition(SetPartition const& a, SetPartition const& b) {
    std::vector<Block> blocks = a.blocks();
    for (auto block : b.blocks()) {
      for (int& x : block) {
        x += a.size();
      }
      blocks.push_back(std::move(block));
    }
    return SetPartition(a.size() + b.size(), std::move(blocks), SetPartition::Canonical{});
  }

}  // namespace ubp
