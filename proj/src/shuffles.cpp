#include "ubp/shuffles.hpp"

#include <algorithm>

#include "ubp/error.hpp"

namespace ubp {

  namespace {
    // Assign value sets to the blocks of `a` one block at a time; each block
    // receives its values in increasing order.
    void assign_blocks(SetPartition const&       a,
                       std::size_t               block,
                       std::vector<bool>&        used,
                       std::vector<int>&         images,
                       std::vector<Permutation>& out) {
      if (block == a.block_count()) {
        out.emplace_back(images);
        return;
      }
      auto const& b = a.block(block);
      int const   n = a.size();
      // Choose an increasing sequence of unused values of length |b|.
      std::vector<int> choice;
      auto rec = [&](auto&& self, int next_value) -> void {
        if (choice.size() == b.size()) {
          for (std::size_t t = 0; t < b.size(); ++t) {
            images[static_cast<std::size_t>(b[t] - 1)] = choice[t];
          }
          assign_blocks(a, block + 1, used, images, out);
          return;
        }
        for (int v = next_value; v <= n; ++v) {
          if (!used[static_cast<std::size_t>(v - 1)]) {
            used[static_cast<std::size_t>(v - 1)] = true;
            choice.push_back(v);
            self(self, v + 1);
            choice.pop_back();
            used[static_cast<std::size_t>(v - 1)] = false;
          }
        }
      };
      rec(rec, 1);
    }

    void require_non_negative(int p, int q) {
      if (p < 0 || q < 0) {
        throw ValidationError("shuffle parameters must be non-negative");
      }
    }
  }  // namespace

  std::vector<Permutation> enumerate_A_shuffles(SetPartition const& a) {
    std::vector<Permutation> result;
    std::vector<bool>        used(static_cast<std::size_t>(a.size()), false);
    std::vector<int>         images(static_cast<std::size_t>(a.size()), 0);
    assign_blocks(a, 0, used, images, result);
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Permutation> enumerate_shuffles(int p, int q) {
    require_non_negative(p, q);
    std::vector<Block> blocks;
    if (p > 0) {
      Block first;
      for (int i = 1; i <= p; ++i) {
        first.push_back(i);
      }
      blocks.push_back(std::move(first));
    }
    if (q > 0) {
      Block second;
      for (int i = p + 1; i <= p + q; ++i) {
        second.push_back(i);
      }
      blocks.push_back(std::move(second));
    }
    return enumerate_A_shuffles(SetPartition(p + q, std::move(blocks)));
  }

  Permutation max_shuffle(int p, int q) {
    require_non_negative(p, q);
    std::vector<int> images;
    for (int i = 1; i <= p; ++i) {
      images.push_back(q + i);
    }
    for (int i = 1; i <= q; ++i) {
      images.push_back(i);
    }
    return Permutation(std::move(images));
  }

  Permutation beta_shuffle(int n, int m) {
    // beta_{n,m}(i) = m + i for i <= n and i - n otherwise, which is the same
    // one-line form as the maximal (n, m)-shuffle.
    return max_shuffle(n, m);
  }

  std::vector<Permutation> parabolic_stabilizer(SetPartition const& a) {
    std::vector<Permutation> result;
    std::vector<int>         images(static_cast<std::size_t>(a.size()), 0);
    auto rec = [&](auto&& self, std::size_t block) -> void {
      if (block == a.block_count()) {
        result.emplace_back(images);
        return;
      }
      Block values = a.block(block);
      do {
        for (std::size_t t = 0; t < values.size(); ++t) {
          images[static_cast<std::size_t>(a.block(block)[t] - 1)] = values[t];
        }
        self(self, block + 1);
      } while (std::next_permutation(values.begin(), values.end()));
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace ubp
