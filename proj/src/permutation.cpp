#include "ubp/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ubp/error.hpp"

namespace ubp {

  Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int const           n = size();
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 1 || x > n) {
        throw ValidationError("permutation image " + std::to_string(x) + " is outside 1.."
                              + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(x - 1)]) {
        throw ValidationError("permutation image " + std::to_string(x) + " repeated");
      }
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
  }

  Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images), Unchecked{});
  }

  Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    }
    return Permutation(std::move(inv), Unchecked{});
  }

  std::size_t Permutation::length() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      for (std::size_t j = i + 1; j < images_.size(); ++j) {
        count += images_[i] > images_[j];
      }
    }
    return count;
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  Permutation operator*(Permutation const& s, Permutation const& t) {
    if (s.size() != t.size()) {
      throw ValidationError("cannot compose permutations of sizes " + std::to_string(s.size())
                            + " and " + std::to_string(t.size()));
    }
    std::vector<int> images(t.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = s(t.images_[i]);
    }
    return Permutation(std::move(images), Permutation::Unchecked{});
  }

  Permutation direct_sum(Permutation const& s, Permutation const& t) {
    std::vector<int> images(s.images().begin(), s.images().end());
    for (int x : t.images()) {
      images.push_back(x + s.size());
    }
    return Permutation(std::move(images));
  }

  std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> result;
    do {
      result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
  }

  std::vector<std::pair<int, int>> inversions(Permutation const& s) {
    std::vector<std::pair<int, int>> result;
    for (int i = 1; i <= s.size(); ++i) {
      for (int j = i + 1; j <= s.size(); ++j) {
        if (s(i) > s(j)) {
          result.emplace_back(i, j);
        }
      }
    }
    return result;
  }

  bool weak_leq(Permutation const& s, Permutation const& t) {
    if (s.size() != t.size()) {
      throw ValidationError("weak order comparison of permutations of sizes "
                            + std::to_string(s.size()) + " and " + std::to_string(t.size()));
    }
    for (int i = 1; i <= s.size(); ++i) {
      for (int j = i + 1; j <= s.size(); ++j) {
        if (s(i) > s(j) && t(i) < t(j)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace ubp
