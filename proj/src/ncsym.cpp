#include "ubp/ncsym.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ubp {

  Word make_word(int alphabet, std::vector<int> letters) {
    if (alphabet < 1) {
      throw ValidationError("alphabet size must be positive");
    }
    for (int x : letters) {
      if (x < 1 || x > alphabet) {
        throw ValidationError("letter " + std::to_string(x) + " outside alphabet 1.."
                              + std::to_string(alphabet));
      }
    }
    return Word{alphabet, std::move(letters)};
  }

  SetPartition kernel(Word const& w) {
    return SetPartition::from_labels(w.letters);
  }

  std::vector<Word> expand_p(SetPartition const& a, int alphabet) {
    if (alphabet < 1) {
      throw ValidationError("alphabet size must be positive");
    }
    std::vector<Word> result;
    std::vector<int>  block_letter(a.block_count(), 1);
    while (true) {
      Word w{alphabet, std::vector<int>(static_cast<std::size_t>(a.size()))};
      for (int x = 1; x <= a.size(); ++x) {
        w.letters[static_cast<std::size_t>(x - 1)] = block_letter[a.block_index_of(x)];
      }
      result.push_back(std::move(w));
      // Odometer over block letters.
      std::size_t k = 0;
      while (k < block_letter.size() && block_letter[k] == alphabet) {
        block_letter[k++] = 1;
      }
      if (k == block_letter.size()) {
        break;
      }
      ++block_letter[k];
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  NCSymElement p_product(NCSymElement const& u, NCSymElement const& v) {
    NCSymElement result;
    for (auto const& [a, x] : u) {
      for (auto const& [b, y] : v) {
        result.add(cross_partition(a, b), x * y);
      }
    }
    return result;
  }

  NCSymTensor p_coproduct(NCSymElement const& u) {
    NCSymTensor result;
    for (auto const& [a, coeff] : u) {
      auto const k = a.block_count();
      for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<std::size_t> s, t;
        for (std::size_t j = 0; j < k; ++j) {
          ((mask >> j) & 1 ? s : t).push_back(j);
        }
        result.add({restrict_standardize(a, s), restrict_standardize(a, t)}, coeff);
      }
    }
    return result;
  }

  Element to_Z_element(NCSymElement const& u) {
    Element result;
    for (auto const& [a, coeff] : u) {
      result += coeff * Z_of_partition(a);
    }
    return result;
  }

  TensorElement to_Z_tensor(NCSymTensor const& t) {
    TensorElement result;
    for (auto const& [pair, coeff] : t) {
      result += coeff * tensor(Z_of_partition(pair.first), Z_of_partition(pair.second));
    }
    return result;
  }

  NotInZSpanError::NotInZSpanError(Element residual)
      : ValidationError("element is not in the span of the Z_A (residual has "
                        + std::to_string(residual.size()) + " terms)"),
        residual_(std::move(residual)) {}

  NCSymElement from_Z_element(Element const& x) {
    // Each f lies in exactly one Z_A (A = domain of f) and id_A always does,
    // so the coordinate of Z_A is the coefficient of id_A.
    std::map<SetPartition, bool> domains;
    for (auto const& [f, coeff] : x) {
      domains[f.domain()] = true;
    }
    NCSymElement result;
    Element      residual = x;
    for (auto const& [a, unused] : domains) {
      auto const c = x.coefficient(id_of_partition(a));
      result.add(a, c);
      residual -= c * Z_of_partition(a);
    }
    if (!residual.is_zero()) {
      throw NotInZSpanError(std::move(residual));
    }
    return result;
  }

}  // namespace ubp
