#pragma once

#include <map>
#include <utility>

#include "ubp/integer.hpp"

namespace ubp {

  //! Finite integer linear combination of basis keys. Zero coefficients are
  //! never stored, so two combinations are equal iff their term maps are.
  template <class Key>
  class LinearCombination {
   public:
    using key_type       = Key;
    using container_type = std::map<Key, Integer>;
    using const_iterator = typename container_type::const_iterator;

    LinearCombination() = default;

    static LinearCombination basis(Key key, Integer coeff = 1) {
      LinearCombination result;
      result.add(std::move(key), coeff);
      return result;
    }

    void add(Key const& key, Integer const& coeff) {
      if (coeff == 0) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(key, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
          terms_.erase(it);
        }
      }
    }

    Integer coefficient(Key const& key) const {
      auto it = terms_.find(key);
      return it == terms_.end() ? Integer(0) : it->second;
    }

    container_type const& terms() const noexcept {
      return terms_;
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    std::size_t size() const noexcept {
      return terms_.size();
    }

    const_iterator begin() const {
      return terms_.begin();
    }

    const_iterator end() const {
      return terms_.end();
    }

    LinearCombination& operator+=(LinearCombination const& other) {
      for (auto const& [key, coeff] : other.terms_) {
        add(key, coeff);
      }
      return *this;
    }

    LinearCombination& operator-=(LinearCombination const& other) {
      for (auto const& [key, coeff] : other.terms_) {
        add(key, -coeff);
      }
      return *this;
    }

    LinearCombination& operator*=(Integer const& scalar) {
      if (scalar == 0) {
        terms_.clear();
        return *this;
      }
      for (auto& term : terms_) {
        term.second *= scalar;
      }
      return *this;
    }

    friend LinearCombination operator+(LinearCombination lhs, LinearCombination const& rhs) {
      lhs += rhs;
      return lhs;
    }

    friend LinearCombination operator-(LinearCombination lhs, LinearCombination const& rhs) {
      lhs -= rhs;
      return lhs;
    }

    friend LinearCombination operator-(LinearCombination x) {
      for (auto& term : x.terms_) {
        term.second = -term.second;
      }
      return x;
    }

    friend LinearCombination operator*(Integer const& scalar, LinearCombination x) {
      x *= scalar;
      return x;
    }

    friend bool operator==(LinearCombination const&, LinearCombination const&) = default;

   private:
    container_type terms_;
  };

}  // namespace ubp
