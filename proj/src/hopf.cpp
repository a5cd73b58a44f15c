#include "ubp/hopf.hpp"

#include <map>
#include <string>

#include "ubp/error.hpp"
#include "ubp/shuffles.hpp"

namespace ubp {

  Element unit_element() {
    return Element::basis(Ubp());
  }

  std::optional<int> homogeneous_degree(Element const& x) {
    std::optional<int> degree;
    for (auto const& [f, coeff] : x) {
      if (degree && *degree != f.size()) {
        return std::nullopt;
      }
      degree = f.size();
    }
    return degree;
  }

  TensorElement tensor(Element const& x, Element const& y) {
    TensorElement result;
    for (auto const& [f, a] : x) {
      for (auto const& [g, b] : y) {
        result.add({f, g}, a * b);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Product
  ////////////////////////////////////////////////////////////////////////

  Element product(Ubp const& f, Ubp const& g) {
    auto const fg = concat(f, g);
    Element    result;
    for (auto const& xi : enumerate_shuffles(f.size(), g.size())) {
      result.add(left_multiply(xi, fg), 1);
    }
    return result;
  }

  Element product(Element const& x, Element const& y) {
    Element result;
    for (auto const& [f, a] : x) {
      for (auto const& [g, b] : y) {
        Integer const c = a * b;
        for (auto const& [h, d] : product(f, g)) {
          result.add(h, c * d);
        }
      }
    }
    return result;
  }

  TensorElement product(TensorElement const& x, TensorElement const& y) {
    TensorElement result;
    for (auto const& [p, a] : x) {
      for (auto const& [q, b] : y) {
        result += (a * b) * tensor(product(p.first, q.first), product(p.second, q.second));
      }
    }
    return result;
  }

  Element multiply(TensorElement const& t) {
    Element result;
    for (auto const& [pair, coeff] : t) {
      result += coeff * product(pair.first, pair.second);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coproduct, counit, antipode
  ////////////////////////////////////////////////////////////////////////

  TensorElement coproduct(Ubp const& f) {
    TensorElement result;
    for (int i : breaking_points(f)) {
      auto split = split_at_breaking_point(f, i);
      result.add({std::move(split.left), std::move(split.right)}, 1);
    }
    return result;
  }

  TensorElement coproduct(Element const& x) {
    TensorElement result;
    for (auto const& [f, coeff] : x) {
      for (auto const& [pair, c] : coproduct(f)) {
        result.add(pair, coeff * c);
      }
    }
    return result;
  }

  Integer counit(Element const& x) {
    return x.coefficient(Ubp());
  }

  namespace {
    Element const& antipode_of(Ubp const& f, std::map<Ubp, Element>& memo) {
      if (auto it = memo.find(f); it != memo.end()) {
        return it->second;
      }
      Element result;
      if (f.size() == 0) {
        result = unit_element();
      } else {
        result.add(f, -1);
        for (int i : breaking_points(f)) {
          if (i == 0 || i == f.size()) {
            continue;
          }
          auto split = split_at_breaking_point(f, i);
          result -= product(antipode_of(split.left, memo), Element::basis(split.right));
        }
      }
      return memo.emplace(f, std::move(result)).first->second;
    }
  }  // namespace

  Element antipode(Element const& x) {
    std::map<Ubp, Element> memo;
    Element                result;
    for (auto const& [f, coeff] : x) {
      result += coeff * antipode_of(f, memo);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pairing
  ////////////////////////////////////////////////////////////////////////

  Integer pairing(Element const& x, Element const& y) {
    Integer result = 0;
    for (auto const& [f, coeff] : x) {
      result += coeff * y.coefficient(tilde(f));
    }
    return result;
  }

  Integer pairing(TensorElement const& x, TensorElement const& y) {
    Integer result = 0;
    for (auto const& [pair, coeff] : x) {
      result += coeff * y.coefficient({tilde(pair.first), tilde(pair.second)});
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // The elements Z_A and the monoid actions
  ////////////////////////////////////////////////////////////////////////

  Element Z_of_partition(SetPartition const& a) {
    auto const id = id_of_partition(a);
    Element    result;
    for (auto const& xi : enumerate_A_shuffles(a)) {
      result.add(left_multiply(xi, id), 1);
    }
    return result;
  }

  Element right_action(Element const& x, Ubp const& h) {
    Element result;
    for (auto const& [f, coeff] : x) {
      if (f.size() != h.size()) {
        throw ValidationError("right_action: term of degree " + std::to_string(f.size())
                              + " acted on by an element of P_" + std::to_string(h.size()));
      }
      result.add(compose(f, h), coeff);
    }
    return result;
  }

  Element left_action(Ubp const& h, Element const& x) {
    Element result;
    for (auto const& [f, coeff] : x) {
      if (f.size() != h.size()) {
        throw ValidationError("left_action: term of degree " + std::to_string(f.size())
                              + " acted on by an element of P_" + std::to_string(h.size()));
      }
      result.add(compose(h, f), coeff);
    }
    return result;
  }

  bool is_primitive(Element const& x) {
    auto const degree = homogeneous_degree(x);
    if (!degree || *degree < 1) {
      throw ValidationError("is_primitive expects a non-zero homogeneous element of degree >= 1");
    }
    return coproduct(x) == tensor(x, unit_element()) + tensor(unit_element(), x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Generating series
  ////////////////////////////////////////////////////////////////////////

  std::vector<Integer> primitive_series(int terms) {
    if (terms < 0) {
      throw ValidationError("number of terms must be non-negative");
    }
    auto const           len = static_cast<std::size_t>(terms) + 1;
    std::vector<Integer> u(len), inv(len), v(len);
    for (std::size_t n = 0; n < len; ++n) {
      u[n] = count_ubp(static_cast<int>(n));
    }
    // inv = 1 / P(x); P(0) = 1 keeps everything integral.
    inv[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
      Integer s = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        s += u[k] * inv[n - k];
      }
      inv[n] = -s;
    }
    v[0] = 0;
    for (std::size_t n = 1; n < len; ++n) {
      v[n] = -inv[n];
    }
    return v;
  }

  std::vector<Integer> series_from_primitives(std::vector<Integer> const& v) {
    if (v.empty()) {
      return {};
    }
    if (v[0] != 0) {
      throw ValidationError("primitive series must have zero constant term");
    }
    std::vector<Integer> p(v.size());
    p[0] = 1;
    for (std::size_t n = 1; n < v.size(); ++n) {
      Integer s = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        s += v[k] * p[n - k];
      }
      p[n] = s;
    }
    return p;
  }

}  // namespace ubp
