#include "ubp/bases.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ubp/shuffles.hpp"

namespace ubp {

  namespace {
    // The weak-order component of P_n with a fixed domain partition.
    struct Component {
      std::vector<Ubp>           nodes;
      std::vector<Permutation>   xis;
      std::vector<std::size_t>   lengths;
      std::map<Ubp, std::size_t> index;

      explicit Component(SetPartition const& a) {
        auto const id = id_of_partition(a);
        for (auto const& xi : enumerate_A_shuffles(a)) {
          index.emplace(left_multiply(xi, id), nodes.size());
          nodes.push_back(left_multiply(xi, id));
          xis.push_back(xi);
          lengths.push_back(xi.length());
        }
      }

      bool leq(std::size_t i, std::size_t j) const {
        return weak_leq(xis[i], xis[j]);
      }

      // Node indices sorted by length, ascending.
      std::vector<std::size_t> by_length() const {
        std::vector<std::size_t> order(nodes.size());
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::stable_sort(order.begin(), order.end(), [this](std::size_t x, std::size_t y) {
          return lengths[x] < lengths[y];
        });
        return order;
      }
    };

    using ComponentCache = std::map<SetPartition, Component>;

    Component const& component(ComponentCache& cache, SetPartition const& a) {
      auto it = cache.find(a);
      if (it == cache.end()) {
        it = cache.emplace(a, Component(a)).first;
      }
      return it->second;
    }

    // down = true expands g into the down-set of g, otherwise the up-set.
    Element expand(Element const& coords, bool down) {
      ComponentCache cache;
      Element        result;
      for (auto const& [g, coeff] : coords) {
        auto const& comp = component(cache, g.domain());
        auto const  j    = comp.index.at(g);
        for (std::size_t i = 0; i < comp.nodes.size(); ++i) {
          if (down ? comp.leq(i, j) : comp.leq(j, i)) {
            result.add(comp.nodes[i], coeff);
          }
        }
      }
      return result;
    }

    // Inverse of expand by back substitution along the length grading.
    Element solve(Element const& x, bool down) {
      ComponentCache                    cache;
      std::map<SetPartition, bool>      domains;
      for (auto const& [f, coeff] : x) {
        domains[f.domain()] = true;
      }
      Element result;
      for (auto const& [a, unused] : domains) {
        auto const& comp  = component(cache, a);
        auto        order = comp.by_length();
        if (down) {
          // x_f = sum_{h >= f} c_h: solve from the top.
          std::reverse(order.begin(), order.end());
        }
        std::vector<Integer> c(comp.nodes.size());
        std::vector<bool>    done(comp.nodes.size(), false);
        for (auto f : order) {
          Integer value = x.coefficient(comp.nodes[f]);
          for (std::size_t h = 0; h < comp.nodes.size(); ++h) {
            if (done[h] && h != f && (down ? comp.leq(f, h) : comp.leq(h, f))) {
              value -= c[h];
            }
          }
          c[f]    = value;
          done[f] = true;
          result.add(comp.nodes[f], value);
        }
      }
      return result;
    }
  }  // namespace

  Element from_X_basis(Element const& x_coords) {
    return expand(x_coords, true);
  }

  Element to_X_basis(Element const& x) {
    return solve(x, true);
  }

  Element from_Z_basis(Element const& z_coords) {
    return expand(z_coords, false);
  }

  Element to_Z_basis(Element const& x) {
    return solve(x, false);
  }

  Element X_element(Ubp const& g) {
    return from_X_basis(Element::basis(g));
  }

  Element Z_element(Ubp const& g) {
    return from_Z_basis(Element::basis(g));
  }

}  // namespace ubp
