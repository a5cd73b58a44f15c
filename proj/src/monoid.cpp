#include "ubp/monoid.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include "ubp/error.hpp"
#include "ubp/shuffles.hpp"

namespace ubp {

  Ubp make_ubp_unchecked(SetPartition domain, SetPartition codomain, std::vector<std::size_t> map) {
    return Ubp(std::move(domain), std::move(codomain), std::move(map), Ubp::Unchecked{});
  }

  namespace {
    std::string block_text(Block const& b) {
      std::string s = "{";
      for (std::size_t i = 0; i < b.size(); ++i) {
        s += (i ? "," : "") + std::to_string(b[i]);
      }
      return s + "}";
    }

    void require_same_size(Ubp const& f, Ubp const& g, char const* what) {
      if (f.size() != g.size()) {
        throw ValidationError(std::string(what) + ": elements of P_" + std::to_string(f.size())
                              + " and P_" + std::to_string(g.size()));
      }
    }

    void require_ceiling(int n, int ceiling) {
      if (n < 0) {
        throw ValidationError("n must be non-negative");
      }
      if (n > ceiling) {
        throw CeilingError("n = " + std::to_string(n) + " exceeds the enumeration ceiling "
                           + std::to_string(ceiling));
      }
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

    std::vector<std::size_t> iota_map(std::size_t k) {
      std::vector<std::size_t> map(k);
      std::iota(map.begin(), map.end(), std::size_t(0));
      return map;
    }
  }  // namespace

  Ubp::Ubp(SetPartition domain, SetPartition codomain, std::vector<std::size_t> block_map)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(block_map)) {
    if (domain_.size() != codomain_.size()) {
      throw ValidationError("domain is a partition of [" + std::to_string(domain_.size())
                            + "] but codomain is a partition of [" + std::to_string(codomain_.size())
                            + "]");
    }
    if (domain_.block_count() != codomain_.block_count()) {
      throw ValidationError("domain has " + std::to_string(domain_.block_count())
                            + " blocks but codomain has " + std::to_string(codomain_.block_count()));
    }
    if (map_.size() != domain_.block_count()) {
      throw ValidationError("block map has " + std::to_string(map_.size()) + " entries for "
                            + std::to_string(domain_.block_count()) + " domain blocks");
    }
    std::vector<bool> hit(map_.size(), false);
    for (std::size_t k = 0; k < map_.size(); ++k) {
      if (map_[k] >= map_.size()) {
        throw ValidationError("block map entry " + std::to_string(map_[k]) + " is out of range");
      }
      if (hit[map_[k]]) {
        throw ValidationError("block map is not a bijection: codomain block "
                              + block_text(codomain_.block(map_[k])) + " is hit twice");
      }
      hit[map_[k]] = true;
      if (domain_.block(k).size() != codomain_.block(map_[k]).size()) {
        throw ValidationError("non-uniform: domain block " + block_text(domain_.block(k))
                              + " is sent to codomain block "
                              + block_text(codomain_.block(map_[k])));
      }
    }
  }

  Permutation Ubp::as_permutation() const {
    if (!is_permutation()) {
      throw ValidationError("uniform block permutation has a block of size > 1");
    }
    std::vector<int> images(static_cast<std::size_t>(size()));
    for (std::size_t k = 0; k < map_.size(); ++k) {
      images[static_cast<std::size_t>(domain_.block(k).front() - 1)] = image(k).front();
    }
    return Permutation(std::move(images));
  }

  Ubp make_ubp(SetPartition domain, SetPartition codomain, std::vector<std::size_t> block_map) {
    return Ubp(std::move(domain), std::move(codomain), std::move(block_map));
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  Ubp compose(Ubp const& g, Ubp const& f) {
    require_same_size(f, g, "compose");
    auto const  n = static_cast<std::size_t>(f.size());
    // Vertices: top row [0, n), middle row [n, 2n), bottom row [2n, 3n).
    UnionFind   uf(3 * n);
    auto        top    = [](int x) { return static_cast<std::size_t>(x - 1); };
    auto        middle = [n](int x) { return n + static_cast<std::size_t>(x - 1); };
    auto        bottom = [n](int x) { return 2 * n + static_cast<std::size_t>(x - 1); };

    for (std::size_t k = 0; k < f.domain().block_count(); ++k) {
      auto const& a    = f.domain().block(k);
      auto const  root = top(a.front());
      for (int x : a) {
        uf.unite(root, top(x));
      }
      for (int y : f.image(k)) {
        uf.unite(root, middle(y));
      }
    }
    for (std::size_t k = 0; k < g.domain().block_count(); ++k) {
      auto const& c    = g.domain().block(k);
      auto const  root = middle(c.front());
      for (int x : c) {
        uf.unite(root, middle(x));
      }
      for (int y : g.image(k)) {
        uf.unite(root, bottom(y));
      }
    }

    std::vector<int> top_labels(n), bottom_labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      top_labels[i]    = static_cast<int>(uf.find(i));
      bottom_labels[i] = static_cast<int>(uf.find(2 * n + i));
    }
    auto domain   = SetPartition::from_labels(top_labels);
    auto codomain = SetPartition::from_labels(bottom_labels);

    std::map<int, std::size_t> codomain_index_of_root;
    for (std::size_t k = 0; k < codomain.block_count(); ++k) {
      codomain_index_of_root[bottom_labels[static_cast<std::size_t>(codomain.block(k).front() - 1)]]
          = k;
    }
    std::vector<std::size_t> map(domain.block_count());
    for (std::size_t k = 0; k < domain.block_count(); ++k) {
      map[k] = codomain_index_of_root.at(
          top_labels[static_cast<std::size_t>(domain.block(k).front() - 1)]);
      assert(domain.block(k).size() == codomain.block(map[k]).size());
    }
    return make_ubp_unchecked(std::move(domain), std::move(codomain), std::move(map));
  }

  Ubp left_multiply(Permutation const& s, Ubp const& f) {
    if (s.size() != f.size()) {
      throw ValidationError("left_multiply: permutation of size " + std::to_string(s.size())
                            + " and element of P_" + std::to_string(f.size()));
    }
    auto                     codomain = partition_action(s, f.codomain());
    std::vector<std::size_t> map(f.block_map().size());
    for (std::size_t k = 0; k < map.size(); ++k) {
      map[k] = codomain.block_index_of(s(f.image(k).front()));
    }
    return make_ubp_unchecked(f.domain(), std::move(codomain), std::move(map));
  }

  Ubp right_multiply(Ubp const& f, Permutation const& s) {
    if (s.size() != f.size()) {
      throw ValidationError("right_multiply: permutation of size " + std::to_string(s.size())
                            + " and element of P_" + std::to_string(f.size()));
    }
    auto const               inv    = s.inverse();
    auto                     domain = partition_action(inv, f.domain());
    std::vector<std::size_t> map(f.block_map().size());
    for (std::size_t k = 0; k < map.size(); ++k) {
      map[domain.block_index_of(inv(f.domain().block(k).front()))] = f.block_map()[k];
    }
    return make_ubp_unchecked(std::move(domain), f.codomain(), std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // Distinguished elements
  ////////////////////////////////////////////////////////////////////////

  Ubp identity(int n) {
    return id_of_partition(SetPartition::singletons(n));
  }

  Ubp id_of_partition(SetPartition const& a) {
    return make_ubp_unchecked(a, a, iota_map(a.block_count()));
  }

  Ubp from_permutation(Permutation const& s) {
    std::vector<std::size_t> map(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i) {
      map[static_cast<std::size_t>(i - 1)] = static_cast<std::size_t>(s(i) - 1);
    }
    auto singletons = SetPartition::singletons(s.size());
    return make_ubp_unchecked(singletons, singletons, std::move(map));
  }

  namespace {
    void require_generator_index(int n, int i) {
      if (i < 1 || i > n - 1) {
        throw ValidationError("generator index " + std::to_string(i) + " outside 1.."
                              + std::to_string(n - 1));
      }
    }
  }  // namespace

  Ubp generator_s(int n, int i) {
    require_generator_index(n, i);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
    return from_permutation(Permutation(std::move(images)));
  }

  Ubp generator_b(int n, int i) {
    require_generator_index(n, i);
    std::vector<Block> blocks;
    for (int x = 1; x <= n; ++x) {
      if (x == i) {
        blocks.push_back({i, i + 1});
      } else if (x != i + 1) {
        blocks.push_back({x});
      }
    }
    return id_of_partition(SetPartition(n, std::move(blocks)));
  }

  Ubp tilde(Ubp const& f) {
    std::vector<std::size_t> inv(f.block_map().size());
    for (std::size_t k = 0; k < inv.size(); ++k) {
      inv[f.block_map()[k]] = k;
    }
    return make_ubp_unchecked(f.codomain(), f.domain(), std::move(inv));
  }

  Ubp concat(Ubp const& f, Ubp const& g) {
    std::vector<std::size_t> map(f.block_map().begin(), f.block_map().end());
    auto const               shift = f.codomain().block_count();
    for (auto k : g.block_map()) {
      map.push_back(k + shift);
    }
    return make_ubp_unchecked(cross_partition(f.domain(), g.domain()),
                              cross_partition(f.codomain(), g.codomain()),
                              std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and counting
  ////////////////////////////////////////////////////////////////////////

  std::vector<Ubp> enumerate_ubp(int n, int ceiling) {
    require_ceiling(n, ceiling);
    std::map<PartitionType, std::vector<SetPartition>> by_type;
    for (auto& a : enumerate_set_partitions(n)) {
      by_type[a.type()].push_back(std::move(a));
    }
    std::vector<Ubp> result;
    for (auto const& [type, parts] : by_type) {
      for (auto const& a : parts) {
        for (auto const& b : parts) {
          // Blocks of each size, in canonical order.
          std::map<std::size_t, std::vector<std::size_t>> a_by_size, b_by_size;
          for (std::size_t k = 0; k < a.block_count(); ++k) {
            a_by_size[a.block(k).size()].push_back(k);
            b_by_size[b.block(k).size()].push_back(k);
          }
          std::vector<std::vector<std::size_t>> images;
          std::vector<std::vector<std::size_t>> sources;
          for (auto const& [size, idx] : b_by_size) {
            images.push_back(idx);
            sources.push_back(a_by_size[size]);
          }
          std::vector<std::size_t> map(a.block_count());
          auto rec = [&](auto&& self, std::size_t cls) -> void {
            if (cls == images.size()) {
              result.push_back(make_ubp_unchecked(a, b, map));
              return;
            }
            auto perm = images[cls];
            do {
              for (std::size_t t = 0; t < perm.size(); ++t) {
                map[sources[cls][t]] = perm[t];
              }
              self(self, cls + 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
          };
          rec(rec, 0);
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Ubp> closure_from_generators(int n, int ceiling) {
    require_ceiling(n, ceiling);
    std::vector<Ubp> generators;
    for (int i = 1; i < n; ++i) {
      generators.push_back(generator_s(n, i));
      generators.push_back(generator_b(n, i));
    }
    std::unordered_set<Ubp> seen{identity(n)};
    std::deque<Ubp>         queue{identity(n)};
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (auto const& gen : generators) {
        auto y = compose(gen, x);
        if (seen.insert(y).second) {
          queue.push_back(std::move(y));
        }
      }
    }
    std::vector<Ubp> result(seen.begin(), seen.end());
    std::sort(result.begin(), result.end());
    return result;
  }

  Integer count_ubp(int n) {
    if (n < 0) {
      throw ValidationError("n must be non-negative");
    }
    Integer total = 0;
    auto const nfact = factorial(static_cast<unsigned long>(n));
    for (auto const& type : enumerate_partition_types(n)) {
      Integer orbit = nfact;
      Integer denom = 1;
      for (int i = 1; i <= n; ++i) {
        int const m = type.multiplicity(i);
        for (int k = 0; k < m; ++k) {
          orbit /= factorial(static_cast<unsigned long>(i));
        }
        denom *= factorial(static_cast<unsigned long>(m));
      }
      total += orbit * orbit / denom;
    }
    return total;
  }

  Integer count_ubp_recursive(int n) {
    if (n < 0) {
      throw ValidationError("n must be non-negative");
    }
    std::vector<Integer> u{1};
    for (int k = 0; k < n; ++k) {
      Integer next = 0;
      for (int j = 0; j <= k; ++j) {
        next += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j))
                * binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j))
                * u[static_cast<std::size_t>(j)];
      }
      u.push_back(next);
    }
    return u.back();
  }

  ////////////////////////////////////////////////////////////////////////
  // Breaking points
  ////////////////////////////////////////////////////////////////////////

  std::vector<int> breaking_points(Ubp const& f) {
    std::vector<int> result{0};
    auto const&      b     = f.codomain();
    int              reach = 0;
    for (int x = 1; x <= f.size(); ++x) {
      reach = std::max(reach, b.block(b.block_index_of(x)).back());
      if (reach == x) {
        result.push_back(x);
      }
    }
    return result;
  }

  BreakingSplit split_at_breaking_point(Ubp const& f, int i) {
    auto const bps = breaking_points(f);
    if (!std::binary_search(bps.begin(), bps.end(), i)) {
      throw ValidationError(std::to_string(i) + " is not a breaking point");
    }
    auto const& a = f.domain();
    auto const& b = f.codomain();

    // Codomain blocks inside {1..i} and their preimages, in canonical order.
    std::vector<std::size_t> preimage_of(b.block_count());
    for (std::size_t k = 0; k < a.block_count(); ++k) {
      preimage_of[f.block_map()[k]] = k;
    }
    std::vector<std::size_t> left_cod, right_cod, left_dom, right_dom;
    std::vector<bool>        in_left(a.block_count(), false);
    for (std::size_t k = 0; k < b.block_count(); ++k) {
      bool const left = b.block(k).back() <= i;
      (left ? left_cod : right_cod).push_back(k);
      in_left[preimage_of[k]] = left;
    }
    for (std::size_t k = 0; k < a.block_count(); ++k) {
      (in_left[k] ? left_dom : right_dom).push_back(k);
    }

    auto restricted = [&](std::vector<std::size_t> const& dom_idx,
                          std::vector<std::size_t> const& cod_idx) {
      auto                     dom = restrict_standardize(a, dom_idx);
      auto                     cod = restrict_standardize(b, cod_idx);
      std::vector<std::size_t> map(dom_idx.size());
      for (std::size_t t = 0; t < dom_idx.size(); ++t) {
        auto const target = f.block_map()[dom_idx[t]];
        map[t] = static_cast<std::size_t>(
            std::find(cod_idx.begin(), cod_idx.end(), target) - cod_idx.begin());
      }
      return make_ubp_unchecked(std::move(dom), std::move(cod), std::move(map));
    };

    // xi sends 1..i increasingly onto the left preimage and the rest
    // increasingly onto its complement.
    std::vector<int> low, high;
    for (int x = 1; x <= f.size(); ++x) {
      (in_left[a.block_index_of(x)] ? low : high).push_back(x);
    }
    low.insert(low.end(), high.begin(), high.end());

    return BreakingSplit{Permutation(std::move(low)),
                         restricted(left_dom, left_cod),
                         restricted(right_dom, right_cod)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization and weak order
  ////////////////////////////////////////////////////////////////////////

  UbpOrderCertificate shuffle_factorization(Ubp const& f) {
    std::vector<int> images(static_cast<std::size_t>(f.size()));
    for (std::size_t k = 0; k < f.domain().block_count(); ++k) {
      auto const& a = f.domain().block(k);
      auto const& b = f.image(k);
      for (std::size_t t = 0; t < a.size(); ++t) {
        images[static_cast<std::size_t>(a[t] - 1)] = b[t];
      }
    }
    return UbpOrderCertificate{Permutation(std::move(images)), f.domain()};
  }

  bool ubp_leq(Ubp const& f, Ubp const& g) {
    require_same_size(f, g, "ubp_leq");
    if (f.domain() != g.domain()) {
      return false;
    }
    return weak_leq(shuffle_factorization(f).xi, shuffle_factorization(g).xi);
  }

  HasseDiagram hasse_component(SetPartition const& a) {
    HasseDiagram diagram{a, {}, {}};
    auto const   id = id_of_partition(a);
    for (auto const& xi : enumerate_A_shuffles(a)) {
      diagram.nodes.push_back(left_multiply(xi, id));
    }
    std::sort(diagram.nodes.begin(), diagram.nodes.end());
    std::vector<Permutation> xis;
    std::vector<std::size_t> lengths;
    for (auto const& f : diagram.nodes) {
      xis.push_back(shuffle_factorization(f).xi);
      lengths.push_back(xis.back().length());
    }
    // The weak order is graded by length, so covers are the comparable
    // pairs whose lengths differ by one.
    for (std::size_t i = 0; i < xis.size(); ++i) {
      for (std::size_t j = 0; j < xis.size(); ++j) {
        if (lengths[j] == lengths[i] + 1 && weak_leq(xis[i], xis[j])) {
          diagram.edges.emplace_back(i, j);
        }
      }
    }
    return diagram;
  }

}  // namespace ubp
