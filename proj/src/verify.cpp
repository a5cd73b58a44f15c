#include "ubp/verify.hpp"

#include "ubp/bases.hpp"
#include "ubp/error.hpp"
#include "ubp/hopf.hpp"
#include "ubp/monoid.hpp"
#include "ubp/ncsym.hpp"
#include "ubp/schur_weyl.hpp"
#include "ubp/shuffles.hpp"
#include "ubp/text_format.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

namespace ubp::verify {

  namespace {

    using Triple        = std::tuple<Ubp, Ubp, Ubp>;
    using TripleElement = LinearCombination<Triple>;

    std::vector<std::vector<Ubp>> ubp_up_to(int degree) {
      std::vector<std::vector<Ubp>> all;
      for (int k = 0; k <= degree; ++k) {
        all.push_back(enumerate_ubp(k));
      }
      return all;
    }

    std::vector<Permutation> sorted_shuffles(SetPartition const& a) {
      auto sh = enumerate_A_shuffles(a);
      std::sort(sh.begin(), sh.end());
      return sh;
    }

    bool contains(std::vector<Permutation> const& sorted, Permutation const& s) {
      return std::binary_search(sorted.begin(), sorted.end(), s);
    }

    // weak_leq over all of S_n, indexed by position in enumerate_permutations.
    std::vector<std::vector<bool>> weak_order_table(std::vector<Permutation> const& perms) {
      std::vector<std::vector<bool>> leq(perms.size(), std::vector<bool>(perms.size()));
      for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
          leq[a][b] = weak_leq(perms[a], perms[b]);
        }
      }
      return leq;
    }

    std::string show(Ubp const& f) {
      return to_text(f);
    }

    std::string show(Permutation const& s) {
      return to_text(s);
    }

    std::string show(SetPartition const& a) {
      return to_text(a);
    }

    Element basis(Ubp const& f) {
      return Element::basis(f);
    }

    // (Delta (x) id) Delta and (id (x) Delta) Delta of a basis element.
    std::pair<TripleElement, TripleElement> iterated_coproducts(Ubp const& f) {
      TripleElement left, right;
      for (auto const& [pair, c] : coproduct(f)) {
        for (auto const& [inner, d] : coproduct(pair.first)) {
          left.add(Triple{inner.first, inner.second, pair.second}, c * d);
        }
        for (auto const& [inner, d] : coproduct(pair.second)) {
          right.add(Triple{pair.first, inner.first, inner.second}, c * d);
        }
      }
      return {left, right};
    }

    using Word_ = std::vector<int>;

    // One word of generators; the empty word stands for the identity.
    struct GeneratorWord {
      std::vector<Ubp> letters;
    };

    struct RelationInstance {
      GeneratorWord lhs;
      GeneratorWord rhs;
      std::string   label;
    };

    std::vector<RelationInstance> relation_instances(int relation, int n) {
      std::vector<RelationInstance> out;
      auto s = [n](int i) { return generator_s(n, i); };
      auto b = [n](int i) { return generator_b(n, i); };
      auto label = [](std::string text, int i, int j = 0) {
        return text + " at i=" + std::to_string(i) + (j ? ", j=" + std::to_string(j) : "");
      };
      switch (relation) {
        case 1:
          for (int i = 1; i < n; ++i) {
            out.push_back({{{s(i), s(i)}}, {{}}, label("s_i s_i = 1", i)});
            out.push_back({{{b(i), b(i)}}, {{b(i)}}, label("b_i b_i = b_i", i)});
          }
          break;
        case 2:
          for (int i = 1; i + 1 < n; ++i) {
            out.push_back({{{s(i), s(i + 1), s(i)}}, {{s(i + 1), s(i), s(i + 1)}},
                           label("s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", i)});
            out.push_back({{{s(i), b(i + 1), s(i)}}, {{s(i + 1), b(i), s(i + 1)}},
                           label("s_i b_{i+1} s_i = s_{i+1} b_i s_{i+1}", i)});
          }
          break;
        case 3:
          for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
              if (std::abs(i - j) > 1) {
                out.push_back({{{s(i), s(j)}}, {{s(j), s(i)}}, label("s_i s_j = s_j s_i", i, j)});
                out.push_back({{{b(i), s(j)}}, {{s(j), b(i)}}, label("b_i s_j = s_j b_i", i, j)});
              }
            }
          }
          break;
        case 4:
          for (int i = 1; i < n; ++i) {
            out.push_back({{{b(i), s(i)}}, {{b(i)}}, label("b_i s_i = b_i", i)});
            out.push_back({{{s(i), b(i)}}, {{b(i)}}, label("s_i b_i = b_i", i)});
          }
          break;
        case 5:
          for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
              out.push_back({{{b(i), b(j)}}, {{b(j), b(i)}}, label("b_i b_j = b_j b_i", i, j)});
            }
          }
          break;
        default:
          throw ValidationError("relation must be in 1..5");
      }
      return out;
    }

    Ubp evaluate(GeneratorWord const& w, int n) {
      Ubp result = identity(n);
      for (auto const& g : w.letters) {
        result = compose(result, g);
      }
      return result;
    }

    ActionMatrix evaluate_matrix(GeneratorWord const& w, int n, int m) {
      auto result = ActionMatrix::identity(checked_power(m, n, kDefaultActionCeiling), 1);
      for (auto const& g : w.letters) {
        result = result * ubp_action_matrix(g, m);
      }
      return result;
    }

    char const* relation_anchor(int relation) {
      switch (relation) {
        case 1: return "s_i^2 = 1, b_i^2 = b_i";
        case 2: return "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}, s_i b_{i+1} s_i = s_{i+1} b_i s_{i+1}";
        case 3: return "s_i s_j = s_j s_i, b_i s_j = s_j b_i for |i-j| > 1";
        case 4: return "b_i s_i = s_i b_i = b_i";
        default: return "b_i b_j = b_j b_i";
      }
    }

    char const* relation_name(int relation) {
      switch (relation) {
        case 1: return "involutions-idempotents";
        case 2: return "braid";
        case 3: return "far-commutation";
        case 4: return "absorption";
        default: return "merges-commute";
      }
    }

    // True iff g is u x v with u in P_i.
    bool splits_at(Ubp const& g, int i) {
      for (std::size_t k = 0; k < g.domain().block_count(); ++k) {
        auto const& blk   = g.domain().block(k);
        auto const& image = g.image(k);
        bool const  low   = blk.back() <= i;
        if ((blk.front() <= i) != low || (image.front() <= i) != low || (image.back() <= i) != low) {
          return false;
        }
      }
      return true;
    }

    Element from_word_shuffle(Permutation const& s, Permutation const& t) {
      int const p = s.size();
      int const q = t.size();
      Element   sum;
      for (unsigned mask = 0; mask < (1u << (p + q)); ++mask) {
        if (std::popcount(mask) != p) {
          continue;
        }
        std::vector<int> low, high;
        for (int v = 1; v <= p + q; ++v) {
          ((mask >> (v - 1)) & 1u ? low : high).push_back(v);
        }
        std::vector<int> word;
        for (int i = 1; i <= p; ++i) {
          word.push_back(low[static_cast<std::size_t>(s(i) - 1)]);
        }
        for (int i = 1; i <= q; ++i) {
          word.push_back(high[static_cast<std::size_t>(t(i) - 1)]);
        }
        sum.add(from_permutation(Permutation(std::move(word))), 1);
      }
      return sum;
    }

    // Coefficient of id_B (x) id_C read off as the coordinate of Z_B (x) Z_C.
    TensorElement z_tensor_candidate(TensorElement const& t) {
      TensorElement candidate;
      for (auto const& [pair, c] : t) {
        if (pair.first == id_of_partition(pair.first.domain()) &&
            pair.second == id_of_partition(pair.second.domain())) {
          candidate += c * tensor(Z_of_partition(pair.first.domain()),
                                  Z_of_partition(pair.second.domain()));
        }
      }
      return candidate;
    }

    std::vector<SetPartition> partitions_up_to(int n) {
      std::vector<SetPartition> all;
      for (int k = 0; k <= n; ++k) {
        auto part = enumerate_set_partitions(k);
        all.insert(all.end(), part.begin(), part.end());
      }
      return all;
    }

    std::map<Word_, Integer> word_multiset(std::vector<Word> const& words) {
      std::map<Word_, Integer> counts;
      for (auto const& w : words) {
        counts[w.letters] += 1;
      }
      return counts;
    }

  }  // namespace

  // ---------------------------------------------------------------------------
  // Set partitions, permutations, shuffles

  Outcome bell_numbers(int n) {
    Outcome out;
    // Bell triangle.
    std::vector<Integer> row{1};
    std::vector<Integer> bell{1};
    for (int k = 1; k <= n; ++k) {
      std::vector<Integer> next{row.back()};
      for (auto const& x : row) {
        next.push_back(next.back() + x);
      }
      bell.push_back(next.front());
      row = std::move(next);
    }
    for (int k = 0; k <= n; ++k) {
      ++out.cases;
      auto const count = enumerate_set_partitions(k).size();
      if (Integer(static_cast<unsigned long>(count)) != bell[static_cast<std::size_t>(k)]) {
        out.failure = "n=" + std::to_string(k) + ": " + std::to_string(count) + " partitions, Bell number " +
                      to_string(bell[static_cast<std::size_t>(k)]);
        return out;
      }
    }
    return out;
  }

  Outcome type_counts(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      std::map<PartitionType, Integer> seen;
      for (auto const& a : enumerate_set_partitions(k)) {
        seen[a.type()] += 1;
      }
      for (auto const& t : enumerate_partition_types(k)) {
        ++out.cases;
        if (count_partitions_of_type(t) != seen[t]) {
          out.failure = "n=" + std::to_string(k) + ": formula " + to_string(count_partitions_of_type(t)) +
                        " vs enumerated " + to_string(seen[t]);
          return out;
        }
      }
    }
    return out;
  }

  Outcome partition_action_laws(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const perms = enumerate_permutations(k);
      for (auto const& a : enumerate_set_partitions(k)) {
        for (auto const& s : perms) {
          auto const sa = partition_action(s, a);
          if (sa.type() != a.type()) {
            out.failure = "type changed: " + show(s) + " on " + show(a);
            return out;
          }
          for (auto const& t : perms) {
            ++out.cases;
            if (partition_action(s * t, a) != partition_action(s, partition_action(t, a))) {
              out.failure = "not an action: " + show(s) + ", " + show(t) + " on " + show(a);
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  Outcome meet_laws(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const parts = enumerate_set_partitions(k);
      for (auto const& a : parts) {
        if (coarsen_meet(a, a) != a) {
          out.failure = "not idempotent at " + show(a);
          return out;
        }
        for (auto const& b : parts) {
          auto const ab = coarsen_meet(a, b);
          if (ab != coarsen_meet(b, a)) {
            out.failure = "not commutative at " + show(a) + ", " + show(b);
            return out;
          }
          if (!refines_leq(ab, a) || !refines_leq(ab, b)) {
            out.failure = "meet not below " + show(a) + ", " + show(b);
            return out;
          }
          for (auto const& c : parts) {
            ++out.cases;
            if (coarsen_meet(ab, c) != coarsen_meet(a, coarsen_meet(b, c))) {
              out.failure = "not associative at " + show(a) + ", " + show(b) + ", " + show(c);
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  Outcome weak_order_is_partial_order(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const perms = enumerate_permutations(k);
      auto const leq   = weak_order_table(perms);
      auto const size  = perms.size();
      for (std::size_t a = 0; a < size; ++a) {
        if (!leq[a][a]) {
          out.failure = "not reflexive at " + show(perms[a]);
          return out;
        }
        for (std::size_t b = 0; b < size; ++b) {
          ++out.cases;
          if (a != b && leq[a][b] && leq[b][a]) {
            out.failure = "not antisymmetric at " + show(perms[a]) + ", " + show(perms[b]);
            return out;
          }
          if (!leq[a][b]) {
            continue;
          }
          for (std::size_t c = 0; c < size; ++c) {
            if (leq[b][c] && !leq[a][c]) {
              out.failure = "not transitive at " + show(perms[a]) + ", " + show(perms[b]) + ", " +
                            show(perms[c]);
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  Outcome shuffle_sets_are_lower_ideals(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const perms = enumerate_permutations(k);
      auto const leq   = weak_order_table(perms);
      auto check_ideal = [&](std::vector<Permutation> set, std::string const& what) {
        std::sort(set.begin(), set.end());
        for (std::size_t t = 0; t < perms.size(); ++t) {
          if (!contains(set, perms[t])) {
            continue;
          }
          for (std::size_t s = 0; s < perms.size(); ++s) {
            ++out.cases;
            if (leq[s][t] && !contains(set, perms[s])) {
              out.failure = what + " is not a lower ideal: " + show(perms[s]) + " <= " + show(perms[t]);
              return false;
            }
          }
        }
        return true;
      };
      for (int p = 0; p <= k; ++p) {
        if (!check_ideal(enumerate_shuffles(p, k - p),
                         "Sh(" + std::to_string(p) + "," + std::to_string(k - p) + ")")) {
          return out;
        }
      }
      for (auto const& a : enumerate_set_partitions(k)) {
        if (!check_ideal(enumerate_A_shuffles(a), "Sh(" + show(a) + ")")) {
          return out;
        }
      }
    }
    return out;
  }

  Outcome max_shuffle_is_maximum(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      for (int p = 0; p <= k; ++p) {
        auto const top = max_shuffle(p, k - p);
        auto const all = enumerate_shuffles(p, k - p);
        if (std::find(all.begin(), all.end(), top) == all.end()) {
          out.failure = "max_shuffle not a shuffle at p=" + std::to_string(p) + ", q=" + std::to_string(k - p);
          return out;
        }
        for (auto const& s : all) {
          ++out.cases;
          if (!weak_leq(s, top)) {
            out.failure = show(s) + " is not below " + show(top);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome unique_coset_factorization(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const factorial_k = enumerate_permutations(k).size();
      for (auto const& a : enumerate_set_partitions(k)) {
        ++out.cases;
        std::set<Permutation> hit;
        std::size_t           products = 0;
        for (auto const& xi : enumerate_A_shuffles(a)) {
          for (auto const& pi : parabolic_stabilizer(a)) {
            hit.insert(xi * pi);
            ++products;
          }
        }
        if (products != factorial_k || hit.size() != factorial_k) {
          out.failure = "Sh(A) S_A does not cover S_n exactly once for A = " + show(a);
          return out;
        }
      }
    }
    return out;
  }

  Outcome component_sizes_sum_to_count(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      ++out.cases;
      Integer total = 0;
      for (auto const& a : enumerate_set_partitions(k)) {
        total += static_cast<unsigned long>(enumerate_A_shuffles(a).size());
      }
      if (total != count_ubp(k)) {
        out.failure = "n=" + std::to_string(k) + ": sum of |Sh(A)| is " + to_string(total);
        return out;
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // The monoid

  Outcome counting_methods_agree(int max_enumerated, int max_formula) {
    Outcome out;
    for (int k = 0; k <= std::max(max_enumerated, max_formula); ++k) {
      ++out.cases;
      auto const formula = count_ubp(k);
      if (formula != count_ubp_recursive(k)) {
        out.failure = "n=" + std::to_string(k) + ": formula and recursion disagree";
        return out;
      }
      if (k > max_enumerated) {
        continue;
      }
      auto const listed  = enumerate_ubp(k, max_enumerated);
      auto const closure = closure_from_generators(k, max_enumerated);
      if (Integer(static_cast<unsigned long>(listed.size())) != formula || listed != closure) {
        out.failure = "n=" + std::to_string(k) + ": enumeration " + std::to_string(listed.size()) +
                      ", closure " + std::to_string(closure.size()) + ", formula " + to_string(formula);
        return out;
      }
    }
    return out;
  }

  Outcome presentation_relation(int relation, int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      for (auto const& inst : relation_instances(relation, k)) {
        ++out.cases;
        if (evaluate(inst.lhs, k) != evaluate(inst.rhs, k)) {
          out.failure = inst.label + " fails in P_" + std::to_string(k);
          return out;
        }
      }
    }
    return out;
  }

  Outcome inverse_monoid_identities(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const all = enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling));
      std::vector<Ubp> tildes;
      for (auto const& f : all) {
        auto const ft = tilde(f);
        if (compose(f, compose(ft, f)) != f || compose(ft, compose(f, ft)) != ft) {
          out.failure = "f f~ f = f or f~ f f~ = f~ fails at " + show(f);
          return out;
        }
        tildes.push_back(ft);
      }
      for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = 0; b < all.size(); ++b) {
          ++out.cases;
          if (tilde(compose(all[a], all[b])) != compose(tildes[b], tildes[a])) {
            out.failure = "(fg)~ = g~ f~ fails at f = " + show(all[a]) + ", g = " + show(all[b]);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome idempotents_are_partition_identities(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      std::set<Ubp> idempotents, expected;
      for (auto const& f : enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling))) {
        ++out.cases;
        if (compose(f, f) == f) {
          idempotents.insert(f);
        }
      }
      for (auto const& a : enumerate_set_partitions(k)) {
        expected.insert(id_of_partition(a));
      }
      if (idempotents != expected) {
        out.failure = "P_" + std::to_string(k) + " has " + std::to_string(idempotents.size()) +
                      " idempotents, expected " + std::to_string(expected.size());
        return out;
      }
    }
    return out;
  }

  Outcome factorizable(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      std::map<SetPartition, std::vector<Permutation>> shuffles;
      for (auto const& f : enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling))) {
        ++out.cases;
        auto const cert = shuffle_factorization(f);
        auto [it, fresh] = shuffles.try_emplace(cert.dom);
        if (fresh) {
          it->second = sorted_shuffles(cert.dom);
        }
        if (cert.dom != f.domain() || !contains(it->second, cert.xi) ||
            compose(from_permutation(cert.xi), id_of_partition(cert.dom)) != f) {
          out.failure = "no factorization xi . id_A for " + show(f);
          return out;
        }
      }
    }
    return out;
  }

  Outcome composition_associative(int exhaustive_n, int sampled_n) {
    Outcome out;
    for (int k = 0; k <= exhaustive_n; ++k) {
      auto const all = enumerate_ubp(k);
      for (auto const& f : all) {
        for (auto const& g : all) {
          auto const fg = compose(f, g);
          for (auto const& h : all) {
            ++out.cases;
            if (compose(fg, h) != compose(f, compose(g, h))) {
              out.failure = "not associative at " + show(f) + ", " + show(g) + ", " + show(h);
              return out;
            }
          }
        }
      }
    }
    std::mt19937 rng(20240611);
    for (int k = exhaustive_n + 1; k <= sampled_n; ++k) {
      auto const                                 all = enumerate_ubp(k, std::max(sampled_n, kDefaultEnumerationCeiling));
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int trial = 0; trial < 2000; ++trial) {
        ++out.cases;
        auto const& f = all[pick(rng)];
        auto const& g = all[pick(rng)];
        auto const& h = all[pick(rng)];
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) {
          out.failure = "not associative at " + show(f) + ", " + show(g) + ", " + show(h);
          return out;
        }
      }
    }
    return out;
  }

  Outcome relabeling_laws(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const perms = enumerate_permutations(k);
      for (auto const& f : enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling))) {
        for (auto const& s : perms) {
          ++out.cases;
          auto const sigma = from_permutation(s);
          auto const left  = compose(sigma, f);
          auto const right = compose(f, sigma);
          if (left != left_multiply(s, f) || left.domain() != f.domain()) {
            out.failure = "left composition by " + show(s) + " changes the domain of " + show(f);
            return out;
          }
          if (right != right_multiply(f, s) || right.codomain() != f.codomain() ||
              right.domain() != partition_action(s.inverse(), f.domain())) {
            out.failure = "right composition by " + show(s) + " is not a relabelling of " + show(f);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome partition_identities_meet(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const parts = enumerate_set_partitions(k);
      for (auto const& a : parts) {
        for (auto const& b : parts) {
          ++out.cases;
          if (compose(id_of_partition(a), id_of_partition(b)) != id_of_partition(coarsen_meet(a, b))) {
            out.failure = "id_A id_B != id_(A meet B) for " + show(a) + ", " + show(b);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome breaking_point_splits(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      for (auto const& f : enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling))) {
        auto const bps = breaking_points(f);
        for (int i = 0; i <= k; ++i) {
          ++out.cases;
          // Independent scan: {1..i} is a union of codomain blocks.
          bool union_of_blocks = true;
          for (auto const& blk : f.codomain().blocks()) {
            if ((blk.front() <= i) != (blk.back() <= i)) {
              union_of_blocks = false;
            }
          }
          bool const listed = std::binary_search(bps.begin(), bps.end(), i);
          if (listed != union_of_blocks) {
            out.failure = "breaking point " + std::to_string(i) + " misreported for " + show(f);
            return out;
          }
          if (!listed) {
            continue;
          }
          auto const split = split_at_breaking_point(f, i);
          if (right_multiply(concat(split.left, split.right), split.xi.inverse()) != f) {
            out.failure = "reassembly fails at i=" + std::to_string(i) + " for " + show(f);
            return out;
          }
          int matches = 0;
          for (auto const& xi : enumerate_shuffles(i, k - i)) {
            matches += splits_at(right_multiply(f, xi), i) ? 1 : 0;
          }
          if (matches != 1 || !splits_at(right_multiply(f, split.xi), i)) {
            out.failure = std::to_string(matches) + " shuffles split " + show(f) + " at " + std::to_string(i);
            return out;
          }
        }
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // The Hopf algebra

  Outcome product_associative(int degree) {
    Outcome out;
    auto const all = ubp_up_to(degree);
    for (int p = 0; p <= degree; ++p) {
      for (int q = 0; p + q <= degree; ++q) {
        for (int r = 0; p + q + r <= degree; ++r) {
          for (auto const& f : all[p]) {
            for (auto const& g : all[q]) {
              auto const fg = product(f, g);
              for (auto const& h : all[r]) {
                ++out.cases;
                if (product(fg, basis(h)) != product(basis(f), product(g, h))) {
                  out.failure = "(f*g)*h != f*(g*h) at " + show(f) + ", " + show(g) + ", " + show(h);
                  return out;
                }
              }
            }
          }
        }
      }
    }
    return out;
  }

  Outcome coproduct_coassociative(int degree) {
    Outcome out;
    for (auto const& level : ubp_up_to(degree)) {
      for (auto const& f : level) {
        ++out.cases;
        auto const [left, right] = iterated_coproducts(f);
        if (left != right) {
          out.failure = "coassociativity fails at " + show(f);
          return out;
        }
      }
    }
    return out;
  }

  Outcome counit_axioms(int degree) {
    Outcome out;
    for (auto const& level : ubp_up_to(degree)) {
      for (auto const& f : level) {
        ++out.cases;
        Element left, right;
        for (auto const& [pair, c] : coproduct(f)) {
          left += counit(basis(pair.first)) * c * basis(pair.second);
          right += counit(basis(pair.second)) * c * basis(pair.first);
        }
        if (left != basis(f) || right != basis(f)) {
          out.failure = "counit axiom fails at " + show(f);
          return out;
        }
      }
    }
    return out;
  }

  Outcome bialgebra_compatibility(int degree) {
    Outcome out;
    auto const all = ubp_up_to(degree);
    for (int p = 0; p <= degree; ++p) {
      for (int q = 0; p + q <= degree; ++q) {
        for (auto const& f : all[p]) {
          auto const df = coproduct(f);
          for (auto const& g : all[q]) {
            ++out.cases;
            if (coproduct(product(f, g)) != product(df, coproduct(g))) {
              out.failure = "Delta(f*g) != Delta(f)*Delta(g) at " + show(f) + ", " + show(g);
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  namespace {

    Outcome antipode_side(int degree, bool left_side) {
      Outcome                 out;
      std::map<Ubp, Element> cache;
      auto s = [&](Element const& x) {
        auto const& f = x.begin()->first;
        auto [it, fresh] = cache.try_emplace(f);
        if (fresh) {
          it->second = antipode(basis(f));
        }
        return x.begin()->second * it->second;
      };
      auto id = [](Element const& x) { return x; };
      for (auto const& level : ubp_up_to(degree)) {
        for (auto const& f : level) {
          ++out.cases;
          auto const delta  = coproduct(f);
          auto const folded = left_side ? multiply(apply_factorwise(delta, s, id))
                                        : multiply(apply_factorwise(delta, id, s));
          if (folded != counit(basis(f)) * unit_element()) {
            out.failure = std::string(left_side ? "m(S (x) id)" : "m(id (x) S)") + " Delta != u e at " + show(f);
            return out;
          }
        }
      }
      return out;
    }

  }  // namespace

  Outcome antipode_left(int degree) {
    return antipode_side(degree, true);
  }

  Outcome antipode_right(int degree) {
    return antipode_side(degree, false);
  }

  Outcome permutation_closure(int degree) {
    Outcome out;
    for (int p = 0; p <= degree; ++p) {
      for (auto const& s : enumerate_permutations(p)) {
        for (auto const& [pair, c] : coproduct(from_permutation(s))) {
          if (!pair.first.is_permutation() || !pair.second.is_permutation()) {
            out.failure = "coproduct of " + show(s) + " leaves the permutations";
            return out;
          }
        }
        for (int q = 0; p + q <= degree; ++q) {
          for (auto const& t : enumerate_permutations(q)) {
            ++out.cases;
            for (auto const& [f, c] : product(from_permutation(s), from_permutation(t))) {
              if (!f.is_permutation()) {
                out.failure = "product of " + show(s) + " and " + show(t) + " leaves the permutations";
                return out;
              }
            }
          }
        }
      }
    }
    return out;
  }

  Outcome permutation_product_matches_word_shuffle(int degree) {
    Outcome out;
    for (int p = 0; p <= degree; ++p) {
      for (int q = 0; p + q <= degree; ++q) {
        for (auto const& s : enumerate_permutations(p)) {
          for (auto const& t : enumerate_permutations(q)) {
            ++out.cases;
            if (product(from_permutation(s), from_permutation(t)) != from_word_shuffle(s, t)) {
              out.failure = "shuffle product of " + show(s) + " and " + show(t) + " differs";
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  Outcome z_partition_lemma(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const perms = enumerate_permutations(k);
      for (auto const& a : enumerate_set_partitions(k)) {
        auto const z = Z_of_partition(a);
        for (auto const& s : perms) {
          ++out.cases;
          auto const sigma = from_permutation(s);
          if (left_action(sigma, z) != z) {
            out.failure = "sigma Z_A != Z_A for sigma = " + show(s) + ", A = " + show(a);
            return out;
          }
          if (right_action(z, sigma) != Z_of_partition(partition_action(s.inverse(), a))) {
            out.failure = "Z_A sigma != Z_(sigma^-1 A) for sigma = " + show(s) + ", A = " + show(a);
            return out;
          }
        }
        for (int i = 1; i < k; ++i) {
          ++out.cases;
          auto const bi = a.block_index_of(i);
          auto const bj = a.block_index_of(i + 1);
          Element    expected;
          if (bi == bj) {
            expected = z;
          } else {
            std::vector<Block> blocks;
            Block              merged;
            for (std::size_t t = 0; t < a.block_count(); ++t) {
              if (t == bi || t == bj) {
                merged.insert(merged.end(), a.block(t).begin(), a.block(t).end());
              } else {
                blocks.push_back(a.block(t));
              }
            }
            blocks.push_back(merged);
            auto const coeff = binomial(a.block(bi).size() + a.block(bj).size(), a.block(bi).size());
            expected = coeff * Z_of_partition(make_set_partition(k, blocks));
          }
          if (right_action(z, generator_b(k, i)) != expected) {
            out.failure = "Z_A b_i rule fails for A = " + show(a) + ", i = " + std::to_string(i);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome z_span_right_ideal(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const all = enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling));
      for (auto const& a : enumerate_set_partitions(k)) {
        auto const z = Z_of_partition(a);
        for (auto const& h : all) {
          ++out.cases;
          try {
            auto const moved = right_action(z, h);
            if (to_Z_element(from_Z_element(moved)) != moved) {
              out.failure = "Z_A h not re-expressed for A = " + show(a) + ", h = " + show(h);
              return out;
            }
          } catch (NotInZSpanError const&) {
            out.failure = "Z_A h leaves the Z-span for A = " + show(a) + ", h = " + show(h);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome primitive_examples() {
    Outcome    out;
    auto const f1 = parse_ubp("{1,3}->{1,2};{2}->{3}");
    auto const f2 = parse_ubp("{1}->{3};{2,3}->{1,2}");
    struct Case {
      Element     x;
      bool        primitive;
      std::string label;
    };
    std::vector<Case> cases{{basis(f1) - basis(f2), true, "f1 - f2"},
                            {basis(generator_b(2, 1)), true, "b_1"},
                            {basis(identity(2)), false, "id_2"},
                            {basis(identity(1)), true, "id_1"}};
    for (int k = 1; k <= 3; ++k) {
      for (auto const& f : enumerate_ubp(k)) {
        if (breaking_points(f).size() == 2) {
          cases.push_back({basis(f), true, show(f)});
        }
      }
    }
    for (auto const& c : cases) {
      ++out.cases;
      if (is_primitive(c.x) != c.primitive) {
        out.failure = c.label + (c.primitive ? " should be primitive" : " should not be primitive");
        return out;
      }
    }
    return out;
  }

  Outcome primitive_dimensions(int terms) {
    Outcome                    out;
    std::vector<Integer> const expected{0, 1, 2, 11, 98, 1202, 19052};
    auto const                 v = primitive_series(terms);
    for (std::size_t k = 0; k < expected.size() && k < v.size(); ++k) {
      ++out.cases;
      if (v[k] != expected[k]) {
        out.failure = "v_" + std::to_string(k) + " = " + to_string(v[k]) + ", expected " + to_string(expected[k]);
        return out;
      }
    }
    auto const u = series_from_primitives(v);
    for (int k = 0; k <= terms; ++k) {
      ++out.cases;
      if (u[static_cast<std::size_t>(k)] != count_ubp(k)) {
        out.failure = "1/(1 - V) does not return u_" + std::to_string(k);
        return out;
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // Duality

  Outcome self_duality(int degree) {
    Outcome    out;
    auto const all = ubp_up_to(degree);
    std::map<std::pair<Ubp, Ubp>, Element> products;
    for (int p = 0; p <= degree; ++p) {
      for (int q = 0; p + q <= degree; ++q) {
        for (auto const& x : all[p]) {
          for (auto const& y : all[q]) {
            products.emplace(std::pair{x, y}, product(x, y));
          }
        }
      }
    }
    for (int n = 0; n <= degree; ++n) {
      for (auto const& z : all[n]) {
        auto const dz = coproduct(z);
        for (int p = 0; p <= n; ++p) {
          for (auto const& x : all[p]) {
            for (auto const& y : all[n - p]) {
              ++out.cases;
              auto const lhs = pairing(products.at({x, y}), basis(z));
              auto const rhs = pairing(tensor(basis(x), basis(y)), dz);
              if (lhs != rhs) {
                out.failure = "<x*y, z> != <x (x) y, Delta z> at x = " + show(x) + ", y = " + show(y) +
                              ", z = " + show(z);
                return out;
              }
            }
          }
        }
      }
    }
    return out;
  }

  Outcome tilde_pairing_symmetric(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const all = enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling));
      for (auto const& f : all) {
        if (tilde(tilde(f)) != f) {
          out.failure = "tilde is not an involution at " + show(f);
          return out;
        }
        for (auto const& g : all) {
          ++out.cases;
          auto const fg = pairing(basis(f), basis(g));
          if (fg != pairing(basis(g), basis(f)) || fg != (g == tilde(f) ? 1 : 0)) {
            out.failure = "pairing asymmetric at " + show(f) + ", " + show(g);
            return out;
          }
        }
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // X and Z bases

  namespace {

    Outcome round_trip(int n, bool use_x) {
      Outcome out;
      for (int k = 0; k <= n; ++k) {
        auto const all = enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling));
        for (auto const& g : all) {
          ++out.cases;
          Element direct;
          for (auto const& f : all) {
            if (use_x ? ubp_leq(f, g) : ubp_leq(g, f)) {
              direct.add(f, 1);
            }
          }
          auto const expanded = use_x ? X_element(g) : Z_element(g);
          auto const coords   = use_x ? to_X_basis(basis(g)) : to_Z_basis(basis(g));
          auto const back     = use_x ? from_X_basis(coords) : from_Z_basis(coords);
          auto const again    = use_x ? to_X_basis(expanded) : to_Z_basis(expanded);
          if (expanded != direct || back != basis(g) || again != basis(g)) {
            out.failure = std::string(use_x ? "X" : "Z") + " basis round trip fails at " + show(g);
            return out;
          }
        }
      }
      return out;
    }

    Outcome basis_product(int degree, bool use_x) {
      Outcome    out;
      auto const all = ubp_up_to(degree);
      for (int p = 0; p <= degree; ++p) {
        for (int q = 0; p + q <= degree; ++q) {
          for (auto const& g1 : all[p]) {
            for (auto const& g2 : all[q]) {
              ++out.cases;
              if (use_x) {
                auto const target = left_multiply(max_shuffle(p, q), concat(g1, g2));
                if (product(X_element(g1), X_element(g2)) != X_element(target)) {
                  out.failure = "X_g1 * X_g2 != X_(xi (g1 x g2)) at " + show(g1) + ", " + show(g2);
                  return out;
                }
              } else if (product(Z_element(g1), Z_element(g2)) != Z_element(concat(g1, g2))) {
                out.failure = "Z_g1 * Z_g2 != Z_(g1 x g2) at " + show(g1) + ", " + show(g2);
                return out;
              }
            }
          }
        }
      }
      return out;
    }

  }  // namespace

  Outcome x_round_trip(int n) {
    return round_trip(n, true);
  }

  Outcome z_round_trip(int n) {
    return round_trip(n, false);
  }

  Outcome x_product(int degree) {
    return basis_product(degree, true);
  }

  Outcome z_product(int degree) {
    return basis_product(degree, false);
  }

  Outcome z_of_partition_matches(int n) {
    Outcome out;
    for (auto const& a : partitions_up_to(n)) {
      ++out.cases;
      if (Z_element(id_of_partition(a)) != Z_of_partition(a)) {
        out.failure = "Z_(id_A) != Z_A for A = " + show(a);
        return out;
      }
    }
    return out;
  }

  Outcome hasse_components(int n) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      auto const all   = enumerate_ubp(k, std::max(n, kDefaultEnumerationCeiling));
      std::size_t total = 0;
      for (auto const& a : enumerate_set_partitions(k)) {
        ++out.cases;
        auto const diagram = hasse_component(a);
        std::vector<Ubp> expected;
        for (auto const& f : all) {
          if (f.domain() == a) {
            expected.push_back(f);
          }
        }
        if (diagram.nodes != expected || diagram.nodes.size() != enumerate_A_shuffles(a).size()) {
          out.failure = "wrong node set for A = " + show(a);
          return out;
        }
        total += diagram.nodes.size();
        std::set<std::pair<std::size_t, std::size_t>> covers;
        auto const&                                    nodes = diagram.nodes;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (i == j || !ubp_leq(nodes[i], nodes[j])) {
              continue;
            }
            bool between = false;
            for (std::size_t h = 0; h < nodes.size() && !between; ++h) {
              between = h != i && h != j && ubp_leq(nodes[i], nodes[h]) && ubp_leq(nodes[h], nodes[j]);
            }
            if (!between) {
              covers.emplace(i, j);
            }
          }
        }
        if (std::set(diagram.edges.begin(), diagram.edges.end()) != covers) {
          out.failure = "cover relations differ for A = " + show(a);
          return out;
        }
      }
      if (Integer(static_cast<unsigned long>(total)) != count_ubp(k)) {
        out.failure = "component sizes do not sum to u_" + std::to_string(k);
        return out;
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // NCSym

  Outcome z_span_closed(int degree) {
    Outcome    out;
    auto const parts = partitions_up_to(degree);
    for (auto const& a : parts) {
      ++out.cases;
      auto const za = Z_of_partition(a);
      auto const dz = coproduct(za);
      if (z_tensor_candidate(dz) != dz) {
        out.failure = "Delta(Z_A) leaves Z (x) Z for A = " + show(a);
        return out;
      }
      for (auto const& b : parts) {
        if (a.size() + b.size() > degree) {
          continue;
        }
        ++out.cases;
        try {
          auto const zz = product(za, Z_of_partition(b));
          if (to_Z_element(from_Z_element(zz)) != zz) {
            out.failure = "Z_A * Z_B not re-expressed for " + show(a) + ", " + show(b);
            return out;
          }
        } catch (NotInZSpanError const&) {
          out.failure = "Z_A * Z_B leaves the Z-span for " + show(a) + ", " + show(b);
          return out;
        }
      }
    }
    return out;
  }

  Outcome p_algebra_axioms(int degree) {
    Outcome    out;
    auto const parts = partitions_up_to(degree);
    auto       p     = [](SetPartition const& a) { return NCSymElement::basis(a); };
    using Triple3    = std::tuple<SetPartition, SetPartition, SetPartition>;
    for (auto const& a : parts) {
      ++out.cases;
      LinearCombination<Triple3> left, right;
      for (auto const& [pair, c] : p_coproduct(p(a))) {
        for (auto const& [inner, d] : p_coproduct(p(pair.first))) {
          left.add(Triple3{inner.first, inner.second, pair.second}, c * d);
        }
        for (auto const& [inner, d] : p_coproduct(p(pair.second))) {
          right.add(Triple3{pair.first, inner.first, inner.second}, c * d);
        }
      }
      if (left != right) {
        out.failure = "p-coproduct not coassociative at " + show(a);
        return out;
      }
      for (auto const& b : parts) {
        if (a.size() + b.size() > degree) {
          continue;
        }
        ++out.cases;
        auto const ab = p_product(p(a), p(b));
        // Compatibility, with the componentwise product on tensors.
        NCSymTensor rhs;
        for (auto const& [x, c] : p_coproduct(p(a))) {
          for (auto const& [y, d] : p_coproduct(p(b))) {
            for (auto const& [l, e] : p_product(p(x.first), p(y.first))) {
              for (auto const& [r, g] : p_product(p(x.second), p(y.second))) {
                rhs.add({l, r}, c * d * e * g);
              }
            }
          }
        }
        if (p_coproduct(ab) != rhs) {
          out.failure = "p-compatibility fails at " + show(a) + ", " + show(b);
          return out;
        }
        for (auto const& c : parts) {
          if (a.size() + b.size() + c.size() > degree) {
            continue;
          }
          ++out.cases;
          if (p_product(ab, p(c)) != p_product(p(a), p_product(p(b), p(c)))) {
            out.failure = "p-product not associative at " + show(a) + ", " + show(b) + ", " + show(c);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome expand_p_counts(int n, int alphabet) {
    Outcome out;
    for (auto const& a : partitions_up_to(n)) {
      for (int k = 1; k <= alphabet; ++k) {
        ++out.cases;
        auto const words    = expand_p(a, k);
        Integer    expected = 1;
        for (std::size_t b = 0; b < a.block_count(); ++b) {
          expected *= k;
        }
        std::set<Word> distinct(words.begin(), words.end());
        if (Integer(static_cast<unsigned long>(words.size())) != expected || distinct.size() != words.size()) {
          out.failure = "|expand_p(" + show(a) + ", " + std::to_string(k) + ")| = " + std::to_string(words.size());
          return out;
        }
        for (auto const& w : words) {
          if (!refines_leq(kernel(w), a)) {
            out.failure = "a word of p_" + show(a) + " is not constant on its blocks";
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome expand_p_letter_invariance(int n, int alphabet) {
    Outcome    out;
    auto const letter_perms = enumerate_permutations(alphabet);
    for (auto const& a : partitions_up_to(n)) {
      auto const base = word_multiset(expand_p(a, alphabet));
      for (auto const& pi : letter_perms) {
        ++out.cases;
        std::map<Word_, Integer> moved;
        for (auto const& [letters, c] : base) {
          Word_ w;
          for (int x : letters) {
            w.push_back(pi(x));
          }
          moved[w] += c;
        }
        if (moved != base) {
          out.failure = "p_" + show(a) + " not invariant under " + show(pi);
          return out;
        }
      }
    }
    return out;
  }

  Outcome p_product_concatenation(int degree, int alphabet) {
    Outcome    out;
    auto const parts = partitions_up_to(degree);
    for (auto const& a : parts) {
      for (auto const& b : parts) {
        if (a.size() + b.size() > degree) {
          continue;
        }
        for (int k = 1; k <= alphabet; ++k) {
          ++out.cases;
          std::map<Word_, Integer> concatenated;
          for (auto const& u : expand_p(a, k)) {
            for (auto const& v : expand_p(b, k)) {
              Word_ w = u.letters;
              w.insert(w.end(), v.letters.begin(), v.letters.end());
              concatenated[w] += 1;
            }
          }
          std::map<Word_, Integer> expanded;
          for (auto const& [c, coeff] : p_product(NCSymElement::basis(a), NCSymElement::basis(b))) {
            for (auto const& w : expand_p(c, k)) {
              expanded[w.letters] += coeff;
            }
          }
          std::erase_if(expanded, [](auto const& kv) { return kv.second == 0; });
          if (expanded != concatenated) {
            out.failure = "p_A p_B differs from word concatenation at " + show(a) + ", " + show(b) +
                          ", k = " + std::to_string(k);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome p_coproduct_bicolored_words(int n) {
    Outcome out;
    using Pair = std::pair<Word_, Word_>;
    for (auto const& a : partitions_up_to(n)) {
      ++out.cases;
      int const k = std::max(1, a.size());
      // Letters 1..k form the first alphabet and k+1..2k the second. A word
      // splits into its subwords over each alphabet.
      std::map<Pair, Integer> split;
      for (auto const& w : expand_p(a, 2 * k)) {
        Pair parts;
        for (int x : w.letters) {
          if (x <= k) {
            parts.first.push_back(x);
          } else {
            parts.second.push_back(x - k);
          }
        }
        split[parts] += 1;
      }
      std::map<Pair, Integer> expanded;
      for (auto const& [pair, c] : p_coproduct(NCSymElement::basis(a))) {
        for (auto const& u : expand_p(pair.first, k)) {
          for (auto const& v : expand_p(pair.second, k)) {
            expanded[{u.letters, v.letters}] += c;
          }
        }
      }
      std::erase_if(expanded, [](auto const& kv) { return kv.second == 0; });
      if (expanded != split) {
        out.failure = "Delta(p_A) differs from the two-alphabet expansion at " + show(a);
        return out;
      }
    }
    return out;
  }

  Outcome p_coproduct_displayed_example() {
    Outcome     out;
    auto const  a     = parse_set_partition("{1,2,6}{3,5}{4}");
    auto const  delta = p_coproduct(NCSymElement::basis(a));
    NCSymTensor expected;
    std::vector<std::pair<std::string, std::string>> const terms{
        {"{1,2,6}{3,5}{4}", "{}"},     {"{1,2,5}{3,4}", "{1}"},   {"{1,2,4}{3}", "{1,2}"},
        {"{1,3}{2}", "{1,2,3}"},       {"{1,2,3}", "{1,3}{2}"},   {"{1,2}", "{1,2,4}{3}"},
        {"{1}", "{1,2,5}{3,4}"},       {"{}", "{1,2,6}{3,5}{4}"}};
    for (auto const& [l, r] : terms) {
      expected.add({parse_set_partition(l), parse_set_partition(r)}, 1);
    }
    out.cases = 1;
    if (delta != expected) {
      out.failure = "Delta(p_{1,2,6}{3,5}{4}) = " + to_text(delta);
    }
    return out;
  }

  Outcome z_transport(int degree) {
    Outcome    out;
    auto const parts = partitions_up_to(degree);
    for (auto const& a : parts) {
      ++out.cases;
      auto const pa = NCSymElement::basis(a);
      if (coproduct(to_Z_element(pa)) != to_Z_tensor(p_coproduct(pa)) ||
          from_Z_element(to_Z_element(pa)) != pa) {
        out.failure = "coproduct transport fails at " + show(a);
        return out;
      }
      for (auto const& b : parts) {
        if (a.size() + b.size() > degree) {
          continue;
        }
        ++out.cases;
        auto const pb = NCSymElement::basis(b);
        if (product(to_Z_element(pa), to_Z_element(pb)) != to_Z_element(p_product(pa, pb))) {
          out.failure = "product transport fails at " + show(a) + ", " + show(b);
          return out;
        }
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // Schur-Weyl

  Outcome action_orientation(int n, int m) {
    Outcome     out;
    std::size_t reverse_holds = 0;
    for (int k = 0; k <= n; ++k) {
      auto const all = enumerate_ubp(k);
      for (int mm = 1; mm <= m; ++mm) {
        std::vector<ActionMatrix> mats;
        for (auto const& f : all) {
          mats.push_back(ubp_action_matrix(f, mm));
        }
        for (std::size_t g = 0; g < all.size(); ++g) {
          for (std::size_t f = 0; f < all.size(); ++f) {
            ++out.cases;
            auto const composed = ubp_action_matrix(compose(all[g], all[f]), mm);
            if (composed != mats[g] * mats[f]) {
              out.failure = "M(g.f) != M(g) M(f) at g = " + show(all[g]) + ", f = " + show(all[f]) +
                            ", m = " + std::to_string(mm);
              return out;
            }
            reverse_holds += composed == mats[f] * mats[g] ? 1 : 0;
          }
        }
      }
    }
    out.note = "M(g.f) = M(g) M(f) for all " + std::to_string(out.cases) + " pairs; the reverse order holds for " +
               std::to_string(reverse_holds);
    return out;
  }

  Outcome action_relations(int n, int m) {
    Outcome out;
    for (int relation = 1; relation <= 5; ++relation) {
      for (int k = 0; k <= n; ++k) {
        for (int mm = 1; mm <= m; ++mm) {
          for (auto const& inst : relation_instances(relation, k)) {
            ++out.cases;
            if (evaluate_matrix(inst.lhs, k, mm) != evaluate_matrix(inst.rhs, k, mm)) {
              out.failure = inst.label + " fails as matrices at n = " + std::to_string(k) + ", m = " +
                            std::to_string(mm);
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  Outcome action_direct_matches_generators(int n, int m) {
    Outcome out;
    for (int k = 0; k <= n; ++k) {
      for (int mm = 1; mm <= m; ++mm) {
        for (auto const& f : enumerate_ubp(k)) {
          ++out.cases;
          if (ubp_action_matrix(f, mm) != ubp_action_matrix_via_generators(f, mm)) {
            out.failure = "direct and generator matrices differ at " + show(f) + ", m = " + std::to_string(mm);
            return out;
          }
        }
      }
    }
    return out;
  }

  Outcome commutation_all(int max_n, std::size_t max_dim, int max_r) {
    Outcome out;
    for (int n = 1; n <= max_n; ++n) {
      for (int m = 1;; ++m) {
        std::size_t dim = 1;
        for (int i = 0; i < n && dim <= max_dim; ++i) {
          dim *= static_cast<std::size_t>(m);
        }
        if (dim > max_dim) {
          break;
        }
        for (int r = 1; r <= max_r; ++r) {
          for (auto const& res : commutation_report(n, m, r, max_dim)) {
            ++out.cases;
            if (!res.commutes) {
              out.failure = res.monoid_generator + " and " + res.group_generator + " do not commute at (n,m,r) = (" +
                            std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")";
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  Outcome span_rank_matches_count(int max_n, std::size_t max_dim) {
    Outcome out;
    for (int n = 0; n <= max_n; ++n) {
      std::size_t dim = 1;
      for (int i = 0; i < n; ++i) {
        dim *= static_cast<std::size_t>(2 * n);
      }
      if (dim > max_dim) {
        break;
      }
      ++out.cases;
      auto const rank = action_span_rank(n, 2 * n == 0 ? 1 : 2 * n, max_dim);
      if (Integer(static_cast<unsigned long>(rank)) != count_ubp(n)) {
        out.failure = "rank at (n,m) = (" + std::to_string(n) + "," + std::to_string(2 * n) + ") is " +
                      std::to_string(rank) + ", u_n = " + to_string(count_ubp(n));
        return out;
      }
      if (!out.note.empty()) {
        out.note += "; ";
      }
      out.note += "rank(" + std::to_string(n) + "," + std::to_string(2 * n) + ") = " + std::to_string(rank);
    }
    return out;
  }

  Outcome convolution_matches_product(int degree, int m) {
    Outcome    out;
    auto const all = ubp_up_to(degree);
    for (int p = 0; p <= degree; ++p) {
      for (int q = 0; p + q <= degree; ++q) {
        for (auto const& f : all[p]) {
          for (auto const& g : all[q]) {
            ++out.cases;
            if (convolution_action(f, g, m) != element_action_matrix(product(f, g), m, p + q)) {
              out.failure = "convolution differs from the product at " + show(f) + ", " + show(g);
              return out;
            }
          }
        }
      }
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // Suites

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"monoid", "hopf", "duality", "bases", "ncsym", "schurweyl", "all"};
    return names;
  }

  std::vector<Check> suite_checks(std::string_view suite, int max_n) {
    if (max_n < 0) {
      throw ValidationError("--max-n must be non-negative");
    }
    int const n         = max_n;
    int const small     = std::min(n, 3);
    int const enumerate = std::min(n, kDefaultEnumerationCeiling);
    std::vector<Check> checks;
    auto add = [&](std::string name, std::string anchor, std::function<Outcome()> run) {
      checks.push_back({std::move(name), std::move(anchor), std::move(run)});
    };
    bool const all = suite == "all";
    bool known     = all;

    if (all || suite == "monoid") {
      known = true;
      add("partitions.bell", "number of set partitions of [n] is the Bell number", [=] { return bell_numbers(n); });
      add("partitions.types", "partitions of a given type counted by the closed formula", [=] { return type_counts(n); });
      add("partitions.action", "S_n acts on set partitions preserving type", [=] { return partition_action_laws(std::min(n, 5)); });
      add("partitions.meet", "coarsening meet is associative, commutative, idempotent", [=] { return meet_laws(n); });
      add("weak-order.partial-order", "inversion containment is a partial order", [=] { return weak_order_is_partial_order(n); });
      add("shuffles.lower-ideal", "Sh(p,q) and Sh(A) are lower ideals of the weak order", [=] { return shuffle_sets_are_lower_ideals(n); });
      add("shuffles.maximum", "xi_{p,q} is the maximum of Sh(p,q)", [=] { return max_shuffle_is_maximum(n); });
      add("shuffles.cosets", "every permutation is xi pi with xi in Sh(A), pi in S_A, uniquely", [=] { return unique_coset_factorization(n); });
      add("shuffles.component-sizes", "sum over A of |Sh(A)| equals u_n", [=] { return component_sizes_sum_to_count(enumerate); });
      add("monoid.counts", "u_n by formula, recursion, enumeration and generator closure", [=] { return counting_methods_agree(enumerate, std::max(n, 6)); });
      for (int relation = 1; relation <= 5; ++relation) {
        add(std::string("monoid.relation.") + relation_name(relation), relation_anchor(relation),
            [=] { return presentation_relation(relation, n); });
      }
      add("monoid.inverse", "f f~ f = f, f~ f f~ = f~, (fg)~ = g~ f~", [=] { return inverse_monoid_identities(enumerate); });
      add("monoid.idempotents", "the idempotents are exactly the id_A", [=] { return idempotents_are_partition_identities(enumerate); });
      add("monoid.factorizable", "f = xi_f id_A with xi_f an A-shuffle", [=] { return factorizable(enumerate); });
      add("monoid.associative", "composition is associative", [=] { return composition_associative(small, enumerate); });
      add("monoid.relabeling", "left composition by sigma relabels the codomain, right composition the domain", [=] { return relabeling_laws(enumerate); });
      add("monoid.meet", "id_A id_B = id_(A meet B)", [=] { return partition_identities_meet(n); });
      add("monoid.breaking-points", "f = (f_(i) x f'_(n-i)) xi^-1 with a unique (i,n-i)-shuffle", [=] { return breaking_point_splits(enumerate); });
    }
    if (all || suite == "hopf") {
      known = true;
      add("hopf.associative", "(x*y)*z = x*(y*z)", [=] { return product_associative(n); });
      add("hopf.coassociative", "(Delta (x) id) Delta = (id (x) Delta) Delta", [=] { return coproduct_coassociative(n); });
      add("hopf.counit", "(e (x) id) Delta = id = (id (x) e) Delta", [=] { return counit_axioms(n); });
      add("hopf.compatibility", "Delta(x*y) = Delta(x) Delta(y)", [=] { return bialgebra_compatibility(n); });
      add("hopf.antipode-left", "m(S (x) id) Delta = u e", [=] { return antipode_left(n); });
      add("hopf.antipode-right", "m(id (x) S) Delta = u e", [=] { return antipode_right(n); });
      add("hopf.permutations", "permutations span a Hopf subalgebra", [=] { return permutation_closure(n); });
      add("hopf.shuffle-product", "on permutations the product is the shifted shuffle of words", [=] { return permutation_product_matches_word_shuffle(n); });
      add("hopf.z-lemma", "sigma Z_A = Z_A, Z_A sigma = Z_(sigma^-1 A), Z_A b_i = C(|A|+|A'|,|A|) Z_(A with blocks merged)", [=] { return z_partition_lemma(n); });
      add("hopf.right-ideal", "span of the Z_A is a right ideal", [=] { return z_span_right_ideal(std::min(n, 4)); });
      add("hopf.primitives", "f1 - f2 and b_1 are primitive, id_2 is not", [] { return primitive_examples(); });
      add("hopf.series", "P(x) = 1/(1 - V(x)) with V = x + 2x^2 + 11x^3 + 98x^4 + 1202x^5 + 19052x^6", [=] { return primitive_dimensions(std::max(n, 6)); });
    }
    if (all || suite == "duality") {
      known = true;
      add("duality.self-dual", "<x*y, z> = <x (x) y, Delta z>", [=] { return self_duality(n); });
      add("duality.pairing", "<f, g> = 1 iff g = f~, symmetric", [=] { return tilde_pairing_symmetric(enumerate); });
    }
    if (all || suite == "bases") {
      known = true;
      add("bases.x-round-trip", "X_g = sum of f <= g, inverted exactly", [=] { return x_round_trip(enumerate); });
      add("bases.z-round-trip", "Z_g = sum of f >= g, inverted exactly", [=] { return z_round_trip(enumerate); });
      add("bases.x-product", "X_g1 * X_g2 = X_(xi_{p,q} (g1 x g2))", [=] { return x_product(n); });
      add("bases.z-product", "Z_g1 * Z_g2 = Z_(g1 x g2)", [=] { return z_product(n); });
      add("bases.z-of-partition", "Z_(id_A) = Z_A", [=] { return z_of_partition_matches(enumerate); });
      add("bases.hasse", "weak-order components have |Sh(A)| nodes and the brute-force covers", [=] { return hasse_components(std::min(n, 4)); });
    }
    if (all || suite == "ncsym") {
      known = true;
      add("ncsym.z-closed", "Z-span is closed under product and coproduct", [=] { return z_span_closed(n); });
      add("ncsym.p-axioms", "p-product associative, p-coproduct coassociative and compatible", [=] { return p_algebra_axioms(n); });
      add("ncsym.expand-count", "|p_A over k letters| = k^(blocks of A)", [=] { return expand_p_counts(n, 3); });
      add("ncsym.letter-invariance", "p_A is invariant under permuting the letters", [=] { return expand_p_letter_invariance(n, 3); });
      add("ncsym.concatenation", "p_A p_B = p_(A x B) as words", [=] { return p_product_concatenation(n, 3); });
      add("ncsym.two-alphabets", "Delta(p_A) = p_A(X + Y) split by alphabet", [=] { return p_coproduct_bicolored_words(n); });
      add("ncsym.displayed-coproduct", "the eight-term Delta(p_{1,2,6}{3,5}{4})", [] { return p_coproduct_displayed_example(); });
      add("ncsym.transport", "p_A -> Z_A respects product and coproduct", [=] { return z_transport(n); });
    }
    if (all || suite == "schurweyl") {
      known = true;
      add("schurweyl.orientation", "M(g.f) = M(g) M(f)", [=] { return action_orientation(small, 3); });
      add("schurweyl.relations", "generator matrices satisfy the monoid presentation", [=] { return action_relations(small, 3); });
      add("schurweyl.generators", "direct action matrix = product of generator matrices", [=] { return action_direct_matches_generators(small, 3); });
      add("schurweyl.commutation", "the P_n action commutes with G(r,1,m)", [=] { return commutation_all(std::max(n, 1), 256, 4); });
      add("schurweyl.rank", "rank of the P_n action is u_n when m >= 2n", [=] { return span_rank_matches_count(n, 256); });
      add("schurweyl.convolution", "convolution of actions = action of the product", [=] { return convolution_matches_product(std::min(n, 4), 2); });
    }
    if (!known) {
      throw ValidationError("unknown suite '" + std::string(suite) + "'");
    }
    return checks;
  }

  std::vector<CheckResult> run_checks(std::vector<Check> const& checks, unsigned jobs) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) {
        auto const& check  = checks[i];
        auto&       result = results[i];
        result.name        = check.name;
        result.anchor      = check.anchor;
        auto const start   = std::chrono::steady_clock::now();
        try {
          auto const outcome = check.run();
          result.passed      = outcome.passed();
          result.cases       = outcome.cases;
          result.detail      = outcome.passed() ? outcome.note : outcome.failure;
        } catch (std::exception const& e) {
          result.passed = false;
          result.detail = std::string("exception: ") + e.what();
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    };
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(checks.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    return results;
  }

  bool all_passed(std::vector<CheckResult> const& results) {
    return std::all_of(results.begin(), results.end(), [](auto const& r) { return r.passed; });
  }

}  // namespace ubp::verify
