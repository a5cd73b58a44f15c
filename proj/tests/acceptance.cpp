// Acceptance run: one PASS/FAIL line per criterion with its wall time and
// budget. Exits non-zero if any criterion fails or exceeds its budget.

#include "oracles.hpp"
#include "ubp/exact_rank.hpp"
#include "ubp/hopf.hpp"
#include "ubp/schur_weyl.hpp"
#include "ubp/text_format.hpp"
#include "ubp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ubp;

namespace {

  struct Verdict {
    bool        passed = true;
    std::size_t cases  = 0;
    std::string detail;

    // Folds in a library check; the first failure wins.
    void add(char const* label, verify::Outcome const& o) {
      cases += o.cases;
      if (passed && !o.passed()) {
        passed = false;
        detail = std::string(label) + ": " + o.failure;
      }
    }

    void require(bool ok, std::string const& what) {
      ++cases;
      if (passed && !ok) {
        passed = false;
        detail = what;
      }
    }
  };

  struct Criterion {
    int                      id;
    std::string              title;
    double                   budget_seconds;
    std::function<Verdict()> run;
  };

  std::vector<Integer> const kCounts{1, 1, 3, 16, 131, 1496, 22482};
  std::vector<Integer> const kPrimitives{1, 2, 11, 98, 1202, 19052};

  Verdict counting() {
    Verdict v;
    for (int n = 0; n <= 6; ++n) {
      auto const expected = kCounts[static_cast<std::size_t>(n)];
      v.require(count_ubp(n) == expected, "formula at n = " + std::to_string(n));
      v.require(count_ubp_recursive(n) == expected, "recursion at n = " + std::to_string(n));
      v.require(oracle::count_ubp_pairs(n) == expected, "partition-pair oracle at n = " + std::to_string(n));
    }
    v.add("enumeration and closure", verify::counting_methods_agree(5, 6));
    return v;
  }

  Verdict type_formula() {
    Verdict v;
    v.add("type counts", verify::type_counts(6));
    // Independent tally: group enumerated partitions by sorted block sizes
    // and compare with n! / prod (i!^m_i m_i!).
    for (int n = 0; n <= 6; ++n) {
      std::map<std::vector<int>, Integer> tally;
      for (auto const& a : enumerate_set_partitions(n)) {
        std::vector<int> mult(static_cast<std::size_t>(n + 1), 0);
        for (auto const& blk : a.blocks()) {
          ++mult[blk.size()];
        }
        tally[mult] += 1;
      }
      for (auto const& [mult, count] : tally) {
        mpz_class denom = 1, top;
        mpz_fac_ui(top.get_mpz_t(), static_cast<unsigned long>(n));
        for (std::size_t i = 1; i < mult.size(); ++i) {
          mpz_class fi, fm;
          mpz_fac_ui(fi.get_mpz_t(), i);
          mpz_fac_ui(fm.get_mpz_t(), static_cast<unsigned long>(mult[i]));
          for (int k = 0; k < mult[i]; ++k) {
            denom *= fi;
          }
          denom *= fm;
        }
        v.require(count == top / denom, "type tally at n = " + std::to_string(n));
        v.require(count_partitions_of_type(PartitionType(std::vector<int>(mult.begin() + 1, mult.end()))) == count,
                  "library type count at n = " + std::to_string(n));
      }
    }
    return v;
  }

  Verdict presentation() {
    Verdict v;
    for (int relation = 1; relation <= 5; ++relation) {
      v.add("relation", verify::presentation_relation(relation, 5));
    }
    return v;
  }

  Verdict inverse_monoid() {
    Verdict v;
    v.add("inverse identities", verify::inverse_monoid_identities(4));
    v.add("idempotents", verify::idempotents_are_partition_identities(4));
    return v;
  }

  Verdict z_action() {
    Verdict v;
    v.add("partition sums", verify::z_partition_lemma(4));
    v.add("right ideal", verify::z_span_right_ideal(4));
    return v;
  }

  Verdict hopf_axioms() {
    Verdict v;
    v.add("associativity", verify::product_associative(4));
    v.add("coassociativity", verify::coproduct_coassociative(4));
    v.add("counit", verify::counit_axioms(4));
    v.add("compatibility", verify::bialgebra_compatibility(4));
    v.add("antipode left", verify::antipode_left(4));
    v.add("antipode right", verify::antipode_right(4));
    std::map<Ubp, Element> memo;
    for (int n = 0; n <= 4; ++n) {
      for (auto const& f : enumerate_ubp(n)) {
        v.require(antipode(Element::basis(f)) == oracle::antipode_right(f, memo), "antipode recursion oracle");
      }
    }
    return v;
  }

  Verdict self_duality() {
    Verdict v;
    v.add("self-duality", verify::self_duality(4));
    return v;
  }

  Verdict weak_order() {
    Verdict v;
    v.add("lower ideals", verify::shuffle_sets_are_lower_ideals(5));
    v.add("maximum shuffle", verify::max_shuffle_is_maximum(5));
    v.add("component sizes", verify::component_sizes_sum_to_count(5));
    return v;
  }

  Verdict bases() {
    Verdict v;
    v.add("X round trip", verify::x_round_trip(4));
    v.add("Z round trip", verify::z_round_trip(4));
    v.add("X product", verify::x_product(4));
    v.add("Z product", verify::z_product(4));
    return v;
  }

  Verdict series() {
    Verdict    v;
    auto const got = primitive_series(6);
    for (std::size_t k = 1; k <= 6; ++k) {
      v.require(got[k] == kPrimitives[k - 1], "v_" + std::to_string(k));
    }
    std::vector<Integer> with_zero{0};
    with_zero.insert(with_zero.end(), kPrimitives.begin(), kPrimitives.end());
    v.require(series_from_primitives(with_zero) == kCounts, "recomposition");
    return v;
  }

  Verdict permutations() {
    Verdict v;
    v.add("closure", verify::permutation_closure(4));
    v.add("word shuffle", verify::permutation_product_matches_word_shuffle(4));
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; p + q <= 4; ++q) {
        for (auto const& s : enumerate_permutations(p)) {
          for (auto const& t : enumerate_permutations(q)) {
            v.require(product(from_permutation(s), from_permutation(t)) == oracle::word_shuffle_product(s, t),
                      "shuffle oracle at " + to_text(s) + ", " + to_text(t));
          }
        }
      }
    }
    return v;
  }

  Verdict ncsym() {
    Verdict v;
    v.add("concatenation", verify::p_product_concatenation(5, 3));
    v.add("two alphabets", verify::p_coproduct_bicolored_words(4));
    v.add("displayed coproduct", verify::p_coproduct_displayed_example());
    v.add("transport", verify::z_transport(4));
    return v;
  }

  Verdict schur_weyl() {
    Verdict v;
    // m = 1 admits every n; the sweep stops at n = 8, past which only
    // one-dimensional spaces remain.
    v.add("commutation", verify::commutation_all(8, 256, 4));
    auto const r24 = action_span_rank(2, 4, 256);
    auto const r36 = action_span_rank(3, 6, 256);
    v.require(r24 == 3, "rank(2,4) = " + std::to_string(r24));
    v.require(r36 == 16, "rank(3,6) = " + std::to_string(r36));
    v.add("convolution", verify::convolution_matches_product(4, 2));
    if (v.passed) {
      v.detail = "rank(2,4) = " + std::to_string(r24) + ", rank(3,6) = " + std::to_string(r36);
    }
    return v;
  }

  Verdict primitivity() {
    Verdict    v;
    auto const f1 = Element::basis(parse_ubp("{1,3}->{1,2};{2}->{3}"));
    auto const f2 = Element::basis(parse_ubp("{1}->{3};{2,3}->{1,2}"));
    v.require(is_primitive(f1 - f2), "f1 - f2 is not primitive");
    v.require(is_primitive(Element::basis(generator_b(2, 1))), "b1 is not primitive");
    v.require(!is_primitive(Element::basis(identity(2))), "id2 is primitive");
    return v;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "counting", 30, counting},
      {2, "partitions of each type", 5, type_formula},
      {3, "monoid presentation", 10, presentation},
      {4, "inverse monoid", 60, inverse_monoid},
      {5, "Z_A under the monoid action", 60, z_action},
      {6, "Hopf axioms", 300, hopf_axioms},
      {7, "self-duality", 120, self_duality},
      {8, "weak order", 30, weak_order},
      {9, "X and Z bases", 120, bases},
      {10, "primitive series", 1, series},
      {11, "permutation subalgebra", 30, permutations},
      {12, "NCSym", 120, ncsym},
      {13, "Schur-Weyl", 300, schur_weyl},
      {14, "primitivity", 1, primitivity},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Verdict    v;
    try {
      v = c.run();
    } catch (std::exception const& e) {
      v.passed = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const   in_time = seconds < c.budget_seconds;
    bool const   ok      = v.passed && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s %2d %-28s cases=%-8zu %8.3fs / %gs%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), v.cases,
                seconds, c.budget_seconds, v.detail.empty() ? "" : "  ", v.detail.c_str());
    if (v.passed && !in_time) {
      std::printf("     over budget\n");
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
