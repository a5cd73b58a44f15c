#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

// Invariant batteries shared by the CLI `verify` command and the test suites.
// Every check is exhaustive over the stated range unless noted otherwise and
// reports the first counterexample it meets.

namespace ubp::verify {

  struct Outcome {
    std::size_t cases = 0;
    std::string failure;  //!< empty on success
    std::string note;     //!< informational detail, printed on success too

    bool passed() const noexcept {
      return failure.empty();
    }
  };

  struct Check {
    std::string              name;
    std::string              anchor;  //!< the identity being checked
    std::function<Outcome()> run;
  };

  struct CheckResult {
    std::string name;
    std::string anchor;
    bool        passed = false;
    std::size_t cases  = 0;
    std::string detail;
    double      seconds = 0.0;
  };

  //! monoid, hopf, duality, bases, ncsym, schurweyl, all.
  std::vector<std::string> const& suite_names();

  //! The checks of \p suite with sizes bounded by \p max_n. Throws
  //! ValidationError for an unknown suite name.
  std::vector<Check> suite_checks(std::string_view suite, int max_n);

  //! Runs \p checks on up to \p jobs threads; results keep the input order.
  //! Exceptions thrown by a check are reported as failures.
  std::vector<CheckResult> run_checks(std::vector<Check> const& checks, unsigned jobs = 1);

  bool all_passed(std::vector<CheckResult> const& results);

  // Set partitions, permutations and shuffles. \p n bounds the ground set.
  Outcome bell_numbers(int n);
  Outcome type_counts(int n);
  Outcome partition_action_laws(int n);
  Outcome meet_laws(int n);
  Outcome weak_order_is_partial_order(int n);
  Outcome shuffle_sets_are_lower_ideals(int n);
  Outcome max_shuffle_is_maximum(int n);
  Outcome unique_coset_factorization(int n);
  Outcome component_sizes_sum_to_count(int n);

  // The monoid P_n.
  Outcome counting_methods_agree(int max_enumerated, int max_formula);
  //! \p relation in 1..5, in the order: involutions and idempotents, braid
  //! relations, far commutation, absorption of s_i by b_i, commuting b's.
  Outcome presentation_relation(int relation, int n);
  Outcome inverse_monoid_identities(int n);
  Outcome idempotents_are_partition_identities(int n);
  Outcome factorizable(int n);
  Outcome composition_associative(int exhaustive_n, int sampled_n);
  Outcome relabeling_laws(int n);
  Outcome partition_identities_meet(int n);
  Outcome breaking_point_splits(int n);

  // The Hopf algebra. \p degree bounds the total degree involved.
  Outcome product_associative(int degree);
  Outcome coproduct_coassociative(int degree);
  Outcome counit_axioms(int degree);
  Outcome bialgebra_compatibility(int degree);
  Outcome antipode_left(int degree);
  Outcome antipode_right(int degree);
  Outcome permutation_closure(int degree);
  Outcome permutation_product_matches_word_shuffle(int degree);
  Outcome z_partition_lemma(int n);
  Outcome z_span_right_ideal(int n);
  Outcome primitive_examples();
  Outcome primitive_dimensions(int terms);

  // Duality.
  Outcome self_duality(int degree);
  Outcome tilde_pairing_symmetric(int n);

  // X and Z bases.
  Outcome x_round_trip(int n);
  Outcome z_round_trip(int n);
  Outcome x_product(int degree);
  Outcome z_product(int degree);
  Outcome z_of_partition_matches(int n);
  Outcome hasse_components(int n);

  // NCSym in the p-basis and its image in P.
  Outcome z_span_closed(int degree);
  Outcome p_algebra_axioms(int degree);
  Outcome expand_p_counts(int n, int alphabet);
  Outcome expand_p_letter_invariance(int n, int alphabet);
  Outcome p_product_concatenation(int degree, int alphabet);
  Outcome p_coproduct_bicolored_words(int n);
  Outcome p_coproduct_displayed_example();
  Outcome z_transport(int degree);

  // Schur-Weyl actions.
  Outcome action_orientation(int n, int m);
  Outcome action_relations(int n, int m);
  Outcome action_direct_matches_generators(int n, int m);
  //! All (n, m, r) with 1 <= n <= max_n, m^n <= max_dim, 1 <= r <= max_r.
  Outcome commutation_all(int max_n, std::size_t max_dim, int max_r);
  //! rank = u_n at m = 2n for every n <= max_n with (2n)^n <= max_dim.
  Outcome span_rank_matches_count(int max_n, std::size_t max_dim);
  Outcome convolution_matches_product(int degree, int m);

}  // namespace ubp::verify
