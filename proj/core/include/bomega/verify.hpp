#ifndef BOMEGA_VERIFY_HPP_
#define BOMEGA_VERIFY_HPP_

#include <optional>
#include <vector>

#include "bomega/report.hpp"
#include "bomega/tabulated.hpp"

namespace bomega {

/// Checks T[x*y] = T[x]*T[y] for all pairs from Window(pair_bound). The table
/// domain must reach 2*pair_bound, since products of window elements do.
/// Throws DomainTooSmall otherwise.
Report verify_homomorphism(const TabulatedEndo& table, Int pair_bound);

/// Checks that table values are pairwise distinct.
Report verify_injective(const TabulatedEndo& table);

/// Recovers the unique normal form consistent with the table:
/// reads w and m off the identity image, k off the image of (1,0,[0)), then
/// verifies every table entry against the candidate. A passing table is
/// consistent with the returned form on its window; window data cannot
/// certify equality beyond it.
/// Throws MiddleLayerIdentityImage, NotClassifiable, NonPositiveK,
/// DomainTooSmall (domain bound below 2).
NormalForm decompose(const TabulatedEndo& table);

/// For every form with k in [1,k_max], m in [0,m_max], w in {0,1}, verifies
/// on Window(8) that the image meets all three layers and that the identity
/// image avoids the middle layer. Four checks per form.
Report scan_exclusions(Int k_max, Int m_max);

/// Grid overrides for the bundled suites; each report keeps its own pinned
/// default where a field is absent.
struct SuiteParams {
  std::optional<Int> k_max;   // dilation grid bound
  std::optional<Int> m_max;   // shift grid bound
  std::optional<Int> window;  // window bound
};

/// The symbolic-algebra laws, each validated against pointwise evaluation.
std::vector<Report> identity_suite(const SuiteParams& params = {});

/// The element-arithmetic laws: associativity, inverses, order, D-classes,
/// shift maps, corners.
std::vector<Report> semigroup_suite(const SuiteParams& params = {});

namespace suites {

Report associativity(Int window_bound);
Report identity_element(Int window_bound);
Report inverse_axioms(Int axiom_bound, Int uniqueness_bound);
Report natural_order_agreement(Int window_bound);
Report natural_order_is_partial_order(Int window_bound);
Report d_class_partition(Int window_bound);
Report shift_map_isomorphism(Int s, Int t, Int window_bound);
Report corner_membership(Int window_bound, Int m_max);
Report corner_set_equality(Int window_bound);
Report ray_inductivity(Int probe_bound);
Report generator_homomorphisms(Int pair_bound);
Report reversal_identities(Int window_bound);
Report dilation_relations(Int k_max, Int window_bound);
Report compose_soundness(Int k_max, Int m_max, Int window_bound);
Report compose_associativity(Int k_max, Int m_max);
Report endomorphism_property(Int k_max, Int m_max, Int pair_bound);
Report normal_form_injectivity(Int k_max, Int m_max, Int window_bound);
Report exponent_regression(Int k_max, Int m_max);
Report semidirect_isomorphism(Int k_max, Int m_max);
Report normal_form_separation(Int k_max, Int m_max);
Report decompose_roundtrip(Int k_max, Int m_max, Int domain_bound);
Report right_cancellation(Int k_max, Int window_bound);

}  // namespace suites

}  // namespace bomega

#endif  // BOMEGA_VERIFY_HPP_
