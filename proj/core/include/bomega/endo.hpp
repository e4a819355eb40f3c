#ifndef BOMEGA_ENDO_HPP_
#define BOMEGA_ENDO_HPP_

#include <compare>

#include "bomega/semigroup.hpp"

namespace bomega {

/// Symbolic injective endomorphism of the three-ray extension, written as
/// dilation by k, then m coordinate shifts, then w layer reversals, applied
/// left to right. Distinct triples denote distinct maps.
struct NormalForm {
  Int k = 1;  // dilation factor, >= 1
  Int m = 0;  // shift exponent
  Int w = 0;  // reversal exponent, 0 or 1

  friend constexpr auto operator<=>(const NormalForm&,
                                    const NormalForm&) = default;

  static NormalForm identity() noexcept { return {1, 0, 0}; }
  static NormalForm shift() noexcept { return {1, 1, 0}; }
  static NormalForm reversal() noexcept { return {1, 0, 1}; }
  static NormalForm dilation(Int k) noexcept { return {k, 0, 0}; }
};

/// Validating constructor. Throws InvalidParameter unless k >= 1, m >= 0 and
/// w is 0 or 1.
NormalForm nf_make(Int k, Int m, Int w);

/// Evaluates the normal form at an element of the three-ray extension using
/// closed forms; the suites re-derive every value by chaining the three
/// generator maps. Throws UnsupportedFamily when the ray start exceeds 2.
Elem nf_apply(const NormalForm& f, const Elem& x);

/// The unique h with apply(h, x) = apply(g, apply(f, x)): f first, then g.
///
/// With f = (k1, m1, w1) and g = (k2, m2, w2):
///   w1 = 0:          (k1*k2, k2*m1 + m2,          w2)
///   w1 = 1, w2 = 0:  (k1*k2, k2*m1 + k2 + m2 - 1, 1)
///   w1 = 1, w2 = 1:  (k1*k2, k2*m1 + k2 + m2 + 1, 0)
/// The trailing-reversal exponents are pinned by pointwise evaluation. A
/// plausible symbolic derivation yields k2*m1 + k2 + m2 (resp. + 2); at
/// k2 = 1, m1 = m2 = 0 that would make a double reversal equal three shifts
/// instead of two. The exponent-regression suite keeps the off-by-one out.
NormalForm nf_compose(const NormalForm& f, const NormalForm& g);

/// Element of the semidirect product of (N, *) acting on (omega, +) by
/// multiplication; the image of the reversal-free forms.
struct SDPair {
  Int k = 1;
  Int m = 0;

  friend constexpr auto operator<=>(const SDPair&, const SDPair&) = default;
};

/// (k1, m1) . (k2, m2) = (k1*k2, k2*m1 + m2).
SDPair sd_mul(const SDPair& a, const SDPair& b);

/// Projects a reversal-free form (w = 0) to its semidirect-product pair; an
/// isomorphism onto SDPairs under sd_mul. Throws NotInSubmonoid when w = 1.
SDPair nf_to_sd(const NormalForm& f);

// The three generator maps.

/// Coordinate shift: (i, j, [p)) -> (i+1, j+1, [p)). Any family.
Elem apply_shift(const Elem& x);

/// Layer reversal on the canonical n-ray family:
/// (i, j, [p)) -> (i+p, j+p, [n-1-p)). Requires 1 <= n and p <= n-1.
Elem apply_layer_reversal(const Elem& x, Int n);

/// Dilation on the three-ray family:
/// (i, j, [p)) -> (k*i, k*j, [p)) for p in {0, 1},
///             -> (k*(i+1)-1, k*(j+1)-1, [2)) for p = 2.
Elem apply_dilation(const Elem& x, Int k);

}  // namespace bomega

#endif  // BOMEGA_ENDO_HPP_
