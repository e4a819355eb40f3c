#ifndef BOMEGA_SEMIGROUP_HPP_
#define BOMEGA_SEMIGROUP_HPP_

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

#include "bomega/errors.hpp"

namespace bomega {

/// A ray [a) = {x in omega : x >= a}. The rays are exactly the non-empty
/// subsets of omega that are closed under successor, so a ray is identified
/// by its least element.
struct Ray {
  Int start = 0;

  bool contains(Int x) const noexcept { return x >= start; }

  friend constexpr auto operator<=>(const Ray&, const Ray&) = default;
};

/// A finite family of rays, stored sorted ascending by start and closed under
/// the shifted intersections the product can produce:
/// [a) n (-n + [b)) = [max(a, b - n)) must be a member for every n >= 0 and
/// every pair of members. The condition stabilizes once n reaches the largest
/// start, so the check is finite.
class Family {
 public:
  /// The canonical n-ray family {[0), [1), ..., [n-1)}.
  static Family canonical(Int n);

  bool contains(Ray r) const noexcept;
  std::span<const Ray> rays() const noexcept { return rays_; }
  Int size() const noexcept { return static_cast<Int>(rays_.size()); }
  Int max_start() const noexcept { return rays_.back().start; }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  explicit Family(std::vector<Ray> rays) : rays_(std::move(rays)) {}
  friend Family make_family(std::span<const Int> starts);

  std::vector<Ray> rays_;  // sorted ascending, no duplicates
};

/// Validates and builds a family from ray starts. Throws NotOmegaClosed with
/// a witness triple when closure fails, InvalidParameter on empty input,
/// duplicates or negative starts.
Family make_family(std::span<const Int> starts);
Family make_family(std::initializer_list<Int> starts);

/// A semigroup element (i, j, [p)). Elements compare and sort
/// lexicographically by (i, j, p).
struct Elem {
  Int i = 0;
  Int j = 0;
  Ray ray{};

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// The idempotents are exactly the elements with equal coordinates.
inline bool is_idempotent(const Elem& e) noexcept { return e.i == e.j; }

/// The element product:
///   (i1,j1,[p1)) . (i2,j2,[p2)) =
///     (i1-j1+i2, j2, [max(p1+j1-i2, p2)))   if j1 <= i2
///     (i1, j1-i2+j2, [max(p1, p2+i2-j1)))   if j1 >= i2
/// Both branches agree when j1 = i2. The result ray is always a member of the
/// family (that is what closure buys), and coordinates are never clamped to a
/// window: products escape windows freely.
Elem mul(const Elem& a, const Elem& b, const Family& fam);

/// The unique semigroup inverse: (i, j, [p)) -> (j, i, [p)).
inline Elem inv(const Elem& a) noexcept { return Elem{a.j, a.i, a.ray}; }

/// Natural partial order a <= b: a = b.e for some idempotent e. Closed form;
/// cross-validated against nat_leq_definitional by the suites.
bool nat_leq(const Elem& a, const Elem& b, const Family& fam);

/// The definition-based route: searches idempotents e = (c, c, [q)) with
/// c <= max(a.j, b.j) and q a family ray. Reference oracle for nat_leq.
bool nat_leq_definitional(const Elem& a, const Elem& b, const Family& fam);

/// Two elements lie in the same D-class iff their rays agree; the connecting
/// witness is z = (a.i, b.i, a.ray).
inline bool d_related(const Elem& a, const Elem& b) noexcept {
  return a.ray == b.ray;
}

/// Relabels rays downward: (i, j, [p)) -> (i, j, [p - s)). Restricted to a
/// contiguous ray band {[s), ..., [t)} this is an isomorphism onto the
/// canonical (t - s + 1)-ray family. Throws RayUnderflow when p < s.
Elem shift_map(const Elem& a, Int s);

/// Membership in the corner (m,m,[0)) . S . (m,m,[0)), equivalently in the
/// image of m coordinate shifts: both coordinates at least m.
bool corner_contains(const Elem& a, Int m);

/// The finite truncation {(i, j, R) : i <= bound, j <= bound, R in family}.
struct Window {
  Int bound = 0;
};

/// Enumerates a window in ascending (i, j, p) order;
/// yields exactly (bound+1)^2 * family.size() elements.
std::vector<Elem> enumerate(Window w, const Family& fam);

namespace detail {
// The two product branches, exposed separately so the suites can assert they
// agree on the j1 = i2 overlap.
Elem mul_case_le(const Elem& a, const Elem& b);
Elem mul_case_ge(const Elem& a, const Elem& b);
}  // namespace detail

}  // namespace bomega

#endif  // BOMEGA_SEMIGROUP_HPP_
