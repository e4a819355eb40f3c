#include "bomega/semigroup.hpp"

#include <algorithm>
#include <cassert>

#include "bomega/arith.hpp"

namespace bomega {

Family Family::canonical(Int n) {
  if (n < 1) {
    throw InvalidParameter("family size must be positive, got "
                           + std::to_string(n));
  }
  std::vector<Ray> rays;
  rays.reserve(static_cast<std::size_t>(n));
  for (Int a = 0; a < n; ++a) {
    rays.push_back(Ray{a});
  }
  return Family(std::move(rays));
}

bool Family::contains(Ray r) const noexcept {
  return std::binary_search(rays_.begin(), rays_.end(), r);
}

Family make_family(std::span<const Int> starts) {
  if (starts.empty()) {
    throw InvalidParameter("family must contain at least one ray");
  }
  std::vector<Ray> rays;
  rays.reserve(starts.size());
  for (Int a : starts) {
    if (a < 0) {
      throw InvalidParameter("ray start must be non-negative, got "
                             + std::to_string(a));
    }
    rays.push_back(Ray{a});
  }
  std::sort(rays.begin(), rays.end());
  if (std::adjacent_find(rays.begin(), rays.end()) != rays.end()) {
    throw InvalidParameter("family ray starts must be distinct");
  }

  // [r1) n (-n + [r2)) = [max(r1, r2 - n)); stabilizes to [r1) for
  // n >= r2, so scanning n up to the largest start is exhaustive.
  const Int n_max = rays.back().start;
  const auto member = [&rays](Ray r) {
    return std::binary_search(rays.begin(), rays.end(), r);
  };
  for (const Ray& r1 : rays) {
    for (const Ray& r2 : rays) {
      for (Int n = 0; n <= n_max; ++n) {
        const Ray cut{std::max(r1.start, r2.start - n)};
        if (!member(cut)) {
          throw NotOmegaClosed(r1.start, r2.start, n);
        }
      }
    }
  }
  return Family(std::move(rays));
}

Family make_family(std::initializer_list<Int> starts) {
  return make_family(std::span<const Int>(starts.begin(), starts.size()));
}

namespace detail {

Elem mul_case_le(const Elem& a, const Elem& b) {
  const Int i = checked_add(checked_sub(a.i, a.j), b.i);
  const Int p =
      std::max(checked_sub(checked_add(a.ray.start, a.j), b.i), b.ray.start);
  return Elem{i, b.j, Ray{p}};
}

Elem mul_case_ge(const Elem& a, const Elem& b) {
  const Int j = checked_add(checked_sub(a.j, b.i), b.j);
  const Int p =
      std::max(a.ray.start, checked_sub(checked_add(b.ray.start, b.i), a.j));
  return Elem{a.i, j, Ray{p}};
}

}  // namespace detail

Elem mul(const Elem& a, const Elem& b, const Family& fam) {
  if (!fam.contains(a.ray) || !fam.contains(b.ray)) {
    throw InvalidParameter("product operand ray is not a family member");
  }
  const Elem r = a.j <= b.i ? detail::mul_case_le(a, b)
                            : detail::mul_case_ge(a, b);
  assert(a.j != b.i || detail::mul_case_ge(a, b) == r);
  assert(fam.contains(r.ray));
  return r;
}

bool nat_leq(const Elem& a, const Elem& b, const Family& fam) {
  return checked_sub(a.i, a.j) == checked_sub(b.i, b.j) && a.j >= b.j
         && checked_add(a.ray.start, a.j) >= checked_add(b.ray.start, b.j)
         && fam.contains(a.ray);
}

bool nat_leq_definitional(const Elem& a, const Elem& b, const Family& fam) {
  const Int c_max = std::max(a.j, b.j);
  for (Int c = 0; c <= c_max; ++c) {
    for (Ray q : fam.rays()) {
      if (mul(b, Elem{c, c, q}, fam) == a) {
        return true;
      }
    }
  }
  return false;
}

Elem shift_map(const Elem& a, Int s) {
  if (s < 0) {
    throw InvalidParameter("shift amount must be non-negative");
  }
  if (a.ray.start < s) {
    throw RayUnderflow(a.ray.start, s);
  }
  return Elem{a.i, a.j, Ray{a.ray.start - s}};
}

bool corner_contains(const Elem& a, Int m) {
  if (m < 0) {
    throw InvalidParameter("corner index must be non-negative");
  }
  return a.i >= m && a.j >= m;
}

std::vector<Elem> enumerate(Window w, const Family& fam) {
  if (w.bound < 0) {
    throw InvalidParameter("window bound must be non-negative");
  }
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>((w.bound + 1) * (w.bound + 1))
              * static_cast<std::size_t>(fam.size()));
  for (Int i = 0; i <= w.bound; ++i) {
    for (Int j = 0; j <= w.bound; ++j) {
      for (Ray r : fam.rays()) {
        out.push_back(Elem{i, j, r});
      }
    }
  }
  return out;
}

}  // namespace bomega
