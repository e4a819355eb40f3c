#ifndef BOMEGA_TABULATED_HPP_
#define BOMEGA_TABULATED_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "bomega/endo.hpp"
#include "bomega/semigroup.hpp"

namespace bomega {

/// An explicit value table of a self-map of the three-ray extension on the
/// window {(i, j, [p)) : i, j <= domain_bound, p in {0,1,2}}. Total on its
/// domain; image coordinates are unbounded but image rays stay in {0,1,2}.
class TabulatedEndo {
 public:
  /// Builds a table from explicit (key, image) pairs. Throws MissingEntry
  /// listing absent keys, MalformedEntry for duplicate or out-of-window keys
  /// and for images outside the three-ray extension.
  static TabulatedEndo from_entries(
      Int domain_bound, std::span<const std::pair<Elem, Elem>> entries);

  Int domain_bound() const noexcept { return bound_; }
  const Family& family() const noexcept;  // the three-ray family

  bool in_domain(const Elem& x) const noexcept;
  const Elem& operator[](const Elem& x) const;

  /// Domain keys in ascending (i, j, p) order.
  std::vector<Elem> domain() const;

  friend bool operator==(const TabulatedEndo&, const TabulatedEndo&) = default;

 private:
  TabulatedEndo(Int bound, std::vector<Elem> values)
      : bound_(bound), values_(std::move(values)) {}
  friend TabulatedEndo tabulate(const std::function<Elem(const Elem&)>& f,
                                Int domain_bound);

  std::size_t index_of(const Elem& x) const noexcept;

  Int bound_;
  std::vector<Elem> values_;  // row-major by (i, j, p)
};

/// Tabulates a normal form on Window(domain_bound).
TabulatedEndo tabulate(const NormalForm& f, Int domain_bound);

/// Tabulates an arbitrary map; used for synthetic and adversarial tables.
TabulatedEndo tabulate(const std::function<Elem(const Elem&)>& f,
                       Int domain_bound);

}  // namespace bomega

#endif  // BOMEGA_TABULATED_HPP_
