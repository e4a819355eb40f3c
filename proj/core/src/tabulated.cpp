#include "bomega/tabulated.hpp"

#include <string>

namespace bomega {

namespace {

const Family& three_ray_family() {
  static const Family fam = Family::canonical(3);
  return fam;
}

std::string key_text(const Elem& x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ","
         + std::to_string(x.ray.start) + ")";
}

}  // namespace

const Family& TabulatedEndo::family() const noexcept {
  return three_ray_family();
}

std::size_t TabulatedEndo::index_of(const Elem& x) const noexcept {
  const auto n = static_cast<std::size_t>(bound_ + 1);
  return (static_cast<std::size_t>(x.i) * n + static_cast<std::size_t>(x.j))
             * 3
         + static_cast<std::size_t>(x.ray.start);
}

bool TabulatedEndo::in_domain(const Elem& x) const noexcept {
  return x.i >= 0 && x.i <= bound_ && x.j >= 0 && x.j <= bound_
         && x.ray.start >= 0 && x.ray.start <= 2;
}

const Elem& TabulatedEndo::operator[](const Elem& x) const {
  if (!in_domain(x)) {
    throw InvalidParameter("table lookup outside the domain window: "
                           + key_text(x));
  }
  return values_[index_of(x)];
}

std::vector<Elem> TabulatedEndo::domain() const {
  return enumerate(Window{bound_}, three_ray_family());
}

TabulatedEndo TabulatedEndo::from_entries(
    Int domain_bound, std::span<const std::pair<Elem, Elem>> entries) {
  if (domain_bound < 0) {
    throw InvalidParameter("domain bound must be non-negative");
  }
  const std::size_t total =
      static_cast<std::size_t>(domain_bound + 1)
      * static_cast<std::size_t>(domain_bound + 1) * 3;
  std::vector<Elem> values(total);
  std::vector<bool> seen(total, false);
  TabulatedEndo table(domain_bound, {});

  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const auto& [x, fx] = entries[idx];
    if (!table.in_domain(x)) {
      throw MalformedEntry(idx, "key " + key_text(x)
                                    + " lies outside the domain window");
    }
    const std::size_t slot = table.index_of(x);
    if (seen[slot]) {
      throw MalformedEntry(idx, "duplicate key " + key_text(x));
    }
    if (fx.i < 0 || fx.j < 0 || fx.ray.start < 0 || fx.ray.start > 2) {
      throw MalformedEntry(idx, "image " + key_text(fx)
                                    + " is not a three-ray element");
    }
    seen[slot] = true;
    values[slot] = fx;
  }

  std::vector<std::string> missing;
  for (const Elem& x : enumerate(Window{domain_bound}, three_ray_family())) {
    if (!seen[table.index_of(x)]) {
      missing.push_back(key_text(x));
    }
  }
  if (!missing.empty()) {
    const std::string msg = "table is missing "
                            + std::to_string(missing.size()) + " of "
                            + std::to_string(total)
                            + " window keys, first absent: "
                            + missing.front();
    throw MissingEntry(msg, std::move(missing));
  }
  table.values_ = std::move(values);
  return table;
}

TabulatedEndo tabulate(const NormalForm& f, Int domain_bound) {
  return tabulate([&f](const Elem& x) { return nf_apply(f, x); },
                  domain_bound);
}

TabulatedEndo tabulate(const std::function<Elem(const Elem&)>& f,
                       Int domain_bound) {
  if (domain_bound < 0) {
    throw InvalidParameter("domain bound must be non-negative");
  }
  TabulatedEndo table(domain_bound, {});
  std::vector<Elem> values;
  values.reserve(static_cast<std::size_t>(domain_bound + 1)
                 * static_cast<std::size_t>(domain_bound + 1) * 3);
  for (const Elem& x : enumerate(Window{domain_bound}, three_ray_family())) {
    Elem fx = f(x);
    if (fx.i < 0 || fx.j < 0 || fx.ray.start < 0 || fx.ray.start > 2) {
      throw MalformedEntry(values.size(),
                           "image " + key_text(fx)
                               + " is not a three-ray element");
    }
    values.push_back(fx);
  }
  table.values_ = std::move(values);
  return table;
}

}  // namespace bomega
