#include "bomega/endo.hpp"

#include "bomega/arith.hpp"

namespace bomega {

NormalForm nf_make(Int k, Int m, Int w) {
  if (k < 1) {
    throw InvalidParameter("dilation factor must be >= 1, got "
                           + std::to_string(k));
  }
  if (m < 0) {
    throw InvalidParameter("shift exponent must be >= 0, got "
                           + std::to_string(m));
  }
  if (w != 0 && w != 1) {
    throw InvalidParameter("reversal exponent must be 0 or 1, got "
                           + std::to_string(w));
  }
  return NormalForm{k, m, w};
}

Elem nf_apply(const NormalForm& f, const Elem& x) {
  const Int p = x.ray.start;
  if (p > 2) {
    throw UnsupportedFamily(p);
  }
  const Int k = f.k;
  const Int m = f.m;
  // k*i + m and k*(i+1) - 1 + m, per coordinate.
  const auto lin = [&](Int c) { return checked_add(checked_mul(k, c), m); };
  const auto lin1 = [&](Int c) {
    return checked_add(checked_sub(checked_mul(k, checked_add(c, 1)), 1), m);
  };
  if (f.w == 0) {
    if (p <= 1) {
      return Elem{lin(x.i), lin(x.j), Ray{p}};
    }
    return Elem{lin1(x.i), lin1(x.j), Ray{2}};
  }
  switch (p) {
    case 0:
      return Elem{lin(x.i), lin(x.j), Ray{2}};
    case 1:
      return Elem{checked_add(lin(x.i), 1), checked_add(lin(x.j), 1), Ray{1}};
    default:  // p == 2
      return Elem{checked_add(lin1(x.i), 2), checked_add(lin1(x.j), 2),
                  Ray{0}};
  }
}

NormalForm nf_compose(const NormalForm& f, const NormalForm& g) {
  const Int k = checked_mul(f.k, g.k);
  const Int base = checked_add(checked_mul(g.k, f.m), g.m);
  if (f.w == 0) {
    return NormalForm{k, base, g.w};
  }
  if (g.w == 0) {
    return NormalForm{k, checked_sub(checked_add(base, g.k), 1), 1};
  }
  return NormalForm{k, checked_add(checked_add(base, g.k), 1), 0};
}

SDPair sd_mul(const SDPair& a, const SDPair& b) {
  return SDPair{checked_mul(a.k, b.k),
                checked_add(checked_mul(b.k, a.m), b.m)};
}

SDPair nf_to_sd(const NormalForm& f) {
  if (f.w != 0) {
    throw NotInSubmonoid(
        "only reversal-free forms (w = 0) project to the semidirect product");
  }
  return SDPair{f.k, f.m};
}

Elem apply_shift(const Elem& x) {
  return Elem{checked_add(x.i, 1), checked_add(x.j, 1), x.ray};
}

Elem apply_layer_reversal(const Elem& x, Int n) {
  if (n < 1) {
    throw InvalidParameter("layer reversal needs a positive family size");
  }
  const Int p = x.ray.start;
  if (p > n - 1) {
    throw InvalidParameter("ray [" + std::to_string(p)
                           + ") lies outside the canonical "
                           + std::to_string(n) + "-ray family");
  }
  return Elem{checked_add(x.i, p), checked_add(x.j, p), Ray{n - 1 - p}};
}

Elem apply_dilation(const Elem& x, Int k) {
  if (k < 1) {
    throw InvalidParameter("dilation factor must be >= 1, got "
                           + std::to_string(k));
  }
  const Int p = x.ray.start;
  if (p > 2) {
    throw UnsupportedFamily(p);
  }
  if (p <= 1) {
    return Elem{checked_mul(k, x.i), checked_mul(k, x.j), Ray{p}};
  }
  return Elem{checked_sub(checked_mul(k, checked_add(x.i, 1)), 1),
              checked_sub(checked_mul(k, checked_add(x.j, 1)), 1), Ray{2}};
}

}  // namespace bomega
