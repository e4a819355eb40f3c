#include "bomega/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "bomega/arith.hpp"
#include "bomega/io.hpp"

namespace bomega {

namespace {

const Family& fam3() {
  static const Family fam = Family::canonical(3);
  return fam;
}

const Elem kOne{0, 0, Ray{0}};

Elem shift_pow(Elem x, Int e) {
  for (Int s = 0; s < e; ++s) {
    x = apply_shift(x);
  }
  return x;
}

Elem rev3(const Elem& x) { return apply_layer_reversal(x, 3); }

std::vector<NormalForm> nf_grid(Int k_max, Int m_max) {
  if (k_max < 1 || m_max < 0) {
    throw InvalidParameter("normal-form grid needs k_max >= 1, m_max >= 0");
  }
  std::vector<NormalForm> out;
  out.reserve(static_cast<std::size_t>(k_max * (m_max + 1) * 2));
  for (Int k = 1; k <= k_max; ++k) {
    for (Int m = 0; m <= m_max; ++m) {
      for (Int w = 0; w <= 1; ++w) {
        out.push_back(NormalForm{k, m, w});
      }
    }
  }
  return out;
}

std::string nf_grid_text(Int k_max, Int m_max) {
  return "k in [1," + std::to_string(k_max) + "], m in [0,"
         + std::to_string(m_max) + "], w in {0,1}";
}

std::string window_text(Int bound) {
  return "Window(" + std::to_string(bound) + ")";
}

// One check per set; the counterexample names the first discrepancy.
void check_set_equal(Report& r, const std::vector<Elem>& got,
                     const std::vector<Elem>& want, const std::string& what) {
  const bool ok = got == want;
  r.check(ok, [&] {
    std::string g = "sets differ";
    auto [gi, wi] = std::mismatch(got.begin(), got.end(), want.begin(),
                                  want.end());
    if (wi != want.end()) {
      g = "missing " + to_string(*wi);
    } else if (gi != got.end()) {
      g = "extra " + to_string(*gi);
    }
    return Counterexample{what, "equal sets", g};
  });
}

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Report verify_homomorphism(const TabulatedEndo& table, Int pair_bound) {
  if (pair_bound < 0) {
    throw InvalidParameter("pair bound must be non-negative");
  }
  if (2 * pair_bound > table.domain_bound()) {
    throw DomainTooSmall("pairwise products from " + window_text(pair_bound)
                         + " reach coordinate " + std::to_string(2 * pair_bound)
                         + " but the table domain stops at "
                         + std::to_string(table.domain_bound()));
  }
  Report r;
  r.suite = "table.homomorphism";
  r.grid = "pairs from " + window_text(pair_bound) + "; table domain "
           + window_text(table.domain_bound());
  const Family& fam = table.family();
  const auto win = enumerate(Window{pair_bound}, fam);
  for (const Elem& x : win) {
    for (const Elem& y : win) {
      const Elem lhs = table[mul(x, y, fam)];
      const Elem rhs = mul(table[x], table[y], fam);
      r.check(lhs == rhs, [&] {
        return Counterexample{"x=" + to_string(x) + " y=" + to_string(y),
                              "T[x]*T[y]=" + to_string(rhs),
                              "T[x*y]=" + to_string(lhs)};
      });
    }
  }
  return r;
}

Report verify_injective(const TabulatedEndo& table) {
  Report r;
  r.suite = "table.injectivity";
  r.grid = "table domain " + window_text(table.domain_bound());
  std::map<Elem, Elem> first_key;
  for (const Elem& x : table.domain()) {
    const Elem& fx = table[x];
    const auto [it, inserted] = first_key.try_emplace(fx, x);
    r.check(inserted, [&] {
      return Counterexample{
          "x=" + to_string(it->second) + " y=" + to_string(x),
          "distinct images", "both map to " + to_string(fx)};
    });
  }
  return r;
}

NormalForm decompose(const TabulatedEndo& table) {
  if (table.domain_bound() < 2) {
    throw DomainTooSmall("decomposition needs a domain bound of at least 2");
  }
  const Elem e0 = table[kOne];
  if (e0.ray.start == 1) {
    throw MiddleLayerIdentityImage("identity image " + to_string(e0)
                                   + " lies in the middle layer [1)");
  }
  if (e0.i != e0.j) {
    throw NotClassifiable("identity image " + to_string(e0)
                          + " is not idempotent");
  }
  const Int m = e0.i;
  const Int w = e0.ray.start == 2 ? 1 : 0;
  const Elem t1 = table[Elem{1, 0, Ray{0}}];
  const Int k = checked_sub(t1.i, t1.j);
  if (k < 1) {
    throw NonPositiveK(k);
  }
  const NormalForm f{k, m, w};
  for (const Elem& x : table.domain()) {
    const Elem& got = table[x];
    const Elem want = nf_apply(f, x);
    if (got != want) {
      throw NotClassifiable("table is not the restriction of any normal form:"
                            " candidate " + to_string(f) + " gives "
                            + to_string(want) + " at " + to_string(x)
                            + ", table has " + to_string(got));
    }
  }
  return f;
}

Report scan_exclusions(Int k_max, Int m_max) {
  Report r;
  r.suite = "scan.layer-exclusions";
  r.grid = nf_grid_text(k_max, m_max) + "; images on " + window_text(8);
  r.note = "covers the classified normal forms only; exhaustiveness over"
           " arbitrary injective endomorphisms rests on the decomposition"
           " result, not on this scan";
  const auto win = enumerate(Window{8}, fam3());
  for (const NormalForm& f : nf_grid(k_max, m_max)) {
    bool hits[3] = {false, false, false};
    for (const Elem& x : win) {
      hits[nf_apply(f, x).ray.start] = true;
    }
    const auto layer_cx = [&f](Int p) {
      return Counterexample{"f=" + to_string(f),
                            "image meets layer [" + std::to_string(p) + ")",
                            "no window image has ray [" + std::to_string(p)
                                + ")"};
    };
    r.check(hits[2], [&] { return layer_cx(2); });
    r.check(hits[0], [&] { return layer_cx(0); });
    r.check(hits[1], [&] { return layer_cx(1); });
    const Elem e0 = nf_apply(f, kOne);
    r.check(e0.ray.start != 1, [&] {
      return Counterexample{"f=" + to_string(f),
                            "identity image avoids layer [1)",
                            "identity maps to " + to_string(e0)};
    });
  }
  return r;
}

namespace suites {

Report associativity(Int window_bound) {
  Report r;
  r.suite = "product.associativity";
  r.grid = "all triples from " + window_text(window_bound)
           + " over the 3-ray family";
  const auto win = enumerate(Window{window_bound}, fam3());
  for (const Elem& x : win) {
    for (const Elem& y : win) {
      const Elem xy = mul(x, y, fam3());
      for (const Elem& z : win) {
        const Elem lhs = mul(xy, z, fam3());
        const Elem rhs = mul(x, mul(y, z, fam3()), fam3());
        r.check(lhs == rhs, [&] {
          return Counterexample{"x=" + to_string(x) + " y=" + to_string(y)
                                    + " z=" + to_string(z),
                                "(xy)z=" + to_string(lhs),
                                "x(yz)=" + to_string(rhs)};
        });
      }
    }
  }
  return r;
}

Report identity_element(Int window_bound) {
  Report r;
  r.suite = "product.identity";
  r.grid = window_text(window_bound) + " over the canonical families of size"
           " 1..4";
  for (Int n = 1; n <= 4; ++n) {
    const Family fam = Family::canonical(n);
    for (const Elem& x : enumerate(Window{window_bound}, fam)) {
      const Elem left = mul(kOne, x, fam);
      const Elem right = mul(x, kOne, fam);
      r.check(left == x, [&] {
        return Counterexample{"1*x, x=" + to_string(x), to_string(x),
                              to_string(left)};
      });
      r.check(right == x, [&] {
        return Counterexample{"x*1, x=" + to_string(x), to_string(x),
                              to_string(right)};
      });
    }
  }
  return r;
}

Report inverse_axioms(Int axiom_bound, Int uniqueness_bound) {
  Report r;
  r.suite = "inverse.axioms";
  r.grid = "axioms on " + window_text(axiom_bound) + "; uniqueness of x^-1"
           " for x in " + window_text(uniqueness_bound) + " searched in "
           + window_text(axiom_bound);
  const auto win = enumerate(Window{axiom_bound}, fam3());
  for (const Elem& x : win) {
    const Elem xi = inv(x);
    const Elem a = mul(mul(x, xi, fam3()), x, fam3());
    const Elem b = mul(mul(xi, x, fam3()), xi, fam3());
    r.check(a == x, [&] {
      return Counterexample{"x=" + to_string(x), "x x^-1 x = " + to_string(x),
                            to_string(a)};
    });
    r.check(b == xi, [&] {
      return Counterexample{"x=" + to_string(x),
                            "x^-1 x x^-1 = " + to_string(xi), to_string(b)};
    });
  }
  for (const Elem& x : enumerate(Window{uniqueness_bound}, fam3())) {
    std::vector<Elem> matches;
    for (const Elem& y : win) {
      if (mul(mul(x, y, fam3()), x, fam3()) == x
          && mul(mul(y, x, fam3()), y, fam3()) == y) {
        matches.push_back(y);
      }
    }
    r.check(matches.size() == 1 && matches.front() == inv(x), [&] {
      std::string found;
      for (const Elem& y : matches) {
        found += (found.empty() ? "" : " ") + to_string(y);
      }
      return Counterexample{"x=" + to_string(x),
                            "unique inverse " + to_string(inv(x)),
                            "matches: " + found};
    });
  }
  return r;
}

Report natural_order_agreement(Int window_bound) {
  Report r;
  r.suite = "order.closed-vs-search";
  r.grid = "all pairs from " + window_text(window_bound)
           + " over the 3-ray family";
  const auto win = enumerate(Window{window_bound}, fam3());
  for (const Elem& a : win) {
    for (const Elem& b : win) {
      const bool closed = nat_leq(a, b, fam3());
      const bool searched = nat_leq_definitional(a, b, fam3());
      r.check(closed == searched, [&] {
        return Counterexample{"a=" + to_string(a) + " b=" + to_string(b),
                              "search says "
                                  + std::string(searched ? "true" : "false"),
                              "closed form says "
                                  + std::string(closed ? "true" : "false")};
      });
    }
  }
  // The two three-element chains that pin the order between the layers.
  const auto expect_leq = [&](const Elem& a, const Elem& b) {
    r.check(nat_leq(a, b, fam3()), [&] {
      return Counterexample{"a=" + to_string(a) + " b=" + to_string(b),
                            "a <= b", "not related"};
    });
  };
  expect_leq(Elem{0, 0, Ray{2}}, Elem{0, 0, Ray{1}});
  expect_leq(Elem{0, 0, Ray{1}}, Elem{0, 0, Ray{0}});
  expect_leq(Elem{2, 2, Ray{0}}, Elem{1, 1, Ray{1}});
  expect_leq(Elem{1, 1, Ray{1}}, Elem{0, 0, Ray{2}});
  return r;
}

Report natural_order_is_partial_order(Int window_bound) {
  Report r;
  r.suite = "order.partial-order";
  r.grid = "reflexivity, antisymmetry and transitivity on "
           + window_text(window_bound) + " over the 3-ray family";
  const auto win = enumerate(Window{window_bound}, fam3());
  const std::size_t n = win.size();
  std::vector<bool> leq(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a * n + b] = nat_leq(win[a], win[b], fam3());
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    r.check(leq[a * n + a], [&] {
      return Counterexample{"x=" + to_string(win[a]), "x <= x", "false"};
    });
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool anti = !(leq[a * n + b] && leq[b * n + a]) || a == b;
      r.check(anti, [&] {
        return Counterexample{"x=" + to_string(win[a])
                                  + " y=" + to_string(win[b]),
                              "x <= y <= x implies x = y",
                              "two distinct comparable elements"};
      });
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const bool trans = !(leq[a * n + b] && leq[b * n + c])
                           || leq[a * n + c];
        r.check(trans, [&] {
          return Counterexample{"x=" + to_string(win[a]) + " y="
                                    + to_string(win[b]) + " z="
                                    + to_string(win[c]),
                                "x <= y <= z implies x <= z", "broken"};
        });
      }
    }
  }
  return r;
}

Report d_class_partition(Int window_bound) {
  Report r;
  r.suite = "dclass.partition";
  r.grid = window_text(window_bound) + " over the canonical families of size"
           " 1..4; negative witness search on " + window_text(4) + " pairs";
  for (Int n = 1; n <= 4; ++n) {
    const Family fam = Family::canonical(n);
    const auto win = enumerate(Window{window_bound}, fam);
    // Equivalence and the connecting-witness construction.
    for (const Elem& a : win) {
      r.check(d_related(a, a), [&] {
        return Counterexample{"x=" + to_string(a), "x D x", "false"};
      });
      for (const Elem& b : win) {
        r.check(d_related(a, b) == d_related(b, a), [&] {
          return Counterexample{"x=" + to_string(a) + " y=" + to_string(b),
                                "symmetric", "asymmetric"};
        });
        if (d_related(a, b)) {
          const Elem z{a.i, b.i, a.ray};
          const bool ok = mul(z, inv(z), fam) == mul(a, inv(a), fam)
                          && mul(inv(z), z, fam) == mul(b, inv(b), fam);
          r.check(ok, [&] {
            return Counterexample{"x=" + to_string(a) + " y=" + to_string(b),
                                  "witness z=(x.i, y.i, ray) connects the"
                                  " domain idempotents",
                                  "witness " + to_string(z) + " fails"};
          });
        }
      }
    }
    // Transitivity is ray-equality transitivity; scan triples anyway.
    for (const Elem& a : win) {
      for (const Elem& b : win) {
        if (!d_related(a, b)) {
          continue;
        }
        for (const Elem& c : win) {
          r.check(!d_related(b, c) || d_related(a, c), [&] {
            return Counterexample{"x=" + to_string(a) + " y=" + to_string(b)
                                      + " z=" + to_string(c),
                                  "transitive", "broken"};
          });
        }
      }
    }
    // Exactly n classes.
    std::set<Int> rays;
    for (const Elem& a : win) {
      rays.insert(a.ray.start);
    }
    r.check(static_cast<Int>(rays.size()) == n, [&] {
      return Counterexample{"family of size " + std::to_string(n),
                            std::to_string(n) + " classes",
                            std::to_string(rays.size()) + " classes"};
    });
  }
  // Unrelated pairs admit no connecting witness: exhaustive search.
  {
    const auto small = enumerate(Window{2}, fam3());
    const auto search = enumerate(Window{4}, fam3());
    for (const Elem& a : small) {
      for (const Elem& b : small) {
        if (d_related(a, b)) {
          continue;
        }
        bool found = false;
        for (const Elem& z : search) {
          if (mul(z, inv(z), fam3()) == mul(a, inv(a), fam3())
              && mul(inv(z), z, fam3()) == mul(b, inv(b), fam3())) {
            found = true;
            break;
          }
        }
        r.check(!found, [&] {
          return Counterexample{"x=" + to_string(a) + " y=" + to_string(b),
                                "no connecting witness", "witness found"};
        });
      }
    }
  }
  return r;
}

Report shift_map_isomorphism(Int s, Int t, Int window_bound) {
  Report r;
  r.suite = "shift-map.isomorphism[" + std::to_string(s) + ","
            + std::to_string(t) + "]";
  r.grid = "rays [" + std::to_string(s) + ")..[" + std::to_string(t)
           + ") onto the canonical " + std::to_string(t - s + 1)
           + "-ray family; pairs from " + window_text(window_bound);
  std::vector<Int> starts;
  for (Int a = s; a <= t; ++a) {
    starts.push_back(a);
  }
  const Family src = make_family(starts);
  const Family dst = Family::canonical(t - s + 1);
  const auto win = enumerate(Window{window_bound}, src);
  for (const Elem& a : win) {
    for (const Elem& b : win) {
      const Elem lhs = shift_map(mul(a, b, src), s);
      const Elem rhs = mul(shift_map(a, s), shift_map(b, s), dst);
      r.check(lhs == rhs, [&] {
        return Counterexample{"a=" + to_string(a) + " b=" + to_string(b),
                              "phi(a)phi(b)=" + to_string(rhs),
                              "phi(ab)=" + to_string(lhs)};
      });
    }
  }
  // Bijective onto the target window.
  std::vector<Elem> image;
  image.reserve(win.size());
  for (const Elem& a : win) {
    image.push_back(shift_map(a, s));
  }
  std::sort(image.begin(), image.end());
  check_set_equal(r, image, enumerate(Window{window_bound}, dst),
                  "image of the window under the relabeling");
  // D-class count of the band.
  std::set<Int> rays;
  for (const Elem& a : win) {
    rays.insert(a.ray.start);
  }
  r.check(static_cast<Int>(rays.size()) == t - s + 1, [&] {
    return Counterexample{"band rays", std::to_string(t - s + 1) + " classes",
                          std::to_string(rays.size()) + " classes"};
  });
  return r;
}

Report corner_membership(Int window_bound, Int m_max) {
  Report r;
  r.suite = "corner.membership";
  r.grid = window_text(window_bound) + ", m in [0," + std::to_string(m_max)
           + "]";
  const auto win = enumerate(Window{window_bound}, fam3());
  for (Int m = 0; m <= m_max; ++m) {
    const Elem e{m, m, Ray{0}};
    for (const Elem& x : win) {
      const Elem sandwich = mul(mul(e, x, fam3()), e, fam3());
      const bool fixed = sandwich == x;
      r.check(corner_contains(x, m) == fixed, [&] {
        return Counterexample{"x=" + to_string(x) + " m=" + std::to_string(m),
                              std::string("sandwich fixed point: ")
                                  + (fixed ? "true" : "false"),
                              std::string("corner_contains: ")
                                  + (corner_contains(x, m) ? "true"
                                                           : "false")};
      });
    }
  }
  return r;
}

Report corner_set_equality(Int window_bound) {
  Report r;
  r.suite = "corner.set-equality";
  r.grid = "sandwich images of " + window_text(window_bound)
           + ", m in {1,2,3}";
  const auto win = enumerate(Window{window_bound}, fam3());
  for (Int m = 1; m <= 3; ++m) {
    const Elem e{m, m, Ray{0}};
    std::vector<Elem> image;
    image.reserve(win.size());
    for (const Elem& x : win) {
      image.push_back(mul(mul(e, x, fam3()), e, fam3()));
    }
    image = sorted_unique(std::move(image));
    for (const Elem& a : image) {
      r.check(a.i >= m && a.j >= m, [&] {
        return Counterexample{"m=" + std::to_string(m),
                              "sandwich image inside the corner",
                              to_string(a) + " escapes"};
      });
      r.check(a.i <= window_bound + 2 * m && a.j <= window_bound + 2 * m,
              [&] {
                return Counterexample{"m=" + std::to_string(m),
                                      "image coordinates within "
                                          + window_text(window_bound + 2 * m),
                                      to_string(a) + " escapes"};
              });
      const Elem again = mul(mul(e, a, fam3()), e, fam3());
      r.check(again == a, [&] {
        return Counterexample{"m=" + std::to_string(m),
                              "image elements are sandwich-fixed",
                              to_string(a) + " moves to " + to_string(again)};
      });
    }
    // Within the window, the image is exactly the i,j >= m region, which is
    // exactly the m-fold coordinate-shift image of the shrunken window.
    std::vector<Elem> in_window;
    for (const Elem& a : image) {
      if (a.i <= window_bound && a.j <= window_bound) {
        in_window.push_back(a);
      }
    }
    std::vector<Elem> region;
    for (const Elem& x : win) {
      if (x.i >= m && x.j >= m) {
        region.push_back(x);
      }
    }
    check_set_equal(r, in_window, region,
                    "m=" + std::to_string(m)
                        + ": sandwich image within the window vs corner"
                          " region");
    std::vector<Elem> shifted;
    for (const Elem& x : enumerate(Window{window_bound - m}, fam3())) {
      shifted.push_back(shift_pow(x, m));
    }
    check_set_equal(r, region, shifted,
                    "m=" + std::to_string(m)
                        + ": corner region vs m-fold shift image");
  }
  return r;
}

Report ray_inductivity(Int probe_bound) {
  Report r;
  r.suite = "ray.inductive";
  r.grid = "starts 0..5, probes 0.." + std::to_string(probe_bound);
  for (Int start = 0; start <= 5; ++start) {
    const Ray ray{start};
    for (Int x = 0; x <= probe_bound; ++x) {
      r.check(!ray.contains(x) || ray.contains(x + 1), [&] {
        return Counterexample{"ray [" + std::to_string(start) + "), x="
                                  + std::to_string(x),
                              "successor stays in the ray", "it does not"};
      });
    }
  }
  return r;
}

Report generator_homomorphisms(Int pair_bound) {
  Report r;
  r.suite = "generators.homomorphism";
  r.grid = "shift and reversal over the canonical families of size 2..5;"
           " pairs from " + window_text(pair_bound);
  for (Int n = 2; n <= 5; ++n) {
    const Family fam = Family::canonical(n);
    const auto win = enumerate(Window{pair_bound}, fam);
    struct Gen {
      std::string name;
      std::function<Elem(const Elem&)> map;
    };
    const Gen gens[] = {
        {"shift", [](const Elem& x) { return apply_shift(x); }},
        {"reversal",
         [n](const Elem& x) { return apply_layer_reversal(x, n); }},
    };
    for (const Gen& g : gens) {
      for (const Elem& a : win) {
        for (const Elem& b : win) {
          const Elem lhs = g.map(mul(a, b, fam));
          const Elem rhs = mul(g.map(a), g.map(b), fam);
          r.check(lhs == rhs, [&] {
            return Counterexample{g.name + " n=" + std::to_string(n) + " a="
                                      + to_string(a) + " b=" + to_string(b),
                                  "f(a)f(b)=" + to_string(rhs),
                                  "f(ab)=" + to_string(lhs)};
          });
        }
      }
      std::vector<Elem> image;
      image.reserve(win.size());
      for (const Elem& a : win) {
        image.push_back(g.map(a));
      }
      std::sort(image.begin(), image.end());
      const bool distinct =
          std::adjacent_find(image.begin(), image.end()) == image.end();
      r.check(distinct, [&] {
        return Counterexample{g.name + " n=" + std::to_string(n),
                              "injective on the window", "collision found"};
      });
    }
  }
  return r;
}

Report reversal_identities(Int window_bound) {
  Report r;
  r.suite = "reversal.identities";
  r.grid = "canonical families of size 2..5 on " + window_text(window_bound);
  for (Int n = 2; n <= 5; ++n) {
    const Family fam = Family::canonical(n);
    for (const Elem& x : enumerate(Window{window_bound}, fam)) {
      const Elem twice = apply_layer_reversal(apply_layer_reversal(x, n), n);
      const Elem shifted = shift_pow(x, n - 1);
      r.check(twice == shifted, [&] {
        return Counterexample{"n=" + std::to_string(n) + " x=" + to_string(x),
                              "double reversal = " + std::to_string(n - 1)
                                  + " shifts: " + to_string(shifted),
                              to_string(twice)};
      });
      const Elem rs = apply_shift(apply_layer_reversal(x, n));
      const Elem sr = apply_layer_reversal(apply_shift(x), n);
      r.check(rs == sr, [&] {
        return Counterexample{"n=" + std::to_string(n) + " x=" + to_string(x),
                              "reversal and shift commute: " + to_string(sr),
                              to_string(rs)};
      });
    }
  }
  return r;
}

Report dilation_relations(Int k_max, Int window_bound) {
  if (k_max < 1) {
    throw InvalidParameter("dilation grid needs k_max >= 1");
  }
  Report r;
  r.suite = "dilation.relations";
  r.grid = "k in [1," + std::to_string(k_max) + "] on "
           + window_text(window_bound);
  const auto win = enumerate(Window{window_bound}, fam3());
  for (Int k = 1; k <= k_max; ++k) {
    for (const Elem& x : win) {
      // shift then dilation = dilation then k shifts
      const Elem l1 = apply_dilation(apply_shift(x), k);
      const Elem r1 = shift_pow(apply_dilation(x, k), k);
      r.check(l1 == r1, [&] {
        return Counterexample{"k=" + std::to_string(k) + " x=" + to_string(x),
                              "shift;dilation = dilation;shift^k: "
                                  + to_string(r1),
                              to_string(l1)};
      });
      // reversal;dilation;reversal = dilation;shift^(k+1)
      const Elem l2 = rev3(apply_dilation(rev3(x), k));
      const Elem r2 = shift_pow(apply_dilation(x, k), k + 1);
      r.check(l2 == r2, [&] {
        return Counterexample{"k=" + std::to_string(k) + " x=" + to_string(x),
                              "rev;dil;rev = dil;shift^(k+1): "
                                  + to_string(r2),
                              to_string(l2)};
      });
      // reversal;dilation = dilation;reversal;shift^(k-1)
      const Elem l3 = apply_dilation(rev3(x), k);
      const Elem r3 = shift_pow(rev3(apply_dilation(x, k)), k - 1);
      r.check(l3 == r3, [&] {
        return Counterexample{"k=" + std::to_string(k) + " x=" + to_string(x),
                              "rev;dil = dil;rev;shift^(k-1): "
                                  + to_string(r3),
                              to_string(l3)};
      });
    }
    // The same three relations through the symbolic composition.
    const NormalForm dil = NormalForm::dilation(k);
    const NormalForm rev = NormalForm::reversal();
    const NormalForm sh = NormalForm::shift();
    const auto sym_eq = [&](const NormalForm& a, const NormalForm& b,
                            const std::string& what) {
      r.check(a == b, [&] {
        return Counterexample{"k=" + std::to_string(k) + " " + what,
                              to_string(b), to_string(a)};
      });
    };
    sym_eq(nf_compose(sh, dil), nf_compose(dil, NormalForm{1, k, 0}),
           "symbolic shift;dilation");
    sym_eq(nf_compose(nf_compose(rev, dil), rev),
           nf_compose(dil, NormalForm{1, k + 1, 0}),
           "symbolic rev;dil;rev");
    sym_eq(nf_compose(rev, dil),
           nf_compose(nf_compose(dil, rev), NormalForm{1, k - 1, 0}),
           "symbolic rev;dil");
  }
  return r;
}

Report compose_soundness(Int k_max, Int m_max, Int window_bound) {
  Report r;
  r.suite = "compose.soundness";
  r.grid = nf_grid_text(k_max, m_max) + " squared, pointwise on "
           + window_text(window_bound);
  const auto grid = nf_grid(k_max, m_max);
  const auto win = enumerate(Window{window_bound}, fam3());
  for (const NormalForm& f : grid) {
    for (const NormalForm& g : grid) {
      const NormalForm h = nf_compose(f, g);
      for (const Elem& x : win) {
        const Elem pointwise = nf_apply(g, nf_apply(f, x));
        const Elem symbolic = nf_apply(h, x);
        r.check(symbolic == pointwise, [&] {
          return Counterexample{"f=" + to_string(f) + " g=" + to_string(g)
                                    + " x=" + to_string(x),
                                "pointwise " + to_string(pointwise),
                                "symbolic " + to_string(h) + " gives "
                                    + to_string(symbolic)};
        });
      }
    }
  }
  return r;
}

Report compose_associativity(Int k_max, Int m_max) {
  Report r;
  r.suite = "compose.associativity";
  r.grid = nf_grid_text(k_max, m_max) + " cubed, symbolic";
  const auto grid = nf_grid(k_max, m_max);
  for (const NormalForm& f : grid) {
    for (const NormalForm& g : grid) {
      const NormalForm fg = nf_compose(f, g);
      for (const NormalForm& h : grid) {
        const NormalForm lhs = nf_compose(fg, h);
        const NormalForm rhs = nf_compose(f, nf_compose(g, h));
        r.check(lhs == rhs, [&] {
          return Counterexample{"f=" + to_string(f) + " g=" + to_string(g)
                                    + " h=" + to_string(h),
                                "(fg)h=" + to_string(lhs),
                                "f(gh)=" + to_string(rhs)};
        });
      }
    }
  }
  return r;
}

Report endomorphism_property(Int k_max, Int m_max, Int pair_bound) {
  Report r;
  r.suite = "normal-form.endomorphism";
  r.grid = nf_grid_text(k_max, m_max) + ", pairs from "
           + window_text(pair_bound);
  const auto grid = nf_grid(k_max, m_max);
  const auto win = enumerate(Window{pair_bound}, fam3());
  for (const NormalForm& f : grid) {
    for (const Elem& x : win) {
      const Elem fx = nf_apply(f, x);
      for (const Elem& y : win) {
        const Elem lhs = nf_apply(f, mul(x, y, fam3()));
        const Elem rhs = mul(fx, nf_apply(f, y), fam3());
        r.check(lhs == rhs, [&] {
          return Counterexample{"f=" + to_string(f) + " x=" + to_string(x)
                                    + " y=" + to_string(y),
                                "f(x)f(y)=" + to_string(rhs),
                                "f(xy)=" + to_string(lhs)};
        });
      }
    }
  }
  return r;
}

Report normal_form_injectivity(Int k_max, Int m_max, Int window_bound) {
  Report r;
  r.suite = "normal-form.injectivity";
  r.grid = nf_grid_text(k_max, m_max) + " on " + window_text(window_bound);
  const auto win = enumerate(Window{window_bound}, fam3());
  for (const NormalForm& f : nf_grid(k_max, m_max)) {
    std::map<Elem, Elem> first_key;
    bool ok = true;
    std::string clash;
    for (const Elem& x : win) {
      const Elem fx = nf_apply(f, x);
      const auto [it, inserted] = first_key.try_emplace(fx, x);
      if (!inserted && ok) {
        ok = false;
        clash = to_string(it->second) + " and " + to_string(x) + " map to "
                + to_string(fx);
      }
    }
    r.check(ok, [&] {
      return Counterexample{"f=" + to_string(f), "injective on the window",
                            clash};
    });
  }
  return r;
}

Report exponent_regression(Int k_max, Int m_max) {
  Report r;
  r.suite = "compose.exponent-regression";
  r.grid = nf_grid_text(k_max, m_max) + " squared, trailing-reversal cases";
  r.note = "pins the shift exponents k2*m1+k2+m2-1 (w=1,w=0) and"
           " k2*m1+k2+m2+1 (w=1,w=1); the naive bookkeeping without the -1"
           " overshoots pointwise evaluation by exactly one shift";
  // Double reversal collapses to two shifts, not three.
  r.check(nf_compose(NormalForm::reversal(), NormalForm::reversal())
              == NormalForm{1, 2, 0},
          [&] {
            return Counterexample{
                "reversal twice", "a1.l2.w0",
                to_string(nf_compose(NormalForm::reversal(),
                                     NormalForm::reversal()))};
          });
  for (Int k1 = 1; k1 <= k_max; ++k1) {
    for (Int m1 = 0; m1 <= m_max; ++m1) {
      for (Int k2 = 1; k2 <= k_max; ++k2) {
        for (Int m2 = 0; m2 <= m_max; ++m2) {
          const NormalForm f{k1, m1, 1};
          const std::string label = "k1=" + std::to_string(k1) + " m1="
                                    + std::to_string(m1) + " k2="
                                    + std::to_string(k2) + " m2="
                                    + std::to_string(m2);
          {
            // w2 = 0: pointwise identity image is (t, t, [2)) with t the
            // true exponent.
            const NormalForm g{k2, m2, 0};
            const Elem y = nf_apply(g, nf_apply(f, kOne));
            const Int naive = k2 * m1 + k2 + m2;
            r.check(y.i == y.j && y.ray.start == 2, [&] {
              return Counterexample{label, "identity image (t,t,[2))",
                                    to_string(y)};
            });
            r.check(naive == y.i + 1, [&] {
              return Counterexample{label + " (w2=0)",
                                    "naive exponent = pointwise + 1",
                                    "naive " + std::to_string(naive)
                                        + ", pointwise "
                                        + std::to_string(y.i)};
            });
            r.check(nf_compose(f, g).m == y.i, [&] {
              return Counterexample{label + " (w2=0)",
                                    "implemented exponent "
                                        + std::to_string(y.i),
                                    std::to_string(nf_compose(f, g).m)};
            });
          }
          {
            // w2 = 1: pointwise identity image is (t, t, [0)).
            const NormalForm g{k2, m2, 1};
            const Elem y = nf_apply(g, nf_apply(f, kOne));
            const Int naive = k2 * m1 + k2 + m2 + 2;
            r.check(y.i == y.j && y.ray.start == 0, [&] {
              return Counterexample{label, "identity image (t,t,[0))",
                                    to_string(y)};
            });
            r.check(naive == y.i + 1, [&] {
              return Counterexample{label + " (w2=1)",
                                    "naive exponent = pointwise + 1",
                                    "naive " + std::to_string(naive)
                                        + ", pointwise "
                                        + std::to_string(y.i)};
            });
            r.check(nf_compose(f, g).m == y.i, [&] {
              return Counterexample{label + " (w2=1)",
                                    "implemented exponent "
                                        + std::to_string(y.i),
                                    std::to_string(nf_compose(f, g).m)};
            });
          }
        }
      }
    }
  }
  return r;
}

Report semidirect_isomorphism(Int k_max, Int m_max) {
  Report r;
  r.suite = "semidirect.isomorphism";
  r.grid = "k in [1," + std::to_string(k_max) + "], m in [0,"
           + std::to_string(m_max) + "], w = 0";
  std::vector<NormalForm> grid;
  for (Int k = 1; k <= k_max; ++k) {
    for (Int m = 0; m <= m_max; ++m) {
      grid.push_back(NormalForm{k, m, 0});
    }
  }
  for (const NormalForm& f : grid) {
    for (const NormalForm& g : grid) {
      const NormalForm fg = nf_compose(f, g);
      const SDPair lhs = nf_to_sd(fg);
      const SDPair rhs = sd_mul(nf_to_sd(f), nf_to_sd(g));
      r.check(lhs == rhs, [&] {
        return Counterexample{"f=" + to_string(f) + " g=" + to_string(g),
                              "pair product " + to_string(rhs),
                              "projected composition " + to_string(lhs)};
      });
      // Entry-for-entry: the pair table lifts back to the composition table.
      const NormalForm lifted{rhs.k, rhs.m, 0};
      r.check(fg == lifted, [&] {
        return Counterexample{"f=" + to_string(f) + " g=" + to_string(g),
                              "lifted pair " + to_string(lifted),
                              "composition " + to_string(fg)};
      });
    }
  }
  // Bijective on the grid: distinct forms project to distinct pairs and the
  // projection covers the whole pair grid.
  std::set<SDPair> pairs;
  for (const NormalForm& f : grid) {
    pairs.insert(nf_to_sd(f));
  }
  r.check(pairs.size() == grid.size(), [&] {
    return Counterexample{"projection", "injective on the grid",
                          std::to_string(pairs.size()) + " images for "
                              + std::to_string(grid.size()) + " forms"};
  });
  bool covers = true;
  for (Int k = 1; k <= k_max && covers; ++k) {
    for (Int m = 0; m <= m_max && covers; ++m) {
      covers = pairs.count(SDPair{k, m}) > 0;
    }
  }
  r.check(covers, [&] {
    return Counterexample{"projection", "covers the pair grid",
                          "a pair is missing"};
  });
  return r;
}

Report normal_form_separation(Int k_max, Int m_max) {
  Report r;
  r.suite = "normal-form.separation";
  r.grid = nf_grid_text(k_max, m_max)
           + "; evaluation at (1,0,0) and (0,0,0)";
  std::map<std::pair<Elem, Elem>, NormalForm> seen;
  const Elem probe{1, 0, Ray{0}};
  for (const NormalForm& f : nf_grid(k_max, m_max)) {
    const auto key = std::make_pair(nf_apply(f, probe), nf_apply(f, kOne));
    const auto [it, inserted] = seen.try_emplace(key, f);
    r.check(inserted, [&] {
      return Counterexample{"f=" + to_string(f),
                            "separated from " + to_string(it->second),
                            "both evaluate to (" + to_string(key.first) + ", "
                                + to_string(key.second) + ")"};
    });
  }
  return r;
}

Report decompose_roundtrip(Int k_max, Int m_max, Int domain_bound) {
  if (domain_bound < 2) {
    throw DomainTooSmall("round-trip tables need a domain bound of at least"
                         " 2");
  }
  Report r;
  r.suite = "decompose.roundtrip";
  r.grid = nf_grid_text(k_max, m_max) + ", tables on "
           + window_text(domain_bound);
  for (const NormalForm& f : nf_grid(k_max, m_max)) {
    std::string failure;
    bool ok = false;
    try {
      const NormalForm g = decompose(tabulate(f, domain_bound));
      ok = g == f;
      if (!ok) {
        failure = "recovered " + to_string(g);
      }
    } catch (const Error& e) {
      failure = e.what();
    }
    r.check(ok, [&] {
      return Counterexample{"f=" + to_string(f), "round-trips", failure};
    });
  }
  // A table that drops the identity into the middle layer must be rejected.
  const TabulatedEndo bad = tabulate(
      [](const Elem& x) {
        return x == kOne ? Elem{5, 5, Ray{1}} : x;
      },
      std::max<Int>(domain_bound, 2));
  bool rejected = false;
  try {
    decompose(bad);
  } catch (const MiddleLayerIdentityImage&) {
    rejected = true;
  } catch (const Error&) {
  }
  r.check(rejected, [&] {
    return Counterexample{"identity -> (5,5,[1))",
                          "rejected as a middle-layer identity image",
                          "not rejected"};
  });
  return r;
}

Report right_cancellation(Int k_max, Int window_bound) {
  Report r;
  r.suite = "cancellation.right";
  r.grid = "k in [1," + std::to_string(k_max) + "] on "
           + window_text(window_bound) + "; h = two shifts";
  const auto win = enumerate(Window{window_bound}, fam3());
  // h is injective, so a;h = b;h forces a = b. Exercised on the derivation
  // that rewrites rev;dil through dil;rev;shift^(k-1).
  {
    std::vector<Elem> image;
    image.reserve(win.size());
    for (const Elem& x : win) {
      image.push_back(shift_pow(x, 2));
    }
    std::sort(image.begin(), image.end());
    r.check(std::adjacent_find(image.begin(), image.end()) == image.end(),
            [&] {
              return Counterexample{"h = two shifts",
                                    "injective on the window",
                                    "collision found"};
            });
  }
  for (Int k = 1; k <= k_max; ++k) {
    const auto a = [&](const Elem& x) { return apply_dilation(rev3(x), k); };
    const auto b = [&](const Elem& x) {
      return shift_pow(rev3(apply_dilation(x, k)), k - 1);
    };
    for (const Elem& x : win) {
      const Elem ah = shift_pow(a(x), 2);
      const Elem bh = shift_pow(b(x), 2);
      r.check(ah == bh, [&] {
        return Counterexample{"k=" + std::to_string(k) + " x=" + to_string(x),
                              "a;h = b;h at x: " + to_string(bh),
                              to_string(ah)};
      });
      r.check(a(x) == b(x), [&] {
        return Counterexample{"k=" + std::to_string(k) + " x=" + to_string(x),
                              "cancelled: a = b at x: " + to_string(b(x)),
                              to_string(a(x))};
      });
    }
  }
  return r;
}

}  // namespace suites

std::vector<Report> identity_suite(const SuiteParams& params) {
  const auto K = [&](Int pinned) { return params.k_max.value_or(pinned); };
  const auto M = [&](Int pinned) { return params.m_max.value_or(pinned); };
  const auto N = [&](Int pinned) { return params.window.value_or(pinned); };
  std::vector<Report> out;
  out.push_back(suites::compose_soundness(K(4), M(4), N(6)));
  out.push_back(suites::compose_associativity(K(4), M(4)));
  out.push_back(suites::endomorphism_property(K(4), M(4), N(6)));
  out.push_back(suites::normal_form_injectivity(K(4), M(4), N(10)));
  out.push_back(suites::generator_homomorphisms(N(8)));
  out.push_back(suites::reversal_identities(N(12)));
  out.push_back(suites::dilation_relations(K(5), N(10)));
  out.push_back(suites::exponent_regression(K(4), M(4)));
  out.push_back(suites::semidirect_isomorphism(K(6), M(6)));
  out.push_back(suites::normal_form_separation(K(8), M(8)));
  out.push_back(suites::decompose_roundtrip(K(6), M(5), N(16)));
  out.push_back(suites::right_cancellation(K(5), N(10)));
  out.push_back(scan_exclusions(K(6), M(5)));
  out.push_back(suites::corner_set_equality(N(12)));
  return out;
}

std::vector<Report> semigroup_suite(const SuiteParams& params) {
  const auto N = [&](Int pinned) { return params.window.value_or(pinned); };
  std::vector<Report> out;
  out.push_back(suites::associativity(N(6)));
  out.push_back(suites::identity_element(N(6)));
  out.push_back(suites::inverse_axioms(N(8), N(8) / 2));
  out.push_back(suites::natural_order_agreement(N(8)));
  out.push_back(suites::natural_order_is_partial_order(N(6)));
  out.push_back(suites::d_class_partition(N(6)));
  out.push_back(suites::shift_map_isomorphism(1, 2, N(8)));
  out.push_back(suites::shift_map_isomorphism(0, 1, N(8)));
  out.push_back(suites::shift_map_isomorphism(1, 1, N(8)));
  out.push_back(suites::corner_membership(N(12), 4));
  out.push_back(suites::ray_inductivity(64));
  return out;
}

}  // namespace bomega
