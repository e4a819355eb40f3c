#include <set>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "bomega/io.hpp"
#include "bomega/verify.hpp"

using namespace bomega;

namespace {

const Family& F3() {
  static const Family fam = Family::canonical(3);
  return fam;
}

Elem E(Int i, Int j, Int p) { return Elem{i, j, Ray{p}}; }

Elem transpose(const Elem& x) { return Elem{x.j, x.i, x.ray}; }

}  // namespace

TEST_CASE("tabulate") {
  const TabulatedEndo id = tabulate(NormalForm::identity(), 2);
  CHECK(id.domain().size() == 27);
  for (const Elem& x : id.domain()) {
    CHECK(id[x] == x);
  }

  const TabulatedEndo sh = tabulate(NormalForm::shift(), 1);
  CHECK(sh.domain().size() == 12);
  for (const Elem& x : sh.domain()) {
    CHECK(sh[x] == E(x.i + 1, x.j + 1, x.ray.start));
  }

  const TabulatedEndo dil = tabulate(NormalForm::dilation(2), 1);
  CHECK(dil[E(0, 0, 2)] == E(1, 1, 2));
  CHECK(dil[E(1, 0, 0)] == E(2, 0, 0));

  CHECK_THROWS_AS(id[E(5, 0, 0)], InvalidParameter);
  CHECK_THROWS_AS(tabulate(NormalForm::identity(), -1), InvalidParameter);
}

TEST_CASE("homomorphism verification") {
  CHECK(verify_homomorphism(tabulate(NormalForm::shift(), 12), 6).pass());

  // Constant-to-idempotent maps are homomorphisms.
  const TabulatedEndo constant =
      tabulate([](const Elem&) { return E(0, 0, 0); }, 8);
  CHECK(verify_homomorphism(constant, 4).pass());

  // The transpose map is not; freeze one violating pair.
  const TabulatedEndo t = tabulate(transpose, 8);
  const Report r = verify_homomorphism(t, 4);
  CHECK_FALSE(r.pass());
  CHECK(r.failures > 0);
  CHECK(!r.counterexamples.empty());
  const Elem x = E(1, 0, 0);
  const Elem y = E(0, 1, 0);
  CHECK(t[mul(x, y, F3())] != mul(t[x], t[y], F3()));
  CHECK(t[mul(x, y, F3())] == E(1, 1, 0));
  CHECK(mul(t[x], t[y], F3()) == E(0, 0, 0));

  CHECK_THROWS_AS(verify_homomorphism(tabulate(NormalForm::identity(), 4), 3),
                  DomainTooSmall);
}

TEST_CASE("injectivity verification") {
  CHECK(verify_injective(tabulate(NormalForm::reversal(), 8)).pass());
  CHECK(verify_injective(tabulate(nf_make(3, 2, 1), 8)).pass());
  const TabulatedEndo constant =
      tabulate([](const Elem&) { return E(0, 0, 0); }, 4);
  const Report r = verify_injective(constant);
  CHECK_FALSE(r.pass());
  CHECK(r.failures == constant.domain().size() - 1);
}

TEST_CASE("decomposition recovers the tabulated form") {
  for (Int k = 1; k <= 5; ++k) {
    for (Int m = 0; m <= 5; ++m) {
      for (Int w = 0; w <= 1; ++w) {
        const NormalForm f{k, m, w};
        CHECK(decompose(tabulate(f, 16)) == f);
      }
    }
  }
  CHECK(decompose(tabulate(NormalForm::identity(), 4))
        == NormalForm::identity());
  CHECK(decompose(tabulate(NormalForm::reversal(), 8))
        == NormalForm::reversal());
}

TEST_CASE("decomposition rejections") {
  // Identity image in the middle layer.
  const TabulatedEndo mid = tabulate(
      [](const Elem& x) { return x == E(0, 0, 0) ? E(5, 5, 1) : x; }, 4);
  CHECK_THROWS_AS(decompose(mid), MiddleLayerIdentityImage);

  // Transposing flips the probe element, so the derived factor is negative.
  CHECK_THROWS_AS(decompose(tabulate(transpose, 4)), NonPositiveK);

  // Passes the probes but is not the restriction of any normal form.
  const TabulatedEndo mangled = tabulate(
      [](const Elem& x) { return x == E(3, 2, 1) ? E(9, 9, 2) : x; }, 4);
  CHECK_THROWS_AS(decompose(mangled), NotClassifiable);

  // Identity image not idempotent.
  const TabulatedEndo skew = tabulate(
      [](const Elem& x) { return x == E(0, 0, 0) ? E(1, 2, 0) : x; }, 4);
  CHECK_THROWS_AS(decompose(skew), NotClassifiable);

  // Derived dilation factor below 1.
  const TabulatedEndo squash = tabulate(
      [](const Elem& x) { return x == E(1, 0, 0) ? E(0, 0, 0) : x; }, 4);
  CHECK_THROWS_AS(decompose(squash), NonPositiveK);

  CHECK_THROWS_AS(decompose(tabulate(NormalForm::identity(), 1)),
                  DomainTooSmall);
}

TEST_CASE("layer exclusion scan") {
  const Report full = scan_exclusions(6, 5);
  CHECK(full.pass());
  CHECK(full.checks == 288);  // 72 forms, 4 checks each
  CHECK_FALSE(full.note.empty());

  const Report tiny = scan_exclusions(1, 0);
  CHECK(tiny.pass());
  CHECK(tiny.checks == 8);  // identity and the reversal only

  CHECK_THROWS_AS(scan_exclusions(0, 5), InvalidParameter);
}

TEST_CASE("report truncation and JSON shape") {
  const Report r = verify_homomorphism(tabulate(transpose, 12), 6);
  CHECK_FALSE(r.pass());
  CHECK(r.failures > Report::kMaxCounterexamples);
  CHECK(r.counterexamples.size() == Report::kMaxCounterexamples);

  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "table.homomorphism");
  CHECK(j["status"] == "fail");
  CHECK(j["checks"].get<std::uint64_t>() == r.checks);
  CHECK(j["failures"].get<std::uint64_t>() == r.failures);
  CHECK(j["counterexamples"].size() == Report::kMaxCounterexamples);
  CHECK(j["counterexamples"][0].contains("inputs"));
  CHECK(j["counterexamples"][0].contains("expected"));
  CHECK(j["counterexamples"][0].contains("actual"));

  const Report ok = verify_injective(tabulate(NormalForm::shift(), 3));
  const auto jo = nlohmann::json::parse(ok.to_json());
  CHECK(jo["status"] == "pass");
  CHECK(jo["counterexamples"].empty());
}

TEST_CASE("bundled suites pass and are deterministic") {
  const auto first = identity_suite();
  const auto second = identity_suite();
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].pass());
    CHECK(first[i].to_json() == second[i].to_json());
  }
  std::set<std::string> names;
  for (const Report& r : first) {
    names.insert(r.suite);
  }
  CHECK(names.size() == first.size());

  for (const Report& r : semigroup_suite()) {
    CHECK(r.pass());
  }
}

TEST_CASE("suite grid overrides") {
  SuiteParams params;
  params.k_max = 2;
  params.m_max = 1;
  params.window = 4;
  for (const Report& r : identity_suite(params)) {
    CHECK(r.pass());
  }
  // A window too small for decomposition is a parameter error.
  SuiteParams tiny;
  tiny.window = 1;
  CHECK_THROWS_AS(identity_suite(tiny), DomainTooSmall);
}

TEST_CASE("right cancellation and corner set equality stand alone") {
  CHECK(suites::right_cancellation(5, 10).pass());
  CHECK(suites::corner_set_equality(12).pass());
  CHECK(suites::exponent_regression(4, 4).pass());
}

TEST_CASE("table equality and from_entries round trip") {
  const TabulatedEndo t = tabulate(nf_make(2, 3, 1), 3);
  std::vector<std::pair<Elem, Elem>> entries;
  for (const Elem& x : t.domain()) {
    entries.emplace_back(x, t[x]);
  }
  CHECK(TabulatedEndo::from_entries(3, entries) == t);
}
