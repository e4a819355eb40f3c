#ifndef BOMEGA_REPORT_HPP_
#define BOMEGA_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bomega {

/// One failing check: what was fed in, what the law demands, what came out.
struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string actual;
};

/// Outcome of one verification suite. Counterexamples are truncated at
/// kMaxCounterexamples; `failures` always carries the full count. Suites
/// assemble reports deterministically (inputs scanned in sorted order).
struct Report {
  static constexpr std::size_t kMaxCounterexamples = 32;

  std::string suite;
  std::string grid;
  std::string note;  // optional preamble, e.g. scope caveats
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;

  bool pass() const noexcept { return failures == 0; }

  /// Counts one check; on failure records the (lazily built) counterexample.
  template <typename MakeCx>
  void check(bool ok, MakeCx&& make_cx) {
    ++checks;
    if (!ok) {
      ++failures;
      if (counterexamples.size() < kMaxCounterexamples) {
        counterexamples.push_back(make_cx());
      }
    }
  }

  /// {"suite":..., "grid":..., "status":"pass"|"fail", "checks":...,
  ///  "failures":..., "counterexamples":[...]} with "note" when non-empty.
  std::string to_json() const;

  /// One-line human summary, "[PASS] suite: ... " style.
  std::string summary_line() const;
};

}  // namespace bomega

#endif  // BOMEGA_REPORT_HPP_
