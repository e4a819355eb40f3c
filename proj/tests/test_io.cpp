#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>
#include <json.hpp>

#include "bomega/io.hpp"
#include "bomega/verify.hpp"
#include "cli.hpp"
#include "schema_check.hpp"

using namespace bomega;

namespace {

Elem E(Int i, Int j, Int p) { return Elem{i, j, Ray{p}}; }

// Writes content to a fresh temp file and returns its path.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path()
             / ("bomega_test_" + std::to_string(::getpid()) + "_"
                + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("element text round-trips") {
  CHECK(to_string(E(1, 2, 0)) == "(1,2,0)");
  CHECK(parse_elem("(1,2,0)") == E(1, 2, 0));
  CHECK(parse_elem(" ( 1 , 2 , 0 ) ") == E(1, 2, 0));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> coord(0, Int{1} << 60);
  for (int trial = 0; trial < 2000; ++trial) {
    const Elem x = E(coord(rng), coord(rng), coord(rng) % 9);
    CHECK(parse_elem(to_string(x)) == x);
  }

  CHECK_THROWS_AS(parse_elem("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_elem("(1,2,0) junk"), ParseError);
  CHECK_THROWS_AS(parse_elem("(1,-2,0)"), ParseError);
  CHECK_THROWS_AS(parse_elem("(99999999999999999999,0,0)"), ParseError);
  try {
    parse_elem("(a,b,c)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.token == "(a,b,c)");
  }
}

TEST_CASE("normal form text round-trips") {
  CHECK(to_string(nf_make(2, 3, 1)) == "a2.l3.w1");
  CHECK(parse_normal_form("a2.l3.w1") == nf_make(2, 3, 1));
  for (Int k = 1; k <= 9; ++k) {
    for (Int m = 0; m <= 9; ++m) {
      for (Int w = 0; w <= 1; ++w) {
        const NormalForm f = nf_make(k, m, w);
        CHECK(parse_normal_form(to_string(f)) == f);
      }
    }
  }
  CHECK_THROWS_AS(parse_normal_form("a0.l0.w0"), ParseError);
  CHECK_THROWS_AS(parse_normal_form("a1.l0.w2"), ParseError);
  CHECK_THROWS_AS(parse_normal_form("b1.l0.w0"), ParseError);
  CHECK_THROWS_AS(parse_normal_form("a1.l0"), ParseError);
}

TEST_CASE("pair and family literals") {
  CHECK(to_string(SDPair{4, 7}) == "(4,7)");
  CHECK(parse_sd_pair("(4,7)") == SDPair{4, 7});
  CHECK(parse_sd_pair("4,7") == SDPair{4, 7});
  CHECK_THROWS_AS(parse_sd_pair("0,1"), ParseError);
  CHECK_THROWS_AS(parse_sd_pair("(4,7"), ParseError);

  CHECK(to_string(Family::canonical(3)) == "0,1,2");
  CHECK(parse_family("0,1,2") == Family::canonical(3));
  CHECK(parse_family(" 2 , 1 , 0 ") == Family::canonical(3));
  CHECK_THROWS_AS(parse_family("0,2"), NotOmegaClosed);
  CHECK_THROWS_AS(parse_family(""), ParseError);
}

TEST_CASE("JSON emitters match their schemas") {
  const auto elem_schema = schema_check::load_schema("element.schema.json");
  const auto elem = nlohmann::json::parse(to_json(E(1, 2, 0)));
  CHECK(elem["i"] == 1);
  CHECK(elem["j"] == 2);
  CHECK(elem["p"] == 0);
  CHECK(schema_check::validate(elem, elem_schema).empty());

  const auto nf_schema =
      schema_check::load_schema("normal_form.schema.json");
  const auto nf = nlohmann::json::parse(to_json(nf_make(2, 3, 1)));
  CHECK(schema_check::validate(nf, nf_schema).empty());

  const auto sd_schema = schema_check::load_schema("sd_pair.schema.json");
  const auto sd = nlohmann::json::parse(to_json(SDPair{4, 7}));
  CHECK(schema_check::validate(sd, sd_schema).empty());

  const auto report_schema = schema_check::load_schema("report.schema.json");
  const auto pass_report = nlohmann::json::parse(
      suites::ray_inductivity(16).to_json());
  CHECK(schema_check::validate(pass_report, report_schema).empty());
  const auto fail_report = nlohmann::json::parse(
      verify_homomorphism(
          tabulate([](const Elem& x) { return Elem{x.j, x.i, x.ray}; }, 8), 4)
          .to_json());
  CHECK(schema_check::validate(fail_report, report_schema).empty());

  // The schema is strict: a stray key must be flagged.
  auto broken = pass_report;
  broken["stray"] = 1;
  CHECK_FALSE(schema_check::validate(broken, report_schema).empty());
}

TEST_CASE("table files load and round-trip") {
  const TabulatedEndo t = tabulate(nf_make(2, 3, 0), 4);
  const std::string serialized = cli::table_to_json(t);

  const auto table_schema = schema_check::load_schema("table.schema.json");
  CHECK(schema_check::validate(nlohmann::json::parse(serialized),
                               table_schema)
            .empty());

  TempFile file(serialized);
  const TabulatedEndo loaded = cli::load_table(file.path());
  CHECK(loaded == t);
  CHECK(decompose(loaded) == nf_make(2, 3, 0));
}

TEST_CASE("table file rejections") {
  // Complete 27-entry table for N=2, then break it in specific ways.
  const TabulatedEndo t = tabulate(NormalForm::identity(), 2);
  auto base = nlohmann::json::parse(cli::table_to_json(t));

  {
    // Remove the key (2,2,1).
    auto j = base;
    auto& entries = j["entries"];
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      if ((*it)["x"]["i"] == 2 && (*it)["x"]["j"] == 2
          && (*it)["x"]["p"] == 1) {
        entries.erase(it);
        break;
      }
    }
    TempFile file(j.dump());
    try {
      cli::load_table(file.path());
      FAIL("expected MissingEntry");
    } catch (const MissingEntry& e) {
      REQUIRE(e.keys.size() == 1);
      CHECK(e.keys.front() == "(2,2,1)");
    }
  }
  {
    // Image ray start 7 is outside the three-ray extension.
    auto j = base;
    j["entries"][5]["fx"]["p"] = 7;
    TempFile file(j.dump());
    try {
      cli::load_table(file.path());
      FAIL("expected MalformedEntry");
    } catch (const MalformedEntry& e) {
      CHECK(e.index == 5);
    }
  }
  {
    // Duplicate key.
    auto j = base;
    j["entries"].push_back(j["entries"][0]);
    TempFile file(j.dump());
    CHECK_THROWS_AS(cli::load_table(file.path()), MalformedEntry);
  }
  {
    // Key outside the window.
    auto j = base;
    j["entries"][0]["x"]["i"] = 99;
    TempFile file(j.dump());
    CHECK_THROWS_AS(cli::load_table(file.path()), MalformedEntry);
  }
  {
    // Non-integer field.
    auto j = base;
    j["entries"][3]["fx"]["i"] = "three";
    TempFile file(j.dump());
    CHECK_THROWS_AS(cli::load_table(file.path()), MalformedEntry);
  }
  {
    TempFile file("this is not json");
    CHECK_THROWS_AS(cli::load_table(file.path()), ParseError);
  }
  {
    TempFile file("{\"entries\":[]}");
    CHECK_THROWS_AS(cli::load_table(file.path()), ParseError);
  }
  CHECK_THROWS_AS(cli::load_table("/nonexistent/path/table.json"),
                  ParseError);
}
