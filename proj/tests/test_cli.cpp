#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "bomega/verify.hpp"
#include "cli.hpp"
#include "schema_check.hpp"

using namespace bomega;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& content, const std::string& tag) {
  const std::string path =
      (std::filesystem::temp_directory_path() / ("bomega_cli_" + tag + ".json"))
          .string();
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("element verbs") {
  auto r = run({"mul", "(1,1,0)", "(0,0,2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,1,1)\n");

  r = run({"inv", "(3,1,2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,3,2)\n");

  r = run({"order", "(0,0,2)", "(0,0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run({"order", "(0,0,0)", "(0,0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  r = run({"drel", "(0,3,1)", "(7,2,1)"});
  CHECK(r.out == "true\n");

  r = run({"mul", "(1,1,5)", "(0,0,5)", "--family", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,1,5)\n");

  // Element ray outside the ambient family.
  r = run({"mul", "(1,1,7)", "(0,0,0)"});
  CHECK(r.code == 2);

  // Malformed literal names the token.
  r = run({"mul", "(1,1", "(0,0,2)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("(1,1") != std::string::npos);
}

TEST_CASE("symbolic verbs") {
  auto r = run({"compose", "a1.l0.w1", "a1.l0.w1"});
  CHECK(r.code == 0);
  CHECK(r.out == "a1.l2.w0\n");

  r = run({"apply", "a2.l3.w0", "(1,0,1)"});
  CHECK(r.out == "(5,3,1)\n");

  r = run({"normalize", "a2.l1.w1", "a3.l2.w0", "a1.l0.w1"});
  CHECK(r.code == 0);
  CHECK(r.out == "a6.l9.w0\n");

  r = run({"normalize", "a4.l2.w1"});
  CHECK(r.out == "a4.l2.w1\n");

  r = run({"sd", "2,1", "3,2"});
  CHECK(r.out == "(6,5)\n");

  r = run({"sd", "--from-nf", "a4.l7.w0"});
  CHECK(r.out == "(4,7)\n");

  r = run({"sd", "--from-nf", "a4.l7.w1"});
  CHECK(r.code == 2);

  r = run({"sd", "2,1"});
  CHECK(r.code == 2);

  r = run({"apply", "a0.l0.w0", "(0,0,0)"});
  CHECK(r.code == 2);
}

TEST_CASE("json outputs validate against the shipped schemas") {
  const auto check_schema = [](const RunResult& r, const char* schema) {
    REQUIRE(r.code == 0);
    const auto value = nlohmann::json::parse(r.out);
    const auto errors =
        schema_check::validate(value, schema_check::load_schema(schema));
    for (const auto& e : errors) {
      MESSAGE(e);
    }
    CHECK(errors.empty());
  };
  check_schema(run({"--json", "mul", "(1,1,0)", "(0,0,2)"}),
               "element.schema.json");
  check_schema(run({"--json", "inv", "(3,1,2)"}), "element.schema.json");
  check_schema(run({"--json", "apply", "a2.l3.w0", "(1,0,1)"}),
               "element.schema.json");
  check_schema(run({"--json", "order", "(0,0,2)", "(0,0,1)"}),
               "bool_result.schema.json");
  check_schema(run({"--json", "drel", "(0,0,2)", "(0,0,1)"}),
               "bool_result.schema.json");
  check_schema(run({"--json", "compose", "a1.l0.w1", "a1.l0.w1"}),
               "normal_form.schema.json");
  check_schema(run({"--json", "normalize", "a2.l1.w1", "a3.l2.w0"}),
               "normal_form.schema.json");
  check_schema(run({"--json", "sd", "2,1", "3,2"}), "sd_pair.schema.json");
  check_schema(run({"--json", "sd", "--from-nf", "a4.l7.w0"}),
               "sd_pair.schema.json");
  check_schema(run({"--json", "scan", "--K", "2", "--M", "1"}),
               "report.schema.json");
  check_schema(run({"--json", "verify", "--tabulate", "a2.l0.w1", "--N", "6"}),
               "report_list.schema.json");
  check_schema(run({"--json", "decompose", "--tabulate", "a2.l3.w0"}),
               "decompose_result.schema.json");
  check_schema(run({"suite", "--json", "--K", "2", "--M", "1", "--N", "4"}),
               "report_list.schema.json");
}

TEST_CASE("decompose verb") {
  auto r = run({"decompose", "--tabulate", "a2.l3.w0", "--N", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "table is consistent with a2.l3.w0 on Window(8)\n");

  const std::string good =
      write_temp(cli::table_to_json(tabulate(nf_make(1, 0, 1), 4)), "good");
  r = run({"decompose", "--from-file", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("a1.l0.w1") != std::string::npos);
  std::remove(good.c_str());

  // A non-endomorphism table fails classification with exit 1.
  const std::string bad = write_temp(
      cli::table_to_json(tabulate(
          [](const Elem& x) {
            return x == Elem{3, 2, Ray{1}} ? Elem{9, 9, Ray{2}} : x;
          },
          4)),
      "bad");
  r = run({"decompose", "--from-file", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotClassifiable") != std::string::npos);
  std::remove(bad.c_str());

  // Transposed tables flip the probe element: also exit 1.
  const std::string flipped = write_temp(
      cli::table_to_json(
          tabulate([](const Elem& x) { return Elem{x.j, x.i, x.ray}; }, 4)),
      "flipped");
  r = run({"decompose", "--from-file", flipped});
  CHECK(r.code == 1);
  CHECK(r.err.find("NonPositiveK") != std::string::npos);
  std::remove(flipped.c_str());

  // Missing source.
  r = run({"decompose"});
  CHECK(r.code == 2);

  // Unreadable file.
  r = run({"decompose", "--from-file", "/nonexistent/t.json"});
  CHECK(r.code == 2);
}

TEST_CASE("verify verb") {
  auto r = run({"verify", "--tabulate", "a1.l1.w0", "--N", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] table.homomorphism") != std::string::npos);
  CHECK(r.out.find("[PASS] table.injectivity") != std::string::npos);

  const std::string bad = write_temp(
      cli::table_to_json(
          tabulate([](const Elem& x) { return Elem{x.j, x.i, x.ray}; }, 8)),
      "verify_bad");
  r = run({"verify", "--from-file", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] table.homomorphism") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("scan and suite verbs") {
  auto r = run({"scan"});
  CHECK(r.code == 0);
  CHECK(r.out.find("288 checks") != std::string::npos);

  r = run({"suite", "--K", "2", "--M", "1", "--N", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] product.associativity") != std::string::npos);
  CHECK(r.out.find("[PASS] decompose.roundtrip") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"mul", "(1,1,0)"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"mul", "--help"}).code == 0);
}
