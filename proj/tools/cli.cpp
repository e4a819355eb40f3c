#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bomega/io.hpp"
#include "bomega/verify.hpp"

namespace bomega::cli {

namespace {

using nlohmann::json;

Int int_field(const json& obj, const char* key, std::size_t entry_index) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw MalformedEntry(entry_index,
                         std::string("missing or non-integer field \"") + key
                             + "\"");
  }
  const Int v = obj[key].get<Int>();
  if (v < 0) {
    throw MalformedEntry(entry_index,
                         std::string("field \"") + key + "\" is negative");
  }
  return v;
}

Elem elem_field(const json& obj, const char* key, std::size_t entry_index) {
  if (!obj.contains(key) || !obj[key].is_object()) {
    throw MalformedEntry(entry_index,
                         std::string("missing or non-object field \"") + key
                             + "\"");
  }
  const json& e = obj[key];
  return Elem{int_field(e, "i", entry_index), int_field(e, "j", entry_index),
              Ray{int_field(e, "p", entry_index)}};
}

void print_report_text(std::ostream& out, const Report& r) {
  out << r.summary_line() << "\n";
  if (!r.note.empty()) {
    out << "  note: " << r.note << "\n";
  }
  for (const Counterexample& cx : r.counterexamples) {
    out << "  counterexample: " << cx.inputs << " | expected " << cx.expected
        << " | got " << cx.actual << "\n";
  }
  if (r.failures > r.counterexamples.size()) {
    out << "  (" << r.failures << " failures total, first "
        << r.counterexamples.size() << " shown)\n";
  }
}

int emit_reports(const std::vector<Report>& reports, bool as_json,
                 std::ostream& out) {
  bool all_pass = true;
  if (as_json) {
    out << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) {
        out << ",";
      }
      out << reports[i].to_json();
      all_pass = all_pass && reports[i].pass();
    }
    out << "]\n";
  } else {
    for (const Report& r : reports) {
      print_report_text(out, r);
      all_pass = all_pass && r.pass();
    }
  }
  return all_pass ? 0 : 1;
}

// Shared table-source options: either a file or a freshly tabulated form.
struct TableSource {
  std::string from_file;
  std::string tabulate_nf;
  Int domain_bound = 16;

  void attach(CLI::App* sub) {
    auto* file = sub->add_option("--from-file", from_file,
                                 "table file to load");
    auto* tab = sub->add_option("--tabulate", tabulate_nf,
                                "normal form to tabulate instead of loading");
    sub->add_option("--N", domain_bound,
                    "domain bound for --tabulate (default 16)");
    file->excludes(tab);
  }

  TabulatedEndo get() const {
    if (!from_file.empty()) {
      return load_table(from_file);
    }
    if (!tabulate_nf.empty()) {
      return tabulate(parse_normal_form(tabulate_nf), domain_bound);
    }
    throw InvalidParameter("need --from-file or --tabulate");
  }
};

}  // namespace

TabulatedEndo load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw bomega::ParseError("cannot open table file", path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw bomega::ParseError(std::string("table file is not valid JSON (")
                                 + e.what() + ")",
                             path);
  }
  if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer()
      || j["N"].get<Int>() < 0 || !j.contains("entries")
      || !j["entries"].is_array()) {
    throw bomega::ParseError(
        "table file needs {\"N\": <non-negative int>, \"entries\": [...]}",
        path);
  }
  const Int bound = j["N"].get<Int>();
  std::vector<std::pair<Elem, Elem>> entries;
  entries.reserve(j["entries"].size());
  for (std::size_t idx = 0; idx < j["entries"].size(); ++idx) {
    const json& e = j["entries"][idx];
    if (!e.is_object()) {
      throw MalformedEntry(idx, "entry is not an object");
    }
    entries.emplace_back(elem_field(e, "x", idx), elem_field(e, "fx", idx));
  }
  return TabulatedEndo::from_entries(bound, entries);
}

std::string table_to_json(const TabulatedEndo& table) {
  std::string out = "{\"N\":" + std::to_string(table.domain_bound())
                    + ",\"entries\":[";
  bool first = true;
  for (const Elem& x : table.domain()) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += "{\"x\":" + to_json(x) + ",\"fx\":" + to_json(table[x]) + "}";
  }
  out += "]}";
  return out;
}

int parse_and_dispatch(const std::vector<std::string>& args,
                       std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic, symbolic endomorphism algebra and"
               " brute-force verification for ray-family bicyclic"
               " extensions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  int exit_code = 0;
  const auto finish_reports = [&](const std::vector<Report>& reports) {
    exit_code = emit_reports(reports, as_json, out);
  };

  // mul
  std::string mul_a, mul_b, mul_family = "0,1,2";
  auto* mul_cmd = app.add_subcommand("mul", "element product a*b");
  mul_cmd->add_option("a", mul_a, "element literal (i,j,p)")->required();
  mul_cmd->add_option("b", mul_b, "element literal (i,j,p)")->required();
  mul_cmd->add_option("--family", mul_family,
                      "ambient ray starts (default 0,1,2)");
  mul_cmd->callback([&] {
    const Family fam = parse_family(mul_family);
    const Elem r = mul(parse_elem(mul_a), parse_elem(mul_b), fam);
    out << (as_json ? to_json(r) : to_string(r)) << "\n";
  });

  // inv
  std::string inv_a;
  auto* inv_cmd = app.add_subcommand("inv", "semigroup inverse");
  inv_cmd->add_option("a", inv_a, "element literal (i,j,p)")->required();
  inv_cmd->callback([&] {
    const Elem r = inv(parse_elem(inv_a));
    out << (as_json ? to_json(r) : to_string(r)) << "\n";
  });

  // order
  std::string ord_a, ord_b, ord_family = "0,1,2";
  auto* ord_cmd =
      app.add_subcommand("order", "natural partial order test a <= b");
  ord_cmd->add_option("a", ord_a, "element literal")->required();
  ord_cmd->add_option("b", ord_b, "element literal")->required();
  ord_cmd->add_option("--family", ord_family,
                      "ambient ray starts (default 0,1,2)");
  ord_cmd->callback([&] {
    const Family fam = parse_family(ord_family);
    const bool r = nat_leq(parse_elem(ord_a), parse_elem(ord_b), fam);
    out << (as_json ? std::string("{\"result\":") + (r ? "true" : "false")
                          + "}"
                    : std::string(r ? "true" : "false"))
        << "\n";
  });

  // drel
  std::string drel_a, drel_b;
  auto* drel_cmd = app.add_subcommand("drel", "same D-class test");
  drel_cmd->add_option("a", drel_a, "element literal")->required();
  drel_cmd->add_option("b", drel_b, "element literal")->required();
  drel_cmd->callback([&] {
    const bool r = d_related(parse_elem(drel_a), parse_elem(drel_b));
    out << (as_json ? std::string("{\"result\":") + (r ? "true" : "false")
                          + "}"
                    : std::string(r ? "true" : "false"))
        << "\n";
  });

  // apply
  std::string apply_f, apply_x;
  auto* apply_cmd =
      app.add_subcommand("apply", "apply a normal form to an element");
  apply_cmd->add_option("f", apply_f, "normal form literal a<k>.l<m>.w<w>")
      ->required();
  apply_cmd->add_option("x", apply_x, "element literal")->required();
  apply_cmd->callback([&] {
    const Elem r = nf_apply(parse_normal_form(apply_f), parse_elem(apply_x));
    out << (as_json ? to_json(r) : to_string(r)) << "\n";
  });

  // compose
  std::string comp_f, comp_g;
  auto* comp_cmd = app.add_subcommand(
      "compose", "compose two normal forms, left operand applied first");
  comp_cmd->add_option("f", comp_f, "normal form literal")->required();
  comp_cmd->add_option("g", comp_g, "normal form literal")->required();
  comp_cmd->callback([&] {
    const NormalForm r =
        nf_compose(parse_normal_form(comp_f), parse_normal_form(comp_g));
    out << (as_json ? to_json(r) : to_string(r)) << "\n";
  });

  // normalize
  std::vector<std::string> norm_args;
  auto* norm_cmd = app.add_subcommand(
      "normalize", "fold a sequence of normal forms into one, left to right");
  norm_cmd->add_option("forms", norm_args, "normal form literals")
      ->required()
      ->expected(-1);
  norm_cmd->callback([&] {
    NormalForm acc = parse_normal_form(norm_args.front());
    for (std::size_t i = 1; i < norm_args.size(); ++i) {
      acc = nf_compose(acc, parse_normal_form(norm_args[i]));
    }
    out << (as_json ? to_json(acc) : to_string(acc)) << "\n";
  });

  // sd
  std::vector<std::string> sd_args;
  std::string sd_from_nf;
  auto* sd_cmd = app.add_subcommand(
      "sd", "semidirect-product pair arithmetic / projection");
  sd_cmd->add_option("pairs", sd_args, "two pair literals (k,m)")
      ->expected(0, 2);
  sd_cmd->add_option("--from-nf", sd_from_nf,
                     "project a reversal-free normal form to its pair");
  sd_cmd->callback([&] {
    if (!sd_from_nf.empty()) {
      if (!sd_args.empty()) {
        throw InvalidParameter("--from-nf takes no pair arguments");
      }
      const SDPair p = nf_to_sd(parse_normal_form(sd_from_nf));
      out << (as_json ? to_json(p) : to_string(p)) << "\n";
      return;
    }
    if (sd_args.size() != 2) {
      throw InvalidParameter("sd needs two pair literals or --from-nf");
    }
    const SDPair p =
        sd_mul(parse_sd_pair(sd_args[0]), parse_sd_pair(sd_args[1]));
    out << (as_json ? to_json(p) : to_string(p)) << "\n";
  });

  // decompose
  TableSource dec_src;
  auto* dec_cmd = app.add_subcommand(
      "decompose", "recover the normal form a table is consistent with");
  dec_src.attach(dec_cmd);
  dec_cmd->callback([&] {
    const TabulatedEndo table = dec_src.get();
    const NormalForm f = decompose(table);
    const std::string window =
        "Window(" + std::to_string(table.domain_bound()) + ")";
    if (as_json) {
      out << "{\"k\":" << f.k << ",\"m\":" << f.m << ",\"w\":" << f.w
          << ",\"note\":\"consistent with the table on " << window
          << "; window data cannot certify equality beyond it\"}\n";
    } else {
      out << "table is consistent with " << to_string(f) << " on " << window
          << "\n";
    }
  });

  // verify
  TableSource ver_src;
  auto* ver_cmd = app.add_subcommand(
      "verify", "check a table for the homomorphism law and injectivity");
  ver_src.attach(ver_cmd);
  ver_cmd->callback([&] {
    const TabulatedEndo table = ver_src.get();
    std::vector<Report> reports;
    reports.push_back(verify_homomorphism(table, table.domain_bound() / 2));
    reports.push_back(verify_injective(table));
    finish_reports(reports);
  });

  // scan
  Int scan_k = 6, scan_m = 5;
  auto* scan_cmd = app.add_subcommand(
      "scan", "layer-exclusion scan over the normal-form grid");
  scan_cmd->add_option("--K", scan_k, "dilation grid bound (default 6)");
  scan_cmd->add_option("--M", scan_m, "shift grid bound (default 5)");
  scan_cmd->callback([&] {
    const Report r = scan_exclusions(scan_k, scan_m);
    if (as_json) {
      out << r.to_json() << "\n";
    } else {
      print_report_text(out, r);
    }
    exit_code = r.pass() ? 0 : 1;
  });

  // suite
  Int suite_k = 0, suite_m = 0, suite_n = 0;
  auto* suite_cmd = app.add_subcommand(
      "suite", "run every bundled verification suite");
  auto* k_opt = suite_cmd->add_option("--K", suite_k, "override grid k bound");
  auto* m_opt = suite_cmd->add_option("--M", suite_m, "override grid m bound");
  auto* n_opt =
      suite_cmd->add_option("--N", suite_n, "override window bounds");
  suite_cmd->callback([&] {
    SuiteParams params;
    if (k_opt->count() > 0) {
      params.k_max = suite_k;
    }
    if (m_opt->count() > 0) {
      params.m_max = suite_m;
    }
    if (n_opt->count() > 0) {
      params.window = suite_n;
    }
    std::vector<Report> reports = semigroup_suite(params);
    std::vector<Report> endo = identity_suite(params);
    reports.insert(reports.end(), endo.begin(), endo.end());
    finish_reports(reports);
  });

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotClassifiable& e) {
    err << "NotClassifiable: " << e.what() << "\n";
    return 1;
  } catch (const MiddleLayerIdentityImage& e) {
    err << "MiddleLayerIdentityImage: " << e.what() << "\n";
    return 1;
  } catch (const NonPositiveK& e) {
    err << "NonPositiveK: " << e.what() << "\n";
    return 1;
  } catch (const MissingEntry& e) {
    err << "MissingEntry: " << e.what() << "\n";
    return 2;
  } catch (const MalformedEntry& e) {
    err << "MalformedEntry: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace bomega::cli
