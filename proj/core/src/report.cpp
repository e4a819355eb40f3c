#include "bomega/report.hpp"

namespace bomega {

namespace {

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          constexpr char hex[] = "0123456789abcdef";
          out += "\\u00";
          out += hex[(c >> 4) & 0xf];
          out += hex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string Report::to_json() const {
  std::string out = "{\"suite\":";
  append_json_string(out, suite);
  out += ",\"grid\":";
  append_json_string(out, grid);
  if (!note.empty()) {
    out += ",\"note\":";
    append_json_string(out, note);
  }
  out += ",\"status\":";
  out += pass() ? "\"pass\"" : "\"fail\"";
  out += ",\"checks\":" + std::to_string(checks);
  out += ",\"failures\":" + std::to_string(failures);
  out += ",\"counterexamples\":[";
  for (std::size_t i = 0; i < counterexamples.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += "{\"inputs\":";
    append_json_string(out, counterexamples[i].inputs);
    out += ",\"expected\":";
    append_json_string(out, counterexamples[i].expected);
    out += ",\"actual\":";
    append_json_string(out, counterexamples[i].actual);
    out += '}';
  }
  out += "]}";
  return out;
}

std::string Report::summary_line() const {
  std::string line = pass() ? "[PASS] " : "[FAIL] ";
  line += suite;
  line += ": " + std::to_string(checks) + " checks";
  if (failures > 0) {
    line += ", " + std::to_string(failures) + " failures";
  }
  line += " (" + grid + ")";
  return line;
}

}  // namespace bomega
