#include "bomega/io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace bomega {

namespace {

// Cursor over a literal; skips whitespace, remembers the original text for
// diagnostics.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text), pos_(0) {}

  void skip_ws() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) {
      fail("expected '" + std::string(1, c) + "' in " + what);
    }
  }

  Int integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()
           && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected a non-negative integer in " + what);
    }
    Int value = 0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
      throw ParseError(what + " integer out of range",
                       std::string(text_.substr(start, pos_ - start)));
    }
    return value;
  }

  void expect_end(const std::string& what) {
    skip_ws();
    if (pos_ != text_.size()) {
      fail("trailing characters after " + what);
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, std::string(text_));
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

}  // namespace

std::string to_string(const Elem& x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ","
         + std::to_string(x.ray.start) + ")";
}

std::string to_string(const NormalForm& f) {
  return "a" + std::to_string(f.k) + ".l" + std::to_string(f.m) + ".w"
         + std::to_string(f.w);
}

std::string to_string(const SDPair& p) {
  return "(" + std::to_string(p.k) + "," + std::to_string(p.m) + ")";
}

std::string to_string(const Family& fam) {
  std::string out;
  for (Ray r : fam.rays()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(r.start);
  }
  return out;
}

Elem parse_elem(std::string_view text) {
  Scanner s(text);
  s.expect('(', "element literal");
  const Int i = s.integer("element literal");
  s.expect(',', "element literal");
  const Int j = s.integer("element literal");
  s.expect(',', "element literal");
  const Int p = s.integer("element literal");
  s.expect(')', "element literal");
  s.expect_end("element literal");
  return Elem{i, j, Ray{p}};
}

NormalForm parse_normal_form(std::string_view text) {
  Scanner s(text);
  if (!s.consume('a')) {
    s.fail("normal form literal must look like a<k>.l<m>.w<w>");
  }
  const Int k = s.integer("normal form literal");
  s.expect('.', "normal form literal");
  if (!s.consume('l')) {
    s.fail("normal form literal must look like a<k>.l<m>.w<w>");
  }
  const Int m = s.integer("normal form literal");
  s.expect('.', "normal form literal");
  if (!s.consume('w')) {
    s.fail("normal form literal must look like a<k>.l<m>.w<w>");
  }
  const Int w = s.integer("normal form literal");
  s.expect_end("normal form literal");
  if (k < 1 || (w != 0 && w != 1)) {
    throw ParseError("normal form literal needs k >= 1 and w in {0,1}",
                     std::string(text));
  }
  return NormalForm{k, m, w};
}

SDPair parse_sd_pair(std::string_view text) {
  Scanner s(text);
  const bool parenthesized = s.consume('(');
  const Int k = s.integer("pair literal");
  s.expect(',', "pair literal");
  const Int m = s.integer("pair literal");
  if (parenthesized) {
    s.expect(')', "pair literal");
  }
  s.expect_end("pair literal");
  if (k < 1) {
    throw ParseError("pair literal needs k >= 1", std::string(text));
  }
  return SDPair{k, m};
}

Family parse_family(std::string_view text) {
  Scanner s(text);
  std::vector<Int> starts;
  starts.push_back(s.integer("family literal"));
  while (s.consume(',')) {
    starts.push_back(s.integer("family literal"));
  }
  s.expect_end("family literal");
  return make_family(starts);
}

std::string to_json(const Elem& x) {
  return "{\"i\":" + std::to_string(x.i) + ",\"j\":" + std::to_string(x.j)
         + ",\"p\":" + std::to_string(x.ray.start) + "}";
}

std::string to_json(const NormalForm& f) {
  return "{\"k\":" + std::to_string(f.k) + ",\"m\":" + std::to_string(f.m)
         + ",\"w\":" + std::to_string(f.w) + "}";
}

std::string to_json(const SDPair& p) {
  return "{\"k\":" + std::to_string(p.k) + ",\"m\":" + std::to_string(p.m)
         + "}";
}

}  // namespace bomega
