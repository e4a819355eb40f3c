#ifndef BOMEGA_IO_HPP_
#define BOMEGA_IO_HPP_

#include <string>
#include <string_view>

#include "bomega/endo.hpp"
#include "bomega/semigroup.hpp"

namespace bomega {

// Canonical text forms. Parsing ignores surrounding and interior whitespace;
// printing is compact, so print(parse(s)) == s for canonical s.

std::string to_string(const Elem& x);        // "(i,j,p)"
std::string to_string(const NormalForm& f);  // "a2.l3.w1"
std::string to_string(const SDPair& p);      // "(k,m)"
std::string to_string(const Family& fam);    // "0,1,2"

Elem parse_elem(std::string_view text);
NormalForm parse_normal_form(std::string_view text);
SDPair parse_sd_pair(std::string_view text);  // "(k,m)" or "k,m"
Family parse_family(std::string_view text);

std::string to_json(const Elem& x);        // {"i":...,"j":...,"p":...}
std::string to_json(const NormalForm& f);  // {"k":...,"m":...,"w":...}
std::string to_json(const SDPair& p);      // {"k":...,"m":...}

}  // namespace bomega

#endif  // BOMEGA_IO_HPP_
