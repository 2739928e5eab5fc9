// serialize.hh -- JSON and Graphviz renderings of automata
//
// JSON document:
//   { "letters": [string...], "states": int, "initial": int,
//     "finals": [int...], "transitions": [[int...]...] }
// with transitions[state][letter].

#pragma once

#include "sct/cdfa.hh"

#include <string>
#include <string_view>

namespace sct {

std::string to_json(const Cdfa& a);

/// Throws ParseError naming the offending field, e.g. "transitions[2][1]".
Cdfa from_json(std::string_view text);

/// One node per state, a point node pointing at the initial state, finals
/// double-circled, parallel edges merged with comma-joined labels.
std::string to_dot(const Cdfa& a, std::string_view graph_name = "cdfa");

Cdfa read_cdfa_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace sct
