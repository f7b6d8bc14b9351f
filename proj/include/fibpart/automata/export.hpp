#pragma once

// GraphViz DOT and JSON dumps of automata, with deterministic ordering.

#include <cstddef>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dfa.hpp"

namespace fibpart {

/// "x_1...x_p,y"
inline std::string symbol_text(std::uint32_t code, int p) {
  const auto sym = TupleSymbol::from_code(code);
  std::string s;
  for (int i = 0; i < p; ++i) s.push_back(static_cast<char>('0' + sym.x(static_cast<std::size_t>(i), p)));
  s.push_back(',');
  s.push_back(static_cast<char>('0' + sym.y));
  return s;
}

/// Accepting states are double circles; the initial state is drawn bold.
inline std::string export_dot(const Dfa& d) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << "  \"" << d.state(i).str() << "\" [shape=" << (d.is_accepting(i) ? "doublecircle" : "circle");
    if (i == d.initial()) os << ", style=bold";
    os << "];\n";
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d.transitions(i))
      os << "  \"" << d.state(i).str() << "\" -> \"" << d.state(t.target).str() << "\" [label=\""
         << symbol_text(t.symbol, d.p()) << "\"];\n";
  os << "}\n";
  return os.str();
}

/// {p, states, initial, accepting, transitions: [{from, symbol: [x_1..x_p, y], to}]}
inline nlohmann::ordered_json export_json(const Dfa& d) {
  nlohmann::ordered_json j;
  j["p"] = d.p();
  j["states"] = nlohmann::ordered_json::array();
  for (const auto& s : d.states()) j["states"].push_back(s.str());
  j["initial"] = d.state(d.initial()).str();
  j["accepting"] = nlohmann::ordered_json::array();
  for (auto a : d.accepting_states()) j["accepting"].push_back(d.state(a).str());
  j["transitions"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d.transitions(i))
      j["transitions"].push_back({{"from", d.state(i).str()},
                                  {"symbol", TupleSymbol::from_code(t.symbol).bits(d.p())},
                                  {"to", d.state(t.target).str()}});
  return j;
}

}  // namespace fibpart
