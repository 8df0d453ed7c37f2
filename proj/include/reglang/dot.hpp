#ifndef REGLANG_DOT_HPP
#define REGLANG_DOT_HPP

// Graphviz output. Nodes are emitted in state order and edges in (state,
// symbol) order, with parallel edges merged into one comma-labelled edge.

#include <map>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "sigma_set.hpp"

namespace reglang {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void dot_edges(const SigmaSet& s, std::string& out) {
  for (State q = 0; q < s.size(); ++q) {
    std::map<State, std::string> labels;
    std::vector<State> order;
    for (Symbol a = 0; a < s.alphabet().size(); ++a) {
      State t = s.step(q, a);
      auto [it, inserted] = labels.try_emplace(t);
      if (inserted) order.push_back(t);
      if (!it->second.empty()) it->second += ",";
      it->second += s.alphabet().symbol_text(a);
    }
    for (State t : order) {
      out += "  q" + std::to_string(q) + " -> q" + std::to_string(t) + " [label=" + dot_quote(labels[t]) + "];\n";
    }
  }
}

}  // namespace detail

inline std::string to_dot(const SigmaSet& s) {
  std::string out = "digraph sigma_set {\n  rankdir=LR;\n";
  for (State q = 0; q < s.size(); ++q) {
    out += "  q" + std::to_string(q) + " [shape=circle, label=" + detail::dot_quote(s.name(q)) + "];\n";
  }
  detail::dot_edges(s, out);
  return out + "}\n";
}

inline std::string to_dot(const PointedAutomaton& a) {
  std::string out = "digraph automaton {\n  rankdir=LR;\n  start [shape=point];\n";
  for (State q = 0; q < a.size(); ++q) {
    out += "  q" + std::to_string(q) + " [shape=" + (a.accepting(q) ? "doublecircle" : "circle") +
           ", label=" + detail::dot_quote(a.carrier().name(q)) + "];\n";
  }
  out += "  start -> q" + std::to_string(a.start()) + ";\n";
  detail::dot_edges(a.carrier(), out);
  return out + "}\n";
}

}  // namespace reglang

#endif  // REGLANG_DOT_HPP
