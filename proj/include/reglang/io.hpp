#ifndef REGLANG_IO_HPP
#define REGLANG_IO_HPP

// JSON encodings of the library's values. Writers are deterministic and
// every writer has a loader that accepts its output.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alphabet.hpp"
#include "automaton.hpp"
#include "error.hpp"
#include "language.hpp"
#include "monoid.hpp"
#include "profinite.hpp"
#include "sigma_set.hpp"

namespace reglang::io {

using Json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

inline Symbol symbol_from_key(const Alphabet& alphabet, const std::string& key) {
  auto cps = utf8::decode(key);
  if (cps.size() != 1) throw AlphabetError("'" + key + "' is not a single alphabet symbol");
  return alphabet.require(cps[0]);
}

inline void require_unique_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw ValidationError(std::string(what) + " has duplicate state name '" + n + "'");
  }
}

inline State state_by_name(const std::map<std::string, State>& index, const std::string& name) {
  auto it = index.find(name);
  if (it == index.end()) throw ValidationError("undefined state '" + name + "'");
  return it->second;
}

}  // namespace detail

// Alphabet: written as a string of symbols; an array of one-symbol strings
// is also accepted.

inline Json alphabet_to_json(const Alphabet& a) { return a.to_utf8(); }

inline Alphabet alphabet_from_json(const Json& j) {
  return detail::guarded("alphabet", [&] {
    if (j.is_string()) return Alphabet::from_utf8(j.get<std::string>());
    std::string joined;
    for (const auto& s : j) {
      auto text = s.get<std::string>();
      if (utf8::decode(text).size() != 1) throw AlphabetError("alphabet entry '" + text + "' is not one symbol");
      joined += text;
    }
    return Alphabet::from_utf8(joined);
  });
}

// Language: {"alphabet": ..., "ast": node}; a node is {"tag": kind} plus
// "symbol" for literals or "children" for operators.

namespace detail {

inline Json node_to_json(const reglang::detail::NodePtr& n, const Alphabet& a) {
  Json j;
  j["tag"] = kind_name(n->kind);
  if (n->kind == Kind::Literal) {
    j["symbol"] = a.symbol_text(n->symbol);
  } else if (!n->children.empty()) {
    Json children = Json::array();
    for (const auto& c : n->children) children.push_back(node_to_json(c, a));
    j["children"] = std::move(children);
  }
  return j;
}

inline reglang::detail::NodePtr node_from_json(const Json& j, const Alphabet& a) {
  namespace d = reglang::detail;
  const std::string tag = j.at("tag").get<std::string>();
  std::vector<d::NodePtr> kids;
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) kids.push_back(node_from_json(c, a));
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (kids.size() < lo || kids.size() > hi) throw ValidationError("wrong number of children for " + tag);
  };
  if (tag == "Empty") return arity(0, 0), d::empty_node();
  if (tag == "Epsilon") return arity(0, 0), d::epsilon_node();
  if (tag == "Literal") return arity(0, 0), d::literal_node(symbol_from_key(a, j.at("symbol").get<std::string>()));
  if (tag == "Concat") return arity(1, static_cast<std::size_t>(-1)), d::concat_node(kids);
  if (tag == "Union") return arity(1, static_cast<std::size_t>(-1)), d::union_node(kids);
  if (tag == "Intersect") return arity(1, static_cast<std::size_t>(-1)), d::intersect_node(kids);
  if (tag == "Complement") return arity(1, 1), d::complement_node(kids[0]);
  if (tag == "Star") return arity(1, 1), d::star_node(kids[0]);
  throw ValidationError("unknown language tag '" + tag + "'");
}

}  // namespace detail

inline Json language_to_json(const Language& l) {
  Json j;
  j["alphabet"] = alphabet_to_json(l.alphabet());
  j["ast"] = detail::node_to_json(l.node(), l.alphabet());
  return j;
}

inline Language language_from_json(const Json& j) {
  return detail::guarded("language", [&] {
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    return Language(a, detail::node_from_json(j.at("ast"), a));
  });
}

// Σ-set: {"alphabet", "states": [names], "delta": {state: {symbol: state}}}.

inline Json sigma_set_to_json(const SigmaSet& s) {
  detail::require_unique_names(s.names(), "Σ-set");
  Json j;
  j["alphabet"] = alphabet_to_json(s.alphabet());
  j["states"] = s.names();
  Json delta = Json::object();
  for (State q = 0; q < s.size(); ++q) {
    Json row = Json::object();
    for (Symbol a = 0; a < s.alphabet().size(); ++a) row[s.alphabet().symbol_text(a)] = s.name(s.step(q, a));
    delta[s.name(q)] = std::move(row);
  }
  j["delta"] = std::move(delta);
  return j;
}

inline SigmaSet sigma_set_from_json(const Json& j) {
  return detail::guarded("Σ-set", [&] {
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    auto names = j.at("states").get<std::vector<std::string>>();
    detail::require_unique_names(names, "Σ-set");
    std::map<std::string, State> index;
    for (State q = 0; q < names.size(); ++q) index.emplace(names[q], q);
    const Json& delta = j.at("delta");
    for (const auto& [from, _] : delta.items()) detail::state_by_name(index, from);
    std::vector<std::vector<State>> table(names.size());
    for (State q = 0; q < names.size(); ++q) {
      if (!delta.contains(names[q])) {
        if (a.empty()) continue;
        throw ValidationError("missing transition for (" + names[q] + ", " + a.symbol_text(0) + ")");
      }
      const Json& row = delta.at(names[q]);
      for (const auto& [sym, _] : row.items()) detail::symbol_from_key(a, sym);
      for (Symbol s = 0; s < a.size(); ++s) {
        if (!row.contains(a.symbol_text(s))) {
          throw ValidationError("missing transition for (" + names[q] + ", " + a.symbol_text(s) + ")");
        }
        table[q].push_back(detail::state_by_name(index, row.at(a.symbol_text(s)).get<std::string>()));
      }
    }
    return SigmaSet::make(std::move(names), table, a);
  });
}

// Automaton: Σ-set JSON plus {"accept": [names], "start"?: name}.

inline Json automaton_to_json(const Automaton& a) {
  Json j = sigma_set_to_json(a.carrier());
  Json accept = Json::array();
  for (State q = 0; q < a.size(); ++q) {
    if (a.accepting(q)) accept.push_back(a.carrier().name(q));
  }
  j["accept"] = std::move(accept);
  return j;
}

inline Json automaton_to_json(const PointedAutomaton& a) {
  Json j = automaton_to_json(a.automaton());
  j["start"] = a.carrier().name(a.start());
  return j;
}

inline Automaton automaton_from_json(const Json& j) {
  return detail::guarded("automaton", [&] {
    SigmaSet s = sigma_set_from_json(j);
    std::map<std::string, State> index;
    for (State q = 0; q < s.size(); ++q) index.emplace(s.name(q), q);
    std::vector<State> accept;
    for (const auto& name : j.at("accept")) accept.push_back(detail::state_by_name(index, name.get<std::string>()));
    return Automaton::from_accept_list(std::move(s), accept);
  });
}

/// Loads a pointed automaton; without "start" the first state is the start.
inline PointedAutomaton pointed_automaton_from_json(const Json& j) {
  return detail::guarded("automaton", [&] {
    Automaton a = automaton_from_json(j);
    State start = 0;
    if (j.contains("start")) {
      auto found = a.carrier().find(j.at("start").get<std::string>());
      if (!found) throw ValidationError("undefined start state '" + j.at("start").get<std::string>() + "'");
      start = *found;
    } else if (a.size() == 0) {
      throw ValidationError("an automaton with no states has no start state");
    }
    return PointedAutomaton(std::move(a), start);
  });
}

// Monoid: {"alphabet", "size", "identity", "table", "generators": {symbol:
// index}, "element_names"?, "accepting"?: [indices]}.

inline Json monoid_to_json(const SigmaMonoid& sm) {
  Json j;
  j["alphabet"] = alphabet_to_json(sm.alphabet());
  j["size"] = sm.size();
  j["identity"] = sm.monoid().identity();
  j["table"] = sm.monoid().rows();
  Json gens = Json::object();
  for (Symbol a = 0; a < sm.alphabet().size(); ++a) gens[sm.alphabet().symbol_text(a)] = sm.generator(a);
  j["generators"] = std::move(gens);
  if (sm.has_names()) j["element_names"] = sm.element_names();
  return j;
}

inline Json monoid_to_json(const MonoidRecognizer& r) {
  Json j = monoid_to_json(r.sigma_monoid());
  j["accepting"] = r.accepting_elements();
  return j;
}

inline SigmaMonoid sigma_monoid_from_json(const Json& j) {
  return detail::guarded("monoid", [&] {
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
    if (j.contains("size") && j.at("size").get<std::size_t>() != rows.size()) {
      throw ValidationError("monoid size does not match its table");
    }
    FiniteMonoid m = make_monoid(rows, j.at("identity").get<Element>());
    const Json& gens = j.at("generators");
    for (const auto& [sym, _] : gens.items()) detail::symbol_from_key(a, sym);
    std::vector<Element> generators;
    for (Symbol s = 0; s < a.size(); ++s) {
      if (!gens.contains(a.symbol_text(s))) throw ValidationError("no generator for symbol " + a.symbol_text(s));
      generators.push_back(gens.at(a.symbol_text(s)).get<Element>());
    }
    std::vector<std::string> names;
    if (j.contains("element_names")) names = j.at("element_names").get<std::vector<std::string>>();
    return SigmaMonoid(std::move(m), a, std::move(generators), std::move(names));
  });
}

/// Loads a recognizer; the "accepting" member is required.
inline MonoidRecognizer monoid_recognizer_from_json(const Json& j) {
  return detail::guarded("monoid", [&] {
    SigmaMonoid sm = sigma_monoid_from_json(j);
    if (!j.contains("accepting")) throw ValidationError("monoid file has no \"accepting\" subset");
    return MonoidRecognizer::from_subset(std::move(sm), j.at("accepting").get<std::vector<Element>>());
  });
}

// System: {"nodes": [monoid JSON], "connectors": [{"from", "to", "map"}]}.

inline Json system_to_json(const ProfiniteSystem& sys) {
  Json j;
  Json nodes = Json::array();
  for (const auto& n : sys.nodes()) nodes.push_back(monoid_to_json(n));
  j["nodes"] = std::move(nodes);
  Json connectors = Json::array();
  for (const auto& c : sys.connectors()) connectors.push_back({{"from", c.from}, {"to", c.to}, {"map", c.map}});
  j["connectors"] = std::move(connectors);
  return j;
}

inline ProfiniteSystem system_from_json(const Json& j) {
  return detail::guarded("system", [&] {
    std::vector<SigmaMonoid> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back(sigma_monoid_from_json(n));
    std::vector<Connector> connectors;
    if (j.contains("connectors")) {
      for (const auto& c : j.at("connectors")) {
        connectors.push_back(
            {c.at("from").get<std::size_t>(), c.at("to").get<std::size_t>(), c.at("map").get<std::vector<Element>>()});
      }
    }
    return build_system(std::move(nodes), std::move(connectors));
  });
}

inline Json approx_to_json(const ProfiniteSystem& sys, const ProfiniteWordApprox& x) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    comps.push_back({{"node", i},
                     {"element", x.components[i]},
                     {"name", sys.nodes()[i].element_name(x.components[i])}});
  }
  return {{"components", std::move(comps)}};
}

}  // namespace reglang::io

#endif  // REGLANG_IO_HPP
