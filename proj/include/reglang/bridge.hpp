#ifndef REGLANG_BRIDGE_HPP
#define REGLANG_BRIDGE_HPP

// Four descriptions of one regular language, built independently and then
// cross-checked: the Nerode orbit, the minimal automaton, the syntactic
// monoid, and a clopen recognizer on the syntactic node.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "alphabet.hpp"
#include "automaton.hpp"
#include "language.hpp"
#include "monoid.hpp"
#include "profinite.hpp"

namespace reglang {

struct FourWitnesses {
  RegularityResult nerode;
  PointedAutomaton dfa;
  MonoidRecognizer monoid;
  ClopenRecognizer clopen;
};

inline FourWitnesses four_witnesses(const Language& l, std::size_t bound = kDefaultOrbitBound,
                                    std::size_t monoid_limit = kDefaultMonoidLimit) {
  FourWitnesses w;
  w.nerode = is_regular(l, bound);
  w.dfa = minimal_automaton(l);
  w.monoid = syntactic_monoid(l, monoid_limit);
  w.clopen = ClopenRecognizer(w.monoid);
  return w;
}

struct BridgeOptions {
  /// Every word up to this length is sampled, up to `exhaustive_cap` words.
  std::size_t max_len = 6;
  std::size_t exhaustive_cap = 4096;
  /// Extra random words of length in (max_len, max_len + random_extra].
  std::size_t random_words = 64;
  std::size_t random_extra = 10;
  std::uint64_t seed = 0;
  std::size_t monoid_limit = kDefaultMonoidLimit;
};

struct BridgeClause {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
};

struct BridgeReport {
  std::vector<BridgeClause> clauses;

  bool pass() const {
    for (const auto& c : clauses) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Words checked by the sample clause: shortlex words up to max_len, then
/// seeded random longer words. Deterministic in the options.
inline std::vector<Word> bridge_sample(const Alphabet& alphabet, const BridgeOptions& options) {
  std::vector<Word> out = words_up_to(alphabet, options.max_len);
  if (out.size() > options.exhaustive_cap) out.resize(options.exhaustive_cap);
  if (alphabet.empty() || options.random_extra == 0) return out;
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_words; ++i) {
    std::size_t len = options.max_len + 1 + rng() % options.random_extra;
    Word w(len);
    for (auto& s : w) s = static_cast<Symbol>(rng() % alphabet.size());
    out.push_back(std::move(w));
  }
  return out;
}

inline BridgeReport verify_bridge(const FourWitnesses& w, const Language& l, const BridgeOptions& options = {}) {
  const Alphabet& alphabet = l.alphabet();
  BridgeReport report;

  {
    BridgeClause c{"nerode-count", false, std::nullopt};
    if (const auto* r = std::get_if<Regular>(&w.nerode)) {
      c.pass = r->nerode_class_count == w.dfa.size();
      if (!c.pass) {
        c.witness = std::to_string(r->nerode_class_count) + " classes vs " + std::to_string(w.dfa.size()) + " states";
      }
    } else {
      c.witness = "orbit exceeded bound " + std::to_string(std::get<Unknown>(w.nerode).bound_hit);
    }
    report.clauses.push_back(std::move(c));
  }

  {
    BridgeClause c{"monoid-recognizes", false, std::nullopt};
    auto eq = monoid_recognizes(w.monoid, l);
    c.pass = eq.equivalent;
    if (!c.pass) c.witness = alphabet.format_word(*eq.counterexample);
    report.clauses.push_back(std::move(c));
  }

  {
    BridgeClause c{"clopen-pullback", false, std::nullopt};
    c.pass = semantically_equal(clopen_pullback(w.clopen), l);
    if (!c.pass) {
      auto eq = equivalent(recognizer_automaton(w.clopen.recognizer()), minimal_automaton(l));
      c.witness = eq.counterexample ? alphabet.format_word(*eq.counterexample) : "no distinguishing word";
    }
    report.clauses.push_back(std::move(c));
  }

  {
    BridgeClause c{"transition-monoid-iso", false, std::nullopt};
    auto tm = transition_monoid(w.dfa.carrier(), options.monoid_limit);
    c.pass = sigma_monoid_isomorphism(tm.sigma_monoid, w.monoid.sigma_monoid()).has_value();
    if (!c.pass) {
      c.witness = "sizes " + std::to_string(tm.sigma_monoid.size()) + " and " +
                  std::to_string(w.monoid.sigma_monoid().size());
    }
    report.clauses.push_back(std::move(c));
  }

  {
    BridgeClause c{"sample-agreement", true, std::nullopt};
    const PointedAutomaton* nerode = nullptr;
    if (const auto* r = std::get_if<Regular>(&w.nerode)) nerode = &r->minimal;
    DerivativeCache cache;
    for (const Word& word : bridge_sample(alphabet, options)) {
      bool expected = contains(l, word, &cache);
      bool agree = w.dfa.accepts(word) == expected && w.monoid.accepts(word) == expected &&
                   w.clopen.contains(word) == expected && (nerode == nullptr || nerode->accepts(word) == expected);
      if (!agree) {
        c.pass = false;
        c.witness = alphabet.format_word(word);
        break;
      }
    }
    report.clauses.push_back(std::move(c));
  }
  return report;
}

inline std::string to_text(const BridgeReport& report) {
  std::string out;
  for (const auto& c : report.clauses) {
    out += c.name + ": " + (c.pass ? "pass" : "FAIL");
    if (c.witness) out += " (" + *c.witness + ")";
    out += '\n';
  }
  out += report.pass() ? "all clauses pass\n" : "bridge verification failed\n";
  return out;
}

}  // namespace reglang

#endif  // REGLANG_BRIDGE_HPP
