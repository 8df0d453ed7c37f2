#ifndef REGLANG_PROFINITE_HPP
#define REGLANG_PROFINITE_HPP

// Finite shadows of the profinite completion of Σ*: a system of finite
// Σ-monoid quotients joined by homomorphisms, words and omega-terms
// evaluated componentwise, and clopen sets as subsets of one node.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "alphabet.hpp"
#include "automaton.hpp"
#include "error.hpp"
#include "language.hpp"
#include "monoid.hpp"

namespace reglang {

/// A monoid homomorphism between two nodes of a system.
struct Connector {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<Element> map;
};

class ProfiniteSystem {
 public:
  ProfiniteSystem() = default;

  const std::vector<SigmaMonoid>& nodes() const noexcept { return nodes_; }
  const std::vector<Connector>& connectors() const noexcept { return connectors_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  friend ProfiniteSystem build_system(std::vector<SigmaMonoid> nodes, std::vector<Connector> connectors);

 private:
  Alphabet alphabet_;
  std::vector<SigmaMonoid> nodes_;
  std::vector<Connector> connectors_;
};

/// Validates and assembles a system. Every connector must send generators
/// to generators, be a monoid homomorphism, and agree with any composite
/// of two connectors sharing its endpoints.
inline ProfiniteSystem build_system(std::vector<SigmaMonoid> nodes, std::vector<Connector> connectors) {
  if (nodes.empty()) throw ValidationError("a system needs at least one node");
  for (const auto& n : nodes) require_same_alphabet(nodes.front().alphabet(), n.alphabet(), "build_system");
  const Alphabet& alphabet = nodes.front().alphabet();

  for (std::size_t c = 0; c < connectors.size(); ++c) {
    const Connector& con = connectors[c];
    std::string label = "connector " + std::to_string(c) + " (" + std::to_string(con.from) + "->" +
                        std::to_string(con.to) + ")";
    if (con.from >= nodes.size() || con.to >= nodes.size()) throw ValidationError(label + " names an undefined node");
    const SigmaMonoid& src = nodes[con.from];
    const SigmaMonoid& dst = nodes[con.to];
    if (con.map.size() != src.size()) throw ValidationError(label + " must map every source element");
    for (Element e : con.map) {
      if (e >= dst.size()) throw ValidationError(label + " maps to undefined element " + std::to_string(e));
    }
    for (Symbol a = 0; a < alphabet.size(); ++a) {
      if (con.map[src.generator(a)] != dst.generator(a)) {
        throw ValidationError(label + " is incompatible with the generator of symbol " + alphabet.symbol_text(a));
      }
    }
    if (con.map[src.monoid().identity()] != dst.monoid().identity()) {
      throw ValidationError(label + " does not preserve the identity");
    }
    for (Element x = 0; x < src.size(); ++x) {
      for (Element y = 0; y < src.size(); ++y) {
        if (con.map[src.monoid().multiply(x, y)] != dst.monoid().multiply(con.map[x], con.map[y])) {
          throw ValidationError(label + " is not a homomorphism at the pair (" + std::to_string(x) + ", " +
                                std::to_string(y) + ")");
        }
      }
    }
  }
  for (const Connector& first : connectors) {
    for (const Connector& second : connectors) {
      if (second.from != first.to) continue;
      for (std::size_t d = 0; d < connectors.size(); ++d) {
        const Connector& direct = connectors[d];
        if (direct.from != first.from || direct.to != second.to) continue;
        for (Element x = 0; x < first.map.size(); ++x) {
          if (second.map[first.map[x]] != direct.map[x]) {
            throw ValidationError("connector " + std::to_string(d) + " disagrees with a composite path at element " +
                                  std::to_string(x));
          }
        }
      }
    }
  }
  ProfiniteSystem sys;
  sys.alphabet_ = alphabet;
  sys.nodes_ = std::move(nodes);
  sys.connectors_ = std::move(connectors);
  return sys;
}

/// One element per node of a system.
struct ProfiniteWordApprox {
  std::vector<Element> components;

  friend bool operator==(const ProfiniteWordApprox&, const ProfiniteWordApprox&) = default;
};

/// Every connector maps the source component to the target component.
inline bool compatible(const ProfiniteSystem& sys, const ProfiniteWordApprox& x) {
  if (x.components.size() != sys.nodes().size()) return false;
  for (const Connector& c : sys.connectors()) {
    if (c.map[x.components[c.from]] != x.components[c.to]) return false;
  }
  return true;
}

/// Image of a finite word under Σ* -> product of nodes.
inline ProfiniteWordApprox embed_word(const ProfiniteSystem& sys, const Word& w) {
  ProfiniteWordApprox out;
  for (const auto& node : sys.nodes()) out.components.push_back(node.hom(w));
  return out;
}

/// Componentwise product in the product of the node monoids.
inline ProfiniteWordApprox multiply(const ProfiniteSystem& sys, const ProfiniteWordApprox& x,
                                    const ProfiniteWordApprox& y) {
  ProfiniteWordApprox out;
  for (std::size_t i = 0; i < sys.nodes().size(); ++i) {
    out.components.push_back(sys.nodes()[i].monoid().multiply(x.components[i], y.components[i]));
  }
  return out;
}

/// Terms over symbols, binary concatenation and the omega power.
struct OmegaTerm {
  enum class Kind { Symbol, Concat, OmegaPower };

  Kind kind = Kind::Symbol;
  Symbol symbol = 0;
  std::vector<OmegaTerm> children;

  static OmegaTerm letter(Symbol a) { return {Kind::Symbol, a, {}}; }
  static OmegaTerm concat(OmegaTerm l, OmegaTerm r) { return {Kind::Concat, 0, {std::move(l), std::move(r)}}; }
  static OmegaTerm omega(OmegaTerm t) { return {Kind::OmegaPower, 0, {std::move(t)}}; }
};

namespace detail {

class OmegaParser {
 public:
  OmegaParser(std::u32string text, const Alphabet& alphabet) : text_(std::move(text)), alphabet_(alphabet) {}

  OmegaTerm parse() {
    OmegaTerm t = parse_sequence();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected '" + utf8::encode(text_.substr(pos_, 1)) + "'", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == U' ' || text_[pos_] == U'\t')) ++pos_;
  }

  bool starts_factor() {
    skip_ws();
    return pos_ < text_.size() && (text_[pos_] == U'(' || !is_reserved_symbol(text_[pos_]));
  }

  OmegaTerm parse_sequence() {
    if (!starts_factor()) throw ParseError("expected an omega-term", pos_);
    OmegaTerm t = parse_factor();
    while (starts_factor()) t = OmegaTerm::concat(std::move(t), parse_factor());
    return t;
  }

  OmegaTerm parse_factor() {
    OmegaTerm t = parse_atom();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == U'^') {
      ++pos_;
      if (pos_ >= text_.size() || (text_[pos_] != U'w' && text_[pos_] != U'ω')) {
        throw ParseError("expected 'w' after '^'", pos_);
      }
      ++pos_;
      t = OmegaTerm::omega(std::move(t));
      skip_ws();
    }
    return t;
  }

  OmegaTerm parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    if (text_[pos_] == U'(') {
      ++pos_;
      OmegaTerm t = parse_sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != U')') throw ParseError("missing ')' for '(' opened", start);
      ++pos_;
      return t;
    }
    char32_t c = text_[pos_++];
    auto s = alphabet_.index_of(c);
    if (!s) {
      std::string sym;
      utf8::append(sym, c);
      throw AlphabetError("symbol '" + sym + "' at position " + std::to_string(start) + " is not in the alphabet {" +
                          alphabet_.to_utf8() + "}");
    }
    return OmegaTerm::letter(*s);
  }

  std::u32string text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

inline Element eval_in(const SigmaMonoid& node, const OmegaTerm& t) {
  switch (t.kind) {
    case OmegaTerm::Kind::Symbol:
      return node.generator(t.symbol);
    case OmegaTerm::Kind::Concat:
      return node.monoid().multiply(eval_in(node, t.children[0]), eval_in(node, t.children[1]));
    case OmegaTerm::Kind::OmegaPower:
      return idempotent_power(node.monoid(), eval_in(node, t.children[0]));
  }
  return node.monoid().identity();
}

inline void print_omega(const OmegaTerm& t, const Alphabet& a, bool in_concat_right, std::string& out) {
  switch (t.kind) {
    case OmegaTerm::Kind::Symbol:
      out += a.symbol_text(t.symbol);
      break;
    case OmegaTerm::Kind::Concat:
      if (in_concat_right) out += '(';
      print_omega(t.children[0], a, false, out);
      print_omega(t.children[1], a, true, out);
      if (in_concat_right) out += ')';
      break;
    case OmegaTerm::Kind::OmegaPower: {
      bool atomic = t.children[0].kind != OmegaTerm::Kind::Concat;
      if (!atomic) out += '(';
      print_omega(t.children[0], a, false, out);
      if (!atomic) out += ')';
      out += "^w";
      break;
    }
  }
}

}  // namespace detail

/// Grammar: symbols, juxtaposition, postfix `^w` (or `^ω`), parentheses.
inline OmegaTerm parse_omega_term(std::string_view text, const Alphabet& alphabet) {
  return detail::OmegaParser(utf8::decode(text), alphabet).parse();
}

inline std::string to_string(const OmegaTerm& t, const Alphabet& alphabet) {
  std::string out;
  detail::print_omega(t, alphabet, false, out);
  return out;
}

/// Componentwise value of t, with x^w read as the idempotent power of x in
/// each node. The result is checked to be connector-compatible.
inline ProfiniteWordApprox eval_omega_term(const ProfiniteSystem& sys, const OmegaTerm& t) {
  ProfiniteWordApprox out;
  for (const auto& node : sys.nodes()) out.components.push_back(detail::eval_in(node, t));
  if (!compatible(sys, out)) throw ValidationError("omega-term value is not compatible with the connectors");
  return out;
}

/// A clopen subset of the completion, given as a subset of one finite node.
class ClopenRecognizer {
 public:
  ClopenRecognizer() = default;
  explicit ClopenRecognizer(MonoidRecognizer r) : recognizer_(std::move(r)) {}
  ClopenRecognizer(SigmaMonoid node, std::vector<bool> subset) : recognizer_(std::move(node), std::move(subset)) {}

  const SigmaMonoid& node() const noexcept { return recognizer_.sigma_monoid(); }
  const std::vector<bool>& subset() const noexcept { return recognizer_.accepting(); }
  const MonoidRecognizer& recognizer() const noexcept { return recognizer_; }
  bool contains(const Word& w) const { return recognizer_.accepts(w); }

 private:
  MonoidRecognizer recognizer_;
};

/// The regular language { w | hom(w) in S }.
inline Language clopen_pullback(const ClopenRecognizer& c) {
  return recognized_language_symbolic(recognizer_automaton(c.recognizer()));
}

/// Classes of a ~ b  <=>  a^-1 S = b^-1 S, where a^-1 S = { m | a m in S }.
/// Classes are listed in order of their least element.
inline std::vector<std::vector<Element>> sim_classes(const FiniteMonoid& m, const std::vector<bool>& subset) {
  if (subset.size() != m.size()) throw ValidationError("subset must flag every monoid element");
  std::map<std::vector<bool>, std::size_t> index;
  std::vector<std::vector<Element>> out;
  for (Element a = 0; a < m.size(); ++a) {
    std::vector<bool> quotient(m.size());
    for (Element x = 0; x < m.size(); ++x) quotient[x] = subset[m.multiply(a, x)];
    auto [it, inserted] = index.emplace(std::move(quotient), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(a);
  }
  return out;
}

struct Equal {};

struct Separation {
  ClopenRecognizer clopen;
  /// Shortlex-least word in exactly one of the two languages; it lies in
  /// the pullback of `clopen`.
  Word witness;
};

using SeparationResult = std::variant<Equal, Separation>;

/// Equal when the languages coincide; otherwise the syntactic recognizer of
/// their symmetric difference.
inline SeparationResult separate(const Language& l1, const Language& l2, std::size_t limit = kDefaultMonoidLimit) {
  require_same_alphabet(l1.alphabet(), l2.alphabet(), "separate");
  if (semantically_equal(l1, l2)) return Equal{};
  auto diff = equivalent(minimal_automaton(l1), minimal_automaton(l2));
  ClopenRecognizer clopen(syntactic_monoid(symmetric_difference(l1, l2), limit));
  return Separation{std::move(clopen), diff.counterexample.value_or(Word{})};
}

}  // namespace reglang

#endif  // REGLANG_PROFINITE_HPP
