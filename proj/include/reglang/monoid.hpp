#ifndef REGLANG_MONOID_HPP
#define REGLANG_MONOID_HPP

// Finite monoids, Σ-monoids (a monoid with one generator element per
// symbol), transition monoids, and monoid recognition of languages.
//
// Multiplication in a transition monoid is diagrammatic: (f . g)(q) is
// g(f(q)), i.e. the opposite of End(Q). With this convention the induced
// map Σ* -> M satisfies hom(uv) = hom(u) . hom(v) with no reversal.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "alphabet.hpp"
#include "automaton.hpp"
#include "error.hpp"
#include "language.hpp"
#include "sigma_set.hpp"

namespace reglang {

using Element = std::uint32_t;

class FiniteMonoid {
 public:
  /// Associativity is checked on every triple up to this size and on
  /// kAssociativitySamples random triples above it.
  static constexpr std::size_t kExhaustiveAssociativityLimit = 64;
  static constexpr std::size_t kAssociativitySamples = 200000;

  FiniteMonoid() : n_(1), table_{0}, identity_(0) {}

  /// Validating constructor: square table, entries in range, two-sided
  /// identity, associativity.
  static FiniteMonoid make(const std::vector<std::vector<Element>>& table, Element identity) {
    const std::size_t n = table.size();
    if (n == 0) throw ValidationError("a monoid needs at least one element");
    if (identity >= n) throw ValidationError("identity index " + std::to_string(identity) + " out of range");
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw ValidationError("multiplication table row " + std::to_string(i) + " is not of length " + std::to_string(n));
      for (Element e : table[i]) {
        if (e >= n) throw ValidationError("table entry " + std::to_string(e) + " out of range");
        flat.push_back(e);
      }
    }
    FiniteMonoid m(n, std::move(flat), identity);
    m.validate();
    return m;
  }

  /// Unchecked constructor for tables produced by trusted constructions.
  FiniteMonoid(std::size_t n, std::vector<Element> flat, Element identity)
      : n_(n), table_(std::move(flat)), identity_(identity) {}

  std::size_t size() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element multiply(Element x, Element y) const { return table_[x * n_ + y]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
    return out;
  }

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  void validate() const {
    for (Element x = 0; x < n_; ++x) {
      if (multiply(identity_, x) != x || multiply(x, identity_) != x) {
        throw ValidationError("element " + std::to_string(identity_) + " is not a two-sided identity (fails at " +
                              std::to_string(x) + ")");
      }
    }
    auto check = [&](Element x, Element y, Element z) {
      if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
        throw ValidationError("multiplication is not associative at (" + std::to_string(x) + ", " +
                              std::to_string(y) + ", " + std::to_string(z) + ")");
      }
    };
    if (n_ <= kExhaustiveAssociativityLimit) {
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y)
          for (Element z = 0; z < n_; ++z) check(x, y, z);
    } else {
      std::mt19937_64 rng(0x5eed);
      for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
        check(static_cast<Element>(rng() % n_), static_cast<Element>(rng() % n_), static_cast<Element>(rng() % n_));
      }
    }
  }

  std::size_t n_;
  std::vector<Element> table_;
  Element identity_;
};

inline FiniteMonoid make_monoid(const std::vector<std::vector<Element>>& table, Element identity) {
  return FiniteMonoid::make(table, identity);
}

/// Z_n under addition, element i standing for i mod n.
inline FiniteMonoid cyclic_group(std::size_t n) {
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteMonoid(n, std::move(flat), 0);
}

/// The unique idempotent among x, x^2, x^3, ...
inline Element idempotent_power(const FiniteMonoid& m, Element x) {
  Element p = x;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    if (m.multiply(p, p) == p) return p;
    p = m.multiply(p, x);
  }
  throw ValidationError("no idempotent power found; table is not a finite monoid");
}

/// A finite monoid with a generator element m_a for every symbol a.
class SigmaMonoid {
 public:
  SigmaMonoid() = default;

  SigmaMonoid(FiniteMonoid monoid, Alphabet alphabet, std::vector<Element> generators,
              std::vector<std::string> element_names = {})
      : monoid_(std::move(monoid)),
        alphabet_(std::move(alphabet)),
        generators_(std::move(generators)),
        names_(std::move(element_names)) {
    if (generators_.size() != alphabet_.size()) {
      throw ValidationError("need one generator per symbol: got " + std::to_string(generators_.size()) + " for " +
                            std::to_string(alphabet_.size()) + " symbols");
    }
    for (Element g : generators_) {
      if (g >= monoid_.size()) throw ValidationError("generator index " + std::to_string(g) + " out of range");
    }
    if (!names_.empty() && names_.size() != monoid_.size()) {
      throw ValidationError("element_names must name every element");
    }
  }

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  Element generator(Symbol a) const { return generators_.at(a); }
  std::size_t size() const noexcept { return monoid_.size(); }
  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  std::string element_name(Element e) const { return names_.empty() ? std::to_string(e) : names_[e]; }

  /// The homomorphism Σ* -> M determined by a |-> m_a.
  Element hom(const Word& w) const {
    Element x = monoid_.identity();
    for (Symbol a : w) x = monoid_.multiply(x, generators_.at(a));
    return x;
  }

 private:
  FiniteMonoid monoid_;
  Alphabet alphabet_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
};

/// L = hom^-1(S) for a Σ-monoid and a subset S.
class MonoidRecognizer {
 public:
  MonoidRecognizer() = default;

  MonoidRecognizer(SigmaMonoid sigma_monoid, std::vector<bool> accepting)
      : sigma_monoid_(std::move(sigma_monoid)), accepting_(std::move(accepting)) {
    if (accepting_.size() != sigma_monoid_.size()) {
      throw ValidationError("accepting subset must flag every monoid element");
    }
  }

  static MonoidRecognizer from_subset(SigmaMonoid sm, const std::vector<Element>& subset) {
    std::vector<bool> flags(sm.size(), false);
    for (Element e : subset) {
      if (e >= sm.size()) throw ValidationError("subset element " + std::to_string(e) + " out of range");
      flags[e] = true;
    }
    return MonoidRecognizer(std::move(sm), std::move(flags));
  }

  const SigmaMonoid& sigma_monoid() const noexcept { return sigma_monoid_; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  bool accepting(Element e) const { return accepting_.at(e); }

  std::vector<Element> accepting_elements() const {
    std::vector<Element> out;
    for (Element e = 0; e < accepting_.size(); ++e)
      if (accepting_[e]) out.push_back(e);
    return out;
  }

  bool accepts(const Word& w) const { return accepting_[sigma_monoid_.hom(w)]; }

 private:
  SigmaMonoid sigma_monoid_;
  std::vector<bool> accepting_;
};

/// The Σ-set on M with action m.a = m . m_a.
inline SigmaSet as_sigma_set(const SigmaMonoid& sm) {
  const std::size_t k = sm.alphabet().size();
  std::vector<std::string> names;
  std::vector<State> delta;
  for (Element m = 0; m < sm.size(); ++m) {
    names.push_back(sm.element_name(m));
    for (Symbol a = 0; a < k; ++a) delta.push_back(sm.monoid().multiply(m, sm.generator(a)));
  }
  return SigmaSet(sm.alphabet(), std::move(names), std::move(delta));
}

/// The automaton (M, start e, accept S) of a recognizer.
inline PointedAutomaton recognizer_automaton(const MonoidRecognizer& r) {
  return {Automaton(as_sigma_set(r.sigma_monoid()), r.accepting()), r.sigma_monoid().monoid().identity()};
}

inline constexpr std::size_t kDefaultMonoidLimit = 4096;

/// Transition monoid together with the state transformation of each element.
struct TransitionMonoid {
  SigmaMonoid sigma_monoid;
  std::vector<std::vector<State>> transformations;
};

namespace detail {
struct TransformationHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size();
    for (State s : v) h = mix(h, s);
    return h;
  }
};
}  // namespace detail

/// The submonoid of End(Q)^op generated by the maps delta(-, a). Elements
/// are ordered by their shortlex-least word, which also names them; element
/// 0 is the identity. Throws LimitError beyond `limit` elements.
inline TransitionMonoid transition_monoid(const SigmaSet& s, std::size_t limit = kDefaultMonoidLimit) {
  const std::size_t n = s.size();
  const std::size_t k = s.alphabet().size();
  std::vector<std::vector<State>> elems;
  std::unordered_map<std::vector<State>, Element, detail::TransformationHash> index;
  std::vector<Element> parent{0};
  std::vector<Symbol> last{0};
  std::vector<Element> right;  // right[i * k + a] = elems[i] . m_a

  std::vector<State> id(n);
  for (State q = 0; q < n; ++q) id[q] = q;
  index.emplace(id, 0);
  elems.push_back(std::move(id));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      std::vector<State> next(n);
      for (State q = 0; q < n; ++q) next[q] = s.step(elems[i][q], a);
      auto [it, inserted] = index.emplace(next, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= limit) {
          throw LimitError("transition monoid exceeds " + std::to_string(limit) + " elements");
        }
        elems.push_back(std::move(next));
        parent.push_back(static_cast<Element>(i));
        last.push_back(a);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t m = elems.size();
  std::vector<Element> flat(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    flat[x * m] = static_cast<Element>(x);
    for (std::size_t y = 1; y < m; ++y) flat[x * m + y] = right[flat[x * m + parent[y]] * k + last[y]];
  }

  std::vector<std::string> names(m);
  names[0] = "ε";
  for (std::size_t y = 1; y < m; ++y) {
    names[y] = (parent[y] == 0 ? std::string() : names[parent[y]]) + s.alphabet().symbol_text(last[y]);
  }
  std::vector<Element> gens(k);
  for (Symbol a = 0; a < k; ++a) gens[a] = right[a];

  return {SigmaMonoid(FiniteMonoid(m, std::move(flat), 0), s.alphabet(), std::move(gens), std::move(names)),
          std::move(elems)};
}

/// phi |-> phi(q0) from the transition monoid (as a Σ-set) onto the orbit
/// of q0; sends the identity to q0.
inline SigmaSetMorphism covering_morphism(const SigmaSet& s, State q0, std::size_t limit = kDefaultMonoidLimit) {
  if (q0 >= s.size()) throw ValidationError("state " + std::to_string(q0) + " is undefined");
  auto tm = transition_monoid(s, limit);
  std::vector<State> map;
  map.reserve(tm.transformations.size());
  for (const auto& phi : tm.transformations) map.push_back(phi[q0]);
  return {as_sigma_set(tm.sigma_monoid), s, std::move(map)};
}

/// Decides hom^-1(S) = L exactly; on failure the counterexample is the
/// shortlex-least word on which they disagree.
inline EquivalenceResult monoid_recognizes(const MonoidRecognizer& r, const Language& l) {
  require_same_alphabet(r.sigma_monoid().alphabet(), l.alphabet(), "monoid_recognizes");
  return equivalent(recognizer_automaton(r), minimal_automaton(l));
}

/// Transition monoid of the minimal automaton, accepting the elements that
/// send the start state into F.
inline MonoidRecognizer syntactic_monoid(const Language& l, std::size_t limit = kDefaultMonoidLimit) {
  PointedAutomaton m = minimal_automaton(l);
  auto tm = transition_monoid(m.carrier(), limit);
  std::vector<bool> accepting;
  accepting.reserve(tm.transformations.size());
  for (const auto& phi : tm.transformations) accepting.push_back(m.accepting(phi[m.start()]));
  return MonoidRecognizer(std::move(tm.sigma_monoid), std::move(accepting));
}

/// Generator-preserving isomorphism x |-> y of Σ-monoids, when one exists.
/// Both monoids must be generated by their generators.
inline std::optional<std::vector<Element>> sigma_monoid_isomorphism(const SigmaMonoid& x, const SigmaMonoid& y) {
  if (!(x.alphabet() == y.alphabet()) || x.size() != y.size()) return std::nullopt;
  constexpr Element none = static_cast<Element>(-1);
  std::vector<Element> fwd(x.size(), none), back(y.size(), none);
  std::vector<Element> queue{x.monoid().identity()};
  fwd[x.monoid().identity()] = y.monoid().identity();
  back[y.monoid().identity()] = x.monoid().identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element p = queue[i], q = fwd[p];
    for (Symbol a = 0; a < x.alphabet().size(); ++a) {
      Element pn = x.monoid().multiply(p, x.generator(a));
      Element qn = y.monoid().multiply(q, y.generator(a));
      if (fwd[pn] == none && back[qn] == none) {
        fwd[pn] = qn;
        back[qn] = pn;
        queue.push_back(pn);
      } else if (fwd[pn] != qn || back[qn] != pn) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != x.size()) return std::nullopt;
  return fwd;
}

enum class Division { Yes, No, Unknown };

inline const char* to_string(Division d) {
  switch (d) {
    case Division::Yes: return "yes";
    case Division::No: return "no";
    case Division::Unknown: return "unknown";
  }
  return "?";
}

inline constexpr std::size_t kDefaultDivisionBudget = 8;

namespace detail {

using Mask = std::uint32_t;

inline Mask submonoid_closure(const FiniteMonoid& n, Mask generators) {
  Mask closed = generators | (Mask{1} << n.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x = 0; x < n.size(); ++x) {
      if (!(closed >> x & 1)) continue;
      for (Element y = 0; y < n.size(); ++y) {
        if (!(closed >> y & 1)) continue;
        Element z = n.multiply(x, y);
        if (!(closed >> z & 1)) {
          closed |= Mask{1} << z;
          grew = true;
        }
      }
    }
  }
  return closed;
}

/// Does some assignment of images to `gens` extend to a homomorphism from
/// the submonoid of n they generate onto m?
inline bool has_surjection(const FiniteMonoid& n, const std::vector<Element>& gens, const FiniteMonoid& m) {
  std::vector<Element> img(gens.size(), 0);
  constexpr Element none = static_cast<Element>(-1);
  std::vector<Element> phi(n.size(), none);
  while (true) {
    std::fill(phi.begin(), phi.end(), none);
    phi[n.identity()] = m.identity();
    std::vector<Element> queue{n.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Element t = n.multiply(queue[i], gens[g]);
        Element v = m.multiply(phi[queue[i]], img[g]);
        if (phi[t] == none) {
          phi[t] = v;
          queue.push_back(t);
        } else if (phi[t] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<bool> hit(m.size(), false);
      std::size_t covered = 0;
      for (Element t : queue) {
        if (!hit[phi[t]]) {
          hit[phi[t]] = true;
          ++covered;
        }
      }
      if (covered == m.size()) return true;
    }
    std::size_t pos = 0;
    while (pos < img.size() && ++img[pos] == m.size()) img[pos++] = 0;
    if (pos == img.size()) return false;
  }
}

}  // namespace detail

/// Is M a quotient of a submonoid of N? Exhaustive over the submonoids of N
/// (sharing N's identity) and over homomorphisms out of each; Unknown when
/// |N| exceeds the budget.
inline Division divides(const FiniteMonoid& m, const FiniteMonoid& n, std::size_t budget = kDefaultDivisionBudget) {
  if (m.size() == 1) return Division::Yes;
  if (n.size() > budget || n.size() > 20) return Division::Unknown;
  if (m.size() > n.size()) return Division::No;

  std::set<detail::Mask> seen;
  const detail::Mask full = (detail::Mask{1} << n.size()) - 1;
  for (detail::Mask subset = 0; subset <= full; ++subset) {
    detail::Mask sub = detail::submonoid_closure(n, subset);
    if (!seen.insert(sub).second) continue;
    if (static_cast<std::size_t>(std::popcount(sub)) < m.size()) continue;
    std::vector<Element> gens;
    detail::Mask generated = detail::submonoid_closure(n, 0);
    for (Element x = 0; x < n.size(); ++x) {
      if ((sub >> x & 1) && !(generated >> x & 1)) {
        gens.push_back(x);
        generated = detail::submonoid_closure(n, generated | (detail::Mask{1} << x));
      }
    }
    if (detail::has_surjection(n, gens, m)) return Division::Yes;
  }
  return Division::No;
}

/// Cayley table as aligned text, rows times columns.
inline std::string cayley_table(const SigmaMonoid& sm) {
  const std::size_t n = sm.size();
  std::vector<std::string> names(n);
  std::size_t width = 1;
  for (Element e = 0; e < n; ++e) {
    names[e] = sm.element_name(e);
    width = std::max(width, utf8::decode(names[e]).size());
  }
  auto pad = [&](const std::string& s) {
    std::size_t len = utf8::decode(s).size();
    return s + std::string(width - len + 1, ' ');
  };
  std::string out;
  auto end_line = [&out] {
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  };
  out += pad("·") + "|";
  for (Element e = 0; e < n; ++e) out += ' ' + pad(names[e]);
  end_line();
  out += std::string(width + 1, '-') + "+" + std::string(n * (width + 2), '-') + '\n';
  for (Element x = 0; x < n; ++x) {
    out += pad(names[x]) + "|";
    for (Element y = 0; y < n; ++y) out += ' ' + pad(names[sm.monoid().multiply(x, y)]);
    end_line();
  }
  return out;
}

}  // namespace reglang

#endif  // REGLANG_MONOID_HPP
