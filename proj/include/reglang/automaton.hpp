#ifndef REGLANG_AUTOMATON_HPP
#define REGLANG_AUTOMATON_HPP

// Automata as coalgebras Q -> 2 x Q^Σ. Recognition is the unique map into
// the automaton of languages; minimal automata come from two routes
// (derivative closure up to semantic equality, and partition refinement).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "language.hpp"
#include "lazy_sigma_set.hpp"
#include "sigma_set.hpp"

namespace reglang {

/// A Σ-set with a set of accepting states. No start state.
class Automaton {
 public:
  Automaton() = default;

  Automaton(SigmaSet carrier, std::vector<bool> accept) : carrier_(std::move(carrier)), accept_(std::move(accept)) {
    if (accept_.size() != carrier_.size()) {
      throw ValidationError("accept flags cover " + std::to_string(accept_.size()) + " states, carrier has " +
                            std::to_string(carrier_.size()));
    }
  }

  static Automaton from_accept_list(SigmaSet carrier, const std::vector<State>& accepting) {
    std::vector<bool> flags(carrier.size(), false);
    for (State q : accepting) {
      if (q >= carrier.size()) throw ValidationError("accepting state " + std::to_string(q) + " is undefined");
      flags[q] = true;
    }
    return Automaton(std::move(carrier), std::move(flags));
  }

  const SigmaSet& carrier() const noexcept { return carrier_; }
  const Alphabet& alphabet() const noexcept { return carrier_.alphabet(); }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool accepting(State q) const { return accept_.at(q); }
  const std::vector<bool>& accept_flags() const noexcept { return accept_; }
  State step(State q, Symbol a) const { return carrier_.step(q, a); }

 private:
  SigmaSet carrier_;
  std::vector<bool> accept_;
};

/// An automaton with a distinguished start state.
class PointedAutomaton {
 public:
  PointedAutomaton() = default;

  PointedAutomaton(Automaton automaton, State start) : automaton_(std::move(automaton)), start_(start) {
    if (start_ >= automaton_.size()) throw ValidationError("start state " + std::to_string(start_) + " is undefined");
  }

  const Automaton& automaton() const noexcept { return automaton_; }
  const SigmaSet& carrier() const noexcept { return automaton_.carrier(); }
  const Alphabet& alphabet() const noexcept { return automaton_.alphabet(); }
  std::size_t size() const noexcept { return automaton_.size(); }
  State start() const noexcept { return start_; }
  bool accepting(State q) const { return automaton_.accepting(q); }
  State step(State q, Symbol a) const { return automaton_.step(q, a); }

  bool accepts(const Word& w) const { return accepting(carrier().run(start_, w)); }

 private:
  Automaton automaton_;
  State start_ = 0;
};

/// Boolean form of recognition: does the run from q on `probe` end in F?
inline bool recognized_language(const Automaton& a, State q, const Word& probe) {
  return a.accepting(a.carrier().run(q, probe));
}

/// Output of a Moore machine with state outputs `output`, started in q and
/// fed w: output(q.w).
template <class Output>
auto moore_run(const SigmaSet& s, Output&& output, State q, const Word& w) {
  return std::invoke(std::forward<Output>(output), s.run(q, w));
}

/// States reachable from `start`, in BFS (shortlex access word) order.
inline std::vector<State> reachable_states(const SigmaSet& s, State start) {
  std::vector<State> order{start};
  std::vector<bool> seen(s.size(), false);
  seen[start] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol a = 0; a < s.alphabet().size(); ++a) {
      State t = s.step(order[i], a);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

/// Restriction to the states reachable from the start, renumbered in BFS order.
inline PointedAutomaton reachable_part(const PointedAutomaton& a) {
  auto order = reachable_states(a.carrier(), a.start());
  std::vector<State> index(a.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::vector<std::string> names;
  std::vector<State> delta;
  std::vector<bool> accept;
  for (State q : order) {
    names.push_back(a.carrier().name(q));
    accept.push_back(a.accepting(q));
    for (Symbol s = 0; s < a.alphabet().size(); ++s) delta.push_back(index[a.step(q, s)]);
  }
  return {Automaton(SigmaSet(a.alphabet(), std::move(names), std::move(delta)), std::move(accept)), 0};
}

/// Moore-style partition refinement: prune unreachable states, split the
/// accept/reject partition until it is a congruence, and quotient. Output
/// states are numbered in BFS order from the start; each keeps the name of
/// its first member in that order.
inline PointedAutomaton minimize(const PointedAutomaton& input) {
  PointedAutomaton a = reachable_part(input);
  const std::size_t n = a.size();
  const std::size_t k = a.alphabet().size();

  std::vector<std::size_t> cls(n);
  std::size_t count = 0;
  {
    std::map<bool, std::size_t> ids;
    for (State q = 0; q < n; ++q) {
      auto [it, inserted] = ids.emplace(a.accepting(q), ids.size());
      cls[q] = it->second;
    }
    count = ids.size();
  }
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[q]);
      for (Symbol s = 0; s < k; ++s) sig.push_back(cls[a.step(q, s)]);
      auto [it, inserted] = ids.emplace(std::move(sig), ids.size());
      next[q] = it->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }

  std::vector<State> rep(count, n);
  for (State q = 0; q < n; ++q) {
    if (rep[cls[q]] == n) rep[cls[q]] = q;
  }
  std::vector<std::string> names;
  std::vector<State> delta;
  std::vector<bool> accept;
  for (std::size_t c = 0; c < count; ++c) {
    names.push_back(a.carrier().name(rep[c]));
    accept.push_back(a.accepting(rep[c]));
    for (Symbol s = 0; s < k; ++s) delta.push_back(cls[a.step(rep[c], s)]);
  }
  PointedAutomaton quotient(Automaton(SigmaSet(a.alphabet(), std::move(names), std::move(delta)), std::move(accept)),
                            cls[0]);
  return reachable_part(quotient);
}

namespace detail {

/// Regex for the language of a pointed automaton by state elimination,
/// removing the state with the fewest in*out edges first.
inline NodePtr eliminate_states(const PointedAutomaton& a) {
  const std::size_t n = a.size();
  const std::size_t src = n, dst = n + 1;
  std::vector<std::vector<NodePtr>> r(n + 2, std::vector<NodePtr>(n + 2, empty_node()));
  for (State q = 0; q < n; ++q) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      State t = a.step(q, s);
      r[q][t] = union_node({r[q][t], literal_node(s)});
    }
    if (a.accepting(q)) r[q][dst] = epsilon_node();
  }
  r[src][a.start()] = epsilon_node();

  std::vector<bool> alive(n + 2, true);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best = n, best_cost = std::numeric_limits<std::size_t>::max();
    for (State k = 0; k < n; ++k) {
      if (!alive[k]) continue;
      std::size_t in = 0, out = 0;
      for (std::size_t i = 0; i < n + 2; ++i) {
        if (!alive[i] || i == k) continue;
        if (r[i][k]->kind != Kind::Empty) ++in;
        if (r[k][i]->kind != Kind::Empty) ++out;
      }
      if (in * out < best_cost) {
        best_cost = in * out;
        best = k;
      }
    }
    const std::size_t k = best;
    NodePtr loop = star_node(r[k][k]);
    for (std::size_t i = 0; i < n + 2; ++i) {
      if (!alive[i] || i == k || r[i][k]->kind == Kind::Empty) continue;
      for (std::size_t j = 0; j < n + 2; ++j) {
        if (!alive[j] || j == k || r[k][j]->kind == Kind::Empty) continue;
        r[i][j] = union_node({r[i][j], concat_node({r[i][k], loop, r[k][j]})});
      }
    }
    alive[k] = false;
  }
  return r[src][dst];
}

}  // namespace detail

/// Symbolic form of recognition: a regex for the language accepted from q.
/// The automaton is minimized first; the result is normalized but not
/// necessarily the shortest expression.
inline Language recognized_language_symbolic(const Automaton& a, State q) {
  PointedAutomaton m = minimize(PointedAutomaton(a, q));
  return Language(a.alphabet(), detail::eliminate_states(m));
}

inline Language recognized_language_symbolic(const PointedAutomaton& a) {
  return recognized_language_symbolic(a.automaton(), a.start());
}

/// Outcome of a law check; `failure` names the first violated law.
struct LawCheck {
  bool ok = true;
  std::string failure;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that q |-> family[q] is a morphism into the automaton of
/// languages: eps in L_q iff q in F, a^-1 L_q = L_{q.a}, and L_q agrees
/// with runs from q on every sample word.
inline LawCheck recognition_morphism_check(const Automaton& a, const std::vector<Language>& family,
                                           const std::vector<Word>& samples) {
  if (family.size() != a.size()) {
    return {false, "family has " + std::to_string(family.size()) + " languages for " + std::to_string(a.size()) +
                       " states"};
  }
  DerivativeCache cache;
  const auto& names = a.carrier().names();
  for (State q = 0; q < a.size(); ++q) {
    if (family[q].nullable() != a.accepting(q)) {
      return {false, "epsilon law fails at state " + names[q]};
    }
  }
  for (State q = 0; q < a.size(); ++q) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      if (!semantically_equal(derivative(family[q], s, &cache), family[a.step(q, s)], &cache)) {
        return {false, "derivative law fails at state " + names[q] + " on symbol " + a.alphabet().symbol_text(s)};
      }
    }
  }
  for (State q = 0; q < a.size(); ++q) {
    for (const Word& w : samples) {
      if (contains(family[q], w, &cache) != recognized_language(a, q, w)) {
        return {false, "state " + names[q] + " disagrees with its run on " + a.alphabet().format_word(w)};
      }
    }
  }
  return {};
}

inline std::vector<Language> recognition_family(const Automaton& a) {
  std::vector<Language> family;
  family.reserve(a.size());
  for (State q = 0; q < a.size(); ++q) family.push_back(recognized_language_symbolic(a, q));
  return family;
}

inline LawCheck recognition_morphism_check(const Automaton& a, const std::vector<Word>& samples) {
  return recognition_morphism_check(a, recognition_family(a), samples);
}

namespace detail {

template <class S>
PointedAutomaton automaton_from_orbit(const FiniteOrbit<S>& orbit, const Alphabet& alphabet,
                                      const std::function<bool(const S&)>& accepting,
                                      const std::function<std::string(const S&, std::size_t)>& name) {
  std::vector<std::string> names;
  std::vector<bool> accept;
  for (std::size_t i = 0; i < orbit.orbit.size(); ++i) {
    names.push_back(name(orbit.orbit[i], i));
    accept.push_back(accepting(orbit.orbit[i]));
  }
  return {Automaton(SigmaSet(alphabet, std::move(names), orbit.delta), std::move(accept)), 0};
}

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max() - 1;

}  // namespace detail

/// The minimal automaton of L: the derivative closure of L with states
/// merged by semantic equality. Start = class of L, accepting = nullable
/// classes. States are named by a representative expression.
inline PointedAutomaton minimal_automaton(const Language& l) {
  auto set = derivative_sigma_set(l.alphabet(), {l});
  auto r = orbit(set, l, detail::kUnbounded);
  return detail::automaton_from_orbit<Language>(
      std::get<FiniteOrbit<Language>>(r), l.alphabet(), [](const Language& x) { return x.nullable(); },
      [](const Language& x, std::size_t) { return to_string(x); });
}

/// Derivative closure of L identified only by normal form, without any
/// semantic merging. Usually larger than the minimal automaton.
inline PointedAutomaton derivative_automaton(const Language& l) {
  auto set = structural_derivative_sigma_set(l.alphabet(), {l});
  auto r = orbit(set, l, detail::kUnbounded);
  return detail::automaton_from_orbit<Language>(
      std::get<FiniteOrbit<Language>>(r), l.alphabet(), [](const Language& x) { return x.nullable(); },
      [](const Language& x, std::size_t) { return to_string(x); });
}

struct Regular {
  PointedAutomaton minimal;
  std::size_t nerode_class_count = 0;
};

struct Unknown {
  std::size_t bound_hit = 0;
};

using RegularityResult = std::variant<Regular, Unknown>;

/// Regularity of the language presented by `start` in a lazy Σ-set with an
/// acceptance predicate: Regular when the orbit of `start` closes within
/// `bound`, in which case the Nerode classes are the states of the minimized
/// orbit automaton.
template <class S, class Registry>
RegularityResult is_regular(const LazySigmaSet<S, Registry>& set, const S& start,
                            const std::function<bool(const S&)>& accepting, std::size_t bound = kDefaultOrbitBound) {
  auto r = orbit(set, start, bound);
  if (std::holds_alternative<ExceededBound>(r)) return Unknown{bound};
  auto a = detail::automaton_from_orbit<S>(std::get<FiniteOrbit<S>>(r), set.alphabet(), accepting,
                                           [&](const S& s, std::size_t i) { return set.name(s, i); });
  auto m = minimize(a);
  std::size_t classes = m.size();
  return Regular{std::move(m), classes};
}

inline RegularityResult is_regular(const Language& l, std::size_t bound = kDefaultOrbitBound) {
  auto set = derivative_sigma_set(l.alphabet(), {l});
  return is_regular<Language>(set, l, [](const Language& x) { return x.nullable(); }, bound);
}

struct EquivalenceResult {
  bool equivalent = true;
  /// Shortlex-least word accepted by exactly one side, when not equivalent.
  std::optional<Word> counterexample;

  explicit operator bool() const noexcept { return equivalent; }
};

/// Language equality of two pointed automata by BFS over the product. The
/// BFS explores symbols in alphabet order, so the first mismatch found is at
/// the shortlex-least distinguishing word.
inline EquivalenceResult equivalent(const PointedAutomaton& a1, const PointedAutomaton& a2) {
  require_same_alphabet(a1.alphabet(), a2.alphabet(), "equivalent");
  const std::size_t n2 = a2.size();
  const std::size_t k = a1.alphabet().size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(a1.size() * n2, none);
  std::vector<Symbol> via(a1.size() * n2, 0);
  std::vector<std::size_t> queue{a1.start() * n2 + a2.start()};
  parent[queue.front()] = queue.front();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t cur = queue[i];
    State p = cur / n2, q = cur % n2;
    if (a1.accepting(p) != a2.accepting(q)) {
      Word w;
      while (parent[cur] != cur) {
        w.push_back(via[cur]);
        cur = parent[cur];
      }
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    for (Symbol s = 0; s < k; ++s) {
      std::size_t next = a1.step(p, s) * n2 + a2.step(q, s);
      if (parent[next] == none) {
        parent[next] = cur;
        via[next] = s;
        queue.push_back(next);
      }
    }
  }
  return {};
}

enum class BoolOp { Union, Intersect };

/// Reachable product automaton with accept set {(p,q) | p in F1 op q in F2}.
inline PointedAutomaton boolean_combine(const PointedAutomaton& a1, const PointedAutomaton& a2, BoolOp op) {
  require_same_alphabet(a1.alphabet(), a2.alphabet(), "boolean_combine");
  const std::size_t n2 = a2.size();
  const std::size_t k = a1.alphabet().size();
  std::map<std::size_t, std::size_t> index;
  std::vector<std::size_t> order{a1.start() * n2 + a2.start()};
  index.emplace(order.front(), 0);
  std::vector<State> delta;
  for (std::size_t i = 0; i < order.size(); ++i) {
    State p = order[i] / n2, q = order[i] % n2;
    for (Symbol s = 0; s < k; ++s) {
      std::size_t next = a1.step(p, s) * n2 + a2.step(q, s);
      auto [it, inserted] = index.emplace(next, order.size());
      if (inserted) order.push_back(next);
      delta.push_back(it->second);
    }
  }
  std::vector<std::string> names;
  std::vector<bool> accept;
  for (std::size_t pair : order) {
    State p = pair / n2, q = pair % n2;
    names.push_back("(" + a1.carrier().name(p) + "," + a2.carrier().name(q) + ")");
    accept.push_back(op == BoolOp::Union ? (a1.accepting(p) || a2.accepting(q))
                                         : (a1.accepting(p) && a2.accepting(q)));
  }
  return {Automaton(SigmaSet(a1.alphabet(), std::move(names), std::move(delta)), std::move(accept)), 0};
}

inline PointedAutomaton complement(const PointedAutomaton& a) {
  std::vector<bool> flipped(a.automaton().accept_flags());
  flipped.flip();
  return {Automaton(a.carrier(), std::move(flipped)), a.start()};
}

/// Is there a start- and accept-preserving equivariant bijection between
/// the reachable parts? Decided by one synchronized BFS.
inline bool isomorphic(const PointedAutomaton& x, const PointedAutomaton& y) {
  if (!(x.alphabet() == y.alphabet())) return false;
  PointedAutomaton a = reachable_part(x), b = reachable_part(y);
  if (a.size() != b.size()) return false;
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> fwd(a.size(), none), back(b.size(), none);
  std::vector<State> queue{0};
  fwd[0] = 0;
  back[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    State p = queue[i], q = fwd[p];
    if (a.accepting(p) != b.accepting(q)) return false;
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      State pn = a.step(p, s), qn = b.step(q, s);
      if (fwd[pn] == none && back[qn] == none) {
        fwd[pn] = qn;
        back[qn] = pn;
        queue.push_back(pn);
      } else if (fwd[pn] != qn || back[qn] != pn) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace reglang

#endif  // REGLANG_AUTOMATON_HPP
