#ifndef REGLANG_SIGMA_SET_HPP
#define REGLANG_SIGMA_SET_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"

namespace reglang {

using State = std::size_t;

/// A finite set of states with a total transition function Q x Σ -> Q.
class SigmaSet {
 public:
  SigmaSet() = default;

  /// Validating constructor. `table[q][a]` is the successor of state q on
  /// symbol a; every row must cover the whole alphabet.
  static SigmaSet make(std::vector<std::string> names, const std::vector<std::vector<State>>& table,
                       Alphabet alphabet) {
    const std::size_t n = names.size();
    const std::size_t k = alphabet.size();
    if (table.size() != n) {
      throw ValidationError("transition table has " + std::to_string(table.size()) + " rows for " +
                            std::to_string(n) + " states");
    }
    std::vector<State> delta;
    delta.reserve(n * k);
    for (State q = 0; q < n; ++q) {
      if (table[q].size() < k) {
        throw ValidationError("missing transition for (" + names[q] + ", " +
                              alphabet.symbol_text(static_cast<Symbol>(table[q].size())) + ")");
      }
      if (table[q].size() > k) {
        throw ValidationError("state " + names[q] + " has more transitions than alphabet symbols");
      }
      for (Symbol a = 0; a < k; ++a) {
        if (table[q][a] >= n) {
          throw ValidationError("transition (" + names[q] + ", " + alphabet.symbol_text(a) +
                                ") targets undefined state " + std::to_string(table[q][a]));
        }
        delta.push_back(table[q][a]);
      }
    }
    return SigmaSet(std::move(alphabet), std::move(names), std::move(delta));
  }

  /// Unchecked constructor for internally produced tables (row-major n x k).
  SigmaSet(Alphabet alphabet, std::vector<std::string> names, std::vector<State> delta)
      : alphabet_(std::move(alphabet)), names_(std::move(names)), delta_(std::move(delta)) {}

  std::size_t size() const noexcept { return names_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(State q) const { return names_.at(q); }
  const std::vector<State>& table() const noexcept { return delta_; }

  State step(State q, Symbol a) const { return delta_[q * alphabet_.size() + a]; }

  /// Right action of a word: q.w
  State run(State q, const Word& w) const {
    for (Symbol a : w) q = step(q, a);
    return q;
  }

  std::optional<State> find(std::string_view name) const {
    for (State q = 0; q < names_.size(); ++q) {
      if (names_[q] == name) return q;
    }
    return std::nullopt;
  }

  friend bool operator==(const SigmaSet& a, const SigmaSet& b) {
    return a.alphabet_ == b.alphabet_ && a.names_ == b.names_ && a.delta_ == b.delta_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<State> delta_;
};

inline SigmaSet make_sigma_set(std::vector<std::string> names, const std::vector<std::vector<State>>& table,
                               Alphabet alphabet) {
  return SigmaSet::make(std::move(names), table, std::move(alphabet));
}

/// The one-state Σ-set; terminal in the category of Σ-sets.
inline SigmaSet terminal_sigma_set(const Alphabet& alphabet) {
  return SigmaSet(alphabet, {"*"}, std::vector<State>(alphabet.size(), 0));
}

struct SigmaSetMorphism {
  SigmaSet source;
  SigmaSet target;
  std::vector<State> map;
};

/// First (state, symbol) at which map(delta1(q,a)) != delta2(map(q),a).
inline std::optional<std::pair<State, Symbol>> morphism_violation(const SigmaSetMorphism& f) {
  if (!(f.source.alphabet() == f.target.alphabet())) return std::pair<State, Symbol>{0, 0};
  if (f.map.size() != f.source.size()) return std::pair<State, Symbol>{0, 0};
  for (State q = 0; q < f.source.size(); ++q) {
    if (f.map[q] >= f.target.size()) return std::pair<State, Symbol>{q, 0};
    for (Symbol a = 0; a < f.source.alphabet().size(); ++a) {
      if (f.map[f.source.step(q, a)] != f.target.step(f.map[q], a)) return std::pair<State, Symbol>{q, a};
    }
  }
  return std::nullopt;
}

inline bool check_morphism(const SigmaSetMorphism& f) { return !morphism_violation(f).has_value(); }

/// Finite orbit: the states reachable from the seed in BFS (shortlex) order
/// together with the induced transition table, row-major over orbit indices.
template <class S>
struct FiniteOrbit {
  std::vector<S> orbit;
  std::vector<std::size_t> delta;
};

/// Exploration stopped after `visited` distinct states, more than the bound.
struct ExceededBound {
  std::size_t visited = 0;
};

template <class S>
using OrbitResult = std::variant<FiniteOrbit<S>, ExceededBound>;

template <class S>
bool is_finite(const OrbitResult<S>& r) {
  return std::holds_alternative<FiniteOrbit<S>>(r);
}

inline constexpr std::size_t kDefaultOrbitBound = 10000;

/// Breadth-first closure of {q} under the action.
inline OrbitResult<State> orbit(const SigmaSet& s, State q, std::size_t bound = kDefaultOrbitBound) {
  if (bound == 0) throw ValidationError("orbit bound must be at least 1");
  const std::size_t k = s.alphabet().size();
  std::vector<std::size_t> index(s.size(), s.size());
  FiniteOrbit<State> out;
  index[q] = 0;
  out.orbit.push_back(q);
  for (std::size_t i = 0; i < out.orbit.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      State t = s.step(out.orbit[i], a);
      if (index[t] == s.size()) {
        index[t] = out.orbit.size();
        out.orbit.push_back(t);
        if (out.orbit.size() > bound) return ExceededBound{out.orbit.size()};
      }
      out.delta.push_back(index[t]);
    }
  }
  return out;
}

/// A sub-Σ-set together with its inclusion into the ambient set.
struct SubSigmaSet {
  SigmaSet part;
  std::vector<State> inclusion;
};

/// Union of the orbits that close within `bound`; closed under the action.
inline SubSigmaSet maximal_orbit_finite_part(const SigmaSet& s, std::size_t bound = kDefaultOrbitBound) {
  std::vector<bool> keep(s.size(), false);
  for (State q = 0; q < s.size(); ++q) {
    if (keep[q]) continue;
    auto r = orbit(s, q, bound);
    if (auto* f = std::get_if<FiniteOrbit<State>>(&r)) {
      for (State t : f->orbit) keep[t] = true;
    }
  }
  SubSigmaSet out;
  std::vector<State> renumber(s.size(), 0);
  std::vector<std::string> names;
  for (State q = 0; q < s.size(); ++q) {
    if (!keep[q]) continue;
    renumber[q] = out.inclusion.size();
    out.inclusion.push_back(q);
    names.push_back(s.name(q));
  }
  std::vector<State> delta;
  for (State q : out.inclusion) {
    for (Symbol a = 0; a < s.alphabet().size(); ++a) delta.push_back(renumber[s.step(q, a)]);
  }
  out.part = SigmaSet(s.alphabet(), std::move(names), std::move(delta));
  return out;
}

/// Componentwise product; state (p, q) has index p * |S2| + q.
inline SigmaSet product(const SigmaSet& s1, const SigmaSet& s2) {
  require_same_alphabet(s1.alphabet(), s2.alphabet(), "product");
  const std::size_t k = s1.alphabet().size();
  std::vector<std::string> names;
  std::vector<State> delta;
  for (State p = 0; p < s1.size(); ++p) {
    for (State q = 0; q < s2.size(); ++q) {
      names.push_back("(" + s1.name(p) + "," + s2.name(q) + ")");
      for (Symbol a = 0; a < k; ++a) delta.push_back(s1.step(p, a) * s2.size() + s2.step(q, a));
    }
  }
  return SigmaSet(s1.alphabet(), std::move(names), std::move(delta));
}

inline SigmaSetMorphism product_projection(const SigmaSet& s1, const SigmaSet& s2, int which) {
  SigmaSet prod = product(s1, s2);
  std::vector<State> map(prod.size());
  for (State i = 0; i < prod.size(); ++i) map[i] = which == 0 ? i / s2.size() : i % s2.size();
  return {prod, which == 0 ? s1 : s2, std::move(map)};
}

/// Disjoint union; states of S2 are shifted by |S1|.
inline SigmaSet coproduct(const SigmaSet& s1, const SigmaSet& s2) {
  require_same_alphabet(s1.alphabet(), s2.alphabet(), "coproduct");
  const std::size_t k = s1.alphabet().size();
  std::vector<std::string> names;
  std::vector<State> delta;
  for (State p = 0; p < s1.size(); ++p) {
    names.push_back("inl(" + s1.name(p) + ")");
    for (Symbol a = 0; a < k; ++a) delta.push_back(s1.step(p, a));
  }
  for (State q = 0; q < s2.size(); ++q) {
    names.push_back("inr(" + s2.name(q) + ")");
    for (Symbol a = 0; a < k; ++a) delta.push_back(s1.size() + s2.step(q, a));
  }
  return SigmaSet(s1.alphabet(), std::move(names), std::move(delta));
}

inline SigmaSetMorphism coproduct_injection(const SigmaSet& s1, const SigmaSet& s2, int which) {
  SigmaSet co = coproduct(s1, s2);
  const SigmaSet& src = which == 0 ? s1 : s2;
  std::vector<State> map(src.size());
  for (State i = 0; i < src.size(); ++i) map[i] = which == 0 ? i : s1.size() + i;
  return {src, co, std::move(map)};
}

/// A partition of states given as explicit blocks.
using Partition = std::vector<std::vector<State>>;

/// block_of[q] for a partition; throws if blocks overlap or miss states.
inline std::vector<std::size_t> block_index(const Partition& p, std::size_t n) {
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b].empty()) throw ValidationError("partition has an empty block");
    for (State q : p[b]) {
      if (q >= n) throw ValidationError("partition mentions undefined state " + std::to_string(q));
      if (block_of[q] != n) throw ValidationError("state " + std::to_string(q) + " appears in two blocks");
      block_of[q] = b;
    }
  }
  for (State q = 0; q < n; ++q) {
    if (block_of[q] == n) throw ValidationError("state " + std::to_string(q) + " is in no block");
  }
  return block_of;
}

/// Collapses each block to one state. The partition must be a congruence:
/// related states must have related successors on every symbol.
inline SigmaSetMorphism quotient(const SigmaSet& s, const Partition& partition) {
  auto block_of = block_index(partition, s.size());
  const std::size_t k = s.alphabet().size();
  std::vector<std::string> names;
  std::vector<State> delta;
  for (const auto& block : partition) {
    std::string name = "{";
    for (std::size_t i = 0; i < block.size(); ++i) name += (i ? "," : "") + s.name(block[i]);
    names.push_back(name + "}");
    for (Symbol a = 0; a < k; ++a) {
      std::size_t target = block_of[s.step(block.front(), a)];
      for (State q : block) {
        if (block_of[s.step(q, a)] != target) {
          throw ValidationError("partition is not a congruence: " + s.name(block.front()) + " and " + s.name(q) +
                                " are related but their " + s.alphabet().symbol_text(a) +
                                "-successors are not");
        }
      }
      delta.push_back(target);
    }
  }
  return {s, SigmaSet(s.alphabet(), std::move(names), std::move(delta)), std::move(block_of)};
}

/// Smallest congruence containing the seed pairs, as a partition whose
/// blocks are ordered by their least state.
inline Partition congruence_closure(const SigmaSet& s, const std::vector<std::pair<State, State>>& seeds) {
  std::vector<State> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](State x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<State, State>> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    auto [p, q] = todo.back();
    todo.pop_back();
    State rp = find(p), rq = find(q);
    if (rp == rq) continue;
    parent[std::max(rp, rq)] = std::min(rp, rq);
    for (Symbol a = 0; a < s.alphabet().size(); ++a) todo.emplace_back(s.step(p, a), s.step(q, a));
  }
  std::map<State, std::vector<State>> blocks;
  for (State q = 0; q < s.size(); ++q) blocks[find(q)].push_back(q);
  Partition out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

}  // namespace reglang

#endif  // REGLANG_SIGMA_SET_HPP
