#ifndef REGLANG_LAZY_SIGMA_SET_HPP
#define REGLANG_LAZY_SIGMA_SET_HPP

// Σ-sets given by a step function over an arbitrary state type. Such a
// Σ-set may be infinite (the Σ-set of all languages is one), so orbit
// exploration is cut off at a bound.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "language.hpp"
#include "sigma_set.hpp"

namespace reglang {

/// Identity of states by hashing and equality.
template <class S, class Hash = std::hash<S>, class Eq = std::equal_to<S>>
class HashRegistry {
 public:
  /// Index of `s`, inserting it when new; `second` is true on insertion.
  std::pair<std::size_t, bool> intern(const S& s) {
    auto [it, inserted] = index_.emplace(s, index_.size());
    return {it->second, inserted};
  }

 private:
  std::unordered_map<S, std::size_t, Hash, Eq> index_;
};

/// Language states identified structurally (ACI normal form only).
using StructuralLanguageRegistry = HashRegistry<Language, LanguageHash>;

/// Language states identified up to semantic equality: a structurally new
/// expression is compared against earlier states of the same nullability.
class SemanticLanguageRegistry {
 public:
  std::pair<std::size_t, bool> intern(const Language& l) {
    if (auto it = index_.find(l.node()); it != index_.end()) return {it->second, false};
    for (std::size_t j = 0; j < reps_.size(); ++j) {
      if (reps_[j].nullable() != l.nullable()) continue;
      if (semantically_equal(l, reps_[j], &cache_)) {
        index_.emplace(l.node(), j);
        return {j, false};
      }
    }
    index_.emplace(l.node(), reps_.size());
    reps_.push_back(l);
    return {reps_.size() - 1, true};
  }

 private:
  detail::NodeMap<std::size_t> index_;
  std::vector<Language> reps_;
  DerivativeCache cache_;
};

template <class S, class Registry = HashRegistry<S>>
class LazySigmaSet {
 public:
  using Step = std::function<S(const S&, Symbol)>;
  using Namer = std::function<std::string(const S&)>;

  LazySigmaSet(Alphabet alphabet, std::vector<S> seeds, Step step, Namer namer = {})
      : alphabet_(std::move(alphabet)), seeds_(std::move(seeds)), step_(std::move(step)), namer_(std::move(namer)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<S>& seeds() const noexcept { return seeds_; }
  S step(const S& s, Symbol a) const { return step_(s, a); }

  std::string name(const S& s, std::size_t index) const {
    return namer_ ? namer_(s) : "s" + std::to_string(index);
  }

 private:
  Alphabet alphabet_;
  std::vector<S> seeds_;
  Step step_;
  Namer namer_;
};

namespace detail {

/// BFS from several roots, sharing one registry. Returns nullopt once more
/// than `bound` distinct states have been seen, reporting the count.
template <class S, class Registry>
std::optional<FiniteOrbit<S>> explore(const LazySigmaSet<S, Registry>& set, const std::vector<S>& roots,
                                      std::size_t bound, std::size_t& visited) {
  Registry registry;
  FiniteOrbit<S> out;
  for (const S& r : roots) {
    if (registry.intern(r).second) {
      out.orbit.push_back(r);
      if (out.orbit.size() > bound) {
        visited = out.orbit.size();
        return std::nullopt;
      }
    }
  }
  const std::size_t k = set.alphabet().size();
  for (std::size_t i = 0; i < out.orbit.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      S next = set.step(out.orbit[i], a);
      auto [idx, inserted] = registry.intern(next);
      if (inserted) {
        out.orbit.push_back(std::move(next));
        if (out.orbit.size() > bound) {
          visited = out.orbit.size();
          return std::nullopt;
        }
      }
      out.delta.push_back(idx);
    }
  }
  visited = out.orbit.size();
  return out;
}

}  // namespace detail

template <class S, class Registry>
OrbitResult<S> orbit(const LazySigmaSet<S, Registry>& set, const S& q, std::size_t bound = kDefaultOrbitBound) {
  if (bound == 0) throw ValidationError("orbit bound must be at least 1");
  std::size_t visited = 0;
  if (auto r = detail::explore(set, std::vector<S>{q}, bound, visited)) return std::move(*r);
  return ExceededBound{visited};
}

/// Sub-Σ-set spanned by the seeds whose orbits close within the bound.
template <class S>
struct LazyOrbitFinitePart {
  SigmaSet part;
  std::vector<S> states;
};

template <class S, class Registry>
LazyOrbitFinitePart<S> maximal_orbit_finite_part(const LazySigmaSet<S, Registry>& set,
                                                  std::size_t bound = kDefaultOrbitBound) {
  std::vector<S> finite_seeds;
  for (const S& seed : set.seeds()) {
    if (is_finite(orbit(set, seed, bound))) finite_seeds.push_back(seed);
  }
  std::size_t visited = 0;
  // Each orbit closes within the bound, so their union is finite.
  auto joint = detail::explore(set, finite_seeds, static_cast<std::size_t>(-1), visited);
  LazyOrbitFinitePart<S> out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < joint->orbit.size(); ++i) names.push_back(set.name(joint->orbit[i], i));
  out.part = SigmaSet(set.alphabet(), std::move(names), std::move(joint->delta));
  out.states = std::move(joint->orbit);
  return out;
}

/// Languages under the derivative action, identified up to semantic equality.
using DerivativeSigmaSet = LazySigmaSet<Language, SemanticLanguageRegistry>;

inline DerivativeSigmaSet derivative_sigma_set(const Alphabet& alphabet, std::vector<Language> seeds) {
  for (const auto& s : seeds) require_same_alphabet(alphabet, s.alphabet(), "derivative_sigma_set");
  return DerivativeSigmaSet(
      alphabet, std::move(seeds), [](const Language& l, Symbol a) { return derivative(l, a); },
      [](const Language& l) { return to_string(l); });
}

/// Languages under the derivative action, identified only by normal form.
using StructuralDerivativeSigmaSet = LazySigmaSet<Language, StructuralLanguageRegistry>;

inline StructuralDerivativeSigmaSet structural_derivative_sigma_set(const Alphabet& alphabet,
                                                                    std::vector<Language> seeds) {
  for (const auto& s : seeds) require_same_alphabet(alphabet, s.alphabet(), "structural_derivative_sigma_set");
  return StructuralDerivativeSigmaSet(
      alphabet, std::move(seeds), [](const Language& l, Symbol a) { return derivative(l, a); },
      [](const Language& l) { return to_string(l); });
}

/// State of the counter presentation of { a^n b^n | n >= 0 }. Phase A with
/// count k stands for the residual after a^k, { a^m b^(m+k) }; phase B with
/// count j stands for { b^j }; Dead is the empty residual.
struct CounterState {
  enum class Phase : std::uint8_t { A, B, Dead };
  Phase phase = Phase::A;
  std::size_t count = 0;

  friend bool operator==(const CounterState&, const CounterState&) = default;
};

struct CounterStateHash {
  std::size_t operator()(const CounterState& s) const noexcept {
    return detail::mix(static_cast<std::size_t>(s.phase), s.count);
  }
};

using CounterSigmaSet = LazySigmaSet<CounterState, HashRegistry<CounterState, CounterStateHash>>;

/// The non-regular language { a^n b^n } over the alphabet {a, b} (symbol 0
/// plays a, symbol 1 plays b), presented by counter states.
inline CounterSigmaSet anbn_sigma_set(const Alphabet& alphabet) {
  if (alphabet.size() != 2) throw AlphabetError("the a^n b^n presentation needs a two-symbol alphabet");
  auto step = [](const CounterState& s, Symbol a) -> CounterState {
    using P = CounterState::Phase;
    switch (s.phase) {
      case P::A:
        if (a == 0) return {P::A, s.count + 1};
        if (s.count == 0) return {P::Dead, 0};
        return {P::B, s.count - 1};
      case P::B:
        if (a == 1 && s.count > 0) return {P::B, s.count - 1};
        return {P::Dead, 0};
      case P::Dead:
        return s;
    }
    return s;
  };
  auto namer = [](const CounterState& s) -> std::string {
    switch (s.phase) {
      case CounterState::Phase::A: return "A" + std::to_string(s.count);
      case CounterState::Phase::B: return "B" + std::to_string(s.count);
      case CounterState::Phase::Dead: return "dead";
    }
    return "?";
  };
  return CounterSigmaSet(alphabet, {CounterState{}}, step, namer);
}

/// Acceptance of the counter presentation: ε is in the residual.
inline bool anbn_accepting(const CounterState& s) {
  return s.phase != CounterState::Phase::Dead && s.count == 0;
}

}  // namespace reglang

#endif  // REGLANG_LAZY_SIGMA_SET_HPP
