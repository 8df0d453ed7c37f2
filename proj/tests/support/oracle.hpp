#ifndef REGLANG_TESTS_ORACLE_HPP
#define REGLANG_TESTS_ORACLE_HPP

// Reference implementations used only by the tests. None of them touch
// derivatives, orbits or partition refinement.

#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include <reglang/automaton.hpp>
#include <reglang/language.hpp>

namespace reglang::testing {

using WordSet = std::set<Word>;

/// All words of length <= n, as a set.
inline WordSet all_words(std::size_t alphabet_size, std::size_t n) {
  WordSet out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Symbol a = 0; a < alphabet_size; ++a) {
        Word v = w;
        v.push_back(a);
        out.insert(v);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// The words of length <= n in the language of an expression tree, built by
/// set operations on truncated languages. Exact, because every factor of a
/// word of length <= n is itself of length <= n.
class TruncatedEnumerator {
 public:
  TruncatedEnumerator(std::size_t alphabet_size, std::size_t n)
      : k_(alphabet_size), n_(n), universe_(all_words(alphabet_size, n)) {}

  const WordSet& universe() const { return universe_; }

  WordSet operator()(const reglang::detail::NodePtr& node) {
    switch (node->kind) {
      case Kind::Empty:
        return {};
      case Kind::Epsilon:
        return {Word{}};
      case Kind::Literal:
        return n_ >= 1 ? WordSet{Word{node->symbol}} : WordSet{};
      case Kind::Concat: {
        WordSet acc{Word{}};
        for (const auto& c : node->children) acc = concat(acc, (*this)(c));
        return acc;
      }
      case Kind::Union: {
        WordSet acc;
        for (const auto& c : node->children) {
          auto s = (*this)(c);
          acc.insert(s.begin(), s.end());
        }
        return acc;
      }
      case Kind::Intersect: {
        WordSet acc = universe_;
        for (const auto& c : node->children) {
          auto s = (*this)(c);
          WordSet keep;
          for (const Word& w : acc)
            if (s.count(w)) keep.insert(w);
          acc = std::move(keep);
        }
        return acc;
      }
      case Kind::Complement: {
        auto s = (*this)(node->children[0]);
        WordSet out;
        for (const Word& w : universe_)
          if (!s.count(w)) out.insert(w);
        return out;
      }
      case Kind::Star: {
        auto base = (*this)(node->children[0]);
        WordSet acc{Word{}};
        while (true) {
          auto next = concat(acc, base);
          next.insert(acc.begin(), acc.end());
          if (next.size() == acc.size()) return acc;
          acc = std::move(next);
        }
      }
    }
    return {};
  }

 private:
  WordSet concat(const WordSet& x, const WordSet& y) const {
    WordSet out;
    for (const Word& u : x) {
      for (const Word& v : y) {
        if (u.size() + v.size() > n_) continue;
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.insert(std::move(w));
      }
    }
    return out;
  }

  std::size_t k_;
  std::size_t n_;
  WordSet universe_;
};

/// Membership by recursive matching of w[i, j) against subtrees, memoized.
class RecursiveMatcher {
 public:
  explicit RecursiveMatcher(Word w) : w_(std::move(w)) {}

  bool operator()(const reglang::detail::NodePtr& node) { return match(node.get(), 0, w_.size()); }

 private:
  using Key = std::tuple<const reglang::detail::Node*, std::size_t, std::size_t>;

  bool match(const reglang::detail::Node* n, std::size_t i, std::size_t j) {
    Key key{n, i, j};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = false;  // Guards star recursion on empty pieces.
    bool r = compute(n, i, j);
    memo_[key] = r;
    return r;
  }

  bool match_seq(const std::vector<reglang::detail::NodePtr>& parts, std::size_t from, std::size_t i,
                 std::size_t j) {
    if (from == parts.size()) return i == j;
    for (std::size_t m = i; m <= j; ++m) {
      if (match(parts[from].get(), i, m) && match_seq(parts, from + 1, m, j)) return true;
    }
    return false;
  }

  bool compute(const reglang::detail::Node* n, std::size_t i, std::size_t j) {
    switch (n->kind) {
      case Kind::Empty:
        return false;
      case Kind::Epsilon:
        return i == j;
      case Kind::Literal:
        return j == i + 1 && w_[i] == n->symbol;
      case Kind::Concat:
        return match_seq(n->children, 0, i, j);
      case Kind::Union:
        for (const auto& c : n->children)
          if (match(c.get(), i, j)) return true;
        return false;
      case Kind::Intersect:
        for (const auto& c : n->children)
          if (!match(c.get(), i, j)) return false;
        return true;
      case Kind::Complement:
        return !match(n->children[0].get(), i, j);
      case Kind::Star:
        if (i == j) return true;
        for (std::size_t m = i + 1; m <= j; ++m) {
          if (match(n->children[0].get(), i, m) && match(n, m, j)) return true;
        }
        return false;
    }
    return false;
  }

  Word w_;
  std::map<Key, bool> memo_;
};

inline bool oracle_contains(const Language& l, const Word& w) { return RecursiveMatcher(w)(l.node()); }

/// Number of Myhill-Nerode classes of the language of a DFA, by the
/// pairwise table-filling algorithm over its reachable states.
inline std::size_t table_filling_class_count(const PointedAutomaton& a) {
  std::vector<State> reach{a.start()};
  std::vector<bool> seen(a.size(), false);
  seen[a.start()] = true;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      State t = a.step(reach[i], s);
      if (!seen[t]) {
        seen[t] = true;
        reach.push_back(t);
      }
    }
  }
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> dist(n, std::vector<bool>(n, false));
  for (State p : reach)
    for (State q : reach) dist[p][q] = a.accepting(p) != a.accepting(q);
  bool changed = true;
  while (changed) {
    changed = false;
    for (State p : reach) {
      for (State q : reach) {
        if (dist[p][q]) continue;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
          if (dist[a.step(p, s)][a.step(q, s)]) {
            dist[p][q] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  std::size_t classes = 0;
  std::vector<bool> covered(n, false);
  for (State p : reach) {
    if (covered[p]) continue;
    ++classes;
    for (State q : reach)
      if (!dist[p][q]) covered[q] = true;
  }
  return classes;
}

}  // namespace reglang::testing

#endif  // REGLANG_TESTS_ORACLE_HPP
