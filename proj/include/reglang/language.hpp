#ifndef REGLANG_LANGUAGE_HPP
#define REGLANG_LANGUAGE_HPP

// Extended regular expressions kept in ACI normal form, with Brzozowski
// derivatives as the left-quotient action a^-1 L = { v | av in L }.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"

namespace reglang {

/// Constructor tags, in the order used by the canonical node ordering.
enum class Kind : std::uint8_t { Empty, Epsilon, Literal, Concat, Union, Intersect, Complement, Star };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Empty: return "Empty";
    case Kind::Epsilon: return "Epsilon";
    case Kind::Literal: return "Literal";
    case Kind::Concat: return "Concat";
    case Kind::Union: return "Union";
    case Kind::Intersect: return "Intersect";
    case Kind::Complement: return "Complement";
    case Kind::Star: return "Star";
  }
  return "?";
}

namespace detail {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Kind kind = Kind::Empty;
  Symbol symbol = 0;
  std::vector<NodePtr> children;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool nullable = false;
};

inline std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix64 finalizer folded into a running hash
  std::uint64_t z = static_cast<std::uint64_t>(h) * 0x9E3779B97F4A7C15ULL + v + 0x7F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

inline NodePtr finish(Kind kind, Symbol symbol, std::vector<NodePtr> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->symbol = symbol;
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, symbol);
  std::size_t size = 1;
  for (const auto& c : children) {
    h = mix(h, c->hash);
    size += c->size;
  }
  n->hash = h;
  n->size = size;
  switch (kind) {
    case Kind::Empty:
    case Kind::Literal:
      n->nullable = false;
      break;
    case Kind::Epsilon:
    case Kind::Star:
      n->nullable = true;
      break;
    case Kind::Concat:
    case Kind::Intersect:
      n->nullable = std::all_of(children.begin(), children.end(), [](const NodePtr& c) { return c->nullable; });
      break;
    case Kind::Union:
      n->nullable = std::any_of(children.begin(), children.end(), [](const NodePtr& c) { return c->nullable; });
      break;
    case Kind::Complement:
      n->nullable = !children.front()->nullable;
      break;
  }
  n->children = std::move(children);
  return n;
}

/// Canonical total order: constructor tag, then symbol, then children
/// lexicographically.
inline std::strong_ordering compare(const Node& a, const Node& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (a.kind != b.kind) return a.kind <=> b.kind;
  if (a.kind == Kind::Literal) return a.symbol <=> b.symbol;
  std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(*a.children[i], *b.children[i]);
    if (c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

inline bool equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->size != b->size || a->kind != b->kind) return false;
  return compare(*a, *b) == 0;
}

struct NodeHash {
  std::size_t operator()(const NodePtr& n) const noexcept { return n->hash; }
};
struct NodeEqual {
  bool operator()(const NodePtr& a, const NodePtr& b) const { return equal(a, b); }
};

template <class T>
using NodeMap = std::unordered_map<NodePtr, T, NodeHash, NodeEqual>;

inline const NodePtr& empty_node() {
  static const NodePtr n = finish(Kind::Empty, 0, {});
  return n;
}

inline const NodePtr& epsilon_node() {
  static const NodePtr n = finish(Kind::Epsilon, 0, {});
  return n;
}

inline const NodePtr& sigma_star_node() {
  static const NodePtr n = finish(Kind::Complement, 0, {empty_node()});
  return n;
}

inline bool is_sigma_star(const NodePtr& n) {
  return n->kind == Kind::Complement && n->children.front()->kind == Kind::Empty;
}

inline NodePtr literal_node(Symbol s) { return finish(Kind::Literal, s, {}); }

inline void sort_unique(std::vector<NodePtr>& v) {
  std::sort(v.begin(), v.end(), [](const NodePtr& a, const NodePtr& b) { return compare(*a, *b) < 0; });
  v.erase(std::unique(v.begin(), v.end(), [](const NodePtr& a, const NodePtr& b) { return equal(a, b); }),
          v.end());
}

inline NodePtr concat_node(const std::vector<NodePtr>& parts) {
  std::vector<NodePtr> flat;
  for (const auto& p : parts) {
    if (p->kind == Kind::Empty) return empty_node();
    if (p->kind == Kind::Epsilon) continue;
    if (p->kind == Kind::Concat) {
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    } else {
      flat.push_back(p);
    }
  }
  if (flat.empty()) return epsilon_node();
  if (flat.size() == 1) return flat.front();
  return finish(Kind::Concat, 0, std::move(flat));
}

inline NodePtr union_node(const std::vector<NodePtr>& parts) {
  std::vector<NodePtr> flat;
  for (const auto& p : parts) {
    if (p->kind == Kind::Empty) continue;
    if (is_sigma_star(p)) return sigma_star_node();
    if (p->kind == Kind::Union) {
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    } else {
      flat.push_back(p);
    }
  }
  sort_unique(flat);
  if (flat.empty()) return empty_node();
  if (flat.size() == 1) return flat.front();
  return finish(Kind::Union, 0, std::move(flat));
}

inline NodePtr intersect_node(const std::vector<NodePtr>& parts) {
  std::vector<NodePtr> flat;
  for (const auto& p : parts) {
    if (p->kind == Kind::Empty) return empty_node();
    if (is_sigma_star(p)) continue;
    if (p->kind == Kind::Intersect) {
      flat.insert(flat.end(), p->children.begin(), p->children.end());
    } else {
      flat.push_back(p);
    }
  }
  sort_unique(flat);
  if (flat.empty()) return sigma_star_node();
  if (flat.size() == 1) return flat.front();
  return finish(Kind::Intersect, 0, std::move(flat));
}

inline NodePtr complement_node(const NodePtr& c) {
  if (c->kind == Kind::Complement) return c->children.front();
  if (c->kind == Kind::Empty) return sigma_star_node();
  return finish(Kind::Complement, 0, {c});
}

inline NodePtr star_node(const NodePtr& c) {
  if (c->kind == Kind::Star || is_sigma_star(c)) return c;
  if (c->kind == Kind::Empty || c->kind == Kind::Epsilon) return epsilon_node();
  return finish(Kind::Star, 0, {c});
}

/// Rebuilds a tree bottom-up through the smart constructors.
inline NodePtr normalize(const NodePtr& n) {
  std::vector<NodePtr> kids;
  kids.reserve(n->children.size());
  for (const auto& c : n->children) kids.push_back(normalize(c));
  switch (n->kind) {
    case Kind::Empty: return empty_node();
    case Kind::Epsilon: return epsilon_node();
    case Kind::Literal: return literal_node(n->symbol);
    case Kind::Concat: return concat_node(kids);
    case Kind::Union: return union_node(kids);
    case Kind::Intersect: return intersect_node(kids);
    case Kind::Complement: return complement_node(kids.front());
    case Kind::Star: return star_node(kids.front());
  }
  return empty_node();
}

}  // namespace detail

/// Memo table for derivatives, keyed by structural equality. Meant to live
/// for the duration of one computation; not thread-safe.
class DerivativeCache {
 public:
  const detail::NodePtr* find(const detail::NodePtr& n, Symbol a) const {
    auto it = table_.find(Key{n, a});
    return it == table_.end() ? nullptr : &it->second;
  }

  void store(const detail::NodePtr& n, Symbol a, detail::NodePtr d) { table_.emplace(Key{n, a}, std::move(d)); }

  std::size_t size() const noexcept { return table_.size(); }

 private:
  struct Key {
    detail::NodePtr node;
    Symbol symbol;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return detail::mix(k.node->hash, k.symbol); }
  };
  struct KeyEqual {
    bool operator()(const Key& a, const Key& b) const {
      return a.symbol == b.symbol && detail::equal(a.node, b.node);
    }
  };
  std::unordered_map<Key, detail::NodePtr, KeyHash, KeyEqual> table_;
};

namespace detail {

inline NodePtr derive(const NodePtr& n, Symbol a, DerivativeCache* cache) {
  switch (n->kind) {
    case Kind::Empty:
    case Kind::Epsilon:
      return empty_node();
    case Kind::Literal:
      return n->symbol == a ? epsilon_node() : empty_node();
    default:
      break;
  }
  if (cache) {
    if (const NodePtr* hit = cache->find(n, a)) return *hit;
  }
  NodePtr result;
  switch (n->kind) {
    case Kind::Concat: {
      // d(c0 c1 ... ck) = d(c0) c1..ck | [c0 nullable] d(c1 ... ck)
      std::vector<NodePtr> terms;
      const auto& cs = n->children;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<NodePtr> parts{derive(cs[i], a, cache)};
        parts.insert(parts.end(), cs.begin() + static_cast<std::ptrdiff_t>(i) + 1, cs.end());
        terms.push_back(concat_node(parts));
        if (!cs[i]->nullable) break;
      }
      result = union_node(terms);
      break;
    }
    case Kind::Union:
    case Kind::Intersect: {
      std::vector<NodePtr> terms;
      terms.reserve(n->children.size());
      for (const auto& c : n->children) terms.push_back(derive(c, a, cache));
      result = n->kind == Kind::Union ? union_node(terms) : intersect_node(terms);
      break;
    }
    case Kind::Complement:
      result = complement_node(derive(n->children.front(), a, cache));
      break;
    case Kind::Star:
      result = concat_node({derive(n->children.front(), a, cache), n});
      break;
    default:
      result = empty_node();
      break;
  }
  if (cache) cache->store(n, a, result);
  return result;
}

}  // namespace detail

/// A regular language over a fixed alphabet, held as an extended regular
/// expression in normal form. Immutable; copies share structure.
class Language {
 public:
  Language(Alphabet alphabet, detail::NodePtr node) : alphabet_(std::move(alphabet)), node_(std::move(node)) {}

  static Language empty(const Alphabet& a) { return {a, detail::empty_node()}; }
  static Language epsilon(const Alphabet& a) { return {a, detail::epsilon_node()}; }
  static Language sigma_star(const Alphabet& a) { return {a, detail::sigma_star_node()}; }
  static Language literal(const Alphabet& a, Symbol s) {
    if (s >= a.size()) throw AlphabetError("literal symbol index out of range");
    return {a, detail::literal_node(s)};
  }

  Kind kind() const noexcept { return node_->kind; }
  /// Symbol of a Literal node.
  Symbol symbol() const noexcept { return node_->symbol; }
  std::vector<Language> children() const {
    std::vector<Language> out;
    out.reserve(node_->children.size());
    for (const auto& c : node_->children) out.emplace_back(alphabet_, c);
    return out;
  }

  bool nullable() const noexcept { return node_->nullable; }
  std::size_t hash() const noexcept { return node_->hash; }
  /// Number of AST nodes.
  std::size_t size() const noexcept { return node_->size; }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const detail::NodePtr& node() const noexcept { return node_; }

  /// Structural equality of normal forms.
  friend bool operator==(const Language& a, const Language& b) {
    return a.alphabet_ == b.alphabet_ && detail::equal(a.node_, b.node_);
  }
  friend std::strong_ordering operator<=>(const Language& a, const Language& b) {
    return detail::compare(*a.node_, *b.node_);
  }

 private:
  Alphabet alphabet_;
  detail::NodePtr node_;
};

struct LanguageHash {
  std::size_t operator()(const Language& l) const noexcept { return l.hash(); }
};

namespace detail {
inline const Alphabet& common_alphabet(const std::vector<Language>& parts, const char* what) {
  if (parts.empty()) throw AlphabetError(std::string(what) + ": no operands");
  for (const auto& p : parts) require_same_alphabet(parts.front().alphabet(), p.alphabet(), what);
  return parts.front().alphabet();
}
inline std::vector<NodePtr> nodes_of(const std::vector<Language>& parts) {
  std::vector<NodePtr> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.node());
  return out;
}
}  // namespace detail

inline Language make_concat(const std::vector<Language>& parts) {
  const auto& a = detail::common_alphabet(parts, "concat");
  return {a, detail::concat_node(detail::nodes_of(parts))};
}

inline Language make_union(const std::vector<Language>& parts) {
  const auto& a = detail::common_alphabet(parts, "union");
  return {a, detail::union_node(detail::nodes_of(parts))};
}

inline Language make_intersect(const std::vector<Language>& parts) {
  const auto& a = detail::common_alphabet(parts, "intersect");
  return {a, detail::intersect_node(detail::nodes_of(parts))};
}

inline Language make_complement(const Language& l) { return {l.alphabet(), detail::complement_node(l.node())}; }

inline Language make_star(const Language& l) { return {l.alphabet(), detail::star_node(l.node())}; }

/// Symmetric difference (L1 & !L2) | (L2 & !L1).
inline Language symmetric_difference(const Language& l1, const Language& l2) {
  return make_union({make_intersect({l1, make_complement(l2)}), make_intersect({l2, make_complement(l1)})});
}

inline Language normalize(const Language& l) { return {l.alphabet(), detail::normalize(l.node())}; }

inline bool nullable(const Language& l) noexcept { return l.nullable(); }

inline Language derivative(const Language& l, Symbol a, DerivativeCache* cache = nullptr) {
  if (a >= l.alphabet().size()) {
    throw AlphabetError("derivative: symbol index " + std::to_string(a) + " outside alphabet {" +
                        l.alphabet().to_utf8() + "}");
  }
  return {l.alphabet(), detail::derive(l.node(), a, cache)};
}

inline Language word_derivative(const Language& l, const Word& w, DerivativeCache* cache = nullptr) {
  Language cur = l;
  for (Symbol a : w) {
    cur = derivative(cur, a, cache);
    if (cur.kind() == Kind::Empty) break;
  }
  return cur;
}

inline bool contains(const Language& l, const Word& w, DerivativeCache* cache = nullptr) {
  return word_derivative(l, w, cache).nullable();
}

/// Decides L1 = L2 by bisimulation over derivatives (Hopcroft-Karp style,
/// union-find over visited expressions).
inline bool semantically_equal(const Language& l1, const Language& l2, DerivativeCache* cache = nullptr) {
  require_same_alphabet(l1.alphabet(), l2.alphabet(), "semantically_equal");
  if (detail::equal(l1.node(), l2.node())) return true;
  if (l1.nullable() != l2.nullable()) return false;

  DerivativeCache local;
  if (!cache) cache = &local;

  detail::NodeMap<std::size_t> ids;
  std::vector<std::size_t> parent;
  auto id_of = [&](const detail::NodePtr& n) {
    auto [it, inserted] = ids.emplace(n, parent.size());
    if (inserted) parent.push_back(parent.size());
    return it->second;
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::pair<detail::NodePtr, detail::NodePtr>> todo;
  std::size_t i1 = id_of(l1.node());
  std::size_t i2 = id_of(l2.node());
  parent[find(i2)] = find(i1);
  todo.emplace_back(l1.node(), l2.node());
  const std::size_t k = l1.alphabet().size();
  while (!todo.empty()) {
    auto [x, y] = std::move(todo.back());
    todo.pop_back();
    if (x->nullable != y->nullable) return false;
    for (Symbol a = 0; a < k; ++a) {
      auto dx = detail::derive(x, a, cache);
      auto dy = detail::derive(y, a, cache);
      std::size_t rx = find(id_of(dx));
      std::size_t ry = find(id_of(dy));
      if (rx == ry) continue;
      if (dx->nullable != dy->nullable) return false;
      parent[ry] = rx;
      todo.emplace_back(std::move(dx), std::move(dy));
    }
  }
  return true;
}

namespace detail {

inline int precedence(Kind k) {
  switch (k) {
    case Kind::Union: return 0;
    case Kind::Intersect: return 1;
    case Kind::Concat: return 2;
    case Kind::Complement: return 3;
    case Kind::Star: return 4;
    default: return 5;
  }
}

inline void print(const NodePtr& n, const Alphabet& a, int min_prec, std::string& out) {
  bool parens = precedence(n->kind) < min_prec;
  if (parens) out += '(';
  switch (n->kind) {
    case Kind::Empty: out += "∅"; break;
    case Kind::Epsilon: out += "ε"; break;
    case Kind::Literal: out += a.symbol_text(n->symbol); break;
    case Kind::Union:
    case Kind::Intersect: {
      const char* sep = n->kind == Kind::Union ? "|" : "&";
      int child_prec = precedence(n->kind) + 1;
      for (std::size_t i = 0; i < n->children.size(); ++i) {
        if (i) out += sep;
        print(n->children[i], a, child_prec, out);
      }
      break;
    }
    case Kind::Concat:
      for (const auto& c : n->children) print(c, a, 3, out);
      break;
    case Kind::Complement:
      out += '!';
      print(n->children.front(), a, 4, out);
      break;
    case Kind::Star:
      print(n->children.front(), a, 5, out);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

/// Renders the normal form in the regex grammar accepted by parse_regex.
inline std::string to_string(const Language& l) {
  std::string out;
  detail::print(l.node(), l.alphabet(), 0, out);
  return out;
}

}  // namespace reglang

#endif  // REGLANG_LANGUAGE_HPP
