#ifndef REGLANG_REGEX_PARSER_HPP
#define REGLANG_REGEX_PARSER_HPP

// Grammar, loosest to tightest binding:
//
//   union   := inter ('|' inter)*
//   inter   := concat ('&' concat)*
//   concat  := prefix prefix*            (juxtaposition)
//   prefix  := '!' prefix | postfix
//   postfix := atom '*'*
//   atom    := symbol | '∅' | '#' | 'ε' | '_' | '(' union ')'
//
// Whitespace between tokens is ignored.

#include <string>
#include <string_view>

#include "alphabet.hpp"
#include "error.hpp"
#include "language.hpp"

namespace reglang {

namespace detail {

class RegexParser {
 public:
  RegexParser(std::u32string text, const Alphabet& alphabet) : text_(std::move(text)), alphabet_(alphabet) {}

  NodePtr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty regular expression", pos_);
    NodePtr n = parse_union();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + current_text() + "'", pos_);
    return n;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char32_t peek() const { return text_[pos_]; }
  std::string current_text() const { return utf8::encode(text_.substr(pos_, 1)); }

  void skip_ws() {
    while (!at_end() && (peek() == U' ' || peek() == U'\t' || peek() == U'\n' || peek() == U'\r')) ++pos_;
  }

  bool starts_atom() const {
    if (at_end()) return false;
    char32_t c = peek();
    if (c == U'(' || c == U'!' || c == U'∅' || c == U'#' || c == U'ε' || c == U'_') return true;
    return !is_reserved_symbol(c);
  }

  NodePtr parse_union() {
    std::vector<NodePtr> parts{parse_inter()};
    skip_ws();
    while (!at_end() && peek() == U'|') {
      ++pos_;
      parts.push_back(parse_inter());
      skip_ws();
    }
    return union_node(parts);
  }

  NodePtr parse_inter() {
    std::vector<NodePtr> parts{parse_concat()};
    skip_ws();
    while (!at_end() && peek() == U'&') {
      ++pos_;
      parts.push_back(parse_concat());
      skip_ws();
    }
    return intersect_node(parts);
  }

  NodePtr parse_concat() {
    skip_ws();
    if (!starts_atom()) {
      if (at_end()) throw ParseError("expected an expression but reached end of input", pos_);
      throw ParseError(std::string("expected an expression before '") + current_text() + "'", pos_);
    }
    std::vector<NodePtr> parts;
    while (true) {
      skip_ws();
      if (!starts_atom()) break;
      parts.push_back(parse_prefix());
    }
    return concat_node(parts);
  }

  NodePtr parse_prefix() {
    skip_ws();
    if (!at_end() && peek() == U'!') {
      ++pos_;
      return complement_node(parse_prefix());
    }
    return parse_postfix();
  }

  NodePtr parse_postfix() {
    NodePtr n = parse_atom();
    skip_ws();
    while (!at_end() && peek() == U'*') {
      ++pos_;
      n = star_node(n);
      skip_ws();
    }
    return n;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (at_end()) throw ParseError("expected an expression but reached end of input", pos_);
    char32_t c = peek();
    std::size_t start = pos_;
    ++pos_;
    switch (c) {
      case U'∅':
      case U'#':
        return empty_node();
      case U'ε':
      case U'_':
        return epsilon_node();
      case U'(': {
        NodePtr n = parse_union();
        skip_ws();
        if (at_end() || peek() != U')') throw ParseError("missing ')' for '(' opened", start);
        ++pos_;
        return n;
      }
      default:
        break;
    }
    if (is_reserved_symbol(c)) {
      pos_ = start;
      throw ParseError(std::string("unexpected '") + current_text() + "'", start);
    }
    auto s = alphabet_.index_of(c);
    if (!s) {
      std::string sym;
      utf8::append(sym, c);
      throw AlphabetError("symbol '" + sym + "' at position " + std::to_string(start) +
                          " is not in the alphabet {" + alphabet_.to_utf8() + "}");
    }
    return literal_node(*s);
  }

  std::u32string text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` (UTF-8) into a normalized Language over `alphabet`.
/// Throws ParseError on malformed input and AlphabetError on unknown symbols.
inline Language parse_regex(std::string_view text, const Alphabet& alphabet) {
  detail::RegexParser parser(utf8::decode(text), alphabet);
  return Language(alphabet, parser.parse());
}

}  // namespace reglang

#endif  // REGLANG_REGEX_PARSER_HPP
