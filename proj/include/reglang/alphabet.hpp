#ifndef REGLANG_ALPHABET_HPP
#define REGLANG_ALPHABET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace reglang {

/// Index of a symbol inside its Alphabet.
using Symbol = std::uint32_t;

/// Element of the free monoid over an alphabet, stored as symbol indices.
using Word = std::vector<Symbol>;

namespace utf8 {

inline std::u32string decode(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c >> 5) == 0x6) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c >> 4) == 0xE) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c >> 3) == 0x1E) {
      cp = c & 0x07;
      len = 4;
    } else {
      throw ParseError("invalid UTF-8 lead byte", out.size());
    }
    if (i + len > text.size()) throw ParseError("truncated UTF-8 sequence", out.size());
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc >> 6) != 0x2) throw ParseError("invalid UTF-8 continuation byte", out.size());
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view text) {
  std::string out;
  for (char32_t cp : text) append(out, cp);
  return out;
}

}  // namespace utf8

/// Code points with a meaning in the regex or omega-term grammars; they can
/// never be alphabet symbols.
inline bool is_reserved_symbol(char32_t cp) {
  switch (cp) {
    case U'|': case U'&': case U'!': case U'*': case U'(': case U')':
    case U'#': case U'_': case U'^': case U'∅': case U'ε':
    case U' ': case U'\t': case U'\n': case U'\r':
      return true;
    default:
      return false;
  }
}

/// Finite ordered set of distinct single-character symbols. Copies share the
/// underlying storage; two alphabets are equal when they list the same
/// symbols in the same order.
class Alphabet {
 public:
  static constexpr std::size_t kDefaultMaxSize = 16;

  Alphabet() : impl_(std::make_shared<const std::u32string>()) {}

  explicit Alphabet(std::u32string symbols, std::size_t max_size = kDefaultMaxSize) {
    if (symbols.size() > max_size) {
      throw AlphabetError("alphabet has " + std::to_string(symbols.size()) +
                          " symbols, limit is " + std::to_string(max_size));
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (is_reserved_symbol(symbols[i])) {
        throw AlphabetError("reserved character '" + utf8::encode(symbols.substr(i, 1)) +
                            "' cannot be an alphabet symbol");
      }
      if (symbols.find(symbols[i]) != i) {
        throw AlphabetError("duplicate alphabet symbol '" + utf8::encode(symbols.substr(i, 1)) + "'");
      }
    }
    impl_ = std::make_shared<const std::u32string>(std::move(symbols));
  }

  static Alphabet from_utf8(std::string_view symbols, std::size_t max_size = kDefaultMaxSize) {
    return Alphabet(utf8::decode(symbols), max_size);
  }

  std::size_t size() const noexcept { return impl_->size(); }
  bool empty() const noexcept { return impl_->empty(); }

  char32_t code_point(Symbol s) const { return impl_->at(s); }
  const std::u32string& code_points() const noexcept { return *impl_; }

  std::optional<Symbol> index_of(char32_t cp) const {
    auto pos = impl_->find(cp);
    if (pos == std::u32string::npos) return std::nullopt;
    return static_cast<Symbol>(pos);
  }

  Symbol require(char32_t cp) const {
    if (auto s = index_of(cp)) return *s;
    std::string msg = "symbol '";
    utf8::append(msg, cp);
    throw AlphabetError(msg + "' is not in the alphabet {" + to_utf8() + "}");
  }

  std::string symbol_text(Symbol s) const {
    std::string out;
    utf8::append(out, code_point(s));
    return out;
  }

  std::string to_utf8() const { return utf8::encode(*impl_); }

  /// Parses a word written as a plain symbol string; "ε", "_" and "" all
  /// denote the empty word.
  Word parse_word(std::string_view text) const {
    auto cps = utf8::decode(text);
    if (cps == U"ε" || cps == U"_") return {};
    Word w;
    w.reserve(cps.size());
    for (char32_t cp : cps) w.push_back(require(cp));
    return w;
  }

  std::string format_word(const Word& w) const {
    if (w.empty()) return "ε";
    std::string out;
    for (Symbol s : w) utf8::append(out, code_point(s));
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.impl_ == b.impl_ || *a.impl_ == *b.impl_;
  }

 private:
  std::shared_ptr<const std::u32string> impl_;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (!(a == b)) {
    throw AlphabetError(std::string(what) + ": alphabets differ ({" + a.to_utf8() + "} vs {" +
                        b.to_utf8() + "})");
  }
}

/// All words of length <= max_length in shortlex order.
inline std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length && !alphabet.empty(); ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

/// Shortlex order on words: shorter first, then lexicographic by symbol index.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace reglang

#endif  // REGLANG_ALPHABET_HPP
