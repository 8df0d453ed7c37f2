#include <catch_amalgamated.hpp>

#include <reglang/alphabet.hpp>
#include <reglang/error.hpp>

using namespace reglang;

TEST_CASE("alphabet keeps declaration order") {
  auto a = Alphabet::from_utf8("ba");
  REQUIRE(a.size() == 2);
  CHECK(a.require(U'b') == 0);
  CHECK(a.require(U'a') == 1);
  CHECK(a.symbol_text(1) == "a");
  CHECK(a.to_utf8() == "ba");
}

TEST_CASE("alphabet accepts multibyte symbols") {
  auto a = Alphabet::from_utf8("αβ");
  REQUIRE(a.size() == 2);
  CHECK(a.format_word(a.parse_word("βα")) == "βα");
}

TEST_CASE("alphabet rejects bad declarations") {
  CHECK_THROWS_AS(Alphabet::from_utf8("aa"), AlphabetError);
  CHECK_THROWS_AS(Alphabet::from_utf8("a|"), AlphabetError);
  CHECK_THROWS_AS(Alphabet::from_utf8("a*"), AlphabetError);
  CHECK_THROWS_AS(Alphabet::from_utf8("ε"), AlphabetError);
  CHECK_THROWS_AS(Alphabet::from_utf8("abcdefghijklmnopq"), AlphabetError);
  CHECK_NOTHROW(Alphabet::from_utf8("abcdefghijklmnopq", 17));
}

TEST_CASE("empty alphabet is allowed") {
  Alphabet a;
  CHECK(a.empty());
  CHECK(words_up_to(a, 3).size() == 1);
}

TEST_CASE("words parse and print") {
  auto a = Alphabet::from_utf8("ab");
  CHECK(a.parse_word("").empty());
  CHECK(a.parse_word("ε").empty());
  CHECK(a.parse_word("_").empty());
  CHECK(a.parse_word("abba") == Word{0, 1, 1, 0});
  CHECK(a.format_word({}) == "ε");
  CHECK_THROWS_AS(a.parse_word("abc"), AlphabetError);
}

TEST_CASE("words_up_to enumerates in shortlex order") {
  auto a = Alphabet::from_utf8("ab");
  auto words = words_up_to(a, 3);
  REQUIRE(words.size() == 15);
  CHECK(words[0].empty());
  CHECK(words[1] == Word{0});
  CHECK(words[3] == Word{0, 0});
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(shortlex_less(words[i - 1], words[i]));
}
