#include <catch_amalgamated.hpp>

#include "catch_printers.hpp"

#include <random>

#include <reglang/automaton.hpp>
#include <reglang/profinite.hpp>
#include <reglang/regex_parser.hpp>

#include "oracle.hpp"
#include "random_regex.hpp"

using namespace reglang;

namespace {

const Alphabet ab = Alphabet::from_utf8("ab");

Language re(const char* text) { return parse_regex(text, ab); }

// Z4 and Z2 with m_a = 1 in both; m_b = 2 in Z4 and 0 in Z2.
std::vector<SigmaMonoid> z4_z2() {
  return {SigmaMonoid(cyclic_group(4), ab, {1, 2}), SigmaMonoid(cyclic_group(2), ab, {1, 0})};
}

}  // namespace

TEST_CASE("build_system examples") {
  auto single = build_system({SigmaMonoid(FiniteMonoid(), ab, {0, 0})}, {});
  CHECK(single.nodes().size() == 1);

  auto sys = build_system(z4_z2(), {{0, 1, {0, 1, 0, 1}}});
  CHECK(sys.connectors().size() == 1);

  CHECK_THROWS_WITH(build_system(z4_z2(), {{0, 1, {0, 0, 0, 0}}}),
                    Catch::Matchers::ContainsSubstring("incompatible with the generator of symbol a"));
  CHECK_THROWS_AS(build_system(z4_z2(), {{0, 2, {0, 1, 0, 1}}}), ValidationError);
  CHECK_THROWS_AS(build_system(z4_z2(), {{0, 1, {0, 1, 0}}}), ValidationError);
  CHECK_THROWS_AS(build_system({}, {}), ValidationError);
}

TEST_CASE("build_system rejects non-homomorphisms and broken composites") {
  auto z4 = SigmaMonoid(cyclic_group(4), ab, {1, 1});
  auto z2 = SigmaMonoid(cyclic_group(2), ab, {1, 1});
  auto trivial = SigmaMonoid(FiniteMonoid(), ab, {0, 0});
  // Respects generators and the identity, but 1 + 1 = 2 goes to 1, not 0.
  CHECK_THROWS_WITH(build_system({z4, z2}, {{0, 1, {0, 1, 1, 0}}}),
                    Catch::Matchers::ContainsSubstring("not a homomorphism at the pair (1, 1)"));
  // Z4 -> Z2 -> 1 against a direct Z4 -> 1: always consistent.
  CHECK_NOTHROW(build_system({z4, z2, trivial}, {{0, 1, {0, 1, 0, 1}}, {1, 2, {0, 0}}, {0, 2, {0, 0, 0, 0}}}));

  // Composites can disagree only off the generated part: here the nodes are
  // Z4 and Z2 with every generator at 2 (resp. 0).
  auto z4_even = SigmaMonoid(cyclic_group(4), ab, {2, 2});
  auto z2_zero = SigmaMonoid(cyclic_group(2), ab, {0, 0});
  std::vector<Connector> via_negation{{0, 1, {0, 3, 2, 1}}, {1, 2, {0, 1, 0, 1}}};
  CHECK_NOTHROW(build_system({z4_even, z4_even, z2_zero}, via_negation));
  via_negation.push_back({0, 2, {0, 0, 0, 0}});
  CHECK_THROWS_WITH(build_system({z4_even, z4_even, z2_zero}, via_negation),
                    Catch::Matchers::ContainsSubstring("disagrees with a composite path at element 1"));
}

TEST_CASE("embed_word examples") {
  auto sys = build_system(z4_z2(), {{0, 1, {0, 1, 0, 1}}});
  CHECK(embed_word(sys, {}).components == std::vector<Element>{0, 0});
  CHECK(embed_word(sys, {0}).components == std::vector<Element>{1, 1});
  auto aab = embed_word(sys, ab.parse_word("aab"));
  CHECK(aab.components == std::vector<Element>{0, 0});
  CHECK(compatible(sys, aab));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Word u(rng() % 6), v(rng() % 6);
    for (auto& x : u) x = rng() % 2;
    for (auto& x : v) x = rng() % 2;
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(embed_word(sys, uv) == multiply(sys, embed_word(sys, u), embed_word(sys, v)));
    CHECK(compatible(sys, embed_word(sys, uv)));
  }
}

TEST_CASE("omega-term parsing") {
  auto t = parse_omega_term("a^wb", ab);
  REQUIRE(t.kind == OmegaTerm::Kind::Concat);
  CHECK(t.children[0].kind == OmegaTerm::Kind::OmegaPower);
  CHECK(to_string(t, ab) == "a^wb");
  CHECK(to_string(parse_omega_term("(ab)^ω a", ab), ab) == "(ab)^wa");
  CHECK(to_string(parse_omega_term("a(ba)", ab), ab) == "a(ba)");
  CHECK(to_string(parse_omega_term("((a^w)^w)", ab), ab) == "a^w^w");
  CHECK_THROWS_AS(parse_omega_term("a^", ab), ParseError);
  CHECK_THROWS_AS(parse_omega_term("(a", ab), ParseError);
  CHECK_THROWS_AS(parse_omega_term("", ab), ParseError);
  CHECK_THROWS_AS(parse_omega_term("c", ab), AlphabetError);
}

TEST_CASE("omega-term evaluation examples") {
  auto sys = build_system(z4_z2(), {{0, 1, {0, 1, 0, 1}}});
  CHECK(eval_omega_term(sys, OmegaTerm::letter(0)) == embed_word(sys, {0}));
  CHECK(eval_omega_term(sys, parse_omega_term("a^w", ab)).components == std::vector<Element>{0, 0});

  auto z2 = build_system({SigmaMonoid(cyclic_group(2), ab, {1, 1})}, {});
  auto v = eval_omega_term(z2, OmegaTerm::concat(OmegaTerm::omega(OmegaTerm::letter(0)), OmegaTerm::letter(1)));
  CHECK(v.components == std::vector<Element>{1});

  // In the reset monoid (ab)^w is the constant it already is.
  auto reset = make_monoid({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0);
  auto rs = build_system({SigmaMonoid(reset, ab, {1, 2})}, {});
  CHECK(eval_omega_term(rs, parse_omega_term("(ab)^w", ab)).components == std::vector<Element>{2});
}

TEST_CASE("clopen pullback examples") {
  auto node = SigmaMonoid(cyclic_group(2), ab, {1, 0});
  CHECK(semantically_equal(clopen_pullback(ClopenRecognizer(node, {true, true})), Language::sigma_star(ab)));
  CHECK(clopen_pullback(ClopenRecognizer(node, {false, false})).kind() == Kind::Empty);
  auto odd = clopen_pullback(ClopenRecognizer(node, {false, true}));
  for (const Word& w : words_up_to(ab, 6)) {
    auto as = std::count(w.begin(), w.end(), Symbol{0});
    CHECK(contains(odd, w) == (as % 2 == 1));
  }
}

TEST_CASE("sim classes examples") {
  auto z2 = cyclic_group(2);
  CHECK(sim_classes(z2, {true, true}).size() == 1);
  CHECK(sim_classes(z2, {false, false}).size() == 1);
  CHECK(sim_classes(z2, {false, true}) == std::vector<std::vector<Element>>{{0}, {1}});
  CHECK_THROWS_AS(sim_classes(z2, {true}), ValidationError);
}

TEST_CASE("separate examples") {
  auto l = re("a(a|b)*");
  CHECK(std::holds_alternative<Equal>(separate(l, l)));
  CHECK(std::holds_alternative<Equal>(separate(re("(a|b)*"), re("!∅"))));
  auto r = separate(re("a*"), re("b*"));
  REQUIRE(std::holds_alternative<Separation>(r));
  const auto& s = std::get<Separation>(r);
  CHECK(ab.format_word(s.witness) == "a");
  CHECK(s.clopen.contains(s.witness));
}

TEST_CASE("randomized profinite properties") {
  testing::RandomRegex gen(ab, 4242);
  auto words = words_up_to(ab, 6);
  for (int i = 0; i < 80; ++i) {
    auto l1 = gen(5), l2 = gen(5);
    INFO(to_string(l1) << "  /  " << to_string(l2));
    auto synt = syntactic_monoid(l1);
    ClopenRecognizer c(synt);
    auto pull = clopen_pullback(c);
    CHECK(monoid_recognizes(synt, pull).equivalent);
    CHECK(semantically_equal(pull, l1));

    // Number of classes = number of distinct left quotients, by direct count.
    const auto& m = synt.sigma_monoid().monoid();
    std::set<std::vector<bool>> quotients;
    for (Element a = 0; a < m.size(); ++a) {
      std::vector<bool> q(m.size());
      for (Element x = 0; x < m.size(); ++x) q[x] = synt.accepting(m.multiply(a, x));
      quotients.insert(q);
    }
    CHECK(sim_classes(m, synt.accepting()).size() == quotients.size());

    bool differ = false;
    for (const Word& w : words) differ = differ || testing::oracle_contains(l1, w) != testing::oracle_contains(l2, w);
    auto sep = separate(l1, l2);
    if (differ) {
      REQUIRE(std::holds_alternative<Separation>(sep));
      const auto& s = std::get<Separation>(sep);
      CHECK(contains(l1, s.witness) != contains(l2, s.witness));
      CHECK(s.clopen.contains(s.witness));
    }

    // Omega-terms stay compatible in a system of quotients of the syntactic node.
    auto sm = synt.sigma_monoid();
    auto sys = build_system({sm, SigmaMonoid(FiniteMonoid(), ab, {0, 0})}, {{0, 1, std::vector<Element>(sm.size(), 0)}});
    for (const char* t : {"a^w", "(ab)^w", "(a^wb)^w", "b^wa^w", "(ab)^wb"}) {
      auto term = parse_omega_term(t, ab);
      auto v = eval_omega_term(sys, term);
      CHECK(compatible(sys, v));
      if (term.kind == OmegaTerm::Kind::OmegaPower) CHECK(m.multiply(v.components[0], v.components[0]) == v.components[0]);
    }
  }
}
