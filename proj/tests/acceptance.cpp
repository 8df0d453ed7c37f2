// Acceptance suite: ten exact checks, one PASS/FAIL line each. Exits
// nonzero when any check fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <reglang/reglang.hpp>

#include "oracle.hpp"
#include "random_regex.hpp"
#include "random_sigma_set.hpp"

using namespace reglang;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Monoids built while running criteria 5 to 8; criterion 9 checks them all.
std::vector<FiniteMonoid> constructed_monoids;

const Alphabet ab = Alphabet::from_utf8("ab");

std::vector<Language> binary_corpus() {
  testing::RandomRegex gen(ab, 20240501);
  std::vector<Language> out;
  for (int i = 0; i < 500; ++i) out.push_back(gen(6));
  return out;
}

const std::vector<Language>& corpus() {
  static const std::vector<Language> c = binary_corpus();
  return c;
}

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// 1. Membership via derivatives agrees with truncated set enumeration.
Outcome membership_oracle() {
  auto words = words_up_to(ab, 6);
  testing::TruncatedEnumerator enumerate(2, 6);
  std::size_t checks = 0;
  for (const auto& l : corpus()) {
    auto expected = enumerate(l.node());
    DerivativeCache cache;
    for (const Word& w : words) {
      ++checks;
      if (contains(l, w, &cache) != (expected.count(w) == 1)) {
        return fail(to_string(l) + " disagrees on " + ab.format_word(w));
      }
    }
  }
  return {true, std::to_string(corpus().size()) + " regexes, " + std::to_string(checks) + " word checks"};
}

// 2. Semantic-merge minimal automaton is isomorphic to partition refinement
// of the unmerged derivative automaton.
Outcome two_route_minimality() {
  std::size_t naive_states = 0, minimal_states = 0;
  for (const auto& l : corpus()) {
    auto naive = derivative_automaton(l);
    auto m = minimal_automaton(l);
    naive_states += naive.size();
    minimal_states += m.size();
    if (!isomorphic(m, minimize(naive))) return fail(to_string(l));
  }
  return {true, std::to_string(corpus().size()) + " regexes, " + std::to_string(naive_states) + " naive states -> " +
                    std::to_string(minimal_states) + " minimal states"};
}

// 3. Nerode class counts equal minimal sizes; a^n b^n exceeds bound 50 with
// at least 51 pairwise-distinct residuals.
Outcome nerode_and_anbn() {
  for (const auto& l : corpus()) {
    auto r = is_regular(l);
    const auto* reg = std::get_if<Regular>(&r);
    if (!reg) return fail("orbit bound hit for " + to_string(l));
    auto m = minimal_automaton(l);
    if (reg->nerode_class_count != m.size()) return fail("class count mismatch for " + to_string(l));
    if (testing::table_filling_class_count(derivative_automaton(l)) != m.size()) {
      return fail("table filling disagrees for " + to_string(l));
    }
  }

  auto set = anbn_sigma_set(ab);
  auto r = orbit(set, CounterState{}, 50);
  const auto* hit = std::get_if<ExceededBound>(&r);
  if (!hit) return fail("a^n b^n orbit closed within bound 50");
  if (hit->visited < 51) return fail("only " + std::to_string(hit->visited) + " states visited");

  // Independently re-walk the first 51 states and tell them apart by which
  // of b^j and a b^j (j <= 60) they accept.
  std::vector<CounterState> states{CounterState{}};
  std::set<std::pair<int, std::size_t>> seen{{0, 0}};
  for (std::size_t i = 0; i < states.size() && states.size() < 51; ++i) {
    for (Symbol a = 0; a < 2 && states.size() < 51; ++a) {
      auto next = set.step(states[i], a);
      if (seen.insert({static_cast<int>(next.phase), next.count}).second) states.push_back(next);
    }
  }
  std::set<std::vector<bool>> signatures;
  for (const auto& s : states) {
    std::vector<bool> sig;
    for (std::size_t j = 0; j <= 60; ++j) {
      CounterState t = s;
      for (std::size_t k = 0; k < j; ++k) t = set.step(t, 1);
      sig.push_back(anbn_accepting(t));
      CounterState u = set.step(s, 0);
      for (std::size_t k = 0; k < j; ++k) u = set.step(u, 1);
      sig.push_back(anbn_accepting(u));
    }
    signatures.insert(sig);
  }
  if (signatures.size() != 51) return fail("only " + std::to_string(signatures.size()) + " distinguishable states");
  return {true, std::to_string(corpus().size()) + " regexes; a^n b^n: ExceededBound(" + std::to_string(hit->visited) +
                    "), 51 distinguishable residuals"};
}

// 4. Recognition family laws and injectivity, exhaustively.
Outcome terminal_object_laws() {
  auto samples = words_up_to(ab, 4);
  std::size_t automata = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const SigmaSet& s : testing::all_sigma_sets(ab, n)) {
      std::vector<std::vector<Language>> families;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> accept(n);
        for (std::size_t q = 0; q < n; ++q) accept[q] = mask >> q & 1;
        Automaton a(s, accept);
        auto family = recognition_family(a);
        auto check = recognition_morphism_check(a, family, samples);
        ++automata;
        if (!check.ok) return fail(check.failure);
        families.push_back(std::move(family));
      }
      for (std::size_t i = 0; i < families.size(); ++i) {
        for (std::size_t j = i + 1; j < families.size(); ++j) {
          bool differ = false;
          for (std::size_t q = 0; q < n && !differ; ++q) differ = !semantically_equal(families[i][q], families[j][q]);
          if (!differ) return fail("two accept sets give the same family");
        }
      }
    }
  }
  return {true, std::to_string(automata) + " automata (|Q| <= 3, |Σ| = 2, every F)"};
}

// 5. Covering morphisms out of the transition monoid.
Outcome monoid_covering() {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 200; ++i) {
    auto s = testing::random_sigma_set(rng, ab, 1 + rng() % 4);
    State q0 = rng() % s.size();
    auto f = covering_morphism(s, q0);
    constructed_monoids.push_back(transition_monoid(s).sigma_monoid.monoid());
    if (!check_morphism(f)) return fail("covering map not equivariant");
    if (f.map[0] != q0) return fail("identity not sent to q0");
  }
  return {true, "200 random Σ-sets (|Q| <= 4)"};
}

// 6. Syntactic round trip and division into recognizing automata.
Outcome recognition_round_trip() {
  std::mt19937_64 rng(606);
  std::size_t yes = 0, unknown = 0;
  for (const auto& l : corpus()) {
    auto synt = syntactic_monoid(l);
    constructed_monoids.push_back(synt.sigma_monoid().monoid());
    if (!monoid_recognizes(synt, l).equivalent) return fail("syntactic monoid misses " + to_string(l));

    // Recognizers of L: the unmerged derivative automaton, and the minimal
    // automaton run in parallel with an unrelated random Σ-set.
    auto m = minimal_automaton(l);
    auto noise = testing::random_sigma_set(rng, ab, 2);
    std::vector<bool> accept;
    for (State p = 0; p < m.size(); ++p)
      for (State q = 0; q < noise.size(); ++q) accept.push_back(m.accepting(p));
    PointedAutomaton padded(Automaton(product(m.carrier(), noise), accept), m.start() * noise.size());
    for (const PointedAutomaton& a : {derivative_automaton(l), padded}) {
      if (!equivalent(a, m).equivalent) return fail("test automaton does not recognize " + to_string(l));
      auto tm = transition_monoid(reachable_part(a).carrier()).sigma_monoid.monoid();
      constructed_monoids.push_back(tm);
      switch (divides(synt.sigma_monoid().monoid(), tm)) {
        case Division::Yes: ++yes; break;
        case Division::Unknown: ++unknown; break;
        case Division::No: return fail("syntactic monoid does not divide for " + to_string(l));
      }
    }
  }
  return {true, std::to_string(corpus().size()) + " regexes; division Yes " + std::to_string(yes) + ", Unknown " +
                    std::to_string(unknown) + " (budget |N| <= 8)"};
}

// 7. Pullback of the syntactic clopen is the language itself.
Outcome clopen_round_trip() {
  for (const auto& l : corpus()) {
    ClopenRecognizer c(syntactic_monoid(l));
    if (!semantically_equal(clopen_pullback(c), l)) return fail(to_string(l));
  }
  return {true, std::to_string(corpus().size()) + " regexes"};
}

// 8. All bridge clauses on 1000 regexes over alphabets of size 1 to 3.
Outcome bridge() {
  const Alphabet alphabets[] = {Alphabet::from_utf8("a"), Alphabet::from_utf8("ab"), Alphabet::from_utf8("abc")};
  std::size_t max_monoid = 0;
  for (int i = 0; i < 1000; ++i) {
    const Alphabet& alphabet = alphabets[i % 3];
    testing::RandomRegex gen(alphabet, 800000 + i);
    auto l = gen(6);
    auto w = four_witnesses(l);
    constructed_monoids.push_back(w.monoid.sigma_monoid().monoid());
    max_monoid = std::max(max_monoid, w.monoid.sigma_monoid().size());
    BridgeOptions options;
    options.seed = static_cast<std::uint64_t>(i);
    auto report = verify_bridge(w, l, options);
    if (!report.pass()) return fail(to_string(l) + ": " + to_text(report));
  }
  return {true, "1000 regexes (|Σ| <= 3), largest syntactic monoid " + std::to_string(max_monoid)};
}

// 9. (x^w)^2 = x^w on every element of every monoid built above.
Outcome omega_power_law() {
  std::size_t elements = 0;
  for (const auto& m : constructed_monoids) {
    for (Element x = 0; x < m.size(); ++x) {
      Element e = idempotent_power(m, x);
      ++elements;
      if (m.multiply(e, e) != e) return fail("not idempotent");
      // e must be a power of x.
      Element p = x;
      bool found = false;
      for (std::size_t k = 0; k <= m.size() && !found; ++k, p = m.multiply(p, x)) found = p == e;
      if (!found) return fail("idempotent power is not a power");
    }
  }
  if (constructed_monoids.empty()) return fail("no monoids were constructed");
  return {true, std::to_string(constructed_monoids.size()) + " monoids, " + std::to_string(elements) + " elements"};
}

// 10. g(q)(uv) = g(q.u)(v) for Moore runs, with an explicit step-by-step run
// as the reference.
Outcome moore_law() {
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 1000; ++i) {
    auto s = testing::random_sigma_set(rng, ab, 1 + rng() % 6);
    std::vector<int> out(s.size());
    for (auto& o : out) o = static_cast<int>(rng() % 4);
    auto g = [&](State q) { return out[q]; };
    State q = rng() % s.size();
    Word u(rng() % 8), v(rng() % 8);
    for (auto& x : u) x = static_cast<Symbol>(rng() % 2);
    for (auto& x : v) x = static_cast<Symbol>(rng() % 2);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    State manual = q;
    for (Symbol a : uv) manual = s.table()[manual * 2 + a];
    int lhs = moore_run(s, g, q, uv);
    int rhs = moore_run(s, g, s.run(q, u), v);
    if (lhs != rhs || lhs != out[manual]) return fail("law fails at case " + std::to_string(i));
  }
  return {true, "1000 random cases"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"derivative membership matches set enumeration", membership_oracle},
      {"two-route minimality", two_route_minimality},
      {"Nerode classes and the a^n b^n bound", nerode_and_anbn},
      {"recognition family laws and injectivity", terminal_object_laws},
      {"transition monoid covering", monoid_covering},
      {"syntactic recognition round trip and division", recognition_round_trip},
      {"clopen pullback round trip", clopen_round_trip},
      {"four-witness bridge", bridge},
      {"omega-power idempotence", omega_power_law},
      {"Moore action law", moore_law},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
