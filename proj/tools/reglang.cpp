// reglang: command-line front end for the reglang library.
//
// Exit codes: 0 success, 1 domain or usage error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <reglang/reglang.hpp>

namespace {

using namespace reglang;
using io::Json;

constexpr int kVerificationFailed = 2;

struct Options {
  std::string alphabet;
  std::size_t bound = kDefaultOrbitBound;
  std::size_t max_len = 6;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out;
};

struct Output {
  std::string text;
  int code = 0;
};

Alphabet require_alphabet(const Options& o) {
  if (o.alphabet.empty()) throw AlphabetError("this command needs a nonempty --alphabet");
  return Alphabet::from_utf8(o.alphabet);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void reject_dot(const Options& o, const char* command) {
  if (o.format == "dot") throw Error(std::string("--format dot is not available for ") + command);
}

std::string automaton_text(const PointedAutomaton& a) {
  std::ostringstream out;
  out << a.size() << " states, start " << a.carrier().name(a.start()) << "\n";
  for (State q = 0; q < a.size(); ++q) {
    out << (q == a.start() ? "->" : "  ") << (a.accepting(q) ? "* " : "  ") << a.carrier().name(q);
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      out << "  " << a.alphabet().symbol_text(s) << ":" << a.carrier().name(a.step(q, s));
    }
    out << "\n";
  }
  return out.str();
}

std::string sigma_set_text(const SigmaSet& s) {
  std::ostringstream out;
  out << s.size() << " states\n";
  for (State q = 0; q < s.size(); ++q) {
    out << "  " << s.name(q);
    for (Symbol a = 0; a < s.alphabet().size(); ++a) out << "  " << s.alphabet().symbol_text(a) << ":" << s.name(s.step(q, a));
    out << "\n";
  }
  return out.str();
}

std::string recognizer_text(const MonoidRecognizer& r) {
  std::string out = cayley_table(r.sigma_monoid());
  out += "accepting:";
  for (Element e : r.accepting_elements()) out += " " + r.sigma_monoid().element_name(e);
  return out + "\n";
}

Output cmd_derive(const Options& o, const std::string& regex, const std::string& word) {
  reject_dot(o, "derive");
  Alphabet a = require_alphabet(o);
  Language d = word_derivative(parse_regex(regex, a), a.parse_word(word));
  if (o.format == "json") return {dump(io::language_to_json(d))};
  return {to_string(d) + "\n"};
}

Output cmd_member(const Options& o, const std::string& regex, const std::string& word) {
  reject_dot(o, "member");
  Alphabet a = require_alphabet(o);
  bool in = contains(parse_regex(regex, a), a.parse_word(word));
  if (o.format == "json") return {dump(Json{{"member", in}})};
  return {in ? "true\n" : "false\n"};
}

Output cmd_equiv(const Options& o, const std::string& r1, const std::string& r2) {
  reject_dot(o, "equiv");
  Alphabet a = require_alphabet(o);
  auto result = equivalent(minimal_automaton(parse_regex(r1, a)), minimal_automaton(parse_regex(r2, a)));
  int code = result.equivalent ? 0 : kVerificationFailed;
  if (o.format == "json") {
    Json j{{"equivalent", result.equivalent}};
    if (result.counterexample) j["counterexample"] = a.format_word(*result.counterexample);
    return {dump(j), code};
  }
  if (result.equivalent) return {"equivalent\n"};
  return {"not equivalent; counterexample: " + a.format_word(*result.counterexample) + "\n", code};
}

Output cmd_min(const Options& o, const std::string& regex) {
  Alphabet a = require_alphabet(o);
  PointedAutomaton m = minimal_automaton(parse_regex(regex, a));
  if (o.format == "dot") return {to_dot(m)};
  if (o.format == "json") return {dump(io::automaton_to_json(m))};
  return {automaton_text(m)};
}

template <class S, class Registry>
Output report_orbit(const Options& o, const LazySigmaSet<S, Registry>& set, const S& start) {
  auto r = orbit(set, start, o.bound);
  if (const auto* hit = std::get_if<ExceededBound>(&r)) {
    if (o.format == "json") return {dump(Json{{"finite", false}, {"bound", o.bound}, {"visited", hit->visited}})};
    return {"exceeded bound " + std::to_string(o.bound) + " after visiting " + std::to_string(hit->visited) +
            " states\n"};
  }
  const auto& fin = std::get<FiniteOrbit<S>>(r);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < fin.orbit.size(); ++i) names.push_back(set.name(fin.orbit[i], i));
  SigmaSet s(set.alphabet(), std::move(names), fin.delta);
  if (o.format == "dot") return {to_dot(s)};
  if (o.format == "json") return {dump(Json{{"finite", true}, {"orbit", io::sigma_set_to_json(s)}})};
  return {"finite orbit, " + sigma_set_text(s)};
}

Output cmd_orbit(const Options& o, const std::string& regex, const std::string& presentation) {
  Alphabet a = require_alphabet(o);
  if (presentation == "anbn") {
    auto set = anbn_sigma_set(a);
    return report_orbit(o, set, CounterState{});
  }
  if (regex.empty()) throw Error("orbit needs a regex or --presentation anbn");
  Language l = parse_regex(regex, a);
  auto set = derivative_sigma_set(a, {l});
  return report_orbit(o, set, l);
}

Output cmd_moore(const Options& o, const std::string& file, const std::string& word, const std::string& state) {
  reject_dot(o, "moore");
  PointedAutomaton a = io::pointed_automaton_from_json(read_json(file));
  State q = a.start();
  if (!state.empty()) {
    auto found = a.carrier().find(state);
    if (!found) throw ValidationError("undefined state '" + state + "'");
    q = *found;
  }
  Word w = a.alphabet().parse_word(word);
  bool out = moore_run(a.carrier(), [&](State s) { return a.accepting(s); }, q, w);
  if (o.format == "json") return {dump(Json{{"state", a.carrier().name(q)}, {"word", a.alphabet().format_word(w)}, {"output", out}})};
  return {out ? "accept\n" : "reject\n"};
}

Output cmd_synt(const Options& o, const std::string& regex) {
  reject_dot(o, "synt");
  Alphabet a = require_alphabet(o);
  MonoidRecognizer r = syntactic_monoid(parse_regex(regex, a));
  if (o.format == "json") return {dump(io::monoid_to_json(r))};
  return {recognizer_text(r)};
}

Output cmd_tmon(const Options& o, const std::string& file) {
  reject_dot(o, "tmon");
  Automaton a = io::automaton_from_json(read_json(file));
  TransitionMonoid tm = transition_monoid(a.carrier());
  if (o.format == "json") return {dump(io::monoid_to_json(tm.sigma_monoid))};
  return {cayley_table(tm.sigma_monoid)};
}

Output cmd_recognize(const Options& o, const std::string& file, const std::string& regex) {
  reject_dot(o, "recognize");
  MonoidRecognizer r = io::monoid_recognizer_from_json(read_json(file));
  const Alphabet& a = r.sigma_monoid().alphabet();
  if (!o.alphabet.empty()) require_same_alphabet(Alphabet::from_utf8(o.alphabet), a, "recognize");
  auto result = monoid_recognizes(r, parse_regex(regex, a));
  int code = result.equivalent ? 0 : kVerificationFailed;
  if (o.format == "json") {
    Json j{{"recognizes", result.equivalent}};
    if (result.counterexample) j["counterexample"] = a.format_word(*result.counterexample);
    return {dump(j), code};
  }
  if (result.equivalent) return {"recognizes\n"};
  return {"does not recognize; counterexample: " + a.format_word(*result.counterexample) + "\n", code};
}

Output cmd_profinite_eval(const Options& o, const std::string& file, const std::string& term) {
  reject_dot(o, "profinite-eval");
  ProfiniteSystem sys = io::system_from_json(read_json(file));
  OmegaTerm t = parse_omega_term(term, sys.alphabet());
  ProfiniteWordApprox x = eval_omega_term(sys, t);
  if (o.format == "json") return {dump(io::approx_to_json(sys, x))};
  std::string out = to_string(t, sys.alphabet()) + "\n";
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    out += "  node " + std::to_string(i) + ": " + sys.nodes()[i].element_name(x.components[i]) + "\n";
  }
  return {out};
}

Output cmd_pullback(const Options& o, const std::string& file) {
  reject_dot(o, "pullback");
  ClopenRecognizer c(io::monoid_recognizer_from_json(read_json(file)));
  Language l = clopen_pullback(c);
  if (o.format == "json") return {dump(io::language_to_json(l))};
  return {to_string(l) + "\n"};
}

Output cmd_separate(const Options& o, const std::string& r1, const std::string& r2) {
  reject_dot(o, "separate");
  Alphabet a = require_alphabet(o);
  auto result = separate(parse_regex(r1, a), parse_regex(r2, a));
  if (std::holds_alternative<Equal>(result)) {
    if (o.format == "json") return {dump(Json{{"equal", true}})};
    return {"equal\n"};
  }
  const auto& s = std::get<Separation>(result);
  if (o.format == "json") {
    return {dump(Json{{"equal", false},
                      {"witness", a.format_word(s.witness)},
                      {"clopen", io::monoid_to_json(s.clopen.recognizer())}})};
  }
  return {"separated by " + a.format_word(s.witness) + "\n" + recognizer_text(s.clopen.recognizer())};
}

Output cmd_bridge(const Options& o, const std::string& regex) {
  reject_dot(o, "bridge");
  Alphabet a = require_alphabet(o);
  Language l = parse_regex(regex, a);
  BridgeOptions bo;
  bo.max_len = o.max_len;
  bo.seed = o.seed;
  BridgeReport report = verify_bridge(four_witnesses(l, o.bound), l, bo);
  int code = report.pass() ? 0 : kVerificationFailed;
  if (o.format == "json") {
    Json clauses = Json::array();
    for (const auto& c : report.clauses) {
      Json j{{"name", c.name}, {"pass", c.pass}};
      if (c.witness) j["witness"] = *c.witness;
      clauses.push_back(std::move(j));
    }
    return {dump(Json{{"clauses", std::move(clauses)}}), code};
  }
  return {to_text(report), code};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular languages via derivatives, automata, monoids and profinite recognizers"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--alphabet", o.alphabet, "Alphabet symbols, e.g. ab");
  app.add_option("--bound", o.bound, "Orbit exploration bound")->check(CLI::PositiveNumber);
  app.add_option("--max-len", o.max_len, "Longest exhaustively sampled word for bridge")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", o.seed, "Random seed for sampled words");
  app.add_option("--out", o.out, "Write output to this file instead of stdout");

  std::string a1, a2, a3, presentation;
  std::function<Output()> run;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* derive = sub("derive", "Word derivative of a regex, in normal form");
  derive->add_option("regex", a1)->required();
  derive->add_option("word", a2)->required();
  derive->callback([&] { run = [&] { return cmd_derive(o, a1, a2); }; });

  auto* member = sub("member", "Membership of a word in a regex");
  member->add_option("regex", a1)->required();
  member->add_option("word", a2)->required();
  member->callback([&] { run = [&] { return cmd_member(o, a1, a2); }; });

  auto* equiv = sub("equiv", "Equivalence of two regexes, with the least counterexample");
  equiv->add_option("left", a1)->required();
  equiv->add_option("right", a2)->required();
  equiv->callback([&] { run = [&] { return cmd_equiv(o, a1, a2); }; });

  auto* min = sub("min", "Minimal automaton of a regex");
  min->add_option("regex", a1)->required();
  min->callback([&] { run = [&] { return cmd_min(o, a1); }; });

  auto* orb = sub("orbit", "Derivative orbit of a regex, or of a built-in presentation");
  orb->add_option("regex", a1);
  orb->add_option("--presentation", presentation, "Built-in presentation")->check(CLI::IsMember({"anbn"}));
  orb->callback([&] { run = [&] { return cmd_orbit(o, a1, presentation); }; });

  auto* moore = sub("moore", "Output of an automaton file after a word");
  moore->add_option("automaton", a1)->required();
  moore->add_option("word", a2)->required();
  moore->add_option("--state", a3, "State to run from (default: start)");
  moore->callback([&] { run = [&] { return cmd_moore(o, a1, a2, a3); }; });

  auto* synt = sub("synt", "Syntactic monoid of a regex");
  synt->add_option("regex", a1)->required();
  synt->callback([&] { run = [&] { return cmd_synt(o, a1); }; });

  auto* tmon = sub("tmon", "Transition monoid of an automaton file");
  tmon->add_option("automaton", a1)->required();
  tmon->callback([&] { run = [&] { return cmd_tmon(o, a1); }; });

  auto* recognize = sub("recognize", "Does a monoid file with an accepting subset recognize a regex");
  recognize->add_option("monoid", a1)->required();
  recognize->add_option("regex", a2)->required();
  recognize->callback([&] { run = [&] { return cmd_recognize(o, a1, a2); }; });

  auto* peval = sub("profinite-eval", "Evaluate an omega-term over a system file");
  peval->add_option("system", a1)->required();
  peval->add_option("term", a2)->required();
  peval->callback([&] { run = [&] { return cmd_profinite_eval(o, a1, a2); }; });

  auto* pullback = sub("pullback", "Regex for the pullback of a monoid file with an accepting subset");
  pullback->add_option("monoid", a1)->required();
  pullback->callback([&] { run = [&] { return cmd_pullback(o, a1); }; });

  auto* sep = sub("separate", "Clopen recognizer separating two regexes");
  sep->add_option("left", a1)->required();
  sep->add_option("right", a2)->required();
  sep->callback([&] { run = [&] { return cmd_separate(o, a1, a2); }; });

  auto* bridge = sub("bridge", "Build the four witnesses of a regex and cross-check them");
  bridge->add_option("regex", a1)->required();
  bridge->callback([&] { run = [&] { return cmd_bridge(o, a1); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Output result;
  try {
    result = run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 1;
    }
    file << result.text;
  }
  return result.code;
}
