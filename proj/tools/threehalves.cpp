// Command-line front end: conversions, expansions, sequence export,
// partition and verification reports.
//
// Exit codes: 0 success, 1 a verification found a violation, 2 usage error.

#include "threehalves/base15.hpp"
#include "threehalves/base32.hpp"
#include "threehalves/bfile.hpp"
#include "threehalves/expansions.hpp"
#include "threehalves/lemmas.hpp"
#include "threehalves/machine.hpp"
#include "threehalves/sequences.hpp"
#include "threehalves/stanley.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace threehalves;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

MachineConfig parseMachine(const std::string &spec) {
  auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("machine must be given as a,b: '" + spec + "'");
  MachineConfig cfg{static_cast<std::uint32_t>(std::stoul(spec.substr(0, comma))),
                    static_cast<std::uint32_t>(std::stoul(spec.substr(comma + 1)))};
  cfg.validate();
  return cfg;
}

std::uint64_t parseCount(const std::string &text) {
  ExactRational v = ExactRational::parse(text);
  if (!v.isInteger() || v.sign() < 0)
    throw std::invalid_argument("expected a non-negative integer, got '" + text + "'");
  return toUint64(v);
}

struct ConvertOpts {
  std::string machine = "2,3";
  bool base15 = false;
  bool trace = false;
  std::string value;
};

int runConvert(const ConvertOpts &o) {
  const std::uint64_t n = parseCount(o.value);
  if (o.base15) {
    std::cout << toString(encodeInteger15(n)) << '\n';
    return kOk;
  }
  MachineConfig cfg = parseMachine(o.machine);
  if (cfg.b > 10)
    throw std::invalid_argument("digits of machines with b > 10 cannot be rendered");
  MachineRun run = runMachine(n, cfg, o.trace);
  if (o.trace)
    for (const auto &e : run.state.trace)
      std::cout << formatExplosion(e, cfg) << '\n';
  std::cout << toString(run.numeral) << '\n';
  return kOk;
}

struct EvalOpts {
  std::string machine = "2,3";
  bool base15 = false;
  unsigned decimals = 12;
  std::string numeral;
};

int runEval(const EvalOpts &o) {
  ExactRational v = o.base15 ? value15(parse15(o.numeral)) : valueOfNumeral(parseNumeral(o.numeral, parseMachine(o.machine)));
  auto [dec, exact] = v.toDecimal(o.decimals);
  std::cout << v.str() << "  (" << (exact ? "= " : "~ ") << dec << (exact ? "" : "...") << ")\n";
  return kOk;
}

struct ExpandOpts {
  std::string policy = "greedy01";
  unsigned fracDigits = 20;
  bool doubled = false;
  std::string value;
};

int runExpand(const ExpandOpts &o) {
  ExactRational x = ExactRational::parse(o.value);
  ExpansionPolicy policy = parsePolicy(o.policy);
  if (o.doubled) {
    Expansion32 e = expandDoubled32(x, policy, o.fracDigits);
    std::cout << toString(e.numeral) << '\n' << "remainder " << e.remainder.str() << '\n';
  } else {
    Expansion e = expand(x, policy, o.fracDigits);
    std::cout << toString(e.numeral) << '\n' << "remainder " << e.remainder.str() << '\n';
  }
  return kOk;
}

struct SeqOpts {
  std::string id;
  std::size_t count = 20;
  std::optional<std::string> method;
  std::int64_t offset = 0;
};

BFile buildBFile(const std::string &id, std::size_t count, const std::optional<std::string> &method,
                 std::int64_t offset) {
  std::optional<CrossMethod> m;
  if (method)
    m = parseCrossMethod(*method);
  return BFile{offset, sequenceTerms(id, count, m)};
}

int runSeq(const SeqOpts &o) {
  writeBFile(std::cout, buildBFile(o.id, o.count, o.method, o.offset));
  return kOk;
}

struct CheckOpts {
  std::string file;
  std::string id;
  std::optional<std::string> method;
};

int runCheck(const CheckOpts &o) {
  std::ifstream in(o.file);
  if (!in)
    throw std::invalid_argument("cannot open " + o.file);
  BFile theirs = readBFile(in);
  BFile ours = buildBFile(o.id, theirs.values.size(), o.method, theirs.offset);
  for (std::size_t i = 0; i < theirs.values.size(); ++i)
    if (theirs.values[i] != ours.values[i]) {
      std::cout << "mismatch at index " << theirs.offset + static_cast<std::int64_t>(i) << ": file has "
                << theirs.values[i].str() << ", computed " << ours.values[i].str() << '\n';
      return kViolation;
    }
  std::cout << theirs.values.size() << " terms match " << o.id << '\n';
  return kOk;
}

struct PartitionOpts {
  std::uint64_t bound = 1000;
  std::size_t layers = 4;
};

int runPartition(const PartitionOpts &o) {
  Partition p = greedyPartition(o.bound);
  for (std::size_t j = 0; j < o.layers && j < p.layers.size(); ++j) {
    std::cout << "S_" << j << ":";
    for (auto n : p.layers[j])
      std::cout << ' ' << n;
    std::cout << '\n';
  }
  return kOk;
}

struct ConjectureOpts {
  std::uint64_t layers = 8;
  std::size_t terms = 20;
  std::uint64_t bound = 100000;
};

int runConjecture(const ConjectureOpts &o) {
  if (o.terms < 1)
    throw std::invalid_argument("--terms must be at least 1");
  ConjectureReport rep = verifyConjecture(o.layers, o.terms, o.bound);
  std::size_t agree = 0;
  for (const auto &l : rep.layers) {
    if (l.agrees()) {
      ++agree;
      std::cout << "layer " << l.k << ": agree on " << l.greedy.size() << " terms\n";
    } else {
      std::size_t i = *l.firstDivergence;
      std::cout << "layer " << l.k << ": conjecture falsified at (" << l.k << ", " << i << "): greedy "
                << l.greedy[i] << ", ternary " << l.reinterpreted[i] << '\n';
    }
  }
  std::cout << agree << "/" << rep.layers.size() << " layers agree (greedy bound " << rep.bound << ")\n";
  return rep.allAgree() ? kOk : kViolation;
}

struct LemmaOpts {
  std::string suite = "all";
  std::optional<std::uint64_t> limit;
  std::uint64_t seed = SuiteParams{}.seed;
};

int runLemmas(const LemmaOpts &o) {
  SuiteParams params{o.limit, o.seed};
  bool found = false, ok = true;
  for (const auto &s : lemmaSuites()) {
    if (o.suite != "all" && o.suite != s.name)
      continue;
    found = true;
    SuiteResult r = s.run(params);
    std::cout << (r.passed ? "pass " : "FAIL ") << r.name << " (" << r.checked << " checked)";
    if (!r.passed)
      std::cout << ": " << r.witness;
    std::cout << '\n';
    ok = ok && r.passed;
  }
  if (!found) {
    std::string names;
    for (const auto &s : lemmaSuites())
      names += " " + std::string(s.name);
    throw std::invalid_argument("unknown suite '" + o.suite + "'; available: all" + names);
  }
  return ok ? kOk : kViolation;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Numerals in base 3/2 and base 1.5, and greedy 3-free layers"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<int()> action;

  ConvertOpts convert;
  auto *cConvert = app.add_subcommand("convert", "Write a non-negative integer with an exploding-dots machine");
  auto *optMachine = cConvert->add_option("--machine", convert.machine, "Machine a,b (base b/a); default 2,3");
  cConvert->add_flag("--base15", convert.base15, "Write in base 1.5 (digits 0, H, 1)")->excludes(optMachine);
  cConvert->add_flag("--trace", convert.trace, "Print each explosion");
  cConvert->add_option("value", convert.value, "Non-negative integer")->required();
  cConvert->callback([&] { action = [&] { return runConvert(convert); }; });

  EvalOpts eval;
  auto *cEval = app.add_subcommand("eval", "Exact value of a numeral");
  auto *optEvalMachine = cEval->add_option("--machine", eval.machine, "Machine a,b (base b/a); default 2,3");
  cEval->add_flag("--base15", eval.base15, "Numeral is in base 1.5")->excludes(optEvalMachine);
  cEval->add_option("--decimals", eval.decimals, "Decimal digits shown");
  cEval->add_option("numeral", eval.numeral, "Digit string, optionally with a radix point")->required();
  cEval->callback([&] { action = [&] { return runEval(eval); }; });

  ExpandOpts exp;
  auto *cExpand = app.add_subcommand("expand", "Radix-point expansion of a positive rational");
  cExpand->add_option("--policy", exp.policy, "greedy01|lazy01|h0|h1|minleft|finite")
      ->check(CLI::IsMember({"greedy01", "lazy01", "h0", "h1", "minleft", "finite"}));
  cExpand->add_option("--frac-digits", exp.fracDigits, "Fractional digits D");
  cExpand->add_flag("--doubled", exp.doubled, "Base 3/2 digits from the base 1.5 expansion of x/2");
  cExpand->add_option("value", exp.value, "Positive rational: p, p/q or a decimal")->required();
  cExpand->callback([&] { action = [&] { return runExpand(exp); }; });

  SeqOpts seq;
  auto *cSeq = app.add_subcommand("seq", "Print a sequence as b-file lines");
  cSeq->add_option("id", seq.id, "Sequence id (" + supportedSequenceList() + ")")->required();
  cSeq->add_option("--count", seq.count, "Number of terms")->check(CLI::PositiveNumber);
  cSeq->add_option("--method", seq.method, "a265316 route: greedy|reinterpret|dictindex15|halfa261691");
  cSeq->add_option("--offset", seq.offset, "First index");
  cSeq->callback([&] { action = [&] { return runSeq(seq); }; });

  CheckOpts check;
  auto *cCheck = app.add_subcommand("check-bfile", "Compare a b-file against a computed sequence");
  cCheck->add_option("file", check.file, "b-file path")->required();
  cCheck->add_option("--seq", check.id, "Sequence id")->required();
  cCheck->add_option("--method", check.method, "a265316 route");
  cCheck->callback([&] { action = [&] { return runCheck(check); }; });

  PartitionOpts part;
  auto *cPart = app.add_subcommand("partition", "Greedy 3-free layers of [0, bound]");
  cPart->add_option("--bound", part.bound, "Largest integer placed");
  cPart->add_option("--layers", part.layers, "Layers printed");
  cPart->callback([&] { action = [&] { return runPartition(part); }; });

  auto *cVerify = app.add_subcommand("verify", "Run verification reports");
  cVerify->require_subcommand(1);
  ConjectureOpts conj;
  auto *cConj = cVerify->add_subcommand("conjecture", "Compare greedy layers with S_k read in ternary");
  cConj->add_option("--layers", conj.layers, "Largest layer index k checked");
  cConj->add_option("--terms", conj.terms, "Terms compared per layer");
  cConj->add_option("--bound", conj.bound, "Initial greedy partition bound");
  cConj->callback([&] { action = [&] { return runConjecture(conj); }; });
  LemmaOpts lem;
  auto *cLem = cVerify->add_subcommand("lemmas", "Bounded property checks");
  cLem->add_option("--suite", lem.suite, "Suite name or 'all'");
  cLem->add_option("--limit", lem.limit, "Suite size (suite-specific)");
  cLem->add_option("--seed", lem.seed, "Seed for randomized suites");
  cLem->callback([&] { action = [&] { return runLemmas(lem); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    status = action ? action() : kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
