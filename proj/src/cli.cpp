#include "barely/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "barely/construct.hpp"
#include "barely/detect.hpp"
#include "barely/enumerate.hpp"
#include "barely/morphism.hpp"
#include "barely/props.hpp"
#include "barely/streams.hpp"
#include "barely/word.hpp"

namespace barely::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for problems that map to exit code 2 after parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Json& record) { out << record.dump() << "\n"; }

Json occurrence_json(const Occurrence& occ) {
  return Json{{"kind", to_string(occ.kind)}, {"start", occ.start}, {"period", occ.period}};
}

int default_alphabet(RepetitionKind kind) { return kind == RepetitionKind::Square ? 3 : 2; }

const std::vector<std::string> kKinds = {"square", "overlap", "cube"};

struct CheckArgs {
  std::string word, kind = "square", property = "delicate";
  int alphabet = 0;
  bool witnesses = false;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const auto kind = parse_repetition_kind(a.kind);
  const Alphabet alphabet(a.alphabet ? a.alphabet : default_alphabet(kind));
  Word w(alphabet);
  try {
    w = Word::parse(a.word, alphabet);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json rec{{"command", "check"}, {"word", w.str()}, {"alphabet", alphabet.size()},
           {"kind", to_string(kind)}, {"property", a.property}};
  if (a.property == "free") {
    const auto occ = find_repetition(w, kind);
    rec["holds"] = !occ;
    if (occ) rec["occurrence"] = occurrence_json(*occ);
    emit(out, rec);
    return occ ? kExitNegative : kExitOk;
  }
  PropertyKind property;
  try {
    property = parse_property_kind(a.property);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rep = check_property(w, kind, property, {a.witnesses});
  rec["holds"] = rep.holds;
  if (!rep.holds) {
    rec["reason"] = rep.reason;
    if (rep.counterexample) rec["counterexample"] = describe(*rep.counterexample);
  }
  if (a.witnesses && rep.holds) {
    Json list = Json::array();
    for (const auto& wit : rep.witnesses)
      list.push_back(Json{{"mutation", describe(wit.mutation)}, {"created", occurrence_json(wit.created)}});
    rec["witnesses"] = std::move(list);
  }
  emit(out, rec);
  return rep.holds ? kExitOk : kExitNegative;
}

struct ClassifyArgs {
  std::string kind = "square", property = "irreducible", cache;
  int alphabet = 0;
  std::size_t min_len = 1, max_len = 0, witnesses = 4;
  unsigned jobs = 0;
  bool no_symmetry = false, verbose = false;
};

void emit_classification(const LengthClassification& c, std::ostream& out) {
  for (const auto& [n, count] : c.counts) {
    Json words = Json::array();
    if (auto it = c.witnesses.find(n); it != c.witnesses.end())
      for (const Word& w : it->second) words.push_back(w.str());
    emit(out, Json{{"n", n}, {"count", count}, {"witnesses", std::move(words)}});
  }
}

int run_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto kind = parse_repetition_kind(a.kind);
  SearchSpec spec;
  spec.alphabet = Alphabet(a.alphabet ? a.alphabet : default_alphabet(kind));
  spec.kind = kind;
  try {
    spec.property = parse_property_kind(a.property);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.min_len = a.min_len;
  spec.max_len = a.max_len;
  spec.symmetry_reduction = !a.no_symmetry;
  spec.witness_limit = a.witnesses;
  if (spec.min_len > spec.max_len) throw UsageError("--min-len exceeds --max-len");

  std::string cache = a.cache;
  if (cache.empty()) {
    if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir)
      cache = (std::filesystem::path(dir) / ("classify-" + spec_fingerprint(spec) + ".txt")).string();
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::optional<LengthClassification> result;
  bool from_cache = false;
  if (!cache.empty() && std::filesystem::exists(cache)) {
    try {
      result = load_classification(cache, spec);
      from_cache = true;
    } catch (const CacheError& e) {
      err << "ignoring cache: " << e.what() << "\n";
    }
  }
  if (!result) {
    SearchOptions opts;
    opts.jobs = a.jobs;
    result = classify(spec, opts);
    if (!cache.empty()) {
      try {
        save_classification(*result, cache);
      } catch (const CacheError& e) {
        throw UsageError(e.what());
      }
    }
  }
  // The cached file may have been made with a different symmetry setting;
  // results are identical, so report the spec as requested.
  result->spec = spec;

  Json head{{"command", "classify"}, {"alphabet", spec.alphabet.size()},
            {"kind", to_string(kind)}, {"property", to_string(spec.property)},
            {"min_len", spec.min_len}, {"max_len", spec.max_len}};
  emit(out, head);
  emit_classification(*result, out);
  Json summary{{"admitted", result->admitted}};
  if (a.verbose) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    summary["elapsed_ms"] = ms.count();
    summary["from_cache"] = from_cache;
  }
  emit(out, summary);
  return kExitOk;
}

struct ConstructArgs {
  std::string theorem;
  std::size_t n = 0;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
  TheoremId id;
  try {
    id = parse_theorem(a.theorem);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json rec{{"command", "construct"}, {"theorem", to_string(id)}, {"n", a.n}};
  if (!admissible(id, a.n)) {
    rec["ok"] = false;
    rec["error"] = "length not admissible";
    emit(out, rec);
    return kExitNegative;
  }
  const Recipe r = construct(id, a.n);
  rec["ok"] = true;
  rec["branch"] = r.branch;
  rec["word"] = r.word.str();
  emit(out, rec);
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem = "all";
  std::size_t max_len = 200, levels = 3;
  unsigned jobs = 0;
  bool quick = false, verbose = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<TheoremId> ids;
  if (a.theorem == "all") {
    ids = all_theorems();
  } else {
    try {
      ids = {parse_theorem(a.theorem)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool all_ok = true;
  for (TheoremId id : ids) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_len = a.max_len;
    opts.eid_levels = a.levels;
    opts.search.jobs = a.jobs;
    if (a.quick && id == TheoremId::DelCube) opts.search_cap = 36;
    const VerifyReport rep = verify_theorem(id, opts);
    for (const auto& d : rep.discrepancies)
      emit(out, Json{{"theorem", to_string(id)}, {"discrepancy", d}});
    std::size_t constructed = 0;
    for (const auto& e : rep.entries) constructed += e.admissible && e.ok;
    Json rec{{"command", "verify"}, {"theorem", to_string(id)}, {"ok", rep.ok()},
             {"constructed", constructed}, {"search_bound", rep.search_bound}};
    if (id == TheoremId::EidFamily)
      rec["levels"] = a.levels;
    else
      rec["max_len"] = rep.max_len;
    if (a.verbose)
      rec["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    emit(out, rec);
    all_ok = all_ok && rep.ok();
  }
  return all_ok ? kExitOk : kExitNegative;
}

struct MorphismArgs {
  std::string file, builtin_name, kind;
};

int run_morphism_test(const MorphismArgs& a, std::ostream& out) {
  if (a.file.empty() == a.builtin_name.empty())
    throw UsageError("give exactly one of --file and --builtin");
  std::optional<Morphism> m;
  try {
    m = a.file.empty() ? builtin(parse_builtin_morphism(a.builtin_name)) : load_morphism(a.file);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto kind = parse_repetition_kind(a.kind);
  PreservationResult res;
  try {
    if (kind == RepetitionKind::Square)
      res = preserves_squarefree(*m);
    else if (kind == RepetitionKind::Cube)
      res = preserves_cubefree(*m);
    else
      throw std::invalid_argument("morphism-test supports --kind square or cube");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json rec{{"command", "morphism-test"}, {"kind", to_string(kind)},
           {"preserves", res.preserves}, {"words_tested", res.words_tested}};
  if (!res.preserves) {
    rec["counterexample"] = res.counterexample->str();
    rec["image"] = m->apply(*res.counterexample).str();
    rec["occurrence"] = occurrence_json(*res.occurrence);
  }
  emit(out, rec);
  return res.preserves ? kExitOk : kExitNegative;
}

struct PrefixArgs {
  std::string word = "t";
  std::size_t drop = 0, take = 0;
};

int run_prefix(const PrefixArgs& a, std::ostream& out) {
  InfiniteWordId id;
  try {
    id = parse_infinite_word(a.word);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Word w = prefix({id, a.drop, a.take});
  emit(out, Json{{"command", "prefix"}, {"word", to_string(id)}, {"drop", a.drop},
                 {"take", a.take}, {"prefix", w.str()}});
  return kExitOk;
}

struct KDelicateArgs {
  std::string kind = "overlap";
  int alphabet = 0, k = 2;
  std::size_t max_len = 0, limit = 10;
  unsigned jobs = 0;
};

int run_search_k_delicate(const KDelicateArgs& a, std::ostream& out) {
  const auto kind = parse_repetition_kind(a.kind);
  const Alphabet alphabet(a.alphabet ? a.alphabet : default_alphabet(kind));
  SearchOptions opts;
  opts.jobs = a.jobs;
  const auto found = search_k_delicate(alphabet, kind, a.k, a.max_len, a.limit, opts);
  for (const Word& w : found) emit(out, Json{{"n", w.size()}, {"word", w.str()}});
  emit(out, Json{{"command", "search-k-delicate"}, {"alphabet", alphabet.size()},
                 {"kind", to_string(kind)}, {"k", a.k}, {"max_len", a.max_len},
                 {"found", found.size()}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze and construct words that barely avoid squares, overlaps and cubes",
               "barely"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test one word for a property");
  c->add_option("--word", check.word, "Word as digits")->required();
  c->add_option("--kind", check.kind)->check(CLI::IsMember(kKinds));
  c->add_option("--property", check.property,
                "extremal | irreducible | delicate | k-delicate:<k> | free");
  c->add_option("--alphabet", check.alphabet, "Alphabet size (default 3 for square, else 2)")
      ->check(CLI::Range(1, kMaxAlphabetSize));
  c->add_flag("--witnesses", check.witnesses, "List a witness for every edit");

  ClassifyArgs cls;
  auto* cl = app.add_subcommand("classify", "Exhaustively classify lengths");
  cl->add_option("--kind", cls.kind)->check(CLI::IsMember(kKinds));
  cl->add_option("--property", cls.property);
  cl->add_option("--alphabet", cls.alphabet)->check(CLI::Range(1, kMaxAlphabetSize));
  cl->add_option("--min-len", cls.min_len)->check(CLI::NonNegativeNumber);
  cl->add_option("--max-len", cls.max_len)->required()->check(CLI::PositiveNumber);
  cl->add_option("--witnesses", cls.witnesses, "Witnesses kept per length");
  cl->add_option("--jobs", cls.jobs, "Worker threads (0 = all cores)");
  cl->add_option("--cache", cls.cache, "Cache file (default from $BARELY_CACHE_DIR)");
  cl->add_flag("--no-symmetry", cls.no_symmetry, "Search every first letter");
  cl->add_flag("--verbose", cls.verbose, "Add timing to the summary");

  ConstructArgs con;
  auto* co = app.add_subcommand("construct", "Build a word of a given length");
  co->add_option("--theorem", con.theorem)->required();
  co->add_option("--n", con.n)->required();

  VerifyArgs ver;
  auto* ve = app.add_subcommand("verify", "Check constructions and excluded lengths");
  ve->add_option("--theorem", ver.theorem, "Theorem name or 'all'");
  ve->add_option("--max-len", ver.max_len)->check(CLI::PositiveNumber);
  ve->add_option("--levels", ver.levels, "Family levels checked for eid");
  ve->add_option("--jobs", ver.jobs);
  ve->add_flag("--quick", ver.quick, "Cap the delicate cubefree search at 36");
  ve->add_flag("--verbose", ver.verbose);

  MorphismArgs mor;
  auto* mo = app.add_subcommand("morphism-test", "Test whether a morphism preserves freeness");
  mo->add_option("--file", mor.file, "Morphism file ('0 -> 01' per line)");
  mo->add_option("--builtin", mor.builtin_name);
  mo->add_option("--kind", mor.kind)->required()->check(CLI::IsMember({"square", "cube"}));

  PrefixArgs pre;
  auto* pr = app.add_subcommand("prefix", "Print letters of t or v");
  pr->add_option("--word", pre.word, "t | v");
  pr->add_option("--drop", pre.drop);
  pr->add_option("--take", pre.take)->required();

  KDelicateArgs kd;
  auto* ks = app.add_subcommand("search-k-delicate", "Search k-delicate words");
  ks->add_option("--kind", kd.kind)->check(CLI::IsMember(kKinds));
  ks->add_option("--alphabet", kd.alphabet)->check(CLI::Range(1, kMaxAlphabetSize));
  ks->add_option("--k", kd.k)->check(CLI::PositiveNumber);
  ks->add_option("--max-len", kd.max_len)->required()->check(CLI::PositiveNumber);
  ks->add_option("--limit", kd.limit, "Words kept per length");
  ks->add_option("--jobs", kd.jobs);

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c->parsed()) return run_check(check, out);
    if (cl->parsed()) return run_classify(cls, out, err);
    if (co->parsed()) return run_construct(con, out);
    if (ve->parsed()) return run_verify(ver, out);
    if (mo->parsed()) return run_morphism_test(mor, out);
    if (pr->parsed()) return run_prefix(pre, out);
    if (ks->parsed()) return run_search_k_delicate(kd, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace barely::cli
