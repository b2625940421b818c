#include "barely/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace barely {

namespace {

void dfs_free(std::vector<Letter>& buf, std::size_t n, int sigma, RepetitionKind kind,
              std::uint64_t& count, const WordVisitor& visitor) {
  if (buf.size() == n) {
    ++count;
    if (visitor) visitor(buf);
    return;
  }
  for (Letter a = 0; a < sigma; ++a) {
    buf.push_back(a);
    if (!has_suffix_repetition(buf, kind)) dfs_free(buf, n, sigma, kind, count, visitor);
    buf.pop_back();
  }
}

}  // namespace

std::uint64_t enumerate_free(Alphabet alphabet, RepetitionKind kind, std::size_t n,
                             const WordVisitor& visitor) {
  std::vector<Letter> buf;
  buf.reserve(n);
  std::uint64_t count = 0;
  dfs_free(buf, n, alphabet.size(), kind, count, visitor);
  return count;
}

namespace {

// Per-length tallies for one subtree of the search.
struct Tally {
  std::vector<std::uint64_t> counts;          // indexed by length
  std::vector<std::vector<Word>> witnesses;   // indexed by length

  explicit Tally(std::size_t max_len) : counts(max_len + 1, 0), witnesses(max_len + 1) {}
};

class Searcher {
 public:
  Searcher(const SearchSpec& spec, Tally& tally) : spec_(spec), tally_(tally) {}

  // Visits the free word in buf (already checked), then its extensions up to
  // max_len. Lengths below `count_from` are not tallied.
  void descend(std::vector<Letter>& buf, std::size_t count_from) {
    visit(buf, count_from);
    if (buf.size() == spec_.max_len) return;
    for (Letter a = 0; a < spec_.alphabet.size(); ++a) {
      buf.push_back(a);
      if (!has_suffix_repetition(buf, spec_.kind)) descend(buf, count_from);
      buf.pop_back();
    }
  }

  // Like descend, but stops at `depth` and records the frontier instead.
  void frontier(std::vector<Letter>& buf, std::size_t depth,
                std::vector<std::vector<Letter>>& out) {
    visit(buf, 0);
    if (buf.size() == depth) {
      out.push_back(buf);
      return;
    }
    for (Letter a = 0; a < spec_.alphabet.size(); ++a) {
      buf.push_back(a);
      if (!has_suffix_repetition(buf, spec_.kind)) frontier(buf, depth, out);
      buf.pop_back();
    }
  }

 private:
  void visit(std::span<const Letter> w, std::size_t count_from) {
    const std::size_t n = w.size();
    if (n < spec_.min_len || n < count_from) return;
    if (!holds_property(w, spec_.alphabet, spec_.kind, spec_.property)) return;
    ++tally_.counts[n];
    auto& list = tally_.witnesses[n];
    if (list.size() < spec_.witness_limit) list.emplace_back(w, spec_.alphabet);
  }

  const SearchSpec& spec_;
  Tally& tally_;
};

// Words starting with letter a are the images of the 0-words under the
// transposition (0 a); rebuild the unreduced witness list from the 0-words.
std::vector<Word> expand_witnesses(const std::vector<Word>& zero_words, std::size_t limit,
                                   Alphabet alphabet) {
  std::vector<Word> out = zero_words;
  for (Letter a = 1; a < alphabet.size() && out.size() < limit; ++a) {
    const auto swap = SymmetryOp::swap(alphabet, 0, a);
    std::vector<Word> images;
    for (const Word& w : zero_words) images.push_back(apply_symmetry(w, swap));
    std::sort(images.begin(), images.end());
    for (auto& w : images) {
      if (out.size() == limit) break;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

LengthClassification classify(const SearchSpec& spec, const SearchOptions& options) {
  if (spec.min_len > spec.max_len)
    throw std::invalid_argument("classify needs min_len <= max_len");
  const std::size_t max_len = spec.max_len;
  const bool reduce = spec.symmetry_reduction && spec.alphabet.size() > 1;

  Tally shallow(max_len);
  Searcher root(spec, shallow);
  std::vector<std::vector<Letter>> tasks;
  const std::size_t depth = std::clamp<std::size_t>(options.split_depth, 1, max_len == 0 ? 1 : max_len);
  {
    std::vector<Letter> buf;
    if (reduce) {
      // The empty word has no orbit to reduce; count it on its own.
      if (spec.min_len == 0 && holds_property(buf, spec.alphabet, spec.kind, spec.property)) {
        shallow.counts[0] = 1;
        shallow.witnesses[0].emplace_back(spec.alphabet);
      }
      if (max_len >= 1) {
        buf.push_back(0);
        root.frontier(buf, depth, tasks);
      }
    } else if (max_len == 0) {
      root.frontier(buf, 0, tasks);
      tasks.clear();
    } else {
      root.frontier(buf, depth, tasks);
    }
  }

  std::vector<Tally> results(tasks.size(), Tally(max_len));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Searcher s(spec, results[i]);
      std::vector<Letter> buf = tasks[i];
      buf.reserve(max_len);
      s.descend(buf, depth + 1);
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  // Task order is lexicographic prefix order, so concatenation keeps every
  // length's witness list sorted.
  for (const Tally& t : results) {
    for (std::size_t n = depth + 1; n <= max_len; ++n) {
      shallow.counts[n] += t.counts[n];
      auto& list = shallow.witnesses[n];
      for (const Word& w : t.witnesses[n]) {
        if (list.size() >= spec.witness_limit) break;
        list.push_back(w);
      }
    }
  }

  LengthClassification out;
  out.spec = spec;
  for (std::size_t n = spec.min_len; n <= max_len; ++n) {
    std::uint64_t count = shallow.counts[n];
    std::vector<Word> list = std::move(shallow.witnesses[n]);
    if (reduce && n > 0) {
      if (list.size() < spec.witness_limit)
        list = expand_witnesses(list, spec.witness_limit, spec.alphabet);
      count *= static_cast<std::uint64_t>(spec.alphabet.size());
    }
    out.counts[n] = count;
    if (count > 0) out.admitted.insert(n);
    if (!list.empty()) out.witnesses[n] = std::move(list);
  }
  return out;
}

std::vector<Word> search_k_delicate(Alphabet alphabet, RepetitionKind kind, int k,
                                    std::size_t max_len, std::size_t witness_limit,
                                    const SearchOptions& options) {
  SearchSpec spec;
  spec.alphabet = alphabet;
  spec.kind = kind;
  spec.property = PropertyKind::k_delicate(k);
  spec.min_len = 1;
  spec.max_len = std::max<std::size_t>(max_len, 1);
  spec.witness_limit = witness_limit;
  std::vector<Word> out;
  if (max_len == 0) return out;
  const auto c = classify(spec, options);
  for (const auto& [n, list] : c.witnesses) out.insert(out.end(), list.begin(), list.end());
  return out;
}

std::string spec_key(const SearchSpec& spec) {
  std::ostringstream s;
  s << "alphabet=" << spec.alphabet.size() << " kind=" << to_string(spec.kind)
    << " property=" << to_string(spec.property) << " min=" << spec.min_len
    << " max=" << spec.max_len << " witness_limit=" << spec.witness_limit;
  return s.str();
}

std::string spec_fingerprint(const SearchSpec& spec) {
  const std::string key = spec_key(spec) + " code=" + std::to_string(kClassificationCodeVersion);
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

namespace {

constexpr std::string_view kHeaderTag = "# barely-classification v1";

std::string encode_word(const Word& w) { return w.empty() ? "-" : w.str(); }

}  // namespace

std::string format_classification(const LengthClassification& c) {
  std::ostringstream out;
  out << kHeaderTag << " " << spec_key(c.spec) << " symmetry=" << (c.spec.symmetry_reduction ? 1 : 0)
      << " fingerprint=" << spec_fingerprint(c.spec) << "\n";
  for (const auto& [n, count] : c.counts) {
    out << n << " " << count;
    if (auto it = c.witnesses.find(n); it != c.witnesses.end())
      for (const Word& w : it->second) out << " " << encode_word(w);
    out << "\n";
  }
  return out.str();
}

LengthClassification parse_classification(const std::string& text) {
  using K = CacheError::Kind;
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || !header.starts_with(kHeaderTag))
    throw CacheError(K::Format, "missing classification header");

  std::map<std::string, std::string> fields;
  {
    std::istringstream hs(header.substr(kHeaderTag.size()));
    std::string tok;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw CacheError(K::Format, "bad header field '" + tok + "'");
      fields[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  SearchSpec spec;
  try {
    spec.alphabet = Alphabet(std::stoi(fields.at("alphabet")));
    spec.kind = parse_repetition_kind(fields.at("kind"));
    spec.property = parse_property_kind(fields.at("property"));
    spec.min_len = std::stoul(fields.at("min"));
    spec.max_len = std::stoul(fields.at("max"));
    spec.witness_limit = std::stoul(fields.at("witness_limit"));
    spec.symmetry_reduction = fields.count("symmetry") == 0 || fields["symmetry"] != "0";
  } catch (const std::exception& e) {
    throw CacheError(K::Format, std::string("bad classification header: ") + e.what());
  }
  if (fields.count("fingerprint") == 0 || fields["fingerprint"] != spec_fingerprint(spec))
    throw CacheError(K::Stale, "classification fingerprint does not match this build");

  LengthClassification c;
  c.spec = spec;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t n = 0;
    std::uint64_t count = 0;
    if (!(ls >> n >> count)) throw CacheError(K::Format, "bad record '" + line + "'");
    if (n < spec.min_len || n > spec.max_len || c.counts.count(n))
      throw CacheError(K::Format, "unexpected length " + std::to_string(n));
    c.counts[n] = count;
    if (count > 0) c.admitted.insert(n);
    std::string tok;
    std::vector<Word> list;
    while (ls >> tok) {
      try {
        list.push_back(tok == "-" ? Word(spec.alphabet) : Word::parse(tok, spec.alphabet));
      } catch (const std::exception& e) {
        throw CacheError(K::Validation, "bad witness '" + tok + "': " + e.what());
      }
    }
    if (!list.empty()) c.witnesses[n] = std::move(list);
  }
  if (c.counts.size() != spec.max_len - spec.min_len + 1)
    throw CacheError(K::Format, "classification is missing lengths");

  for (const auto& [n, list] : c.witnesses) {
    if (list.size() > spec.witness_limit || list.size() > c.counts[n])
      throw CacheError(K::Validation, "too many witnesses at length " + std::to_string(n));
    for (std::size_t j = 0; j < list.size(); ++j) {
      const Word& w = list[j];
      if (w.size() != n || (j > 0 && !(list[j - 1] < w)) || !is_free(w, spec.kind) ||
          !holds_property(w.letters(), spec.alphabet, spec.kind, spec.property))
        throw CacheError(K::Validation, "witness " + encode_word(w) + " fails verification");
    }
  }
  return c;
}

void save_classification(const LengthClassification& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError(CacheError::Kind::Io, "cannot write " + path);
  out << format_classification(c);
  if (!out) throw CacheError(CacheError::Kind::Io, "write failed for " + path);
}

LengthClassification load_classification(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(CacheError::Kind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_classification(ss.str());
}

LengthClassification load_classification(const std::string& path, const SearchSpec& expected) {
  auto c = load_classification(path);
  if (spec_fingerprint(c.spec) != spec_fingerprint(expected))
    throw CacheError(CacheError::Kind::Stale, "cache " + path + " was built for " +
                                                  spec_key(c.spec));
  return c;
}

}  // namespace barely
