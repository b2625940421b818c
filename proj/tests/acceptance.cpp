// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "barely/construct.hpp"
#include "barely/enumerate.hpp"
#include "barely/morphism.hpp"
#include "barely/props.hpp"
#include "barely/streams.hpp"

using namespace barely;

namespace {

constexpr RepetitionKind kAllKinds[] = {RepetitionKind::Square, RepetitionKind::Overlap,
                                        RepetitionKind::Cube};

std::set<std::size_t> range_set(std::size_t lo, std::size_t hi, std::set<std::size_t> extra = {}) {
  for (std::size_t n = lo; n <= hi; ++n) extra.insert(n);
  return extra;
}

std::string show(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto n : s) out += (out.size() > 1 ? "," : "") + std::to_string(n);
  return out + "}";
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome classification(int sigma, RepetitionKind kind, PropertyKind prop, std::size_t max_len,
                       const std::set<std::size_t>& expected) {
  SearchSpec spec;
  spec.alphabet = Alphabet(sigma);
  spec.kind = kind;
  spec.property = prop;
  spec.max_len = max_len;
  spec.witness_limit = 1;
  const auto c = classify(spec);
  bool witnesses_ok = true;
  for (const auto& [n, ws] : c.witnesses)
    for (const Word& w : ws)
      witnesses_ok = witnesses_ok && w.size() == n && check_property(w, kind, prop).holds;
  const bool pass = c.admitted == expected && witnesses_ok;
  return {pass, "admitted " + show(c.admitted) + (pass ? "" : ", expected " + show(expected))};
}

template <class F>
void for_all_words(int sigma, std::size_t n, F&& f) {
  std::vector<Letter> w(n, 0);
  while (true) {
    f(std::span<const Letter>(w));
    std::size_t i = n;
    while (i > 0 && ++w[i - 1] == sigma) w[--i] = 0;
    if (i == 0) return;
  }
}

Outcome a7() {
  std::size_t built = 0;
  for (auto id : all_theorems()) {
    const auto target = target_of(id);
    for (std::size_t n = 1; n <= 200; ++n) {
      if (!admissible(id, n)) continue;
      try {
        const Recipe r = construct(id, n);
        bool ok = r.word.size() == n && is_free(r.word, target.kind);
        for (const auto& p : target.properties)
          ok = ok && check_property(r.word, target.kind, p).holds;
        if (!ok) return {false, std::string(to_string(id)) + " n=" + std::to_string(n) + " fails"};
      } catch (const std::exception& e) {
        return {false, e.what()};
      }
      ++built;
    }
  }
  return {true, std::to_string(built) + " constructions verified"};
}

Outcome a8() {
  for (std::size_t i = 0; i <= 3; ++i) {
    const Word w = eid_word(i);
    const bool ext = is_extremal(w, RepetitionKind::Overlap).holds;
    const bool ok = w.size() == (32u << i) && ext &&
                    is_irreducible(w, RepetitionKind::Overlap).holds &&
                    is_delicate(w, RepetitionKind::Overlap).holds &&
                    is_extremal_fast(w).holds == ext;
    if (!ok) return {false, "w_" + std::to_string(i) + " fails"};
  }
  return {true, "w_0..w_3 (lengths 32..256)"};
}

Outcome a9() {
  for (auto id : {BuiltinMorphismId::Phi1IrrCube, BuiltinMorphismId::Phi2IrrCube,
                  BuiltinMorphismId::PhiDelCube})
    if (!preserves_cubefree(builtin(id)).preserves)
      return {false, std::string(to_string(id)) + " does not preserve cubefreeness"};
  if (!preserves_squarefree(builtin(BuiltinMorphismId::PhiDelSquare)).preserves)
    return {false, "phi_delsq does not preserve squarefreeness"};
  const Alphabet bin = Alphabet::binary();
  for (auto id : {BuiltinMorphismId::Phi1IrrCube, BuiltinMorphismId::Phi2IrrCube})
    for (const char* u : {"0", "1", "00", "01", "10", "11"})
      if (!is_irreducible(builtin(id).apply(Word::parse(u, bin)), RepetitionKind::Cube).holds)
        return {false, std::string(to_string(id)) + "(" + u + ") not irreducible cubefree"};
  return {true, "4 morphisms, 12 seed images"};
}

Outcome a10() {
  const bool ok =
      no_square_prefix(std::size_t{1} << 16) &&
      prepend_check(Word::parse("010110", Alphabet::binary()), InfiniteWordId::ThueMorse,
                    RepetitionKind::Overlap, kBinaryCheckLimit) &&
      prepend_check(Word::parse("101001101001", Alphabet::binary()), InfiniteWordId::ThueMorse,
                    RepetitionKind::Overlap, kBinaryCheckLimit) &&
      prepend_check(Word::parse("2", Alphabet::ternary()), InfiniteWordId::TernaryThueMorse,
                    RepetitionKind::Square, kTernaryCheckLimit) &&
      prepend_check(Word::parse("21", Alphabet::ternary()), InfiniteWordId::TernaryThueMorse,
                    RepetitionKind::Square, kTernaryCheckLimit) &&
      berstel_v(1000) == prefix(InfiniteWordId::TernaryThueMorse, 1000);
  return {ok, "bounds 2^16, 2^14, 10^4, 10^3"};
}

Outcome a11() {
  for (int sigma : {2, 3}) {
    const std::size_t max_n = sigma == 2 ? 14 : 10;
    for (std::size_t n = 0; n <= max_n; ++n) {
      std::uint64_t filtered[3] = {0, 0, 0};
      bool agree = true;
      for_all_words(sigma, n, [&](std::span<const Letter> w) {
        for (int k = 0; k < 3; ++k) {
          const bool f = oracle_is_free(w, kAllKinds[k]);
          agree = agree && f == is_free(w, kAllKinds[k]);
          filtered[k] += f;
        }
      });
      if (!agree) return {false, "is_free disagrees with the oracle at n=" + std::to_string(n)};
      for (int k = 0; k < 3; ++k)
        if (enumerate_free(Alphabet(sigma), kAllKinds[k], n) != filtered[k])
          return {false, "DFS count mismatch at n=" + std::to_string(n)};
    }
  }
  for (int sigma : {2, 3}) {
    const Alphabet alphabet(sigma);
    const auto syms = SymmetryOp::all(alphabet);
    for (std::size_t n = 0; n <= (sigma == 2 ? 12u : 8u); ++n) {
      bool ok = true;
      for_all_words(sigma, n, [&](std::span<const Letter> letters) {
        if (!ok) return;
        const Word w(letters, alphabet);
        for (auto kind : kAllKinds) {
          const bool v[3] = {is_irreducible(w, kind).holds, is_delicate(w, kind).holds,
                             is_extremal(w, kind).holds};
          for (const auto& s : syms) {
            const Word u = apply_symmetry(w, s);
            ok = ok && is_free(u, kind) == is_free(w, kind) &&
                 is_irreducible(u, kind).holds == v[0] && is_delicate(u, kind).holds == v[1] &&
                 is_extremal(u, kind).holds == v[2];
          }
        }
      });
      if (!ok) return {false, "symmetry invariance fails at n=" + std::to_string(n)};
    }
  }
  return {true, "binary <= 14, ternary <= 10; symmetry binary <= 12, ternary <= 8"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A1", [] {
         return classification(2, RepetitionKind::Overlap, PropertyKind::irreducible(), 32,
                               range_set(12, 32, {6, 8, 9, 10}));
       }},
      {"A2", [] {
         return classification(2, RepetitionKind::Cube, PropertyKind::irreducible(), 30,
                               range_set(22, 30, {10, 14, 18, 19, 20}));
       }},
      {"A3", [] {
         return classification(3, RepetitionKind::Square, PropertyKind::irreducible(), 22,
                               range_set(13, 22, {3, 6, 8, 9, 10, 11}));
       }},
      {"A4", [] {
         return classification(3, RepetitionKind::Square, PropertyKind::delicate(), 24,
                               range_set(7, 24, {5}));
       }},
      {"A5", [] {
         return classification(2, RepetitionKind::Overlap, PropertyKind::delicate(), 32,
                               range_set(7, 32));
       }},
      {"A6", [] {
         return classification(2, RepetitionKind::Cube, PropertyKind::delicate(), 40,
                               {20, 21, 22, 29, 33, 34, 35, 38, 39, 40});
       }},
      {"A7", a7},
      {"A8", a8},
      {"A9", a9},
      {"A10", a10},
      {"A11", a11},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-4s %s  %s (%.1fs)\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
