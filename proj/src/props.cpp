#include "barely/props.hpp"

#include <stdexcept>

namespace barely {

PropertyKind PropertyKind::k_delicate(int k) {
  if (k < 1) throw std::invalid_argument("k-delicacy needs k >= 1");
  return {Tag::KDelicate, k};
}

std::string to_string(PropertyKind property) {
  switch (property.tag) {
    case PropertyKind::Tag::Extremal: return "extremal";
    case PropertyKind::Tag::Irreducible: return "irreducible";
    case PropertyKind::Tag::Delicate: return "delicate";
    case PropertyKind::Tag::KDelicate: return "k-delicate:" + std::to_string(property.k);
  }
  return "?";
}

PropertyKind parse_property_kind(std::string_view text) {
  if (text == "extremal") return PropertyKind::extremal();
  if (text == "irreducible") return PropertyKind::irreducible();
  if (text == "delicate") return PropertyKind::delicate();
  constexpr std::string_view prefix = "k-delicate:";
  if (text.starts_with(prefix)) {
    const std::string digits(text.substr(prefix.size()));
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && !digits.empty()) return PropertyKind::k_delicate(k);
  }
  throw std::invalid_argument("unknown property '" + std::string(text) + "'");
}

Word apply_mutation(const Word& w, const Mutation& m) {
  return std::visit(
      [&](const auto& e) -> Word {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Deletion>) {
          return delete_at(w, e.position);
        } else if constexpr (std::is_same_v<T, Insertion>) {
          return insert_at(w, e.position, e.letter);
        } else {
          std::vector<Letter> out(w.vec());
          for (auto [i, a] : e.changes) {
            if (i >= out.size()) throw std::out_of_range("replacement position out of range");
            out[i] = a;
          }
          return Word(std::move(out), w.alphabet());
        }
      },
      m);
}

std::string describe(const Mutation& m) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Deletion>) {
          return "delete(" + std::to_string(e.position) + ")";
        } else if constexpr (std::is_same_v<T, Insertion>) {
          return "insert(" + std::to_string(e.position) + "," + std::to_string(int(e.letter)) + ")";
        } else {
          std::string s = "replace(";
          for (std::size_t j = 0; j < e.changes.size(); ++j) {
            if (j) s += ";";
            s += std::to_string(e.changes[j].first) + "," + std::to_string(int(e.changes[j].second));
          }
          return s + ")";
        }
      },
      m);
}

bool validates(const Word& subject, const MutationWitness& witness) {
  try {
    const Word mutated = apply_mutation(subject, witness.mutation);
    return validates(mutated, witness.created);
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

std::vector<Letter>& scratch() {
  thread_local std::vector<Letter> buf;
  return buf;
}

// Each visitor calls f(mutated, first, last, mutation_factory) per edit, in
// position-major, letter-minor order, and stops as soon as f returns false.
// [first, last] are positions of the mutated word that any repetition created
// by the edit must cover.

template <class F>
void for_each_deletion(std::span<const Letter> w, F&& f) {
  const std::size_t n = w.size();
  if (n < 3) return;
  auto& buf = scratch();
  buf.assign(w.begin() + 1, w.end());
  // buf holds w without letter i; slide from i = 1 upwards.
  buf[0] = w[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    // Invariant: buf = w[0..i) + w[i+1..n).
    if (!f(std::span<const Letter>(buf), i - 1, i, [i] { return Mutation{Deletion{i}}; }))
      return;
    buf[i] = w[i];
  }
}

template <class F>
void for_each_replacement(std::span<const Letter> w, Alphabet alphabet, F&& f) {
  auto& buf = scratch();
  buf.assign(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter orig = buf[i];
    for (Letter a = 0; a < alphabet.size(); ++a) {
      if (a == orig) continue;
      buf[i] = a;
      const bool go = f(std::span<const Letter>(buf), i, i,
                        [i, a] { return Mutation{Replacement{{{i, a}}}}; });
      buf[i] = orig;
      if (!go) return;
    }
  }
}

template <class F>
void for_each_insertion(std::span<const Letter> w, Alphabet alphabet, F&& f,
                        bool edges_only = false) {
  const std::size_t n = w.size();
  auto& buf = scratch();
  buf.resize(n + 1);
  // buf = w[0..i) + a + w[i..n); start with i = 0.
  std::copy(w.begin(), w.end(), buf.begin() + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) buf[i - 1] = w[i - 1];
    if (edges_only && i > 4 && n - i > 4) continue;
    for (Letter a = 0; a < alphabet.size(); ++a) {
      buf[i] = a;
      if (!f(std::span<const Letter>(buf), i, i, [i, a] { return Mutation{Insertion{i, a}}; }))
        return;
    }
  }
}

// Mutated positions → assignments of different letters, for every nonempty
// position set of size <= k, in increasing size then lexicographic order.
template <class F>
void for_each_multi_replacement(std::span<const Letter> w, Alphabet alphabet, int k, F&& f) {
  const std::size_t n = w.size();
  if (alphabet.size() < 2) return;
  std::vector<Letter> buf(w.begin(), w.end());
  const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> pos(size);
    for (std::size_t j = 0; j < size; ++j) pos[j] = j;
    while (true) {
      // Odometer over the (|alphabet| - 1)^size alternative letters.
      std::vector<Letter> choice(size, 0);
      bool more = true;
      while (more) {
        Replacement r;
        for (std::size_t j = 0; j < size; ++j) {
          Letter a = choice[j] < w[pos[j]] ? choice[j] : Letter(choice[j] + 1);
          buf[pos[j]] = a;
          r.changes.emplace_back(pos[j], a);
        }
        const bool go = f(std::span<const Letter>(buf), r);
        for (std::size_t j = 0; j < size; ++j) buf[pos[j]] = w[pos[j]];
        if (!go) return;
        std::size_t j = size;
        more = false;
        while (j-- > 0) {
          if (++choice[j] < alphabet.size() - 1) {
            more = true;
            break;
          }
          choice[j] = 0;
        }
      }
      // Next combination of positions.
      std::size_t j = size;
      bool advanced = false;
      while (j-- > 0) {
        if (pos[j] < n - size + j) {
          ++pos[j];
          for (std::size_t t = j + 1; t < size; ++t) pos[t] = pos[t - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

template <class Visitor>
bool all_edits_repeat(RepetitionKind kind, Visitor&& visit) {
  bool ok = true;
  visit([&](std::span<const Letter> m, std::size_t first, std::size_t last, auto&&) {
    if (!has_repetition_covering(m, kind, first, last)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

template <class Visitor>
void fill_report(PropertyReport& rep, const ReportOptions& opts, Visitor&& visit) {
  rep.holds = true;
  visit([&](std::span<const Letter> m, std::size_t first, std::size_t last, auto&& make) {
    auto occ = find_repetition_covering(m, rep.kind, first, last);
    if (!occ) {
      rep.holds = false;
      rep.counterexample = make();
      rep.reason = "edit " + describe(*rep.counterexample) + " stays free";
      rep.witnesses.clear();
      return false;
    }
    if (opts.witnesses) rep.witnesses.push_back({make(), *occ});
    return true;
  });
}

PropertyReport start_report(const Word& w, RepetitionKind kind, PropertyKind property,
                            std::size_t min_length) {
  PropertyReport rep{w, kind, property, false, {}, std::nullopt, {}};
  if (w.size() < min_length) {
    rep.reason = "shorter than " + std::to_string(min_length);
  } else if (!is_free(w, kind)) {
    rep.reason = "subject is not " + std::string(to_string(kind)) + "-free";
  } else {
    rep.holds = true;
  }
  return rep;
}

}  // namespace

bool holds_irreducible(std::span<const Letter> w, RepetitionKind kind) {
  if (w.size() < 3) return false;
  return all_edits_repeat(kind, [&](auto&& f) { for_each_deletion(w, f); });
}

bool holds_delicate(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind) {
  if (w.empty()) return false;
  return all_edits_repeat(kind, [&](auto&& f) { for_each_replacement(w, alphabet, f); });
}

bool holds_extremal(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind) {
  return all_edits_repeat(kind, [&](auto&& f) { for_each_insertion(w, alphabet, f); });
}

bool holds_k_delicate(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind, int k) {
  if (k < 1) throw std::invalid_argument("k-delicacy needs k >= 1");
  // Single changes are the cheap local check and settle most words.
  if (!holds_delicate(w, alphabet, kind)) return false;
  if (k == 1) return true;
  bool ok = true;
  for_each_multi_replacement(w, alphabet, k, [&](std::span<const Letter> m, const Replacement& r) {
    if (r.changes.size() == 1) return true;
    if (is_free(m, kind)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool holds_property(std::span<const Letter> w, Alphabet alphabet, RepetitionKind kind,
                    PropertyKind property) {
  switch (property.tag) {
    case PropertyKind::Tag::Extremal: return holds_extremal(w, alphabet, kind);
    case PropertyKind::Tag::Irreducible: return holds_irreducible(w, kind);
    case PropertyKind::Tag::Delicate: return holds_delicate(w, alphabet, kind);
    case PropertyKind::Tag::KDelicate: return holds_k_delicate(w, alphabet, kind, property.k);
  }
  return false;
}

PropertyReport is_irreducible(const Word& w, RepetitionKind kind, ReportOptions opts) {
  auto rep = start_report(w, kind, PropertyKind::irreducible(), 3);
  if (rep.holds) fill_report(rep, opts, [&](auto&& f) { for_each_deletion(w.letters(), f); });
  return rep;
}

PropertyReport is_delicate(const Word& w, RepetitionKind kind, ReportOptions opts) {
  auto rep = start_report(w, kind, PropertyKind::delicate(), 1);
  if (rep.holds)
    fill_report(rep, opts, [&](auto&& f) { for_each_replacement(w.letters(), w.alphabet(), f); });
  return rep;
}

PropertyReport is_extremal(const Word& w, RepetitionKind kind, ReportOptions opts) {
  auto rep = start_report(w, kind, PropertyKind::extremal(), 0);
  if (rep.holds)
    fill_report(rep, opts, [&](auto&& f) { for_each_insertion(w.letters(), w.alphabet(), f); });
  return rep;
}

PropertyReport is_extremal_fast(const Word& w, ReportOptions opts) {
  if (w.alphabet() != Alphabet::binary())
    throw std::invalid_argument("is_extremal_fast needs a binary word");
  if (!is_free(w, RepetitionKind::Overlap))
    throw std::invalid_argument("is_extremal_fast needs an overlap-free word");
  auto rep = start_report(w, RepetitionKind::Overlap, PropertyKind::extremal(), 0);
  fill_report(rep, opts,
              [&](auto&& f) { for_each_insertion(w.letters(), w.alphabet(), f, true); });
  return rep;
}

PropertyReport is_k_delicate(const Word& w, RepetitionKind kind, int k, ReportOptions opts) {
  auto rep = start_report(w, kind, PropertyKind::k_delicate(k), 1);
  if (!rep.holds) return rep;
  for_each_multi_replacement(w.letters(), w.alphabet(), k,
                             [&](std::span<const Letter> m, const Replacement& r) {
                               auto occ = find_repetition(m, kind);
                               if (!occ) {
                                 rep.holds = false;
                                 rep.counterexample = Mutation{r};
                                 rep.reason = "edit " + describe(*rep.counterexample) +
                                              " stays free";
                                 rep.witnesses.clear();
                                 return false;
                               }
                               if (opts.witnesses) rep.witnesses.push_back({Mutation{r}, *occ});
                               return true;
                             });
  return rep;
}

PropertyReport check_property(const Word& w, RepetitionKind kind, PropertyKind property,
                              ReportOptions opts) {
  switch (property.tag) {
    case PropertyKind::Tag::Extremal: return is_extremal(w, kind, opts);
    case PropertyKind::Tag::Irreducible: return is_irreducible(w, kind, opts);
    case PropertyKind::Tag::Delicate: return is_delicate(w, kind, opts);
    case PropertyKind::Tag::KDelicate: return is_k_delicate(w, kind, property.k, opts);
  }
  return {};
}

}  // namespace barely
