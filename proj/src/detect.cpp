#include "barely/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace barely {

std::string_view to_string(RepetitionKind kind) {
  switch (kind) {
    case RepetitionKind::Square: return "square";
    case RepetitionKind::Overlap: return "overlap";
    case RepetitionKind::Cube: return "cube";
  }
  return "?";
}

RepetitionKind parse_repetition_kind(std::string_view text) {
  if (text == "square") return RepetitionKind::Square;
  if (text == "overlap") return RepetitionKind::Overlap;
  if (text == "cube") return RepetitionKind::Cube;
  throw std::invalid_argument("unknown repetition kind '" + std::string(text) + "'");
}

bool validates(std::span<const Letter> w, const Occurrence& occ) {
  if (occ.period == 0) return false;
  const std::size_t span = occ.span();
  if (occ.start > w.size() || span > w.size() - occ.start) return false;
  for (std::size_t j = occ.start; j + occ.period < occ.start + span; ++j)
    if (w[j] != w[j + occ.period]) return false;
  return true;
}

std::optional<Occurrence> find_repetition(std::span<const Letter> w, RepetitionKind kind) {
  const std::size_t n = w.size();
  std::optional<Occurrence> best;
  for (std::size_t p = 1; repetition_span(kind, p) <= n; ++p) {
    const std::size_t need = matches_needed(kind, p);
    // A later hit for this period cannot start before the current best.
    std::size_t limit = n - p;
    if (best) limit = std::min(limit, best->start + need - 1);
    std::size_t run = 0;
    for (std::size_t j = 0; j < limit; ++j) {
      run = (w[j] == w[j + p]) ? run + 1 : 0;
      if (run == need) {
        best = Occurrence{kind, j + 1 - need, p};
        break;
      }
    }
  }
  return best;
}

namespace {

bool suffix_has_period(std::span<const Letter> w, RepetitionKind kind, std::size_t p) {
  const std::size_t n = w.size();
  const std::size_t need = matches_needed(kind, p);
  const Letter* hi = w.data() + n - 1;
  const Letter* lo = hi - p;
  for (std::size_t t = 0; t < need; ++t)
    if (hi[-static_cast<std::ptrdiff_t>(t)] != lo[-static_cast<std::ptrdiff_t>(t)]) return false;
  return true;
}

}  // namespace

std::optional<Occurrence> suffix_repetition(std::span<const Letter> w, RepetitionKind kind) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; repetition_span(kind, p) <= n; ++p)
    if (suffix_has_period(w, kind, p))
      return Occurrence{kind, n - repetition_span(kind, p), p};
  return std::nullopt;
}

bool has_suffix_repetition(std::span<const Letter> w, RepetitionKind kind) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; repetition_span(kind, p) <= n; ++p)
    if (suffix_has_period(w, kind, p)) return true;
  return false;
}

std::optional<Occurrence> find_repetition_covering(std::span<const Letter> w,
                                                   RepetitionKind kind,
                                                   std::size_t first,
                                                   std::size_t last) {
  const std::size_t n = w.size();
  if (first > last || last >= n) return std::nullopt;
  for (std::size_t p = 1; repetition_span(kind, p) <= n; ++p) {
    const std::size_t need = matches_needed(kind, p);
    const std::size_t span = need + p;
    if (span < last - first + 1) continue;
    // Admissible starts s satisfy s <= first and s + span - 1 >= last.
    const std::size_t s_lo = last + 1 >= span ? last + 1 - span : 0;
    const std::size_t s_hi = std::min(first, n - span);
    if (s_lo > s_hi) continue;
    std::size_t run = 0;
    for (std::size_t j = s_lo; j < s_hi + need; ++j) {
      run = (w[j] == w[j + p]) ? run + 1 : 0;
      if (run >= need) return Occurrence{kind, j + 1 - need, p};
    }
  }
  return std::nullopt;
}

bool has_repetition_covering(std::span<const Letter> w, RepetitionKind kind,
                             std::size_t first, std::size_t last) {
  return find_repetition_covering(w, kind, first, last).has_value();
}

bool oracle_is_free(std::span<const Letter> w, RepetitionKind kind) {
  if (w.size() > kOracleMaxLength)
    throw std::invalid_argument("oracle_is_free is limited to short words");
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + len <= n; ++len) {
      auto f = w.subspan(i, len);
      switch (kind) {
        case RepetitionKind::Square:
          if (len % 2 == 0 &&
              std::equal(f.begin(), f.begin() + len / 2, f.begin() + len / 2))
            return false;
          break;
        case RepetitionKind::Overlap: {
          // x Y x Y x with h = |xY|: f[0..h] == f[h..2h].
          if (len >= 3 && len % 2 == 1) {
            const std::size_t h = len / 2;
            if (std::equal(f.begin(), f.begin() + h + 1, f.begin() + h)) return false;
          }
          break;
        }
        case RepetitionKind::Cube:
          if (len % 3 == 0) {
            const std::size_t t = len / 3;
            if (std::equal(f.begin(), f.begin() + t, f.begin() + t) &&
                std::equal(f.begin(), f.begin() + t, f.begin() + 2 * t))
              return false;
          }
          break;
      }
    }
  }
  return true;
}

}  // namespace barely
