#include "barely/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace barely {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(domain_.size()))
    throw std::invalid_argument("morphism needs one image per domain letter");
  for (const Word& im : images_) {
    if (im.empty()) throw std::invalid_argument("morphism images must be nonempty");
    if (im.alphabet() != codomain_)
      throw std::invalid_argument("morphism image outside codomain");
  }
}

Morphism Morphism::from_strings(Alphabet domain, Alphabet codomain,
                                const std::vector<std::string>& images) {
  std::vector<Word> words;
  for (const auto& s : images) words.push_back(Word::parse(s, codomain));
  return Morphism(domain, codomain, std::move(words));
}

Morphism Morphism::identity(Alphabet alphabet) {
  std::vector<Word> images;
  for (Letter a = 0; a < alphabet.size(); ++a) images.emplace_back(std::vector<Letter>{a}, alphabet);
  return Morphism(alphabet, alphabet, std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (!domain_.contains(a)) throw std::invalid_argument("letter outside morphism domain");
  return images_[a];
}

Word Morphism::apply(const Word& w) const {
  if (w.alphabet() != domain_ && w.alphabet().size() > domain_.size())
    throw std::invalid_argument("word alphabet does not match morphism domain");
  std::vector<Letter> out;
  for (Letter a : w) {
    const Word& im = image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return Word(std::move(out), codomain_);
}

std::string_view to_string(BuiltinMorphismId id) {
  switch (id) {
    case BuiltinMorphismId::Mu: return "mu";
    case BuiltinMorphismId::Tau: return "tau";
    case BuiltinMorphismId::Phi1IrrCube: return "phi1_irrcube";
    case BuiltinMorphismId::Phi2IrrCube: return "phi2_irrcube";
    case BuiltinMorphismId::PhiDelSquare: return "phi_delsq";
    case BuiltinMorphismId::PhiDelCube: return "phi_delcube";
  }
  return "?";
}

BuiltinMorphismId parse_builtin_morphism(std::string_view name) {
  for (auto id : {BuiltinMorphismId::Mu, BuiltinMorphismId::Tau, BuiltinMorphismId::Phi1IrrCube,
                  BuiltinMorphismId::Phi2IrrCube, BuiltinMorphismId::PhiDelSquare,
                  BuiltinMorphismId::PhiDelCube})
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown builtin morphism '" + std::string(name) + "'");
}

const Morphism& builtin(BuiltinMorphismId id) {
  const auto bin = Alphabet::binary();
  const auto ter = Alphabet::ternary();
  // Thue-Morse.
  static const Morphism mu = Morphism::from_strings(bin, bin, {"01", "10"});
  // Ternary Thue-Morse; non-uniform image lengths 3, 2, 1.
  static const Morphism tau = Morphism::from_strings(ter, ter, {"012", "02", "1"});
  // Irreducible cubefree constructions; phi2 images are the reversals of phi1's.
  static const Morphism phi1 = Morphism::from_strings(
      bin, bin, {"01100100101101001011010010", "0110101100110101100101001100101001"});
  static const Morphism phi2 = Morphism::from_strings(
      bin, bin, {"01001011010010110100100110", "1001010011001010011010110011010110"});
  // Delicate squarefree construction; each image is itself delicate.
  static const Morphism phi_delsq =
      Morphism::from_strings(ter, ter, {"01202120102", "01210201021", "01210212021"});
  // Delicate cubefree construction.
  static const Morphism phi_delcube = Morphism::from_strings(
      bin, bin, {"0110101100101100101001", "1001010011010011010110"});
  switch (id) {
    case BuiltinMorphismId::Mu: return mu;
    case BuiltinMorphismId::Tau: return tau;
    case BuiltinMorphismId::Phi1IrrCube: return phi1;
    case BuiltinMorphismId::Phi2IrrCube: return phi2;
    case BuiltinMorphismId::PhiDelSquare: return phi_delsq;
    case BuiltinMorphismId::PhiDelCube: return phi_delcube;
  }
  throw std::invalid_argument("unknown builtin morphism");
}

namespace {

PreservationResult test_images(const Morphism& m, RepetitionKind kind, std::size_t length) {
  PreservationResult res;
  std::vector<Letter> buf;
  const int sigma = m.domain().size();
  std::function<bool()> dfs = [&]() -> bool {
    if (buf.size() == length) {
      ++res.words_tested;
      const Word src(buf, m.domain());
      const Word img = m.apply(src);
      if (auto occ = find_repetition(img, kind)) {
        res.preserves = false;
        res.counterexample = src;
        res.occurrence = occ;
        return false;
      }
      return true;
    }
    for (Letter a = 0; a < sigma; ++a) {
      buf.push_back(a);
      const bool go = has_suffix_repetition(buf, kind) || dfs();
      buf.pop_back();
      if (!go) return false;
    }
    return true;
  };
  dfs();
  return res;
}

}  // namespace

PreservationResult preserves_squarefree(const Morphism& m) {
  if (m.domain() != Alphabet::ternary())
    throw std::invalid_argument("squarefree preservation test needs a ternary morphism");
  return test_images(m, RepetitionKind::Square, 5);
}

PreservationResult preserves_cubefree(const Morphism& m) {
  if (m.domain() != Alphabet::binary())
    throw std::invalid_argument("cubefree preservation test needs a binary morphism");
  return test_images(m, RepetitionKind::Cube, 7);
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Morphism parse_morphism(std::string_view text) {
  std::vector<std::optional<std::string>> images;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int max_letter = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string compact = strip(line);
    if (compact.empty()) continue;
    const auto arrow = compact.find("->");
    const std::string where = "morphism line " + std::to_string(lineno) + ": ";
    if (arrow == std::string::npos) throw std::invalid_argument(where + "expected '<letter> -> <image>'");
    const std::string lhs = compact.substr(0, arrow);
    const std::string rhs = compact.substr(arrow + 2);
    if (lhs.size() != 1 || !std::isdigit(static_cast<unsigned char>(lhs[0])))
      throw std::invalid_argument(where + "left side must be a single digit");
    if (rhs.empty()) throw std::invalid_argument(where + "image must be nonempty");
    for (char c : rhs) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument(where + "image must be digits");
      max_letter = std::max(max_letter, c - '0');
    }
    const std::size_t a = static_cast<std::size_t>(lhs[0] - '0');
    if (images.size() <= a) images.resize(a + 1);
    if (images[a]) throw std::invalid_argument(where + "duplicate letter " + lhs);
    images[a] = rhs;
  }
  if (images.empty()) throw std::invalid_argument("morphism file defines no letters");
  std::vector<std::string> plain;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (!images[a]) throw std::invalid_argument("morphism has no image for letter " + std::to_string(a));
    plain.push_back(*images[a]);
  }
  const Alphabet domain(static_cast<int>(plain.size()));
  const Alphabet codomain(std::max(domain.size(), max_letter + 1));
  return Morphism::from_strings(domain, codomain, plain);
}

Morphism load_morphism(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open morphism file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_morphism(ss.str());
}

std::string format_morphism(const Morphism& m) {
  std::string out;
  for (Letter a = 0; a < m.domain().size(); ++a)
    out += std::to_string(int(a)) + " -> " + m.image(a).str() + "\n";
  return out;
}

}  // namespace barely
