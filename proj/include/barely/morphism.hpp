#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barely/detect.hpp"
#include "barely/word.hpp"

namespace barely {

// Letter-to-word map extended to words by concatenation. Images are nonempty.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);
  // Images given in the digit encoding, one per domain letter.
  static Morphism from_strings(Alphabet domain, Alphabet codomain,
                               const std::vector<std::string>& images);
  static Morphism identity(Alphabet alphabet);

  Alphabet domain() const { return domain_; }
  Alphabet codomain() const { return codomain_; }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

inline Word apply(const Morphism& m, const Word& w) { return m.apply(w); }

enum class BuiltinMorphismId { Mu, Tau, Phi1IrrCube, Phi2IrrCube, PhiDelSquare, PhiDelCube };

// Names: mu, tau, phi1_irrcube, phi2_irrcube, phi_delsq, phi_delcube.
std::string_view to_string(BuiltinMorphismId id);
BuiltinMorphismId parse_builtin_morphism(std::string_view name);
const Morphism& builtin(BuiltinMorphismId id);

struct PreservationResult {
  bool preserves = true;
  std::size_t words_tested = 0;
  std::optional<Word> counterexample;  // a free source word
  std::optional<Occurrence> occurrence;  // repetition in its image
};

// Squarefreeness is preserved by a ternary morphism iff the images of all
// squarefree ternary words of length 5 are squarefree. Throws
// std::invalid_argument for a non-ternary domain.
PreservationResult preserves_squarefree(const Morphism& m);
// Cubefreeness is preserved by a binary morphism iff the images of all
// cubefree binary words of length 7 are cubefree. Throws
// std::invalid_argument for a non-binary domain.
PreservationResult preserves_cubefree(const Morphism& m);

// Text format: one "<digit> -> <image>" line per domain letter. Blank lines
// and '#' comments are ignored; whitespace is free-form. The domain is
// {0..k-1} for k lines; the codomain is the smallest alphabet holding the
// domain and every image letter. Throws std::invalid_argument.
Morphism parse_morphism(std::string_view text);
Morphism load_morphism(const std::string& path);
std::string format_morphism(const Morphism& m);

}  // namespace barely
