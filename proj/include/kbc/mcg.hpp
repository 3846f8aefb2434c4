#pragma once

// Mapping-class-group generators of the once-punctured Klein bottle acting
// on pi_1 = <a, b> by substitution: the Dehn twist about b, the crosscap
// slide, and the boundary slide. Compositions apply the rightmost
// generator first, matching function composition.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kbc/word.hpp"

namespace kbc {

enum class McgGenerator : std::uint8_t { Tb, TbInv, Y, W1 };

// An endomorphism given extensionally by the images of a and b, so that
// compositions can be logged and serialized.
struct EndoMap {
  Word image_a;
  Word image_b;
};

// Substitution tables:
//   t_b   : a -> ab,   b -> b      (Dehn twist about b)
//   t_b^-1: a -> ab^-1, b -> b
//   y     : a -> a^-1, b -> b      (crosscap slide)
//   w_1   : a -> a,    b -> b^-1   (boundary slide)
inline EndoMap generator_endo(McgGenerator g) {
  using L = Letter;
  switch (g) {
    case McgGenerator::Tb:    return {word_from({L::a, L::b}), word_from({L::b})};
    case McgGenerator::TbInv: return {word_from({L::a, L::B}), word_from({L::b})};
    case McgGenerator::Y:     return {word_from({L::A}), word_from({L::b})};
    case McgGenerator::W1:    return {word_from({L::a}), word_from({L::B})};
  }
  throw std::logic_error("generator_endo: bad generator");
}

// Applies the substitution homomorphism: each letter is replaced by the
// image of its generator (inverted for negative letters), then reduced.
inline Word apply_endo(const EndoMap& e, const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(2 * w.size() + 1);
  const Word inv_a = invert(e.image_a);
  const Word inv_b = invert(e.image_b);
  for (Letter l : w.letters()) {
    const Word* img = nullptr;
    switch (l) {
      case Letter::a: img = &e.image_a; break;
      case Letter::A: img = &inv_a; break;
      case Letter::b: img = &e.image_b; break;
      case Letter::B: img = &inv_b; break;
    }
    raw.insert(raw.end(), img->letters().begin(), img->letters().end());
  }
  return reduce(raw);
}

// A composition of generator symbols; the free monoid word, no relations.
using McgWord = std::vector<McgGenerator>;

// Rightmost generator acts first.
inline Word apply_mcg(const McgWord& phi, const Word& w) {
  Word out = w;
  for (auto it = phi.rbegin(); it != phi.rend(); ++it)
    out = apply_endo(generator_endo(*it), out);
  return out;
}

inline McgWord compose(McgWord phi, const McgWord& psi) {
  phi.insert(phi.end(), psi.begin(), psi.end());
  return phi;
}

inline McgGenerator inverse(McgGenerator g) {
  switch (g) {
    case McgGenerator::Tb: return McgGenerator::TbInv;
    case McgGenerator::TbInv: return McgGenerator::Tb;
    default: return g;  // y and w_1 are involutions
  }
}

inline McgWord invert_mcg(const McgWord& phi) {
  McgWord out;
  out.reserve(phi.size());
  for (auto it = phi.rbegin(); it != phi.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

// The induced action on exponent sums, as a 2x2 integer matrix applied to
// the column (e_a, e_b).
inline std::array<std::array<int, 2>, 2> exponent_action(McgGenerator g) {
  switch (g) {
    case McgGenerator::Tb:    return {{{1, 0}, {1, 1}}};
    case McgGenerator::TbInv: return {{{1, 0}, {-1, 1}}};
    case McgGenerator::Y:     return {{{-1, 0}, {0, 1}}};
    case McgGenerator::W1:    return {{{1, 0}, {0, -1}}};
  }
  throw std::logic_error("exponent_action: bad generator");
}

inline std::string to_token(McgGenerator g) {
  switch (g) {
    case McgGenerator::Tb: return "tb";
    case McgGenerator::TbInv: return "tb-";
    case McgGenerator::Y: return "y";
    case McgGenerator::W1: return "w1";
  }
  throw std::logic_error("to_token: bad generator");
}

// Whitespace-separated tokens from {tb, tb-, y, w1}; the leftmost token is
// outermost, i.e. applied last.
inline McgWord parse_mcg_word(std::string_view text) {
  McgWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' &&
           text[j] != '\r')
      ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok == "tb")
      out.push_back(McgGenerator::Tb);
    else if (tok == "tb-")
      out.push_back(McgGenerator::TbInv);
    else if (tok == "y")
      out.push_back(McgGenerator::Y);
    else if (tok == "w1")
      out.push_back(McgGenerator::W1);
    else
      throw ParseError("unknown mapping class token '" + std::string(tok) + "'", i);
    i = j;
  }
  return out;
}

inline std::string to_string(const McgWord& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) out += ' ';
    out += to_token(phi[i]);
  }
  return out;
}

}  // namespace kbc
