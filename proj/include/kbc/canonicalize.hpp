#pragma once

// Constructive reduction of any simple-closed-curve word to one of the four
// base curves a, b, a^2, ab^-1a^-1b^-1 by an explicit generator sequence.
// The output is an exact group identity, not merely a conjugacy statement:
//   apply_mcg(mcg, w) == conjugator * target^(+-1) * conjugator^-1
// so every result can be replayed and checked.

#include <optional>
#include <stdexcept>
#include <vector>

#include "kbc/classify.hpp"
#include "kbc/mcg.hpp"
#include "kbc/word.hpp"

namespace kbc {

enum class CanonicalTarget : std::uint8_t { A, B, A2, Boundary };

inline Word target_word(CanonicalTarget t) {
  using L = Letter;
  switch (t) {
    case CanonicalTarget::A: return word_from({L::a});
    case CanonicalTarget::B: return word_from({L::b});
    case CanonicalTarget::A2: return word_from({L::a, L::a});
    case CanonicalTarget::Boundary: return word_from({L::a, L::B, L::A, L::B});
  }
  throw std::logic_error("target_word: bad target");
}

// The four base curves, one per mapping-class-group orbit.
inline std::vector<Word> base_curves() {
  return {target_word(CanonicalTarget::A), target_word(CanonicalTarget::B),
          target_word(CanonicalTarget::A2), target_word(CanonicalTarget::Boundary)};
}

struct CanonicalizationResult {
  McgWord mcg;
  CanonicalTarget target = CanonicalTarget::A;
  bool target_inverted = false;
  Word conjugator;
};

namespace detail {

// Matches `core` (a canonical cyclic word) against rotations of `candidate`;
// on success appends the rotation offset to `conj` so that the conjugation
// identity holds exactly: candidate = x.y, core = y.x  =>  core = x^-1 candidate x.
inline std::optional<Word> align_rotation(const Word& candidate, const CyclicWord& core,
                                          const Word& conj) {
  const std::vector<Letter>& cand = candidate.letters();
  if (cand.size() != core.size()) return std::nullopt;
  for (std::size_t r = 0; r < std::max<std::size_t>(cand.size(), 1); ++r) {
    std::vector<Letter> rot(cand.begin() + r, cand.end());
    rot.insert(rot.end(), cand.begin(), cand.begin() + r);
    if (rot == core.letters()) {
      Word prefix = reduce(std::vector<Letter>(cand.begin(), cand.begin() + r));
      return concat(conj, invert(prefix));
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Produces the generator sequence for the class of w:
//   GenB/Boundary : w_1 when the class is the inverted one, else nothing
//   GenA/GenA2    : y when inverted, else nothing
//   Slope         : |n| twists (t_b^-1 for n > 0, t_b for n < 0), then y
//                   when the cyclic word's a-letters are negative
// Sequence length is at most |n| + 1. Returns nullopt for non-members.
inline std::optional<CanonicalizationResult> canonicalize(const Word& w) {
  std::optional<SccClass> cls = classify(w);
  if (!cls) return std::nullopt;

  McgWord mcg;
  CanonicalTarget target = CanonicalTarget::A;
  switch (cls->family) {
    case SccClass::Family::GenA:
      target = CanonicalTarget::A;
      if (cls->inverted) mcg.push_back(McgGenerator::Y);
      break;
    case SccClass::Family::GenA2:
      target = CanonicalTarget::A2;
      if (cls->inverted) mcg.push_back(McgGenerator::Y);
      break;
    case SccClass::Family::GenB:
      target = CanonicalTarget::B;
      if (cls->inverted) mcg.push_back(McgGenerator::W1);
      break;
    case SccClass::Family::Boundary:
      target = CanonicalTarget::Boundary;
      if (cls->inverted) mcg.push_back(McgGenerator::W1);
      break;
    case SccClass::Family::Slope: {
      target = cls->doubled ? CanonicalTarget::A2 : CanonicalTarget::A;
      if (cls->inverted) mcg.push_back(McgGenerator::Y);  // outermost, applied last
      McgGenerator twist = cls->n > 0 ? McgGenerator::TbInv : McgGenerator::Tb;
      int reps = cls->n > 0 ? cls->n : -cls->n;
      for (int i = 0; i < reps; ++i) mcg.push_back(twist);
      break;
    }
  }

  Word image = apply_mcg(mcg, w);
  CyclicReduction red = cyclic_reduce(image);
  Word t = target_word(target);
  if (auto conj = detail::align_rotation(t, red.core, red.conjugator))
    return CanonicalizationResult{mcg, target, false, *conj};
  if (auto conj = detail::align_rotation(invert(t), red.core, red.conjugator))
    return CanonicalizationResult{mcg, target, true, *conj};
  throw std::logic_error("canonicalize: image did not reach its target orbit");
}

// Replays the result and checks the exact identity
// apply_mcg(mcg, w) == conjugator * target^(+-1) * conjugator^-1.
inline bool verify_canonicalization(const Word& w, const CanonicalizationResult& r) {
  Word t = target_word(r.target);
  if (r.target_inverted) t = invert(t);
  return apply_mcg(r.mcg, w) == conjugate(r.conjugator, t);
}

}  // namespace kbc
