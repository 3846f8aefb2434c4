#pragma once

// Decision procedure for simple closed curves on the once-punctured Klein
// bottle. A conjugacy class (up to inversion) is represented by a simple
// closed curve exactly when its cyclic word matches one of the families
// below; everything else is not simple. The decision is pure pattern
// matching on the cyclic word, linear in its length.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kbc/word.hpp"

namespace kbc {

// The simple-closed-curve word families, one class per (family, n, doubled,
// inverted) tuple:
//   GenA     a or a^-1
//   GenA2    a^2 or a^-2
//   GenB     b or b^-1
//   Boundary ab^-1a^-1b^-1 or its inverse class (cyclically aba^-1b)
//   Slope    ab^n (doubled=false) or ab^n ab^n (doubled=true), n != 0,
//            or the inverse class when inverted=true
struct SccClass {
  enum class Family { GenA, GenA2, GenB, Boundary, Slope };

  Family family = Family::GenA;
  int n = 0;             // Slope only; never 0 (n = 0 folds into GenA/GenA2)
  bool doubled = false;  // Slope only
  bool inverted = false;

  friend bool operator==(const SccClass&, const SccClass&) = default;
};

inline SccClass make_gen_a(bool inverted) { return {SccClass::Family::GenA, 0, false, inverted}; }
inline SccClass make_gen_a2(bool inverted) { return {SccClass::Family::GenA2, 0, false, inverted}; }
inline SccClass make_gen_b(bool inverted) { return {SccClass::Family::GenB, 0, false, inverted}; }
inline SccClass make_boundary(bool inverted) {
  return {SccClass::Family::Boundary, 0, false, inverted};
}
inline SccClass make_slope(int n, bool doubled, bool inverted) {
  if (n == 0) throw std::invalid_argument("make_slope: n must be nonzero");
  return {SccClass::Family::Slope, n, doubled, inverted};
}

// The listed representative word of a class: b^+-1, a^+-1, a^+-2,
// (ab^-1a^-1b^-1)^+-1, (ab^n)^+-1, (ab^n ab^n)^+-1.
inline Word canonical_word(const SccClass& c) {
  using L = Letter;
  Word base;
  switch (c.family) {
    case SccClass::Family::GenA: base = word_from({L::a}); break;
    case SccClass::Family::GenA2: base = word_from({L::a, L::a}); break;
    case SccClass::Family::GenB: base = word_from({L::b}); break;
    case SccClass::Family::Boundary: base = word_from({L::a, L::B, L::A, L::B}); break;
    case SccClass::Family::Slope: {
      std::vector<Letter> seq{L::a};
      Letter bl = c.n > 0 ? L::b : L::B;
      int reps = c.n > 0 ? c.n : -c.n;
      for (int i = 0; i < reps; ++i) seq.push_back(bl);
      if (c.doubled) {
        std::vector<Letter> twice = seq;
        twice.insert(twice.end(), seq.begin(), seq.end());
        seq = std::move(twice);
      }
      base = reduce(seq);
      break;
    }
  }
  return c.inverted ? invert(base) : base;
}

namespace detail {

inline const CyclicWord& boundary_cycle() {
  static const CyclicWord c = cyclic_reduce(canonical_word(make_boundary(false))).core;
  return c;
}

inline const CyclicWord& boundary_inverse_cycle() {
  static const CyclicWord c = cyclic_reduce(canonical_word(make_boundary(true))).core;
  return c;
}

// Signed size of a run of b-letters; requires all letters equal (a freely
// reduced run can only mix signs across an a-letter).
inline std::optional<int> signed_b_run(std::span<const Letter> run) {
  int total = 0;
  for (Letter l : run) {
    if (l != run.front()) return std::nullopt;
    total += sign_of(l);
  }
  return total;
}

}  // namespace detail

// Classifies the conjugacy class of w, up to inversion. Returns nullopt for
// classes not represented by a simple closed curve (including the empty
// word and proper powers other than a^+-2).
inline std::optional<SccClass> classify(const Word& w) {
  const CyclicWord cyc = cyclic_reduce(w).core;
  const std::vector<Letter>& cw = cyc.letters();
  if (cw.empty()) return std::nullopt;

  std::vector<std::size_t> a_pos;
  for (std::size_t i = 0; i < cw.size(); ++i)
    if (generator_char(cw[i]) == 'a') a_pos.push_back(i);

  if (a_pos.empty()) {
    // Pure b-word; cyclic reducedness forces one sign, so only length 1 is simple.
    if (cw.size() == 1) return make_gen_b(sign_of(cw[0]) < 0);
    return std::nullopt;
  }

  if (a_pos.size() == cw.size()) {
    // Pure a-word, one sign.
    if (cw.size() == 1) return make_gen_a(sign_of(cw[0]) < 0);
    if (cw.size() == 2) return make_gen_a2(sign_of(cw[0]) < 0);
    return std::nullopt;
  }

  if (a_pos.size() == 1) {
    // One a-letter: rotation of a^e b^m. The single cyclic b-run has one
    // sign automatically; m is its signed length.
    std::vector<Letter> run(cw.begin() + a_pos[0] + 1, cw.end());
    run.insert(run.end(), cw.begin(), cw.begin() + a_pos[0]);
    auto m = detail::signed_b_run(run);
    if (!m) return std::nullopt;
    if (sign_of(cw[a_pos[0]]) > 0) return make_slope(*m, false, false);
    return make_slope(-*m, false, true);  // a^-1 b^m is the inverse of a b^-m
  }

  if (a_pos.size() == 2) {
    Letter x = cw[a_pos[0]], y = cw[a_pos[1]];
    if (x != y) {
      // Mixed-sign a-letters: only the two boundary classes survive.
      if (cyc == detail::boundary_cycle()) return make_boundary(false);
      if (cyc == detail::boundary_inverse_cycle()) return make_boundary(true);
      return std::nullopt;
    }
    std::vector<Letter> run1(cw.begin() + a_pos[0] + 1, cw.begin() + a_pos[1]);
    std::vector<Letter> run2(cw.begin() + a_pos[1] + 1, cw.end());
    run2.insert(run2.end(), cw.begin(), cw.begin() + a_pos[0]);
    auto m1 = detail::signed_b_run(run1);
    auto m2 = detail::signed_b_run(run2);
    if (!m1 || !m2 || *m1 != *m2 || *m1 == 0) return std::nullopt;
    if (sign_of(x) > 0) return make_slope(*m1, true, false);
    return make_slope(-*m1, true, true);
  }

  return std::nullopt;
}

// --- topological type -------------------------------------------------------

struct SurfacePiece {
  std::string name;
  bool orientable = false;
  int genus = 0;
  int boundary_components = 0;
  int euler_characteristic = 0;
};

inline SurfacePiece make_piece(std::string name, bool orientable, int genus, int boundary) {
  int euler = orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
  return {std::move(name), orientable, genus, boundary, euler};
}

// Result of cutting the surface along the curve: one piece if the curve is
// non-separating, two if separating. The pieces' Euler characteristics
// always sum to -1, the characteristic of the punctured Klein bottle.
struct TopoType {
  bool separating = false;
  bool one_sided = false;
  std::vector<SurfacePiece> pieces;
};

inline TopoType topo_type(const SccClass& c) {
  switch (c.family) {
    case SccClass::Family::GenA:
      return {false, true, {make_piece("once-punctured Mobius band", false, 1, 2)}};
    case SccClass::Family::GenB:
      return {false, false, {make_piece("three-holed sphere", true, 0, 3)}};
    case SccClass::Family::GenA2:
      return {true, false,
              {make_piece("Mobius band", false, 1, 1),
               make_piece("once-punctured Mobius band", false, 1, 2)}};
    case SccClass::Family::Boundary:
      return {true, false,
              {make_piece("annulus", true, 0, 2),
               make_piece("Klein bottle with one hole", false, 2, 1)}};
    case SccClass::Family::Slope:
      if (c.doubled)
        return {true, false,
                {make_piece("Mobius band", false, 1, 1),
                 make_piece("once-punctured Mobius band", false, 1, 2)}};
      return {false, true, {make_piece("once-punctured Mobius band", false, 1, 2)}};
  }
  throw std::logic_error("topo_type: bad family");
}

// --- brute-force oracle and enumeration -------------------------------------

// Every simple-closed-curve cyclic class of length <= max_len, built
// directly from the family list (enumerate n, take inverses, canonicalize).
// Deliberately independent of classify(), so the two can cross-check.
inline std::set<CyclicWord> build_oracle_set(int max_len) {
  if (max_len < 1 || max_len > 24)
    throw std::invalid_argument("build_oracle_set: max_len must be in [1, 24]");
  std::set<CyclicWord> out;
  auto add = [&](const SccClass& c) {
    CyclicWord cyc = cyclic_reduce(canonical_word(c)).core;
    if (static_cast<int>(cyc.size()) <= max_len) out.insert(cyc);
  };
  for (bool inv : {false, true}) {
    add(make_gen_a(inv));
    add(make_gen_a2(inv));
    add(make_gen_b(inv));
    add(make_boundary(inv));
    for (int n = 1; n <= max_len; ++n)
      for (int sn : {n, -n})
        for (bool doubled : {false, true}) add(make_slope(sn, doubled, inv));
  }
  return out;
}

// One entry per cyclic class of nonempty cyclically reduced words of length
// <= max_len, each classified. Sorted by length, then letter order.
inline std::vector<std::pair<CyclicWord, std::optional<SccClass>>> enumerate_classes(
    int max_len) {
  if (max_len < 1 || max_len > 12)
    throw std::invalid_argument("enumerate_classes: max_len must be in [1, 12]");
  std::set<CyclicWord> classes;
  std::vector<Letter> stack;
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (!stack.empty() && stack.front() != inverse(stack.back()))
      classes.insert(CyclicWord::canonical(stack));
    if (remaining == 0) return;
    for (std::uint8_t code = 0; code < 4; ++code) {
      Letter l = static_cast<Letter>(code);
      if (!stack.empty() && l == inverse(stack.back())) continue;
      stack.push_back(l);
      self(self, remaining - 1);
      stack.pop_back();
    }
  };
  dfs(dfs, max_len);

  std::vector<std::pair<CyclicWord, std::optional<SccClass>>> out;
  out.reserve(classes.size());
  for (const CyclicWord& c : classes) out.emplace_back(c, classify(c.as_word()));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

inline std::string family_name(SccClass::Family f) {
  switch (f) {
    case SccClass::Family::GenA: return "gen_a";
    case SccClass::Family::GenA2: return "gen_a2";
    case SccClass::Family::GenB: return "gen_b";
    case SccClass::Family::Boundary: return "boundary";
    case SccClass::Family::Slope: return "slope";
  }
  throw std::logic_error("family_name: bad family");
}

}  // namespace kbc
