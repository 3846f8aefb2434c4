#pragma once

// The upper-triangular PGL(2) representation rho of the punctured Klein
// bottle group, computed exactly: symbolically over Z[alpha^-+1, beta^-+1]
// and numerically over exact rationals. Kernel membership is an exact
// predicate, so no floating point appears anywhere. Also provides the
// alternating-group homomorphism a -> (123), b -> (345) used to certify
// that kernel elements are nontrivial in the free group.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kbc/classify.hpp"
#include "kbc/laurent.hpp"
#include "kbc/word.hpp"

namespace kbc {

// Upper-triangular 2x2 matrix (d1 u; 0 d2) over the Laurent ring. For
// images of words the diagonal entries are unit monomials with d1*d2 = 1.
struct UTMatrix {
  Laurent d1;
  Laurent u;
  Laurent d2;

  static UTMatrix identity() {
    return {Laurent::constant(1), Laurent(), Laurent::constant(1)};
  }

  friend bool operator==(const UTMatrix&, const UTMatrix&) = default;
};

inline UTMatrix mat_mul(const UTMatrix& m, const UTMatrix& n) {
  return {m.d1 * n.d1, m.d1 * n.u + m.u * n.d2, m.d2 * n.d2};
}

// rho(a) = (alpha 0; 0 alpha^-1), rho(b) = (beta 1; 0 beta^-1), and the
// forced inverses for negative letters.
inline UTMatrix rho_letter(Letter l) {
  switch (l) {
    case Letter::a:
      return {Laurent::monomial(1, 0), Laurent(), Laurent::monomial(-1, 0)};
    case Letter::A:
      return {Laurent::monomial(-1, 0), Laurent(), Laurent::monomial(1, 0)};
    case Letter::b:
      return {Laurent::monomial(0, 1), Laurent::constant(1), Laurent::monomial(0, -1)};
    case Letter::B:
      return {Laurent::monomial(0, -1), Laurent::constant(-1), Laurent::monomial(0, 1)};
  }
  throw std::logic_error("rho_letter: bad letter");
}

inline UTMatrix rho(const Word& w) {
  UTMatrix m = UTMatrix::identity();
  for (Letter l : w.letters()) m = mat_mul(m, rho_letter(l));
  return m;
}

// Nonzero rational parameter values for alpha and beta.
struct Params {
  mpq_class alpha;
  mpq_class beta;

  Params(mpq_class a, mpq_class b) : alpha(std::move(a)), beta(std::move(b)) {
    alpha.canonicalize();
    beta.canonicalize();
    if (alpha == 0 || beta == 0)
      throw std::invalid_argument("Params: alpha and beta must be nonzero");
  }
};

struct RationalUTMatrix {
  mpq_class d1;
  mpq_class u;
  mpq_class d2;
  friend bool operator==(const RationalUTMatrix&, const RationalUTMatrix&) = default;
};

inline mpq_class rational_pow(const mpq_class& base, long exp) {
  mpq_class b = base;
  long e = exp;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  mpq_class acc = 1;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline mpq_class evaluate(const Laurent& p, const Params& params) {
  mpq_class acc = 0;
  for (const auto& [exps, coeff] : p.terms())
    acc += mpq_class(coeff) * rational_pow(params.alpha, exps.first) *
           rational_pow(params.beta, exps.second);
  return acc;
}

// Exact substitution; commutes with mat_mul.
inline RationalUTMatrix specialize(const UTMatrix& m, const Params& params) {
  return {evaluate(m.d1, params), evaluate(m.u, params), evaluate(m.d2, params)};
}

// Projective equality with the identity. All images here have determinant 1,
// so the only scalar matrices in range are +-I.
inline bool is_projective_identity(const UTMatrix& m) {
  return m.u.is_zero() && ((m.d1.is_constant(1) && m.d2.is_constant(1)) ||
                           (m.d1.is_constant(-1) && m.d2.is_constant(-1)));
}

inline bool is_projective_identity(const RationalUTMatrix& m) {
  return m.u == 0 && ((m.d1 == 1 && m.d2 == 1) || (m.d1 == -1 && m.d2 == -1));
}

// The double commutator [[a,b],[a,b^2]]: nontrivial in the free group but
// in the kernel of rho, since commutators land in the unitriangular
// subgroup and unitriangular matrices commute.
inline Word kernel_witness() {
  auto commutator = [](const Word& u, const Word& v) {
    return concat(concat(u, v), concat(invert(u), invert(v)));
  };
  using L = Letter;
  Word a = word_from({L::a});
  Word b = word_from({L::b});
  Word b2 = word_from({L::b, L::b});
  return commutator(commutator(a, b), commutator(a, b2));
}

// --- alternating-group certificate -------------------------------------------

// A permutation of {1..5}, stored 0-indexed: images[i] is the image of i.
struct Permutation5 {
  std::array<std::uint8_t, 5> images{0, 1, 2, 3, 4};

  static Permutation5 identity() { return {}; }

  // Cycle constructor, e.g. from_cycle({1,2,3}) is (123).
  static Permutation5 from_cycle(std::initializer_list<int> cycle) {
    Permutation5 p;
    auto it = cycle.begin();
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      p.images[*(it + i) - 1] = static_cast<std::uint8_t>(*(it + i + 1) - 1);
    if (cycle.size() >= 2) p.images[*(it + cycle.size() - 1) - 1] =
        static_cast<std::uint8_t>(*it - 1);
    return p;
  }

  bool is_identity() const { return *this == identity(); }

  Permutation5 inverse() const {
    Permutation5 r;
    for (std::uint8_t i = 0; i < 5; ++i) r.images[images[i]] = i;
    return r;
  }

  bool is_even() const {
    // Parity by counting transpositions across cycles.
    std::array<bool, 5> seen{};
    int transpositions = 0;
    for (int i = 0; i < 5; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = images[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  // Cycle notation on {1..5}; "e" for the identity.
  std::string str() const {
    std::array<bool, 5> seen{};
    std::string out;
    for (int i = 0; i < 5; ++i) {
      if (seen[i] || images[i] == i) {
        seen[i] = true;
        continue;
      }
      out += '(';
      for (int j = i; !seen[j]; j = images[j]) {
        seen[j] = true;
        out += static_cast<char>('1' + j);
      }
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

  friend bool operator==(const Permutation5&, const Permutation5&) = default;
};

// (p * q)(x) = p(q(x)): rightmost factor acts first, matching the
// mapping-class composition convention.
inline Permutation5 operator*(const Permutation5& p, const Permutation5& q) {
  Permutation5 r;
  for (std::uint8_t i = 0; i < 5; ++i) r.images[i] = p.images[q.images[i]];
  return r;
}

// The homomorphism onto A5 with a -> (123), b -> (345).
inline Permutation5 a5_image(const Word& w) {
  static const Permutation5 pa = Permutation5::from_cycle({1, 2, 3});
  static const Permutation5 pb = Permutation5::from_cycle({3, 4, 5});
  static const Permutation5 pa_inv = pa.inverse();
  static const Permutation5 pb_inv = pb.inverse();
  Permutation5 acc = Permutation5::identity();
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::a: acc = acc * pa; break;
      case Letter::A: acc = acc * pa_inv; break;
      case Letter::b: acc = acc * pb; break;
      case Letter::B: acc = acc * pb_inv; break;
    }
  }
  return acc;
}

// --- parameter hypothesis and representation checks --------------------------

struct ParamsCheck {
  bool ok = false;       // alpha^k beta^l != +-1 for all (k, l) != (0, 0) ...
  bool bounded = false;  // ... proved only for |k|, |l| <= bound when set
};

// Coprime integers of magnitude >= 2 are accepted outright (a nontrivial
// monomial in them can never be +-1, by unique factorization). Anything
// else is searched exhaustively up to the bound; a found violation is
// conclusive, a clean search is only a bounded verdict.
inline ParamsCheck check_params_detail(const Params& p, int bound) {
  if (bound < 1) throw std::invalid_argument("check_params_detail: bound must be >= 1");
  const mpq_class &a = p.alpha, &b = p.beta;
  if (a.get_den() == 1 && b.get_den() == 1) {
    mpz_class na = abs(a.get_num()), nb = abs(b.get_num());
    if (na >= 2 && nb >= 2 && gcd(na, nb) == 1) return {true, false};
  }
  for (int k = -bound; k <= bound; ++k) {
    mpq_class ak = rational_pow(a, k);
    for (int l = -bound; l <= bound; ++l) {
      if (k == 0 && l == 0) continue;
      mpq_class v = ak * rational_pow(b, l);
      if (v == 1 || v == -1) return {false, false};
    }
  }
  return {true, true};
}

inline bool check_params(const Params& p, int bound) {
  return check_params_detail(p, bound).ok;
}

struct RepVerification {
  long long classes_checked = 0;
  long long checks = 0;
  bool params_bounded = false;
  std::vector<std::string> violations;
};

namespace detail {

inline std::vector<SccClass> all_classes_up_to(int max_n) {
  std::vector<SccClass> out;
  for (bool inv : {false, true}) {
    out.push_back(make_gen_a(inv));
    out.push_back(make_gen_a2(inv));
    out.push_back(make_gen_b(inv));
    out.push_back(make_boundary(inv));
  }
  for (int n = 1; n <= max_n; ++n)
    for (int sn : {n, -n})
      for (bool doubled : {false, true})
        for (bool inv : {false, true}) out.push_back(make_slope(sn, doubled, inv));
  return out;
}

}  // namespace detail

// For every simple-closed-curve class with |n| <= max_n: checks that d1 of
// the symbolic image is a unit monomial with exponent pair != (0,0), and
// that no power up to max_power specializes to +-I at the given parameters.
// Requires parameters passing check_params.
inline RepVerification verify_representation(int max_n, int max_power, const Params& p) {
  if (max_n < 1 || max_power < 1)
    throw std::invalid_argument("verify_representation: max_n and max_power must be >= 1");
  ParamsCheck pc = check_params_detail(p, 64);
  if (!pc.ok)
    throw std::invalid_argument(
        "verify_representation: parameters fail the monomial hypothesis");

  RepVerification report;
  report.params_bounded = pc.bounded;
  for (const SccClass& c : detail::all_classes_up_to(max_n)) {
    ++report.classes_checked;
    Word w = canonical_word(c);
    UTMatrix sym = rho(w);

    ++report.checks;
    auto mono = sym.d1.as_unit_monomial();
    if (!mono || (mono->first.first == 0 && mono->first.second == 0)) {
      report.violations.push_back("symbolic d1 degenerate for " + to_string(w));
    } else {
      ExponentPair e = exponent_sums(w);
      if (mono->second != 1 || mono->first.first != e.e_a || mono->first.second != e.e_b)
        report.violations.push_back("symbolic d1 mismatch for " + to_string(w));
    }

    RationalUTMatrix base = specialize(sym, p);
    RationalUTMatrix acc{1, 0, 1};
    for (int k = 1; k <= max_power; ++k) {
      acc = {acc.d1 * base.d1, acc.d1 * base.u + acc.u * base.d2, acc.d2 * base.d2};
      ++report.checks;
      if (is_projective_identity(acc))
        report.violations.push_back("power " + std::to_string(k) + " of " + to_string(w) +
                                    " specializes to +-I");
    }
  }
  return report;
}

}  // namespace kbc
