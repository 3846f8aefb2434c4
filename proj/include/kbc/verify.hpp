#pragma once

// Self-checking suites over the whole library: substitution tables, orbit
// closure, constructive reachability, agreement of the pattern classifier
// with the brute-force family enumeration, the representation checks, and
// a randomized algebraic-law suite. Each check reports case and violation
// counts with deterministic notes, so the CLI can serialize them byte-stably.

#include <chrono>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "kbc/canonicalize.hpp"
#include "kbc/classify.hpp"
#include "kbc/mcg.hpp"
#include "kbc/rep.hpp"
#include "kbc/word.hpp"

namespace kbc {

struct CheckResult {
  std::string name;
  long long cases = 0;
  long long violations = 0;
  std::vector<std::string> notes;  // first few failure descriptions, or flags
  double elapsed_ms = 0;           // not serialized; for budget reporting only

  void fail(std::string note) {
    ++violations;
    if (notes.size() < 8) notes.push_back(std::move(note));
  }
};

namespace detail {

class Timer {
 public:
  explicit Timer(CheckResult& r) : result_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    result_.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
  }

 private:
  CheckResult& result_;
  std::chrono::steady_clock::time_point start_;
};

// Deterministic word sampler. Raw sequences may cancel; reduced words are
// built with no adjacent cancellation so the requested length is exact.
class WordSampler {
 public:
  explicit WordSampler(unsigned seed) : rng_(seed) {}

  std::vector<Letter> raw_letters(std::size_t len) {
    std::vector<Letter> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      out.push_back(static_cast<Letter>(rng_() % 4));
    return out;
  }

  Word word(std::size_t len) {
    std::vector<Letter> out;
    out.reserve(len);
    while (out.size() < len) {
      Letter l = static_cast<Letter>(rng_() % 4);
      if (!out.empty() && l == inverse(out.back())) continue;
      out.push_back(l);
    }
    return reduce(out);
  }

  std::size_t index(std::size_t n) { return rng_() % n; }

 private:
  std::mt19937 rng_;
};

inline std::string mismatch_note(const std::string& context, const Word& got,
                                 const Word& expected) {
  return context + ": got " + to_string(got) + ", expected " + to_string(expected);
}

}  // namespace detail

// The eight substitution assertions: images of a and b under all four
// built-in generators.
inline CheckResult check_generator_tables() {
  CheckResult r;
  r.name = "generator-tables";
  detail::Timer t(r);
  using G = McgGenerator;
  const struct {
    G g;
    const char* image_a;
    const char* image_b;
  } table[] = {
      {G::Tb, "ab", "b"},
      {G::TbInv, "ab^-1", "b"},
      {G::Y, "a^-1", "b"},
      {G::W1, "a", "b^-1"},
  };
  for (const auto& row : table) {
    EndoMap e = generator_endo(row.g);
    ++r.cases;
    if (to_string(e.image_a) != row.image_a)
      r.fail("image of a under " + to_token(row.g) + " is " + to_string(e.image_a));
    ++r.cases;
    if (to_string(e.image_b) != row.image_b)
      r.fail("image of b under " + to_token(row.g) + " is " + to_string(e.image_b));
  }
  return r;
}

// Every generator image of every simple-closed-curve class stays simple,
// with unchanged topological type.
inline CheckResult check_scc_closure(int max_n) {
  CheckResult r;
  r.name = "scc-closure";
  detail::Timer t(r);
  const McgGenerator gens[] = {McgGenerator::Tb, McgGenerator::TbInv, McgGenerator::Y,
                               McgGenerator::W1};
  for (const SccClass& c : detail::all_classes_up_to(max_n)) {
    Word w = canonical_word(c);
    TopoType before = topo_type(c);
    for (McgGenerator g : gens) {
      Word image = apply_mcg({g}, w);
      std::optional<SccClass> cls = classify(image);
      ++r.cases;
      if (!cls) {
        r.fail("image of " + to_string(w) + " under " + to_token(g) + " not simple");
        continue;
      }
      ++r.cases;
      TopoType after = topo_type(*cls);
      bool same = before.separating == after.separating &&
                  before.one_sided == after.one_sided &&
                  before.pieces.size() == after.pieces.size();
      for (std::size_t i = 0; same && i < before.pieces.size(); ++i)
        same = before.pieces[i].name == after.pieces[i].name;
      if (!same)
        r.fail("topological type changed for " + to_string(w) + " under " + to_token(g));
    }
  }
  return r;
}

// canonicalize succeeds, replays exactly, and respects the length bound on
// every class representative plus random conjugates of each.
inline CheckResult check_reachability(int max_n, int conjugates_per_class,
                                      unsigned seed) {
  CheckResult r;
  r.name = "reachability";
  detail::Timer t(r);
  detail::WordSampler sampler(seed);
  for (const SccClass& c : detail::all_classes_up_to(max_n)) {
    Word rep = canonical_word(c);
    std::size_t bound = (c.family == SccClass::Family::Slope)
                            ? static_cast<std::size_t>(std::abs(c.n)) + 2
                            : 1;
    for (int i = 0; i <= conjugates_per_class; ++i) {
      Word w = i == 0 ? rep : conjugate(sampler.word(sampler.index(9)), rep);
      ++r.cases;
      std::optional<CanonicalizationResult> res = canonicalize(w);
      if (!res) {
        r.fail("canonicalize failed on " + to_string(w));
        continue;
      }
      if (!verify_canonicalization(w, *res)) {
        r.fail("replay mismatch on " + to_string(w));
        continue;
      }
      if (res->mcg.size() > bound)
        r.fail("sequence too long on " + to_string(w));
    }
  }
  return r;
}

// The pattern classifier agrees with brute-force membership on every cyclic
// class of cyclically reduced words up to max_len.
inline CheckResult check_oracle_agreement(int max_len) {
  CheckResult r;
  r.name = "oracle-agreement";
  detail::Timer t(r);
  std::set<CyclicWord> oracle = build_oracle_set(max_len);
  long long members = 0;
  for (const auto& [cyc, cls] : enumerate_classes(max_len)) {
    ++r.cases;
    bool in_oracle = oracle.count(cyc) > 0;
    if (cls.has_value() != in_oracle)
      r.fail("disagreement on " + to_string(cyc));
    if (cls) ++members;
  }
  if (members != static_cast<long long>(oracle.size()))
    r.fail("member count " + std::to_string(members) + " != oracle size " +
           std::to_string(oracle.size()));
  ++r.cases;
  return r;
}

// Both the family enumeration and the classifier must count exactly ten
// simple classes of cyclic length four, independently.
inline CheckResult check_length4_count() {
  CheckResult r;
  r.name = "length-4-count";
  detail::Timer t(r);
  long long oracle_count = 0;
  for (const CyclicWord& c : build_oracle_set(4))
    if (c.size() == 4) ++oracle_count;
  ++r.cases;
  if (oracle_count != 10)
    r.fail("family enumeration found " + std::to_string(oracle_count));
  long long classifier_count = 0;
  for (const auto& [cyc, cls] : enumerate_classes(4))
    if (cyc.size() == 4 && cls) ++classifier_count;
  ++r.cases;
  if (classifier_count != 10)
    r.fail("classifier found " + std::to_string(classifier_count));
  return r;
}

inline CheckResult check_representation(int max_n, int max_power, const Params& p) {
  CheckResult r;
  r.name = "representation";
  detail::Timer t(r);
  RepVerification rep = verify_representation(max_n, max_power, p);
  r.cases = rep.checks;
  for (const std::string& v : rep.violations) r.fail(v);
  if (rep.params_bounded) r.notes.push_back("parameter check is bounded, not exact");
  return r;
}

// The kernel witness is a nonempty reduced word, symbolically in the kernel
// of rho, and nontrivial in the alternating-group quotient.
inline CheckResult check_kernel_witness() {
  CheckResult r;
  r.name = "kernel-witness";
  detail::Timer t(r);
  Word w = kernel_witness();
  ++r.cases;
  if (w.empty()) r.fail("witness is empty");
  ++r.cases;
  if (!is_projective_identity(rho(w))) r.fail("witness not in the kernel");
  ++r.cases;
  if (a5_image(w).is_identity()) r.fail("witness trivial in A5");
  return r;
}

// Randomized algebraic laws, each family on at least `samples` inputs.
inline CheckResult check_algebraic_invariants(int samples, unsigned seed) {
  CheckResult r;
  r.name = "algebraic-invariants";
  detail::Timer t(r);
  detail::WordSampler sampler(seed);
  const McgGenerator gens[] = {McgGenerator::Tb, McgGenerator::TbInv, McgGenerator::Y,
                               McgGenerator::W1};

  // Substitution homomorphism and the abelianized action square.
  for (int i = 0; i < samples; ++i) {
    Word u = sampler.word(sampler.index(12));
    Word v = sampler.word(sampler.index(12));
    McgGenerator g = gens[i % 4];
    EndoMap e = generator_endo(g);
    ++r.cases;
    if (apply_endo(e, concat(u, v)) != concat(apply_endo(e, u), apply_endo(e, v)))
      r.fail("substitution not a homomorphism under " + to_token(g));
    ++r.cases;
    auto m = exponent_action(g);
    ExponentPair before = exponent_sums(u);
    ExponentPair expected{m[0][0] * before.e_a + m[0][1] * before.e_b,
                          m[1][0] * before.e_a + m[1][1] * before.e_b};
    if (exponent_sums(apply_endo(e, u)) != expected)
      r.fail("abelianized action mismatch under " + to_token(g));
  }

  // Involutions and the twist inverse pair.
  using G = McgGenerator;
  const McgWord identities[] = {{G::Y, G::Y}, {G::W1, G::W1}, {G::Tb, G::TbInv},
                                {G::TbInv, G::Tb}};
  for (int i = 0; i < samples; ++i) {
    Word w = sampler.word(sampler.index(16));
    for (const McgWord& phi : identities) {
      ++r.cases;
      if (apply_mcg(phi, w) != w)
        r.fail("composition " + to_string(phi) + " not the identity");
    }
  }

  // Matrix and permutation homomorphisms, determinant, diagonal link.
  for (int i = 0; i < samples; ++i) {
    Word u = sampler.word(sampler.index(51));
    Word v = sampler.word(sampler.index(51));
    ++r.cases;
    if (rho(concat(u, v)) != mat_mul(rho(u), rho(v))) r.fail("rho not a homomorphism");
    ++r.cases;
    if (mat_mul(rho(u), rho(invert(u))) != UTMatrix::identity())
      r.fail("rho(w^-1) is not the inverse");
    ++r.cases;
    if (!(a5_image(concat(u, v)) == a5_image(u) * a5_image(v)))
      r.fail("A5 map not a homomorphism");
    ++r.cases;
    UTMatrix m = rho(u);
    if (!(m.d1 * m.d2).is_constant(1)) r.fail("determinant != 1");
    ++r.cases;
    ExponentPair e = exponent_sums(u);
    if (m.d1 != Laurent::monomial(static_cast<int>(e.e_a), static_cast<int>(e.e_b)))
      r.fail("diagonal does not match exponent sums");
  }

  // Double commutators collapse symbolically.
  auto commutator = [](const Word& x, const Word& y) {
    return concat(concat(x, y), concat(invert(x), invert(y)));
  };
  for (int i = 0; i < samples; ++i) {
    Word u = sampler.word(sampler.index(7));
    Word v = sampler.word(sampler.index(7));
    Word x = sampler.word(sampler.index(7));
    Word z = sampler.word(sampler.index(7));
    ++r.cases;
    if (rho(commutator(commutator(u, v), commutator(x, z))) != UTMatrix::identity())
      r.fail("double commutator does not collapse");
  }

  // Specialization commutes with multiplication.
  Params p(2, 3);
  for (int i = 0; i < samples; ++i) {
    Word u = sampler.word(sampler.index(21));
    Word v = sampler.word(sampler.index(21));
    UTMatrix mu = rho(u), mv = rho(v);
    RationalUTMatrix su = specialize(mu, p), sv = specialize(mv, p);
    RationalUTMatrix prod{su.d1 * sv.d1, su.d1 * sv.u + su.u * sv.d2, su.d2 * sv.d2};
    ++r.cases;
    if (!(specialize(mat_mul(mu, mv), p) == prod))
      r.fail("specialization does not commute with multiplication");
  }

  return r;
}

// The full suite in a fixed order. Closure and reachability use max_n;
// oracle agreement uses max_len; the representation check uses max_n and
// max_power at the given parameters.
inline std::vector<CheckResult> run_verify_suite(int max_n, int max_len, int max_power,
                                                 const Params& params) {
  std::vector<CheckResult> out;
  out.push_back(check_generator_tables());
  out.push_back(check_scc_closure(max_n));
  out.push_back(check_reachability(max_n, 100, 0x5cc0u));
  out.push_back(check_oracle_agreement(max_len));
  out.push_back(check_length4_count());
  out.push_back(check_representation(max_n, max_power, params));
  out.push_back(check_kernel_witness());
  out.push_back(check_algebraic_invariants(200, 0xa1b2u));
  return out;
}

}  // namespace kbc
