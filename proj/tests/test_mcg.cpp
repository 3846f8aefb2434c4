#include "kbc/mcg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace kbc;
using G = McgGenerator;

namespace {

Word random_word(std::mt19937& rng, std::size_t len) {
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < len; ++i) raw.push_back(static_cast<Letter>(rng() % 4));
  return reduce(raw);
}

}  // namespace

TEST_CASE("generator substitution tables") {
  EndoMap tb = generator_endo(G::Tb);
  CHECK(tb.image_a == parse_word("ab"));
  CHECK(tb.image_b == parse_word("b"));

  EndoMap tbi = generator_endo(G::TbInv);
  CHECK(tbi.image_a == parse_word("aB"));
  CHECK(tbi.image_b == parse_word("b"));

  EndoMap y = generator_endo(G::Y);
  CHECK(y.image_a == parse_word("A"));
  CHECK(y.image_b == parse_word("b"));

  EndoMap w1 = generator_endo(G::W1);
  CHECK(w1.image_a == parse_word("a"));
  CHECK(w1.image_b == parse_word("B"));
}

TEST_CASE("substitution examples") {
  CHECK(apply_endo(generator_endo(G::Tb), parse_word("a")) == parse_word("ab"));
  // t_b(a^-1 b^n) = b^-1 a^-1 b^n
  for (int n = 1; n <= 4; ++n) {
    Word in = concat(parse_word("A"), power(parse_word("b"), n));
    Word expect = concat(parse_word("BA"), power(parse_word("b"), n));
    CHECK(apply_endo(generator_endo(G::Tb), in) == expect);
  }
  CHECK(apply_endo(generator_endo(G::Y), parse_word("aBAB")) == parse_word("ABaB"));
}

TEST_CASE("composition applies rightmost first") {
  CHECK(apply_mcg({G::Tb, G::Tb}, parse_word("a")) == parse_word("ab^2"));
  std::mt19937 rng(41);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, rng() % 20);
    CHECK(apply_mcg({}, w) == w);
    CHECK(apply_mcg({G::TbInv, G::Tb}, w) == w);
    CHECK(apply_mcg({G::Tb, G::TbInv}, w) == w);
    CHECK(apply_mcg({G::Y, G::Y}, w) == w);
    CHECK(apply_mcg({G::W1, G::W1}, w) == w);
  }
}

TEST_CASE("compose and invert") {
  CHECK(compose({G::Y}, {G::Y}) == McgWord{G::Y, G::Y});
  CHECK(compose({G::Tb}, {}) == McgWord{G::Tb});
  CHECK(invert_mcg({G::Tb, G::Y}) == McgWord{G::Y, G::TbInv});
  CHECK(invert_mcg({}).empty());
  CHECK(invert_mcg({G::W1}) == McgWord{G::W1});

  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    McgWord phi, psi;
    for (std::size_t j = rng() % 6; j > 0; --j) phi.push_back(static_cast<G>(rng() % 4));
    for (std::size_t j = rng() % 6; j > 0; --j) psi.push_back(static_cast<G>(rng() % 4));
    Word w = random_word(rng, rng() % 15);
    CHECK(apply_mcg(compose(phi, psi), w) == apply_mcg(phi, apply_mcg(psi, w)));
    CHECK(apply_mcg(invert_mcg(phi), apply_mcg(phi, w)) == w);
  }
}

TEST_CASE("abelianized action") {
  auto tb = exponent_action(G::Tb);
  CHECK(tb == std::array<std::array<int, 2>, 2>{{{1, 0}, {1, 1}}});
  CHECK(exponent_action(G::Y) == std::array<std::array<int, 2>, 2>{{{-1, 0}, {0, 1}}});
  CHECK(exponent_action(G::W1) == std::array<std::array<int, 2>, 2>{{{1, 0}, {0, -1}}});

  std::mt19937 rng(47);
  const G gens[] = {G::Tb, G::TbInv, G::Y, G::W1};
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, rng() % 25);
    for (G g : gens) {
      auto m = exponent_action(g);
      ExponentPair e = exponent_sums(w);
      ExponentPair expect{m[0][0] * e.e_a + m[0][1] * e.e_b,
                          m[1][0] * e.e_a + m[1][1] * e.e_b};
      CHECK(exponent_sums(apply_endo(generator_endo(g), w)) == expect);
    }
  }
}

TEST_CASE("twist powers of a") {
  for (int n = 0; n <= 20; ++n) {
    McgWord twists(n, G::Tb);
    CHECK(apply_mcg(twists, parse_word("a")) ==
          concat(parse_word("a"), power(parse_word("b"), n)));
  }
}

TEST_CASE("token syntax") {
  CHECK(parse_mcg_word("y tb-") == McgWord{G::Y, G::TbInv});
  CHECK(parse_mcg_word("  tb  w1 ") == McgWord{G::Tb, G::W1});
  CHECK(parse_mcg_word("").empty());
  CHECK(to_string(McgWord{G::Y, G::TbInv, G::W1}) == "y tb- w1");
  CHECK_THROWS_AS(parse_mcg_word("tb+"), ParseError);
}
