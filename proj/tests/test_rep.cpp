#include "kbc/rep.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace kbc;

namespace {

Word random_word(std::mt19937& rng, std::size_t len) {
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < len; ++i) raw.push_back(static_cast<Letter>(rng() % 4));
  return reduce(raw);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

const Laurent kOne = Laurent::constant(1);

}  // namespace

TEST_CASE("laurent ring arithmetic") {
  Laurent alpha = Laurent::monomial(1, 0);
  Laurent beta = Laurent::monomial(0, 1);
  CHECK((alpha + (-alpha)).is_zero());
  CHECK(beta * Laurent::monomial(0, -1) == kOne);
  CHECK((alpha + kOne) * (alpha - kOne) == Laurent::monomial(2, 0) - kOne);

  CHECK(Laurent().str() == "0");
  CHECK((Laurent::monomial(2, -1, -1) - Laurent::monomial(0, 1, 2)).str() ==
        "-2*beta - alpha^2*beta^-1");
  CHECK(Laurent::constant(7).str() == "7");

  auto mono = (beta * beta).as_unit_monomial();
  REQUIRE(mono.has_value());
  CHECK(mono->first == Laurent::Exponents{0, 2});
  CHECK(mono->second == 1);
  CHECK(!(alpha + beta).as_unit_monomial().has_value());
}

TEST_CASE("letter matrices") {
  UTMatrix a = rho_letter(Letter::a);
  CHECK(a.d1 == Laurent::monomial(1, 0));
  CHECK(a.u.is_zero());
  CHECK(a.d2 == Laurent::monomial(-1, 0));

  UTMatrix b = rho_letter(Letter::b);
  CHECK(b.d1 == Laurent::monomial(0, 1));
  CHECK(b.u == kOne);
  CHECK(b.d2 == Laurent::monomial(0, -1));

  CHECK(mat_mul(rho_letter(Letter::b), rho_letter(Letter::B)) == UTMatrix::identity());
  CHECK(mat_mul(rho_letter(Letter::a), rho_letter(Letter::A)) == UTMatrix::identity());
}

TEST_CASE("products") {
  UTMatrix ab = mat_mul(rho_letter(Letter::a), rho_letter(Letter::b));
  CHECK(ab.d1 == Laurent::monomial(1, 1));
  CHECK(ab.u == Laurent::monomial(1, 0));
  CHECK(ab.d2 == Laurent::monomial(-1, -1));

  UTMatrix bd = rho(parse_word("ab^-1a^-1b^-1"));
  CHECK(bd.d1 == Laurent::monomial(0, -2));
  CHECK(bd.u == -(Laurent::monomial(0, -1) + Laurent::monomial(2, 1)));
  CHECK(bd.d2 == Laurent::monomial(0, 2));

  for (int n = 1; n <= 6; ++n) {
    Word w = concat(parse_word("a"), power(parse_word("b"), n));
    CHECK(rho(w).d1 == Laurent::monomial(1, n));
  }
  CHECK(rho(Word{}) == UTMatrix::identity());
}

TEST_CASE("specialization") {
  Params p23(2, 3);
  RationalUTMatrix a = specialize(rho_letter(Letter::a), p23);
  CHECK(a.d1 == 2);
  CHECK(a.u == 0);
  CHECK(a.d2 == mpq_class(1, 2));

  RationalUTMatrix b = specialize(rho_letter(Letter::b), p23);
  CHECK(b.d1 == 3);
  CHECK(b.u == 1);
  CHECK(b.d2 == mpq_class(1, 3));

  CHECK(specialize(UTMatrix::identity(), Params(mpq_class(7, 4), -5)) ==
        RationalUTMatrix{1, 0, 1});

  std::mt19937 rng(67);
  for (int i = 0; i < 200; ++i) {
    UTMatrix mu = rho(random_word(rng, rng() % 20));
    UTMatrix mv = rho(random_word(rng, rng() % 20));
    RationalUTMatrix su = specialize(mu, p23), sv = specialize(mv, p23);
    RationalUTMatrix prod{su.d1 * sv.d1, su.d1 * sv.u + su.u * sv.d2, su.d2 * sv.d2};
    CHECK(specialize(mat_mul(mu, mv), p23) == prod);
  }

  CHECK_THROWS_AS(Params(0, 3), std::invalid_argument);
}

TEST_CASE("projective identity predicate") {
  CHECK(is_projective_identity(UTMatrix::identity()));
  CHECK(is_projective_identity(
      UTMatrix{Laurent::constant(-1), Laurent(), Laurent::constant(-1)}));
  CHECK(!is_projective_identity(rho_letter(Letter::a)));
  CHECK(!is_projective_identity(rho(parse_word("ab"))));
  CHECK(is_projective_identity(RationalUTMatrix{-1, 0, -1}));
  CHECK(!is_projective_identity(RationalUTMatrix{1, mpq_class(1, 2), 1}));
}

TEST_CASE("kernel witness") {
  Word w = kernel_witness();
  CHECK(!w.empty());
  CHECK(w.size() == 18);
  CHECK(w == parse_word("aba^-1b^-1ab^2a^-1b^-1ab^-1a^-1b^2ab^-2a^-1"));
  CHECK(w == commutator(commutator(parse_word("a"), parse_word("b")),
                        commutator(parse_word("a"), parse_word("b^2"))));
  CHECK(is_projective_identity(rho(w)));
  CHECK(!a5_image(w).is_identity());
  CHECK(a5_image(w).str() == "(13)(45)");
}

TEST_CASE("alternating group certificate") {
  CHECK(a5_image(parse_word("a")).str() == "(123)");
  CHECK(a5_image(parse_word("b")).str() == "(345)");
  CHECK(a5_image(parse_word("aA")).is_identity());

  std::mt19937 rng(71);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, rng() % 25);
    Word v = random_word(rng, rng() % 25);
    CHECK(a5_image(concat(u, v)) == a5_image(u) * a5_image(v));
    CHECK(a5_image(u).is_even());
    CHECK((a5_image(u) * a5_image(u).inverse()).is_identity());
  }
}

TEST_CASE("parameter hypothesis") {
  CHECK(check_params(Params(2, 3), 5));
  CHECK(check_params_detail(Params(2, 3), 5).bounded == false);
  CHECK(!check_params(Params(1, 2), 5));
  CHECK(!check_params(Params(4, 2), 5));  // 4 * 2^-2 == 1
  CHECK(!check_params(Params(-1, 3), 5));
  CHECK(!check_params(Params(2, -2), 5));
  CHECK(!check_params(Params(mpq_class(1, 2), 2), 5));  // (1/2) * 2 == 1

  ParamsCheck rational = check_params_detail(Params(mpq_class(2, 3), 5), 6);
  CHECK(rational.ok);
  CHECK(rational.bounded);

  CHECK_THROWS_AS(check_params_detail(Params(2, 3), 0), std::invalid_argument);
}

TEST_CASE("representation verification") {
  RepVerification rep = verify_representation(4, 3, Params(2, 3));
  CHECK(rep.classes_checked == 8 + 4 * 2 * 2 * 2);
  CHECK(rep.violations.empty());
  CHECK(!rep.params_bounded);

  // spot values: boundary d1 = beta^-2, b^3 evaluates to 27
  CHECK(rho(canonical_word(make_boundary(false))).d1 == Laurent::monomial(0, -2));
  CHECK(evaluate(rho(power(parse_word("b"), 3)).d1, Params(2, 3)) == 27);

  CHECK_THROWS_AS(verify_representation(4, 3, Params(4, 2)), std::invalid_argument);
}

TEST_CASE("metabelian collapse") {
  std::mt19937 rng(73);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, rng() % 7);
    Word v = random_word(rng, rng() % 7);
    Word x = random_word(rng, rng() % 7);
    Word z = random_word(rng, rng() % 7);
    CHECK(rho(commutator(commutator(u, v), commutator(x, z))) == UTMatrix::identity());
  }
}

TEST_CASE("determinant and diagonal over random words") {
  std::mt19937 rng(79);
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(rng, rng() % 51);
    UTMatrix m = rho(w);
    CHECK((m.d1 * m.d2).is_constant(1));
    ExponentPair e = exponent_sums(w);
    CHECK(m.d1 == Laurent::monomial(static_cast<int>(e.e_a), static_cast<int>(e.e_b)));
  }
}
