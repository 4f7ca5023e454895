#include <doctest.h>

#include <random>

#include "qwb/errors.hpp"
#include "qwb/exact_linalg.hpp"
#include "qwb/form.hpp"
#include "qwb/oracles.hpp"
#include "qwb/poly_roots.hpp"
#include "qwb/rational.hpp"

using namespace qwb;

TEST_SUITE("core") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK(to_string(parse_rational("-3/9")) == "-1/3");
  }

  TEST_CASE("gaussian arithmetic") {
    GaussianRational i(0, 1);
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(3, 2), Rational(-2));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK(pow(i, 4) == GaussianRational(1));
    CHECK(parse_gaussian("1/2-3i") == GaussianRational(Rational(1, 2), Rational(-3)));
  }

  TEST_CASE("form evaluation and substitution") {
    HomogeneousForm q(4, 2);
    for (int k = 0; k < 3; ++k) {
      std::array<int, 4> e{};
      e[k] = 2;
      q.add_term(e, 1);
    }
    std::array<GaussianRational, 4> p{1, 2, 3, 0}, zero{};
    CHECK(q.evaluate(p) == GaussianRational(14));
    CHECK(q.evaluate(zero).is_zero());
    std::array<int, 4> bad{1, 0, 0, 0};
    CHECK_THROWS_AS(q.add_term(bad, 1), InputError);

    // q(A w) evaluated at w equals q at A w.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    std::array<GaussianRational, 16> a;
    for (auto& x : a) x = GaussianRational(d(rng));
    HomogeneousForm qa = q.substitute_linear(a);
    std::array<GaussianRational, 4> w{1, -2, 3, 5}, aw{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) aw[r] += a[r * 4 + c] * w[c];
    CHECK(qa.evaluate(w) == q.evaluate(aw));
  }

  TEST_CASE("congruence diagonalization") {
    ExactMatrix4 m{};
    // z1 z2 + z3^2
    m[0 * 4 + 1] = m[1 * 4 + 0] = Rational(1, 2);
    m[2 * 4 + 2] = 1;
    CHECK(exact_rank(m) == 3);
    Congruence c = congruence_diagonalize(m);
    ExactMatrix4 d = multiply(transpose(c.p), multiply(m, c.p));
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) CHECK(d[r * 4 + s] == (r == s ? c.diagonal[r] : GaussianRational()));
    CHECK(!c.diagonal[2].is_zero());
    CHECK(c.diagonal[3].is_zero());
  }

  TEST_CASE("roots agree with the companion matrix") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
      numeric::Poly c(13);
      for (auto& x : c) x = Complex(g(rng), g(rng));
      auto roots = numeric::aberth_roots(c, trial);
      auto reference = oracle::companion_roots(c);
      REQUIRE(roots.size() == 12);
      REQUIRE(reference.size() == 12);
      for (const auto& r : roots) {
        double nearest = 1e300;
        for (const auto& s : reference) nearest = std::min(nearest, std::abs(r - s));
        CHECK(nearest < 1e-8 * std::max(1.0, std::abs(r)));
      }
    }
  }

  TEST_CASE("interpolation recovers coefficients") {
    numeric::Poly c{Complex(1, 2), Complex(-3, 0), Complex(0, 0.5), Complex(2, -1)};
    auto f = [&](Complex x) { return numeric::horner(c, x); };
    auto back = numeric::coefficients_from_samples(f, 8);
    REQUIRE(back.size() == 8);
    for (int k = 0; k < 8; ++k) CHECK(std::abs(back[k] - (k < 4 ? c[k] : Complex(0.0))) < 1e-12);
  }
}
