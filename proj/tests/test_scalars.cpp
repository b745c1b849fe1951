#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tlcat/scalars.hpp"

using namespace tlcat;

TEST_CASE("level parameters") {
  CHECK(make_params(1).N == 12);
  CHECK(make_params(2).N == 16);
  CHECK(make_params(4).N == 24);
  CHECK_THROWS_AS(make_params(0), std::invalid_argument);
  CHECK_THROWS_AS(make_params(-3), std::invalid_argument);
}

TEST_CASE("root of unity relations") {
  for (int k = 1; k <= 5; ++k) {
    const Level& L = Level::get(k);
    CAPTURE(k);
    CHECK(L.t().pow(L.params().N).is_one());
    // t^(2k+4) = -1, equivalently q^(k+2) = -1
    CHECK(L.t().pow(2 * k + 4) == -L.one());
    CHECK(L.q() == L.t() * L.t());
    CHECK((L.t() * L.t().inv()).is_one());
    CHECK(L.t().inv() == L.t_pow(L.params().N - 1));
  }
}

TEST_CASE("delta") {
  const Level& L1 = Level::get(1);
  // -2cos(pi/3) = -1 at level 1
  CHECK(L1.delta() == L1.scalar(-1));
  for (int k = 1; k <= 5; ++k) {
    const Level& L = Level::get(k);
    CHECK(L.delta() == -(L.q() + L.q().inv()));
    CHECK(L.delta() == -L.qint(2));
  }
}

TEST_CASE("quantum integers") {
  for (int k = 1; k <= 6; ++k) {
    const Level& L = Level::get(k);
    CAPTURE(k);
    CHECK(L.qint(0).is_zero());
    CHECK(L.qint(1).is_one());
    CHECK(L.qint(k + 2).is_zero());
    // closed form against the recurrence
    for (int i = 0; i <= k + 4; ++i) {
      CycNum direct = (L.q().pow(i) - L.q().pow(-i)) /
                      (L.q() - L.q().inv());
      CHECK(L.qint(i) == direct);
    }
    // reflection symmetry [k+2-j] = [j]
    for (int j = 1; j <= k + 1; ++j) {
      CHECK(L.qint(k + 2 - j) == L.qint(j));
    }
    // all denominators appearing in the Wenzl recursion are invertible
    for (int i = 1; i <= k + 1; ++i) {
      CHECK_FALSE(L.qint(i).is_zero());
      CHECK((L.qint(i) * L.qint(i).inv()).is_one());
    }
    // [2][i] = [i-1] + [i+1]
    for (int i = 1; i <= k + 4; ++i) {
      CHECK(L.qint(2) * L.qint(i) == L.qint(i - 1) + L.qint(i + 1));
    }
  }
}

TEST_CASE("inversion") {
  const Level& L = Level::get(3);
  CHECK((L.qint(2).inv() * L.qint(2)).is_one());
  CHECK_THROWS_AS(L.qint(L.k() + 2).inv(), std::domain_error);
  CHECK_THROWS_AS(L.zero().inv(), std::domain_error);
}

TEST_CASE("conjugation fixes real scalars") {
  for (int k = 1; k <= 5; ++k) {
    const Level& L = Level::get(k);
    CHECK(L.delta().conj() == L.delta());
    for (int i = 0; i <= k + 2; ++i) CHECK(L.qint(i).conj() == L.qint(i));
    CHECK(L.t().conj() == L.t().inv());
  }
}

TEST_CASE("field laws on random elements") {
  const Level& L = Level::get(4);
  std::mt19937_64 gen(20240917);
  auto rnd = [&]() {
    CycNum x = L.zero();
    for (int j = 0; j < 4; ++j) {
      long num = static_cast<long>(gen() % 19) - 9;
      x += L.rational(num, 1 + static_cast<long>(gen() % 5)) *
           L.t_pow(static_cast<long>(gen() % L.params().N));
    }
    return x;
  };
  for (int trial = 0; trial < 100; ++trial) {
    CycNum a = rnd(), b = rnd(), c = rnd();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("serialization strings") {
  const Level& L = Level::get(1);
  auto v = L.rational(1, 2).coeff_strings();
  REQUIRE(v.size() == 4);  // phi(12) = 4
  CHECK(v[0] == "1/2");
  CHECK(v[1] == "0/1");
}
