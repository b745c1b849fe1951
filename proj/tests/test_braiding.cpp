#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcat/braiding.hpp"

using namespace tlcat;

TEST_CASE("crossing expansion") {
  const Level& L = Level::get(1);
  TLMorphism pos = crossing(L, +1);
  REQUIRE(pos.term_count() == 2);
  CHECK(pos.coeff(PlanarDiagram::identity(2)) == L.t());
  CHECK(pos.coeff(PlanarDiagram::capcup(0, 2)) == L.t().inv());
}

TEST_CASE("crossings are invertible") {
  for (int k : {1, 2, 3}) {
    const Level& L = Level::get(k);
    CHECK(compose(crossing(L, +1), crossing(L, -1)) ==
          TLMorphism::identity(L, 2));
    // t^2 + t^-2 + delta = 0 is what makes this work
    CHECK((L.t_pow(2) + L.t_pow(-2) + L.delta()).is_zero());
  }
}

TEST_CASE("Reidemeister moves") {
  const Level& L = Level::get(2);
  auto s0 = expand_braid(L, BraidWord(3, {{0, 1}}));
  auto s1 = expand_braid(L, BraidWord(3, {{1, 1}}));
  CHECK(compose(s0, compose(s1, s0)) == compose(s1, compose(s0, s1)));
}

TEST_CASE("braid word expansion") {
  const Level& L = Level::get(2);
  CHECK(expand_braid(L, BraidWord(3, {})) == TLMorphism::identity(L, 3));

  // sigma_{1,2} = (1 x sigma) o (sigma x 1)
  auto composite = compose(
      tensor(TLMorphism::identity(L, 1), crossing(L, 1)),
      tensor(crossing(L, 1), TLMorphism::identity(L, 1)));
  CHECK(expand_braid(L, block_transposition(1, 2)) == composite);

  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      CHECK(block_transposition(a, b).crossings.size() ==
            static_cast<size_t>(a * b));
    }
  }
}

TEST_CASE("braid word parsing") {
  auto w = parse_braid("s0 s1^-1 s0", 3);
  REQUIRE(w.crossings.size() == 3);
  CHECK(w.crossings[0] == std::make_pair(0, 1));
  CHECK(w.crossings[1] == std::make_pair(1, -1));
  CHECK(w.crossings[2] == std::make_pair(0, 1));
  CHECK_THROWS_AS(parse_braid("x3", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("s9", 4), std::invalid_argument);
}

TEST_CASE("hexagon identity") {
  const Level& L = Level::get(3);
  for (int b = 1; b <= 2; ++b) {
    for (int c = 1; c <= 2; ++c) {
      auto lhs = expand_braid(L, block_transposition(1, b + c));
      auto sb = expand_braid(L, block_transposition(1, b));
      auto sc = expand_braid(L, block_transposition(1, c));
      auto rhs = compose(tensor(TLMorphism::identity(L, b), sc),
                         tensor(sb, TLMorphism::identity(L, c)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("naturality under cup insertion") {
  const Level& L = Level::get(2);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i + 2 <= n; ++i) {
      auto g = TLMorphism::from_diagram(L, PlanarDiagram::cup(i, n - 2));
      auto lhs = compose(expand_braid(L, block_transposition(1, n)),
                         tensor(TLMorphism::identity(L, 1), g));
      auto rhs = compose(tensor(g, TLMorphism::identity(L, 1)),
                         expand_braid(L, block_transposition(1, n - 2)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("projector eigenvalue of the braiding") {
  for (int k = 1; k <= 4; ++k) {
    const Level& L = Level::get(k);
    for (int a = 0; a <= k + 1; ++a) {
      for (int b = 0; a + b <= k + 1; ++b) {
        CAPTURE(k);
        CAPTURE(a);
        CAPTURE(b);
        const TLMorphism& f = jw(L, a + b);
        auto fa_fb = tensor(jw(L, a), jw(L, b));
        auto fb_fa = tensor(jw(L, b), jw(L, a));
        auto sig = expand_braid(L, block_transposition(a, b));
        auto sig_inv = expand_braid(L, block_transposition(a, b).inverse());
        CycNum tp = L.t_pow(static_cast<long>(a) * b);
        CycNum tm = L.t_pow(-static_cast<long>(a) * b);
        // as maps F_a x F_b -> F_{a+b} and back
        CHECK(compose(f, compose(sig, fa_fb)) == f.scaled(tp));
        CHECK(compose(f, compose(sig_inv, fa_fb)) == f.scaled(tm));
        CHECK(compose(fb_fa, compose(sig, f)) == f.scaled(tp));
        CHECK(compose(fb_fa, compose(sig_inv, f)) == f.scaled(tm));
      }
    }
  }
}

TEST_CASE("double braiding") {
  for (int k = 1; k <= 3; ++k) {
    const Level& L = Level::get(k);
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; a + b <= k + 1; ++b) {
        auto fwd = expand_braid(L, block_transposition(a, b));
        auto back = expand_braid(L, block_transposition(b, a));
        const TLMorphism& f = jw(L, a + b);
        CHECK(compose(f, compose(back, fwd)) ==
              f.scaled(L.t_pow(2L * a * b)));
      }
    }
  }
}

TEST_CASE("twist scalars") {
  for (int k = 1; k <= 4; ++k) {
    const Level& L = Level::get(k);
    for (int j = 0; j <= k; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      CycNum expect = L.t_pow(static_cast<long>(j) * j + 2L * j);
      if (j % 2 == 1) expect = -expect;
      CycNum left = twist_scalar(L, j, TwistSide::left);
      CycNum right = twist_scalar(L, j, TwistSide::right);
      CHECK(left == expect);
      CHECK(right == expect);
      CHECK(twist_scalar_inverse(L, j, TwistSide::left) == expect.inv());
    }
  }
  // explicit small value: theta on F_1 is -t^3, inverse -t^-3
  const Level& L = Level::get(1);
  CHECK(twist_scalar(L, 1, TwistSide::left) == -L.t_pow(3));
  CHECK(twist_scalar_inverse(L, 1, TwistSide::left) == -L.t_pow(-3));
  CHECK(twist_scalar(L, 0, TwistSide::left) == L.one());
}

TEST_CASE("braid on projectors shape") {
  const Level& L = Level::get(2);
  auto m = braid_on_projectors(L, 1, 1);
  CHECK(m.src().word() == std::vector<int>{1, 1});
  CHECK(m.dst().word() == std::vector<int>{1, 1});
  CHECK_FALSE(m.map().is_zero());
  // a = 0 gives the identity on F_0 x F_b
  auto m0 = braid_on_projectors(L, 0, 2);
  CHECK(m0.map() == jw(L, 2));
}

TEST_CASE("braid expansions stay in the diagram span") {
  const Level& L = Level::get(2);
  auto sig = expand_braid(L, parse_braid("s0 s1 s2^-1 s1 s0^-1", 4));
  for (const auto& [d, c] : sig.terms()) {
    CHECK(PlanarDiagram::planar(d.src(), d.dst(), d.pairing()));
    CHECK_FALSE(c.is_zero());
  }
}
