#include "tlcat/braiding.hpp"

#include <sstream>
#include <stdexcept>

namespace tlcat {

BraidWord::BraidWord(int n, std::vector<std::pair<int, int>> xs)
    : strands(n), crossings(std::move(xs)) {
  for (auto [pos, sign] : crossings) {
    if (pos < 0 || pos + 2 > strands)
      throw std::invalid_argument("crossing position out of range");
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("crossing sign must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<std::pair<int, int>> xs(crossings.rbegin(), crossings.rend());
  for (auto& [pos, sign] : xs) sign = -sign;
  return BraidWord(strands, std::move(xs));
}

BraidWord parse_braid(const std::string& text, int strands) {
  std::istringstream is(text);
  std::string tok;
  std::vector<std::pair<int, int>> xs;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("bad braid token: " + tok);
    int sign = 1;
    std::string body = tok.substr(1);
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      std::string exp = body.substr(caret + 1);
      if (exp == "-1") {
        sign = -1;
      } else if (exp == "1") {
        sign = 1;
      } else {
        throw std::invalid_argument("bad braid exponent: " + tok);
      }
      body = body.substr(0, caret);
    }
    size_t used = 0;
    int pos = std::stoi(body, &used);
    if (used != body.size())
      throw std::invalid_argument("bad braid token: " + tok);
    xs.emplace_back(pos, sign);
  }
  return BraidWord(strands, std::move(xs));
}

TLMorphism crossing(const Level& level, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("crossing sign must be +1 or -1");
  TLMorphism m(level, 2, 2);
  CycNum tp = level.t_pow(sign);
  CycNum tm = level.t_pow(-sign);
  m.add_term(PlanarDiagram::identity(2), tp);
  m.add_term(PlanarDiagram::capcup(0, 2), tm);
  return m;
}

TLMorphism expand_braid(const Level& level, const BraidWord& w) {
  TLMorphism acc = TLMorphism::identity(level, w.strands);
  for (auto [pos, sign] : w.crossings) {
    TLMorphism x =
        tensor(tensor(TLMorphism::identity(level, pos), crossing(level, sign)),
               TLMorphism::identity(level, w.strands - pos - 2));
    acc = compose(x, acc);
  }
  return acc;
}

BraidWord block_transposition(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative block size");
  if (a == 0 || b == 0) return BraidWord(a + b, {});
  if (a == 1 && b == 1) return BraidWord(2, {{0, 1}});
  if (a == 1) {
    // sigma_{1,b} = (1_1 x sigma_{1,b-1}) o (sigma_{1,1} x 1_{b-1})
    BraidWord tail = block_transposition(1, b - 1);
    std::vector<std::pair<int, int>> xs{{0, 1}};
    for (auto [pos, sign] : tail.crossings) xs.emplace_back(pos + 1, sign);
    return BraidWord(1 + b, std::move(xs));
  }
  // sigma_{a,b} = (sigma_{1,b} x 1_{a-1}) o (1_1 x sigma_{a-1,b})
  BraidWord inner = block_transposition(a - 1, b);
  std::vector<std::pair<int, int>> xs;
  for (auto [pos, sign] : inner.crossings) xs.emplace_back(pos + 1, sign);
  BraidWord first = block_transposition(1, b);
  for (auto [pos, sign] : first.crossings) xs.emplace_back(pos, sign);
  return BraidWord(a + b, std::move(xs));
}

ProjMorphism braid_on_projectors(const Level& level, int a, int b) {
  if (a < 0 || b < 0 || a + b > level.k() + 1)
    throw std::invalid_argument("braid_on_projectors: labels out of range");
  TLMorphism sigma = expand_braid(level, block_transposition(a, b));
  return ProjMorphism(ProjObject(level, {a, b}), ProjObject(level, {b, a}),
                      sigma);
}

namespace {

CycNum twist_from_word(const Level& level, int j, TwistSide side,
                       const BraidWord& word) {
  ProjObject fj(level, {j});
  if (j == 0) return level.one();
  TLMorphism sigma = expand_braid(level, word);
  auto [e, c] = eval_coev(level, j);
  const TLMorphism& eraw = e.map();
  const TLMorphism& craw = c.map();
  TLMorphism idj = TLMorphism::identity(level, j);
  TLMorphism composite(level, j, j);
  if (side == TwistSide::left) {
    // (e x 1) (1 x sigma) (c x 1)
    TLMorphism m1 = compose(tensor(idj, sigma), tensor(craw, idj));
    composite = compose(tensor(eraw, idj), m1);
  } else {
    // (1 x e) (sigma x 1) (1 x c)
    TLMorphism m1 = compose(tensor(sigma, idj), tensor(idj, craw));
    composite = compose(tensor(idj, eraw), m1);
  }
  return scalar_on_simple(ProjMorphism(fj, fj, composite));
}

}  // namespace

CycNum twist_scalar(const Level& level, int j, TwistSide side) {
  if (j < 0 || j > level.k())
    throw std::invalid_argument("twist_scalar: label out of range");
  return twist_from_word(level, j, side, block_transposition(j, j));
}

CycNum twist_scalar_inverse(const Level& level, int j, TwistSide side) {
  if (j < 0 || j > level.k())
    throw std::invalid_argument("twist_scalar: label out of range");
  return twist_from_word(level, j, side,
                         block_transposition(j, j).inverse());
}

}  // namespace tlcat
