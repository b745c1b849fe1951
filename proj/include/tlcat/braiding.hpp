#pragma once

#include <string>
#include <vector>

#include "tlcat/jones_wenzl.hpp"

namespace tlcat {

// A braid word on a fixed number of strands: elementary crossings at
// adjacent positions, listed bottom to top. sign = +1 is the overcrossing
// going left to right.
struct BraidWord {
  int strands = 0;
  std::vector<std::pair<int, int>> crossings;  // (position, sign)

  BraidWord() = default;
  BraidWord(int n, std::vector<std::pair<int, int>> xs);

  BraidWord inverse() const;
};

// Text form "s0 s1^-1 s0"; positions are 0-based.
BraidWord parse_braid(const std::string& text, int strands);

// Kauffman expansion of a single crossing on two strands:
// positive: t*id + t^{-1}*U, negative: t^{-1}*id + t*U.
TLMorphism crossing(const Level& level, int sign);

// Expands a braid word to its morphism in the diagram category, composing
// crossings bottom to top.
TLMorphism expand_braid(const Level& level, const BraidWord& w);

// The positive block transposition moving the first a strands over the
// remaining b strands, built from the hexagon-style recursions; ab
// crossings in total.
BraidWord block_transposition(int a, int b);

// The braiding F_a x F_b -> F_b x F_a obtained by sandwiching the block
// transposition between the boundary projectors.
ProjMorphism braid_on_projectors(const Level& level, int a, int b);

enum class TwistSide { left, right };

// Scalar of the twist on F_j, computed from its diagrammatic composite
// via duality and the braiding; equals (-1)^j t^{j^2+2j}.
CycNum twist_scalar(const Level& level, int j, TwistSide side);
// Scalar of the inverse twist composite (crossings reversed).
CycNum twist_scalar_inverse(const Level& level, int j, TwistSide side);

}  // namespace tlcat
