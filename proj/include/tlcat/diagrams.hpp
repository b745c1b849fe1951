#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tlcat/scalars.hpp"

namespace tlcat {

// A non-crossing perfect matching between m bottom and n top boundary
// points of a rectangle. Points are numbered 0..m-1 along the bottom
// (left to right) and m..m+n-1 along the top (left to right). The matching
// is stored as an involution array; loops are never stored (composition
// converts them to powers of delta).
class PlanarDiagram {
 public:
  PlanarDiagram(int src, int dst, std::vector<int> pairing);

  static PlanarDiagram empty() { return identity(0); }
  static PlanarDiagram identity(int n);
  // U_{i,n}: n -> n+2, new cup between top points i and i+1, 0 <= i <= n.
  static PlanarDiagram cup(int i, int n);
  // cap_{i,n}: n+2 -> n, joins bottom points i and i+1, 0 <= i <= n.
  static PlanarDiagram cap(int i, int n);
  // U_i on n strands: cap at (i,i+1) then cup at (i,i+1); 0 <= i <= n-2.
  static PlanarDiagram capcup(int i, int n);
  // Iterated nested cups: n -> n+2m, and caps: n+2m -> n.
  static PlanarDiagram iterated_cup(int i, int m, int n);
  static PlanarDiagram iterated_cap(int i, int m, int n);

  int src() const { return src_; }
  int dst() const { return dst_; }
  int points() const { return src_ + dst_; }
  int pair(int p) const { return pair_[p]; }
  const std::vector<int>& pairing() const { return pair_; }
  bool is_identity() const;
  // Number of bottom-to-top strands.
  int through_strands() const;

  static bool planar(int src, int dst, const std::vector<int>& pairing);

  PlanarDiagram tensor(const PlanarDiagram& other) const;
  PlanarDiagram rotate180() const;
  // Loops formed when bottom point i is closed onto top point i around the
  // right side; requires src == dst.
  int closure_loops() const;

  auto operator<=>(const PlanarDiagram& o) const = default;

  // Compact text form, e.g. "(0-1)(2-5)(3-4)" with global point numbers.
  std::string str() const;

 private:
  int src_, dst_;
  std::vector<int> pair_;
};

struct StackedDiagram {
  PlanarDiagram diagram;
  int loops;
};

// Vertical stacking g after f (f: m->n, g: n->p), tracing strands and
// counting the closed loops that are removed.
StackedDiagram stack(const PlanarDiagram& g, const PlanarDiagram& f);

// All non-crossing perfect matchings m -> n, ordered lexicographically by
// involution array. Cached; the parity-odd case yields the empty list.
const std::vector<PlanarDiagram>& basis(int m, int n);

// A finite formal linear combination of planar diagrams with a common
// source and target: a morphism of the linearized diagram category with
// loops evaluated to delta. Canonical form: zero coefficients are dropped
// and terms are keyed by the matching, so equality is structural.
class TLMorphism {
 public:
  TLMorphism(const Level& level, int src, int dst);

  static TLMorphism from_diagram(const Level& level, const PlanarDiagram& d);
  static TLMorphism from_diagram(const Level& level, const PlanarDiagram& d,
                                 const CycNum& coeff);
  static TLMorphism identity(const Level& level, int n);

  const Level& level() const { return *level_; }
  int src() const { return src_; }
  int dst() const { return dst_; }
  const std::map<PlanarDiagram, CycNum>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  TLMorphism& add_term(const PlanarDiagram& d, const CycNum& c);

  TLMorphism operator+(const TLMorphism& o) const;
  TLMorphism operator-(const TLMorphism& o) const;
  TLMorphism operator-() const;
  TLMorphism scaled(const CycNum& c) const;

  bool operator==(const TLMorphism& o) const;
  bool operator!=(const TLMorphism& o) const { return !(*this == o); }

  // Closes strand i on the bottom to strand i on the top around the right;
  // requires src == dst. Returns the scalar multiple of the empty diagram.
  CycNum markov_trace() const;

  TLMorphism rotate180() const;

  // Coefficient of a given diagram (zero if absent).
  CycNum coeff(const PlanarDiagram& d) const;

  std::string str() const;

 private:
  const Level* level_;
  int src_, dst_;
  std::map<PlanarDiagram, CycNum> terms_;
};

// g after f; bilinear, removing loops as factors of delta.
TLMorphism compose(const TLMorphism& g, const TLMorphism& f);
// Horizontal juxtaposition.
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);

}  // namespace tlcat
