#pragma once

#include <utility>
#include <vector>

#include "tlcat/diagrams.hpp"

namespace tlcat {

// The i-th Jones-Wenzl projector f_i, built by the Wenzl recursion
//   f_i = f_{i-1} x 1 + ([i-1]/[i]) (f_{i-1} x 1) U_{i-1} (f_{i-1} x 1).
// Valid for 0 <= i <= k+1; beyond that the recursion would divide by
// [k+2] = 0. Results are cached per level.
const TLMorphism& jw(const Level& level, int i);

// Prop-style annihilation: f_n kills every elementary cup from below and
// every elementary cap from above. Requires 0 <= i <= n-2.
bool check_jw_annihilation(const Level& level, int n, int i);
// Sweep over all valid cap/cup positions; vacuously true for n < 2.
bool check_jw_annihilation_all(const Level& level, int n);

// Closes j of the n+j strands of f_{n+j} back onto themselves:
// cap_{n,j,n} (f_{n+j} x 1^j) cup_{n,j,n} : n -> n. Equals
// (-1)^j ([n+j+1]/[n+1]) f_n.
TLMorphism partial_close(const Level& level, int n, int j);

// A tensor word of projector labels F_{w0} x F_{w1} x ... in the
// idempotent completion. Labels up to k are quotient objects; the label
// k+1 is allowed only for pre-quotient computations.
class ProjObject {
 public:
  ProjObject(const Level& level, std::vector<int> word);

  const Level& level() const { return *level_; }
  const std::vector<int>& word() const { return word_; }
  int strands() const { return strands_; }
  // f_{w0} x f_{w1} x ...
  TLMorphism projector() const;

  ProjObject tensor(const ProjObject& o) const;
  // Dual object: the reversed word.
  ProjObject dual() const;

  bool operator==(const ProjObject& o) const {
    return level_ == o.level_ && word_ == o.word_;
  }

 private:
  const Level* level_;
  std::vector<int> word_;
  int strands_;
};

// A morphism between idempotent-completion objects, stored in the
// sandwich-absorbed form dst.projector() o map o src.projector() = map.
class ProjMorphism {
 public:
  // Sandwiches raw with the boundary projectors.
  ProjMorphism(ProjObject src, ProjObject dst, const TLMorphism& raw);

  static ProjMorphism id(const ProjObject& x);
  static ProjMorphism zero(const ProjObject& src, const ProjObject& dst);

  const ProjObject& src() const { return src_; }
  const ProjObject& dst() const { return dst_; }
  const TLMorphism& map() const { return map_; }

  ProjMorphism operator+(const ProjMorphism& o) const;
  ProjMorphism operator-(const ProjMorphism& o) const;
  ProjMorphism scaled(const CycNum& c) const;
  // Rotation by 180 degrees: the dual morphism dual(dst) -> dual(src).
  ProjMorphism dual() const;

  bool operator==(const ProjMorphism& o) const;

 private:
  ProjMorphism(ProjObject src, ProjObject dst, TLMorphism map, bool);

  ProjObject src_, dst_;
  TLMorphism map_;

  friend ProjMorphism compose(const ProjMorphism&, const ProjMorphism&);
  friend ProjMorphism tensor(const ProjMorphism&, const ProjMorphism&);
};

ProjMorphism compose(const ProjMorphism& g, const ProjMorphism& f);
ProjMorphism tensor(const ProjMorphism& f, const ProjMorphism& g);

// Splitting maps through the fused projector: iota: F_{i+j} -> F_i x F_j
// and pi: F_i x F_j -> F_{i+j}; both have underlying map f_{i+j} and
// satisfy pi o iota = id.
ProjMorphism iota(const Level& level, int i, int j);
ProjMorphism pi(const Level& level, int i, int j);

// Quotient-zero test by exhaustive trace pairing: f vanishes in the
// reduced category iff markov_trace(h o f.map) = 0 for every basis
// diagram h: dst.strands -> src.strands. Exact and complete, but the
// basis is Catalan-sized; intended for morphisms with few strands.
bool is_negligible(const ProjMorphism& f);

// For an endomorphism of a simple object X, the scalar lambda with
// f = lambda * id_X in the quotient, extracted as a trace ratio and then
// verified by a negligibility check on f - lambda * id.
CycNum scalar_on_simple(const ProjMorphism& f);

// Self-duality data of F_i: evaluation e_i: F_i x F_i -> 1 by nested caps
// and coevaluation c_i: 1 -> F_i x F_i by nested cups.
std::pair<ProjMorphism, ProjMorphism> eval_coev(const Level& level, int i);

// Dimension of Hom(X, Y) in the quotient, computed as the rank of the
// Gram matrix of the trace pairing on sandwiched basis diagrams.
int quotient_hom_rank(const ProjObject& x, const ProjObject& y);

}  // namespace tlcat
