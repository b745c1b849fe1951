#include "tlcat/jones_wenzl.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "tlcat/linalg.hpp"

namespace tlcat {

const TLMorphism& jw(const Level& level, int i) {
  if (i < 0) throw std::invalid_argument("jw: negative index");
  if (i > level.k() + 1)
    throw std::invalid_argument(
        "jw: index exceeds k+1, the Wenzl recursion divides by zero");

  static std::map<std::pair<int, int>, TLMorphism> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(level.k(), i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::function<const TLMorphism&(int)> build =
      [&](int n) -> const TLMorphism& {
    auto k2 = std::make_pair(level.k(), n);
    auto found = cache.find(k2);
    if (found != cache.end()) return found->second;
    TLMorphism f(level, n, n);
    if (n == 0) {
      f.add_term(PlanarDiagram::empty(), level.one());
    } else if (n == 1) {
      f.add_term(PlanarDiagram::identity(1), level.one());
    } else {
      const TLMorphism& prev = build(n - 1);
      TLMorphism side = tensor(prev, TLMorphism::identity(level, 1));
      TLMorphism u =
          TLMorphism::from_diagram(level, PlanarDiagram::capcup(n - 2, n));
      CycNum c = level.qint(n - 1) / level.qint(n);
      f = side + compose(side, compose(u, side)).scaled(c);
    }
    return cache.emplace(k2, std::move(f)).first->second;
  };
  return build(i);
}

bool check_jw_annihilation(const Level& level, int n, int i) {
  if (n < 2 || i < 0 || i > n - 2)
    throw std::invalid_argument("annihilation check: index out of range");
  const TLMorphism& f = jw(level, n);
  auto cup = TLMorphism::from_diagram(level, PlanarDiagram::cup(i, n - 2));
  auto cap = TLMorphism::from_diagram(level, PlanarDiagram::cap(i, n - 2));
  return compose(f, cup).is_zero() && compose(cap, f).is_zero();
}

bool check_jw_annihilation_all(const Level& level, int n) {
  for (int i = 0; i + 2 <= n; ++i) {
    if (!check_jw_annihilation(level, n, i)) return false;
  }
  return true;
}

TLMorphism partial_close(const Level& level, int n, int j) {
  if (j < 1 || n < 0 || n + j > level.k() + 1)
    throw std::invalid_argument("partial_close: arguments out of range");
  auto cups = TLMorphism::from_diagram(
      level, PlanarDiagram::iterated_cup(n, j, n));
  auto caps = TLMorphism::from_diagram(
      level, PlanarDiagram::iterated_cap(n, j, n));
  TLMorphism mid =
      tensor(jw(level, n + j), TLMorphism::identity(level, j));
  return compose(caps, compose(mid, cups));
}

ProjObject::ProjObject(const Level& level, std::vector<int> word)
    : level_(&level), word_(std::move(word)) {
  strands_ = 0;
  for (int w : word_) {
    if (w < 0 || w > level.k() + 1)
      throw std::invalid_argument("projector label out of range");
    strands_ += w;
  }
}

TLMorphism ProjObject::projector() const {
  TLMorphism p = TLMorphism::identity(*level_, 0);
  for (int w : word_) p = tlcat::tensor(p, jw(*level_, w));
  return p;
}

ProjObject ProjObject::tensor(const ProjObject& o) const {
  std::vector<int> w = word_;
  w.insert(w.end(), o.word_.begin(), o.word_.end());
  return ProjObject(*level_, std::move(w));
}

ProjObject ProjObject::dual() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return ProjObject(*level_, std::move(w));
}

ProjMorphism::ProjMorphism(ProjObject src, ProjObject dst,
                           const TLMorphism& raw)
    : src_(std::move(src)), dst_(std::move(dst)),
      map_(compose(dst_.projector(), compose(raw, src_.projector()))) {
  if (raw.src() != src_.strands() || raw.dst() != dst_.strands())
    throw std::invalid_argument("projected morphism: strand mismatch");
}

ProjMorphism::ProjMorphism(ProjObject src, ProjObject dst, TLMorphism map,
                           bool)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {}

ProjMorphism ProjMorphism::id(const ProjObject& x) {
  return ProjMorphism(x, x, x.projector(), true);
}

ProjMorphism ProjMorphism::zero(const ProjObject& src,
                                const ProjObject& dst) {
  return ProjMorphism(src, dst,
                      TLMorphism(src.level(), src.strands(), dst.strands()),
                      true);
}

ProjMorphism ProjMorphism::operator+(const ProjMorphism& o) const {
  if (!(src_ == o.src_) || !(dst_ == o.dst_))
    throw std::invalid_argument("sum of morphisms with different objects");
  return ProjMorphism(src_, dst_, map_ + o.map_, true);
}

ProjMorphism ProjMorphism::operator-(const ProjMorphism& o) const {
  if (!(src_ == o.src_) || !(dst_ == o.dst_))
    throw std::invalid_argument("difference with different objects");
  return ProjMorphism(src_, dst_, map_ - o.map_, true);
}

ProjMorphism ProjMorphism::scaled(const CycNum& c) const {
  return ProjMorphism(src_, dst_, map_.scaled(c), true);
}

ProjMorphism ProjMorphism::dual() const {
  return ProjMorphism(dst_.dual(), src_.dual(), map_.rotate180(), true);
}

bool ProjMorphism::operator==(const ProjMorphism& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && map_ == o.map_;
}

ProjMorphism compose(const ProjMorphism& g, const ProjMorphism& f) {
  if (!(g.src() == f.dst()))
    throw std::invalid_argument("compose: object mismatch");
  return ProjMorphism(f.src(), g.dst(), compose(g.map(), f.map()), true);
}

ProjMorphism tensor(const ProjMorphism& f, const ProjMorphism& g) {
  return ProjMorphism(f.src().tensor(g.src()), f.dst().tensor(g.dst()),
                      tensor(f.map(), g.map()), true);
}

ProjMorphism iota(const Level& level, int i, int j) {
  if (i < 0 || j < 0 || i + j > level.k() + 1)
    throw std::invalid_argument("iota: labels out of range");
  return ProjMorphism(ProjObject(level, {i + j}), ProjObject(level, {i, j}),
                      jw(level, i + j));
}

ProjMorphism pi(const Level& level, int i, int j) {
  if (i < 0 || j < 0 || i + j > level.k() + 1)
    throw std::invalid_argument("pi: labels out of range");
  return ProjMorphism(ProjObject(level, {i, j}), ProjObject(level, {i + j}),
                      jw(level, i + j));
}

bool is_negligible(const ProjMorphism& f) {
  if (f.map().is_zero()) return true;
  const Level& L = f.src().level();
  for (const auto& h : basis(f.dst().strands(), f.src().strands())) {
    TLMorphism probe = TLMorphism::from_diagram(L, h);
    if (!compose(probe, f.map()).markov_trace().is_zero()) return false;
  }
  return true;
}

CycNum scalar_on_simple(const ProjMorphism& f) {
  if (!(f.src() == f.dst()))
    throw std::invalid_argument("scalar extraction needs an endomorphism");
  TLMorphism p = f.src().projector();
  CycNum dim = p.markov_trace();
  if (dim.is_zero())
    throw std::invalid_argument("object has vanishing trace, no scalar form");
  CycNum lambda = f.map().markov_trace() / dim;
  ProjMorphism defect =
      f - ProjMorphism::id(f.src()).scaled(lambda);
  if (!is_negligible(defect))
    throw std::logic_error(
        "endomorphism is not scalar in the quotient: object not simple");
  return lambda;
}

std::pair<ProjMorphism, ProjMorphism> eval_coev(const Level& level, int i) {
  if (i < 0 || i > level.k())
    throw std::invalid_argument("eval_coev: label out of range");
  ProjObject one(level, {});
  ProjObject xx(level, {i, i});
  TLMorphism caps = i == 0
                        ? TLMorphism::identity(level, 0)
                        : TLMorphism::from_diagram(
                              level, PlanarDiagram::iterated_cap(0, i, 0));
  TLMorphism cups = i == 0
                        ? TLMorphism::identity(level, 0)
                        : TLMorphism::from_diagram(
                              level, PlanarDiagram::iterated_cup(0, i, 0));
  ProjMorphism e(xx, one, caps);
  ProjMorphism c(one, xx, cups);
  return {e, c};
}

int quotient_hom_rank(const ProjObject& x, const ProjObject& y) {
  const Level& L = x.level();
  if ((x.strands() + y.strands()) % 2 != 0) return 0;
  TLMorphism px = x.projector();
  TLMorphism py = y.projector();
  const auto& fwd = basis(x.strands(), y.strands());
  const auto& bwd = basis(y.strands(), x.strands());
  std::vector<TLMorphism> span;
  span.reserve(fwd.size());
  for (const auto& d : fwd) {
    span.push_back(
        compose(py, compose(TLMorphism::from_diagram(L, d), px)));
  }
  std::vector<TLMorphism> tests;
  tests.reserve(bwd.size());
  for (const auto& d : bwd) {
    tests.push_back(TLMorphism::from_diagram(L, d));
  }
  Mat gram(L.field(), static_cast<int>(tests.size()),
           static_cast<int>(span.size()));
  for (size_t i = 0; i < tests.size(); ++i) {
    for (size_t j = 0; j < span.size(); ++j) {
      gram.at(static_cast<int>(i), static_cast<int>(j)) =
          compose(tests[i], span[j]).markov_trace();
    }
  }
  return gram.rank();
}

}  // namespace tlcat
