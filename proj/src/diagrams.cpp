#include "tlcat/diagrams.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tlcat {

namespace {

void check_range(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PlanarDiagram::PlanarDiagram(int src, int dst, std::vector<int> pairing)
    : src_(src), dst_(dst), pair_(std::move(pairing)) {
  check_range(src_ >= 0 && dst_ >= 0, "negative boundary count");
  if ((src_ + dst_) % 2 != 0)
    throw std::invalid_argument("odd total boundary: no perfect matching");
  if (static_cast<int>(pair_.size()) != src_ + dst_)
    throw std::invalid_argument("pairing length mismatch");
  for (int p = 0; p < src_ + dst_; ++p) {
    int q = pair_[p];
    if (q < 0 || q >= src_ + dst_ || q == p || pair_[q] != p)
      throw std::invalid_argument("pairing is not a fixed-point-free involution");
  }
  if (!planar(src_, dst_, pair_))
    throw std::invalid_argument("matching is not planar");
}

PlanarDiagram PlanarDiagram::identity(int n) {
  check_range(n >= 0, "identity: negative strand count");
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = n + i;
    p[n + i] = i;
  }
  return PlanarDiagram(n, n, std::move(p));
}

PlanarDiagram PlanarDiagram::cup(int i, int n) {
  check_range(i >= 0 && i <= n, "cup position out of range");
  std::vector<int> p(2 * n + 2);
  auto top = [&](int j) { return n + j; };  // top index j in the new diagram
  for (int b = 0; b < n; ++b) {
    int j = b < i ? b : b + 2;
    p[b] = top(j);
    p[top(j)] = b;
  }
  p[top(i)] = top(i + 1);
  p[top(i + 1)] = top(i);
  return PlanarDiagram(n, n + 2, std::move(p));
}

PlanarDiagram PlanarDiagram::cap(int i, int n) {
  check_range(i >= 0 && i <= n, "cap position out of range");
  std::vector<int> p(2 * n + 2);
  int m = n + 2;
  for (int j = 0; j < n; ++j) {
    int b = j < i ? j : j + 2;
    p[b] = m + j;
    p[m + j] = b;
  }
  p[i] = i + 1;
  p[i + 1] = i;
  return PlanarDiagram(n + 2, n, std::move(p));
}

PlanarDiagram PlanarDiagram::capcup(int i, int n) {
  check_range(i >= 0 && i + 2 <= n, "capcup position out of range");
  std::vector<int> p(2 * n);
  for (int b = 0; b < n; ++b) {
    if (b == i || b == i + 1) continue;
    p[b] = n + b;
    p[n + b] = b;
  }
  p[i] = i + 1;
  p[i + 1] = i;
  p[n + i] = n + i + 1;
  p[n + i + 1] = n + i;
  return PlanarDiagram(n, n, std::move(p));
}

PlanarDiagram PlanarDiagram::iterated_cup(int i, int m, int n) {
  check_range(m >= 1 && i >= 0 && i <= n, "iterated_cup arguments out of range");
  if (m == 1) return cup(i, n);
  return stack(iterated_cup(i + 1, m - 1, n + 2), cup(i, n)).diagram;
}

PlanarDiagram PlanarDiagram::iterated_cap(int i, int m, int n) {
  check_range(m >= 1 && i >= 0 && i <= n, "iterated_cap arguments out of range");
  if (m == 1) return cap(i, n);
  return stack(cap(i, n), iterated_cap(i + 1, m - 1, n + 2)).diagram;
}

bool PlanarDiagram::is_identity() const {
  if (src_ != dst_) return false;
  for (int i = 0; i < src_; ++i)
    if (pair_[i] != src_ + i) return false;
  return true;
}

int PlanarDiagram::through_strands() const {
  int c = 0;
  for (int i = 0; i < src_; ++i)
    if (pair_[i] >= src_) ++c;
  return c;
}

bool PlanarDiagram::planar(int src, int dst, const std::vector<int>& pairing) {
  // Boundary points in cyclic order: bottom left-to-right, then top
  // right-to-left. Non-crossing <=> nested along this circle.
  std::vector<int> cyc;
  cyc.reserve(src + dst);
  for (int i = 0; i < src; ++i) cyc.push_back(i);
  for (int j = dst - 1; j >= 0; --j) cyc.push_back(src + j);
  std::vector<int> stk;
  for (int p : cyc) {
    if (!stk.empty() && pairing[p] == stk.back()) {
      stk.pop_back();
    } else {
      stk.push_back(p);
    }
  }
  return stk.empty();
}

StackedDiagram stack(const PlanarDiagram& g, const PlanarDiagram& f) {
  if (g.src() != f.dst())
    throw std::invalid_argument("compose: shape mismatch");
  const int m = f.src(), n = f.dst(), p = g.dst();
  std::vector<int> np(m + p, -1);
  std::vector<char> seen(n, 0);

  // Walk from an external point until another external point is reached.
  // Points of f are (0,q), points of g are (1,q).
  auto trace = [&](int side, int q) {
    for (;;) {
      if (side == 0) {
        int r = f.pair(q);
        if (r < m) return r;  // bottom endpoint, external index r
        int j = r - m;
        seen[j] = 1;
        side = 1;
        q = j;
      } else {
        int r = g.pair(q);
        if (r >= n) return m + (r - n);  // top endpoint, external m+(r-n)
        seen[r] = 1;
        side = 0;
        q = m + r;
      }
    }
  };

  for (int i = 0; i < m; ++i) {
    if (np[i] != -1) continue;
    int e = trace(0, i);
    np[i] = e;
    np[e] = i;
  }
  for (int l = 0; l < p; ++l) {
    if (np[m + l] != -1) continue;
    int e = trace(1, n + l);
    np[m + l] = e;
    np[e] = m + l;
  }

  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[j]) continue;
    ++loops;
    // Trace the loop through both diagrams, marking interface points.
    int side = 0, q = m + j;
    seen[j] = 1;
    for (;;) {
      if (side == 0) {
        int r = f.pair(q);
        int j2 = r - m;
        if (j2 == j) break;
        seen[j2] = 1;
        side = 1;
        q = j2;
      } else {
        int r = g.pair(q);
        if (r == j) break;
        seen[r] = 1;
        side = 0;
        q = m + r;
      }
    }
  }
  return StackedDiagram{PlanarDiagram(m, p, std::move(np)), loops};
}

PlanarDiagram PlanarDiagram::tensor(const PlanarDiagram& o) const {
  const int m = src_ + o.src_, n = dst_ + o.dst_;
  std::vector<int> p(m + n);
  auto mine = [&](int q) {
    return q < src_ ? q : m + (q - src_);
  };
  auto theirs = [&](int q) {
    return q < o.src_ ? src_ + q : m + dst_ + (q - o.src_);
  };
  for (int q = 0; q < src_ + dst_; ++q) p[mine(q)] = mine(pair_[q]);
  for (int q = 0; q < o.src_ + o.dst_; ++q) p[theirs(q)] = theirs(o.pair_[q]);
  return PlanarDiagram(m, n, std::move(p));
}

PlanarDiagram PlanarDiagram::rotate180() const {
  auto newpt = [&](int q) {
    return q < src_ ? dst_ + (src_ - 1 - q) : dst_ - 1 - (q - src_);
  };
  std::vector<int> p(src_ + dst_);
  for (int q = 0; q < src_ + dst_; ++q) p[newpt(q)] = newpt(pair_[q]);
  return PlanarDiagram(dst_, src_, std::move(p));
}

int PlanarDiagram::closure_loops() const {
  if (src_ != dst_)
    throw std::invalid_argument("trace closure requires equal source/target");
  const int n = src_;
  std::vector<char> seen(2 * n, 0);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int q = s;
    while (!seen[q]) {
      seen[q] = 1;
      int r = pair_[q];
      seen[r] = 1;
      q = r < n ? r + n : r - n;  // closure joins bottom i to top i
    }
  }
  return loops;
}

std::string PlanarDiagram::str() const {
  std::ostringstream os;
  os << src_ << "->" << dst_ << ":";
  for (int q = 0; q < src_ + dst_; ++q) {
    if (pair_[q] > q) os << "(" << q << "-" << pair_[q] << ")";
  }
  return os.str();
}

namespace {

using PairList = std::vector<std::pair<int, int>>;

// All non-crossing matchings of cyc[lo..hi]: cyc[lo] pairs with cyc[j] at
// odd offset, splitting the rest into independent inside/outside arcs.
std::vector<PairList> match_range(const std::vector<int>& cyc, int lo,
                                  int hi) {
  if (lo > hi) return {PairList{}};
  std::vector<PairList> out;
  for (int j = lo + 1; j <= hi; j += 2) {
    auto inner = match_range(cyc, lo + 1, j - 1);
    auto outer = match_range(cyc, j + 1, hi);
    for (const auto& in : inner) {
      for (const auto& ou : outer) {
        PairList m;
        m.reserve(in.size() + ou.size() + 1);
        m.emplace_back(cyc[lo], cyc[j]);
        m.insert(m.end(), in.begin(), in.end());
        m.insert(m.end(), ou.begin(), ou.end());
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<PlanarDiagram>& basis(int m, int n) {
  static std::map<std::pair<int, int>, std::vector<PlanarDiagram>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<PlanarDiagram> result;
  if ((m + n) % 2 == 0) {
    std::vector<int> cyc;
    for (int i = 0; i < m; ++i) cyc.push_back(i);
    for (int j = n - 1; j >= 0; --j) cyc.push_back(m + j);
    auto raw = match_range(cyc, 0, m + n - 1);
    result.reserve(raw.size());
    for (const auto& pl : raw) {
      std::vector<int> pairing(m + n, -1);
      for (auto [a, b] : pl) {
        pairing[a] = b;
        pairing[b] = a;
      }
      result.emplace_back(m, n, std::move(pairing));
    }
    std::sort(result.begin(), result.end());
  }
  return cache.emplace(key, std::move(result)).first->second;
}

TLMorphism::TLMorphism(const Level& level, int src, int dst)
    : level_(&level), src_(src), dst_(dst) {
  if (src < 0 || dst < 0) throw std::invalid_argument("negative boundary");
}

TLMorphism TLMorphism::from_diagram(const Level& level,
                                    const PlanarDiagram& d) {
  return from_diagram(level, d, level.one());
}

TLMorphism TLMorphism::from_diagram(const Level& level, const PlanarDiagram& d,
                                    const CycNum& coeff) {
  TLMorphism f(level, d.src(), d.dst());
  f.add_term(d, coeff);
  return f;
}

TLMorphism TLMorphism::identity(const Level& level, int n) {
  return from_diagram(level, PlanarDiagram::identity(n));
}

TLMorphism& TLMorphism::add_term(const PlanarDiagram& d, const CycNum& c) {
  if (d.src() != src_ || d.dst() != dst_)
    throw std::invalid_argument("add_term: diagram shape mismatch");
  if (c.is_zero()) return *this;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

TLMorphism TLMorphism::operator+(const TLMorphism& o) const {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("sum: shape mismatch");
  TLMorphism r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

TLMorphism TLMorphism::operator-(const TLMorphism& o) const {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("difference: shape mismatch");
  TLMorphism r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
  return r;
}

TLMorphism TLMorphism::operator-() const {
  TLMorphism r(*level_, src_, dst_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

TLMorphism TLMorphism::scaled(const CycNum& c) const {
  TLMorphism r(*level_, src_, dst_);
  if (c.is_zero()) return r;
  for (const auto& [d, x] : terms_) r.terms_.emplace(d, x * c);
  return r;
}

bool TLMorphism::operator==(const TLMorphism& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && terms_ == o.terms_;
}

CycNum TLMorphism::markov_trace() const {
  if (src_ != dst_)
    throw std::invalid_argument("markov_trace: shape mismatch");
  CycNum acc = level_->zero();
  for (const auto& [d, c] : terms_) {
    acc += c * level_->delta().pow(d.closure_loops());
  }
  return acc;
}

TLMorphism TLMorphism::rotate180() const {
  TLMorphism r(*level_, dst_, src_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d.rotate180(), c);
  return r;
}

CycNum TLMorphism::coeff(const PlanarDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? level_->zero() : it->second;
}

std::string TLMorphism::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << d.str();
  }
  return os.str();
}

TLMorphism compose(const TLMorphism& g, const TLMorphism& f) {
  if (g.src() != f.dst())
    throw std::invalid_argument("compose: shape mismatch");
  const Level& L = f.level();
  TLMorphism r(L, f.src(), g.dst());
  std::vector<CycNum> delta_pow{L.one()};
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto s = stack(dg, df);
      while (static_cast<int>(delta_pow.size()) <= s.loops)
        delta_pow.push_back(delta_pow.back() * L.delta());
      r.add_term(s.diagram, cf * cg * delta_pow[s.loops]);
    }
  }
  return r;
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  const Level& L = f.level();
  TLMorphism r(L, f.src() + g.src(), f.dst() + g.dst());
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      r.add_term(df.tensor(dg), cf * cg);
    }
  }
  return r;
}

}  // namespace tlcat
