#include "tlcat/scalars.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace tlcat {

namespace {

// Integer polynomials, little-endian coefficients, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must vanish.
ZPoly zdiv_exact(const ZPoly& num, const ZPoly& den) {
  ZPoly r = num;
  ZPoly q(num.size(), mpz_class(0));
  while (r.size() >= den.size() && !r.empty()) {
    mpz_class c = r.back() / den.back();
    size_t shift = r.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) r[shift + i] -= c * den[i];
    ztrim(r);
  }
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  ztrim(q);
  return q;
}

const ZPoly& cyclotomic(int n) {
  static std::map<int, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::function<const ZPoly&(int)> phi = [&](int m) -> const ZPoly& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    ZPoly num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) num = zdiv_exact(num, phi(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return phi(n);
}

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
QPoly qmod(QPoly p, const ZPoly& m) {
  qtrim(p);
  while (p.size() >= m.size()) {
    mpq_class c = p.back();
    size_t shift = p.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) p[shift + i] -= c * mpq_class(m[i]);
    qtrim(p);
  }
  return p;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Runs the Euclidean algorithm on (a, b) tracking the Bezout coefficient
// of b, so the result (g, u) satisfies u*b = g modulo a.
std::pair<QPoly, QPoly> half_ext_gcd(QPoly a, QPoly b) {
  QPoly u0{}, u1{mpq_class(1)};
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    // divide a by b
    QPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
    QPoly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      mpq_class c = r.back() / b.back();
      size_t shift = r.size() - b.size();
      q[shift] = c;
      for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      qtrim(r);
    }
    qtrim(q);
    QPoly u2 = u0;
    QPoly qu = qmul(q, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), mpq_class(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    qtrim(u2);
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {a, u0};
}

}  // namespace

LevelParams make_params(int k) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  return LevelParams{k, 4 * k + 8};
}

CycField::CycField(int order) : order_(order) {
  const ZPoly& phi = cyclotomic(order);
  phi_ = phi;
  degree_ = static_cast<int>(phi.size()) - 1;
  // Precompute x^(degree+j) reduced, j = 0 .. degree-2.
  xpow_.reserve(degree_ > 1 ? degree_ - 1 : 0);
  QPoly cur(degree_ + 1, mpq_class(0));
  cur[degree_] = 1;
  for (int j = 0; j + 2 <= degree_; ++j) {
    QPoly red = qmod(cur, phi_);
    red.resize(degree_, mpq_class(0));
    xpow_.push_back(red);
    // multiply by x
    cur = qmod(cur, phi_);
    cur.insert(cur.begin(), mpq_class(0));
  }
}

const CycField& CycField::get(int order) {
  static std::map<int, std::unique_ptr<CycField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, std::unique_ptr<CycField>(new CycField(order)))
             .first;
  }
  return *it->second;
}

CycNum CycField::zero() const {
  return CycNum(this, std::vector<mpq_class>(degree_, mpq_class(0)));
}

CycNum CycField::one() const { return from_int(1); }

CycNum CycField::from_int(long v) const {
  std::vector<mpq_class> c(degree_, mpq_class(0));
  c[0] = v;
  return CycNum(this, std::move(c));
}

CycNum CycField::from_rational(const mpq_class& v) const {
  std::vector<mpq_class> c(degree_, mpq_class(0));
  c[0] = v;
  c[0].canonicalize();
  return CycNum(this, std::move(c));
}

CycNum CycField::root_power(long e) const {
  long r = e % order_;
  if (r < 0) r += order_;
  QPoly p(r + 1, mpq_class(0));
  p[r] = 1;
  QPoly red = qmod(std::move(p), phi_);
  red.resize(degree_, mpq_class(0));
  return CycNum(this, std::move(red));
}

const CycField& CycNum::field() const {
  if (!field_) throw std::logic_error("use of uninitialized CycNum");
  return *field_;
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return CycNum(field_, std::move(r));
}

CycNum CycNum::operator+(const CycNum& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return CycNum(field_, std::move(r));
}

CycNum CycNum::operator-(const CycNum& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return CycNum(field_, std::move(r));
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  const int d = field_->degree_;
  // fast path: rational scalar on either side
  auto scale = [&](const CycNum& v, const mpq_class& s) {
    std::vector<mpq_class> r(v.c_.size());
    for (size_t i = 0; i < v.c_.size(); ++i) r[i] = v.c_[i] * s;
    return CycNum(field_, std::move(r));
  };
  if (is_rational()) return scale(o, c_[0]);
  if (o.is_rational()) return scale(*this, o.c_[0]);

  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<mpq_class> r(prod.begin(), prod.begin() + d);
  for (int j = 0; j + 2 <= d; ++j) {
    const mpq_class& hi = prod[d + j];
    if (hi == 0) continue;
    const auto& red = field_->xpow_[j];
    for (int i = 0; i < d; ++i) {
      if (red[i] != 0) r[i] += hi * red[i];
    }
  }
  return CycNum(field_, std::move(r));
}

bool CycNum::operator==(const CycNum& o) const {
  if (field_ != o.field_) return false;
  return c_ == o.c_;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(t)");
  if (is_rational())
    return field_->from_rational(mpq_class(1) / c_[0]);
  QPoly a(c_.begin(), c_.end());
  QPoly m(field_->phi_.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = mpq_class(field_->phi_[i]);
  auto [g, u] = half_ext_gcd(m, a);
  // gcd taken against the modulus first, so u satisfies u*a = g (mod m)
  if (g.size() != 1)
    throw std::logic_error("cyclotomic modulus not coprime to element");
  mpq_class ginv = mpq_class(1) / g[0];
  QPoly red = qmod(std::move(u), field_->phi_);
  red.resize(field_->degree_, mpq_class(0));
  for (auto& x : red) x *= ginv;
  return CycNum(field_, std::move(red));
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum acc = field_->one();
  CycNum base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

CycNum CycNum::conj() const {
  CycNum acc = field_->zero();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    acc = acc + field_->from_rational(c_[i]) *
                    field_->root_power(-static_cast<long>(i));
  }
  return acc;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> z(0.0, 0.0);
  const double theta = 2.0 * std::numbers::pi / field_->order_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double v = c_[i].get_d();
    z += v * std::polar(1.0, theta * static_cast<double>(i));
  }
  return z;
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

std::vector<std::string> CycNum::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    out.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
  }
  return out;
}

CycNum operator*(long s, const CycNum& a) {
  std::vector<mpq_class> r(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
  return CycNum(a.field_, std::move(r));
}

Level::Level(int k) : params_(make_params(k)) {
  field_ = &CycField::get(params_.N);
  t_ = field_->root_power(1);
  q_ = field_->root_power(2);
  delta_ = -(field_->root_power(2) + field_->root_power(-2));
}

const Level& Level::get(int k) {
  static std::map<int, std::unique_ptr<Level>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) {
    it = cache.emplace(k, std::unique_ptr<Level>(new Level(k))).first;
  }
  return *it->second;
}

CycNum Level::qint(int i) const {
  if (i < 0) throw std::invalid_argument("quantum integer index must be >= 0");
  CycNum two_ = q_ + field_->root_power(-2);  // [2]
  CycNum prev = field_->zero();               // [0]
  if (i == 0) return prev;
  CycNum cur = field_->one();  // [1]
  for (int j = 1; j < i; ++j) {
    CycNum next = two_ * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CycNum Level::rational(long num, long den) const {
  mpq_class v(num, den);
  v.canonicalize();
  return field_->from_rational(v);
}

}  // namespace tlcat
