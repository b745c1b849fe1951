#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlcat {

// Level parameters: level k >= 1; t is a primitive N-th root of unity with
// N = 4k + 8, q = t^2, and the loop value is delta = -q - q^{-1}.
struct LevelParams {
  int k = 0;
  int N = 0;
};

LevelParams make_params(int k);

class CycNum;

// The ring Q[x]/Phi_N(x), Phi_N the N-th cyclotomic polynomial. Since Phi_N
// is irreducible over Q this is a field; the class of x is a primitive N-th
// root of unity. Instances are interned per N and live forever, so raw
// pointers to them are always valid.
class CycField {
 public:
  static const CycField& get(int order);

  int order() const { return order_; }    // multiplicative order of x
  int degree() const { return degree_; }  // deg Phi_N = phi(N)

  CycNum zero() const;
  CycNum one() const;
  CycNum from_int(long v) const;
  CycNum from_rational(const mpq_class& v) const;
  // x^e for any integer e (reduced mod N).
  CycNum root_power(long e) const;

  const std::vector<mpz_class>& modulus() const { return phi_; }

 private:
  explicit CycField(int order);

  int order_;
  int degree_;
  std::vector<mpz_class> phi_;  // monic, length degree_+1
  // x^(degree_+j) reduced, for j = 0 .. degree_-2
  std::vector<std::vector<mpq_class>> xpow_;

  friend class CycNum;
};

// An exact element of Q(t): the reduced representative of a polynomial in
// the root of unity. Immutable value type; all operations are pure.
class CycNum {
 public:
  CycNum() : field_(nullptr) {}

  const CycField& field() const;
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  // nonzero and of degree zero, i.e. a rational number
  bool is_rational() const;
  const mpq_class& coeff(int i) const { return c_[i]; }

  CycNum operator-() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const { return *this * o.inv(); }
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Multiplicative inverse; throws std::domain_error on zero (which signals
  // an illegal quantum-integer denominator upstream).
  CycNum inv() const;

  // e may be negative; x^(-1) is computed via the field inverse.
  CycNum pow(long e) const;

  // The field automorphism x -> x^{-1} (complex conjugation on the
  // standard embedding).
  CycNum conj() const;

  // Numeric embedding with x -> exp(2*pi*i/N); display/diagnostics only,
  // never used in any exact computation.
  std::complex<double> approx() const;

  std::string str() const;
  // Exact coefficient vector as a list of "num/den" strings.
  std::vector<std::string> coeff_strings() const;

  friend CycNum operator*(long s, const CycNum& a);

 private:
  CycNum(const CycField* f, std::vector<mpq_class> c)
      : field_(f), c_(std::move(c)) {}

  const CycField* field_;
  std::vector<mpq_class> c_;  // length field_->degree()

  friend class CycField;
};

CycNum operator*(long s, const CycNum& a);

// Context for a fixed level: the field, the distinguished scalars and the
// quantum integers. Interned per k; references remain valid forever.
class Level {
 public:
  static const Level& get(int k);

  const LevelParams& params() const { return params_; }
  int k() const { return params_.k; }
  const CycField& field() const { return *field_; }

  CycNum t() const { return t_; }
  CycNum q() const { return q_; }
  CycNum delta() const { return delta_; }
  CycNum t_pow(long e) const { return field_->root_power(e); }

  // The i-th quantum integer [i] = (q^i - q^{-i})/(q - q^{-1}), computed by
  // the Chebyshev recurrence [i+1] = [2][i] - [i-1]. Total for all i >= 0;
  // vanishes exactly at i = 0 and i = k+2.
  CycNum qint(int i) const;

  CycNum zero() const { return field_->zero(); }
  CycNum one() const { return field_->one(); }
  CycNum scalar(long v) const { return field_->from_int(v); }
  CycNum rational(long num, long den) const;

 private:
  explicit Level(int k);
  Level(const Level&) = delete;
  Level& operator=(const Level&) = delete;

  LevelParams params_;
  const CycField* field_;
  CycNum t_, q_, delta_;
};

}  // namespace tlcat
