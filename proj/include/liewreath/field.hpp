#ifndef LIEWREATH_FIELD_HPP
#define LIEWREATH_FIELD_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace liewreath {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ground field: the rationals, or a prime field F_p. All arithmetic is
// exact; there is no floating point anywhere in the engine.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  unsigned long p = 0;  // modulus, 0 when rationals

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(unsigned long p);
  // "Q" or "Fp:<p>"
  static FieldSpec parse(const std::string& text);
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;
};

// Exact field element. Rationals are arbitrary-precision, kept canonical
// (lowest terms); prime-field values are residues in [0, p). Every value
// carries its field so mixed-field arithmetic is caught immediately.
class Scalar {
 public:
  Scalar() : v_(0) {}  // rational zero
  static Scalar zero(const FieldSpec& f) { return Scalar(mpq_class(0), f); }
  static Scalar one(const FieldSpec& f) { return of_long(1, f); }
  static Scalar of_long(long n, const FieldSpec& f);
  // "n" or "n/d"
  static Scalar parse(const std::string& text, const FieldSpec& f);

  const FieldSpec& field() const { return f_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return v_ == o.v_ && f_ == o.f_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "3", "-3/4", or the residue for prime fields
  std::string str() const { return v_.get_str(); }

 private:
  Scalar(mpq_class v, const FieldSpec& f) : v_(std::move(v)), f_(f) {}
  void reduce_();
  void check_(const Scalar& o) const {
    if (!(f_ == o.f_)) throw FieldError("scalar field mismatch");
  }
  mpq_class v_;
  FieldSpec f_;
};

}  // namespace liewreath

#endif
