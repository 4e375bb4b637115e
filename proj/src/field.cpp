#include "liewreath/field.hpp"

namespace liewreath {

FieldSpec FieldSpec::prime(unsigned long p) {
  mpz_class m(p);
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return prime(std::stoul(text.substr(3)));
    } catch (const std::invalid_argument&) {
      throw FieldError("bad field spec '" + text + "'");
    } catch (const std::out_of_range&) {
      throw FieldError("bad field spec '" + text + "'");
    }
  }
  throw FieldError("bad field spec '" + text + "' (want Q or Fp:<p>)");
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p);
}

Scalar Scalar::of_long(long n, const FieldSpec& f) {
  Scalar s(mpq_class(n), f);
  s.reduce_();
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw FieldError("bad scalar '" + text + "'");
  v.canonicalize();
  if (f.kind == FieldSpec::Kind::PrimeField && v.get_den() != 1) {
    // n/d over F_p: multiply by the inverse of d
    Scalar num(mpq_class(v.get_num()), f);
    num.reduce_();
    Scalar den(mpq_class(v.get_den()), f);
    den.reduce_();
    return num / den;
  }
  Scalar s(std::move(v), f);
  s.reduce_();
  return s;
}

void Scalar::reduce_() {
  if (f_.kind == FieldSpec::Kind::PrimeField) {
    mpz_class r;
    mpz_class p(f_.p);
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    v_ = mpq_class(r);
  } else {
    v_.canonicalize();
  }
}

Scalar Scalar::operator-() const {
  Scalar s(-v_, f_);
  s.reduce_();
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_(o);
  v_ += o.v_;
  reduce_();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_(o);
  v_ -= o.v_;
  reduce_();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_(o);
  v_ *= o.v_;
  reduce_();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (f_.kind == FieldSpec::Kind::PrimeField) {
    mpz_class inv, p(f_.p);
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
      throw FieldError("no inverse mod p");
    return Scalar(mpq_class(inv), f_);
  }
  return Scalar(1 / v_, f_);
}

}  // namespace liewreath
