#include "dgar/field.hpp"

namespace dgar {

namespace {
bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}
}  // namespace

Field Field::rationals() { return Field(FieldSpec{FieldKind::Rationals, 0}); }

Field Field::prime(long p) {
  if (!is_prime(p)) throw ValidationError("field modulus " + std::to_string(p) + " is not prime");
  return Field(FieldSpec{FieldKind::PrimeField, p});
}

Elem Field::normalize(const Elem& a) const {
  if (is_rationals()) return a;
  // Residue of num/den mod p.
  mpz_class p(spec_.p);
  mpz_class den = a.get_den();
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class d = den % p;
  if (d < 0) d += p;
  if (d == 0) throw ValidationError("denominator divisible by field characteristic");
  if (d != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
      throw ValidationError("non-invertible denominator mod p");
    num = (num * dinv) % p;
  }
  return Elem(num);
}

Elem Field::from_long(long n) const { return normalize(Elem(n)); }

Elem Field::from_string(const std::string& s) const {
  if (s.empty()) throw ValidationError("empty scalar literal");
  try {
    Elem v(s);
    v.canonicalize();
    return normalize(v);
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad scalar literal '" + s + "'");
  }
}

Elem Field::add(const Elem& a, const Elem& b) const { return normalize(a + b); }
Elem Field::sub(const Elem& a, const Elem& b) const { return normalize(a - b); }
Elem Field::mul(const Elem& a, const Elem& b) const { return normalize(a * b); }
Elem Field::neg(const Elem& a) const { return normalize(-a); }

Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw ValidationError("division by zero");
  if (is_rationals()) return Elem(1) / a;
  mpz_class p(spec_.p), x = a.get_num() % p, r;
  if (x < 0) x += p;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
    throw ValidationError("element not invertible mod p");
  return Elem(r);
}

Elem Field::div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

std::string Field::to_string(const Elem& a) const { return a.get_str(); }

}  // namespace dgar
