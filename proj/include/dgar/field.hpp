#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "dgar/errors.hpp"

namespace dgar {

using Elem = mpq_class;
using Vec = std::vector<Elem>;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long p = 0;  // modulus when kind == PrimeField
  bool operator==(const FieldSpec&) const = default;
};

/* Exact scalar arithmetic over Q or F_p.  Elements are stored as canonical
 * mpq_class values: reduced fractions over Q, integer residues in [0,p) over F_p. */
class Field {
 public:
  static Field rationals();
  static Field prime(long p);

  const FieldSpec& spec() const { return spec_; }
  bool is_rationals() const { return spec_.kind == FieldKind::Rationals; }
  long characteristic() const { return is_rationals() ? 0 : spec_.p; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long n) const;
  /* Accepts "a", "-a", "a/b". */
  Elem from_string(const std::string& s) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
  std::string to_string(const Elem& a) const;

  /* Canonical form: reduce mod p for prime fields (identity over Q). */
  Elem normalize(const Elem& a) const;

  bool operator==(const Field& o) const { return spec_ == o.spec_; }

 private:
  explicit Field(FieldSpec s) : spec_(s) {}
  FieldSpec spec_;
};

}  // namespace dgar
