#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gsg/rational.hpp"

namespace gsg {

// One element of an abelian gain group.  Construct and combine only through
// Group so that modular values stay in canonical residue form.
struct GroupElem {
  Rational v;
  bool operator==(const GroupElem& o) const { return v == o.v; }
  bool operator!=(const GroupElem& o) const { return !(v == o.v); }
};

// Additive abelian gain group: the integers, the rationals, or the integers
// mod m (m >= 1; m = 1 is the trivial group used for gains-erased minors).
class Group {
 public:
  enum class Kind { Integers, Rationals, Modular };

  static Group integers() { return Group(Kind::Integers, 0); }
  static Group rationals() { return Group(Kind::Rationals, 0); }
  static Group modular(long long m);

  Kind kind() const { return kind_; }
  long long modulus() const { return modulus_; }

  GroupElem zero() const { return {Rational(0)}; }
  GroupElem from_int(long long k) const { return normalize({Rational(k)}); }
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;
  // k*a for integer k
  GroupElem scale(long long k, const GroupElem& a) const;
  bool eq(const GroupElem& a, const GroupElem& b) const { return a == b; }
  bool is_zero(const GroupElem& a) const { return a.v.is_zero(); }

  // Solves 2x = a when possible (always for Q and odd moduli).
  std::optional<GroupElem> halve(const GroupElem& a) const;

  // Whether gains embed in the rationals for the vector oracle.
  bool embeds_in_rationals() const { return kind_ != Kind::Modular; }
  // No element of order 2 (Z, Q, and odd moduli).  With 2-torsion present
  // the rank function is not submodular and several structural shortcuts
  // are invalid; callers fall back to definitional computations.
  bool two_torsion_free() const {
    return kind_ != Kind::Modular || modulus_ % 2 == 1;
  }
  // Whether gains embed in the prime field F_p (modular group with m = p).
  bool embeds_in_prime_field() const;

  GroupElem parse(std::string_view s) const;
  std::string format(const GroupElem& a) const { return a.v.to_string(); }
  std::string name() const;
  static Group from_name(std::string_view s);

  bool operator==(const Group& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }

 private:
  Group(Kind k, long long m) : kind_(k), modulus_(m) {}
  GroupElem normalize(GroupElem e) const;

  Kind kind_;
  long long modulus_;
};

}  // namespace gsg
