#include "gsg/group.hpp"

#include <stdexcept>

namespace gsg {

Group Group::modular(long long m) {
  if (m < 1) throw std::invalid_argument("Group: modulus must be >= 1");
  return Group(Kind::Modular, m);
}

GroupElem Group::normalize(GroupElem e) const {
  if (kind_ != Kind::Modular) {
    if (kind_ == Kind::Integers && !e.v.is_integer())
      throw std::invalid_argument("Group Z: non-integer element");
    return e;
  }
  if (!e.v.is_integer())
    throw std::invalid_argument("Group Zmod: non-integer element");
  BigInt m(modulus_);
  BigInt r = e.v.num() % m;
  if (r.is_negative()) r += m;
  return {Rational(r)};
}

GroupElem Group::add(const GroupElem& a, const GroupElem& b) const {
  return normalize({a.v + b.v});
}

GroupElem Group::neg(const GroupElem& a) const { return normalize({-a.v}); }

GroupElem Group::sub(const GroupElem& a, const GroupElem& b) const {
  return normalize({a.v - b.v});
}

GroupElem Group::scale(long long k, const GroupElem& a) const {
  return normalize({Rational(k) * a.v});
}

std::optional<GroupElem> Group::halve(const GroupElem& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return GroupElem{a.v / Rational(2)};
    case Kind::Integers:
      if (a.v.num().is_odd()) return std::nullopt;
      return GroupElem{a.v / Rational(2)};
    case Kind::Modular: {
      // 2x = a (mod m): for odd m take a*(m+1)/2; for even m require a even.
      BigInt av = a.v.num();
      if (modulus_ % 2 == 1) {
        BigInt x = (av * BigInt((modulus_ + 1) / 2)) % BigInt(modulus_);
        return normalize({Rational(x)});
      }
      if (av.is_odd()) return std::nullopt;
      return normalize({Rational(av / BigInt(2))});
    }
  }
  return std::nullopt;
}

bool Group::embeds_in_prime_field() const {
  if (kind_ != Kind::Modular) return false;
  long long m = modulus_;
  if (m < 3 || m % 2 == 0) return false;
  for (long long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

GroupElem Group::parse(std::string_view s) const {
  return normalize({Rational::from_string(s)});
}

std::string Group::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::Modular:
      return "Zmod " + std::to_string(modulus_);
  }
  return "?";
}

Group Group::from_name(std::string_view s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.substr(0, 5) == "Zmod ") {
    long long m = 0;
    for (char c : s.substr(5)) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("Group: bad modulus in '" + std::string(s) + "'");
      m = m * 10 + (c - '0');
    }
    return modular(m);
  }
  throw std::invalid_argument("Group: unknown group '" + std::string(s) + "'");
}

}  // namespace gsg
