#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace syzforms {

// Hard cap on ring size: P^4 plus one elimination variable fits with room.
inline constexpr int kMaxVars = 8;

// Exponent vector of fixed length nv. Plain value type, no allocation.
struct Monomial {
  int nv = 0;
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial one(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("Monomial: variable count out of range");
    Monomial m;
    m.nv = nvars;
    return m;
  }

  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m = one(nvars);
    if (i < 0 || i >= nvars) throw std::out_of_range("Monomial::var: index");
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  int degree() const {
    int d = 0;
    for (int i = 0; i < nv; ++i) d += e[i];
    return d;
  }

  bool is_one() const {
    for (int i = 0; i < nv; ++i)
      if (e[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.nv != b.nv) return false;
    for (int i = 0; i < a.nv; ++i)
      if (a.e[i] != b.e[i]) return false;
    return true;
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.nv; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  // a | b
  for (int i = 0; i < a.nv; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial operator/(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (int i = 0; i < b.nv; ++i) {
    if (a.e[i] > b.e[i]) throw std::domain_error("Monomial division not exact");
    r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  }
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.nv; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.nv; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nv; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

enum class OrderKind { Degrevlex, Deglex, Lex, ElimLast };

// A monomial order: kind plus an optional variable permutation.
// perm[k] = index of the variable at comparison priority k; empty = identity.
// ElimLast compares the power of the last variable first, then degrevlex on
// the rest; it is the block order used to eliminate an auxiliary variable.
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;
  std::vector<int> perm;

  bool operator==(const MonomialOrder&) const = default;
};

namespace detail {

inline std::strong_ordering cmp_degrevlex(const std::uint16_t* a, const std::uint16_t* b, int n) {
  int da = 0, db = 0;
  for (int i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (int i = n - 1; i >= 0; --i)
    if (a[i] != b[i]) return b[i] <=> a[i];  // smaller trailing exponent wins
  return std::strong_ordering::equal;
}

inline std::strong_ordering cmp_lex(const std::uint16_t* a, const std::uint16_t* b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

inline std::strong_ordering cmp_deglex(const std::uint16_t* a, const std::uint16_t* b, int n) {
  int da = 0, db = 0;
  for (int i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  return cmp_lex(a, b, n);
}

}  // namespace detail

inline std::strong_ordering compare(const MonomialOrder& ord, const Monomial& a,
                                    const Monomial& b) {
  const std::uint16_t* pa = a.e.data();
  const std::uint16_t* pb = b.e.data();
  std::array<std::uint16_t, kMaxVars> ta, tb;
  if (!ord.perm.empty()) {
    for (int k = 0; k < a.nv; ++k) {
      ta[k] = a.e[ord.perm[k]];
      tb[k] = b.e[ord.perm[k]];
    }
    pa = ta.data();
    pb = tb.data();
  }
  switch (ord.kind) {
    case OrderKind::Degrevlex:
      return detail::cmp_degrevlex(pa, pb, a.nv);
    case OrderKind::Deglex:
      return detail::cmp_deglex(pa, pb, a.nv);
    case OrderKind::Lex:
      return detail::cmp_lex(pa, pb, a.nv);
    case OrderKind::ElimLast: {
      int last = a.nv - 1;
      if (pa[last] != pb[last]) return pa[last] <=> pb[last];
      return detail::cmp_degrevlex(pa, pb, last);
    }
  }
  throw std::logic_error("compare: unknown order kind");
}

// Ambient ring context: number of variables and the active monomial order.
struct Ring {
  int nvars = 0;
  MonomialOrder order;

  bool operator==(const Ring&) const = default;
};

inline Ring make_ring(int nvars, OrderKind kind = OrderKind::Degrevlex) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("make_ring: variable count out of range");
  Ring r;
  r.nvars = nvars;
  r.order.kind = kind;
  return r;
}

inline OrderKind order_kind_from_string(const std::string& s) {
  if (s == "degrevlex") return OrderKind::Degrevlex;
  if (s == "deglex") return OrderKind::Deglex;
  if (s == "lex") return OrderKind::Lex;
  throw std::invalid_argument("unknown monomial order: " + s);
}

}  // namespace syzforms
