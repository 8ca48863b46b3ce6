#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcdkit/error.hpp"

namespace lcdkit {

enum class FieldKind { prime, quadratic_extension };

namespace detail {

// Arithmetic tables for one supported field. Immutable once built.
struct FieldTables {
  unsigned q = 0;
  FieldKind kind = FieldKind::prime;
  unsigned conj_exponent = 1;
  std::vector<std::uint8_t> add;  // q*q
  std::vector<std::uint8_t> mul;  // q*q
  std::vector<std::uint8_t> neg;  // q
  std::vector<std::uint8_t> inv;  // q, inv[0] unused
  std::vector<std::uint8_t> conj; // q
};

inline bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline std::unique_ptr<FieldTables> build_tables(unsigned q) {
  auto t = std::make_unique<FieldTables>();
  t->q = q;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.resize(q);
  t->conj.resize(q);
  if (q == 4) {
    // Indices 0, 1, 2, 3 stand for 0, 1, z, z^2 with z^2 = z + 1. In the
    // basis (1, z) these are 00, 01, 10, 11, so addition is XOR.
    t->kind = FieldKind::quadratic_extension;
    t->conj_exponent = 2;
    constexpr std::array<unsigned, 4> log{0, 0, 1, 2};
    constexpr std::array<std::uint8_t, 3> exp{1, 2, 3};
    for (unsigned a = 0; a < 4; ++a) {
      for (unsigned b = 0; b < 4; ++b) {
        t->add[a * 4 + b] = static_cast<std::uint8_t>(a ^ b);
        t->mul[a * 4 + b] = (a == 0 || b == 0) ? 0 : exp[(log[a] + log[b]) % 3];
      }
      t->neg[a] = static_cast<std::uint8_t>(a);
      t->inv[a] = a == 0 ? 0 : exp[(3 - log[a]) % 3];
      t->conj[a] = t->mul[a * 4 + a];
    }
    return t;
  }
  t->kind = FieldKind::prime;
  t->conj_exponent = 1;
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      t->add[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
      t->mul[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
    }
    t->neg[a] = static_cast<std::uint8_t>((q - a) % q);
    t->conj[a] = static_cast<std::uint8_t>(a);
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if ((a * b) % q == 1) t->inv[a] = static_cast<std::uint8_t>(b);
  return t;
}

inline const FieldTables& tables_for(unsigned q) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<FieldTables>, 256> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = build_tables(q);
  return *slot;
}

}  // namespace detail

/// A supported finite field: GF(2), GF(3), GF(4) or GF(p) for an odd prime
/// p <= 251. Cheap to copy; all copies of the same order share one table set.
class Field {
 public:
  using value_type = std::uint8_t;

  explicit Field(unsigned q) {
    if (!supported(q))
      throw InputError("unsupported field order " + std::to_string(q) +
                       " (expected 2, 3, 4 or an odd prime <= 251)");
    t_ = &detail::tables_for(q);
  }

  static bool supported(unsigned q) { return q == 2 || q == 4 || (q <= 251 && detail::is_odd_prime(q)); }

  unsigned order() const { return t_->q; }
  FieldKind kind() const { return t_->kind; }
  /// Exponent of the conjugation map x -> x^e (1 for prime fields, 2 for GF(4)).
  unsigned conj_exponent() const { return t_->conj_exponent; }
  bool is_prime() const { return t_->kind == FieldKind::prime; }
  std::string name() const { return "GF(" + std::to_string(order()) + ")"; }

  value_type add(value_type a, value_type b) const { return t_->add[a * t_->q + b]; }
  value_type sub(value_type a, value_type b) const { return t_->add[a * t_->q + t_->neg[b]]; }
  value_type neg(value_type a) const { return t_->neg[a]; }
  value_type mul(value_type a, value_type b) const { return t_->mul[a * t_->q + b]; }
  value_type conj(value_type a) const { return t_->conj[a]; }
  value_type inv(value_type a) const {
    if (a == 0) throw MathError("zero has no inverse");
    return t_->inv[a];
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  /// Row of the multiplication table for a fixed left factor.
  const value_type* mul_row(value_type a) const { return t_->mul.data() + a * t_->q; }
  const value_type* add_row(value_type a) const { return t_->add.data() + a * t_->q; }

  /// I/O token for an element: digits for prime fields, `0 1 w v` for GF(4).
  std::string symbol(value_type a) const {
    if (order() == 4) {
      static constexpr std::array<const char*, 4> names{"0", "1", "w", "v"};
      return names[a];
    }
    return std::to_string(a);
  }

  std::optional<value_type> parse_symbol(std::string_view s) const {
    if (order() == 4) {
      if (s == "0") return 0;
      if (s == "1") return 1;
      if (s == "w") return 2;
      if (s == "v") return 3;
      return std::nullopt;
    }
    if (s.empty() || s.size() > 3) return std::nullopt;
    unsigned v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    if (v >= order()) return std::nullopt;
    return static_cast<value_type>(v);
  }

  friend bool operator==(const Field& a, const Field& b) { return a.t_ == b.t_; }

 private:
  const detail::FieldTables* t_;
};

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws DimensionError("field mismatch").
class GfElement {
 public:
  GfElement(Field f, unsigned value) : field_(f), value_(static_cast<std::uint8_t>(value)) {
    if (value >= f.order())
      throw InputError("element " + std::to_string(value) + " out of range for " + f.name());
  }

  Field field() const { return field_; }
  std::uint8_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const GfElement& a, const GfElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  std::uint8_t value_;
};

namespace detail {
inline void require_field(const GfElement& a, const Field& f) {
  if (!(a.field() == f)) throw DimensionError("field mismatch");
}
}  // namespace detail

inline GfElement add(const GfElement& a, const GfElement& b, const Field& f) {
  detail::require_field(a, f);
  detail::require_field(b, f);
  return {f, f.add(a.value(), b.value())};
}

inline GfElement mul(const GfElement& a, const GfElement& b, const Field& f) {
  detail::require_field(a, f);
  detail::require_field(b, f);
  return {f, f.mul(a.value(), b.value())};
}

inline GfElement inv(const GfElement& a, const Field& f) {
  detail::require_field(a, f);
  return {f, f.inv(a.value())};
}

inline GfElement conj(const GfElement& a, const Field& f) {
  detail::require_field(a, f);
  return {f, f.conj(a.value())};
}

inline GfElement operator+(const GfElement& a, const GfElement& b) { return add(a, b, a.field()); }
inline GfElement operator*(const GfElement& a, const GfElement& b) { return mul(a, b, a.field()); }

}  // namespace lcdkit
