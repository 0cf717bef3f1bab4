#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supersquare {

/// Canonical residue in [0, p).
using Residue = std::uint32_t;

/// Raised for invalid moduli, mixed moduli and division by zero.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by constructions that only exist in one characteristic.
class CharacteristicError : public FieldError {
 public:
  using FieldError::FieldError;
};

/// The prime field GF(p) for an odd prime p < 2^16.
///
/// The bound keeps every product of two residues inside 32 bits and lets the
/// elimination kernels accumulate long dot products in 64 bits before
/// reducing.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<Residue>(r < 0 ? r + p : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// a*b + c
  Residue fma(Residue a, Residue b, Residue c) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b + c) % p_);
  }
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }
  Residue pow(Residue a, std::uint64_t e) const noexcept;

  /// The inverse of 2; exists because p is odd.
  Residue half() const noexcept { return (p_ + 1) / 2; }
  /// (-1)^k as a residue.
  Residue sign(unsigned k) const noexcept { return (k & 1u) ? p_ - 1 : 1; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Throws CharacteristicError unless the field has characteristic 3.
void require_characteristic_three(const PrimeField& field, const std::string& what);

/// A field element carrying its modulus, for the value-level API.
class Scalar {
 public:
  Scalar(const PrimeField& field, std::int64_t value)
      : value_(field.reduce(value)), p_(field.characteristic()) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  Scalar inverse() const;
  bool is_zero() const noexcept { return value_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  bool operator==(const Scalar&) const = default;

  /// Decimal residue.
  std::string to_string() const { return std::to_string(value_); }

 private:
  Scalar(Residue v, std::uint32_t p, int) : value_(v), p_(p) {}
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);

  Residue value_;
  std::uint32_t p_;
};

}  // namespace supersquare
