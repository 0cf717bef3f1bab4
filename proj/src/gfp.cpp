#include "supersquare/gfp.hpp"

namespace supersquare {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) {
    throw FieldError("characteristic 2 is not supported: 2 must be invertible");
  }
  if (!is_prime(p)) {
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= kMaxModulus) {
    throw FieldError("modulus " + std::to_string(p) + " exceeds 2^16");
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1;
  Residue base = a % p_;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw FieldError("inverse of zero");
  return pow(a, p_ - 2);
}

void require_characteristic_three(const PrimeField& field, const std::string& what) {
  if (field.characteristic() != 3) {
    throw CharacteristicError(what + " exists only in characteristic 3 (got p=" +
                              std::to_string(field.characteristic()) + ")");
  }
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    throw FieldError("modulus mismatch: " + std::to_string(a.p_) + " vs " +
                     std::to_string(b.p_));
  }
  return a.p_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  const PrimeField f(Scalar::common_modulus(a, b));
  return Scalar(f.add(a.value_, b.value_), f.characteristic(), 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  const PrimeField f(Scalar::common_modulus(a, b));
  return Scalar(f.sub(a.value_, b.value_), f.characteristic(), 0);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  const PrimeField f(Scalar::common_modulus(a, b));
  return Scalar(f.mul(a.value_, b.value_), f.characteristic(), 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  const PrimeField f(Scalar::common_modulus(a, b));
  return Scalar(f.div(a.value_, b.value_), f.characteristic(), 0);
}

Scalar Scalar::operator-() const {
  return Scalar(value_ == 0 ? 0 : p_ - value_, p_, 0);
}

Scalar Scalar::inverse() const {
  const PrimeField f(p_);
  return Scalar(f.inv(value_), p_, 0);
}

}  // namespace supersquare
