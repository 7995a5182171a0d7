#pragma once

// Finite fields GF(p^k) with an explicit irreducible modulus.
//
// Elements are encoded by the base-p integer of their coefficient list:
// index = a_0 + a_1 p + ... + a_{k-1} p^{k-1}. Index 0 is zero and index 1 is
// one. This order is the total order every canonical form downstream relies on.

#include <compare>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "steiner/error.hpp"

namespace steiner::gf {

struct FieldElem {
  std::uint32_t index = 0;

  auto operator<=>(const FieldElem&) const = default;
};

inline constexpr std::uint64_t kDefaultOrderLimit = std::uint64_t{1} << 20;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  // Monic, degree k, low-degree-first; modulus.size() == k + 1.
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// Builds the spec for GF(p^k) using the lexicographically smallest monic
/// irreducible polynomial of degree k (coefficient lists read as base-p
/// integers, low degree least significant). For k = 1 the modulus is x.
FieldSpec field_make(std::uint32_t p, std::uint32_t k, std::uint64_t limit = kDefaultOrderLimit);

/// Brute-force irreducibility test by trial division with every monic
/// polynomial of degree 1..k/2. Coefficients low-degree-first.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

class Field {
 public:
  explicit Field(FieldSpec spec);

  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k,
                                           std::uint64_t limit = kDefaultOrderLimit);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t q() const noexcept { return spec_.q; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t k() const noexcept { return spec_.k; }

  static constexpr FieldElem zero() { return FieldElem{0}; }
  static constexpr FieldElem one() { return FieldElem{1}; }

  bool contains(FieldElem a) const noexcept { return a.index < spec_.q; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::int64_t e) const;

  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t n) const;

  /// All q elements in increasing index order.
  std::vector<FieldElem> elements() const;

 private:
  std::vector<std::uint32_t> digits(std::uint32_t index) const;
  std::uint32_t undigits(const std::vector<std::uint32_t>& d) const;
  FieldElem mul_poly(FieldElem a, FieldElem b) const;
  FieldElem add_digits(FieldElem a, FieldElem b, bool subtract) const;

  FieldSpec spec_;
  // Dense tables for small fields; empty when q exceeds kTableLimit.
  static constexpr std::uint32_t kTableLimit = 256;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv, Pow };

/// An element together with the field it belongs to; used by the checked
/// arithmetic entry point, which rejects operands from different fields.
struct BoundElem {
  const Field* field = nullptr;
  FieldElem value;
};

/// Checked single-operation arithmetic. For Neg and Inv the second operand is
/// ignored; for Pow it must be an integer exponent.
FieldElem arith(ArithOp op, BoundElem a, std::variant<BoundElem, std::int64_t> b);

}  // namespace steiner::gf
