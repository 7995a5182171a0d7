#pragma once

// Exact linear algebra: over GF(q) for geometry and over the integers for
// eigenfunction kernels. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "steiner/gf.hpp"

namespace steiner::linalg {

using gf::FieldElem;
using gf::FieldPtr;
using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<FieldElem>;

/// Dense row-major matrix over a finite field.
class MatGF {
 public:
  MatGF() = default;
  MatGF(FieldPtr field, std::size_t rows, std::size_t cols);
  MatGF(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols);

  /// Convenience for literals; entries are element indices.
  static MatGF from_indices(FieldPtr field,
                            std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const FieldElem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  const std::vector<FieldElem>& data() const noexcept { return data_; }

  void append_row(std::span<const FieldElem> row);
  MatGF transpose() const;

  /// Vertical concatenation; both operands need the same column count.
  static MatGF stack(const MatGF& top, const MatGF& bottom);

  bool operator==(const MatGF& other) const;
  /// Lexicographic on (rows, cols, entries); the canonical order for subspaces.
  std::strong_ordering operator<=>(const MatGF& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

struct RrefResult {
  MatGF matrix;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const MatGF& m);

/// Canonical basis of the row space: the nonzero rows of the RREF.
MatGF row_basis(const MatGF& m);

MatGF rowspace_sum(const MatGF& a, const MatGF& b);
MatGF rowspace_intersect(const MatGF& a, const MatGF& b);

/// Basis (canonical RREF rows) of {x : m x = 0}.
MatGF kernel(const MatGF& m);

/// Some x with m x = rhs (free variables set to zero), or nullopt.
std::optional<Vec> solve(const MatGF& m, std::span<const FieldElem> rhs);

/// True when v lies in the row space of basis.
bool in_rowspace(const MatGF& basis, std::span<const FieldElem> v);

/// Reduces v modulo a canonical RREF basis: pivot coordinates become zero.
/// The result is the lexicographically smallest vector of the coset v + span.
Vec reduce_mod(const MatGF& rref_basis, std::span<const FieldElem> v);

/// Dense integer matrix of arbitrary precision.
class MatZ {
 public:
  MatZ() = default;
  MatZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatZ(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

using IntVec = std::vector<BigInt>;

/// Null-space basis with integer entries, one vector per free column in
/// increasing column order. Each vector is primitive with a positive first
/// nonzero entry. Computed by fraction-free elimination with content removal.
std::vector<IntVec> rational_kernel(const MatZ& m);

/// Rank of an integer matrix reduced modulo a prime. Never exceeds the rank
/// over the rationals, so rank_mod_prime == cols certifies a trivial kernel.
std::size_t rank_mod_prime(const std::vector<std::int64_t>& row_major, std::size_t rows,
                           std::size_t cols, std::uint32_t prime);

/// Divides by the gcd of the entries and makes the first nonzero positive.
void make_primitive(IntVec& v);

}  // namespace steiner::linalg
