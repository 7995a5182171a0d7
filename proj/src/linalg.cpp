#include "steiner/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "steiner/error.hpp"

namespace steiner::linalg {

MatGF::MatGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

MatGF::MatGF(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols)
    : field_(std::move(field)), rows_(0), cols_(cols) {
  data_.reserve(rows.size() * cols);
  for (const auto& r : rows) append_row(r);
}

MatGF MatGF::from_indices(FieldPtr field,
                          std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  MatGF m(std::move(field), 0, cols);
  for (const auto& r : rows) {
    Vec v;
    for (auto x : r) v.push_back(FieldElem{x});
    m.append_row(v);
  }
  return m;
}

void MatGF::append_row(std::span<const FieldElem> row) {
  if (row.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "row of length " + std::to_string(row.size()) + " for " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

MatGF MatGF::transpose() const {
  MatGF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatGF MatGF::stack(const MatGF& top, const MatGF& bottom) {
  if (top.cols_ != bottom.cols_) throw Error(ErrorCode::DimensionMismatch, "stacking matrices of different widths");
  MatGF out(top.field_ ? top.field_ : bottom.field_, 0, top.cols_);
  out.data_ = top.data_;
  out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
  out.rows_ = top.rows_ + bottom.rows_;
  return out;
}

bool MatGF::operator==(const MatGF& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::strong_ordering MatGF::operator<=>(const MatGF& other) const {
  if (auto c = rows_ <=> other.rows_; c != 0) return c;
  if (auto c = cols_ <=> other.cols_; c != 0) return c;
  return data_ <=> other.data_;
}

RrefResult rref(const MatGF& m) {
  RrefResult out{m, 0, {}};
  MatGF& a = out.matrix;
  if (a.rows() == 0) return out;
  const gf::Field& f = *a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).index == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const FieldElem scale = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).index == 0) continue;
      const FieldElem factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

MatGF row_basis(const MatGF& m) {
  const RrefResult r = rref(m);
  MatGF out(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.matrix.row(i));
  return out;
}

MatGF rowspace_sum(const MatGF& a, const MatGF& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient dimension");
  return row_basis(MatGF::stack(a, b));
}

MatGF kernel(const MatGF& m) {
  const RrefResult r = rref(m);
  const gf::Field& f = *m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  MatGF basis(m.field(), 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, gf::Field::zero());
    v[free] = gf::Field::one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.matrix(i, free));
    basis.append_row(v);
  }
  return row_basis(basis);
}

MatGF rowspace_intersect(const MatGF& a, const MatGF& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient dimension");
  const MatGF ba = row_basis(a);
  const MatGF bb = row_basis(b);
  const gf::Field& f = *a.field();
  // (alpha, beta) with alpha*A + beta*B = 0 gives alpha*A in both spaces.
  const MatGF coeffs = kernel(MatGF::stack(ba, bb).transpose());
  MatGF out(a.field(), 0, a.cols());
  for (std::size_t k = 0; k < coeffs.rows(); ++k) {
    Vec v(a.cols(), gf::Field::zero());
    for (std::size_t i = 0; i < ba.rows(); ++i) {
      const FieldElem c = coeffs(k, i);
      if (c.index == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] = f.add(v[j], f.mul(c, ba(i, j)));
    }
    out.append_row(v);
  }
  return row_basis(out);
}

std::optional<Vec> solve(const MatGF& m, std::span<const FieldElem> rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  MatGF aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), gf::Field::zero());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.matrix(i, m.cols());
  return x;
}

bool in_rowspace(const MatGF& basis, std::span<const FieldElem> v) {
  MatGF extra(basis.field(), 0, basis.cols());
  extra.append_row(v);
  return rref(MatGF::stack(basis, extra)).rank == rref(basis).rank;
}

Vec reduce_mod(const MatGF& rref_basis, std::span<const FieldElem> v) {
  const gf::Field& f = *rref_basis.field();
  Vec out(v.begin(), v.end());
  for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
    const auto row = rref_basis.row(i);
    const auto lead = std::find_if(row.begin(), row.end(), [](FieldElem e) { return e.index != 0; });
    if (lead == row.end()) continue;
    const std::size_t col = static_cast<std::size_t>(lead - row.begin());
    const FieldElem factor = f.div(out[col], *lead);
    if (factor.index == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.sub(out[j], f.mul(factor, row[j]));
  }
  return out;
}

MatZ::MatZ(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged integer matrix");
    for (auto x : r) data_.emplace_back(x);
  }
}

void make_primitive(IntVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g == 0) return;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

namespace {

void remove_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& x : row) x /= g;
}

}  // namespace

std::vector<IntVec> rational_kernel(const MatZ& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

  // Fraction-free Gauss-Jordan: row_i <- p*row_i - x*row_pivot, then divide
  // out the content so entries stay small.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    remove_content(a[row]);
    if (a[row][col] < 0)
      for (auto& x : a[row]) x = -x;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const BigInt factor = a[r][col];
      const BigInt p = a[row][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = p * a[r][c] - factor * a[row][c];
      remove_content(a[r]);
    }
    pivots.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  BigInt lcm_pivots = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const BigInt& d = a[i][pivots[i]];
    lcm_pivots = lcm_pivots / gcd(lcm_pivots, d) * d;
  }

  std::vector<IntVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    IntVec v(cols, 0);
    v[free] = lcm_pivots;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -a[i][free] * (lcm_pivots / a[i][pivots[i]]);
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_prime(const std::vector<std::int64_t>& row_major, std::size_t rows,
                           std::size_t cols, std::uint32_t prime) {
  const std::int64_t p = prime;
  std::vector<std::int64_t> a(row_major.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ((row_major[i] % p) + p) % p;
  auto inv = [p](std::int64_t x) {
    std::int64_t result = 1, base = x, e = p - 2;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
    const std::int64_t s = inv(a[rank * cols + col]);
    for (std::size_t c = col; c < cols; ++c) a[rank * cols + c] = a[rank * cols + c] * s % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t factor = a[r * cols + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        a[r * cols + c] = ((a[r * cols + c] - factor * a[rank * cols + c]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace steiner::linalg
