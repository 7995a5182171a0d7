#include "steiner/gf.hpp"

#include <string>

#include "steiner/error.hpp"

namespace steiner::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero divisor over GF(p).
Poly poly_mod(Poly a, Poly divisor, std::uint32_t p) {
  trim(a);
  trim(divisor);
  const std::size_t dd = divisor.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(divisor.back(), p);
  while (a.size() >= divisor.size()) {
    const std::size_t shift = a.size() - divisor.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::uint64_t sub = factor * divisor[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t k = monic.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    // Every monic polynomial of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec field_make(std::uint32_t p, std::uint32_t k, std::uint64_t limit) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > limit) {
      throw Error(ErrorCode::LimitExceeded,
                  "field order exceeds limit " + std::to_string(limit));
    }
  }

  FieldSpec spec;
  spec.p = p;
  spec.k = k;
  spec.q = static_cast<std::uint32_t>(q);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly candidate(k + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    candidate[k] = 1;
    if (is_irreducible(candidate, p)) {
      spec.modulus = std::move(candidate);
      return spec;
    }
  }
  // Irreducible polynomials of every degree exist over every prime field.
  throw Error(ErrorCode::Inconsistent, "no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.q <= kTableLimit) {
    const std::uint32_t q = spec_.q;
    add_table_.resize(std::size_t{q} * q);
    mul_table_.resize(std::size_t{q} * q);
    neg_table_.resize(q);
    inv_table_.resize(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        add_table_[a * q + b] = add_digits({a}, {b}, false).index;
        mul_table_[a * q + b] = mul_poly({a}, {b}).index;
      }
    }
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        if (add_table_[a * q + b] == 0) neg_table_[a] = b;
        if (mul_table_[a * q + b] == 1) inv_table_[a] = b;
      }
    }
  }
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k, std::uint64_t limit) {
  return std::make_shared<const Field>(field_make(p, k, limit));
}

std::vector<std::uint32_t> Field::digits(std::uint32_t index) const {
  std::vector<std::uint32_t> d(spec_.k, 0);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    d[i] = index % spec_.p;
    index /= spec_.p;
  }
  return d;
}

std::uint32_t Field::undigits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t index = 0;
  for (std::size_t i = d.size(); i-- > 0;) index = index * spec_.p + d[i];
  return index;
}

FieldElem Field::add_digits(FieldElem a, FieldElem b, bool subtract) const {
  auto da = digits(a.index);
  const auto db = digits(b.index);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    da[i] = subtract ? (da[i] + spec_.p - db[i]) % spec_.p : (da[i] + db[i]) % spec_.p;
  }
  return {undigits(da)};
}

FieldElem Field::mul_poly(FieldElem a, FieldElem b) const {
  const auto da = digits(a.index);
  const auto db = digits(b.index);
  const std::uint64_t p = spec_.p;
  Poly product(2 * spec_.k, 0);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    for (std::uint32_t j = 0; j < spec_.k; ++j) {
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  Poly rem = poly_mod(std::move(product), spec_.modulus, spec_.p);
  rem.resize(spec_.k, 0);
  return {undigits(rem)};
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (!add_table_.empty()) return {add_table_[a.index * spec_.q + b.index]};
  return add_digits(a, b, false);
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  if (!add_table_.empty()) return {add_table_[a.index * spec_.q + neg_table_[b.index]]};
  return add_digits(a, b, true);
}

FieldElem Field::neg(FieldElem a) const {
  if (!neg_table_.empty()) return {neg_table_[a.index]};
  return add_digits(zero(), a, true);
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (!mul_table_.empty()) return {mul_table_[a.index * spec_.q + b.index]};
  return mul_poly(a, b);
}

FieldElem Field::inv(FieldElem a) const {
  if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!inv_table_.empty()) return {inv_table_[a.index]};
  return pow(a, static_cast<std::int64_t>(spec_.q) - 2);
}

FieldElem Field::div(FieldElem a, FieldElem b) const {
  if (b.index == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

FieldElem Field::pow(FieldElem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FieldElem result = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FieldElem Field::from_int(std::int64_t n) const {
  const std::int64_t p = spec_.p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out(spec_.q);
  for (std::uint32_t i = 0; i < spec_.q; ++i) out[i] = {i};
  return out;
}

FieldElem arith(ArithOp op, BoundElem a, std::variant<BoundElem, std::int64_t> b) {
  if (a.field == nullptr) throw Error(ErrorCode::InvalidArgument, "operand without a field");
  const Field& f = *a.field;
  if (!f.contains(a.value)) throw Error(ErrorCode::InvalidArgument, "operand outside the field");
  if (op == ArithOp::Neg) return f.neg(a.value);
  if (op == ArithOp::Inv) return f.inv(a.value);
  if (op == ArithOp::Pow) {
    const auto* e = std::get_if<std::int64_t>(&b);
    if (e == nullptr) throw Error(ErrorCode::InvalidArgument, "pow needs an integer exponent");
    return f.pow(a.value, *e);
  }
  const auto* other = std::get_if<BoundElem>(&b);
  if (other == nullptr || other->field == nullptr) {
    throw Error(ErrorCode::InvalidArgument, "binary operation needs a field element");
  }
  if (other->field != a.field && !(other->field->spec() == f.spec())) {
    throw Error(ErrorCode::MixedFields, "operands belong to different fields");
  }
  if (!f.contains(other->value)) throw Error(ErrorCode::InvalidArgument, "operand outside the field");
  switch (op) {
    case ArithOp::Add: return f.add(a.value, other->value);
    case ArithOp::Sub: return f.sub(a.value, other->value);
    case ArithOp::Mul: return f.mul(a.value, other->value);
    case ArithOp::Div: return f.div(a.value, other->value);
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

}  // namespace steiner::gf
