#include "doctest.h"

#include "properties.hpp"
#include "steiner/linalg.hpp"

using namespace steiner;
using linalg::MatGF;
using linalg::MatZ;

namespace {

const auto F2 = gf::Field::make(2, 1);
const auto F3 = gf::Field::make(3, 1);

MatGF m2(std::initializer_list<std::initializer_list<std::uint32_t>> rows) { return MatGF::from_indices(F2, rows); }

// m * v over the integers, for kernel checks.
bool annihilates(const MatZ& m, const linalg::IntVec& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    linalg::BigInt s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rref of small binary matrices") {
  const auto id = linalg::rref(m2({{1, 0}, {0, 1}}));
  CHECK(id.matrix == m2({{1, 0}, {0, 1}}));
  CHECK(id.rank == 2);

  const auto equal_rows = linalg::rref(m2({{1, 1}, {1, 1}}));
  CHECK(equal_rows.matrix == m2({{1, 1}, {0, 0}}));
  CHECK(equal_rows.rank == 1);

  const auto swapped = linalg::rref(m2({{0, 1, 1}, {1, 0, 1}}));
  CHECK(swapped.matrix == m2({{1, 0, 1}, {0, 1, 1}}));
  CHECK(swapped.rank == 2);
  CHECK(swapped.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref over GF(3) scales pivots to one") {
  const auto r = linalg::rref(MatGF::from_indices(F3, {{2, 1, 0}, {1, 2, 1}}));
  CHECK(r.matrix == MatGF::from_indices(F3, {{1, 2, 0}, {0, 0, 1}}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
}

TEST_CASE("intersection and sum of row spaces") {
  const auto e123 = m2({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const auto e134 = m2({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(linalg::rowspace_intersect(e123, e134) == m2({{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(linalg::rowspace_intersect(e123, e123) == e123);
  CHECK(linalg::rowspace_intersect(m2({{1, 0}}), m2({{0, 1}})).rows() == 0);
  CHECK(linalg::rowspace_sum(m2({{1, 0}}), m2({{0, 1}})) == m2({{1, 0}, {0, 1}}));
}

TEST_CASE("kernel and solve over a field") {
  CHECK(linalg::kernel(m2({{1, 0}, {0, 1}})).rows() == 0);
  CHECK(linalg::kernel(m2({{1, 1}})) == m2({{1, 1}}));

  const auto m = MatGF::from_indices(F3, {{1, 1, 0}, {0, 1, 1}});
  const std::vector<gf::FieldElem> rhs{gf::FieldElem{2}, gf::FieldElem{1}};
  const auto x = linalg::solve(m, rhs);
  REQUIRE(x);
  for (std::size_t i = 0; i < 2; ++i) {
    gf::FieldElem s{0};
    for (std::size_t j = 0; j < 3; ++j) s = F3->add(s, F3->mul(m(i, j), (*x)[j]));
    CHECK(s == rhs[i]);
  }
  const std::vector<gf::FieldElem> bad{gf::FieldElem{1}, gf::FieldElem{0}};
  CHECK_FALSE(linalg::solve(m2({{1, 1}, {1, 1}}), bad));
}

TEST_CASE("reduction modulo a subspace picks the smallest coset member") {
  const auto basis = linalg::row_basis(m2({{1, 1, 0}}));
  const std::vector<gf::FieldElem> v{gf::FieldElem{1}, gf::FieldElem{0}, gf::FieldElem{1}};
  const auto red = linalg::reduce_mod(basis, v);
  CHECK(red == std::vector<gf::FieldElem>{gf::FieldElem{0}, gf::FieldElem{1}, gf::FieldElem{1}});
  CHECK(linalg::in_rowspace(basis, std::vector<gf::FieldElem>{gf::FieldElem{1}, gf::FieldElem{1}, gf::FieldElem{0}}));
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(linalg::rowspace_sum(m2({{1, 0}}), m2({{1, 0, 0}})), Error);
}

TEST_CASE("integer kernels are primitive") {
  CHECK(linalg::rational_kernel(MatZ{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).empty());

  const auto a = linalg::rational_kernel(MatZ{{1, -1}});
  REQUIRE(a.size() == 1);
  CHECK(a[0] == linalg::IntVec{1, 1});

  const MatZ m{{2, 4}, {1, 2}};
  const auto b = linalg::rational_kernel(m);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == linalg::IntVec{2, -1});
  CHECK(annihilates(m, b[0]));

  const MatZ big{{3, 6, -9, 12}, {2, 4, -6, 8}, {1, 0, 5, 0}};
  const auto c = linalg::rational_kernel(big);
  CHECK(c.size() == 2);
  for (const auto& v : c) CHECK(annihilates(big, v));
}

TEST_CASE("rank modulo a prime bounds the rational rank") {
  const std::vector<std::int64_t> m{2, 4, 1, 2};
  CHECK(linalg::rank_mod_prime(m, 2, 2, 1000003) == 1);
  const std::vector<std::int64_t> id{1, 0, 0, 1};
  CHECK(linalg::rank_mod_prime(id, 2, 2, 1000003) == 2);
}

TEST_CASE("rref canonicity suite") {
  const auto r = props::rref_canonicity(7);
  INFO(r.detail);
  CHECK(r.passed);
}
