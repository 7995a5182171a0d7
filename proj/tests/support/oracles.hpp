#pragma once

// Brute-force reference computations for prime q. Everything here works on
// explicit point sets with plain modular integers and shares no code with
// the library's canonical forms.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Coords = std::vector<int>;
using PointSet = std::vector<int>;  // sorted point ids
using Adjacency = std::vector<std::vector<char>>;

struct IncidenceGeometry {
  int q = 0;
  int n = 0;
  bool projective = false;
  std::vector<Coords> points;
  std::vector<PointSet> lines;  // sorted lexicographically
};

IncidenceGeometry projective_geometry(int n, int q);
IncidenceGeometry affine_geometry(int n, int q);

/// Affine planes as point sets of size q^2.
std::vector<PointSet> affine_planes(const IncidenceGeometry& g);

/// Lines adjacent when they share exactly one point.
Adjacency intersection_graph(const std::vector<PointSet>& lines);

std::size_t common_points(const PointSet& a, const PointSet& b);

struct Srg {
  long v, k, lambda, mu;
};

/// Parameters by counting, or nullopt when the graph is not strongly regular.
std::optional<Srg> srg_by_counting(const Adjacency& a);

/// True when A^2 = k I + lambda A + mu (J - I - A) by dense multiplication.
bool srg_matrix_identity(const Adjacency& a, const Srg& p);

/// Induced K_{a,a} by scanning every 2a-subset.
std::size_t count_induced_complete_bipartite(const Adjacency& adj, int a);

/// Reguli of PG(3,q) as distinct line sets R (so R and R_opp both counted).
std::vector<PointSet> reguli_by_transversals(const IncidenceGeometry& pg);

/// Ordered affine-regulus pairs of AG(3,q) straight from the two axioms.
std::size_t affine_reguli_by_axioms(const IncidenceGeometry& ag);

/// A f == theta f with dense integer arithmetic.
bool dense_eigen_check(const Adjacency& adj, const std::vector<long>& f, long theta);

/// Number of pairs of points lying in exactly one common block (over all pairs).
bool every_pair_in_one_block(std::size_t points, const std::vector<std::vector<std::uint32_t>>& blocks);

/// Naive product of two polynomials over GF(p) reduced by a monic modulus;
/// polynomials are coefficient lists, low degree first.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus, std::uint32_t p);

/// Irreducibility by checking every product of two monic factors of lower degree.
bool irreducible_by_products(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace oracle
