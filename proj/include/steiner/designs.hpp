#pragma once

// Steiner systems 2-(N,M,1) from projective and affine spaces, their block
// graphs, and strongly regular parameter machinery.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "steiner/bitset.hpp"
#include "steiner/error.hpp"
#include "steiner/geometry.hpp"

namespace steiner::designs {

struct Design {
  std::uint32_t N = 0;  // points
  std::uint32_t M = 0;  // block size
  std::vector<std::vector<std::uint32_t>> blocks;        // sorted point indices
  std::vector<std::vector<std::uint32_t>> point_blocks;  // sorted block indices
  std::vector<std::int32_t> pair_index;                  // N x N, -1 on the diagonal

  std::uint32_t block_of(std::uint32_t a, std::uint32_t b) const;
};

/// Builds the incidence tables and verifies the 2-design property.
Design make_design(std::uint32_t N, std::vector<std::vector<std::uint32_t>> blocks);

class BlockGraph {
 public:
  BlockGraph() = default;
  static BlockGraph from_design(const Design& d);
  static BlockGraph from_rows(std::vector<Bitset> rows);
  /// Undirected simple graph from an edge list.
  static BlockGraph from_edges(std::uint32_t v, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t order() const { return static_cast<std::uint32_t>(rows_.size()); }
  const Bitset& neighbours(std::uint32_t u) const { return rows_[u]; }
  bool adjacent(std::uint32_t u, std::uint32_t w) const { return rows_[u].test(w); }
  std::uint32_t degree(std::uint32_t u) const { return static_cast<std::uint32_t>(rows_[u].count()); }
  std::uint32_t common_neighbours(std::uint32_t u, std::uint32_t w) const {
    return static_cast<std::uint32_t>(rows_[u].count_and(rows_[w]));
  }
  const std::vector<Bitset>& rows() const { return rows_; }

  /// FNV-1a over the adjacency words; stable across platforms.
  std::uint64_t checksum() const;

  bool operator==(const BlockGraph&) const = default;

 private:
  std::vector<Bitset> rows_;
};

BlockGraph block_graph(const Design& d);
BlockGraph complement(const BlockGraph& g);

struct SrgParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  std::int64_t r = 0, s = 0, delta = 0;
  std::int64_t m_r = 0, m_s = 0;
  // Rows (1, k, v-1-k), (m_r, r, -1-r), (m_s, s, -1-s): multiplicities,
  // eigenvalues, and eigenvalues of the complement.
  std::array<std::array<std::int64_t, 3>, 3> modified_matrix{};

  bool operator==(const SrgParams&) const = default;
};

SrgParams srg_spectrum(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu);
SrgParams srg_params_formula(std::int64_t N, std::int64_t M);

struct SrgViolation {
  enum class Kind { Degree, Lambda, Mu, Imprimitive } kind = Kind::Degree;
  std::uint32_t u = 0, w = 0;
  std::int64_t expected = 0, actual = 0;
};

class NotStronglyRegular : public Error {
 public:
  NotStronglyRegular(SrgViolation witness, const std::string& what)
      : Error(ErrorCode::NotStronglyRegular, what), witness_(witness) {}
  const SrgViolation& witness() const { return witness_; }

 private:
  SrgViolation witness_;
};

/// Scans every vertex pair; throws NotStronglyRegular with the first violation.
SrgParams srg_params_brute(const BlockGraph& g);

/// Weight-distribution bound 1 + |theta| + |((theta - lambda) theta - k) / mu|,
/// cross-checked against -2s / 2(r+1).
std::int64_t wdb(const SrgParams& p, std::int64_t theta);
std::int64_t wdb_closed_form(const SrgParams& p, std::int64_t theta);

struct DelsarteReport {
  std::int64_t bound = 0;  // 1 + k / (-s)
  bool pencils_meet_bound = false;
};

DelsarteReport delsarte_check(const BlockGraph& g, const Design& d);

/// Lines of PG(n,q) with the derived design and Grassmann graph J_q(n+1,2).
struct ProjectiveSystem {
  geometry::ProjSpace space;
  std::vector<geometry::ProjPoint> points;
  std::vector<geometry::ProjLine> lines;
  Design design;
  BlockGraph graph;

  std::optional<std::uint32_t> point_index(const geometry::ProjPoint& p) const;
  std::optional<std::uint32_t> line_index(const geometry::ProjLine& l) const;
  std::uint32_t require_line(const geometry::ProjLine& l) const;
};

/// Lines of AG(n,q) with the derived design and block graph X_q(n,1).
struct AffineSystem {
  geometry::AffSpace space;
  std::vector<geometry::AffPoint> points;
  std::vector<geometry::AffLine> lines;
  Design design;
  BlockGraph graph;

  std::optional<std::uint32_t> point_index(const geometry::AffPoint& p) const;
  std::optional<std::uint32_t> line_index(const geometry::AffLine& l) const;
  std::uint32_t require_line(const geometry::AffLine& l) const;
};

ProjectiveSystem projective_system(int n, gf::FieldPtr field,
                                   std::uint64_t limit = geometry::kDefaultEnumerationLimit);
AffineSystem affine_system(int n, gf::FieldPtr field,
                           std::uint64_t limit = geometry::kDefaultEnumerationLimit);

Design projective_design(int n, gf::FieldPtr field);
Design affine_design(int n, gf::FieldPtr field);

}  // namespace steiner::designs
