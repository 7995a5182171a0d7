#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oracle {

namespace {

int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  return 0;
}

Coords normalized(Coords v, int q) {
  for (int x : v)
    if (x != 0) {
      const int inv = inverse_mod(x, q);
      for (int& y : v) y = y * inv % q;
      return v;
    }
  return v;
}

std::vector<Coords> all_vectors(int len, int q) {
  std::vector<Coords> out;
  Coords v(len, 0);
  for (;;) {
    out.push_back(v);
    int i = len - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k > n) return;
  for (;;) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

IncidenceGeometry projective_geometry(int n, int q) {
  IncidenceGeometry g;
  g.q = q;
  g.n = n;
  g.projective = true;
  std::map<Coords, int> id;
  for (const auto& v : all_vectors(n + 1, q)) {
    const auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (it != v.end() && *it == 1) {
      id[v] = static_cast<int>(g.points.size());
      g.points.push_back(v);
    }
  }
  std::set<PointSet> lines;
  for (std::size_t i = 0; i < g.points.size(); ++i)
    for (std::size_t j = i + 1; j < g.points.size(); ++j) {
      PointSet l;
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          Coords v(n + 1);
          for (int t = 0; t <= n; ++t) v[t] = (a * g.points[i][t] + b * g.points[j][t]) % q;
          l.push_back(id.at(normalized(v, q)));
        }
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      lines.insert(l);
    }
  g.lines.assign(lines.begin(), lines.end());
  return g;
}

IncidenceGeometry affine_geometry(int n, int q) {
  IncidenceGeometry g;
  g.q = q;
  g.n = n;
  g.points = all_vectors(n, q);
  std::map<Coords, int> id;
  for (std::size_t i = 0; i < g.points.size(); ++i) id[g.points[i]] = static_cast<int>(i);
  std::set<PointSet> lines;
  for (std::size_t i = 0; i < g.points.size(); ++i)
    for (std::size_t j = i + 1; j < g.points.size(); ++j) {
      PointSet l;
      for (int t = 0; t < q; ++t) {
        Coords v(n);
        for (int c = 0; c < n; ++c) v[c] = ((g.points[i][c] + t * (g.points[j][c] - g.points[i][c])) % q + q) % q;
        l.push_back(id.at(v));
      }
      std::sort(l.begin(), l.end());
      lines.insert(l);
    }
  g.lines.assign(lines.begin(), lines.end());
  return g;
}

std::vector<PointSet> affine_planes(const IncidenceGeometry& g) {
  const int q = g.q, n = g.n;
  std::map<Coords, int> id;
  for (std::size_t i = 0; i < g.points.size(); ++i) id[g.points[i]] = static_cast<int>(i);
  std::set<PointSet> planes;
  const int N = static_cast<int>(g.points.size());
  for_each_subset(N, 3, [&](const std::vector<int>& c) {
    const auto& x = g.points[c[0]];
    Coords u(n), w(n);
    for (int i = 0; i < n; ++i) {
      u[i] = ((g.points[c[1]][i] - x[i]) % q + q) % q;
      w[i] = ((g.points[c[2]][i] - x[i]) % q + q) % q;
    }
    PointSet p;
    for (int s = 0; s < q; ++s)
      for (int t = 0; t < q; ++t) {
        Coords v(n);
        for (int i = 0; i < n; ++i) v[i] = (x[i] + s * u[i] + t * w[i]) % q;
        p.push_back(id.at(v));
      }
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (static_cast<int>(p.size()) == q * q) planes.insert(p);
  });
  return {planes.begin(), planes.end()};
}

std::size_t common_points(const PointSet& a, const PointSet& b) {
  std::size_t c = 0;
  for (int x : a) c += std::binary_search(b.begin(), b.end(), x);
  return c;
}

Adjacency intersection_graph(const std::vector<PointSet>& lines) {
  const std::size_t v = lines.size();
  Adjacency a(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) a[i][j] = a[j][i] = common_points(lines[i], lines[j]) == 1;
  return a;
}

std::optional<Srg> srg_by_counting(const Adjacency& a) {
  const long v = static_cast<long>(a.size());
  long k = -1, lambda = -1, mu = -1;
  for (long i = 0; i < v; ++i) {
    long d = 0;
    for (long j = 0; j < v; ++j) d += a[i][j];
    if (k >= 0 && d != k) return std::nullopt;
    k = d;
  }
  for (long i = 0; i < v; ++i)
    for (long j = i + 1; j < v; ++j) {
      long c = 0;
      for (long t = 0; t < v; ++t) c += a[i][t] && a[j][t];
      long& slot = a[i][j] ? lambda : mu;
      if (slot >= 0 && slot != c) return std::nullopt;
      slot = c;
    }
  return Srg{v, k, lambda, mu};
}

bool srg_matrix_identity(const Adjacency& a, const Srg& p) {
  const std::size_t v = a.size();
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      long sq = 0;
      for (std::size_t t = 0; t < v; ++t) sq += a[i][t] * a[t][j];
      const long expected = i == j ? p.k : (a[i][j] ? p.lambda : p.mu);
      if (sq != expected) return false;
    }
  return true;
}

std::size_t count_induced_complete_bipartite(const Adjacency& adj, int a) {
  std::size_t count = 0;
  for_each_subset(static_cast<int>(adj.size()), 2 * a, [&](const std::vector<int>& s) {
    std::vector<int> A{s[0]}, B;
    for (std::size_t i = 1; i < s.size(); ++i) (adj[s[0]][s[i]] ? B : A).push_back(s[i]);
    if (static_cast<int>(A.size()) != a) return;
    for (int x : A)
      for (int y : A)
        if (x != y && adj[x][y]) return;
    for (int x : B)
      for (int y : B)
        if (x != y && adj[x][y]) return;
    for (int x : A)
      for (int y : B)
        if (!adj[x][y]) return;
    ++count;
  });
  return count;
}

std::vector<PointSet> reguli_by_transversals(const IncidenceGeometry& pg) {
  const auto& L = pg.lines;
  const int v = static_cast<int>(L.size());
  std::vector<std::vector<int>> meet(v, std::vector<int>(v));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) meet[i][j] = static_cast<int>(common_points(L[i], L[j]));
  std::set<PointSet> out;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      if (meet[i][j]) continue;
      for (int k = j + 1; k < v; ++k) {
        if (meet[i][k] || meet[j][k]) continue;
        std::vector<int> T;
        for (int t = 0; t < v; ++t)
          if (meet[t][i] == 1 && meet[t][j] == 1 && meet[t][k] == 1) T.push_back(t);
        PointSet R;
        for (int r = 0; r < v; ++r) {
          bool all = !T.empty();
          for (int t : T) all = all && meet[r][t] == 1 && r != t;
          if (all) R.push_back(r);
        }
        if (static_cast<int>(R.size()) == pg.q + 1) out.insert(R);
      }
    }
  return {out.begin(), out.end()};
}

std::size_t affine_reguli_by_axioms(const IncidenceGeometry& ag) {
  const auto& L = ag.lines;
  const int v = static_cast<int>(L.size());
  const int q = ag.q;
  std::vector<Coords> dir(v);
  for (int i = 0; i < v; ++i) {
    Coords d(ag.n);
    for (int c = 0; c < ag.n; ++c) d[c] = ((ag.points[L[i][1]][c] - ag.points[L[i][0]][c]) % q + q) % q;
    dir[i] = normalized(d, q);
  }
  std::vector<std::vector<int>> meet(v, std::vector<int>(v));
  std::vector<std::vector<char>> skew(v, std::vector<char>(v));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      meet[i][j] = static_cast<int>(common_points(L[i], L[j]));
      skew[i][j] = i != j && meet[i][j] == 0 && dir[i] != dir[j];
    }

  // Transversal set when both axioms hold, otherwise nullopt.
  auto axioms = [&](const std::vector<int>& fam) -> std::optional<std::vector<int>> {
    std::vector<int> T;
    for (int t = 0; t < v; ++t) {
      bool all = true;
      for (int f : fam) all = all && meet[t][f] == 1;
      if (all) T.push_back(t);
    }
    std::set<int> on_t, on_f;
    for (int t : T) on_t.insert(L[t].begin(), L[t].end());
    for (int f : fam) on_f.insert(L[f].begin(), L[f].end());
    for (int f : fam)
      for (int p : L[f])
        if (!on_t.count(p)) return std::nullopt;
    for (int t : T)
      for (int p : L[t])
        if (!on_f.count(p)) return std::nullopt;
    return T;
  };

  std::size_t count = 0;
  std::vector<int> fam;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(fam.size()) == q) {
      const auto T = axioms(fam);
      if (!T) return;
      std::vector<int> opp;
      std::function<void(std::size_t)> pick = [&](std::size_t idx) {
        if (static_cast<int>(opp.size()) == q) {
          count += axioms(opp).has_value();
          return;
        }
        for (std::size_t i = idx; i < T->size(); ++i) {
          const int t = (*T)[i];
          bool ok = true;
          for (int o : opp) ok = ok && skew[o][t];
          if (!ok) continue;
          opp.push_back(t);
          pick(i + 1);
          opp.pop_back();
        }
      };
      pick(0);
      return;
    }
    for (int x = from; x < v; ++x) {
      bool ok = true;
      for (int f : fam) ok = ok && skew[f][x];
      if (!ok) continue;
      fam.push_back(x);
      grow(x + 1);
      fam.pop_back();
    }
  };
  grow(0);
  return count;
}

bool dense_eigen_check(const Adjacency& adj, const std::vector<long>& f, long theta) {
  for (std::size_t u = 0; u < adj.size(); ++u) {
    long s = 0;
    for (std::size_t w = 0; w < adj.size(); ++w) s += adj[u][w] * f[w];
    if (s != theta * f[u]) return false;
  }
  return true;
}

bool every_pair_in_one_block(std::size_t points, const std::vector<std::vector<std::uint32_t>>& blocks) {
  std::vector<std::vector<int>> c(points, std::vector<int>(points, 0));
  for (const auto& b : blocks)
    for (auto x : b)
      for (auto y : b)
        if (x != y) ++c[x][y];
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = 0; j < points; ++j)
      if (i != j && c[i][j] != 1) return false;
  return true;
}

std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const std::size_t k = modulus.size() - 1;
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(k);
  return prod;
}

bool irreducible_by_products(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t k = monic.size() - 1;
  if (k <= 1) return true;
  auto monics = [&](std::size_t deg) {
    std::vector<std::vector<std::uint32_t>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < deg; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::uint32_t> f(deg + 1);
      std::size_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[deg] = 1;
      out.push_back(f);
    }
    return out;
  };
  for (std::size_t d = 1; d < k; ++d)
    for (const auto& a : monics(d))
      for (const auto& b : monics(k - d)) {
        std::vector<std::uint32_t> prod(k + 1, 0);
        for (std::size_t i = 0; i <= d; ++i)
          for (std::size_t j = 0; j <= k - d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        if (prod == monic) return false;
      }
  return true;
}

}  // namespace oracle
