#include "graphclass/symanzik.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "graphclass/errors.hpp"

namespace graphclass {

MultilinearPoly psi_by_trees(const Multigraph& g) {
  const EdgeMask all = g.edge_mask();
  MultilinearPoly psi(g.label_space());
  for (EdgeMask forest : spanning_forests(g)) psi.add_term(all & ~forest, 1);
  return psi;
}

namespace {

// General sparse integer polynomial used only by the determinant oracle.
// Keys are full exponent vectors; std::map orders them lexicographically,
// which is a monomial order, so the last entry is the leading term.
class SparsePoly {
 public:
  using Exponents = std::vector<unsigned char>;

  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, long c) {
    SparsePoly p(nvars);
    p.add(Exponents(nvars, 0), c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

  void add(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_variable(std::size_t var, long c) {
    Exponents e(nvars_, 0);
    e[var] = 1;
    add(e, c);
  }

  SparsePoly operator*(const SparsePoly& rhs) const {
    SparsePoly out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<unsigned char>(ea[i] + eb[i]);
        out.add(e, ca * cb);
      }
    }
    return out;
  }

  SparsePoly operator-(const SparsePoly& rhs) const {
    SparsePoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add(e, -c);
    return out;
  }

  /// Exact division; throws ConsistencyError if the divisor does not divide.
  SparsePoly divide_exact(const SparsePoly& d) const {
    if (d.is_zero()) throw ConsistencyError("division by zero polynomial");
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    SparsePoly quotient(nvars_);
    SparsePoly rem = *this;
    Exponents e(nvars_);
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (re[i] < lead_e[i]) throw ConsistencyError("inexact polynomial division");
        e[i] = static_cast<unsigned char>(re[i] - lead_e[i]);
      }
      if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
        throw ConsistencyError("inexact coefficient division");
      SparsePoly step(nvars_);
      step.add(e, rc / lead_c);
      quotient.add(e, rc / lead_c);
      rem = rem - step * d;
    }
    return quotient;
  }

 private:
  std::size_t nvars_;
  std::map<Exponents, mpz_class> terms_;
};

/// Bareiss fraction-free elimination with row pivoting.
SparsePoly bareiss_determinant(std::vector<std::vector<SparsePoly>> m, std::size_t nvars) {
  const std::size_t size = m.size();
  if (size == 0) return SparsePoly::constant(nvars, 1);
  SparsePoly prev = SparsePoly::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && m[r][k].is_zero()) ++r;
      if (r == size) return SparsePoly(nvars);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
    }
    prev = m[k][k];
  }
  SparsePoly det = m[size - 1][size - 1];
  if (negate) det = SparsePoly(nvars) - det;
  return det;
}

}  // namespace

MultilinearPoly psi_by_matrix_tree(const Multigraph& g) {
  const std::size_t nvars = g.label_space();
  const std::size_t nv = g.vertex_count();

  // Component membership by a plain DFS over non-loop edges.
  std::vector<std::vector<Vertex>> adjacency(nv);
  for (const Edge& ed : g.edges()) {
    if (ed.is_loop()) continue;
    adjacency[ed.u].push_back(ed.v);
    adjacency[ed.v].push_back(ed.u);
  }
  std::vector<int> comp(nv, -1);
  std::vector<std::vector<Vertex>> members;
  for (Vertex s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (Vertex y : adjacency[x]) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  // Forest polynomial: product of per-component tree polynomials.
  SparsePoly forests = SparsePoly::constant(nvars, 1);
  for (const auto& verts : members) {
    if (verts.size() < 2) continue;
    // Reduced Laplacian: drop the component's smallest vertex.
    std::vector<int> row(nv, -1);
    for (std::size_t i = 1; i < verts.size(); ++i) row[verts[i]] = static_cast<int>(i - 1);
    const std::size_t k = verts.size() - 1;
    std::vector<std::vector<SparsePoly>> lap(k, std::vector<SparsePoly>(k, SparsePoly(nvars)));
    for (const Edge& ed : g.edges()) {
      if (ed.is_loop() || comp[ed.u] != comp[verts[0]]) continue;
      const int a = row[ed.u];
      const int b = row[ed.v];
      if (a >= 0) lap[a][a].add_variable(ed.label, 1);
      if (b >= 0) lap[b][b].add_variable(ed.label, 1);
      if (a >= 0 && b >= 0) {
        lap[a][b].add_variable(ed.label, -1);
        lap[b][a].add_variable(ed.label, -1);
      }
    }
    forests = forests * bareiss_determinant(std::move(lap), nvars);
  }

  const EdgeMask all = g.edge_mask();
  MultilinearPoly psi(nvars);
  for (const auto& [exps, c] : forests.terms()) {
    EdgeMask mask = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (exps[i] > 1) throw ConsistencyError("matrix-tree determinant is not multilinear");
      if (exps[i] == 1) mask |= EdgeMask{1} << i;
    }
    psi.add_term(all & ~mask, c);
  }
  return psi;
}

MultilinearPoly psi_by_deletion_contraction(const Multigraph& g) {
  if (g.edge_count() == 0) return MultilinearPoly::constant(g.label_space(), 1);
  const EdgeLabel e = g.edges().back().label;
  switch (classify_edge(g, e)) {
    case EdgeKind::Bridge:
      return psi_by_deletion_contraction(contract_edge(g, e));
    case EdgeKind::Loop:
      return psi_by_deletion_contraction(delete_edge(g, e)).times_var(e);
    case EdgeKind::Regular:
      return psi_by_deletion_contraction(delete_edge(g, e)).times_var(e) +
             psi_by_deletion_contraction(contract_edge(g, e));
  }
  throw ConsistencyError("unreachable edge kind");
}

}  // namespace graphclass
