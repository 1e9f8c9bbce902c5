#include "graphclass/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "graphclass/errors.hpp"

namespace graphclass {

namespace {

/// Union-find with undo; no path compression so unions can be rolled back.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const Vertex b = history_.back();
    history_.pop_back();
    const Vertex a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> history_;
};

std::size_t count_components(std::size_t vertex_count, std::span<const Edge> edges,
                             EdgeMask skip = 0) {
  RollbackDsu dsu(vertex_count);
  std::size_t comps = vertex_count;
  for (const Edge& ed : edges) {
    if ((skip >> ed.label) & 1U) continue;
    if (dsu.unite(ed.u, ed.v)) --comps;
  }
  return comps;
}

std::string label_message(EdgeLabel e) { return "no edge with label " + std::to_string(e); }

}  // namespace

std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::Bridge: return "bridge";
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Regular: return "regular";
  }
  return "unknown";
}

Multigraph::Multigraph(std::size_t vertex_count,
                       std::span<const std::pair<Vertex, Vertex>> endpoints)
    : vertex_count_(vertex_count), label_space_(endpoints.size()) {
  edges_.reserve(endpoints.size());
  EdgeLabel label = 0;
  for (const auto& [u, v] : endpoints) edges_.push_back(Edge{u, v, label++});
  validate();
}

Multigraph::Multigraph(std::size_t vertex_count,
                       std::initializer_list<std::pair<Vertex, Vertex>> endpoints)
    : Multigraph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(endpoints.begin(),
                                                                          endpoints.size())) {}

Multigraph Multigraph::with_labels(std::size_t vertex_count, std::vector<Edge> edges,
                                   std::size_t label_space) {
  Multigraph g;
  g.vertex_count_ = vertex_count;
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.label < b.label; });
  std::size_t needed = edges.empty() ? 0 : std::size_t{edges.back().label} + 1;
  g.label_space_ = std::max(label_space, needed);
  g.edges_ = std::move(edges);
  g.validate();
  return g;
}

void Multigraph::validate() {
  if (label_space_ > kMaxLabels)
    throw std::invalid_argument("at most " + std::to_string(kMaxLabels) + " edge labels supported");
  mask_ = 0;
  for (const Edge& ed : edges_) {
    if (ed.u >= vertex_count_ || ed.v >= vertex_count_)
      throw std::out_of_range("edge endpoint out of range for label " + std::to_string(ed.label));
    if (ed.label >= label_space_) throw LabelError(label_message(ed.label));
    if ((mask_ >> ed.label) & 1U)
      throw std::invalid_argument("duplicate edge label " + std::to_string(ed.label));
    mask_ |= EdgeMask{1} << ed.label;
  }
}

EdgeMask Multigraph::loop_mask() const noexcept {
  EdgeMask m = 0;
  for (const Edge& ed : edges_)
    if (ed.is_loop()) m |= EdgeMask{1} << ed.label;
  return m;
}

bool Multigraph::has_label(EdgeLabel e) const noexcept {
  return e < kMaxLabels && ((mask_ >> e) & 1U);
}

const Edge& Multigraph::edge(EdgeLabel e) const {
  if (!has_label(e)) throw LabelError(label_message(e));
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& ed, EdgeLabel l) { return ed.label < l; });
  return *it;
}

std::size_t Multigraph::component_count() const { return count_components(vertex_count_, edges_); }

bool Multigraph::is_forest() const { return betti_1(*this) == 0; }

EdgeKind classify_edge(const Multigraph& g, EdgeLabel e) {
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) return EdgeKind::Loop;
  const EdgeMask self = EdgeMask{1} << e;
  return count_components(g.vertex_count(), g.edges(), self) > g.component_count()
             ? EdgeKind::Bridge
             : EdgeKind::Regular;
}

Multigraph delete_edge(const Multigraph& g, EdgeLabel e) {
  g.edge(e);
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - 1);
  for (const Edge& ed : g.edges())
    if (ed.label != e) kept.push_back(ed);
  return Multigraph::with_labels(g.vertex_count(), std::move(kept), g.label_space());
}

Multigraph contract_edge(const Multigraph& g, EdgeLabel e) {
  const Edge& target = g.edge(e);
  if (target.is_loop())
    throw PreconditionError("cannot contract looping edge " + std::to_string(e));
  const Vertex keep = std::min(target.u, target.v);
  const Vertex gone = std::max(target.u, target.v);
  auto remap = [&](Vertex x) -> Vertex {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - 1);
  for (const Edge& ed : g.edges()) {
    if (ed.label == e) continue;
    kept.push_back(Edge{remap(ed.u), remap(ed.v), ed.label});
  }
  return Multigraph::with_labels(g.vertex_count() - 1, std::move(kept), g.label_space());
}

std::vector<EdgeMask> spanning_forests(const Multigraph& g) {
  const auto edges = g.edges();
  const std::size_t target = g.vertex_count() - g.component_count();
  std::vector<EdgeMask> out;
  RollbackDsu dsu(g.vertex_count());

  // Include-before-exclude over ascending labels yields lexicographic order.
  auto recurse = [&](auto&& self, std::size_t index, std::size_t chosen, EdgeMask mask) -> void {
    if (chosen == target) {
      out.push_back(mask);
      return;
    }
    if (chosen + (edges.size() - index) < target) return;
    const Edge& ed = edges[index];
    if (!ed.is_loop() && dsu.unite(ed.u, ed.v)) {
      self(self, index + 1, chosen + 1, mask | (EdgeMask{1} << ed.label));
      dsu.undo();
    }
    self(self, index + 1, chosen, mask);
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

std::size_t betti_1(const Multigraph& g) {
  return g.edge_count() + g.component_count() - g.vertex_count();
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto vshift = static_cast<Vertex>(a.vertex_count());
  const auto lshift = static_cast<EdgeLabel>(a.label_space());
  for (const Edge& ed : b.edges())
    edges.push_back(Edge{ed.u + vshift, ed.v + vshift, ed.label + lshift});
  return Multigraph::with_labels(a.vertex_count() + b.vertex_count(), std::move(edges),
                                 a.label_space() + b.label_space());
}

std::vector<EdgeLabel> labels_of(EdgeMask mask) {
  std::vector<EdgeLabel> out;
  while (mask) {
    out.push_back(static_cast<EdgeLabel>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace graphclass
