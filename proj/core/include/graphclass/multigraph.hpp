#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace graphclass {

/// Index of an edge variable t_e. Labels are stable across deletion and
/// contraction, so polynomials of minors live in the parent's variables.
using EdgeLabel = std::uint32_t;
using Vertex = std::uint32_t;

/// Bitmask over edge labels. Bit e set <=> label e is in the set.
using EdgeMask = std::uint64_t;

inline constexpr std::size_t kMaxLabels = 63;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeLabel label = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class EdgeKind { Bridge, Loop, Regular };

std::string_view to_string(EdgeKind kind) noexcept;

/// Finite multigraph with loops and parallel edges. Immutable after
/// construction; all graph operations return new values.
class Multigraph {
 public:
  Multigraph() = default;

  /// Edges are given as endpoint pairs and labelled 0..n-1 in order.
  Multigraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> endpoints);
  Multigraph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> endpoints);

  /// Explicit labels. `label_space` bounds every label and fixes the number
  /// of polynomial variables; it defaults to max label + 1.
  static Multigraph with_labels(std::size_t vertex_count, std::vector<Edge> edges,
                                std::size_t label_space = 0);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t label_space() const noexcept { return label_space_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  EdgeMask edge_mask() const noexcept { return mask_; }
  EdgeMask loop_mask() const noexcept;
  bool has_label(EdgeLabel e) const noexcept;

  /// Throws LabelError for unknown labels.
  const Edge& edge(EdgeLabel e) const;

  std::size_t component_count() const;
  bool is_forest() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void validate();

  std::size_t vertex_count_ = 0;
  std::size_t label_space_ = 0;
  std::vector<Edge> edges_;  // sorted by label
  EdgeMask mask_ = 0;
};

EdgeKind classify_edge(const Multigraph& g, EdgeLabel e);

/// Same vertices, edge `e` removed, other labels untouched.
Multigraph delete_edge(const Multigraph& g, EdgeLabel e);

/// Identifies the endpoints of `e` (the higher-numbered vertex is merged into
/// the lower one and later vertices shift down by one). Edges parallel to `e`
/// become loops. Contracting a loop throws PreconditionError.
Multigraph contract_edge(const Multigraph& g, EdgeLabel e);

/// All maximal spanning forests as label masks, ordered lexicographically by
/// their sorted label sequences.
std::vector<EdgeMask> spanning_forests(const Multigraph& g);

/// Cycle rank n - |V| + #components.
std::size_t betti_1(const Multigraph& g);

/// Second graph's vertices and labels are shifted past the first's.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Labels in ascending order for the set bits of `mask`.
std::vector<EdgeLabel> labels_of(EdgeMask mask);

}  // namespace graphclass
