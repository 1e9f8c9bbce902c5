#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphclass/multigraph.hpp"

namespace graphclass {

enum class Family { Cycle, Banana, TreePath, Bouquet, Complete, Wheel, Dumbbell };

std::string_view to_string(Family family) noexcept;

struct FamilySpec {
  Family family = Family::Cycle;
  unsigned size = 3;

  /// "cycle:4"
  std::string id() const;
};

/// Parses "name:m"; throws std::invalid_argument.
FamilySpec parse_family_spec(std::string_view text);

/// cycle(m): C_m, m >= 3.        banana(m): 2 vertices, m parallel edges.
/// tree_path(m): path, m edges.  bouquet(m): 1 vertex, m loops.
/// complete(m): K_m, m >= 3.     wheel(m): hub 0 over the rim cycle 1..m,
///                               rim edges first, then spokes; m >= 3.
/// dumbbell(m): the length-m cycle (a loop for m = 1, B_2 for m = 2) with
///              one extra loop at vertex 0, labelled last.
Multigraph generate_family(const FamilySpec& spec);

struct NamedGraph {
  std::string id;
  Multigraph graph;
};

/// Fixed reference corpus of small multigraphs (at most 8 edges) covering
/// loops, multi-edges, bridges, forests, disconnected graphs and the
/// standard families. Order and labelling are stable.
std::vector<NamedGraph> standard_catalog();

}  // namespace graphclass
