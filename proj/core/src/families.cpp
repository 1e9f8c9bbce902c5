#include "graphclass/families.hpp"

#include <charconv>
#include <stdexcept>

namespace graphclass {

namespace {

using Ends = std::vector<std::pair<Vertex, Vertex>>;

constexpr std::pair<std::string_view, Family> kNames[] = {
    {"cycle", Family::Cycle},       {"banana", Family::Banana}, {"tree_path", Family::TreePath},
    {"bouquet", Family::Bouquet},   {"complete", Family::Complete},
    {"wheel", Family::Wheel},       {"dumbbell", Family::Dumbbell},
};

Ends cycle_ends(unsigned m) {
  if (m == 1) return {{0, 0}};
  if (m == 2) return {{0, 1}, {0, 1}};
  Ends ends;
  for (Vertex i = 0; i < m; ++i) ends.emplace_back(i, (i + 1) % m);
  return ends;
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  for (const auto& [name, f] : kNames)
    if (f == family) return name;
  return "unknown";
}

std::string FamilySpec::id() const { return std::string(to_string(family)) + ":" + std::to_string(size); }

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("family spec must look like name:m, got '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon);
  const std::string_view number = text.substr(colon + 1);
  FamilySpec spec;
  bool found = false;
  for (const auto& [n, f] : kNames) {
    if (n == name) {
      spec.family = f;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), spec.size);
  if (ec != std::errc() || end != number.data() + number.size())
    throw std::invalid_argument("bad family size '" + std::string(number) + "'");
  return spec;
}

Multigraph generate_family(const FamilySpec& spec) {
  const unsigned m = spec.size;
  const bool needs_three =
      spec.family == Family::Cycle || spec.family == Family::Complete || spec.family == Family::Wheel;
  if (m < 1 || (needs_three && m < 3))
    throw std::invalid_argument("size " + std::to_string(m) + " out of range for " + spec.id());

  Ends ends;
  std::size_t vertices = 0;
  switch (spec.family) {
    case Family::Cycle:
      vertices = m;
      ends = cycle_ends(m);
      break;
    case Family::Banana:
      vertices = 2;
      ends.assign(m, {0, 1});
      break;
    case Family::TreePath:
      vertices = m + 1;
      for (Vertex i = 0; i < m; ++i) ends.emplace_back(i, i + 1);
      break;
    case Family::Bouquet:
      vertices = 1;
      ends.assign(m, {0, 0});
      break;
    case Family::Complete:
      vertices = m;
      for (Vertex i = 0; i < m; ++i)
        for (Vertex j = i + 1; j < m; ++j) ends.emplace_back(i, j);
      break;
    case Family::Wheel:
      vertices = m + 1;
      for (Vertex i = 1; i <= m; ++i) ends.emplace_back(i, i % m + 1);
      for (Vertex i = 1; i <= m; ++i) ends.emplace_back(0, i);
      break;
    case Family::Dumbbell:
      vertices = m;
      ends = cycle_ends(m);
      ends.emplace_back(0, 0);
      break;
  }
  if (ends.size() > kMaxLabels) throw std::invalid_argument(spec.id() + " has too many edges");
  return Multigraph(vertices, ends);
}

std::vector<NamedGraph> standard_catalog() {
  std::vector<NamedGraph> out;
  auto family = [&](Family f, unsigned m) {
    const FamilySpec spec{f, m};
    out.push_back({spec.id(), generate_family(spec)});
  };
  auto custom = [&](std::string id, std::size_t vertices, Ends ends) {
    out.push_back({std::move(id), Multigraph(vertices, ends)});
  };

  custom("point", 1, {});
  custom("three_points", 3, {});
  family(Family::TreePath, 1);
  family(Family::TreePath, 2);
  family(Family::TreePath, 4);
  custom("star3", 4, {{0, 1}, {0, 2}, {0, 3}});
  custom("two_edges_disjoint", 4, {{0, 1}, {2, 3}});
  family(Family::Bouquet, 1);
  family(Family::Bouquet, 2);
  family(Family::Bouquet, 3);
  custom("loops_on_two_vertices", 2, {{0, 0}, {1, 1}});
  family(Family::Cycle, 3);
  family(Family::Cycle, 4);
  family(Family::Cycle, 5);
  family(Family::Cycle, 6);
  family(Family::Banana, 2);
  family(Family::Banana, 3);
  family(Family::Banana, 4);
  family(Family::Banana, 5);
  family(Family::Complete, 4);
  family(Family::Wheel, 4);
  family(Family::Dumbbell, 1);
  family(Family::Dumbbell, 3);
  family(Family::Dumbbell, 4);
  custom("path2_with_loop", 3, {{0, 1}, {1, 2}, {1, 1}});
  custom("banana2_with_loop", 2, {{0, 1}, {0, 1}, {1, 1}});
  custom("lollipop", 4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  custom("bowtie", 5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  custom("theta_1_2_2", 4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
  custom("k4_minus_edge", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  custom("c4_doubled_edge", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}});
  custom("triangle_doubled", 3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}});
  custom("k2_3", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  custom("triangles_bridged", 6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  custom("triangle_two_loops", 3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}, {1, 1}});
  custom("triangle_plus_loop_apart", 4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}});
  custom("banana3_plus_triangle", 5, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {3, 4}, {4, 2}});
  custom("banana2_plus_path2", 5, {{0, 1}, {0, 1}, {2, 3}, {3, 4}});
  custom("square_with_pendant_loop", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 4}});
  custom("c5_chord", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 2}, {1, 1}});
  return out;
}

}  // namespace graphclass
