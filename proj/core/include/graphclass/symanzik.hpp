#pragma once

#include "graphclass/multigraph.hpp"
#include "graphclass/multilinear_poly.hpp"

namespace graphclass {

// Three independent constructions of the graph polynomial
//   psi_G = sum over maximal spanning forests F of prod_{e not in F} t_e,
// each returned in G's full label space (var_count == label_space()).
// Disconnected graphs get the product over components; isolated vertices
// contribute nothing and the edgeless graph has psi = 1.

MultilinearPoly psi_by_trees(const Multigraph& g);

/// Kirchhoff determinant of the reduced weighted Laplacian of each component,
/// followed by the complement transform F -> E \ F. Exact but slow; meant as
/// an oracle for the other two.
MultilinearPoly psi_by_matrix_tree(const Multigraph& g);

/// Recursion on the highest label: regular e gives t_e psi_{G-e} + psi_{G/e},
/// a bridge gives psi_{G/e}, a loop gives t_e psi_{G-e}.
MultilinearPoly psi_by_deletion_contraction(const Multigraph& g);

}  // namespace graphclass
