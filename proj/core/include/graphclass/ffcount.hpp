#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "graphclass/multigraph.hpp"
#include "graphclass/multilinear_poly.hpp"

namespace graphclass {

/// Point counts over F_q of the affine hypersurface {p = 0} in A^n, its
/// complement, and (for non-constant homogeneous p) the projective
/// hypersurface in P^{n-1}.
struct CountRecord {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::uint64_t affine_zero_count = 0;
  std::uint64_t complement_count = 0;
  std::optional<std::uint64_t> projective_count;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct CountOptions {
  /// Maximum number of points a single count may visit.
  std::uint64_t budget = 1'000'000'000;
  /// Worker threads for the fibered sweep; results do not depend on it.
  unsigned threads = 1;
};

enum class CountMethod { Brute, Fibered, Both };

std::string_view to_string(CountMethod method) noexcept;
CountMethod parse_count_method(std::string_view text);

/// Full enumeration of F_q^n with per-term products. The reference oracle.
CountRecord count_brute(const MultilinearPoly& p, std::uint64_t q, const CountOptions& opts = {});

/// Writes p = t_var A + B and sweeps F_q^{n-1}: a base point contributes
/// q-1 points to the complement when A != 0, q when A = 0 != B, and none
/// when A = B = 0.
CountRecord count_fibered(const MultilinearPoly& p, EdgeLabel var, std::uint64_t q,
                          const CountOptions& opts = {});

/// |{x in F_q^{n-1} : psi_{G-e}(x) = psi_{G/e}(x) = 0}| over the n-1 edges
/// other than e. Requires e to be a regular edge.
std::uint64_t count_Z(const Multigraph& g, EdgeLabel e, std::uint64_t q,
                      const CountOptions& opts = {});

/// (affine zeros - 1) / (q - 1); throws PreconditionError when the record has
/// no projective hypersurface and ConsistencyError if the division is inexact.
std::uint64_t count_projective(const CountRecord& rec);

/// psi_G restricted to G's own edges (n = edge_count variables).
MultilinearPoly graph_polynomial(const Multigraph& g);

/// Counts psi_G over its n edge variables. Fibered splits on the highest
/// label; Both runs both and throws ConsistencyError if they disagree.
CountRecord count_graph(const Multigraph& g, std::uint64_t q, CountMethod method,
                        const CountOptions& opts = {});

}  // namespace graphclass
