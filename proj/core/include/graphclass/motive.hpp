#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphclass/ffcount.hpp"
#include "graphclass/multigraph.hpp"

namespace graphclass {

/// Polynomial in the Lefschetz class L with integer coefficients,
/// coefficients()[i] multiplying L^i. Trailing zeros are trimmed.
class ClassPoly {
 public:
  ClassPoly() = default;
  explicit ClassPoly(std::vector<mpz_class> coefficients);

  /// L^k
  static ClassPoly lefschetz_power(std::size_t k);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class constant_term() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.front(); }

  /// Counting specialization L -> value.
  mpz_class evaluate(const mpz_class& value) const;

  /// "L^3 - L^2", "L - 2", "0".
  std::string to_string() const;

  friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
  friend ClassPoly operator+(const ClassPoly& a, const ClassPoly& b);
  friend ClassPoly operator-(const ClassPoly& a, const ClassPoly& b);
  friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

struct NotPolynomiallyConsistent {
  std::string reason;
};

using InterpolationResult = std::variant<ClassPoly, NotPolynomiallyConsistent>;

struct CountSample {
  std::uint64_t q = 0;
  mpz_class value;
};

/// Interpolates a polynomial of degree <= max_degree through the first
/// max_degree + 1 samples over Q and accepts it only if every coefficient is
/// an integer and all remaining samples (at least two) agree.
InterpolationResult interpolate_samples(std::span<const CountSample> samples,
                                        std::size_t max_degree);

/// Candidate class of Y_G from complement counts at `primes` (at least
/// n + 3 of them; the first n + 1 fit, the rest are held out).
InterpolationResult interpolate_class(const Multigraph& g, std::span<const std::uint64_t> primes,
                                      const CountOptions& opts = {});

/// 0 if G has a non-loop edge, (-1)^n if all n edges are loops.
int predicted_sb_constant(const Multigraph& g);

enum class TheoremTag { ModL, Lrat, DcBridge, DcLoop, DcRegular };

std::string_view to_string(TheoremTag tag) noexcept;

struct PrimeObservation {
  std::uint64_t q = 0;
  std::int64_t expected = 0;
  std::int64_t observed = 0;
  bool pass = false;
};

struct CongruenceVerdict {
  std::string graph_id;
  TheoremTag tag = TheoremTag::ModL;
  /// Human-readable statement of what was compared.
  std::string expectation;
  bool applicable = true;
  std::vector<PrimeObservation> observations;
  bool pass = false;
};

/// Verdicts from counts already taken (one record per prime, in order).
CongruenceVerdict modL_verdict(const Multigraph& g, std::span<const CountRecord> records,
                               std::string graph_id = {});
CongruenceVerdict projective_verdict(const Multigraph& g, std::span<const CountRecord> records,
                                     std::string graph_id = {});

TheoremTag dc_tag(EdgeKind kind) noexcept;

/// Right-hand side of the deletion-contraction identity for an edge of the
/// given kind in a graph with n edges; `z_count` is only read for regular edges.
PrimeObservation dc_observation(EdgeKind kind, std::size_t n, std::uint64_t q,
                                std::uint64_t y_graph, std::uint64_t y_deleted,
                                std::uint64_t z_count);

/// |Y_G(F_q)| mod q against predicted_sb_constant(G) mod q, per prime.
CongruenceVerdict check_modL_congruence(const Multigraph& g, std::span<const std::uint64_t> primes,
                                        const CountOptions& opts = {},
                                        CountMethod method = CountMethod::Fibered,
                                        std::string graph_id = {});

/// |X_G(F_q)| = 1 mod q. Inapplicable (not failed) for forests and for
/// graphs whose edges are all loops.
CongruenceVerdict check_projective_congruence(const Multigraph& g,
                                              std::span<const std::uint64_t> primes,
                                              const CountOptions& opts = {},
                                              CountMethod method = CountMethod::Fibered,
                                              std::string graph_id = {});

/// Exact deletion-contraction identity for the class of Y_G at one prime:
///   bridge:  |Y_G| = q |Y_{G-e}|
///   loop:    |Y_G| = (q-1) |Y_{G-e}|
///   regular: |Y_G| = q (q^{n-1} - |Z|) - |Y_{G-e}|
/// `observed` is |Y_G|, `expected` the right-hand side.
CongruenceVerdict dc_identity_check(const Multigraph& g, EdgeLabel e, std::uint64_t q,
                                    const CountOptions& opts = {},
                                    CountMethod method = CountMethod::Fibered,
                                    std::string graph_id = {});

/// c = constant + L * tail.
struct HodgeSplit {
  mpz_class constant;
  ClassPoly tail;
};

HodgeSplit hodge_form(const ClassPoly& c);

}  // namespace graphclass
