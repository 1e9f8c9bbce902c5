#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "graphclass/multigraph.hpp"

namespace graphclass {

/// Integer polynomial that is multilinear in `var_count` variables t_0..t_{n-1}.
/// A monomial is the set of its variables, stored as a bitmask; zero
/// coefficients are never stored.
class MultilinearPoly {
 public:
  using TermMap = std::map<EdgeMask, mpz_class>;

  MultilinearPoly() = default;
  explicit MultilinearPoly(std::size_t var_count);

  static MultilinearPoly constant(std::size_t var_count, const mpz_class& c);
  static MultilinearPoly monomial(std::size_t var_count, EdgeMask vars,
                                  const mpz_class& c = 1);

  std::size_t var_count() const noexcept { return var_count_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Union of the variables that occur.
  EdgeMask support() const noexcept;

  /// Total degree if every term has the same degree; -1 otherwise (and for 0).
  int homogeneous_degree() const noexcept;

  /// Coefficient of the monomial `vars` (0 if absent).
  mpz_class coefficient(EdgeMask vars) const;

  void add_term(EdgeMask vars, const mpz_class& c);

  MultilinearPoly& operator+=(const MultilinearPoly& rhs);
  MultilinearPoly& operator-=(const MultilinearPoly& rhs);

  /// Product; throws PreconditionError if a variable would be squared.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }

  /// t_var * p; `var` must not occur in p.
  MultilinearPoly times_var(EdgeLabel var) const;

  /// Renumbers the variables in `ambient` to 0..popcount-1 in ascending order.
  /// Every occurring variable must lie in `ambient`.
  MultilinearPoly compacted(EdgeMask ambient) const;

  /// Same terms in a larger (or equal) variable space.
  MultilinearPoly with_var_count(std::size_t var_count) const;

  /// "t0*t1 + t0*t2 + t1*t2"; terms by ascending mask.
  std::string to_string() const;

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  std::size_t var_count_ = 0;
  TermMap terms_;
};

/// p(x) mod q, exact. `x` must have var_count entries; q must be prime.
std::uint64_t evaluate(const MultilinearPoly& p, std::span<const std::uint64_t> x,
                       std::uint64_t q);

/// Decomposes p = t_var * A + B with A, B free of t_var.
std::pair<MultilinearPoly, MultilinearPoly> split_last_var(const MultilinearPoly& p,
                                                           EdgeLabel var);

}  // namespace graphclass
