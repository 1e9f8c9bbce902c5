#include "graphclass/ffcount.hpp"

#include <array>
#include <bit>
#include <string>
#include <thread>
#include <vector>

#include "graphclass/errors.hpp"
#include "graphclass/primes.hpp"
#include "graphclass/symanzik.hpp"

namespace graphclass {

namespace {

constexpr std::size_t kMaxDenseVars = 28;

using Table = std::vector<std::uint64_t>;

std::uint64_t residue(const mpz_class& c, std::uint64_t q) {
  return mpz_fdiv_ui(c.get_mpz_t(), q);
}

/// Dense coefficient table mod q; bit i of an index stands for variable order[i].
Table dense_table(const MultilinearPoly& p, std::uint64_t q, std::span<const EdgeLabel> order) {
  if (order.size() > kMaxDenseVars)
    throw BudgetExceeded("too many variables for a dense sweep (" + std::to_string(order.size()) +
                         ")");
  Table table(std::size_t{1} << order.size(), 0);
  for (const auto& [vars, c] : p.terms()) {
    std::size_t index = 0;
    EdgeMask seen = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if ((vars >> order[i]) & 1U) {
        index |= std::size_t{1} << i;
        seen |= EdgeMask{1} << order[i];
      }
    }
    if (seen != vars) throw std::invalid_argument("polynomial variable missing from sweep order");
    table[index] = (table[index] + residue(c, q)) % q;
  }
  return table;
}

void require_budget(std::uint64_t q, std::size_t dims, std::uint64_t budget) {
  if (!checked_power(q, dims, budget))
    throw BudgetExceeded(std::to_string(q) + "^" + std::to_string(dims) +
                         " points exceed budget " + std::to_string(budget));
}

/// Specializes the top `base` variables of K dense tables over every point of
/// F_q^base and hands the residual tables (2^keep entries each) to `leaf`,
/// summing its results. Consecutive values x, x+1 of a variable differ by
/// adding the top half of the table, so each step is additions mod q only.
template <std::size_t K, class Leaf>
class DenseSweep {
 public:
  DenseSweep(std::array<Table, K> tables, std::size_t base, std::size_t keep, std::uint64_t q,
             Leaf leaf)
      : roots_(std::move(tables)), base_(base), keep_(keep), q_(q), leaf_(leaf) {}

  std::uint64_t run(unsigned threads) const {
    if (base_ == 0 || threads <= 1) {
      Worker w(*this);
      return w.descend_root(0, 1);
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, q_));
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([this, t, threads, &partial] {
        Worker w(*this);
        partial[t] = w.descend_root(t, threads);
      });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t v : partial) total += v;
    return total;
  }

 private:
  class Worker {
   public:
    explicit Worker(const DenseSweep& s) : s_(s), levels_(s.base_ + 1) {
      for (std::size_t level = 1; level <= s.base_; ++level) {
        const std::size_t width = std::size_t{1} << (s.base_ + s.keep_ - level);
        for (auto& t : levels_[level]) t.assign(width, 0);
      }
    }

    /// Top variable takes the values x = first, first + stride, ...
    std::uint64_t descend_root(std::uint64_t first, std::uint64_t stride) {
      std::array<const std::uint64_t*, K> root{};
      for (std::size_t k = 0; k < K; ++k) root[k] = s_.roots_[k].data();
      if (s_.base_ == 0) return s_.leaf_(root);
      std::uint64_t total = 0;
      const std::size_t half = std::size_t{1} << (s_.base_ + s_.keep_ - 1);
      auto& child = levels_[1];
      for (std::uint64_t x = first; x < s_.q_; x += stride) {
        for (std::size_t k = 0; k < K; ++k)
          for (std::size_t i = 0; i < half; ++i)
            child[k][i] = (root[k][i] + x * root[k][i + half]) % s_.q_;
        total += descend(1);
      }
      return total;
    }

   private:
    std::uint64_t descend(std::size_t level) {
      std::array<const std::uint64_t*, K> here{};
      for (std::size_t k = 0; k < K; ++k) here[k] = levels_[level][k].data();
      if (level == s_.base_) return s_.leaf_(here);
      const std::uint64_t q = s_.q_;
      const std::size_t half = std::size_t{1} << (s_.base_ + s_.keep_ - level - 1);
      auto& child = levels_[level + 1];
      for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < half; ++i) child[k][i] = here[k][i];
      if (level + 1 == s_.base_) return sweep_last(here, child, half);
      std::uint64_t total = 0;
      for (std::uint64_t x = 0;; ++x) {
        total += descend(level + 1);
        if (x + 1 == q) break;
        for (std::size_t k = 0; k < K; ++k) {
          for (std::size_t i = 0; i < half; ++i) {
            std::uint64_t v = child[k][i] + here[k][i + half];
            child[k][i] = v >= q ? v - q : v;
          }
        }
      }
      return total;
    }

    /// Innermost base variable: leaf calls without further recursion.
    std::uint64_t sweep_last(const std::array<const std::uint64_t*, K>& here,
                             std::array<Table, K>& child, std::size_t half) {
      const std::uint64_t q = s_.q_;
      std::array<std::uint64_t*, K> out{};
      std::array<const std::uint64_t*, K> view{};
      for (std::size_t k = 0; k < K; ++k) {
        out[k] = child[k].data();
        view[k] = out[k];
      }
      std::uint64_t total = s_.leaf_(view);
      for (std::uint64_t x = 1; x < q; ++x) {
        for (std::size_t k = 0; k < K; ++k) {
          const std::uint64_t* top = here[k] + half;
          for (std::size_t i = 0; i < half; ++i) {
            const std::uint64_t v = out[k][i] + top[i];
            out[k][i] = v >= q ? v - q : v;
          }
        }
        total += s_.leaf_(view);
      }
      return total;
    }

    const DenseSweep& s_;
    std::vector<std::array<Table, K>> levels_;
  };

  std::array<Table, K> roots_;
  std::size_t base_;
  std::size_t keep_;
  std::uint64_t q_;
  Leaf leaf_;
};

template <std::size_t K, class Leaf>
std::uint64_t sweep(std::array<Table, K> tables, std::size_t base, std::size_t keep,
                    std::uint64_t q, unsigned threads, Leaf leaf) {
  return DenseSweep<K, Leaf>(std::move(tables), base, keep, q, leaf).run(threads);
}

CountRecord make_record(const MultilinearPoly& p, std::uint64_t q, std::uint64_t complement) {
  CountRecord rec;
  rec.q = q;
  rec.n = p.var_count();
  const std::uint64_t total = *checked_power(q, rec.n);
  if (complement > total) throw ConsistencyError("complement count exceeds q^n");
  rec.complement_count = complement;
  rec.affine_zero_count = total - complement;
  if (!p.is_constant() && p.homogeneous_degree() > 0) rec.projective_count = count_projective(rec);
  return rec;
}

}  // namespace

std::string_view to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::Brute: return "brute";
    case CountMethod::Fibered: return "fibered";
    case CountMethod::Both: return "both";
  }
  return "unknown";
}

CountMethod parse_count_method(std::string_view text) {
  if (text == "brute") return CountMethod::Brute;
  if (text == "fibered") return CountMethod::Fibered;
  if (text == "both") return CountMethod::Both;
  throw std::invalid_argument("unknown count method '" + std::string(text) + "'");
}

CountRecord count_brute(const MultilinearPoly& p, std::uint64_t q, const CountOptions& opts) {
  require_prime(q);
  const std::size_t n = p.var_count();
  require_budget(q, n, opts.budget);

  struct Term {
    EdgeMask vars;
    std::uint64_t coeff;
  };
  std::vector<Term> terms;
  for (const auto& [vars, c] : p.terms()) terms.push_back({vars, residue(c, q)});

  std::vector<std::uint64_t> x(n, 0);
  std::uint64_t complement = 0;
  for (;;) {
    std::uint64_t value = 0;
    for (const Term& t : terms) {
      std::uint64_t prod = t.coeff;
      for (EdgeMask m = t.vars; m && prod; m &= m - 1) prod = prod * x[std::countr_zero(m)] % q;
      value = (value + prod) % q;
    }
    if (value != 0) ++complement;
    std::size_t digit = 0;
    while (digit < n && ++x[digit] == q) x[digit++] = 0;
    if (digit == n) break;
  }
  return make_record(p, q, complement);
}

CountRecord count_fibered(const MultilinearPoly& p, EdgeLabel var, std::uint64_t q,
                          const CountOptions& opts) {
  require_prime(q);
  const std::size_t n = p.var_count();
  if (n == 0) {
    const bool nonzero = !p.is_zero() && residue(p.coefficient(0), q) != 0;
    return make_record(p, q, nonzero ? 1 : 0);
  }
  if (var >= n) throw LabelError("split variable t" + std::to_string(var) + " out of range");
  require_budget(q, n - 1, opts.budget);

  // Split variable at bit 0, base variables above it.
  std::vector<EdgeLabel> order{var};
  for (EdgeLabel v = 0; v < n; ++v)
    if (v != var) order.push_back(v);

  const auto complement =
      sweep<1>({dense_table(p, q, order)}, n - 1, 1, q, opts.threads,
               [q](const std::array<const std::uint64_t*, 1>& t) -> std::uint64_t {
                 const std::uint64_t b = t[0][0];
                 const std::uint64_t a = t[0][1];
                 if (a != 0) return q - 1;
                 return b != 0 ? q : 0;
               });
  return make_record(p, q, complement);
}

std::uint64_t count_Z(const Multigraph& g, EdgeLabel e, std::uint64_t q, const CountOptions& opts) {
  require_prime(q);
  if (classify_edge(g, e) != EdgeKind::Regular)
    throw PreconditionError("Z-locus needs a regular edge; t" + std::to_string(e) + " is a " +
                            std::string(to_string(classify_edge(g, e))));
  const EdgeMask ambient = g.edge_mask() & ~(EdgeMask{1} << e);
  const std::size_t dims = g.edge_count() - 1;
  require_budget(q, dims, opts.budget);

  const MultilinearPoly deleted = psi_by_trees(delete_edge(g, e)).compacted(ambient);
  const MultilinearPoly contracted = psi_by_trees(contract_edge(g, e)).compacted(ambient);
  std::vector<EdgeLabel> order(dims);
  for (EdgeLabel v = 0; v < dims; ++v) order[v] = v;

  return sweep<2>({dense_table(deleted, q, order), dense_table(contracted, q, order)}, dims, 0, q,
                  opts.threads,
                  [](const std::array<const std::uint64_t*, 2>& t) -> std::uint64_t {
                    return t[0][0] == 0 && t[1][0] == 0 ? 1 : 0;
                  });
}

std::uint64_t count_projective(const CountRecord& rec) {
  if (rec.n == 0 || rec.affine_zero_count == 0)
    throw PreconditionError("no projective hypersurface: polynomial is constant");
  // The origin is always a zero of a homogeneous form of positive degree.
  const std::uint64_t cone = rec.affine_zero_count - 1;
  if (cone % (rec.q - 1) != 0)
    throw ConsistencyError("affine cone size " + std::to_string(cone) + " not divisible by q-1");
  return cone / (rec.q - 1);
}

MultilinearPoly graph_polynomial(const Multigraph& g) {
  return psi_by_trees(g).compacted(g.edge_mask());
}

CountRecord count_graph(const Multigraph& g, std::uint64_t q, CountMethod method,
                        const CountOptions& opts) {
  const MultilinearPoly psi = graph_polynomial(g);
  const EdgeLabel split = psi.var_count() == 0 ? 0 : static_cast<EdgeLabel>(psi.var_count() - 1);
  switch (method) {
    case CountMethod::Brute:
      return count_brute(psi, q, opts);
    case CountMethod::Fibered:
      return count_fibered(psi, split, q, opts);
    case CountMethod::Both: {
      CountRecord fibered = count_fibered(psi, split, q, opts);
      if (count_brute(psi, q, opts) != fibered)
        throw ConsistencyError("brute and fibered counts disagree at q=" + std::to_string(q));
      return fibered;
    }
  }
  throw ConsistencyError("unreachable count method");
}

}  // namespace graphclass
