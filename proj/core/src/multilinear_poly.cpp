#include "graphclass/multilinear_poly.hpp"

#include <bit>
#include <sstream>
#include <vector>

#include "graphclass/errors.hpp"
#include "graphclass/primes.hpp"

namespace graphclass {

namespace {

void require_fits(std::size_t var_count, EdgeMask vars) {
  if (var_count > kMaxLabels)
    throw std::invalid_argument("at most " + std::to_string(kMaxLabels) + " variables supported");
  if (var_count < 64 && (vars >> var_count) != 0)
    throw std::out_of_range("monomial uses a variable beyond var_count");
}

}  // namespace

MultilinearPoly::MultilinearPoly(std::size_t var_count) : var_count_(var_count) {
  require_fits(var_count, 0);
}

MultilinearPoly MultilinearPoly::constant(std::size_t var_count, const mpz_class& c) {
  return monomial(var_count, 0, c);
}

MultilinearPoly MultilinearPoly::monomial(std::size_t var_count, EdgeMask vars,
                                          const mpz_class& c) {
  MultilinearPoly p(var_count);
  p.add_term(vars, c);
  return p;
}

bool MultilinearPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

EdgeMask MultilinearPoly::support() const noexcept {
  EdgeMask m = 0;
  for (const auto& [vars, c] : terms_) m |= vars;
  return m;
}

int MultilinearPoly::homogeneous_degree() const noexcept {
  if (terms_.empty()) return -1;
  const int d = std::popcount(terms_.begin()->first);
  for (const auto& [vars, c] : terms_)
    if (std::popcount(vars) != d) return -1;
  return d;
}

mpz_class MultilinearPoly::coefficient(EdgeMask vars) const {
  auto it = terms_.find(vars);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultilinearPoly::add_term(EdgeMask vars, const mpz_class& c) {
  require_fits(var_count_, vars);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(vars, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& rhs) {
  if (rhs.var_count_ > var_count_) var_count_ = rhs.var_count_;
  for (const auto& [vars, c] : rhs.terms_) add_term(vars, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& rhs) {
  if (rhs.var_count_ > var_count_) var_count_ = rhs.var_count_;
  for (const auto& [vars, c] : rhs.terms_) add_term(vars, -c);
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out(std::max(a.var_count_, b.var_count_));
  for (const auto& [va, ca] : a.terms_) {
    for (const auto& [vb, cb] : b.terms_) {
      if (va & vb) throw PreconditionError("product is not multilinear");
      out.add_term(va | vb, ca * cb);
    }
  }
  return out;
}

MultilinearPoly MultilinearPoly::times_var(EdgeLabel var) const {
  const EdgeMask bit = EdgeMask{1} << var;
  MultilinearPoly out(var_count_);
  for (const auto& [vars, c] : terms_) {
    if (vars & bit) throw PreconditionError("t" + std::to_string(var) + " already occurs");
    out.add_term(vars | bit, c);
  }
  return out;
}

MultilinearPoly MultilinearPoly::compacted(EdgeMask ambient) const {
  if (support() & ~ambient) throw std::invalid_argument("polynomial uses a variable outside the ambient set");
  const auto labels = labels_of(ambient);
  MultilinearPoly out(labels.size());
  for (const auto& [vars, c] : terms_) {
    EdgeMask packed = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if ((vars >> labels[i]) & 1U) packed |= EdgeMask{1} << i;
    out.add_term(packed, c);
  }
  return out;
}

MultilinearPoly MultilinearPoly::with_var_count(std::size_t var_count) const {
  MultilinearPoly out(var_count);
  for (const auto& [vars, c] : terms_) out.add_term(vars, c);
  return out;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [vars, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (vars == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << '*';
    bool first_var = true;
    for (EdgeLabel v : labels_of(vars)) {
      if (!first_var) os << '*';
      first_var = false;
      os << 't' << v;
    }
  }
  return os.str();
}

std::uint64_t evaluate(const MultilinearPoly& p, std::span<const std::uint64_t> x,
                       std::uint64_t q) {
  require_prime(q);
  if (x.size() != p.var_count())
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(p.var_count()));
  std::vector<std::uint64_t> xs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) xs[i] = x[i] % q;
  std::uint64_t acc = 0;
  for (const auto& [vars, c] : p.terms()) {
    std::uint64_t term = mpz_fdiv_ui(c.get_mpz_t(), q);
    for (EdgeMask m = vars; m && term; m &= m - 1) term = term * xs[std::countr_zero(m)] % q;
    acc = (acc + term) % q;
  }
  return acc;
}

std::pair<MultilinearPoly, MultilinearPoly> split_last_var(const MultilinearPoly& p,
                                                           EdgeLabel var) {
  const EdgeMask bit = EdgeMask{1} << var;
  MultilinearPoly with(p.var_count());
  MultilinearPoly without(p.var_count());
  for (const auto& [vars, c] : p.terms()) {
    if (vars & bit)
      with.add_term(vars & ~bit, c);
    else
      without.add_term(vars, c);
  }
  return {std::move(with), std::move(without)};
}

}  // namespace graphclass
