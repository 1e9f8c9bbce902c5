#include "graphclass/motive.hpp"

#include <algorithm>
#include <sstream>

#include "graphclass/errors.hpp"
#include "graphclass/primes.hpp"

namespace graphclass {

ClassPoly::ClassPoly(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

ClassPoly ClassPoly::lefschetz_power(std::size_t k) {
  std::vector<mpz_class> c(k + 1, 0);
  c[k] = 1;
  return ClassPoly(std::move(c));
}

void ClassPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class ClassPoly::evaluate(const mpz_class& value) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

std::string ClassPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const mpz_class mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'L';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return ClassPoly();
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ClassPoly(std::move(out));
}

ClassPoly operator+(const ClassPoly& a, const ClassPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return ClassPoly(std::move(out));
}

ClassPoly operator-(const ClassPoly& a, const ClassPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return ClassPoly(std::move(out));
}

InterpolationResult interpolate_samples(std::span<const CountSample> samples,
                                        std::size_t max_degree) {
  const std::size_t fit = max_degree + 1;
  if (samples.size() < fit + 2)
    throw std::invalid_argument("interpolation of degree " + std::to_string(max_degree) +
                                " needs at least " + std::to_string(fit + 2) + " samples, got " +
                                std::to_string(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].q == samples[j].q) throw std::invalid_argument("duplicate sample point");

  // Newton divided differences on the first `fit` samples.
  std::vector<mpq_class> x(fit);
  std::vector<mpq_class> dd(fit);
  for (std::size_t i = 0; i < fit; ++i) {
    x[i] = samples[i].q;
    dd[i] = mpq_class(samples[i].value);
  }
  for (std::size_t level = 1; level < fit; ++level) {
    for (std::size_t i = fit - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);
      dd[i].canonicalize();
    }
  }

  // Newton form to power basis by Horner on (X - x_k).
  std::vector<mpq_class> power{dd[fit - 1]};
  for (std::size_t k = fit - 1; k-- > 0;) {
    std::vector<mpq_class> next(power.size() + 1, 0);
    for (std::size_t i = 0; i < power.size(); ++i) {
      next[i + 1] += power[i];
      next[i] -= x[k] * power[i];
    }
    next[0] += dd[k];
    power = std::move(next);
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(power.size());
  for (std::size_t i = 0; i < power.size(); ++i) {
    mpq_class& c = power[i];
    c.canonicalize();
    if (c.get_den() != 1)
      return NotPolynomiallyConsistent{"coefficient of L^" + std::to_string(i) + " is " +
                                       c.get_str() + ", not an integer"};
    coeffs.push_back(c.get_num());
  }
  ClassPoly candidate(std::move(coeffs));
  for (std::size_t i = fit; i < samples.size(); ++i) {
    const mpz_class at = candidate.evaluate(samples[i].q);
    if (at != samples[i].value)
      return NotPolynomiallyConsistent{"held-out prime " + std::to_string(samples[i].q) +
                                       " gives " + samples[i].value.get_str() +
                                       ", candidate predicts " + at.get_str()};
  }
  return candidate;
}

InterpolationResult interpolate_class(const Multigraph& g, std::span<const std::uint64_t> primes,
                                      const CountOptions& opts) {
  const std::size_t n = g.edge_count();
  if (primes.size() < n + 3)
    throw std::invalid_argument("class of a graph with " + std::to_string(n) + " edges needs " +
                                std::to_string(n + 3) + " primes, got " +
                                std::to_string(primes.size()));
  std::vector<CountSample> samples;
  samples.reserve(primes.size());
  for (std::uint64_t q : primes) {
    const CountRecord rec = count_graph(g, q, CountMethod::Fibered, opts);
    samples.push_back({q, mpz_class(static_cast<unsigned long>(rec.complement_count))});
  }
  return interpolate_samples(samples, n);
}

int predicted_sb_constant(const Multigraph& g) {
  if (g.loop_mask() != g.edge_mask()) return 0;
  return g.edge_count() % 2 == 0 ? 1 : -1;
}

std::string_view to_string(TheoremTag tag) noexcept {
  switch (tag) {
    case TheoremTag::ModL: return "modL";
    case TheoremTag::Lrat: return "Lrat";
    case TheoremTag::DcBridge: return "dc-bridge";
    case TheoremTag::DcLoop: return "dc-loop";
    case TheoremTag::DcRegular: return "dc-regular";
  }
  return "unknown";
}

namespace {

std::int64_t normalized_residue(std::int64_t value, std::uint64_t q) {
  const auto m = static_cast<std::int64_t>(q);
  return ((value % m) + m) % m;
}

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw BudgetExceeded("count " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

void finalize(CongruenceVerdict& v) {
  v.pass = v.applicable && !v.observations.empty() &&
           std::all_of(v.observations.begin(), v.observations.end(),
                       [](const PrimeObservation& o) { return o.pass; });
}

}  // namespace

CongruenceVerdict modL_verdict(const Multigraph& g, std::span<const CountRecord> records,
                               std::string graph_id) {
  CongruenceVerdict v;
  v.graph_id = std::move(graph_id);
  v.tag = TheoremTag::ModL;
  const int predicted = predicted_sb_constant(g);
  v.expectation = "|Y_G(F_q)| = " + std::to_string(predicted) + " mod q";
  for (const CountRecord& rec : records) {
    PrimeObservation o;
    o.q = rec.q;
    o.expected = normalized_residue(predicted, rec.q);
    o.observed = static_cast<std::int64_t>(rec.complement_count % rec.q);
    o.pass = o.expected == o.observed;
    v.observations.push_back(o);
  }
  finalize(v);
  return v;
}

CongruenceVerdict projective_verdict(const Multigraph& g, std::span<const CountRecord> records,
                                     std::string graph_id) {
  CongruenceVerdict v;
  v.graph_id = std::move(graph_id);
  v.tag = TheoremTag::Lrat;
  v.expectation = "|X_G(F_q)| = 1 mod q";
  if (g.is_forest() || g.loop_mask() == g.edge_mask()) {
    v.applicable = false;
    v.expectation = g.is_forest() ? "inapplicable: G is a forest"
                                  : "inapplicable: G has no non-looping edge";
    return v;
  }
  for (const CountRecord& rec : records) {
    if (!rec.projective_count) throw ConsistencyError("non-forest graph with constant psi");
    PrimeObservation o;
    o.q = rec.q;
    o.expected = normalized_residue(1, rec.q);
    o.observed = static_cast<std::int64_t>(*rec.projective_count % rec.q);
    o.pass = o.expected == o.observed;
    v.observations.push_back(o);
  }
  finalize(v);
  return v;
}

namespace {

std::vector<CountRecord> count_all(const Multigraph& g, std::span<const std::uint64_t> primes,
                                   const CountOptions& opts, CountMethod method) {
  std::vector<CountRecord> out;
  out.reserve(primes.size());
  for (std::uint64_t q : primes) out.push_back(count_graph(g, q, method, opts));
  return out;
}

}  // namespace

CongruenceVerdict check_modL_congruence(const Multigraph& g, std::span<const std::uint64_t> primes,
                                        const CountOptions& opts, CountMethod method,
                                        std::string graph_id) {
  return modL_verdict(g, count_all(g, primes, opts, method), std::move(graph_id));
}

CongruenceVerdict check_projective_congruence(const Multigraph& g,
                                              std::span<const std::uint64_t> primes,
                                              const CountOptions& opts, CountMethod method,
                                              std::string graph_id) {
  if (g.is_forest() || g.loop_mask() == g.edge_mask())
    return projective_verdict(g, {}, std::move(graph_id));
  return projective_verdict(g, count_all(g, primes, opts, method), std::move(graph_id));
}

TheoremTag dc_tag(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::Bridge: return TheoremTag::DcBridge;
    case EdgeKind::Loop: return TheoremTag::DcLoop;
    case EdgeKind::Regular: return TheoremTag::DcRegular;
  }
  return TheoremTag::DcRegular;
}

PrimeObservation dc_observation(EdgeKind kind, std::size_t n, std::uint64_t q,
                                std::uint64_t y_graph, std::uint64_t y_deleted,
                                std::uint64_t z_count) {
  const mpz_class mq(static_cast<unsigned long>(q));
  const mpz_class y_del(static_cast<unsigned long>(y_deleted));
  mpz_class rhs;
  switch (kind) {
    case EdgeKind::Bridge:
      rhs = mq * y_del;
      break;
    case EdgeKind::Loop:
      rhs = (mq - 1) * y_del;
      break;
    case EdgeKind::Regular: {
      mpz_class ambient;
      mpz_pow_ui(ambient.get_mpz_t(), mq.get_mpz_t(), n - 1);
      rhs = mq * (ambient - mpz_class(static_cast<unsigned long>(z_count))) - y_del;
      break;
    }
  }
  PrimeObservation o;
  o.q = q;
  o.expected = to_int64(rhs);
  o.observed = to_int64(mpz_class(static_cast<unsigned long>(y_graph)));
  o.pass = o.expected == o.observed;
  return o;
}

CongruenceVerdict dc_identity_check(const Multigraph& g, EdgeLabel e, std::uint64_t q,
                                    const CountOptions& opts, CountMethod method,
                                    std::string graph_id) {
  const EdgeKind kind = classify_edge(g, e);
  CongruenceVerdict v;
  v.graph_id = std::move(graph_id);
  v.tag = dc_tag(kind);
  switch (kind) {
    case EdgeKind::Bridge: v.expectation = "|Y_G| = q |Y_{G-e}|"; break;
    case EdgeKind::Loop: v.expectation = "|Y_G| = (q-1) |Y_{G-e}|"; break;
    case EdgeKind::Regular: v.expectation = "|Y_G| = q (q^{n-1} - |Z|) - |Y_{G-e}|"; break;
  }
  const std::uint64_t y_graph = count_graph(g, q, method, opts).complement_count;
  const std::uint64_t y_deleted = count_graph(delete_edge(g, e), q, method, opts).complement_count;
  const std::uint64_t z = kind == EdgeKind::Regular ? count_Z(g, e, q, opts) : 0;
  v.observations.push_back(dc_observation(kind, g.edge_count(), q, y_graph, y_deleted, z));
  finalize(v);
  return v;
}

HodgeSplit hodge_form(const ClassPoly& c) {
  const auto& coeffs = c.coefficients();
  HodgeSplit split;
  split.constant = c.constant_term();
  if (coeffs.size() > 1) split.tail = ClassPoly(std::vector<mpz_class>(coeffs.begin() + 1, coeffs.end()));
  return split;
}

}  // namespace graphclass
