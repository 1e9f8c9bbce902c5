#include "graphclass/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "graphclass/errors.hpp"
#include "graphclass/motive.hpp"
#include "graphclass/primes.hpp"
#include "graphclass/symanzik.hpp"

namespace graphclass {

namespace {

Json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json class_json(const ClassPoly& c) {
  Json coeffs = Json::array();
  for (const mpz_class& x : c.coefficients()) coeffs.push_back(mpz_json(x));
  Json doc;
  doc["poly"] = c.to_string();
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

Json observation_json(const PrimeObservation& o) {
  Json doc;
  doc["q"] = o.q;
  doc["expected"] = o.expected;
  doc["observed"] = o.observed;
  doc["pass"] = o.pass;
  return doc;
}

Json verdict_json(const CongruenceVerdict& v) {
  Json doc;
  doc["tag"] = std::string(to_string(v.tag));
  doc["expectation"] = v.expectation;
  doc["applicable"] = v.applicable;
  Json obs = Json::array();
  for (const auto& o : v.observations) obs.push_back(observation_json(o));
  doc["observations"] = std::move(obs);
  doc["pass"] = v.pass;
  return doc;
}

Json labels_json(EdgeMask mask) {
  Json out = Json::array();
  for (EdgeLabel e : labels_of(mask)) out.push_back(e);
  return out;
}

}  // namespace

void VerifyConfig::validate() const {
  if (primes.empty()) throw std::invalid_argument("prime list is empty");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]) || primes[i] >= (std::uint64_t{1} << 32))
      throw std::invalid_argument(std::to_string(primes[i]) + " is not a supported prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j])
        throw std::invalid_argument("prime " + std::to_string(primes[i]) + " listed twice");
  }
  if (budget == 0) throw std::invalid_argument("budget must be positive");
}

Json verify_graph(const NamedGraph& named, const VerifyConfig& config) {
  const Multigraph& g = named.graph;
  const CountOptions opts{config.budget, 1};

  EdgeMask bridges = 0;
  EdgeMask loops = 0;
  EdgeMask regular = 0;
  for (const Edge& ed : g.edges()) {
    const EdgeMask bit = EdgeMask{1} << ed.label;
    switch (classify_edge(g, ed.label)) {
      case EdgeKind::Bridge: bridges |= bit; break;
      case EdgeKind::Loop: loops |= bit; break;
      case EdgeKind::Regular: regular |= bit; break;
    }
  }

  Json doc;
  doc["id"] = named.id;
  doc["vertex_count"] = g.vertex_count();
  doc["edge_count"] = g.edge_count();
  doc["edge_census"] = {{"bridges", labels_json(bridges)},
                        {"loops", labels_json(loops)},
                        {"regular", labels_json(regular)}};
  doc["psi"] = psi_by_trees(g).to_string();
  const int predicted = predicted_sb_constant(g);
  doc["predicted_sb_constant"] = predicted;

  bool pass = true;
  try {
    std::vector<CountRecord> records;
    for (std::uint64_t q : config.primes) records.push_back(count_graph(g, q, config.method, opts));

    Json dc = Json::array();
    for (const Edge& ed : g.edges()) {
      const EdgeKind kind = classify_edge(g, ed.label);
      const Multigraph deleted = delete_edge(g, ed.label);
      Json row;
      row["edge"] = ed.label;
      row["kind"] = std::string(to_string(kind));
      row["tag"] = std::string(to_string(dc_tag(kind)));
      Json obs = Json::array();
      bool row_pass = true;
      for (const CountRecord& rec : records) {
        const std::uint64_t y_del = count_graph(deleted, rec.q, config.method, opts).complement_count;
        const std::uint64_t z = kind == EdgeKind::Regular ? count_Z(g, ed.label, rec.q, opts) : 0;
        const PrimeObservation o =
            dc_observation(kind, g.edge_count(), rec.q, rec.complement_count, y_del, z);
        row_pass = row_pass && o.pass;
        Json oj = observation_json(o);
        if (kind == EdgeKind::Regular) oj["z_count"] = z;
        obs.push_back(std::move(oj));
      }
      row["observations"] = std::move(obs);
      row["pass"] = row_pass;
      pass = pass && row_pass;
      dc.push_back(std::move(row));
    }

    Json counts = Json::array();
    for (const CountRecord& rec : records) counts.push_back(count_record_to_json(rec));
    doc["counts"] = std::move(counts);

    const CongruenceVerdict modl = modL_verdict(g, records, named.id);
    const CongruenceVerdict lrat = projective_verdict(g, records, named.id);
    pass = pass && modl.pass && (!lrat.applicable || lrat.pass);
    doc["modL"] = verdict_json(modl);
    doc["Lrat"] = verdict_json(lrat);
    doc["dc_check"] = std::move(dc);
  } catch (const BudgetExceeded& err) {
    doc["status"] = "skipped";
    doc["skip_reason"] = err.what();
    return doc;
  }

  const std::vector<std::uint64_t> class_primes = extend_primes(config.primes, g.edge_count() + 3);
  Json cls;
  Json primes_json = Json::array();
  for (std::uint64_t q : class_primes) primes_json.push_back(q);
  cls["primes"] = std::move(primes_json);
  try {
    const InterpolationResult result = interpolate_class(g, class_primes, opts);
    if (const auto* candidate = std::get_if<ClassPoly>(&result)) {
      cls["status"] = "candidate";
      cls.update(class_json(*candidate));
      const HodgeSplit split = hodge_form(*candidate);
      const bool matches = split.constant == predicted;
      Json hodge;
      hodge["constant"] = mpz_json(split.constant);
      hodge["tail"] = split.tail.to_string();
      hodge["matches_prediction"] = matches;
      doc["class"] = std::move(cls);
      doc["hodge_form"] = std::move(hodge);
      pass = pass && matches;
    } else {
      cls["status"] = "not_polynomially_consistent";
      cls["reason"] = std::get<NotPolynomiallyConsistent>(result).reason;
      doc["class"] = std::move(cls);
    }
  } catch (const BudgetExceeded& err) {
    cls["status"] = "skipped";
    cls["reason"] = err.what();
    doc["class"] = std::move(cls);
  }

  doc["status"] = pass ? "pass" : "fail";
  return doc;
}

VerifyOutcome run_verify(std::span<const NamedGraph> graphs, const VerifyConfig& config) {
  config.validate();
  std::vector<Json> results(graphs.size());

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(config.threads, 1, std::max<std::size_t>(graphs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) results[i] = verify_graph(graphs[i], config);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  VerifyOutcome outcome;
  Json list = Json::array();
  for (Json& r : results) {
    const std::string status = r.at("status").get<std::string>();
    if (status == "pass") ++outcome.passed;
    else if (status == "fail") ++outcome.failed;
    else ++outcome.skipped;
    list.push_back(std::move(r));
  }

  Json primes = Json::array();
  for (std::uint64_t q : config.primes) primes.push_back(q);
  Json& report = outcome.report;
  report["schema"] = kReportSchema;
  report["field"] = "F_p shadow: point counts over prime fields";
  report["limitations"] = {
      "prime fields only; no counts over extension fields F_{p^k}",
      "classes are candidates confirmed at held-out primes, not proofs of polynomiality"};
  report["config"] = {{"primes", std::move(primes)},
                      {"budget", config.budget},
                      {"method", std::string(to_string(config.method))}};
  report["graphs"] = std::move(list);
  report["summary"] = {{"graphs", graphs.size()},
                       {"passed", outcome.passed},
                       {"failed", outcome.failed},
                       {"skipped", outcome.skipped}};
  report["overall_pass"] = outcome.all_pass();
  return outcome;
}

std::string render_table(const Json& report) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "graph" << std::setw(4) << "n" << std::setw(5) << "c_SB"
     << std::setw(8) << "modL" << std::setw(8) << "Lrat" << std::setw(8) << "dc" << std::setw(26)
     << "class" << "status\n";
  auto verdict = [](const Json& g, const char* key) -> std::string {
    if (!g.contains(key)) return "-";
    const Json& v = g.at(key);
    if (!v.at("applicable").get<bool>()) return "n/a";
    return v.at("pass").get<bool>() ? "ok" : "FAIL";
  };
  for (const Json& g : report.at("graphs")) {
    std::string dc = "-";
    if (g.contains("dc_check")) {
      dc = "ok";
      for (const Json& row : g.at("dc_check"))
        if (!row.at("pass").get<bool>()) dc = "FAIL";
    }
    std::string cls = "-";
    if (g.contains("class")) {
      const Json& c = g.at("class");
      cls = c.at("status") == "candidate" ? c.at("poly").get<std::string>()
                                          : c.at("status").get<std::string>();
    }
    os << std::setw(28) << g.at("id").get<std::string>() << std::setw(4)
       << g.at("edge_count").get<std::size_t>() << std::setw(5)
       << g.at("predicted_sb_constant").get<int>() << std::setw(8) << verdict(g, "modL")
       << std::setw(8) << verdict(g, "Lrat") << std::setw(8) << dc << std::setw(26) << cls
       << g.at("status").get<std::string>() << '\n';
  }
  const Json& s = report.at("summary");
  os << "passed " << s.at("passed") << ", failed " << s.at("failed") << ", skipped "
     << s.at("skipped") << '\n';
  return os.str();
}

}  // namespace graphclass
