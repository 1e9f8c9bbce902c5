// graphclass: graph polynomials, point counts over F_p and Grothendieck-class
// checks for Feynman graph hypersurfaces.
//
//   graphclass psi      <graph files> [--family name:m ...] [--catalog]
//   graphclass count    ... [--primes 3,5,7] [--method brute|fibered|both]
//   graphclass class    ...
//   graphclass dc-check ...
//   graphclass verify   ... [--format json|table] [--out report.json]
//   graphclass family   name:m ...
//
// Exit codes: 0 pass, 1 a verdict failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "graphclass/errors.hpp"
#include "graphclass/families.hpp"
#include "graphclass/ffcount.hpp"
#include "graphclass/graph_io.hpp"
#include "graphclass/motive.hpp"
#include "graphclass/primes.hpp"
#include "graphclass/symanzik.hpp"
#include "graphclass/verify.hpp"

namespace gc = graphclass;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> families;
  bool catalog = false;
  std::string primes = "3,5,7,11,13";
  std::uint64_t budget = 1'000'000'000;
  std::string method = "fibered";
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw UsageError("bad prime '" + item + "' in --primes");
    }
  }
  return out;
}

gc::VerifyConfig make_config(const Options& o) {
  gc::VerifyConfig cfg;
  cfg.primes = parse_primes(o.primes);
  cfg.budget = o.budget;
  cfg.threads = o.threads;
  if (!o.out.empty()) cfg.out_path = o.out;
  try {
    cfg.method = gc::parse_count_method(o.method);
    cfg.validate();
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  if (o.format == "json")
    cfg.format = gc::ReportFormat::Json;
  else if (o.format == "table")
    cfg.format = gc::ReportFormat::Table;
  else
    throw UsageError("unknown --format '" + o.format + "'");
  return cfg;
}

std::vector<gc::NamedGraph> load_graphs(const Options& o) {
  std::vector<gc::NamedGraph> graphs;
  if (o.catalog) graphs = gc::standard_catalog();
  for (const std::string& path : o.files) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      graphs.push_back({path, gc::parse_graph(buf.str())});
    } catch (const gc::ParseError& err) {
      throw UsageError(path + ": " + err.what());
    }
  }
  for (const std::string& spec : o.families) {
    try {
      const gc::FamilySpec fs = gc::parse_family_spec(spec);
      graphs.push_back({fs.id(), gc::generate_family(fs)});
    } catch (const std::invalid_argument& err) {
      throw UsageError(err.what());
    }
  }
  if (graphs.empty()) throw UsageError("no graphs given (files, --family name:m or --catalog)");
  return graphs;
}

/// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw UsageError("cannot write " + o.out);
  out << text;
}

int run_psi(const Options& o) {
  const auto graphs = load_graphs(o);
  const auto cfg = make_config(o);
  bool agree_all = true;
  gc::Json list = gc::Json::array();
  std::string table;
  for (const auto& [id, g] : graphs) {
    const gc::MultilinearPoly trees = gc::psi_by_trees(g);
    const bool agree =
        trees == gc::psi_by_matrix_tree(g) && trees == gc::psi_by_deletion_contraction(g);
    agree_all = agree_all && agree;
    gc::Json doc;
    doc["id"] = id;
    doc["psi"] = trees.to_string();
    doc["terms"] = gc::poly_to_json(trees);
    doc["forest_count"] = trees.term_count();
    doc["betti_1"] = gc::betti_1(g);
    doc["methods_agree"] = agree;
    list.push_back(std::move(doc));
    table += id + ": " + trees.to_string() + (agree ? "" : "  [METHODS DISAGREE]") + "\n";
  }
  if (cfg.format == gc::ReportFormat::Table) {
    emit(o, table);
  } else {
    gc::Json report;
    report["schema"] = gc::kReportSchema;
    report["graphs"] = std::move(list);
    emit(o, report.dump(2) + "\n");
  }
  return agree_all ? kExitPass : kExitFail;
}

int run_count(const Options& o) {
  const auto graphs = load_graphs(o);
  const auto cfg = make_config(o);
  const gc::CountOptions opts{cfg.budget, cfg.threads};
  std::string text;
  int status = kExitPass;
  for (const auto& [id, g] : graphs) {
    for (std::uint64_t q : cfg.primes) {
      gc::Json line;
      line["schema"] = gc::kReportSchema;
      line["graph"] = id;
      line["method"] = std::string(gc::to_string(cfg.method));
      try {
        line.update(gc::count_record_to_json(gc::count_graph(g, q, cfg.method, opts)));
      } catch (const gc::BudgetExceeded& err) {
        line["q"] = q;
        line["skipped"] = err.what();
      } catch (const gc::ConsistencyError& err) {
        line["q"] = q;
        line["error"] = err.what();
        status = kExitFail;
      }
      if (cfg.format == gc::ReportFormat::Table) {
        text += id + " q=" + std::to_string(q);
        if (line.contains("complement_count"))
          text += " zeros=" + line["affine_zero_count"].dump() +
                  " complement=" + line["complement_count"].dump() +
                  " projective=" + line["projective_count"].dump() + "\n";
        else
          text += " " + (line.contains("skipped") ? line["skipped"] : line["error"]).get<std::string>() + "\n";
      } else {
        text += line.dump() + "\n";
      }
    }
  }
  emit(o, text);
  return status;
}

int run_class(const Options& o) {
  const auto graphs = load_graphs(o);
  const auto cfg = make_config(o);
  const gc::CountOptions opts{cfg.budget, cfg.threads};
  gc::Json list = gc::Json::array();
  std::string table;
  int status = kExitPass;
  for (const auto& [id, g] : graphs) {
    const auto primes = gc::extend_primes(cfg.primes, g.edge_count() + 3);
    gc::Json doc;
    doc["id"] = id;
    doc["primes"] = primes;
    std::string line = id + ": ";
    try {
      const auto result = gc::interpolate_class(g, primes, opts);
      if (const auto* c = std::get_if<gc::ClassPoly>(&result)) {
        const gc::HodgeSplit split = gc::hodge_form(*c);
        const bool matches = split.constant == gc::predicted_sb_constant(g);
        doc["status"] = "candidate";
        doc["poly"] = c->to_string();
        doc["hodge_form"] = {{"constant", split.constant.get_si()},
                             {"tail", split.tail.to_string()},
                             {"matches_prediction", matches}};
        if (!matches) status = kExitFail;
        line += c->to_string() + "  (constant " + split.constant.get_str() + ")";
      } else {
        doc["status"] = "not_polynomially_consistent";
        doc["reason"] = std::get<gc::NotPolynomiallyConsistent>(result).reason;
        line += "not polynomially consistent";
      }
    } catch (const gc::BudgetExceeded& err) {
      doc["status"] = "skipped";
      doc["reason"] = err.what();
      line += std::string("skipped: ") + err.what();
    }
    list.push_back(std::move(doc));
    table += line + "\n";
  }
  if (cfg.format == gc::ReportFormat::Table) {
    emit(o, table);
  } else {
    gc::Json report;
    report["schema"] = gc::kReportSchema;
    report["graphs"] = std::move(list);
    emit(o, report.dump(2) + "\n");
  }
  return status;
}

int run_dc_check(const Options& o) {
  const auto graphs = load_graphs(o);
  const auto cfg = make_config(o);
  const gc::CountOptions opts{cfg.budget, cfg.threads};
  gc::Json list = gc::Json::array();
  std::string table;
  int status = kExitPass;
  for (const auto& [id, g] : graphs) {
    gc::Json rows = gc::Json::array();
    for (const gc::Edge& ed : g.edges()) {
      for (std::uint64_t q : cfg.primes) {
        gc::Json row;
        row["edge"] = ed.label;
        row["q"] = q;
        try {
          const auto v = gc::dc_identity_check(g, ed.label, q, opts, cfg.method, id);
          const auto& obs = v.observations.front();
          row["tag"] = std::string(gc::to_string(v.tag));
          row["expected"] = obs.expected;
          row["observed"] = obs.observed;
          row["pass"] = v.pass;
          if (!v.pass) status = kExitFail;
          table += id + " e=" + std::to_string(ed.label) + " q=" + std::to_string(q) + " " +
                   std::string(gc::to_string(v.tag)) + " " + std::to_string(obs.observed) +
                   (v.pass ? " == " : " != ") + std::to_string(obs.expected) + "\n";
        } catch (const gc::BudgetExceeded& err) {
          row["skipped"] = err.what();
          table += id + " e=" + std::to_string(ed.label) + " q=" + std::to_string(q) +
                   " skipped\n";
        }
        rows.push_back(std::move(row));
      }
    }
    list.push_back({{"id", id}, {"checks", std::move(rows)}});
  }
  if (cfg.format == gc::ReportFormat::Table) {
    emit(o, table);
  } else {
    gc::Json report;
    report["schema"] = gc::kReportSchema;
    report["graphs"] = std::move(list);
    emit(o, report.dump(2) + "\n");
  }
  return status;
}

int run_verify(const Options& o) {
  const auto graphs = load_graphs(o);
  const auto cfg = make_config(o);
  const gc::VerifyOutcome outcome = gc::run_verify(graphs, cfg);
  emit(o, cfg.format == gc::ReportFormat::Table ? gc::render_table(outcome.report)
                                                : outcome.report.dump(2) + "\n");
  return outcome.all_pass() ? kExitPass : kExitFail;
}

int run_family(const Options& o, const std::vector<std::string>& specs) {
  Options with = o;
  with.families.insert(with.families.end(), specs.begin(), specs.end());
  const auto graphs = load_graphs(with);
  std::string text;
  if (o.format == "json") {
    gc::Json list = gc::Json::array();
    for (const auto& [id, g] : graphs) {
      gc::Json doc = gc::graph_to_json(g);
      doc["id"] = id;
      list.push_back(std::move(doc));
    }
    gc::Json report;
    report["schema"] = gc::kReportSchema;
    report["graphs"] = std::move(list);
    text = report.dump(2) + "\n";
  } else {
    for (const auto& [id, g] : graphs) text += "# " + id + "\n" + gc::to_edge_list(g);
  }
  emit(o, text);
  return kExitPass;
}

void add_graph_options(CLI::App* cmd, Options& o) {
  cmd->add_option("graphs", o.files, "Graph files (edge list or JSON)");
  cmd->add_option("--family", o.families, "Generated graph, e.g. cycle:4 (repeatable)");
  cmd->add_flag("--catalog", o.catalog, "Include the standard catalog");
  cmd->add_option("--primes", o.primes, "Comma-separated primes")->capture_default_str();
  cmd->add_option("--budget", o.budget, "Max point evaluations per count")->capture_default_str();
  cmd->add_option("--method", o.method, "brute|fibered|both")->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to this path");
  cmd->add_option("--format", o.format, "json|table")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph hypersurfaces: polynomials, F_p point counts, class checks"};
  app.require_subcommand(1);
  Options o;

  auto* psi = app.add_subcommand("psi", "Graph polynomial, cross-checked three ways");
  auto* count = app.add_subcommand("count", "Point counts as JSON lines, one per (graph, q)");
  auto* cls = app.add_subcommand("class", "Candidate class in Z[L] by interpolation");
  auto* verify = app.add_subcommand("verify", "Full verification report");
  auto* dc = app.add_subcommand("dc-check", "Deletion-contraction identities per edge and prime");
  for (auto* cmd : {psi, count, cls, verify, dc}) add_graph_options(cmd, o);

  auto* family = app.add_subcommand("family", "Print generated family graphs");
  std::vector<std::string> specs;
  family->add_option("specs", specs, "name:m ...");
  family->add_option("--family", o.families, "name:m (repeatable)");
  family->add_flag("--catalog", o.catalog, "Print the standard catalog");
  family->add_option("--out", o.out, "Write output to this path");
  family->add_option("--format", o.format, "edges|json")->capture_default_str();
  o.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*psi) return run_psi(o);
    if (*count) return run_count(o);
    if (*cls) return run_class(o);
    if (*verify) return run_verify(o);
    if (*dc) return run_dc_check(o);
    if (*family) {
      if (family->count("--format") == 0) o.format = "edges";
      return run_family(o, specs);
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
