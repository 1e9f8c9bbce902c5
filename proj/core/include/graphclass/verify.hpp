#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphclass/ffcount.hpp"
#include "graphclass/families.hpp"
#include "graphclass/graph_io.hpp"

namespace graphclass {

enum class ReportFormat { Json, Table };

inline constexpr int kReportSchema = 1;

struct VerifyConfig {
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
  std::uint64_t budget = 1'000'000'000;
  CountMethod method = CountMethod::Fibered;
  std::optional<std::string> out_path;
  ReportFormat format = ReportFormat::Json;
  /// Graphs are verified on this many workers; the report does not change.
  unsigned threads = 1;

  /// Throws std::invalid_argument for empty, repeated or composite primes.
  void validate() const;
};

struct VerifyOutcome {
  Json report;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool all_pass() const noexcept { return failed == 0; }
};

/// Runs every check on every graph and assembles the report in input order.
///
/// Per graph: edge census, psi, counts at each prime, the mod-L verdict, the
/// projective verdict, the deletion-contraction matrix (every edge at every
/// prime) and the candidate class with its constant/tail split. The class
/// is interpolated over the configured primes extended by the next primes
/// up to n + 3 of them. A graph whose counts exceed the budget is reported
/// as skipped, not failed; an unaffordable or non-polynomial class is
/// reported but does not fail the graph.
VerifyOutcome run_verify(std::span<const NamedGraph> graphs, const VerifyConfig& config);

/// Verifies a single graph; the building block of run_verify.
Json verify_graph(const NamedGraph& graph, const VerifyConfig& config);

/// One line per graph for terminal output.
std::string render_table(const Json& report);

}  // namespace graphclass
