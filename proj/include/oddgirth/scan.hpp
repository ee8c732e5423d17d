#pragma once

#include "oddgirth/drg_verify.hpp"

#include "json.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oddgirth {

struct ScanOptions {
  int jobs = 1;  // 0 = hardware concurrency
  Tolerances tolerances;
  /// Also test the Proposition-1 biconditional on regular graphs, the excess
  /// identity, and the Lemma-1 properties on every connected graph.
  bool cross_checks = true;
};

/// A graph that met the hypotheses.
struct ScanHit {
  std::string graph6;
  int n = 0;
  int d = 0;
  int odd_girth = 0;
  std::string classification;  // "complete", "cycle", "generalized odd graph" or "alarm"
  bool certified = false;
  std::string intersection_array;
};

struct CrossCheckCounts {
  std::uint64_t regular_checked = 0;
  std::uint64_t prop1_agree = 0;     // p_d(A) = A_d  <=>  definitional distance-regularity
  std::uint64_t prop1_disagree = 0;
  std::uint64_t excess_agree = 0;    // |spectral - average excess| <= tol  <=>  distance-regular
  std::uint64_t excess_disagree = 0;
  std::uint64_t bipartite_checked = 0;
  std::uint64_t bipartite_lemma1_fail = 0;
  std::uint64_t hypothesis_lemma1_pass = 0;
  /// Connected graphs failing Lemma 1 yet meeting the hypotheses.
  std::uint64_t lemma1_contrapositive_violations = 0;
};

struct ScanSummary {
  std::uint64_t examined = 0;  // connected graphs analysed
  std::uint64_t skipped_disconnected = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t certified = 0;
  std::uint64_t alarms = 0;
  std::uint64_t parse_failures = 0;
  std::vector<ScanHit> hits;
  std::vector<std::string> messages;  // parse failures and numerical errors
  CrossCheckCounts cross;

  /// Counters add, lists concatenate; merging chunk results in input order
  /// gives the same summary for any job count.
  void merge(const ScanSummary& other);
};

/// Every labeled connected graph on 1..max_order vertices (max_order <= 7).
ScanSummary scan_orders(int max_order, const ScanOptions& opts = {});

/// One graph6 string per entry; blank entries are ignored.
ScanSummary scan_corpus(std::span<const std::string> lines, const ScanOptions& opts = {});

/// Analyses one graph and records it into `out`.
void scan_graph(const Graph& g, const ScanOptions& opts, ScanSummary& out);

nlohmann::json summary_to_json(const ScanSummary& s);
std::string summary_to_text(const ScanSummary& s);

}  // namespace oddgirth
