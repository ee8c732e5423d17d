#include "oddgirth/scan.hpp"

#include "oddgirth/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

namespace oddgirth {

void ScanSummary::merge(const ScanSummary& o) {
  examined += o.examined;
  skipped_disconnected += o.skipped_disconnected;
  hypothesis_met += o.hypothesis_met;
  certified += o.certified;
  alarms += o.alarms;
  parse_failures += o.parse_failures;
  hits.insert(hits.end(), o.hits.begin(), o.hits.end());
  messages.insert(messages.end(), o.messages.begin(), o.messages.end());
  cross.regular_checked += o.cross.regular_checked;
  cross.prop1_agree += o.cross.prop1_agree;
  cross.prop1_disagree += o.cross.prop1_disagree;
  cross.excess_agree += o.cross.excess_agree;
  cross.excess_disagree += o.cross.excess_disagree;
  cross.bipartite_checked += o.cross.bipartite_checked;
  cross.bipartite_lemma1_fail += o.cross.bipartite_lemma1_fail;
  cross.hypothesis_lemma1_pass += o.cross.hypothesis_lemma1_pass;
  cross.lemma1_contrapositive_violations += o.cross.lemma1_contrapositive_violations;
}

namespace {

std::string classify(const Graph& g, const TheoremReport& rep) {
  if (rep.alarm()) return "alarm";
  const int n = g.order();
  if (g.size() == n * (n - 1) / 2) return "complete";
  if (g.regular_degree() == 2) return "cycle";
  return "generalized odd graph";
}

void cross_check(const Graph& g, const TheoremReport& rep, const ScanOptions& opts, ScanSummary& out) {
  const Spectrum& s = *rep.spectrum;
  auto& cc = out.cross;
  const Lemma1Result lemma = lemma1_check(s, opts.tolerances.lemma1);

  if (!rep.hypotheses.odd_girth.is_finite()) {
    ++cc.bipartite_checked;
    if (!lemma.pass) ++cc.bipartite_lemma1_fail;
  }
  if (rep.hypotheses.hypothesis_met && lemma.pass) ++cc.hypothesis_lemma1_pass;
  if (rep.hypotheses.hypothesis_met && !lemma.pass) ++cc.lemma1_contrapositive_violations;

  if (g.regular_degree() && s.d() >= 1) {
    ++cc.regular_checked;
    const PredistanceSystem ps = predistance_polynomials(s);
    const bool drg = std::holds_alternative<IntersectionArray>(intersection_array(g));
    const bool pd = check_pd_equals_Ad(g, ps, opts.tolerances.matrix).pass;
    ++(pd == drg ? cc.prop1_agree : cc.prop1_disagree);
    const ExcessComparison ex = excess_comparison(g, ps);
    const bool equal = std::abs(ex.spectral_excess - ex.average_excess) <= opts.tolerances.matrix;
    ++(equal == drg ? cc.excess_agree : cc.excess_disagree);
  }
}

}  // namespace

void scan_graph(const Graph& g, const ScanOptions& opts, ScanSummary& out) {
  if (!is_connected(g)) {
    ++out.skipped_disconnected;
    return;
  }
  ++out.examined;
  try {
    const TheoremReport rep = verify_theorem(g, opts.tolerances);
    if (rep.hypotheses.hypothesis_met) {
      ++out.hypothesis_met;
      const bool ok = rep.all_certificates_pass();
      if (ok) ++out.certified;
      else ++out.alarms;
      ScanHit hit;
      hit.graph6 = encode_graph6(g);
      hit.n = g.order();
      hit.d = rep.d();
      hit.odd_girth = rep.hypotheses.odd_girth.value();
      hit.classification = classify(g, rep);
      hit.certified = ok;
      if (rep.conclusion.intersection_array) hit.intersection_array = rep.conclusion.intersection_array->to_string();
      out.hits.push_back(std::move(hit));
    }
    if (opts.cross_checks) cross_check(g, rep, opts, out);
  } catch (const std::exception& e) {
    // A graph the pipeline cannot analyse is never silently certified.
    ++out.alarms;
    out.messages.push_back(encode_graph6(g) + ": " + e.what());
  }
}

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Work>
ScanSummary run_chunks(std::size_t chunks, int jobs, Work work) {
  std::vector<ScanSummary> parts(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chunks; i = next++) work(i, parts[i]);
  };
  const int threads = std::min<int>(resolve_jobs(jobs), static_cast<int>(std::max<std::size_t>(chunks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  ScanSummary total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace

ScanSummary scan_orders(int max_order, const ScanOptions& opts) {
  if (max_order < 1 || max_order > kMaxEnumerationOrder)
    throw InputError("scan order must be in [1, 7], got " + std::to_string(max_order));

  struct Range {
    int n;
    std::uint64_t begin, end;
  };
  constexpr std::uint64_t kChunk = 1 << 14;
  std::vector<Range> ranges;
  for (int n = 1; n <= max_order; ++n) {
    const std::uint64_t total = edge_mask_count(n);
    for (std::uint64_t b = 0; b < total; b += kChunk) ranges.push_back({n, b, std::min(total, b + kChunk)});
  }
  return run_chunks(ranges.size(), opts.jobs, [&](std::size_t i, ScanSummary& out) {
    const Range& r = ranges[i];
    enumerate_connected(r.n, r.begin, r.end, [&](const Graph& g, std::uint64_t) { scan_graph(g, opts, out); });
  });
}

ScanSummary scan_corpus(std::span<const std::string> lines, const ScanOptions& opts) {
  return run_chunks(lines.size(), opts.jobs, [&](std::size_t i, ScanSummary& out) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) return;
    std::optional<Graph> g;
    try {
      g.emplace(parse_graph6(line));
    } catch (const std::exception& e) {
      ++out.parse_failures;
      out.messages.push_back("line " + std::to_string(i + 1) + ": " + e.what());
      return;
    }
    scan_graph(*g, opts, out);
  });
}

nlohmann::json summary_to_json(const ScanSummary& s) {
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : s.hits)
    hits.push_back({{"graph6", h.graph6},
                    {"n", h.n},
                    {"d", h.d},
                    {"odd_girth", h.odd_girth},
                    {"classification", h.classification},
                    {"certified", h.certified},
                    {"intersection_array", h.intersection_array}});
  const auto& c = s.cross;
  return {{"examined", s.examined},
          {"skipped_disconnected", s.skipped_disconnected},
          {"hypothesis_met", s.hypothesis_met},
          {"certified", s.certified},
          {"alarms", s.alarms},
          {"parse_failures", s.parse_failures},
          {"hits", hits},
          {"messages", s.messages},
          {"cross_checks",
           {{"regular_checked", c.regular_checked},
            {"prop1_agree", c.prop1_agree},
            {"prop1_disagree", c.prop1_disagree},
            {"excess_agree", c.excess_agree},
            {"excess_disagree", c.excess_disagree},
            {"bipartite_checked", c.bipartite_checked},
            {"bipartite_lemma1_fail", c.bipartite_lemma1_fail},
            {"hypothesis_lemma1_pass", c.hypothesis_lemma1_pass},
            {"lemma1_contrapositive_violations", c.lemma1_contrapositive_violations}}}};
}

std::string summary_to_text(const ScanSummary& s) {
  std::ostringstream os;
  for (const auto& h : s.hits)
    os << h.graph6 << "  n=" << h.n << " d=" << h.d << " odd_girth=" << h.odd_girth << "  " << h.classification
       << (h.certified ? "" : "  [ALARM]") << "  " << h.intersection_array << "\n";
  for (const auto& m : s.messages) os << "note: " << m << "\n";
  const auto& c = s.cross;
  os << "examined " << s.examined << ", hypothesis met " << s.hypothesis_met << ", certified " << s.certified
     << ", alarms " << s.alarms << ", parse failures " << s.parse_failures << "\n";
  os << "cross-checks: regular " << c.regular_checked << " (p_d(A)=A_d agree " << c.prop1_agree << ", disagree "
     << c.prop1_disagree << "; excess agree " << c.excess_agree << ", disagree " << c.excess_disagree
     << "), bipartite " << c.bipartite_checked << " (lemma 1 fails " << c.bipartite_lemma1_fail << ")\n";
  return os.str();
}

}  // namespace oddgirth
