#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "snlab/enumeration.hpp"
#include "snlab/theorems.hpp"

namespace snlab {

struct CampaignSource {
  enum class Kind { Internal, Graph6 };

  Kind kind = Kind::Internal;
  std::string path;

  // "internal" or "graph6:<path>"; throws InputError otherwise.
  static CampaignSource parse(const std::string& text);
  std::string to_string() const;
};

struct CampaignConfig {
  int n_max = 1;
  std::optional<int> c_max;
  CampaignSource source;
  int workers = 1;
  bool emit_all = false;
  // graph6 input: run every cotree signature (true) or only the all-positive one.
  bool expand_signatures = true;
  std::size_t chunk_size = 16;
  EnumerationCapacity capacity = EnumerationCapacity::defaults();

  // Throws InputError when n_max < 1, workers < 1, c_max < 0 or chunk_size = 0.
  void validate() const;
};

struct Counterexample {
  std::string kind;  // "bounds", "gap" or "upper-bound"
  SignedGraph graph;
  InvariantRecord record;
};

struct CampaignReport {
  std::uint64_t graphs = 0;
  std::uint64_t signed_graphs = 0;
  std::uint64_t skipped_graphs = 0;         // graph6 input outside n_max / c_max
  std::uint64_t bound_violations = 0;
  std::uint64_t gap_violations = 0;         // records with s = 1
  std::uint64_t upper_checked = 0;
  std::uint64_t upper_attained = 0;
  std::uint64_t upper_disagreements = 0;
  std::uint64_t upper_skipped_disconnected = 0;
  // (n, c) -> slack -> count
  std::map<std::pair<int, int>, std::map<int, std::uint64_t>> histogram;
  std::vector<Counterexample> counterexamples;

  std::uint64_t violations() const noexcept { return bound_violations + gap_violations + upper_disagreements; }
};

nlohmann::ordered_json to_json(const InvariantRecord& r);
nlohmann::ordered_json to_json(const CampaignReport& report, const CampaignConfig& config);

// Enumerates underlying graphs from the configured source, evaluates every
// cotree signature of each, and checks the nullity bounds, the gap s != 1 and
// the upper-bound characterisation. Work is split into fixed chunks pulled by
// `workers` threads; results are merged in chunk order, so the report and
// the emitted record stream do not depend on the worker count.
//
// With emit_all, one JSON line per signed graph is written to *records.
// Throws CapacityError or ParseError from the source.
CampaignReport gap_scan(const CampaignConfig& config, std::ostream* records = nullptr);

}  // namespace snlab
