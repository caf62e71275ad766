#include "snlab/campaign.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "snlab/errors.hpp"
#include "snlab/formats.hpp"
#include "snlab/graph.hpp"
#include "snlab/matching.hpp"

namespace snlab {

CampaignSource CampaignSource::parse(const std::string& text) {
  if (text == "internal") return {};
  constexpr std::string_view prefix = "graph6:";
  if (text.starts_with(prefix) && text.size() > prefix.size()) {
    return {Kind::Graph6, text.substr(prefix.size())};
  }
  throw InputError("source must be `internal` or `graph6:<path>`, got `" + text + "`");
}

std::string CampaignSource::to_string() const { return kind == Kind::Internal ? "internal" : "graph6:" + path; }

void CampaignConfig::validate() const {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  if (workers < 1) throw InputError("workers must be at least 1");
  if (c_max && *c_max < 0) throw InputError("c_max must be nonnegative");
  if (chunk_size == 0) throw InputError("chunk_size must be positive");
}

nlohmann::ordered_json to_json(const InvariantRecord& r) {
  return {{"n", r.n},         {"m", r.m},         {"c", r.c},         {"eta", r.eta},
          {"balanced", r.balanced}, {"lower", r.lower}, {"upper", r.upper}, {"s", r.s}};
}

nlohmann::ordered_json to_json(const CampaignReport& report, const CampaignConfig& config) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["n_max"] = config.n_max;
  out["c_max"] = config.c_max ? ordered_json(*config.c_max) : ordered_json(nullptr);
  out["source"] = config.source.to_string();
  out["expand_signatures"] = config.expand_signatures;
  out["totals"] = {{"graphs", report.graphs},
                   {"signed_graphs", report.signed_graphs},
                   {"skipped_graphs", report.skipped_graphs}};
  out["bounds"] = {{"violations", report.bound_violations}};
  out["gap"] = {{"violations", report.gap_violations}};
  out["upper_bound"] = {{"checked", report.upper_checked},
                        {"attained", report.upper_attained},
                        {"disagreements", report.upper_disagreements},
                        {"skipped_disconnected", report.upper_skipped_disconnected}};
  ordered_json hist = ordered_json::array();
  for (const auto& [key, slacks] : report.histogram) {
    ordered_json counts = ordered_json::object();
    for (const auto& [s, count] : slacks) counts[std::to_string(s)] = count;
    hist.push_back({{"n", key.first}, {"c", key.second}, {"slack", counts}});
  }
  out["histogram"] = std::move(hist);
  ordered_json cex = ordered_json::array();
  for (const Counterexample& c : report.counterexamples) {
    cex.push_back({{"kind", c.kind}, {"record", to_json(c.record)}, {"sgl", to_sgl(c.graph)}});
  }
  out["counterexamples"] = std::move(cex);
  out["status"] = report.violations() == 0 ? "ok" : "violation";
  return out;
}

namespace {

struct ChunkResult {
  CampaignReport report;
  std::string lines;
};

void merge(CampaignReport& into, CampaignReport&& part) {
  into.graphs += part.graphs;
  into.signed_graphs += part.signed_graphs;
  into.skipped_graphs += part.skipped_graphs;
  into.bound_violations += part.bound_violations;
  into.gap_violations += part.gap_violations;
  into.upper_checked += part.upper_checked;
  into.upper_attained += part.upper_attained;
  into.upper_disagreements += part.upper_disagreements;
  into.upper_skipped_disconnected += part.upper_skipped_disconnected;
  for (auto& [key, slacks] : part.histogram) {
    auto& dst = into.histogram[key];
    for (const auto& [s, count] : slacks) dst[s] += count;
  }
  for (auto& c : part.counterexamples) into.counterexamples.push_back(std::move(c));
}

std::vector<Graph> underlying_graphs(const CampaignConfig& config) {
  std::vector<Graph> out;
  if (config.source.kind == CampaignSource::Kind::Internal) {
    GraphFilter filter;
    filter.max_c = config.c_max;
    for (int n = 1; n <= config.n_max; ++n) {
      auto level = connected_graphs(n, filter, config.capacity);
      out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
  }
  return GraphStream::open_graph6(config.source.path).collect();
}

void scan_graph(const Graph& g, const CampaignConfig& config, ChunkResult& result) {
  CampaignReport& r = result.report;
  const int c = cycle_space_dim(g);
  if (g.order() > config.n_max || (config.c_max && c > *config.c_max)) {
    ++r.skipped_graphs;
    return;
  }
  ++r.graphs;
  const int m = matching_number(g);
  std::optional<UpperBoundPredicate> predicate;
  if (is_connected(g)) predicate.emplace(g);
  const bool expand = config.source.kind == CampaignSource::Kind::Internal || config.expand_signatures;
  std::optional<CotreeSignatures> signatures;
  if (expand) signatures.emplace(g);
  const std::uint64_t count = signatures ? signatures->count() : 1;
  std::string g6;
  if (config.emit_all) g6 = encode_graph6(g);

  for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
    const SignedGraph sg = signatures ? signatures->at(pattern) : SignedGraph(g);
    const InvariantRecord rec = compute_invariants(sg, m, c);
    ++r.signed_graphs;
    ++r.histogram[{rec.n, rec.c}][rec.s];
    if (!rec.within_bounds()) {
      ++r.bound_violations;
      r.counterexamples.push_back({"bounds", sg, rec});
    }
    if (rec.s == 1) {
      ++r.gap_violations;
      r.counterexamples.push_back({"gap", sg, rec});
    }
    if (predicate) {
      ++r.upper_checked;
      const bool attained = rec.eta == rec.upper;
      if (attained) ++r.upper_attained;
      if (predicate->evaluate(sg).holds() != attained) {
        ++r.upper_disagreements;
        r.counterexamples.push_back({"upper-bound", sg, rec});
      }
    } else {
      ++r.upper_skipped_disconnected;
    }
    if (config.emit_all) {
      auto line = to_json(rec);
      line["graph6"] = g6;
      line["pattern"] = pattern;
      result.lines += line.dump();
      result.lines += '\n';
    }
  }
}

}  // namespace

CampaignReport gap_scan(const CampaignConfig& config, std::ostream* records) {
  config.validate();
  const std::vector<Graph> graphs = underlying_graphs(config);
  const std::size_t chunks = (graphs.size() + config.chunk_size - 1) / config.chunk_size;

  std::vector<std::optional<ChunkResult>> slots(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;

  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= chunks) return;
      ChunkResult result;
      std::exception_ptr error;
      try {
        const std::size_t end = std::min(graphs.size(), (k + 1) * config.chunk_size);
        for (std::size_t i = k * config.chunk_size; i < end; ++i) scan_graph(graphs[i], config, result);
      } catch (...) {
        error = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        slots[k] = std::move(result);
        errors[k] = error;
      }
      ready.notify_all();
    }
  };

  const auto threads = static_cast<std::size_t>(config.workers);
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);

  CampaignReport report;
  std::exception_ptr first_error;
  for (std::size_t k = 0; k < chunks; ++k) {
    ChunkResult result;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[k].has_value(); });
      result = std::move(*slots[k]);
      slots[k].reset();
      if (errors[k] && !first_error) first_error = errors[k];
    }
    if (first_error) continue;
    if (records && config.emit_all) *records << result.lines;
    merge(report, std::move(result.report));
  }
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
  return report;
}

}  // namespace snlab
