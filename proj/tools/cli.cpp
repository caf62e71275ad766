#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "snlab/campaign.hpp"
#include "snlab/errors.hpp"
#include "snlab/formats.hpp"
#include "snlab/linalg.hpp"
#include "snlab/matching.hpp"
#include "snlab/theorems.hpp"

namespace snlab::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kSachsOrderCap = 12;

std::vector<SglRecord> load_sgl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_sgl(in, path);
}

int cmd_invariants(const std::string& input, std::ostream& out, std::ostream& err) {
  int code = kOk;
  for (const SglRecord& rec : load_sgl(input)) {
    try {
      out << to_json(invariant_record(rec.graph)).dump() << '\n';
    } catch (const TheoremViolation& v) {
      err << input << ":" << rec.line << ": " << v.what() << '\n';
      out << to_json(v.record()).dump() << '\n';
      code = kViolation;
    }
  }
  return code;
}

int cmd_classify(const std::string& input, std::ostream& out) {
  int code = kOk;
  std::size_t index = 0;
  for (const SglRecord& rec : load_sgl(input)) {
    ordered_json line{{"index", index++}, {"line", rec.line}};
    try {
      const UnicyclicClass cls = classify_unicyclic(rec.graph);
      const int n = rec.graph.order();
      const int predicted = cls.predicted_eta(n, matching_number(rec.graph.graph()));
      const int eta = nullity(rec.graph);
      line["case"] = cls.case_number;
      line["q"] = cls.q;
      line["predicted_eta"] = predicted;
      line["eta"] = eta;
      line["agree"] = predicted == eta;
      if (predicted != eta) code = kViolation;
    } catch (const InputError& e) {
      line["error"] = e.what();
    }
    out << line.dump() << '\n';
  }
  return code;
}

int cmd_sachs(const std::string& input, std::ostream& out, std::ostream& err) {
  int code = kOk;
  std::size_t index = 0;
  for (const SglRecord& rec : load_sgl(input)) {
    if (rec.graph.order() > kSachsOrderCap) {
      err << input << ":" << rec.line << ": order " << rec.graph.order() << " exceeds the Sachs cap of "
          << kSachsOrderCap << '\n';
      return kCapacity;
    }
    const auto coeffs = sachs_coefficients(rec.graph);
    const auto poly = char_poly_exact(signed_adjacency(rec.graph));
    const bool agree = std::equal(coeffs.begin(), coeffs.end(), poly.coefficients().begin(), poly.coefficients().end());
    if (!agree) code = kViolation;
    out << ordered_json{{"index", index++}, {"line", rec.line}, {"coefficients", coeffs}, {"agree", agree}}.dump()
        << '\n';
  }
  return code;
}

int cmd_generate(const FamilyParams& p, const std::optional<std::string>& path, std::ostream& out,
                 std::ostream& err) {
  if (p.l1 < 0 || p.l2 < 0 || p.l3 < 0 || p.c() < 1) {
    err << "generate: need l1, l2, l3 >= 0 with l1 + l2 + l3 >= 1\n";
    return kUsage;
  }
  const FamilyGraph fam = generate_family(p);
  const InvariantRecord rec = compute_invariants(fam.graph);
  const FamilyPrediction& pre = fam.predicted;
  const FamilyPrediction got{rec.n, rec.m, rec.c, rec.eta, rec.s};

  out << std::left << std::setw(10) << "quantity" << std::setw(11) << "predicted" << "computed\n";
  auto row = [&](const char* name, int a, int b) {
    out << std::setw(10) << name << std::setw(11) << a << b << '\n';
  };
  row("n", pre.n, got.n);
  row("m", pre.m, got.m);
  row("c", pre.c, got.c);
  row("eta", pre.eta, got.eta);
  row("s", pre.s, got.s);
  out << (pre == got ? "match\n" : "MISMATCH\n");

  if (path) {
    std::ofstream file(*path);
    if (!file) throw InputError("cannot write " + *path);
    write_sgl(file, fam.graph);
  }
  return pre == got ? kOk : kViolation;
}

struct VerifyOptions {
  CampaignConfig config;
  std::optional<std::string> out;
  bool no_expand = false;
  bool timing = false;
};

int cmd_verify(VerifyOptions opt, const std::string& source, std::ostream& out, std::ostream& err) {
  opt.config.source = CampaignSource::parse(source);
  opt.config.expand_signatures = !opt.no_expand;
  opt.config.capacity = EnumerationCapacity::from_environment();

  std::ofstream file;
  if (opt.out) {
    file.open(*opt.out);
    if (!file) throw InputError("cannot write " + *opt.out);
  }
  std::ostream& sink = opt.out ? static_cast<std::ostream&>(file) : out;

  const auto start = std::chrono::steady_clock::now();
  const CampaignReport report = gap_scan(opt.config, &sink);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  ordered_json summary = to_json(report, opt.config);
  if (opt.timing) summary["wall_time_seconds"] = elapsed.count();
  sink << summary.dump() << '\n';

  if (report.violations() == 0) return kOk;
  const std::string cex_path = (opt.out ? *opt.out : std::string("snlab")) + ".counterexamples.sgl";
  std::ofstream cex(cex_path);
  std::vector<SignedGraph> graphs;
  for (const Counterexample& c : report.counterexamples) graphs.push_back(c.graph);
  write_sgl(cex, graphs);
  err << "verify: " << report.violations() << " violation(s); counterexamples written to " << cex_path << '\n';
  return kViolation;
}

int cmd_enumerate(int n, const GraphFilter& filter, std::ostream& out) {
  write_graph6(out, connected_graphs(n, filter, EnumerationCapacity::from_environment()));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectral invariants of signed graphs"};
  app.name(args.empty() ? "snlab" : args.front());
  app.require_subcommand(1);

  std::string input;

  auto* invariants = app.add_subcommand("invariants", "Invariant record per graph of an .sgl file");
  invariants->add_option("input", input, ".sgl file")->required();

  auto* classify = app.add_subcommand("classify", "Nullity class of unbalanced unicyclic graphs");
  classify->add_option("input", input, ".sgl file")->required();

  auto* sachs = app.add_subcommand("sachs", "Sachs coefficients checked against the characteristic polynomial");
  sachs->add_option("input", input, ".sgl file")->required();

  FamilyParams params;
  std::optional<std::string> generate_out;
  auto* generate = app.add_subcommand("generate", "Build an extremal family member");
  generate->add_option("l1", params.l1, "positive triangles")->required();
  generate->add_option("l2", params.l2, "hexagons with one negative edge")->required();
  generate->add_option("l3", params.l3, "quadrangles with a pendant edge")->required();
  generate->add_option("--out", generate_out, "write the graph as .sgl");

  VerifyOptions verify_opt;
  verify_opt.config.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string source = "internal";
  auto* verify = app.add_subcommand("verify", "Exhaustive check of the nullity bounds and the gap");
  verify->add_option("--n-max", verify_opt.config.n_max, "largest order")->required()->check(CLI::PositiveNumber);
  verify->add_option("--c-max", verify_opt.config.c_max, "largest cycle-space dimension")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--source", source, "internal | graph6:<path>");
  verify->add_option("--workers", verify_opt.config.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--chunk-size", verify_opt.config.chunk_size, "graphs per work unit")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--emit-all", verify_opt.config.emit_all, "one JSON line per signed graph");
  verify->add_flag("--no-expand", verify_opt.no_expand, "graph6 input: all-positive signature only");
  verify->add_flag("--timing", verify_opt.timing, "add wall time to the report");
  verify->add_option("--out", verify_opt.out, "report path (default stdout)");

  int enum_n = 0;
  GraphFilter filter;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs of one order as graph6");
  enumerate->add_option("--n", enum_n, "order")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-c", filter.max_c, "largest cycle-space dimension")->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--unicyclic", filter.unicyclic_only, "unicyclic graphs only");
  enumerate->add_option("--min-girth", filter.min_girth, "smallest girth")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("snlab");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*invariants) return cmd_invariants(input, out, err);
    if (*classify) return cmd_classify(input, out);
    if (*sachs) return cmd_sachs(input, out, err);
    if (*generate) return cmd_generate(params, generate_out, out, err);
    if (*verify) return cmd_verify(verify_opt, source, out, err);
    if (*enumerate) return cmd_enumerate(enum_n, filter, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace snlab::cli
