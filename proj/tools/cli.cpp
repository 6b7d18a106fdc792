#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "dhg/count.hpp"
#include "dhg/error.hpp"
#include "dhg/estimate.hpp"
#include "dhg/generate.hpp"
#include "dhg/hypergraph.hpp"
#include "dhg/profile.hpp"
#include "dhg/randomize.hpp"
#include "dhg/taxonomy.hpp"

namespace dhg::cli {

using json = nlohmann::ordered_json;

namespace {

/// Flag values that parse but make no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input files that cannot be read.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

DirectedHypergraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse_hypergraph(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Options shared by every subcommand.
struct Common {
  std::vector<std::string> args;
  CLI::Option* seed_option = nullptr;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
};

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed_option != nullptr && c.seed_option->count() > 0) return c.seed;
  if (const char* env = std::getenv("DHG_SEED")) {
    std::uint64_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof()) throw UsageError("DHG_SEED is not an unsigned integer");
    return value;
  }
  return 0;
}

json manifest(const Common& c, const std::string& command, std::uint64_t seed,
              const std::vector<std::string>& inputs) {
  // argv with the resolved seed made explicit, so replay does not depend on the environment.
  std::vector<std::string> argv = c.args;
  if (c.seed_option == nullptr || c.seed_option->count() == 0) {
    argv.push_back("--seed");
    argv.push_back(std::to_string(seed));
  }
  json m;
  m["command"] = command;
  m["argv"] = argv;
  m["seed"] = seed;
  m["rng"] = std::string(Rng::algorithm_id);
  m["version"] = kVersion;
  m["threads"] = c.threads;
  json files = json::array();
  for (const auto& path : inputs) files.push_back({{"path", path}, {"sha256", sha256_file(path)}});
  m["inputs"] = files;
  return m;
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + c.out + "'");
  file << text;
}

void emit_json(const Common& c, std::ostream& out, const json& doc) { emit(c, out, doc.dump(2) + "\n"); }

// Non-JSON outputs get a sidecar manifest.
void write_sidecar(const std::string& path, const json& m) {
  std::ofstream file(path + ".manifest.json", std::ios::binary);
  if (!file) throw std::runtime_error("cannot write manifest for '" + path + "'");
  file << m.dump(2) << "\n";
}

json count_value(double v, bool integral) {
  if (integral) return static_cast<std::uint64_t>(std::llround(v));
  return v;
}

json count_array(const CountVector& counts, bool integral) {
  json a = json::array();
  for (double v : counts.values) a.push_back(count_value(v, integral));
  return a;
}

json class_patterns(const ClassTable& table) {
  json a = json::array();
  for (int i = 1; i <= static_cast<int>(kNumClasses); ++i) a.push_back(table.canonical(ClassId(i)).to_string());
  return a;
}

json class_entries(const ClassTable& table, const ExternalIndexMap& external, const CountVector& counts,
                   const CountVector* stddev, bool integral) {
  json classes = json::array();
  for (int i = 1; i <= static_cast<int>(kNumClasses); ++i) {
    const ClassId c(i);
    json entry;
    entry["canonical_pattern"] = table.canonical(c).to_string();
    entry["internal_index"] = i;
    if (auto p = external.find(c)) entry["paper_index"] = *p;
    else entry["paper_index"] = nullptr;
    entry["count"] = count_value(counts[c], integral);
    if (stddev != nullptr) entry["std"] = (*stddev)[c];
    classes.push_back(entry);
  }
  return classes;
}

Algorithm parse_algo(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw UsageError("unknown algorithm '" + name + "' (exact, coda-a, dmochy, a2a)");
  return *a;
}

void require_q(Algorithm algo, const CLI::Option* q_option, double q) {
  if (algo == Algorithm::exact) return;
  if (q_option->count() == 0) throw UsageError("--q is required for sampling algorithms");
  if (!(q > 0)) throw UsageError("--q must be positive");
}

// ---------------------------------------------------------------- commands

struct CountArgs {
  std::string input;
  std::string algo;
  double q = 0;
  std::size_t trials = 1;
  std::string mapping;
  CLI::Option* q_option = nullptr;
};

int cmd_count(const Common& c, const CountArgs& a, std::ostream& out) {
  const Algorithm algo = parse_algo(a.algo);
  require_q(algo, a.q_option, a.q);
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  const std::uint64_t seed = resolve_seed(c);
  const ClassTable& table = ClassTable::standard();
  ExternalIndexMap external;
  if (!a.mapping.empty()) {
    try {
      external = ExternalIndexMap::read_file(a.mapping, table);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  const DirectedHypergraph g = load_graph(a.input);

  const bool exact = algo == Algorithm::exact;
  const SampleBudget base = exact ? SampleBudget{a.q, 0, seed} : SampleBudget::from_ratio(a.q, g.arc_count(), seed);
  std::vector<CountVector> runs;
  for (std::size_t t = 0; t < a.trials; ++t) {
    SampleBudget b = base;
    if (a.trials > 1) b.seed = derive_seed(seed, t);
    runs.push_back(count_instances(g, table, algo, b, c.threads));
  }
  CountVector mean;
  for (const auto& r : runs) mean += r;
  mean *= 1.0 / static_cast<double>(runs.size());

  json doc;
  doc["algorithm"] = std::string(to_string(algo));
  doc["seed"] = seed;
  doc["q"] = exact ? json(nullptr) : json(a.q);
  doc["n"] = exact ? json(nullptr) : json(base.samples);
  doc["trials"] = a.trials;
  if (a.trials > 1) {
    CountVector var;
    for (const auto& r : runs) {
      for (std::size_t i = 0; i < kNumClasses; ++i) {
        const double d = r.values[i] - mean.values[i];
        var.values[i] += d * d;
      }
    }
    CountVector stddev;
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      stddev.values[i] = std::sqrt(var.values[i] / static_cast<double>(runs.size() - 1));
    }
    doc["classes"] = class_entries(table, external, mean, &stddev, exact);
  } else {
    doc["classes"] = class_entries(table, external, mean, nullptr, exact);
  }
  doc["unclassified"] = count_value(mean.unclassified, exact);
  doc["total"] = count_value(mean.total(), exact);
  doc["manifest"] = manifest(c, "count", seed, {a.input});
  emit_json(c, out, doc);
  return kExitOk;
}

struct CpArgs {
  std::string input;
  std::string algo = "exact";
  double q = 0;
  std::size_t randomizations = 10;
  double epsilon = 1.0;
  std::string name;
  CLI::Option* q_option = nullptr;
};

int cmd_cp(const Common& c, const CpArgs& a, std::ostream& out) {
  const Algorithm algo = parse_algo(a.algo);
  require_q(algo, a.q_option, a.q);
  if (!(a.epsilon > 0)) throw UsageError("--epsilon must be positive");
  if (a.randomizations < 1) throw UsageError("--randomizations must be at least 1");
  const std::uint64_t seed = resolve_seed(c);
  const DirectedHypergraph g = load_graph(a.input);
  if (g.arc_count() < 2) throw PreconditionError("randomization needs at least two hyperarcs");

  ProfileOptions opts;
  opts.algorithm = algo;
  opts.q = algo == Algorithm::exact ? 1.0 : a.q;
  opts.randomizations = a.randomizations;
  opts.epsilon = a.epsilon;
  opts.seed = seed;
  opts.threads = c.threads;
  const ProfileResult r = profile_graph(g, ClassTable::standard(), opts);

  json doc;
  doc["name"] = a.name.empty() ? std::filesystem::path(a.input).stem().string() : a.name;
  doc["algorithm"] = std::string(to_string(algo));
  doc["epsilon"] = a.epsilon;
  doc["randomizations"] = a.randomizations;
  doc["seed"] = seed;
  doc["q"] = algo == Algorithm::exact ? json(nullptr) : json(a.q);
  doc["classes"] = class_patterns(ClassTable::standard());
  doc["cp"] = r.cp;
  doc["mu"] = r.mu;
  json m = manifest(c, "cp", seed, {a.input});
  m["randomized_duplicate_arcs"] = "retained";
  doc["manifest"] = m;
  emit_json(c, out, doc);
  return kExitOk;
}

struct RandomizeArgs {
  std::string input;
};

int cmd_randomize(const Common& c, const RandomizeArgs& a, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(c);
  const DirectedHypergraph g = load_graph(a.input);
  if (g.arc_count() < 2) throw PreconditionError("randomization needs at least two hyperarcs");
  Rng rng(seed);
  const DirectedHypergraph shuffled = randomize(g, rng);
  std::ostringstream text;
  write_hypergraph(text, shuffled);
  emit(c, out, text.str());
  json m = manifest(c, "randomize", seed, {a.input});
  m["duplicate_arcs"] = "retained";
  write_sidecar(c.out, m);
  return kExitOk;
}

struct GenerateArgs {
  std::size_t nodes = 0;
  double ratio = 0;
  std::size_t max_size = 0;
  bool dedup = false;
};

int cmd_generate(const Common& c, const GenerateArgs& a, std::ostream& out) {
  GenSpec spec;
  spec.nodes = a.nodes;
  spec.ratio = a.ratio;
  spec.max_size = a.max_size;
  spec.seed = resolve_seed(c);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const DirectedHypergraph g = generate(spec, c.threads, a.dedup);
  std::ostringstream text;
  write_hypergraph(text, g);
  emit(c, out, text.str());
  json m = manifest(c, "generate", spec.seed, {});
  m["duplicate_arcs"] = a.dedup ? "removed" : "retained";
  write_sidecar(c.out, m);
  return kExitOk;
}

struct FeaturesArgs {
  std::string input;
  std::string level = "arc";
  CLI::Option* index_option = nullptr;
  std::size_t index = 0;
  std::string node;
};

json label_list(const DirectedHypergraph& g, const std::vector<NodeId>& set) {
  std::vector<std::string> labels;
  for (NodeId v : set) labels.push_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  return labels;
}

int cmd_features(const Common& c, const FeaturesArgs& a, std::ostream& out) {
  if (a.level != "arc" && a.level != "node") throw UsageError("--level must be arc or node");
  const DirectedHypergraph g = load_graph(a.input);
  const ClassTable& table = ClassTable::standard();

  json vectors = json::array();
  if (a.level == "arc") {
    if (!a.node.empty()) throw UsageError("--node applies to --level node");
    auto arc_entry = [&](ArcId i, const CountVector& v) {
      return json{{"arc", i}, {"tail", label_list(g, g.arc(i).tail)}, {"head", label_list(g, g.arc(i).head)},
                  {"counts", count_array(v, true)}};
    };
    if (a.index_option->count() > 0) {
      if (a.index >= g.arc_count()) throw UsageError("--index out of range");
      const auto i = static_cast<ArcId>(a.index);
      vectors.push_back(arc_entry(i, feature_vector_arc(g, table, i)));
    } else {
      const auto all = arc_feature_vectors(g, table);
      for (ArcId i = 0; i < all.size(); ++i) vectors.push_back(arc_entry(i, all[i]));
    }
  } else {
    if (a.index_option->count() > 0) throw UsageError("--index applies to --level arc");
    if (!a.node.empty()) {
      const auto v = g.nodes().find(a.node);
      if (!v) throw UsageError("unknown node '" + a.node + "'");
      vectors.push_back({{"node", a.node}, {"counts", count_array(feature_vector_node(g, table, *v), true)}});
    } else {
      const auto all = node_feature_vectors(g, table);
      for (NodeId v = 0; v < all.size(); ++v) {
        vectors.push_back({{"node", g.label(v)}, {"counts", count_array(all[v], true)}});
      }
    }
  }
  json doc;
  doc["level"] = a.level;
  doc["classes"] = class_patterns(table);
  doc["vectors"] = vectors;
  doc["manifest"] = manifest(c, "features", resolve_seed(c), {a.input});
  emit_json(c, out, doc);
  return kExitOk;
}

struct SnapshotArgs {
  std::string input;
  std::size_t count = 10;
  bool per_timestamp = false;
};

int cmd_snapshots(const Common& c, const SnapshotArgs& a, std::ostream& out) {
  if (a.count < 1) throw UsageError("--snapshots must be at least 1");
  const DirectedHypergraph g = load_graph(a.input);
  if (!g.has_timestamps()) throw InputError(a.input + ": every hyperarc needs a timestamp");
  const ClassTable& table = ClassTable::standard();
  const SnapshotSeries series =
      a.per_timestamp ? snapshots_per_timestamp(g, table, c.threads) : snapshots(g, table, a.count, c.threads);
  json list = json::array();
  for (std::size_t i = 0; i < series.snapshots.size(); ++i) {
    const Snapshot& s = series.snapshots[i];
    list.push_back({{"index", i + 1},
                    {"threshold", s.threshold},
                    {"num_arcs", s.num_arcs},
                    {"num_nodes", s.num_nodes},
                    {"total_pairs", count_value(s.counts.total(), true)},
                    {"counts", count_array(s.counts, true)},
                    {"ratios", s.ratios}});
  }
  json doc;
  doc["mode"] = a.per_timestamp ? "per-timestamp" : "interval";
  doc["classes"] = class_patterns(table);
  doc["snapshots"] = list;
  doc["manifest"] = manifest(c, "snapshots", resolve_seed(c), {a.input});
  emit_json(c, out, doc);
  return kExitOk;
}

struct SimilarityArgs {
  std::vector<std::string> profiles;
};

int cmd_similarity(const Common& c, const SimilarityArgs& a, std::ostream& out) {
  if (a.profiles.size() < 2) throw UsageError("--cp needs at least two profile files");
  std::vector<std::string> names;
  std::vector<ClassVector> cps;
  for (const auto& path : a.profiles) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
    if (!doc.contains("cp") || !doc["cp"].is_array() || doc["cp"].size() != kNumClasses) {
      throw InputError(path + ": expected a \"cp\" array of 91 numbers");
    }
    ClassVector cp{};
    for (std::size_t i = 0; i < kNumClasses; ++i) cp[i] = doc["cp"][i].get<double>();
    cps.push_back(cp);
    names.push_back(doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                     : std::filesystem::path(path).stem().string());
  }
  const auto matrix = similarity_matrix(cps);
  const json m = manifest(c, "similarity", resolve_seed(c), a.profiles);
  if (c.out.empty()) {
    json doc;
    doc["names"] = names;
    doc["matrix"] = matrix;
    doc["manifest"] = m;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::ostringstream csv;
  for (std::size_t i = 0; i < names.size(); ++i) csv << (i ? "," : "") << names[i];
  csv << "\n";
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) csv << (j ? "," : "") << json(row[j]).dump();
    csv << "\n";
  }
  emit(c, out, csv.str());
  write_sidecar(c.out, m);
  return kExitOk;
}

struct StatsArgs {
  std::string input;
  bool line_graph = false;
};

int cmd_stats(const Common& c, const StatsArgs& a, std::ostream& out) {
  const DirectedHypergraph g = load_graph(a.input);
  const GraphStats s = compute_stats(g, a.line_graph);
  json doc;
  doc["num_nodes"] = s.num_nodes;
  doc["num_arcs"] = s.num_arcs;
  doc["total_incidence"] = s.total_incidence;
  doc["line_graph_size"] = s.line_graph_size ? json(*s.line_graph_size) : json(nullptr);
  doc["manifest"] = manifest(c, "stats", resolve_seed(c), {a.input});
  emit_json(c, out, doc);
  return kExitOk;
}

struct ReplayArgs {
  std::string manifest;
};

int cmd_replay(const ReplayArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.manifest);
  if (!in) throw InputError("cannot open '" + a.manifest + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(a.manifest + ": " + e.what());
  }
  const json& m = doc.contains("manifest") ? doc["manifest"] : doc;
  if (!m.contains("argv") || !m["argv"].is_array()) throw InputError(a.manifest + ": no argv recorded");
  const auto argv = m["argv"].get<std::vector<std::string>>();
  if (argv.empty() || argv.front() == "replay") throw InputError(a.manifest + ": cannot replay this command");
  return run(argv, out, err);
}

void add_common(CLI::App* sub, Common& c, bool with_out = true) {
  c.seed_option = sub->add_option("--seed", c.seed, "RNG seed (falls back to $DHG_SEED, then 0)");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  if (with_out) sub->add_option("--out", c.out, "Output file (stdout when omitted)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed hypergraphlet counting and characterization", "dhg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  common.args = args;

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count or estimate instances per class");
  count_cmd->add_option("--input", count.input, "Hypergraph file")->required();
  count_cmd->add_option("--algo", count.algo, "exact | coda-a | dmochy | a2a")->required();
  count.q_option = count_cmd->add_option("--q", count.q, "Samples per hyperarc (n = round(q·|E|))");
  count_cmd->add_option("--trials", count.trials, "Independent repetitions (mean and std reported)");
  count_cmd->add_option("--mapping", count.mapping, "pattern<TAB>index file for external class numbering");
  add_common(count_cmd, common);

  CpArgs cp;
  auto* cp_cmd = app.add_subcommand("cp", "Characteristic profile against randomized graphs");
  cp_cmd->add_option("--input", cp.input, "Hypergraph file")->required();
  cp_cmd->add_option("--algo", cp.algo, "exact | coda-a | dmochy | a2a");
  cp.q_option = cp_cmd->add_option("--q", cp.q, "Samples per hyperarc for sampling algorithms");
  cp_cmd->add_option("--randomizations", cp.randomizations, "Randomized graphs to average");
  cp_cmd->add_option("--epsilon", cp.epsilon, "Significance smoothing term (> 0)");
  cp_cmd->add_option("--name", cp.name, "Graph name recorded in the output");
  add_common(cp_cmd, common);

  RandomizeArgs rnd;
  auto* rnd_cmd = app.add_subcommand("randomize", "Degree-preserving randomization");
  rnd_cmd->add_option("--input", rnd.input, "Hypergraph file")->required();
  add_common(rnd_cmd, common, false);
  rnd_cmd->add_option("--out", common.out, "Output hypergraph file")->required();

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Uniform random directed hypergraph");
  gen_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
  gen_cmd->add_option("--ratio", gen.ratio, "Hyperarcs per node")->required();
  gen_cmd->add_option("--max-size", gen.max_size, "Largest hyperarc size k (>= 2)")->required();
  gen_cmd->add_flag("--dedup", gen.dedup, "Drop duplicate hyperarcs");
  add_common(gen_cmd, common, false);
  gen_cmd->add_option("--out", common.out, "Output hypergraph file")->required();

  FeaturesArgs feat;
  auto* feat_cmd = app.add_subcommand("features", "Per-hyperarc or per-node class counts");
  feat_cmd->add_option("--input", feat.input, "Hypergraph file")->required();
  feat_cmd->add_option("--level", feat.level, "arc | node");
  feat.index_option = feat_cmd->add_option("--index", feat.index, "Single hyperarc index (arc level)");
  feat_cmd->add_option("--node", feat.node, "Single node label (node level)");
  add_common(feat_cmd, common);

  SnapshotArgs snap;
  auto* snap_cmd = app.add_subcommand("snapshots", "Class occurrence ratios over growing time snapshots");
  snap_cmd->add_option("--input", snap.input, "Timestamped hypergraph file")->required();
  snap_cmd->add_option("--snapshots", snap.count, "Equally spaced thresholds");
  snap_cmd->add_flag("--yearly", snap.per_timestamp, "One snapshot per distinct timestamp");
  add_common(snap_cmd, common);

  SimilarityArgs sim;
  auto* sim_cmd = app.add_subcommand("similarity", "Pearson similarity matrix of profiles");
  sim_cmd->add_option("--cp", sim.profiles, "Profile JSON files written by `cp`")->required();
  add_common(sim_cmd, common);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Node, hyperarc, incidence and line-graph sizes");
  stats_cmd->add_option("--input", stats.input, "Hypergraph file")->required();
  stats_cmd->add_flag("--line-graph", stats.line_graph, "Also count incident pairs");
  add_common(stats_cmd, common);

  ReplayArgs replay;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("--manifest", replay.manifest, "Output JSON or .manifest.json file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (CLI::Option* seed = sub->get_option_no_throw("--seed")) common.seed_option = seed;
  }

  try {
    if (*count_cmd) return cmd_count(common, count, out);
    if (*cp_cmd) return cmd_cp(common, cp, out);
    if (*rnd_cmd) return cmd_randomize(common, rnd, out);
    if (*gen_cmd) return cmd_generate(common, gen, out);
    if (*feat_cmd) return cmd_features(common, feat, out);
    if (*snap_cmd) return cmd_snapshots(common, snap, out);
    if (*sim_cmd) return cmd_similarity(common, sim, out);
    if (*stats_cmd) return cmd_stats(common, stats, out);
    if (*replay_cmd) return cmd_replay(replay, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dhg::cli
