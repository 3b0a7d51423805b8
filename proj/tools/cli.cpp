#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "jantzenlab/cache.hpp"
#include "jantzenlab/character.hpp"
#include "jantzenlab/dmatrix.hpp"
#include "jantzenlab/errors.hpp"
#include "jantzenlab/fock.hpp"
#include "jantzenlab/jantzen.hpp"
#include "jantzenlab/kl.hpp"
#include "jantzenlab/version.hpp"

namespace jantzenlab::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int r = 0;
  std::optional<int> m;
  std::string method = "fock";
  std::string format = "json";
  std::string out;
  std::string lam;
  int depth = 2;
  int jobs = 1;
  bool no_cache = false;
  bool unsafe = false;
};

std::map<std::string, std::string> conventions() {
  return {{"fock_exponent", to_string(ExponentConvention::above)},
          {"kl_sign", "orthogonality-once"},
          {"jantzen_labels", "conjugated"},
          {"polynomial_order", "ascending"}};
}

void check_bounds(const Options& o) {
  if (o.m && *o.m != o.n) throw UsageError("--m must equal --n for decomposition matrices");
  if (o.unsafe) return;
  if (o.n < 1 || o.n > 5) throw UsageError("--n must lie in [1, 5] (use --unsafe to override)");
  if (o.r < 3 || o.r > 7) throw UsageError("--r must lie in [3, 7] (use --unsafe to override)");
}

std::optional<DiskCache> open_cache(const Options& o) {
  if (o.no_cache) return std::nullopt;
  return DiskCache(DiskCache::default_root());
}

DMatrix kl_matrix(const Options& o, const std::optional<DiskCache>& cache, KLRunStats* stats) {
  KLTable table(o.n);
  const std::string key = "m=" + std::to_string(o.n);
  if (cache) {
    if (auto hit = cache->get("kl", key)) {
      try {
        decode_kl_memo(*hit, table);
      } catch (const std::invalid_argument&) {
        table.clear();
      }
    }
  }
  KLOptions opts;
  opts.jobs = o.jobs;
  opts.table = &table;
  opts.stats = stats;
  DMatrix d = d_matrix_kl(o.n, o.r, opts);
  if (cache) cache->put("kl", key, encode_kl_memo(table));
  return d;
}

JantzenReport jantzen_report(const Options& o, const std::optional<DiskCache>& cache) {
  JantzenOptions opts;
  opts.jobs = o.jobs;
  opts.cache = cache ? &*cache : nullptr;
  return graded_decomposition(o.n, o.r, opts);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw UsageError("failed writing " + path);
}

std::string render(const DMatrix& d, const Options& o, RunManifest& manifest) {
  std::string body;
  if (o.format == "json")
    body = to_json(d, o.method);
  else if (o.format == "csv")
    body = to_csv(d);
  else
    body = to_tex(d);
  manifest.payload_digest = hex64(fnv1a64(body));
  const std::string hash = manifest.hash();
  if (o.format == "json") {
    json j = json::parse(body);
    j["manifest_hash"] = hash;
    return j.dump(2) + "\n";
  }
  const std::string marker = o.format == "csv" ? "# manifest " : "% manifest ";
  return marker + hash + "\n" + body;
}

int cmd_dmat(const Options& o, std::ostream& out) {
  check_bounds(o);
  const auto start = std::chrono::steady_clock::now();
  const auto cache = open_cache(o);
  DMatrix d;
  if (o.method == "fock")
    d = canonical_basis_plus(o.n, o.r);
  else if (o.method == "kl")
    d = kl_matrix(o, cache, nullptr);
  else
    d = jantzen_report(o, cache).as_dmatrix();

  RunManifest manifest;
  manifest.command = "dmat";
  manifest.n = o.n;
  manifest.r = o.r;
  manifest.methods = {o.method};
  manifest.conventions = conventions();
  manifest.checks["unitriangular"] = true;
  const std::string text = render(d, o, manifest);
  manifest.wall_seconds = seconds_since(start);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    write_file(o.out + ".manifest.json", manifest.to_json());
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_bounds(o);
  const auto start = std::chrono::steady_clock::now();
  const auto cache = open_cache(o);
  const DMatrix fock = canonical_basis_plus(o.n, o.r);
  KLRunStats stats;
  const DMatrix kl = kl_matrix(o, cache, &stats);
  const JantzenReport report = jantzen_report(o, cache);
  const DMatrix jantzen = report.as_dmatrix();
  const DMatrix from_simples = decomposition_from_simples(o.n, o.r, report.simples);

  RunManifest manifest;
  manifest.command = "verify";
  manifest.n = o.n;
  manifest.r = o.r;
  manifest.methods = {"fock", "kl", "jantzen"};
  manifest.conventions = conventions();
  const auto kl_diff = first_difference(fock, kl);
  const auto jantzen_diff = first_difference(fock, jantzen);
  const auto at_one = fock.at_one();
  const bool specialization =
      from_simples.at_one() == at_one && kl.at_one() == at_one && jantzen.at_one() == at_one;
  manifest.checks["fock=kl"] = !kl_diff;
  manifest.checks["fock=jantzen"] = !jantzen_diff;
  manifest.checks["specialization"] = specialization;
  manifest.checks["unitriangular"] = true;
  manifest.checks["jantzen-determinant"] = true;
  manifest.checks["kl-orthogonality"] = true;
  manifest.checks["kl-coset-invariance"] = true;

  int depth = 0;
  for (const auto& [lam, layers] : report.layers) depth = std::max(depth, layers.depth());

  std::ostringstream text;
  json entries = json::array();
  text << "verify n=" << o.n << " r=" << o.r << "\n";
  text << "lam | mu | fock | kl | jantzen\n";
  for (const Partition& mu : fock.order())
    for (const Partition& lam : fock.order()) {
      const LaurentPoly a = fock.at(lam, mu), b = kl.at(lam, mu), c = jantzen.at(lam, mu);
      if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
      text << lam.to_string() << " | " << mu.to_string() << " | " << a.to_string() << " | " << b.to_string()
           << " | " << c.to_string() << "\n";
      entries.push_back({{"lam", lam.to_string()},
                         {"mu", mu.to_string()},
                         {"fock", a.to_string()},
                         {"kl", b.to_string()},
                         {"jantzen", c.to_string()}});
    }
  for (const auto& diff : {kl_diff, jantzen_diff})
    if (diff)
      text << "mismatch at (" << diff->lam.to_string() << ", " << diff->mu.to_string()
           << "): fock=" << diff->left.to_string() << " other=" << diff->right.to_string() << "\n";
  text << "gram blocks: " << report.gram_blocks << ", jantzen depth: " << depth << "\n";
  text << "kl orbits: " << stats.orbits << ", orthogonality checks: " << stats.orthogonality_checks
       << ", coset invariance checks: " << stats.coset_invariance_checks << "\n";
  bool pass = true;
  for (const auto& [name, ok] : manifest.checks) {
    text << (ok ? "PASS " : "FAIL ") << name << "\n";
    pass = pass && ok;
  }
  manifest.payload_digest = hex64(fnv1a64(entries.dump()));
  text << "manifest " << manifest.hash() << "\n";
  text << (pass ? "verify: PASS" : "verify: FAIL") << "\n";
  manifest.wall_seconds = seconds_since(start);
  out << text.str();
  if (!o.out.empty()) {
    json j = json::parse(manifest.to_json());
    j["entries"] = entries;
    j["jantzen_depth"] = depth;
    j["pass"] = pass;
    write_file(o.out, j.dump(2) + "\n");
  }
  return pass ? kPass : kMismatch;
}

int cmd_bgg(const Options& o, std::ostream& out) {
  if (!o.m) throw UsageError("bgg-check needs --m");
  const int m = *o.m;
  if (m < 2) throw UsageError("--m must be at least 2");
  if (o.depth < 0) throw UsageError("--depth must be nonnegative");
  if (!o.unsafe && (m > 4 || o.depth > 4)) throw UsageError("bgg-check is limited to m <= 4, depth <= 4 (use --unsafe)");
  if (!o.unsafe && (o.r < 3 || o.r > 7)) throw UsageError("--r must lie in [3, 7] (use --unsafe to override)");
  Partition lam;
  try {
    lam = Partition::parse(o.lam);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lam: ") + e.what());
  }
  if (lam.length() > m) throw UsageError("--lam has more than m parts");
  const int kappa = -o.r;
  const AffineWeight weight = embed_partition(lam, lam.size(), m, kappa);
  const bool ok = bgg_parabolic_character_check(weight, o.depth);
  out << "bgg-check m=" << m << " lam=" << lam.to_string() << " depth=" << o.depth << " kappa=" << kappa << ": "
      << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kMismatch;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "size of the partitions")->required();
  cmd->add_option("--r", o.r, "order of the root of unity")->required();
  cmd->add_option("--m", o.m, "rank of the affine Weyl group (must equal n)");
  cmd->add_option("--out", o.out, "write the result to FILE");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-cache", o.no_cache, "do not read or write the disk cache");
  cmd->add_flag("--unsafe", o.unsafe, "lift the desk-scale bounds");
}

}  // namespace

namespace {

json manifest_fields(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["n"] = m.n;
  j["r"] = m.r;
  j["methods"] = m.methods;
  j["conventions"] = m.conventions;
  j["checks"] = m.checks;
  j["payload_digest"] = m.payload_digest;
  j["version"] = kVersion;
  return j;
}

}  // namespace

std::string RunManifest::hash() const { return hex64(fnv1a64(manifest_fields(*this).dump())); }

std::string RunManifest::to_json() const {
  json j = manifest_fields(*this);
  j["manifest_hash"] = hash();
  j["wall_seconds"] = wall_seconds;
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded decomposition matrices of v-Schur algebras at roots of unity", "jantzenlab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* dmat = app.add_subcommand("dmat", "compute a decomposition matrix");
  add_common(dmat, o);
  dmat->add_option("--method", o.method, "fock, kl or jantzen")
      ->check(CLI::IsMember({"fock", "kl", "jantzen"}));
  dmat->add_option("--format", o.format, "json, csv or tex")->check(CLI::IsMember({"json", "csv", "tex"}));

  auto* verify = app.add_subcommand("verify", "compare the three methods");
  add_common(verify, o);

  auto* bgg = app.add_subcommand("bgg-check", "check the truncated BGG character identity");
  o.r = 3;
  bgg->add_option("--m", o.m, "rank")->required();
  bgg->add_option("--lam", o.lam, "partition with at most m parts, e.g. 2,1")->required();
  bgg->add_option("--depth", o.depth, "delta-depth of the truncation");
  bgg->add_option("--r", o.r, "the level is -r - m");
  bgg->add_flag("--unsafe", o.unsafe, "lift the size bounds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (dmat->parsed()) return cmd_dmat(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_bgg(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace jantzenlab::cli
