#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "jantzenlab/cache.hpp"
#include "jantzenlab/kl.hpp"

using jantzenlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

struct CacheDir {
  std::filesystem::path dir;
  explicit CacheDir(const std::string& name) : dir(scratch(name)) {
    setenv("JANTZENLAB_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheDir() {
    unsetenv("JANTZENLAB_CACHE_DIR");
    std::filesystem::remove_all(dir);
  }
};

}  // namespace

TEST_CASE("dmat on the trivial case") {
  const Result r = call({"dmat", "--n", "1", "--r", "3", "--method", "fock", "--no-cache"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 1);
  CHECK(j["r"] == 3);
  CHECK(j["method"] == "fock");
  CHECK(j["rows"].size() == 1);
  CHECK(j["rows"][0]["mu"] == "1");
  CHECK(j["rows"][0]["entries"] == nlohmann::json{{"1", "1"}});
  CHECK(j["manifest_hash"].get<std::string>().size() == 16);
}

TEST_CASE("kl and fock tables agree byte for byte") {
  const Result fock = call({"dmat", "--n", "3", "--r", "4", "--method", "fock", "--no-cache"});
  const Result kl = call({"dmat", "--n", "3", "--r", "4", "--method", "kl", "--no-cache"});
  REQUIRE(fock.code == 0);
  REQUIRE(kl.code == 0);
  const auto a = nlohmann::json::parse(fock.out), b = nlohmann::json::parse(kl.out);
  CHECK(a["rows"].dump() == b["rows"].dump());
  CHECK(b["method"] == "kl");
  const Result again = call({"dmat", "--n", "3", "--r", "4", "--method", "kl", "--no-cache"});
  CHECK(again.out == kl.out);
}

TEST_CASE("jantzen tex output matches the golden file") {
  const Result r = call({"dmat", "--n", "3", "--r", "3", "--method", "jantzen", "--format", "tex", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(std::filesystem::path(JANTZENLAB_GOLDEN_DIR) / "dmat_n3_r3_jantzen.tex"));
}

TEST_CASE("csv output") {
  const Result r = call({"dmat", "--n", "3", "--r", "3", "--method", "kl", "--format", "csv", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# manifest ", 0) == 0);
  CHECK(r.out.find("\"2,1\",q,1,0") != std::string::npos);
}

TEST_CASE("output file and manifest") {
  const auto dir = scratch("jantzenlab-cli-out");
  const auto path = dir / "d.json";
  const Result r = call({"dmat", "--n", "3", "--r", "3", "--method", "jantzen", "--out", path.string(), "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto table = nlohmann::json::parse(read_file(path));
  const auto manifest = nlohmann::json::parse(read_file(dir / "d.json.manifest.json"));
  CHECK(manifest["manifest_hash"] == table["manifest_hash"]);
  CHECK(manifest["conventions"]["fock_exponent"] == "above");
  CHECK(manifest["conventions"]["kl_sign"] == "orthogonality-once");
  CHECK(manifest["methods"] == nlohmann::json{"jantzen"});
  CHECK(manifest.contains("wall_seconds"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify passes at desk scale") {
  for (auto [n, r] : {std::pair{"2", "3"}, {"3", "3"}, {"3", "7"}, {"4", "3"}}) {
    const Result res = call({"verify", "--n", n, "--r", r, "--no-cache", "--jobs", "2"});
    CHECK(res.code == 0);
    CHECK(res.out.find("verify: PASS") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
  }
  const Result semisimple = call({"verify", "--n", "3", "--r", "7", "--no-cache"});
  CHECK(semisimple.out.find("jantzen depth: 0") != std::string::npos);
}

TEST_CASE("verify writes a report") {
  const auto dir = scratch("jantzenlab-cli-verify");
  const Result res = call({"verify", "--n", "3", "--r", "3", "--no-cache", "--out", (dir / "report.json").string()});
  CHECK(res.code == 0);
  const auto j = nlohmann::json::parse(read_file(dir / "report.json"));
  CHECK(j["pass"] == true);
  CHECK(j["entries"].size() == 5);
  CHECK(j["checks"]["fock=kl"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache transparency") {
  CacheDir cache("jantzenlab-cli-cache");
  const Result cold = call({"dmat", "--n", "4", "--r", "3", "--method", "kl"});
  const Result warm = call({"dmat", "--n", "4", "--r", "3", "--method", "kl"});
  const Result none = call({"dmat", "--n", "4", "--r", "3", "--method", "kl", "--no-cache"});
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == none.out);
  CHECK(std::filesystem::exists(cache.dir / "v1" / "kl"));
  const Result jcold = call({"dmat", "--n", "4", "--r", "3", "--method", "jantzen"});
  const Result jwarm = call({"dmat", "--n", "4", "--r", "3", "--method", "jantzen"});
  CHECK(jcold.out == jwarm.out);
  CHECK(std::filesystem::exists(cache.dir / "v1" / "gram"));
}

TEST_CASE("a corrupted cache is an internal error") {
  CacheDir cache("jantzenlab-cli-bad-cache");
  jantzenlab::KLTable bad(3);
  bad.import_memo({{jantzenlab::AffinePermutation::identity(3), jantzenlab::AffinePermutation::identity(3),
                    jantzenlab::LaurentPoly(2)}});
  jantzenlab::DiskCache(cache.dir).put("kl", "m=3", jantzenlab::encode_kl_memo(bad));
  const Result r = call({"dmat", "--n", "3", "--r", "3", "--method", "kl"});
  CHECK(r.code == 3);
  CHECK(r.err.find("internal error") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({"dmat", "--n", "6", "--r", "3"}).code == 2);
  CHECK(call({"dmat", "--n", "3", "--r", "2"}).code == 2);
  CHECK(call({"dmat", "--n", "3", "--r", "8"}).code == 2);
  CHECK(call({"dmat", "--n", "3", "--r", "3", "--method", "magic"}).code == 2);
  CHECK(call({"dmat", "--n", "3", "--r", "3", "--format", "xml"}).code == 2);
  CHECK(call({"dmat", "--r", "3"}).code == 2);
  CHECK(call({"dmat", "--n", "3", "--r", "3", "--m", "4"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"dmat", "--n", "3", "--r", "2", "--method", "kl", "--unsafe", "--no-cache"}).code == 2);
  CHECK(call({"bgg-check", "--m", "2", "--lam", "1,1,1", "--depth", "1"}).code == 2);
  CHECK(call({"bgg-check", "--m", "2", "--lam", "x", "--depth", "1"}).code == 2);
  const Result help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("dmat") != std::string::npos);
}

TEST_CASE("unsafe lifts the bounds") {
  const Result r = call({"dmat", "--n", "6", "--r", "3", "--method", "fock", "--unsafe", "--format", "csv"});
  CHECK(r.code == 0);
}

TEST_CASE("bgg-check") {
  CHECK(call({"bgg-check", "--m", "2", "--lam", "1,1", "--depth", "2"}).code == 0);
  CHECK(call({"bgg-check", "--m", "3", "--lam", "2,1", "--depth", "1"}).code == 0);
  CHECK(call({"bgg-check", "--m", "3", "--lam", "2,1", "--depth", "0"}).code == 0);
  const Result r = call({"bgg-check", "--m", "3", "--lam", "3", "--depth", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}
