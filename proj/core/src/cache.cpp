#include "jantzenlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

namespace jantzenlab {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

DiskCache::DiskCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path DiskCache::default_root() {
  if (const char* env = std::getenv("JANTZENLAB_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "jantzenlab";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "jantzenlab";
  return std::filesystem::temp_directory_path() / "jantzenlab-cache";
}

std::filesystem::path DiskCache::path_for(const std::string& kind, const std::string& key) const {
  return root_ / ("v" + std::to_string(kFormatVersion)) / kind / (hex64(fnv1a64(kind + "\n" + key)) + ".json");
}

std::optional<std::string> DiskCache::get(const std::string& kind, const std::string& key) const {
  const auto path = path_for(kind, key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("value").get<std::string>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DiskCache::put(const std::string& kind, const std::string& key, const std::string& value) const {
  std::error_code ec;
  const auto path = path_for(kind, key);
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;
  std::random_device rd;
  const auto tmp = path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"key", key}, {"value", value}}.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string encode_kl_memo(const KLTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [x, w, p] : table.export_memo())
    entries.push_back({x.window(), w.window(), p.to_string()});
  return nlohmann::json{{"m", table.rank()}, {"entries", entries}}.dump();
}

void decode_kl_memo(const std::string& text, KLTable& table) {
  std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>> entries;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("m").get<int>() != table.rank()) throw std::invalid_argument("KL memo has the wrong rank");
    for (const auto& e : j.at("entries"))
      entries.emplace_back(AffinePermutation(e.at(0).get<std::vector<int>>()),
                           AffinePermutation(e.at(1).get<std::vector<int>>()),
                           LaurentPoly::parse(e.at(2).get<std::string>()));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed KL memo: ") + ex.what());
  }
  table.import_memo(entries);
}

std::string encode_matrix(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string('v'));
    rows.push_back(row);
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}}.dump();
}

PolyMatrix decode_matrix(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    PolyMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& e = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = LaurentPoly::parse(e.at(i).at(k).get<std::string>(), 'v');
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed matrix: ") + ex.what());
  }
}

}  // namespace jantzenlab
