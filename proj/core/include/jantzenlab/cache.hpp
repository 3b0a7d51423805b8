#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "jantzenlab/kl.hpp"
#include "jantzenlab/poly_matrix.hpp"

namespace jantzenlab {

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

/// Content-addressed on-disk store: each (kind, key) maps to one JSON file
/// under <root>/v<format>/<kind>/<hash>.json. Reads verify the stored key.
class DiskCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit DiskCache(std::filesystem::path root);

  /// JANTZENLAB_CACHE_DIR, else $XDG_CACHE_HOME/jantzenlab, else ~/.cache/jantzenlab.
  static std::filesystem::path default_root();

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path path_for(const std::string& kind, const std::string& key) const;

  std::optional<std::string> get(const std::string& kind, const std::string& key) const;
  /// Writes atomically (temporary file plus rename). Failures are ignored.
  void put(const std::string& kind, const std::string& key, const std::string& value) const;

 private:
  std::filesystem::path root_;
};

std::string encode_kl_memo(const KLTable& table);
/// Throws std::invalid_argument on malformed input.
void decode_kl_memo(const std::string& text, KLTable& table);

std::string encode_matrix(const PolyMatrix& m);
PolyMatrix decode_matrix(const std::string& text);

}  // namespace jantzenlab
