#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hallq/isoclass.hpp"

namespace hallq {

std::uint64_t fnv1a64(const std::string& s);

// Hall numbers on disk, one small JSON file per record named by the hash of
// its key. Writes go through a temporary file and a rename, so concurrent
// writers never leave a half-written record. A record whose stored key does
// not match, or that fails to parse, is deleted and treated as a miss.
class HallCache {
 public:
  explicit HallCache(std::filesystem::path dir);
  // HALLQ_CACHE_DIR, else ~/.cache/hallq, else ./.hallq-cache.
  static std::filesystem::path default_dir();

  std::optional<std::uint64_t> get(const IsoClass& L, const IsoClass& M, const IsoClass& N);
  void put(const IsoClass& L, const IsoClass& M, const IsoClass& N, std::uint64_t g);

  const std::filesystem::path& dir() const { return dir_; }
  std::size_t hits() const { return hits_; }
  std::size_t discarded() const { return discarded_; }

 private:
  std::string key(const IsoClass& L, const IsoClass& M, const IsoClass& N) const;
  std::filesystem::path dir_;
  std::size_t hits_ = 0, discarded_ = 0;
};

}  // namespace hallq
