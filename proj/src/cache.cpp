#include "hallq/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace hallq {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

HallCache::HallCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
}

fs::path HallCache::default_dir() {
  if (const char* e = std::getenv("HALLQ_CACHE_DIR"); e && *e) return e;
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "hallq";
  return ".hallq-cache";
}

std::string HallCache::key(const IsoClass& L, const IsoClass& M, const IsoClass& N) const {
  json k = {{"quiver", L.rep().quiver().to_json()}, {"q", L.rep().field().q()}, {"L", L.key()}, {"M", M.key()}, {"N", N.key()}};
  return k.dump();
}

namespace {
fs::path record_path(const fs::path& dir, const std::string& key) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key)));
  return dir / buf;
}
}  // namespace

std::optional<std::uint64_t> HallCache::get(const IsoClass& L, const IsoClass& M, const IsoClass& N) {
  std::string k = key(L, M, N);
  fs::path p = record_path(dir_, k);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  try {
    json r = json::parse(line);
    json want = json::parse(k);
    bool same = true;
    for (auto& [f, v] : want.items())
      if (!r.contains(f) || r[f] != v) same = false;
    if (same && r.contains("g") && r["g"].is_number_unsigned()) {
      ++hits_;
      return r["g"].get<std::uint64_t>();
    }
    // A different key with the same hash: leave the other record alone.
    if (!same && r.contains("g")) return std::nullopt;
  } catch (const json::exception&) {
  }
  ++discarded_;
  std::error_code ec;
  fs::remove(p, ec);
  return std::nullopt;
}

void HallCache::put(const IsoClass& L, const IsoClass& M, const IsoClass& N, std::uint64_t g) {
  std::string k = key(L, M, N);
  json r = json::parse(k);
  r["g"] = g;
  fs::path p = record_path(dir_, k);
  static std::atomic<unsigned> seq{0};
  fs::path tmp = p;
  tmp += ".tmp" + std::to_string(::getpid()) + "_" + std::to_string(seq++);
  {
    std::ofstream out(tmp);
    if (!out) return;  // read-only cache: skip silently
    out << r.dump() << '\n';
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace hallq
