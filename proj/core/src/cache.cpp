#include <fstream>
#include <sstream>
#include <thread>

#include "realmult/errors.hpp"
#include "realmult/pipeline.hpp"

namespace realmult {

namespace fs = std::filesystem;

fs::path cache_path(const std::string& dir, long N, const Config& config) {
  return fs::path(dir) / ("level-" + std::to_string(N) + "-" + config.hash() + ".json");
}

fs::path cache_put(const LevelReport& report, const Config& config) {
  if (config.cache_dir.empty()) throw Error(ErrorCode::InvalidArgument, "no cache directory configured");
  fs::create_directories(config.cache_dir);
  const fs::path final_path = cache_path(config.cache_dir, report.level, config);
  std::ostringstream tag;
  tag << std::this_thread::get_id();
  const fs::path tmp = final_path.string() + ".tmp." + tag.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << report.dump(true);
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, final_path);
  return final_path;
}

std::optional<LevelReport> cache_get(long N, const Config& config) {
  if (config.cache_dir.empty()) return std::nullopt;
  const fs::path p = cache_path(config.cache_dir, N, config);
  if (!fs::exists(p)) return std::nullopt;
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::CacheCorrupt, "cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::CacheCorrupt, p.string() + ": " + ex.what());
  }
  LevelReport r;
  try {
    r = LevelReport::from_json(j);
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::CacheCorrupt, p.string() + ": " + ex.what());
  }
  if (r.level != N || !j.contains("config_hash") || j.at("config_hash") != config.hash())
    throw Error(ErrorCode::CacheCorrupt, p.string() + ": level or config hash does not match the file name");
  if (r.dump(true) != text) throw Error(ErrorCode::CacheCorrupt, p.string() + ": content is not in canonical form");
  return r;
}

}  // namespace realmult
