#include "coxcell/cache.hpp"
#include "coxcell/report.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <tuple>

namespace coxcell {

namespace {
std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::string payload_string(const json& envelope) {
  json body = envelope;
  body.erase("checksum");
  return body.dump();
}

json coxeter_matrix_json(const CoxeterSystem& W) {
  json m = json::array();
  for (const auto& row : W.coxeter_matrix) {
    json r = json::array();
    for (int v : row) r.push_back(v);
    m.push_back(r);
  }
  return m;
}
}  // namespace

std::string cache_path(const std::string& cache_dir, const CoxeterSystem& W) {
  std::string name;
  for (char c : W.type_string) name += std::isalnum((unsigned char)c) ? c : '_';
  return cache_dir + "/" + name + ".klcache.json";
}

void cache_store(const std::string& cache_dir, const CoxeterSystem& W, const HeckeAlgebra& H) {
  std::filesystem::create_directories(cache_dir);
  json env;
  env["format_version"] = kCacheFormatVersion;
  env["type_string"] = W.type_string;
  env["generator_order"] = W.rank;
  env["coxeter_matrix"] = coxeter_matrix_json(W);
  json entries = json::array();
  for (int w = 0; w < W.size; ++w)
    for (const auto& [y, p] : H.c_basis(w))
      if (y != w) entries.push_back(json::array({y, w, laurent_json(p)}));
  env["entries"] = entries;
  env["checksum"] = fnv1a_hex(payload_string(env));

  std::string path = cache_path(cache_dir, W);
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT, 0644);
  if (fd < 0) throw CoxcellError("cannot open cache file for writing: " + path);
  ::flock(fd, LOCK_EX);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      ::close(fd);
      throw CoxcellError("cannot write cache file: " + tmp);
    }
    out << env.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

bool cache_load(const std::string& cache_dir, const CoxeterSystem& W, HeckeAlgebra& H) {
  std::string path = cache_path(cache_dir, W);
  std::ifstream in(path);
  if (!in) return false;
  auto reject = [&](const std::string& why) {
    std::cerr << "warning: ignoring cache file " << path << " (" << why << "); rebuilding\n";
    return false;
  };
  json env;
  try {
    in >> env;
  } catch (const std::exception& e) {
    return reject(std::string("parse error: ") + e.what());
  }
  try {
    if (!env.contains("checksum") || env["checksum"] != fnv1a_hex(payload_string(env)))
      return reject("checksum mismatch");
    if (env["format_version"] != kCacheFormatVersion) return reject("format version mismatch");
    if (env["type_string"] != W.type_string) return reject("type mismatch");
    if (env["generator_order"] != W.rank) return reject("generator order mismatch");
    if (env["coxeter_matrix"] != coxeter_matrix_json(W)) return reject("coxeter matrix mismatch");
    std::vector<std::tuple<int, int, Laurent>> entries;
    for (const auto& e : env["entries"]) {
      int y = e.at(0).get<int>(), w = e.at(1).get<int>();
      W.check_id(y);
      W.check_id(w);
      entries.emplace_back(y, w, laurent_from_json(e.at(2)));
    }
    H.load(entries);
  } catch (const std::exception& e) {
    return reject(std::string("invalid contents: ") + e.what());
  }
  return true;
}

void build_with_cache(const std::string& cache_dir, const CoxeterSystem& W, HeckeAlgebra& H) {
  if (!cache_dir.empty() && cache_load(cache_dir, W, H)) return;
  H.build();
  if (!cache_dir.empty()) cache_store(cache_dir, W, H);
}

}  // namespace coxcell
