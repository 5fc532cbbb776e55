#pragma once

// Class-data cache files.
//
//   WTN-CACHE v1 <family><rank> <|W|>
//   <word> <size> <order> <sigma> <elliptic 0|1> <m> <tau|-> <d_ad> <d_sc>
//   ...
//
// Records are sorted by (order, class size, word); words are 1-based and comma separated,
// "e" for the identity. m is taken on the adjoint lattice.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/class_data.hpp"
#include "wtn/root_data.hpp"

namespace wtn {

struct ClassCache {
  RootSystemType type;
  Integer group_order;
  std::vector<ClassRecord> records;
};

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_cache(std::ostream& out, const ClassCache& cache) {
  out << "WTN-CACHE v1 " << cache.type.name() << ' ' << cache.group_order << '\n';
  for (const auto& r : cache.records) {
    out << format_word(r.word) << ' ' << r.size << ' ' << r.order << ' ' << r.sigma << ' ' << (r.elliptic ? 1 : 0) << ' '
        << r.m << ' ';
    if (r.tau)
      out << *r.tau;
    else
      out << '-';
    out << ' ' << r.d_ad << ' ' << r.d_sc << '\n';
  }
}

inline std::string cache_to_string(const ClassCache& cache) {
  std::ostringstream s;
  write_cache(s, cache);
  return s.str();
}

inline ClassCache read_cache(std::istream& in) {
  ClassCache cache;
  std::string line;
  if (!std::getline(in, line)) throw CacheFormatError("empty cache file");
  {
    std::istringstream h(line);
    std::string magic, version, name, order;
    if (!(h >> magic >> version >> name >> order) || magic != "WTN-CACHE" || version != "v1" || name.size() < 2)
      throw CacheFormatError("bad cache header '" + line + "'");
    cache.type = {parse_family(name.substr(0, 1)), std::stoi(name.substr(1))};
    cache.type.validate();
    cache.group_order = Integer(order);
  }
  const int rank = cache.type.rank;
  Integer total = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream s(line);
    std::string word, size, m, tau;
    ClassRecord r;
    int elliptic = 0;
    if (!(s >> word >> size >> r.order >> r.sigma >> elliptic >> m >> tau >> r.d_ad >> r.d_sc))
      throw CacheFormatError("malformed cache record on line " + std::to_string(line_no));
    std::string extra;
    if (s >> extra) throw CacheFormatError("trailing data on line " + std::to_string(line_no));
    r.word = parse_word(word, rank);
    r.size = Integer(size);
    r.elliptic = elliptic != 0;
    r.m = Integer(m);
    if (tau != "-") r.tau = Integer(tau);
    total += r.size;
    cache.records.push_back(std::move(r));
  }
  if (total != cache.group_order)
    throw CacheFormatError("class sizes sum to " + total.str() + ", expected |W| = " + cache.group_order.str());
  return cache;
}

inline ClassCache build_cache(const RootSystemType& type, std::uint64_t cap = kDefaultEnumerationCap) {
  const auto ad = build_datum(type, Isogeny::adjoint);
  const WeylEnumeration w(ad, cap);
  return {type, ad->group_order(), analyze_classes(w)};
}

/// Directory named by WTN_CACHE_DIR, or "wtn-cache" in the working directory.
inline std::filesystem::path cache_directory() {
  const char* env = std::getenv("WTN_CACHE_DIR");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path("wtn-cache");
}

inline std::filesystem::path cache_path(const RootSystemType& type) {
  return cache_directory() / (type.name() + ".wtncache");
}

inline void save_cache(const ClassCache& cache, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_cache(out, cache);
}

inline std::optional<ClassCache> load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return read_cache(in);
}

}  // namespace wtn
