#ifndef MULAMBDA_CACHE_HPP
#define MULAMBDA_CACHE_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace mulambda {

// bump on any change to canonicalization or file layout
inline constexpr std::uint32_t k_lattice_format_version = 1;

namespace cache_detail {

inline void put_u32(std::ostream &os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char *>(b), 4);
}

inline void put_u64(std::ostream &os, std::uint64_t v) {
  put_u32(os, static_cast<std::uint32_t>(v));
  put_u32(os, static_cast<std::uint32_t>(v >> 32));
}

inline std::optional<std::uint32_t> get_u32(std::istream &is) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char *>(b), 4)) return std::nullopt;
  return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
         std::uint32_t(b[3]) << 24;
}

inline std::optional<std::uint64_t> get_u64(std::istream &is) {
  auto lo = get_u32(is);
  auto hi = get_u32(is);
  if (!lo || !hi) return std::nullopt;
  return std::uint64_t(*lo) | std::uint64_t(*hi) << 32;
}

inline void put_str(std::ostream &os, const std::string &s) {
  put_u32(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::optional<std::string> get_str(std::istream &is) {
  auto n = get_u32(is);
  if (!n) return std::nullopt;
  std::string s(*n, '\0');
  if (!is.read(s.data(), static_cast<std::streamsize>(*n))) return std::nullopt;
  return s;
}

inline void put_vec32(std::ostream &os, const std::vector<std::uint32_t> &v) {
  put_u32(os, static_cast<std::uint32_t>(v.size()));
  for (std::uint32_t x : v) put_u32(os, x);
}

inline std::optional<std::vector<std::uint32_t>> get_vec32(std::istream &is) {
  auto n = get_u32(is);
  if (!n) return std::nullopt;
  std::vector<std::uint32_t> v(*n);
  for (std::uint32_t &x : v) {
    auto r = get_u32(is);
    if (!r) return std::nullopt;
    x = *r;
  }
  return v;
}

inline std::uint64_t fnv64(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace cache_detail

// cache file name for a spec string under the given directory
inline std::filesystem::path lattice_cache_path(const std::filesystem::path &dir,
                                                const std::string &spec) {
  std::string safe;
  for (char c : spec)
    safe += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  if (safe.size() > 60) safe.resize(60);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(cache_detail::fnv64(spec)));
  return dir / ("lat_v" + std::to_string(k_lattice_format_version) + "_" + safe + "_" +
                buf + ".bin");
}

inline void save_lattice(const SubgroupLattice &lat, const std::string &spec,
                         const std::filesystem::path &path) {
  using namespace cache_detail;
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    os.write("MLAT", 4);
    put_u32(os, k_lattice_format_version);
    put_str(os, spec);
    const Group &g = lat.ambient;
    put_u32(os, static_cast<std::uint32_t>(g.degree()));
    put_u32(os, static_cast<std::uint32_t>(g.generators().size()));
    for (const Perm &p : g.generators()) {
      for (point x : p.images()) put_u32(os, x);
    }
    put_u64(os, g.order());
    for (const Perm &p : g.elements())
      for (point x : p.images()) put_u32(os, x);
    put_u32(os, static_cast<std::uint32_t>(lat.size()));
    for (const Subgroup &s : lat.subs) {
      put_vec32(os, s.ranks);
      put_vec32(os, s.gens);
    }
    put_u32(os, static_cast<std::uint32_t>(lat.classes.size()));
    put_vec32(os, lat.class_of);
    for (const SubgroupClass &c : lat.classes) {
      put_u32(os, c.rep);
      put_u32(os, c.normalizer);
      put_vec32(os, c.members);
    }
    std::vector<std::uint32_t> flags(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i)
      flags[i] = (lat.maximal[i] ? 1u : 0u) | (lat.maxint[i] ? 2u : 0u);
    put_vec32(os, flags);
    put_u32(os, lat.frattini_id);
    put_u32(os, lat.ambient_simple ? 1 : 0);
    if (!os) throw std::runtime_error("cache write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// returns nullopt on any mismatch (missing file, version or spec change,
// truncation); callers recompute and overwrite
inline std::optional<SubgroupLattice> load_lattice(const std::filesystem::path &path,
                                                   const std::string &spec) {
  using namespace cache_detail;
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[4];
  if (!is.read(magic, 4) || std::string(magic, 4) != "MLAT") return std::nullopt;
  auto ver = get_u32(is);
  if (!ver || *ver != k_lattice_format_version) return std::nullopt;
  auto sp = get_str(is);
  if (!sp || *sp != spec) return std::nullopt;
  auto degree = get_u32(is);
  auto ngens = get_u32(is);
  if (!degree || !ngens) return std::nullopt;
  auto read_perm = [&]() -> std::optional<Perm> {
    std::vector<point> img(*degree);
    for (std::uint32_t i = 0; i < *degree; ++i) {
      auto v = get_u32(is);
      if (!v) return std::nullopt;
      img[i] = static_cast<point>(*v);
    }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < *ngens; ++i) {
    auto p = read_perm();
    if (!p) return std::nullopt;
    gens.push_back(std::move(*p));
  }
  auto order = get_u64(is);
  if (!order) return std::nullopt;
  std::vector<Perm> elems;
  elems.reserve(*order);
  for (std::uint64_t i = 0; i < *order; ++i) {
    auto p = read_perm();
    if (!p) return std::nullopt;
    elems.push_back(std::move(*p));
  }
  SubgroupLattice lat;
  try {
    Group g = gens.empty()
                  ? Group::from_sorted_elements(*degree, std::move(elems))
                  : Group::close(gens, static_cast<std::size_t>(*order));
    if (g.order() != *order || (!gens.empty() && g.elements() != elems))
      return std::nullopt;
    lat.ambient = std::move(g);
  } catch (const std::exception &) {
    return std::nullopt;
  }
  auto nsubs = get_u32(is);
  if (!nsubs) return std::nullopt;
  const std::uint32_t n = static_cast<std::uint32_t>(lat.ambient.order());
  const std::uint32_t words = (n + 63) / 64;
  lat.subs.resize(*nsubs);
  for (Subgroup &s : lat.subs) {
    auto r = get_vec32(is);
    auto gg = get_vec32(is);
    if (!r || !gg) return std::nullopt;
    s.ranks = std::move(*r);
    s.gens = std::move(*gg);
    s.bits.assign(words, 0);
    for (std::uint32_t x : s.ranks) {
      if (x >= n) return std::nullopt;
      detail::bit_set(s.bits, x);
    }
  }
  auto nclasses = get_u32(is);
  auto class_of = get_vec32(is);
  if (!nclasses || !class_of) return std::nullopt;
  lat.class_of = std::move(*class_of);
  lat.classes.resize(*nclasses);
  for (SubgroupClass &c : lat.classes) {
    auto rep = get_u32(is);
    auto norm = get_u32(is);
    auto mem = get_vec32(is);
    if (!rep || !norm || !mem) return std::nullopt;
    c.rep = *rep;
    c.normalizer = *norm;
    c.members = std::move(*mem);
  }
  auto flags = get_vec32(is);
  auto frattini = get_u32(is);
  auto simple = get_u32(is);
  if (!flags || flags->size() != lat.subs.size() || !frattini || !simple)
    return std::nullopt;
  lat.maximal.resize(lat.subs.size());
  lat.maxint.resize(lat.subs.size());
  for (std::size_t i = 0; i < lat.subs.size(); ++i) {
    lat.maximal[i] = ((*flags)[i] & 1) != 0;
    lat.maxint[i] = ((*flags)[i] & 2) != 0;
  }
  lat.frattini_id = *frattini;
  lat.ambient_simple = *simple != 0;
  lat.bottom_id = 0;
  lat.top_id = static_cast<std::uint32_t>(lat.subs.size() - 1);
  // rebuild the inclusion bitsets (deterministic from the subgroup list)
  const std::uint32_t ns = static_cast<std::uint32_t>(lat.subs.size());
  const std::uint32_t sw = (ns + 63) / 64;
  lat.over.assign(ns, std::vector<std::uint64_t>(sw, 0));
  for (std::uint32_t i = 0; i < ns; ++i) {
    std::uint64_t oi = lat.subs[i].order();
    detail::bit_set(lat.over[i], i);
    for (std::uint32_t j = i + 1; j < ns; ++j) {
      std::uint64_t oj = lat.subs[j].order();
      if (oj == oi || oj % oi) continue;
      if (detail::bits_subset(lat.subs[i].bits, lat.subs[j].bits))
        detail::bit_set(lat.over[i], j);
    }
  }
  return lat;
}

} // namespace mulambda

#endif
