#include <catch2/catch_amalgamated.hpp>

#include <mulambda/cache.hpp>
#include <mulambda/moebius.hpp>
#include <mulambda/zoo.hpp>

#include <filesystem>
#include <fstream>

using namespace mulambda;

namespace {
std::string slurp(const std::filesystem::path &p) {
  std::ifstream is(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(is), {});
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("mulambda_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
} // namespace

TEST_CASE("lattice cache round-trips and is byte-stable") {
  TempDir tmp;
  const std::string spec = "sym:4";
  SubgroupLattice lat = enumerate_subgroups(build_group(spec));
  auto path = lattice_cache_path(tmp.path, spec);
  save_lattice(lat, spec, path);
  std::string bytes1 = slurp(path);
  REQUIRE_FALSE(bytes1.empty());

  auto loaded = load_lattice(path, spec);
  REQUIRE(loaded.has_value());
  CHECK(loaded->size() == lat.size());
  CHECK(loaded->class_of == lat.class_of);
  CHECK(loaded->frattini_id == lat.frattini_id);
  CHECK(loaded->maximal == lat.maximal);
  CHECK(loaded->maxint == lat.maxint);
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    CHECK(loaded->subs[i].ranks == lat.subs[i].ranks);
    CHECK(loaded->over[i] == lat.over[i]);
  }

  // saving the loaded lattice reproduces the file byte for byte
  auto path2 = lattice_cache_path(tmp.path, spec);
  save_lattice(*loaded, spec, path2);
  CHECK(slurp(path2) == bytes1);

  // recomputation also reproduces it
  SubgroupLattice again = enumerate_subgroups(build_group(spec));
  save_lattice(again, spec, path);
  CHECK(slurp(path) == bytes1);
}

TEST_CASE("cache rejects a different spec or version") {
  TempDir tmp;
  SubgroupLattice lat = enumerate_subgroups(build_group("sym:3"));
  auto path = lattice_cache_path(tmp.path, "sym:3");
  save_lattice(lat, "sym:3", path);
  CHECK_FALSE(load_lattice(path, "sym:4").has_value());
  CHECK(load_lattice(path, "sym:3").has_value());
  CHECK_FALSE(load_lattice(tmp.path / "missing.bin", "sym:3").has_value());

  // truncated file
  std::string bytes = slurp(path);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
  os.close();
  CHECK_FALSE(load_lattice(path, "sym:3").has_value());
}

TEST_CASE("moebius values agree between cached and fresh lattices") {
  TempDir tmp;
  const std::string spec = "alt:5";
  SubgroupLattice lat = enumerate_subgroups(build_group(spec));
  auto path = lattice_cache_path(tmp.path, spec);
  save_lattice(lat, spec, path);
  auto loaded = load_lattice(path, spec);
  REQUIRE(loaded.has_value());
  ClassPoset cp1 = conjugacy_classes(lat), cp2 = conjugacy_classes(*loaded);
  CHECK(moebius_table(lat, cp1).mu == moebius_table(*loaded, cp2).mu);
  CHECK(moebius_table(lat, cp1).lambda == moebius_table(*loaded, cp2).lambda);
}
