#include <catch2/catch_amalgamated.hpp>

#include <mulambda/lattice.hpp>
#include <mulambda/zoo.hpp>

using namespace mulambda;

namespace {
SubgroupLattice lat_of(const std::string &spec, unsigned threads = 1) {
  LatticeOptions opt;
  opt.threads = threads;
  return enumerate_subgroups(build_group(spec), opt);
}
} // namespace

TEST_CASE("subgroup counts of small groups") {
  CHECK(lat_of("cyclic:6").size() == 4);   // divisor lattice of 6
  CHECK(lat_of("cyclic:12").size() == 6);
  CHECK(lat_of("sym:3").size() == 6);
  CHECK(lat_of("sym:4").size() == 30);
  CHECK(lat_of("alt:5").size() == 59);
  CHECK(lat_of("cyclic:1").size() == 1);
}

TEST_CASE("dihedral subgroup count equals d(n) + sigma(n)") {
  for (std::int64_t n = 3; n <= 12; ++n) {
    std::int64_t dn = 0, sn = 0;
    for (std::int64_t d : divisors(n)) { ++dn; sn += d; }
    CHECK(lat_of("dihedral:" + std::to_string(2 * n)).size() ==
          static_cast<std::size_t>(dn + sn));
  }
}

TEST_CASE("lattice is meet-closed") {
  SubgroupLattice lat = lat_of("sym:4");
  const std::uint32_t words = static_cast<std::uint32_t>(lat.subs[0].bits.size());
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    for (std::uint32_t j = i + 1; j < lat.size(); ++j) {
      std::vector<std::uint32_t> meet;
      for (std::uint32_t w = 0; w < words; ++w) {
        std::uint64_t bits = lat.subs[i].bits[w] & lat.subs[j].bits[w];
        while (bits) {
          meet.push_back(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
      CHECK(lat.find_subgroup(meet).has_value());
    }
}

TEST_CASE("inclusion order sanity") {
  SubgroupLattice lat = lat_of("sym:3");
  // bottom below everything, everything below top
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    CHECK(lat.leq(lat.bottom_id, i));
    CHECK(lat.leq(i, lat.top_id));
  }
  // sizes: 1, three C2, one C3, S3
  std::vector<std::uint64_t> orders;
  for (const Subgroup &s : lat.subs) orders.push_back(s.order());
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("conjugacy classes of subgroups") {
  SubgroupLattice s3 = lat_of("sym:3");
  CHECK(s3.classes.size() == 4);
  SubgroupLattice a5 = lat_of("alt:5");
  CHECK(a5.classes.size() == 9);
  // abelian: classes are singletons
  SubgroupLattice c12 = lat_of("cyclic:12");
  CHECK(c12.classes.size() == c12.size());
}

TEST_CASE("orbit-stabilizer for every class") {
  for (const char *spec : {"sym:4", "alt:5", "dihedral:16"}) {
    SubgroupLattice lat = lat_of(spec);
    for (const SubgroupClass &c : lat.classes)
      CHECK(c.size() * lat.subs[c.normalizer].order() == lat.ambient.order());
  }
}

TEST_CASE("class order is the image of the subgroup order") {
  SubgroupLattice lat = lat_of("sym:4");
  ClassPoset cp = conjugacy_classes(lat);
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    for (std::uint32_t j = 0; j < lat.size(); ++j)
      if (lat.leq(i, j)) CHECK(cp.leq(lat.class_of[i], lat.class_of[j]));
}

TEST_CASE("maximal subgroups and MaxInt") {
  SubgroupLattice cp2 = lat_of("cyclic:5");
  // prime cyclic: MaxInt = {1, C_p}
  CHECK(cp2.maxint == std::vector<bool>{true, true});

  SubgroupLattice c4 = lat_of("cyclic:4");
  // MaxInt = {C2, C4}, trivial excluded
  REQUIRE(c4.size() == 3);
  CHECK(c4.maxint[0] == false);
  CHECK(c4.maxint[1] == true);
  CHECK(c4.maxint[2] == true);

  SubgroupLattice s3 = lat_of("sym:3");
  for (std::uint32_t i = 0; i < s3.size(); ++i) CHECK(s3.maxint[i]);
}

TEST_CASE("Frattini subgroups") {
  SubgroupLattice s4 = lat_of("sym:4");
  CHECK(s4.subs[s4.frattini_id].order() == 1);
  SubgroupLattice c4 = lat_of("cyclic:4");
  CHECK(c4.subs[c4.frattini_id].order() == 2);
  SubgroupLattice q8 = lat_of("perm:[(0 1 4 5)(2 3 6 7);(0 2 4 6)(1 7 5 3)]");
  CHECK(q8.size() == 6);
  CHECK(q8.subs[q8.frattini_id].order() == 2);
  // Phi(G) is below every MaxInt member
  for (std::uint32_t i = 0; i < s4.size(); ++i)
    if (s4.maxint[i]) CHECK(s4.leq(s4.frattini_id, i));
}

TEST_CASE("trivial and degenerate ambient groups") {
  SubgroupLattice triv = lat_of("cyclic:1");
  CHECK(triv.size() == 1);
  CHECK(triv.frattini_id == triv.top_id);
  CHECK(triv.classes.size() == 1);
}

TEST_CASE("thread count does not change the lattice") {
  SubgroupLattice a = lat_of("sym:4", 1);
  SubgroupLattice b = lat_of("sym:4", 3);
  REQUIRE(a.size() == b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    CHECK(a.subs[i].ranks == b.subs[i].ranks);
    CHECK(a.maximal[i] == b.maximal[i]);
    CHECK(a.maxint[i] == b.maxint[i]);
  }
  CHECK(a.frattini_id == b.frattini_id);
  CHECK(a.class_of == b.class_of);
}

TEST_CASE("simplicity detection") {
  CHECK(lat_of("alt:5").ambient_simple);
  CHECK(lat_of("psl2:7").ambient_simple);
  CHECK_FALSE(lat_of("sym:4").ambient_simple);
  CHECK_FALSE(lat_of("cyclic:12").ambient_simple);
  CHECK(lat_of("cyclic:5").ambient_simple); // simple, though abelian
}

TEST_CASE("isomorphic constructions give identical lattice profiles") {
  auto profile = [](const std::string &spec) {
    SubgroupLattice lat = lat_of(spec);
    std::vector<std::uint64_t> orders;
    for (const Subgroup &s : lat.subs) orders.push_back(s.order());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
    for (const SubgroupClass &c : lat.classes)
      classes.emplace_back(lat.subs[c.rep].order(), c.size());
    std::sort(classes.begin(), classes.end());
    return std::make_pair(orders, classes);
  };
  CHECK(profile("pgl2:5") == profile("sym:5"));  // PGL(2,5) = S5
  CHECK(profile("psl2:9") == profile("alt:6"));  // L2(9) = A6
  CHECK(profile("psl2:4") == profile("alt:5"));  // L2(4) = A5
  CHECK(profile("psl2:5") == profile("alt:5"));  // L2(5) = A5 again
}

TEST_CASE("hash-based product path matches the table path") {
  LatticeOptions no_table;
  no_table.mult_table_budget = 1; // too small for any table
  SubgroupLattice a = enumerate_subgroups(build_group("sym:4"), no_table);
  SubgroupLattice b = lat_of("sym:4");
  REQUIRE(a.size() == b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) CHECK(a.subs[i].ranks == b.subs[i].ranks);
  CHECK(a.class_of == b.class_of);
  CHECK(a.frattini_id == b.frattini_id);
}

TEST_CASE("subgroup cap triggers") {
  LatticeOptions opt;
  opt.subgroup_cap = 10;
  CHECK_THROWS_AS(enumerate_subgroups(build_group("sym:4"), opt), cap_exceeded);
}
