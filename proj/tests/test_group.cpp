#include <catch2/catch_amalgamated.hpp>

#include <mulambda/group.hpp>
#include <mulambda/zoo.hpp>

#include <random>

using namespace mulambda;

TEST_CASE("closure of S3 generators") {
  Group s3 = Group::close({Perm::from_cycles("(0 1)", 3), Perm::from_cycles("(0 1 2)")});
  CHECK(s3.order() == 6);
  CHECK(s3.degree() == 3);
  CHECK(s3.contains(Perm::from_cycles("(1 2)", 3)));
}

TEST_CASE("closure respects the element cap") {
  CHECK_THROWS_AS(Group::close({Perm::from_cycles("(0 1 2 3 4)"),
                                Perm::from_cycles("(0 1)", 5)},
                               20),
                  cap_exceeded);
}

TEST_CASE("closure is generator-order independent") {
  std::vector<Perm> gens{Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(0 1 2 3)"),
                         Perm::from_cycles("(2 3)", 4)};
  Group a = Group::close(gens);
  std::reverse(gens.begin(), gens.end());
  Group b = Group::close(gens);
  CHECK(a.elements() == b.elements());
}

TEST_CASE("derived subgroup of S3 is C3") {
  Group s3 = build_group("sym:3");
  Group d = s3.derived_subgroup();
  CHECK(d.order() == 3);
  CHECK(d.contains(Perm::from_cycles("(0 1 2)")));
}

TEST_CASE("derived subgroup of an abelian group is trivial") {
  Group c12 = build_group("cyclic:12");
  CHECK(c12.derived_subgroup().order() == 1);
}

TEST_CASE("A5 is perfect and derived series detects solvability") {
  Group a5 = build_group("alt:5");
  CHECK(a5.derived_subgroup().order() == 60);
  CHECK_FALSE(a5.is_solvable());
  CHECK(build_group("sym:4").is_solvable());
  CHECK(build_group("cyclic:12").is_solvable());
}

TEST_CASE("derived subgroup is idempotent on perfect groups") {
  Group a5 = build_group("alt:5");
  Group d = a5.derived_subgroup();
  CHECK(d.derived_subgroup().order() == d.order());
}

TEST_CASE("normalizer in S3") {
  Group s3 = build_group("sym:3");
  Group h = Group::close({Perm::from_cycles("(0 1)", 3)});
  Group n = s3.normalizer(h);
  CHECK(n.order() == 2);
  CHECK(n.elements() == h.elements());
  // the whole group normalizes itself
  CHECK(s3.normalizer(s3).order() == 6);
}

TEST_CASE("normalizer contains H and H is normal in it") {
  Group s4 = build_group("sym:4");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Perm &x = s4.element(rng() % s4.order());
    Group h = Group::close({x}, 100);
    Group n = s4.normalizer(h);
    CHECK(h.is_subgroup_of(n));
    for (const Perm &g : n.elements())
      CHECK(h.conjugate(g).elements() == h.elements());
  }
}

TEST_CASE("normalizer of C2 in L2(4) is the Klein group") {
  Group g = build_group("psl2:4");
  // any involution
  const Perm *inv = nullptr;
  for (const Perm &e : g.elements())
    if (!e.is_identity() && compose(e, e).is_identity()) { inv = &e; break; }
  REQUIRE(inv != nullptr);
  Group h = Group::close({*inv});
  CHECK(g.normalizer(h).order() == 4);
}

TEST_CASE("conjugate, intersect, index") {
  Group s4 = build_group("sym:4");
  Group h = Group::close({Perm::from_cycles("(0 1)", 4)});
  CHECK(h.conjugate(Perm::identity(4)).elements() == h.elements());
  CHECK(h.intersect(h).elements() == h.elements());
  Group a5 = build_group("alt:5");
  Group c2 = Group::close({Perm::from_cycles("(0 1)(2 3)", 5)});
  CHECK(a5.index(c2) == 30);
  CHECK_THROWS_AS(a5.index(build_group("cyclic:7")), std::invalid_argument);
  // Lagrange across a few random subgroups
  std::mt19937 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    Group h2 = Group::close({a5.element(rng() % 60), a5.element(rng() % 60)}, 100);
    CHECK(a5.order() % h2.order() == 0);
  }
}

TEST_CASE("center of Q8") {
  Group q8 = build_group("perm:[(0 1 4 5)(2 3 6 7);(0 2 4 6)(1 7 5 3)]");
  REQUIRE(q8.order() == 8);
  CHECK(q8.center().order() == 2);
}
