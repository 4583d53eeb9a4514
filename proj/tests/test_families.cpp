#include <catch2/catch_amalgamated.hpp>

#include <mulambda/families.hpp>

using namespace mulambda;

namespace {
const FamilyRow *find_row(const std::vector<FamilyRow> &rows, const std::string &label,
                          std::int64_t h = 0) {
  for (const FamilyRow &r : rows)
    if (r.label == label && r.h == h) return &r;
  return nullptr;
}
} // namespace

TEST_CASE("table rows for L2(4)") {
  auto rows = l2_rows(4);
  const FamilyRow *one = find_row(rows, "1");
  REQUIRE(one);
  CHECK(one->mu == -60);
  CHECK(one->lambda == -1);
  CHECK(one->normalizer_order == 60);
  const FamilyRow *c2 = find_row(rows, "C_2");
  REQUIRE(c2);
  CHECK(c2->mu == 4);
  CHECK(c2->lambda == 2);
  CHECK(c2->normalizer_order == 4);
}

TEST_CASE("table rows for L2(8)") {
  auto rows = l2_rows(8);
  const FamilyRow *c2 = find_row(rows, "C_2");
  REQUIRE(c2);
  CHECK(c2->mu == 8);       // -8 mu(3)
  CHECK(c2->lambda == 2);   // -2 mu(3)
  CHECK(c2->normalizer_order == 8);
  const FamilyRow *c7 = find_row(rows, "C_{2r}", 3);
  REQUIRE(c7);
  CHECK(c7->order == 7);
  CHECK(c7->mu == 2);
  CHECK(c7->normalizer_order == 14);
}

TEST_CASE("table rows for L2(16): mu(4) kills the bottom rows") {
  auto rows = l2_rows(16);
  const FamilyRow *one = find_row(rows, "1");
  REQUIRE(one);
  CHECK(one->mu == 0);
  CHECK(one->lambda == 0);
  const FamilyRow *c2 = find_row(rows, "C_2");
  REQUIRE(c2);
  CHECK(c2->mu == 0);
  // subfield rows at h = 2
  const FamilyRow *a5 = find_row(rows, "S_h", 2);
  REQUIRE(a5);
  CHECK(a5->order == 60);
  CHECK(a5->mu == -1);
}

TEST_CASE("table rows for L2(27) include the corrected mu(C3) = q/3") {
  auto rows = l2_rows(27);
  const FamilyRow *c3 = find_row(rows, "C_3");
  REQUIRE(c3);
  CHECK(c3->mu == 9);
  CHECK(c3->lambda == 1);
  CHECK(c3->normalizer_order == 27);
  const FamilyRow *one = find_row(rows, "1");
  REQUIRE(one);
  CHECK(one->mu == -9828);
  CHECK(one->lambda == -1);
  const FamilyRow *c2 = find_row(rows, "C_2");
  REQUIRE(c2);
  CHECK(c2->mu == 14);
  CHECK(c2->lambda == 1);
  CHECK(c2->normalizer_order == 28);
  const FamilyRow *d4 = find_row(rows, "D_4");
  REQUIRE(d4);
  CHECK(d4->mu == 3);
  CHECK(d4->lambda == 1);
  CHECK(d4->normalizer_order == 12);
}

TEST_CASE("regime gating") {
  CHECK_THROWS_AS(l2_rows(9), regime_error);
  CHECK_THROWS_AS(l2_rows(25), regime_error);
  CHECK_THROWS_AS(l2_rows(7), regime_error);   // prime
  CHECK_THROWS_AS(l2_rows(2), regime_error);
  CHECK_THROWS_AS(l2_rows(6), regime_error);   // not a prime power
  CHECK_THROWS_AS(sz_rows(16), regime_error);  // e even
  CHECK_THROWS_AS(sz_rows(2), regime_error);
  CHECK_THROWS_AS(ree_rows(9), regime_error);
  CHECK_THROWS_AS(ree_rows(81), regime_error);
  CHECK_NOTHROW(l2_rows(121)); // p = 11 = +1 mod 5, e = 2
  CHECK_NOTHROW(l2_rows(49));  // p = 7 = +2 mod 5, e = 2
}

TEST_CASE("Suzuki table at q = 8") {
  auto rows = sz_rows(8);
  const FamilyRow *one = find_row(rows, "1");
  REQUIRE(one);
  CHECK(one->mu == -29120);
  CHECK(one->lambda == -1);
  const FamilyRow *c4 = find_row(rows, "C_4");
  REQUIRE(c4);
  CHECK(c4->mu == 8);
  CHECK(c4->lambda == 2);
  CHECK(c4->normalizer_order == 16);
  const FamilyRow *c2 = find_row(rows, "C_2");
  REQUIRE(c2);
  CHECK(c2->mu == 32);
  CHECK(c2->lambda == 1);
  CHECK(c2->normalizer_order == 64);
  const FamilyRow *b1 = find_row(rows, "B_1(h)", 3);
  REQUIRE(b1);
  CHECK(b1->order == 20); // 4 * 5, the 5-divisible torus
  const FamilyRow *b2 = find_row(rows, "B_2(h)", 3);
  REQUIRE(b2);
  CHECK(b2->order == 52);
}

TEST_CASE("Ree table at q = 27") {
  auto rows = ree_rows(27);
  const FamilyRow *e8 = find_row(rows, "2^3");
  REQUIRE(e8);
  CHECK(e8->mu == -21);
  CHECK(e8->lambda == -1);
  CHECK(e8->normalizer_order == 168);
  const FamilyRow *r3 = find_row(rows, "R(3^h)", 1);
  REQUIRE(r3);
  CHECK(r3->mu == -1);
  CHECK(r3->lambda == -1);
  CHECK(r3->order == 1512); // R(3)
  const FamilyRow *l23 = find_row(rows, "2xPSL(2,3)");
  REQUIRE(l23);
  CHECK(l23->mu == 2);
  const FamilyRow *top = find_row(rows, "R(3^h)", 3);
  REQUIRE(top);
  CHECK(top->mu == 1);
  CHECK(top->order == 10073444472LL);
}

TEST_CASE("self-check passes for all admissible q up to 2^15") {
  for (std::int64_t q = 4; q <= 32768; ++q) {
    std::vector<FamilyRow> rows;
    try {
      rows = l2_rows(q);
    } catch (const regime_error &) {
      continue;
    }
    const FamilyRow *bad = nullptr;
    INFO("l2 q=" << q);
    CHECK(table_self_check(rows, &bad));
  }
  for (int e = 3; e <= 15; e += 2) {
    INFO("sz e=" << e);
    CHECK(table_self_check(sz_rows(std::int64_t(1) << e)));
  }
  for (int e = 3; e <= 9; e += 2) {
    INFO("ree e=" << e);
    CHECK(table_self_check(ree_rows(ipow(3, e))));
  }
}

TEST_CASE("self-check detects an injected fault") {
  auto rows = sz_rows(8);
  rows[2].lambda += 1;
  const FamilyRow *bad = nullptr;
  CHECK_FALSE(table_self_check(rows, &bad));
  CHECK(bad == &rows[2]);
}

TEST_CASE("even-characteristic tables have no PGL rows") {
  for (std::int64_t q : {4, 8, 16, 32}) {
    for (const FamilyRow &r : l2_rows(q)) CHECK(r.label != "G_h");
  }
}

TEST_CASE("row orders divide the group order") {
  auto check_divides = [](const std::vector<FamilyRow> &rows, std::int64_t g) {
    for (const FamilyRow &r : rows) {
      CHECK(g % r.order == 0);
      CHECK(r.normalizer_order % r.order == 0);
    }
  };
  check_divides(l2_rows(8), psl2_order(8));
  check_divides(l2_rows(27), psl2_order(27));
  check_divides(l2_rows(49), psl2_order(49));
  check_divides(l2_rows(121), psl2_order(121));
  check_divides(sz_rows(32), sz_order(32));
  auto ree_order = [](std::int64_t v) {
    std::int64_t c = v * v * v;
    return c * (c + 1) * (v - 1);
  };
  check_divides(ree_rows(27), ree_order(27));
}

TEST_CASE("divisor-sum telescope used by the tables") {
  for (int e : {1, 2, 3, 4, 6, 8, 9, 12, 15, 30}) {
    std::int64_t s = 0;
    for (std::int64_t h : divisors(e)) s += moebius_integer(e / h);
    CHECK(s == (e == 1 ? 1 : 0));
  }
}

TEST_CASE("cross-check L2(4) against the brute-force lattice") {
  GroupAnalysis a = analyze_group(build_group("psl2:4"));
  CrossCheckResult res = cross_check_family(a, l2_rows(4));
  CHECK(res.match);
}

TEST_CASE("cross-check detects a corrupted table") {
  GroupAnalysis a = analyze_group(build_group("psl2:4"));
  auto rows = l2_rows(4);
  rows[0].mu += 1;
  CrossCheckResult res = cross_check_family(a, rows);
  CHECK_FALSE(res.match);
  CHECK_FALSE(res.only_in_rows.empty());
  CHECK_FALSE(res.only_in_brute.empty());
}
