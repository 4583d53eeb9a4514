#include <catch2/catch_amalgamated.hpp>

#include <mulambda/gf.hpp>

using namespace mulambda;

TEST_CASE("GF(4) inverses") {
  FiniteField f(4);
  for (int x = 1; x < 4; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
}

TEST_CASE("GF(8) has characteristic 2") {
  FiniteField f(8);
  for (int x = 0; x < 8; ++x) CHECK(f.add(x, x) == 0);
}

TEST_CASE("GF(9) multiplicative group is cyclic of order 8") {
  FiniteField f(9);
  CHECK(f.element_order(f.primitive_element()) == 8);
}

TEST_CASE("field axioms hold on small fields") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49}) {
    FiniteField f(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < std::min<std::int64_t>(q, 5); ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }
}

TEST_CASE("non-prime-power sizes rejected") {
  CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(12), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(1), std::invalid_argument);
}

TEST_CASE("modulus table matches a fresh irreducibility scan for shipped fields") {
  // the shipped polynomials must be irreducible; build_tables throws otherwise
  for (std::int64_t q : {4, 8, 16, 32, 64, 9, 27, 81, 25, 125, 49, 121, 169})
    CHECK_NOTHROW(FiniteField(q));
}
