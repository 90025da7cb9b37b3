#include "doctest.h"
#include "gradus/ring.hpp"

using namespace gradus;

TEST_CASE("free polynomial ring slices count monomials") {
  auto R = make_ring({"x", "y"}, {1, 1}, {}, CoeffField::rationals());
  auto h = R->hilbert_function(5);
  REQUIRE(h == std::vector<long>({1, 2, 3, 4, 5, 6}));
  CHECK(R->dim_slice(3) == 4);
  CHECK(R->relations().empty());
  CHECK(R->min_weight() == 1);
  CHECK(R->maximal_ideal_gens().size() == 2);
}

TEST_CASE("weighted quotient ring reduces to normal form") {
  auto R = make_ring({"x", "y", "z"}, {4, 5, 6}, {"y*y-x*z", "x*x*x-z*z"},
                     CoeffField::rationals());
  CHECK(R->eq(R->element("y*y"), R->element("x*z")));
  CHECK(R->eq(R->element("z*z"), R->element("x^3")));
  CHECK(R->is_zero(R->element("y^2-x*z")));
  CHECK_FALSE(R->is_zero(R->element("y^2-x*y")));
  // one standard monomial in every degree of the semigroup, none in gaps
  CHECK(R->dim_slice(7) == 0);
  CHECK(R->dim_slice(8) == 1);
  CHECK(R->dim_slice(9) == 1);
  CHECK(R->dim_slice(24) == 1);
}

TEST_CASE("element parser handles sums, powers, and constants") {
  auto R = make_ring({"x", "y"}, {1, 1}, {}, CoeffField::rationals());
  auto lhs = R->element("(x+y)^2");
  auto rhs = R->element("x^2+2*x*y+y^2");
  CHECK(R->eq(lhs, rhs));
  CHECK(R->is_zero(R->element("0")));
  CHECK_FALSE(R->is_zero(R->element("3")));
  CHECK_THROWS_AS((void)R->element("x+"), EngineError);
  CHECK_THROWS_AS((void)R->element("w"), EngineError);
}

TEST_CASE("prime field coefficients wrap around") {
  auto R = make_ring({"x"}, {1}, {}, CoeffField::prime(5));
  CHECK(R->is_zero(R->element("5*x")));
  CHECK(R->eq(R->element("3*x+3*x"), R->element("x")));
  CHECK(CoeffField::prime(5).tag() == "prime:5");
  CHECK(CoeffField::rationals().tag() == "rationals");
}

TEST_CASE("graded slices respect weights") {
  auto R = make_ring({"x", "y"}, {2, 3}, {}, CoeffField::rationals());
  // degree 6: x^3 and y^2
  CHECK(R->dim_slice(6) == 2);
  CHECK(R->dim_slice(1) == 0);
  CHECK(R->std_monomials(5).size() == 1);  // x y
}

TEST_CASE("inhomogeneous relations are rejected") {
  CHECK_THROWS_AS((void)make_ring({"x", "y"}, {1, 1}, {"x*y-y"},
                                  CoeffField::rationals()),
                  EngineError);
}
