#include "doctest.h"
#include "gradus/idealkit.hpp"
#include "gradus/semigroup.hpp"

using namespace gradus;

namespace {

// independent membership oracle: textbook coin-style dynamic program
bool member_dp(const std::vector<int64_t>& gens, int64_t d) {
  if (d < 0) return false;
  std::vector<char> reach((size_t)d + 1, 0);
  reach[0] = 1;
  for (int64_t v = 1; v <= d; ++v)
    for (int64_t g : gens)
      if (g <= v && reach[(size_t)(v - g)]) {
        reach[(size_t)v] = 1;
        break;
      }
  return reach[(size_t)d] != 0;
}

bool same_ideal(const std::shared_ptr<GradedPolyRing>& R,
                const std::vector<Vec>& a, const std::vector<std::string>& b) {
  std::vector<Vec> bv;
  for (const auto& s : b) bv.push_back(R->element(s));
  return ideal_eq(make_ideal(R, a), make_ideal(R, bv));
}

}  // namespace

TEST_CASE("gap structure of small numerical semigroups") {
  auto S = make_semigroup({4, 5, 6});
  CHECK(S.gaps == std::vector<int64_t>({1, 2, 3, 7}));
  CHECK(S.frobenius == 7);
  CHECK(S.pf == std::vector<int64_t>({7}));
  CHECK(S.type() == 1);

  auto T = make_semigroup({3, 4, 5});
  CHECK(T.gaps == std::vector<int64_t>({1, 2}));
  CHECK(T.pf == std::vector<int64_t>({1, 2}));
  CHECK(T.type() == 2);

  auto U = make_semigroup({5, 6, 8, 9});
  CHECK(U.gaps == std::vector<int64_t>({1, 2, 3, 4, 7}));
  CHECK(U.frobenius == 7);
  CHECK(U.pf == std::vector<int64_t>({3, 4, 7}));

  auto W = make_semigroup({1});
  CHECK(W.gaps.empty());
  CHECK(W.frobenius == -1);
}

TEST_CASE("membership matches the dynamic-programming oracle") {
  for (auto gens : {std::vector<int64_t>{4, 5, 6}, {3, 4, 5}, {2, 3},
                    {5, 6, 8, 9}, {6, 10, 15}}) {
    auto S = make_semigroup(gens);
    for (int64_t d = 0; d <= 40; ++d) CHECK(S.contains(d) == member_dp(gens, d));
  }
}

TEST_CASE("invalid generator sets are named in errors") {
  CHECK_THROWS_AS((void)make_semigroup({2, 4}), EngineError);   // gcd 2
  CHECK_THROWS_AS((void)make_semigroup({0, 3}), EngineError);   // nonpositive
  CHECK_THROWS_AS((void)make_semigroup({}), EngineError);
  try {
    (void)make_semigroup({4, 5, 6, 10});
    FAIL("redundant generator accepted");
  } catch (const EngineError& e) {
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}

TEST_CASE("toric presentations match hand-computed relation sets") {
  CoeffField F;
  auto R1 = build_ring(make_semigroup({4, 5, 6}), {}, {}, F);
  CHECK(same_ideal(R1, R1->relations(), {"y*y-x*z", "x*x*x-z*z"}));

  auto R2 = build_ring(make_semigroup({3, 4, 5}), {}, {}, F);
  CHECK(same_ideal(R2, R2->relations(),
                   {"y*y-x*z", "z*z-x*x*y", "x*x*x-y*z"}));

  auto R3 = build_ring(make_semigroup({2, 3}), {}, {}, F);
  CHECK(same_ideal(R3, R3->relations(), {"y*y-x*x*x"}));
}

TEST_CASE("hilbert function is the semigroup indicator") {
  auto S = make_semigroup({5, 6, 8, 9});
  auto R = build_ring(S, {}, {}, CoeffField{});
  for (int64_t d = 0; d <= 30; ++d)
    CHECK(R->dim_slice(d) == (S.contains(d) ? 1 : 0));
  REQUIRE(R->semigroup.has_value());
  CHECK(R->semigroup->frobenius == 7);
}

TEST_CASE("extra free variables convolve the hilbert function") {
  auto S = make_semigroup({3, 4, 5});
  auto R = build_ring(S, {"u"}, {1}, CoeffField{});
  REQUIRE(R->semigroup.has_value());
  CHECK(R->semigroup->n_extra == 1);
  // H_R(d) = #{ s <= d : s in S }
  for (int64_t d = 0; d <= 15; ++d) {
    long expect = 0;
    for (int64_t s = 0; s <= d; ++s) expect += S.contains(s) ? 1 : 0;
    CHECK(R->dim_slice(d) == expect);
  }
}

TEST_CASE("powers of the uniformizer resolve to monomial classes") {
  auto R = build_ring(make_semigroup({4, 5, 6}), {}, {}, CoeffField{});
  REQUIRE(t_power(*R, 8).has_value());
  CHECK(R->eq(*t_power(*R, 8), R->element("x^2")));
  CHECK(R->eq(*t_power(*R, 4), R->element("x")));
  CHECK(R->eq(*t_power(*R, 11), R->element("y*z")));
  CHECK(R->eq(*t_power(*R, 0), R->element("1")));
  CHECK_FALSE(t_power(*R, 7).has_value());  // gap
  CHECK_FALSE(t_power(*R, -1).has_value());

  auto W = build_ring(make_semigroup({5, 6, 8, 9}), {}, {}, CoeffField{});
  CHECK(W->eq(*t_power(*W, 5), W->element("x")));
  CHECK(W->eq(*t_power(*W, 9), W->element("w")));
}

TEST_CASE("prime-field presentations agree with the rational ones") {
  auto Q = build_ring(make_semigroup({4, 5, 6}), {}, {}, CoeffField{});
  auto P = build_ring(make_semigroup({4, 5, 6}), {}, {},
                      CoeffField::prime(101));
  CHECK(P->relations().size() == Q->relations().size());
  CHECK(same_ideal(P, P->relations(), {"y*y-x*z", "x*x*x-z*z"}));
}
