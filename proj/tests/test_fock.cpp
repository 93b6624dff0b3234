#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fockcalc/fock.hpp"
#include "fockcalc/json_io.hpp"

using namespace fockcalc;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Laurent v(int k) { return Laurent::monomial(k); }

FockVector S(std::initializer_list<int> parts) {
  return FockVector::standard(Partition(std::vector<int>(parts)));
}

}  // namespace

TEST_CASE("basic lowering and raising moves") {
  CHECK(f_action(0, FockVector::standard(Partition{}), 2) == S({1}));

  FockVector expected = S({2});
  expected.add(P({1, 1}), v(1));
  CHECK(f_action(1, S({1}), 2) == expected);

  CHECK(f_action(1, FockVector{}, 2).is_zero());
  CHECK(e_action(0, S({1}), 2) == FockVector::standard(Partition{}));
  CHECK(e_action(0, FockVector::standard(Partition{}), 2).is_zero());
  CHECK(e_action(1, FockVector::standard(Partition{}), 2).is_zero());

  // adjoint pairing fixes the raising coefficients
  FockVector raised = e_action(1, S({1, 1}), 2);
  FockVector want;
  want.add(P({1}), v(1));
  CHECK(raised == want);
  CHECK(inner_product(f_action(1, S({1}), 2), S({1, 1})) == v(1));
}

TEST_CASE("residue context selection") {
  const ResidueContext ctx = make_residue_context(2, 1, 2);
  CHECK(ctx.t == 2);
  CHECK(ctx.i == 1);
  const ResidueContext ctx2 = make_residue_context(3, 0, 3);
  CHECK(ctx2.t == 4);  // 3 divides 0 + 3
  CHECK(ctx2.i == 1);
  CHECK_THROWS_AS(make_residue_context(2, 2, 1), DomainError);
  CHECK_THROWS_AS(make_residue_context(1, 0, 1), DomainError);
}

TEST_CASE("inner product") {
  CHECK(inner_product(S({3, 1}), S({3, 1})) == Laurent(1));
  CHECK(inner_product(S({3, 1}), S({2, 2})).is_zero());
  CHECK(inner_product(f_action(1, S({1}), 2), S({1, 1})) == v(1));
}

TEST_CASE("divided powers") {
  // f^(1) = f
  std::mt19937 rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto& pool = partitions_of(std::uniform_int_distribution<int>(0, 6)(rng));
    const FockVector x = FockVector::standard(
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    const int e = std::uniform_int_distribution<int>(2, 4)(rng);
    const int r = std::uniform_int_distribution<int>(0, e - 1)(rng);
    CHECK(f_divided(r, 1, x, e) == f_action(r, x, e));
    // f^k = [k]! f^(k)
    for (int k = 2; k <= 3; ++k) {
      FockVector power = x;
      for (int j = 0; j < k; ++j) power = f_action(r, power, e);
      const Laurent factorial = quantum_factorial(k);
      FockVector scaled = factorial * f_divided(r, k, x, e);
      CHECK(scaled == power);
    }
  }
  CHECK_THROWS_AS(f_divided(0, 0, S({1}), 2), DomainError);
}

TEST_CASE("block preservation and degree shift") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int e = 2; e <= 4; ++e)
        for (int r = 0; r < e; ++r) {
          const FockVector image = f_action(r, FockVector::standard(lambda), e);
          CoreData common;
          bool have = false;
          for (const auto& [mu, c] : image.terms()) {
            CHECK(mu.size() == lambda.size() + 1);
            const CoreData data = core_weight_sign(mu, e);
            if (!have) {
              common = data;
              have = true;
            } else {
              CHECK(data.core == common.core);
              CHECK(data.weight == common.weight);
            }
          }
        }
}

TEST_CASE("adjointness and display invariance on random vectors") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> esize(2, 5);
  std::uniform_int_distribution<int> nsize(0, 7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  for (int round = 0; round < 300; ++round) {
    const int e = esize(rng);
    const int r = std::uniform_int_distribution<int>(0, e - 1)(rng);
    const int n = nsize(rng);
    const auto pick = [&](int size) {
      const auto& pool = partitions_of(size);
      FockVector x;
      for (int i = 0; i < 2; ++i)
        x.add(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(
                  rng)],
              Laurent::monomial(expo(rng), coeff(rng)));
      return x;
    };
    const FockVector x = pick(n), y = pick(n + 1);
    CHECK(inner_product(f_action(r, x, e), y) == inner_product(x, e_action(r, y, e)));
    const int t = make_residue_context(e, r, x.max_length() + 1).t;
    CHECK(f_action(r, x, e, t) == f_action(r, x, e, t + e));
    // every legal bead count gives the same operator
    for (int dt = 1; dt <= e; ++dt) {
      if ((r + t + dt) % e == 0) continue;
      CHECK(f_action(r, x, e, t + dt) == f_action(r, x, e, t));
    }
    const int ty = make_residue_context(e, r, y.max_length() + 1).t;
    CHECK(e_action(r, y, e, ty) == e_action(r, y, e, ty + e));
  }
}

TEST_CASE("fock vector json form") {
  FockVector x = S({2});
  x.add(P({1, 1}), v(1));
  const nlohmann::json j = to_json(x);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["partition"] == nlohmann::json::array({2}));
  CHECK(j[0]["coeff"] == nlohmann::json::array({{0, 1}}));
  CHECK(j[1]["partition"] == nlohmann::json::array({1, 1}));
  CHECK(j[1]["coeff"] == nlohmann::json::array({{1, 1}}));
}
