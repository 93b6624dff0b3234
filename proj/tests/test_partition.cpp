#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fockcalc/partition.hpp"

using namespace fockcalc;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Diagram-side oracle for removable e-hooks: subpartitions mu of lambda with
// |lambda/mu| = e such that the skew shape is a connected rim strip. Works
// from the Young diagram only; no abacus involved.
std::vector<HookRemoval> diagram_hooks(const Partition& lambda, int e) {
  std::vector<HookRemoval> out;
  const long long target = lambda.size() - e;
  if (target < 0) return out;
  for (const Partition& mu : partitions_of(static_cast<int>(target))) {
    bool contained = true;
    for (int i = 1; i <= mu.length(); ++i)
      if (mu.part(i) > lambda.part(i)) contained = false;
    for (int i = 1; i <= lambda.length(); ++i)
      if (mu.part(i) > lambda.part(i)) contained = false;
    if (!contained) continue;
    // skew cells
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
      for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j) cells.emplace_back(i, j);
    if (static_cast<int>(cells.size()) != e) continue;
    // rim: contains no 2x2 block, i.e. cell (i+1, j+1) never inside
    bool rim = true;
    std::set<std::pair<int, int>> cellset(cells.begin(), cells.end());
    for (const auto& [i, j] : cells)
      if (cellset.count({i + 1, j + 1})) rim = false;
    if (!rim) continue;
    // connected along edges (for rim strips diagonal adjacency never occurs
    // without edge adjacency)
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{cells.front()};
    seen.insert(cells.front());
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      for (auto [di, dj] : {std::pair<int, int>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const std::pair<int, int> next{i + di, j + dj};
        if (cellset.count(next) && !seen.count(next)) {
          seen.insert(next);
          stack.push_back(next);
        }
      }
    }
    if (seen.size() != cells.size()) continue;
    int top = cells.front().first, bottom = cells.front().first;
    for (const auto& [i, j] : cells) {
      top = std::min(top, i);
      bottom = std::max(bottom, i);
    }
    out.push_back(HookRemoval{mu, bottom - top});
  }
  return out;
}

struct ChainResult {
  Partition core;
  int weight;
  int sign_parity;  // legs mod 2
};

// Exhaustive chain oracle: remove e-hooks in every possible order and demand
// agreement of the endpoint, the count, and the leg-sum parity.
ChainResult all_chains(const Partition& lambda, int e) {
  const auto hooks = diagram_hooks(lambda, e);
  if (hooks.empty()) return ChainResult{lambda, 0, 0};
  std::vector<ChainResult> results;
  for (const auto& hook : hooks) {
    ChainResult rest = all_chains(hook.result, e);
    results.push_back(ChainResult{rest.core, rest.weight + 1,
                                  (rest.sign_parity + hook.leg_length) % 2});
  }
  for (const auto& r : results) {
    CHECK(r.core == results.front().core);
    CHECK(r.weight == results.front().weight);
    CHECK(r.sign_parity == results.front().sign_parity);
  }
  return results.front();
}

}  // namespace

TEST_CASE("beta numbers and inverse") {
  CHECK(beta_numbers(P({3, 1}), 3).betas == std::vector<long long>{5, 2, 0});
  CHECK(beta_numbers(Partition{}, 2).betas == std::vector<long long>{1, 0});
  CHECK(beta_numbers(P({2}), 1).betas == std::vector<long long>{2});
  CHECK_THROWS_AS(beta_numbers(P({3, 1}), 1), DomainError);

  CHECK(partition_from_beta({{5, 2, 0}}) == P({3, 1}));
  CHECK(partition_from_beta({{1, 0}}) == Partition{});
  CHECK(partition_from_beta({{2}}) == P({2}));
  CHECK_THROWS_AS(partition_from_beta({{2, 2}}), DomainError);

  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = std::uniform_int_distribution<int>(0, 14)(rng);
    const auto& all = partitions_of(n);
    const Partition lambda = all[std::uniform_int_distribution<std::size_t>(
        0, all.size() - 1)(rng)];
    const int e = std::uniform_int_distribution<int>(2, 5)(rng);
    for (int s = lambda.length(); s <= lambda.length() + 2 * e; ++s)
      CHECK(partition_from_beta(beta_numbers(lambda, s)) == lambda);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(P({2, 2})) == P({2, 2}));
  for (int n = 0; n <= 20; ++n)
    for (const Partition& lambda : partitions_of(n))
      CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("regular and restricted") {
  CHECK_FALSE(is_e_regular(P({1, 1}), 2));
  CHECK(is_e_regular(P({2, 1}), 2));
  CHECK_FALSE(is_e_regular(P({3, 3, 3}), 3));
  CHECK(is_e_regular(Partition{}, 2));
  CHECK(is_e_restricted(Partition{}, 5));
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int e = 2; e <= 5; ++e)
        CHECK(is_e_restricted(lambda, e) == is_e_regular(conjugate(lambda), e));
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(P({1, 1}), P({2})) == Dominance::less_or_equal);
  CHECK(dominance_leq(P({2}), P({2})) == Dominance::less_or_equal);
  CHECK(dominance_leq(P({3, 1, 1, 1}), P({2, 2, 2})) == Dominance::incomparable);
  CHECK(dominance_leq(P({2, 2}), P({2, 1, 1})) == Dominance::greater);
  CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), DomainError);

  // the lexicographic total order refines dominance
  for (const Partition& a : partitions_of(8))
    for (const Partition& b : partitions_of(8)) {
      if (a == b) continue;
      if (dominance_leq(a, b) == Dominance::less_or_equal) {
        CHECK(total_less(a, b));
        CHECK(conjugate_total_less(a, b));
      }
    }
}

TEST_CASE("removable hooks match the diagram oracle") {
  const auto hooks22 = removable_e_hooks(P({2, 2}), 2);
  REQUIRE(hooks22.size() == 2);
  // one horizontal domino leaving (2), one vertical leaving (1,1)
  std::map<std::string, int> legs;
  for (const auto& hook : hooks22) legs[hook.result.to_text()] = hook.leg_length;
  CHECK(legs.at("2") == 0);
  CHECK(legs.at("1,1") == 1);

  CHECK(removable_e_hooks(P({2}), 2).size() == 1);
  CHECK(removable_e_hooks(P({2}), 2)[0].result == Partition{});
  CHECK(removable_e_hooks(P({2}), 2)[0].leg_length == 0);
  CHECK(removable_e_hooks(P({2, 1}), 2).empty());

  for (int n = 0; n <= 12; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int e = 2; e <= 4; ++e) {
        auto got = removable_e_hooks(lambda, e);
        auto expected = diagram_hooks(lambda, e);
        const auto key = [](const HookRemoval& h) {
          return std::make_pair(h.result.to_text(), h.leg_length);
        };
        std::multiset<std::pair<std::string, int>> lhs, rhs;
        for (const auto& h : got) lhs.insert(key(h));
        for (const auto& h : expected) rhs.insert(key(h));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("core, weight and sign") {
  SUBCASE("single row of length e") {
    for (int e = 2; e <= 5; ++e) {
      std::vector<int> row{e};
      const CoreData data = core_weight_sign(Partition(row), e);
      CHECK(data.core == Partition{});
      CHECK(data.weight == 1);
      CHECK(data.sign == 1);
    }
  }
  SUBCASE("vertical domino") {
    const CoreData data = core_weight_sign(P({1, 1}), 2);
    CHECK(data.core == Partition{});
    CHECK(data.weight == 1);
    CHECK(data.sign == -1);
  }
  SUBCASE("two-core") {
    const CoreData data = core_weight_sign(P({2, 1}), 2);
    CHECK(data.core == P({2, 1}));
    CHECK(data.weight == 0);
    CHECK(data.sign == 1);
  }
  SUBCASE("square") {
    // both removal chains have even total leg length
    const CoreData data = core_weight_sign(P({2, 2}), 2);
    CHECK(data.core == Partition{});
    CHECK(data.weight == 2);
    CHECK(data.sign == 1);
  }
  SUBCASE("exhaustive chain oracle") {
    for (int n = 0; n <= 10; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (int e = 2; e <= 4; ++e) {
          const ChainResult oracle = all_chains(lambda, e);
          const CoreData data = core_weight_sign(lambda, e);
          CHECK(data.core == oracle.core);
          CHECK(data.weight == oracle.weight);
          CHECK(data.sign == (oracle.sign_parity == 0 ? 1 : -1));
        }
  }
  SUBCASE("display independence") {
    for (int n = 0; n <= 12; n += 3)
      for (const Partition& lambda : partitions_of(n))
        for (int e = 2; e <= 5; ++e) {
          const CoreData base = core_weight_sign(lambda, e);
          for (int extra = 1; extra <= 2 * e; ++extra) {
            const CoreData other =
                core_weight_sign_with_beads(lambda, e, lambda.length() + extra);
            CHECK(other.core == base.core);
            CHECK(other.weight == base.weight);
            CHECK(other.sign == base.sign);
          }
        }
  }
  SUBCASE("rejects e below 2") {
    CHECK_THROWS_AS(core_weight_sign(P({2}), 1), DomainError);
    CHECK_THROWS_AS(removable_e_hooks(P({2}), 0), DomainError);
    CHECK_THROWS_AS(is_e_regular(P({2}), 1), DomainError);
  }
  SUBCASE("conjugation identities") {
    for (int n = 0; n <= 16; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (int e = 2; e <= 5; ++e) {
          const CoreData data = core_weight_sign(lambda, e);
          const CoreData conj = core_weight_sign(conjugate(lambda), e);
          CHECK(conj.core == conjugate(data.core));
          CHECK(conj.weight == data.weight);
          const bool flip = ((e - 1) * data.weight) % 2 != 0;
          CHECK(conj.sign == (flip ? -data.sign : data.sign));
        }
  }
}

TEST_CASE("mullineux") {
  CHECK(mullineux(P({2}), 3) == P({1, 1}));
  CHECK(mullineux(Partition{}, 2) == Partition{});
  CHECK(mullineux(Partition{}, 5) == Partition{});
  CHECK(mullineux(P({3, 1}), 2) == P({3, 1}));
  CHECK_THROWS_AS(mullineux(P({1, 1}), 2), DomainError);

  for (int n = 0; n <= 14; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int e = 2; e <= 5; ++e) {
        if (!is_e_regular(lambda, e)) continue;
        const Partition image = mullineux(lambda, e);
        CHECK(is_e_regular(image, e));
        CHECK(mullineux(image, e) == lambda);
        const CoreData before = core_weight_sign(lambda, e);
        const CoreData after = core_weight_sign(image, e);
        CHECK(after.core == conjugate(before.core));
        CHECK(after.weight == before.weight);
        const bool flip = (static_cast<long long>(e) * before.weight) % 2 != 0;
        CHECK(after.sign == (flip ? -before.sign : before.sign));
        // weight 0: the map is plain conjugation
        if (before.weight == 0) CHECK(conjugate(image) == lambda);
      }
}

TEST_CASE("partition text forms") {
  CHECK(Partition::parse("4,2,1") == P({4, 2, 1}));
  CHECK(Partition::parse("-") == Partition{});
  CHECK(P({4, 2, 1}).to_text() == "4,2,1");
  CHECK(Partition{}.to_text() == "-");
  CHECK_THROWS_AS(Partition::parse("2,3"), DomainError);
  CHECK_THROWS_AS(Partition::parse("a"), DomainError);
  CHECK_THROWS_AS(Partition::parse("2,,1"), DomainError);
}
