#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fockcalc/verify.hpp"
#include "fockcalc/weyl.hpp"

using namespace fockcalc;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// group action: a |-> sigma(a) + e*T
std::vector<long long> act(const ExtendedAffineElement& w, int e,
                           const std::vector<long long>& a) {
  const std::vector<int> inv = inverse_permutation(w.sigma);
  std::vector<long long> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[inv[i]] + e * w.translation[i];
  return out;
}

bool in_fundamental_domain(const std::vector<long long>& x, int e) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 || x[i] <= -e) return false;
    if (i + 1 < x.size() && x[i] > x[i + 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("length formula") {
  // pure permutations: length is the inversion count
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      const ExtendedAffineElement w{std::vector<long long>(n, 0), sigma};
      CHECK(length(w) == inversions(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  std::vector<int> id2{0, 1};
  CHECK(length(ExtendedAffineElement{{0, 1}, id2}) == 1);
  CHECK(length(ExtendedAffineElement{{0, 0}, id2}) == 0);
  CHECK_THROWS_AS(length(ExtendedAffineElement{{0}, id2}), DomainError);
}

TEST_CASE("hat embedding") {
  CHECK(hat(P({2}), 2) == std::vector<long long>{0, 3});
  CHECK(hat(Partition{}, 2) == std::vector<long long>{0, 1});
  CHECK(hat(P({3, 1}), 3) == std::vector<long long>{0, 2, 5});
  CHECK_THROWS_AS(hat(P({3, 1}), 1), DomainError);
}

TEST_CASE("minimal representative") {
  SUBCASE("worked examples") {
    const MinimalRepresentative m = minimal_representative({0, 3}, 2);
    CHECK(m.decomposition.t == std::vector<long long>{0, 2});
    CHECK(m.decomposition.c == std::vector<long long>{0, -1});
    CHECK(m.length == 3);

    const MinimalRepresentative empty_case = minimal_representative({0, 1}, 2);
    CHECK(empty_case.length == 2);

    // already in the fundamental domain
    CHECK(minimal_representative({-1, 0}, 2).length == 0);
    CHECK_THROWS_AS(minimal_representative({3, 0}, 2), DomainError);
  }

  SUBCASE("decomposition invariants and the two length routes") {
    for (int n = 0; n <= 8; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (int e = 2; e <= 5; ++e)
          for (int rank : {lambda.length(), lambda.length() + 1, lambda.length() + e}) {
            const std::vector<long long> a = hat(lambda, rank);
            const MinimalRepresentative m = minimal_representative(a, e);
            const auto& d = m.decomposition;
            for (std::size_t i = 0; i < d.c.size(); ++i) {
              CHECK(d.c[i] <= 0);
              CHECK(d.c[i] > -e);
              CHECK(d.a[i] == e * d.t[i] + d.c[i]);
            }
            // w_a^-1 . a lies in the fundamental domain
            const ExtendedAffineElement w{d.t, d.sigma_c};
            const std::vector<long long> image = act(w, e, [&] {
              std::vector<long long> c_sorted = d.c;
              std::sort(c_sorted.begin(), c_sorted.end());
              return c_sorted;
            }());
            CHECK(image == a);
            std::vector<long long> domain_point(d.c);
            std::sort(domain_point.begin(), domain_point.end());
            CHECK(in_fundamental_domain(domain_point, e));
            // the general length formula agrees with the sorted one
            CHECK(length(w) == m.length);
          }
  }

  SUBCASE("brute force minimality for small points") {
    // enumerate the group elements sending a into the fundamental domain
    const std::vector<std::vector<long long>> points{
        {0, 3}, {0, 1}, {1, 2}, {0, 2, 5}, {0, 1, 4}};
    for (const auto& a : points)
      for (int e = 2; e <= 3; ++e) {
        const int n = static_cast<int>(a.size());
        const MinimalRepresentative m = minimal_representative(a, e);
        long long best = -1;
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
          // search translations in a box around ceil(a_i/e)
          std::vector<long long> box(n, -2);
          for (;;) {
            std::vector<long long> t(n);
            for (int i = 0; i < n; ++i)
              t[i] = (a[i] >= 0 ? (a[i] + e - 1) / e : a[i] / e) + box[i];
            const ExtendedAffineElement w{t, sigma};
            // w^-1 . a in the domain <=> a = w . x for x in the domain
            std::vector<long long> x(n);
            const std::vector<int> inv = inverse_permutation(sigma);
            bool ok = true;
            for (int i = 0; i < n; ++i) x[inv[i]] = a[i] - e * t[i];
            for (int i = 0; i + 1 < n; ++i)
              if (x[i] > x[i + 1]) ok = false;
            for (int i = 0; i < n; ++i)
              if (x[i] > 0 || x[i] <= -e) ok = false;
            if (ok) {
              const long long len = length(w);
              if (best < 0 || len < best) best = len;
            }
            int pos = 0;
            while (pos < n && box[pos] == 2) box[pos++] = -2;
            if (pos == n) break;
            ++box[pos];
          }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(best == m.length);
      }
  }
}

TEST_CASE("hook moves") {
  const HookMove move = hook_move({0, 3}, 2, 2);
  CHECK(move.s == 2);
  CHECK(move.u == 2);
  CHECK(move.target == std::vector<long long>{0, 1});

  // single-row partitions drop to the vacuum
  for (int e = 2; e <= 5; ++e) {
    std::vector<int> row{e};
    const std::vector<long long> a = hat(Partition(row), 1);
    const HookMove single = hook_move(a, 1, e);
    CHECK(single.target == hat(Partition{}, 1));
  }

  CHECK_THROWS_AS(hook_move({0, 1}, 1, 2), DomainError);   // negative landing
  CHECK_THROWS_AS(hook_move({0, 2}, 2, 2), DomainError);   // occupied landing
  CHECK_THROWS_AS(hook_move({2, 1}, 1, 2), DomainError);   // unsorted

  // abacus semantics: each move realizes one removable hook with leg r - s
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int e = 2; e <= 4; ++e) {
        const int rank = lambda.length() + 1;
        const std::vector<long long> a = hat(lambda, rank);
        std::multiset<std::pair<std::string, int>> via_moves;
        for (int r = 1; r <= rank; ++r) {
          if (a[r - 1] - e < 0 ||
              std::binary_search(a.begin(), a.end(), a[r - 1] - e))
            continue;
          const HookMove move = hook_move(a, r, e);
          BetaSequence beta;
          beta.betas.assign(move.target.rbegin(), move.target.rend());
          via_moves.emplace(partition_from_beta(beta).to_text(), move.r - move.s);
        }
        std::multiset<std::pair<std::string, int>> via_hooks;
        for (const auto& hook : removable_e_hooks(lambda, e))
          via_hooks.emplace(hook.result.to_text(), hook.leg_length);
        CHECK(via_moves == via_hooks);
      }
}

TEST_CASE("length parity identity") {
  const LengthParityReport two = verify_parity_identity(P({2}), 2, 2);
  CHECK(two.pass);
  CHECK(two.weight == 1);
  CHECK(two.core_length == 2);
  CHECK(two.lhs_parity == -1);

  // cores pass trivially at any rank
  for (const Partition& core : {Partition{}, P({2, 1}), P({1})})
    for (int rank = core.length(); rank <= core.length() + 3; ++rank)
      CHECK(verify_parity_identity(core, 2, rank).pass);

  const WeylSweepResult identity = sweep_length_parity({2, 3, 5}, 6);
  CHECK(identity.pass());
  const WeylSweepResult hooks = sweep_hook_moves({2, 3, 5}, 6);
  CHECK(hooks.pass());
  CHECK(hooks.hook_checks > 0);
}
