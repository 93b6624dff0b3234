#include "fockcalc/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace fockcalc {

namespace {

long long ceil_div(long long a, long long e) {
  const long long q = a / e;
  return (a % e != 0 && a > 0) ? q + 1 : q;
}

}  // namespace

std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
  std::vector<int> inv(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (sigma[k] < 0 || sigma[k] >= static_cast<int>(sigma.size()))
      throw DomainError("permutation image out of range");
    inv[sigma[k]] = static_cast<int>(k);
  }
  return inv;
}

long long inversions(const std::vector<int>& sigma) {
  long long count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++count;
  return count;
}

long long length(const ExtendedAffineElement& element) {
  const auto& t = element.translation;
  if (t.size() != element.sigma.size())
    throw DomainError("translation and permutation sizes differ");
  const std::vector<int> inv = inverse_permutation(element.sigma);
  long long total = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (inv[i] < inv[j])
        total += std::llabs(t[i] - t[j]);
      else
        total += std::llabs(t[i] - t[j] - 1);
    }
  return total;
}

std::vector<long long> hat(const Partition& lambda, int n) {
  if (n < lambda.length())
    throw DomainError("hat embedding needs n at least the partition length");
  const BetaSequence beta = beta_numbers(lambda, n);
  std::vector<long long> a(beta.betas.rbegin(), beta.betas.rend());
  return a;
}

MinimalRepresentative minimal_representative(const std::vector<long long>& a, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  if (!std::is_sorted(a.begin(), a.end()))
    throw DomainError("minimal representative requires a sorted point");
  const int n = static_cast<int>(a.size());
  PointDecomposition d;
  d.a = a;
  d.t.resize(n);
  d.c.resize(n);
  for (int i = 0; i < n; ++i) {
    d.t[i] = ceil_div(a[i], e);
    d.c[i] = a[i] - e * d.t[i];
  }
  // stable ranking: sigma_c^-1(i) > sigma_c^-1(j) iff c_i > c_j
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return d.c[i] < d.c[j]; });
  d.sigma_c = order;  // sigma_c^-1(i) is the stable rank of c_i

  long long len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      len += d.t[j] - d.t[i];
      if (d.c[i] > d.c[j]) ++len;
    }
  return MinimalRepresentative{std::move(d), len};
}

HookMove hook_move(const std::vector<long long>& a, int r, int e) {
  const int n = static_cast<int>(a.size());
  if (r < 1 || r > n) throw DomainError("hook index out of range");
  for (int i = 1; i < n; ++i)
    if (a[i - 1] >= a[i]) throw DomainError("hook move requires strictly increasing a");
  const long long lowered = a[r - 1] - e;
  if (lowered < 0) throw DomainError("no removable hook at this index");
  if (std::binary_search(a.begin(), a.end(), lowered))
    throw DomainError("no removable hook at this index");

  HookMove move;
  move.source = a;
  move.r = r;
  const auto slot = std::lower_bound(a.begin(), a.end(), lowered);
  move.s = static_cast<int>(slot - a.begin()) + 1;
  const long long tr = ceil_div(a[r - 1], e);
  move.u = r;
  for (int i = 1; i <= r; ++i)
    if (ceil_div(a[i - 1], e) == tr) {
      move.u = i;
      break;
    }
  move.target = a;
  move.target.erase(move.target.begin() + (r - 1));
  move.target.insert(move.target.begin() + (move.s - 1), lowered);
  return move;
}

LengthParityReport verify_parity_identity(const Partition& lambda, int e, int n) {
  LengthParityReport report;
  report.lambda = lambda;
  report.e = e;
  report.n = n;
  const CoreData data = core_weight_sign(lambda, e);
  report.weight = data.weight;
  report.sign = data.sign;
  const long long lhs_length = minimal_representative(hat(lambda, n), e).length;
  report.core_length = minimal_representative(hat(data.core, n), e).length;
  const long long rhs_exponent =
      static_cast<long long>(data.weight) * (n - 1) + report.core_length;
  report.lhs_parity = (lhs_length % 2 == 0) ? 1 : -1;
  report.rhs_parity = ((rhs_exponent % 2 == 0) ? 1 : -1) * data.sign;
  report.pass = report.lhs_parity == report.rhs_parity;
  return report;
}

}  // namespace fockcalc
