#include "fockcalc/fock.hpp"

#include <algorithm>

namespace fockcalc {

FockVector FockVector::standard(const Partition& lambda) {
  FockVector out;
  out.terms_[lambda] = Laurent(1);
  return out;
}

Laurent FockVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Laurent{} : it->second;
}

void FockVector::add(const Partition& lambda, const Laurent& c) {
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

FockVector operator*(const Laurent& c, const FockVector& x) {
  FockVector out;
  if (c.is_zero()) return out;
  for (const auto& [p, q] : x.terms_) out.terms_[p] = c * q;
  return out;
}

const Partition& FockVector::leading_partition() const {
  if (terms_.empty()) throw InternalError("zero vector has no leading term");
  return terms_.rbegin()->first;
}

int FockVector::max_length() const {
  int n = 0;
  for (const auto& [p, c] : terms_) n = std::max(n, p.length());
  return n;
}

ResidueContext make_residue_context(int e, int r, int min_beads) {
  if (e < 2) throw DomainError("e must be at least 2");
  if (r < 0 || r >= e) throw DomainError("residue out of range");
  int t = std::max(min_beads, 1);
  while ((r + t) % e == 0) ++t;
  return ResidueContext{e, r, t, (r + t) % e};
}

namespace {

// Occupancy of the two runners involved in an f_r/e_r application, as sorted
// position lists. Positions on runner i-1 pair with their successors on
// runner i; the exponent counts beads strictly below (larger position).
struct MovePlan {
  AbacusDisplay display;
  std::vector<long long> left;   // beads on runner i-1
  std::vector<long long> right;  // beads on runner i
};

MovePlan plan_for(const Partition& lambda, const ResidueContext& ctx) {
  MovePlan plan{AbacusDisplay(lambda, ctx.e, ctx.t),
                {}, {}};
  plan.left = plan.display.runner_beads(ctx.i - 1);
  plan.right = plan.display.runner_beads(ctx.i);
  return plan;
}

int beads_below(const std::vector<long long>& beads, long long pos) {
  // beads is ascending; count entries strictly greater than pos
  auto it = std::upper_bound(beads.begin(), beads.end(), pos);
  return static_cast<int>(beads.end() - it);
}

void validate_bead_count(const ResidueContext& ctx, int min_beads) {
  if (ctx.t < min_beads)
    throw DomainError("bead count below a partition length");
  if ((ctx.r + ctx.t) % ctx.e == 0)
    throw DomainError("bead count t with e dividing r + t");
}

}  // namespace

FockVector f_action(int r, const FockVector& x, int e,
                    std::optional<int> bead_count) {
  ResidueContext ctx = make_residue_context(e, r, x.max_length() + 1);
  if (bead_count) {
    ctx.t = *bead_count;
    ctx.i = ((r + ctx.t) % e + e) % e;
    validate_bead_count(ctx, x.max_length() + 1);
  }
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) {
    MovePlan plan = plan_for(lambda, ctx);
    for (long long a : plan.left) {
      if (plan.display.occupied(a + 1)) continue;
      const int exponent =
          beads_below(plan.left, a) - beads_below(plan.right, a + 1);
      AbacusDisplay moved = plan.display;
      moved.move_bead(a, a + 1);
      out.add(moved.decode(), c * Laurent::monomial(exponent));
    }
  }
  return out;
}

FockVector e_action(int r, const FockVector& x, int e,
                    std::optional<int> bead_count) {
  ResidueContext ctx = make_residue_context(e, r, x.max_length() + 1);
  if (bead_count) {
    ctx.t = *bead_count;
    ctx.i = ((r + ctx.t) % e + e) % e;
    validate_bead_count(ctx, x.max_length());
  }
  FockVector out;
  for (const auto& [mu, c] : x.terms()) {
    MovePlan plan = plan_for(mu, ctx);
    for (long long b : plan.right) {
      if (b == 0 || plan.display.occupied(b - 1)) continue;
      // Exponent of the reverse f-move, so that e_r is adjoint to f_r.
      const int exponent =
          beads_below(plan.left, b - 1) - beads_below(plan.right, b);
      AbacusDisplay moved = plan.display;
      moved.move_bead(b, b - 1);
      out.add(moved.decode(), c * Laurent::monomial(exponent));
    }
  }
  return out;
}

namespace {

FockVector divided(int r, int k, const FockVector& x, int e, bool lowering) {
  if (k < 1) throw DomainError("divided power requires k >= 1");
  FockVector y = x;
  for (int j = 0; j < k; ++j) y = lowering ? e_action(r, y, e) : f_action(r, y, e);
  if (k == 1) return y;
  const Laurent factorial = quantum_factorial(k);
  FockVector out;
  for (const auto& [p, c] : y.terms()) out.add(p, exact_divide(c, factorial));
  return out;
}

}  // namespace

FockVector f_divided(int r, int k, const FockVector& x, int e) {
  return divided(r, k, x, e, false);
}

FockVector e_divided(int r, int k, const FockVector& x, int e) {
  return divided(r, k, x, e, true);
}

Laurent inner_product(const FockVector& x, const FockVector& y) {
  Laurent out;
  for (const auto& [p, c] : x.terms()) {
    const Laurent d = y.coefficient(p);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

}  // namespace fockcalc
