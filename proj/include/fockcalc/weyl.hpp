#pragma once

#include <vector>

#include "fockcalc/partition.hpp"

namespace fockcalc {

/// Element T*sigma of the extended affine Weyl group S_n x Z^n acting on
/// Z^n by a |-> sigma(a) + e*T. Permutations are stored 0-based; the
/// semantics follow the 1-based convention throughout.
struct ExtendedAffineElement {
  std::vector<long long> translation;  // T
  std::vector<int> sigma;              // images: sigma[k] = sigma(k+1) - 1
};

/// Length with respect to the positive roots e_i - e_j (i < j):
/// sum over i<j of |T_i - T_j| or |T_i - T_j - 1| according to whether
/// sigma^-1 preserves or inverts the pair.
long long length(const ExtendedAffineElement& element);

long long inversions(const std::vector<int>& sigma);
std::vector<int> inverse_permutation(const std::vector<int>& sigma);

/// The strictly increasing vector whose reverse is the n-bead beta-sequence
/// of lambda.
std::vector<long long> hat(const Partition& lambda, int n);

/// Decomposition a = e*t + c with -e < c_i <= 0, plus the stable sorting
/// permutation of c; for sorted a this yields the minimal coset
/// representative w_a = t * sigma_c.
struct PointDecomposition {
  std::vector<long long> a;
  std::vector<long long> t;   // t_i = ceil(a_i / e)
  std::vector<long long> c;   // c_i = a_i - e * t_i
  std::vector<int> sigma_c;   // stable sort permutation (0-based images)
};

struct MinimalRepresentative {
  PointDecomposition decomposition;
  long long length = 0;
};

/// Requires a weakly increasing. length = sum_{i<j}(t_j - t_i) + inv(c).
MinimalRepresentative minimal_representative(const std::vector<long long>& a, int e);

/// Removal of one e-hook in coordinates: a_r - e re-inserted at slot s.
struct HookMove {
  std::vector<long long> source;
  std::vector<long long> target;
  int r = 0;  // 1-based index of the lowered entry
  int s = 0;  // 1-based slot where a_r - e lands
  int u = 0;  // least index with t_u = t_r
};

/// Requires a strictly increasing, a_r - e >= 0 and not already present.
HookMove hook_move(const std::vector<long long>& a, int r, int e);

struct LengthParityReport {
  Partition lambda;
  int e = 2;
  int n = 0;
  int lhs_parity = 1;   // (-1)^len(w_hat(lambda))
  int rhs_parity = 1;   // (-1)^(W(n-1) + len(w_hat(core))) * sign
  int weight = 0;
  long long core_length = 0;  // len(w_hat(core))
  int sign = 1;
  bool pass = false;
};

/// Checks the length-parity identity relating len(w_hat(lambda)) to the
/// e-weight, the relative sign, and len(w_hat(core)).
LengthParityReport verify_parity_identity(const Partition& lambda, int e, int n);

}  // namespace fockcalc
