#pragma once

#include <optional>

#include "fockcalc/laurent.hpp"
#include "fockcalc/partition.hpp"

namespace fockcalc {

/// Element of the Fock space: finite sum of standard basis vectors s(lambda)
/// with Laurent coefficients. No zero coefficients are stored.
class FockVector {
public:
  using Terms = std::map<Partition, Laurent, PartitionLess>;

  FockVector() = default;
  static FockVector standard(const Partition& lambda);  // s(lambda)

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const Laurent& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator*(const Laurent& c, const FockVector& x);
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const FockVector& o) const { return terms_ != o.terms_; }

  /// Largest support partition in the deterministic total order.
  const Partition& leading_partition() const;
  int max_length() const;

private:
  Terms terms_;
};

/// Display parameters for one operator application: bead count t with
/// e not dividing r + t, and the runner index i = (r + t) mod e.
struct ResidueContext {
  int e = 2;
  int r = 0;
  int t = 0;
  int i = 0;
};

/// Smallest t >= min_beads with e not dividing r + t.
ResidueContext make_residue_context(int e, int r, int min_beads);

/// Action of f_r: adds one residue-r node in every possible way, with the
/// bead-counting power of v. The optional bead count must satisfy the
/// ResidueContext constraints; results are bead-count independent.
FockVector f_action(int r, const FockVector& x, int e,
                    std::optional<int> bead_count = std::nullopt);

/// Action of e_r, the adjoint of f_r for the inner product that makes the
/// standard basis orthonormal: <f_r x, y> = <x, e_r y>.
FockVector e_action(int r, const FockVector& x, int e,
                    std::optional<int> bead_count = std::nullopt);

/// Divided powers f_r^(k) = f_r^k / [k]! and e_r^(k) = e_r^k / [k]!.
FockVector f_divided(int r, int k, const FockVector& x, int e);
FockVector e_divided(int r, int k, const FockVector& x, int e);

/// Inner product with the standard basis orthonormal; no bar twist.
Laurent inner_product(const FockVector& x, const FockVector& y);

}  // namespace fockcalc
