#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockcalc {

// Thrown when an argument violates an operation's stated domain.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal invariant fails; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A partition: weakly decreasing sequence of positive integers.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;            // sum of parts
  int part(int i) const;             // 1-based; 0 beyond the length
  bool empty() const { return parts_.empty(); }

  std::string to_text() const;       // "4,2,1", "-" for the empty partition

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

private:
  std::vector<int> parts_;
};

/// Ascending total order refining dominance: by size, then lexicographically
/// on parts. Within one size, lexicographic order is a linear extension of
/// the dominance order.
bool total_less(const Partition& a, const Partition& b);

/// A second linear extension of dominance, used to confirm that elimination
/// output does not depend on the refinement: by size, then by descending
/// lexicographic order of the conjugates.
bool conjugate_total_less(const Partition& a, const Partition& b);

struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return total_less(a, b);
  }
};

enum class Dominance { less_or_equal, greater, incomparable };

/// Tri-state dominance comparison of two partitions of the same size.
Dominance dominance_leq(const Partition& lhs, const Partition& rhs);

/// True iff lhs is dominated by rhs (prefix sums of lhs never exceed rhs).
bool dominated_by(const Partition& lhs, const Partition& rhs);

/// Beta-numbers: beta_i = lambda_i + s - i, strictly decreasing.
struct BetaSequence {
  std::vector<long long> betas;  // strictly decreasing
  int bead_count() const { return static_cast<int>(betas.size()); }
};

BetaSequence beta_numbers(const Partition& lambda, int s);
Partition partition_from_beta(const BetaSequence& beta);

/// James e-abacus display: bead at position beta_i for each beta-number.
/// Position p lies on runner p mod e, row p / e, rows growing downward.
class AbacusDisplay {
public:
  AbacusDisplay(const Partition& lambda, int e, int bead_count);
  AbacusDisplay(int e, std::vector<char> occ);  // from raw occupancy

  int e() const { return e_; }
  int bead_count() const { return beads_; }
  bool occupied(long long pos) const {
    return pos >= 0 && pos < static_cast<long long>(occ_.size()) && occ_[pos];
  }
  /// Beads on the given runner, ascending position.
  std::vector<long long> runner_beads(int runner) const;
  int runner_count(int runner) const;

  void move_bead(long long from, long long to);
  Partition decode() const;

private:
  int e_ = 2;
  int beads_ = 0;
  std::vector<char> occ_;
};

struct CoreData {
  Partition core;
  int weight = 0;
  int sign = 1;  // relative e-sign: (-1)^(beads crossed while sliding up)
};

CoreData core_weight_sign(const Partition& lambda, int e);
// Same computation on a display with a caller-chosen bead count; the result
// is bead-count independent (tested).
CoreData core_weight_sign_with_beads(const Partition& lambda, int e, int bead_count);

Partition conjugate(const Partition& lambda);

bool is_e_regular(const Partition& lambda, int e);
bool is_e_restricted(const Partition& lambda, int e);

struct HookRemoval {
  Partition result;
  int leg_length = 0;
};

/// All single e-hook removals, one per bead whose position minus e is vacant.
/// Ordered by ascending bead position.
std::vector<HookRemoval> removable_e_hooks(const Partition& lambda, int e);

/// Mullineux involution on e-regular partitions.
Partition mullineux(const Partition& lambda, int e);

/// One e-rim strip: returns (nodes removed, remaining partition).
/// Exposed for the Mullineux symbol tests.
std::pair<long long, Partition> strip_e_rim(const Partition& lambda, int e);

/// All partitions of n, descending lexicographic order.
const std::vector<Partition>& partitions_of(int n);

}  // namespace fockcalc
