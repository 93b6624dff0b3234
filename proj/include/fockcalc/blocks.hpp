#pragma once

#include <array>
#include <optional>

#include "fockcalc/canonical.hpp"

namespace fockcalc {

/// A block: all partitions with the given e-core and e-weight.
struct BlockId {
  int e = 2;
  Partition core;
  int weight = 0;
};

/// All partitions of the block, descending in the deterministic total order.
/// Generated from e-quotients: the weight is distributed over the runners.
std::vector<Partition> enumerate_block(const BlockId& block);

/// A [w:k]-pair: in the bead_count-bead display of block_b's core, runner
/// `runner` carries exactly k more beads than runner-1; block_c's core is
/// that display with the two runners interchanged.
struct PairDescriptor {
  BlockId block_b;
  BlockId block_c;
  int runner = 1;
  int bead_count = 0;
  int k = 1;
};

/// All [w:k]-pairs with the given block upstairs, deduplicated over
/// equivalent displays.
std::vector<PairDescriptor> detect_pairs(const BlockId& block);

/// The residue r with runner = (r + bead_count) mod e; the pair's induction
/// and restriction operators are f_r and e_r.
int pair_residue(const PairDescriptor& pair);

/// The four partitions of a [3:2]-pair block whose displays deviate from the
/// generic two-movable-beads shape.
struct ExceptionalQuadruple {
  Partition alpha, beta, gamma, delta;
  std::array<const Partition*, 4> as_array() const {
    return {&alpha, &beta, &gamma, &delta};
  }
};

struct PairExceptionals {
  ExceptionalQuadruple upstairs;    // in block_b
  ExceptionalQuadruple downstairs;  // in block_c
  Partition alpha_check;            // weight-0 partition below the pair
};

/// Reads the eight exceptional partitions and alpha_check off the abacus;
/// requires w = 3, k = 2.
PairExceptionals exceptional_quadruple(const PairDescriptor& pair);

/// Interchanges two adjacent runners of the display of lambda with the given
/// bead count (raised by multiples of e until the display fits).
Partition runner_swap(const Partition& lambda, int e, int runner, int bead_count);

/// The bijection induced by restriction: runner swap away from the
/// exceptional quadruple, the fixed crossing on it.
Partition scopes_phi(const Partition& lambda, const PairDescriptor& pair);

/// Entry-by-entry comparison of <e^(2) s(rho), s(sigma~)> with the expected
/// 4x4 table over the exceptional quadruples.
struct TableMismatch {
  int row = 0;
  int col = 0;
  Laurent expected;
  Laurent computed;
};

struct PairTableReport {
  PairDescriptor pair;
  PairExceptionals exceptionals;
  std::array<std::array<Laurent, 4>, 4> table;  // computed values
  std::vector<TableMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

PairTableReport verify_e2_table(const PairDescriptor& pair);

/// Decomposition-number patterns over the exceptional rows for one
/// non-exceptional column and its image downstairs.
struct CaseCheck {
  Partition lambda;
  Partition lambda_tilde;
  std::array<Laurent, 8> tuple;  // d_{alpha..delta,lambda}, d_{tilde...}
  int tilde_zeros = 0;
  std::optional<int> matched_row;    // index into the printed pattern list
  std::optional<bool> induction_ok;  // two-zero case: f^(2)G(lt) = G(l)+G(a)
  bool relevant = false;             // two-zero or no-zero pattern
  bool pass() const {
    if (!relevant) return true;
    if (!matched_row) return false;
    return !induction_ok || *induction_ok;
  }
};

struct CaseTableReport {
  PairDescriptor pair;
  std::vector<CaseCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

CaseTableReport verify_case_tables(const PairDescriptor& pair);

/// Beads on the given runner movable one position left, for the
/// two-movable-beads block property.
int movable_left_count(const Partition& lambda, const PairDescriptor& pair);

}  // namespace fockcalc
