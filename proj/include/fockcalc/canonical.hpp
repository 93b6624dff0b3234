#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fockcalc/fock.hpp"

namespace fockcalc {

/// Ladder decomposition of an e-regular partition: nodes grouped by the
/// ladder index row + (e-1)(col-1), ascending, each group recording the
/// common residue and node count.
struct LadderStep {
  int residue = 0;
  int multiplicity = 0;
};
using LadderSequence = std::vector<LadderStep>;

LadderSequence ladders(const Partition& mu, int e);

/// The bar-invariant vector A(mu): the product of divided powers
/// f_r^(m) over the ladders of mu, in ladder order, applied to s(empty).
/// Unitriangular: s(mu) plus strictly dominated terms.
FockVector ladder_vector(const Partition& mu, int e);

/// Per-block table of the v-decomposition numbers d_{lambda,mu}(v).
/// Rows: all partitions in the block; columns: the e-regular ones.
/// Both ordered descending in the deterministic total order.
struct DecompositionMatrix {
  int e = 2;
  Partition core;
  int weight = 0;
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  // entries[c] is the column vector G(cols[c]) keyed by row partition
  std::vector<FockVector> columns;

  Laurent entry(const Partition& row, const Partition& col) const;
  const FockVector& column(const Partition& col) const;
  std::string to_json() const;  // versioned v1 format, bit-exact
  static DecompositionMatrix from_json(const std::string& text);
};

enum class EliminationOrder { lexicographic, conjugate_lexicographic };

/// Computes the canonical basis of one block by ladder vectors and
/// bar-invariant Gaussian elimination. The order selects the linear
/// extension of dominance used by the sweep; the result is order
/// independent (verified by tests).
DecompositionMatrix canonical_basis_block(
    int e, const Partition& core, int weight,
    EliminationOrder order = EliminationOrder::lexicographic);

/// Memoized and optionally disk-cached (FOCKCALC_CACHE) block lookup.
std::shared_ptr<const DecompositionMatrix> block_matrix(int e, const Partition& core,
                                                        int weight);

/// d_{lambda,mu}(v); zero when the partitions lie in different blocks.
Laurent decomposition_entry(const Partition& lambda, const Partition& mu, int e);

/// Expansion of x in the canonical basis by greedy triangular peeling.
/// Throws DomainError if x is not in the span of the G(mu) with mu e-regular.
std::vector<std::pair<Partition, Laurent>> expand_in_canonical(const FockVector& x,
                                                               int e);

struct ParityViolation {
  Partition row;
  Partition col;
  Laurent value;
  int row_sign = 1;
  int col_sign = 1;
};

struct ParityBlockReport {
  int e = 2;
  Partition core;
  int weight = 0;
  long long entries_checked = 0;
  std::vector<ParityViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Checks that every nonzero entry is purely even or purely odd in v,
/// matching whether the relative signs of the row and column agree.
ParityBlockReport verify_parity_block(int e, const Partition& core, int weight);

/// Name of the cache file for a block, relative to the cache directory.
std::string cache_file_name(int e, const Partition& core, int weight);

}  // namespace fockcalc
