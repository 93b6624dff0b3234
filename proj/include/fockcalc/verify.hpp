#pragma once

#include "fockcalc/blocks.hpp"

namespace fockcalc {

/// Worker bound from FOCKCALC_THREADS (defaults to the hardware count).
int worker_count();

/// Runs fn(0..count-1) on a bounded pool; results must be slot-isolated.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// All e-cores of size at most max_n, ascending by size then lexicographic.
std::vector<Partition> cores_up_to(int e, int max_n);

/// All blocks (core, weight) containing a partition of size at most max_n.
std::vector<BlockId> blocks_up_to(int e, int max_n);

struct ParitySweepResult {
  long long blocks = 0;
  long long entries = 0;
  std::vector<ParityBlockReport> failures;
  bool pass() const { return failures.empty(); }
};

/// Parity of every v-decomposition number against the relative signs.
ParitySweepResult sweep_parity(const std::vector<int>& es, int max_n);

struct WeylSweepResult {
  long long identity_checks = 0;
  long long hook_checks = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// The length-parity identity over all partitions of size at most max_n
/// with n in {l, l+1, l+e}.
WeylSweepResult sweep_length_parity(const std::vector<int>& es, int max_n);

/// The hook-move length identity and its chain sub-checks over all
/// removable hooks at the same sizes.
WeylSweepResult sweep_hook_moves(const std::vector<int>& es, int max_n);

struct MullineuxSweepResult {
  long long checks = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// Involution, sign rule, and the v^w column identity for all e-regular
/// partitions of size at most max_n.
MullineuxSweepResult sweep_mullineux(const std::vector<int>& es, int max_n);

struct MonomialSweepResult {
  long long entries = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// Weight-3 monomial classification for the given cores.
MonomialSweepResult sweep_weight3_monomials(int e, const std::vector<Partition>& cores);

struct AdjointnessResult {
  long long instances = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// <f_r x, y> = <x, e_r y> plus bead-count invariance on random vectors.
AdjointnessResult sweep_adjointness(int instances, unsigned seed);

struct TriangularityResult {
  long long blocks = 0;
  long long entries = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

/// Unitriangularity, positivity, and independence of the elimination order
/// over every block within the size bound.
TriangularityResult sweep_triangularity(const std::vector<int>& es, int max_n);

struct PairChecksResult {
  PairTableReport table;
  CaseTableReport cases;
  bool alpha_column_ok = false;        // G(alpha) has the four-term shape
  bool alpha_tilde_column_ok = false;  // and likewise downstairs
  bool vacuum_induction_ok = false;    // f G(alpha_check) = G(alpha~)
  bool movable_beads_ok = false;       // two movable beads off the quadruple
  bool pass() const {
    return table.pass() && cases.pass() && alpha_column_ok &&
           alpha_tilde_column_ok && vacuum_induction_ok && movable_beads_ok;
  }
};

/// Full verification bundle for one [3:2]-pair.
PairChecksResult run_pair_checks(const PairDescriptor& pair);

}  // namespace fockcalc
