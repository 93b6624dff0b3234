#include "fockcalc/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fockcalc {

namespace {

void require_core(const BlockId& block) {
  if (block.e < 2) throw DomainError("e must be at least 2");
  if (block.weight < 0) throw DomainError("block weight must be non-negative");
  if (core_weight_sign(block.core, block.e).weight != 0)
    throw DomainError("block core must be an e-core");
}

std::vector<char> core_occupancy(const Partition& core, int e, int beads) {
  AbacusDisplay display(core, e, beads);
  std::vector<char> occ(static_cast<std::size_t>(core.part(1) + beads + e), 0);
  for (long long p = 0; p < static_cast<long long>(occ.size()); ++p)
    if (display.occupied(p)) occ[static_cast<std::size_t>(p)] = 1;
  return occ;
}

std::vector<int> runner_counts(const std::vector<char>& occ, int e) {
  std::vector<int> counts(e, 0);
  for (std::size_t p = 0; p < occ.size(); ++p)
    if (occ[p]) ++counts[p % e];
  return counts;
}

Partition decode_occupancy(const std::vector<char>& occ, int e) {
  return AbacusDisplay(e, occ).decode();
}

std::vector<char> swap_runners(const std::vector<char>& occ, int e, int runner) {
  std::vector<char> out = occ;
  out.resize(((occ.size() + e - 1) / e) * e, 0);
  for (std::size_t row = 0; row * e < out.size(); ++row)
    std::swap(out[row * e + runner - 1], out[row * e + runner]);
  return out;
}

}  // namespace

std::vector<Partition> enumerate_block(const BlockId& block) {
  require_core(block);
  const int e = block.e;
  int beads = std::max(block.core.length(), 1);
  // every runner needs headroom for a quotient of size up to the weight
  for (;;) {
    const auto counts = runner_counts(core_occupancy(block.core, e, beads), e);
    if (*std::min_element(counts.begin(), counts.end()) >= block.weight) break;
    beads += e;
  }
  const std::vector<char> base = core_occupancy(block.core, e, beads);
  const std::vector<int> counts = runner_counts(base, e);

  std::vector<Partition> out;
  std::vector<char> occ = base;
  // distribute the weight across runners as one partition per runner
  auto assign_runner = [&](int runner, const Partition& quotient) {
    const BetaSequence beta = beta_numbers(quotient, counts[runner]);
    for (long long p = runner; p < static_cast<long long>(occ.size()); p += e)
      occ[static_cast<std::size_t>(p)] = 0;
    for (long long row : beta.betas) {
      const std::size_t p = static_cast<std::size_t>(row * e + runner);
      if (p >= occ.size()) occ.resize(p + 1, 0);
      occ[p] = 1;
    }
  };
  auto rec = [&](auto&& self, int runner, int remaining) -> void {
    if (runner == e) {
      if (remaining == 0) out.push_back(decode_occupancy(occ, e));
      return;
    }
    for (int w = 0; w <= remaining; ++w) {
      for (const Partition& quotient : partitions_of(w)) {
        assign_runner(runner, quotient);
        self(self, runner + 1, remaining - w);
      }
    }
    assign_runner(runner, Partition{});
  };
  rec(rec, 0, block.weight);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return total_less(b, a);
  });
  return out;
}

std::vector<PairDescriptor> detect_pairs(const BlockId& block) {
  require_core(block);
  const int e = block.e;
  const int t0 = std::max(block.core.length(), 1);
  std::vector<PairDescriptor> pairs;
  std::set<std::pair<std::string, int>> seen;
  for (int t = t0; t < t0 + e; ++t) {
    const std::vector<char> occ = core_occupancy(block.core, e, t);
    const std::vector<int> counts = runner_counts(occ, e);
    for (int i = 1; i < e; ++i) {
      const int k = counts[i] - counts[i - 1];
      if (k <= 0) continue;
      const Partition core_c = decode_occupancy(swap_runners(occ, e, i), e);
      if (!seen.emplace(core_c.to_text(), k).second) continue;
      PairDescriptor pair;
      pair.block_b = block;
      pair.block_c = BlockId{e, core_c, block.weight};
      pair.runner = i;
      pair.bead_count = t;
      pair.k = k;
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

int pair_residue(const PairDescriptor& pair) {
  const int e = pair.block_b.e;
  return ((pair.runner - pair.bead_count) % e + e) % e;
}

namespace {

struct PairWindow {
  int beads = 0;       // normalized display size
  int q = 0;           // beads of block_b's core on runner-1
  std::vector<char> base_b;  // core display of block_b with `beads` beads
};

PairWindow window_for(const PairDescriptor& pair) {
  const int e = pair.block_b.e;
  PairWindow w;
  w.beads = pair.bead_count;
  for (;;) {
    const auto occ = core_occupancy(pair.block_b.core, e, w.beads);
    const auto counts = runner_counts(occ, e);
    if (counts[pair.runner] - counts[pair.runner - 1] != pair.k)
      throw DomainError("pair descriptor does not match its block core");
    if (counts[pair.runner - 1] >= 2) {
      w.q = counts[pair.runner - 1];
      w.base_b = occ;
      return w;
    }
    w.beads += e;
  }
}

// Rewrites the two runners of the pair according to five window rows
// (absolute rows q-2 .. q+2); rows below q-2 stay full on both runners.
Partition from_window(const PairWindow& w, const PairDescriptor& pair,
                      const std::array<std::pair<bool, bool>, 5>& rows) {
  const int e = pair.block_b.e;
  const int i = pair.runner;
  std::vector<char> occ = w.base_b;
  const std::size_t need = static_cast<std::size_t>((w.q + 3) * e);
  if (occ.size() < need) occ.resize(need, 0);
  for (long long p = i - 1; p < static_cast<long long>(occ.size()); p += e)
    occ[static_cast<std::size_t>(p)] = 0;
  for (long long p = i; p < static_cast<long long>(occ.size()); p += e)
    occ[static_cast<std::size_t>(p)] = 0;
  for (int row = 0; row <= w.q - 3; ++row) {
    occ[static_cast<std::size_t>(row) * e + i - 1] = 1;
    occ[static_cast<std::size_t>(row) * e + i] = 1;
  }
  for (int window_row = 0; window_row < 5; ++window_row) {
    const int row = w.q - 2 + window_row;
    occ[static_cast<std::size_t>(row) * e + i - 1] = rows[window_row].first;
    occ[static_cast<std::size_t>(row) * e + i] = rows[window_row].second;
  }
  return decode_occupancy(occ, e);
}

constexpr bool B = true, O = false;
using Window = std::array<std::pair<bool, bool>, 5>;

const Window kAlpha{{{B, B}, {B, O}, {O, B}, {O, B}, {O, B}}};
const Window kBeta{{{B, B}, {O, B}, {B, O}, {O, B}, {O, B}}};
const Window kGamma{{{B, B}, {O, B}, {O, B}, {B, O}, {O, B}}};
const Window kDelta{{{B, B}, {O, B}, {O, B}, {O, B}, {B, O}}};
const Window kAlphaTilde{{{B, B}, {B, O}, {B, O}, {B, O}, {O, B}}};
const Window kBetaTilde{{{B, B}, {B, O}, {B, O}, {O, B}, {B, O}}};
const Window kGammaTilde{{{B, B}, {B, O}, {O, B}, {B, O}, {B, O}}};
const Window kDeltaTilde{{{B, B}, {O, B}, {B, O}, {B, O}, {B, O}}};
const Window kAlphaCheck{{{B, B}, {B, O}, {B, O}, {B, O}, {B, O}}};

}  // namespace

PairExceptionals exceptional_quadruple(const PairDescriptor& pair) {
  if (pair.block_b.weight != 3 || pair.k != 2)
    throw DomainError("exceptional quadruples exist for [3:2]-pairs only");
  const PairWindow w = window_for(pair);
  PairExceptionals out;
  out.upstairs.alpha = from_window(w, pair, kAlpha);
  out.upstairs.beta = from_window(w, pair, kBeta);
  out.upstairs.gamma = from_window(w, pair, kGamma);
  out.upstairs.delta = from_window(w, pair, kDelta);
  out.downstairs.alpha = from_window(w, pair, kAlphaTilde);
  out.downstairs.beta = from_window(w, pair, kBetaTilde);
  out.downstairs.gamma = from_window(w, pair, kGammaTilde);
  out.downstairs.delta = from_window(w, pair, kDeltaTilde);
  out.alpha_check = from_window(w, pair, kAlphaCheck);
  return out;
}

Partition runner_swap(const Partition& lambda, int e, int runner, int bead_count) {
  if (runner < 1 || runner >= e) throw DomainError("runner index out of range");
  int beads = bead_count;
  while (beads < lambda.length()) beads += e;
  const std::vector<char> occ = core_occupancy(lambda, e, beads);
  return decode_occupancy(swap_runners(occ, e, runner), e);
}

Partition scopes_phi(const Partition& lambda, const PairDescriptor& pair) {
  const int e = pair.block_b.e;
  const CoreData data = core_weight_sign(lambda, e);
  if (!(data.core == pair.block_b.core) || data.weight != pair.block_b.weight)
    throw DomainError("partition is not in the upstairs block of the pair");

  if (pair.block_b.weight == 3 && pair.k == 2) {
    const PairExceptionals exc = exceptional_quadruple(pair);
    const auto up = exc.upstairs.as_array();
    const auto down = exc.downstairs.as_array();
    // alpha -> alpha~, beta -> delta~, gamma -> gamma~, delta -> beta~
    const std::array<int, 4> image{0, 3, 2, 1};
    for (int j = 0; j < 4; ++j)
      if (lambda == *up[j]) {
        if (!is_e_regular(lambda, e))
          throw DomainError("the crossing map is defined on e-regular partitions");
        return *down[image[j]];
      }
  }
  return runner_swap(lambda, e, pair.runner, pair.bead_count);
}

int movable_left_count(const Partition& lambda, const PairDescriptor& pair) {
  const int e = pair.block_b.e;
  int beads = pair.bead_count;
  while (beads < lambda.length()) beads += e;
  const std::vector<char> occ = core_occupancy(lambda, e, beads);
  const AbacusDisplay display(e, occ);
  int count = 0;
  for (long long p = pair.runner; p < static_cast<long long>(occ.size()); p += e)
    if (display.occupied(p) && !display.occupied(p - 1)) ++count;
  return count;
}

namespace {

std::array<std::array<Laurent, 4>, 4> expected_e2_table() {
  const auto m = [](int k) { return Laurent::monomial(k); };
  return {{
      {m(-2), m(-1), m(0), Laurent{}},
      {m(-1), m(0), Laurent{}, m(0)},
      {m(0), Laurent{}, m(0), m(1)},
      {Laurent{}, m(0), m(1), m(2)},
  }};
}

}  // namespace

PairTableReport verify_e2_table(const PairDescriptor& pair) {
  PairTableReport report;
  report.pair = pair;
  report.exceptionals = exceptional_quadruple(pair);
  const int e = pair.block_b.e;
  const int r = pair_residue(pair);
  const auto expected = expected_e2_table();
  const auto up = report.exceptionals.upstairs.as_array();
  const auto down = report.exceptionals.downstairs.as_array();
  for (int row = 0; row < 4; ++row) {
    const FockVector restricted =
        e_divided(r, 2, FockVector::standard(*up[row]), e);
    for (int col = 0; col < 4; ++col) {
      const Laurent via_e =
          inner_product(restricted, FockVector::standard(*down[col]));
      const Laurent via_f = inner_product(
          FockVector::standard(*up[row]),
          f_divided(r, 2, FockVector::standard(*down[col]), e));
      report.table[row][col] = via_e;
      if (via_e != expected[row][col] || via_f != expected[row][col])
        report.mismatches.push_back(
            TableMismatch{row, col, expected[row][col], via_e});
    }
  }
  return report;
}

namespace {

std::vector<std::array<Laurent, 8>> two_zero_patterns() {
  const auto m = [](int k) { return Laurent::monomial(k); };
  const Laurent z;
  return {
      {m(2), m(3), z, z, m(2), m(3), z, z},
      {m(2), z, m(2), z, m(2), z, m(2), z},
      {m(2), z, z, m(1), z, m(1), m(2), z},
      {z, m(1), m(2), z, m(2), z, z, m(1)},
      {z, m(1), z, m(1), z, m(1), z, m(1)},
      {z, z, m(0), m(1), z, z, m(0), m(1)},
  };
}

std::vector<std::array<Laurent, 8>> no_zero_patterns() {
  const auto m = [](int k) { return Laurent::monomial(k); };
  return {
      {m(1), m(2), m(1), m(2), m(1), m(2), m(1), m(2)},
      {m(2), m(1), m(2), m(1), m(2), m(1), m(2), m(1)},
  };
}

}  // namespace

CaseTableReport verify_case_tables(const PairDescriptor& pair) {
  CaseTableReport report;
  report.pair = pair;
  const int e = pair.block_b.e;
  const int r = pair_residue(pair);
  const PairExceptionals exc = exceptional_quadruple(pair);
  const auto up = exc.upstairs.as_array();
  const auto down = exc.downstairs.as_array();
  const auto matrix_b =
      block_matrix(e, pair.block_b.core, pair.block_b.weight);
  const auto matrix_c =
      block_matrix(e, pair.block_c.core, pair.block_c.weight);
  const auto two_zero = two_zero_patterns();
  const auto no_zero = no_zero_patterns();

  for (const Partition& lambda : matrix_b->cols) {
    bool exceptional = false;
    for (const auto* p : up) exceptional = exceptional || lambda == *p;
    if (exceptional) continue;
    CaseCheck check;
    check.lambda = lambda;
    check.lambda_tilde = scopes_phi(lambda, pair);
    for (int j = 0; j < 4; ++j) {
      check.tuple[j] = matrix_b->entry(*up[j], lambda);
      check.tuple[4 + j] = matrix_c->entry(*down[j], check.lambda_tilde);
    }
    for (int j = 4; j < 8; ++j)
      if (check.tuple[j].is_zero()) ++check.tilde_zeros;
    const std::vector<std::array<Laurent, 8>>* patterns = nullptr;
    if (check.tilde_zeros == 2) patterns = &two_zero;
    if (check.tilde_zeros == 0) patterns = &no_zero;
    check.relevant = patterns != nullptr;
    if (patterns) {
      for (std::size_t row = 0; row < patterns->size(); ++row)
        if ((*patterns)[row] == check.tuple) {
          check.matched_row = static_cast<int>(row);
          break;
        }
    }
    if (check.tilde_zeros == 2) {
      // f^(2) G(lambda~) = G(lambda) + G(alpha)
      const FockVector induced =
          f_divided(r, 2, matrix_c->column(check.lambda_tilde), e);
      const auto expansion = expand_in_canonical(induced, e);
      std::map<Partition, Laurent, PartitionLess> got(expansion.begin(),
                                                      expansion.end());
      std::map<Partition, Laurent, PartitionLess> want;
      want[lambda] = Laurent(1);
      want[*up[0]] = Laurent(1);
      check.induction_ok = got == want;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace fockcalc
