#include "fockcalc/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "fockcalc/weyl.hpp"

namespace fockcalc {

int worker_count() {
  if (const char* env = std::getenv("FOCKCALC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& thread : pool) thread.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Partition> cores_up_to(int e, int max_n) {
  std::vector<Partition> cores;
  for (int n = 0; n <= max_n; ++n)
    for (const Partition& p : partitions_of(n))
      if (core_weight_sign(p, e).weight == 0) cores.push_back(p);
  return cores;
}

std::vector<BlockId> blocks_up_to(int e, int max_n) {
  std::vector<BlockId> blocks;
  for (const Partition& core : cores_up_to(e, max_n))
    for (int w = 0; core.size() + static_cast<long long>(e) * w <= max_n; ++w)
      blocks.push_back(BlockId{e, core, w});
  return blocks;
}

ParitySweepResult sweep_parity(const std::vector<int>& es, int max_n) {
  ParitySweepResult result;
  std::vector<BlockId> blocks;
  for (int e : es) {
    auto more = blocks_up_to(e, max_n);
    blocks.insert(blocks.end(), more.begin(), more.end());
  }
  std::vector<ParityBlockReport> reports(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t i) {
    reports[i] = verify_parity_block(blocks[i].e, blocks[i].core, blocks[i].weight);
  });
  result.blocks = static_cast<long long>(blocks.size());
  for (auto& report : reports) {
    result.entries += report.entries_checked;
    if (!report.pass()) result.failures.push_back(std::move(report));
  }
  return result;
}

namespace {

std::vector<int> sheet_sizes(const Partition& lambda, int e) {
  const int l = lambda.length();
  std::vector<int> ns{l, l + 1, l + e};
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

}  // namespace

WeylSweepResult sweep_length_parity(const std::vector<int>& es, int max_n) {
  WeylSweepResult result;
  for (int e : es)
    for (int n = 0; n <= max_n; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (int rank : sheet_sizes(lambda, e)) {
          ++result.identity_checks;
          const LengthParityReport report = verify_parity_identity(lambda, e, rank);
          if (!report.pass) {
            std::ostringstream msg;
            msg << "length parity failed: lambda=" << lambda.to_text() << " e=" << e
                << " n=" << rank;
            result.violations.push_back(msg.str());
          }
        }
  return result;
}

WeylSweepResult sweep_hook_moves(const std::vector<int>& es, int max_n) {
  WeylSweepResult result;
  const auto complain = [&](const Partition& lambda, int e, int n, int r,
                            const char* what) {
    std::ostringstream msg;
    msg << what << ": lambda=" << lambda.to_text() << " e=" << e << " n=" << n
        << " r=" << r;
    result.violations.push_back(msg.str());
  };
  for (int e : es)
    for (int size = 0; size <= max_n; ++size)
      for (const Partition& lambda : partitions_of(size))
        for (int n : sheet_sizes(lambda, e)) {
          const std::vector<long long> a = hat(lambda, n);
          for (int r = 1; r <= n; ++r) {
            const long long lowered = a[r - 1] - e;
            if (lowered < 0 ||
                std::binary_search(a.begin(), a.end(), lowered))
              continue;
            ++result.hook_checks;
            const HookMove move = hook_move(a, r, e);
            const MinimalRepresentative before = minimal_representative(a, e);
            const MinimalRepresentative after = minimal_representative(move.target, e);
            const long long delta = 4LL * move.u - n - 1 - move.r - move.s;
            if (before.length != after.length + delta)
              complain(lambda, e, n, r, "hook length identity failed");

            const auto& t = before.decomposition.t;
            const auto& c = before.decomposition.c;
            const auto& t_after = after.decomposition.t;
            const auto& c_after = after.decomposition.c;
            const int s = move.s, u = move.u;
            // t_u = ... = t_r; below the break the value drops by one
            for (int i = u; i <= r; ++i)
              if (t[i - 1] != t[r - 1]) complain(lambda, e, n, r, "t chain failed");
            for (int i = s; i < u; ++i)
              if (t[i - 1] != t[r - 1] - 1) complain(lambda, e, n, r, "t chain failed");
            // c_u < ... < c_r and, when s < u, c_r < c_s < ... < c_{u-1}
            for (int i = u; i < r; ++i)
              if (!(c[i - 1] < c[i])) complain(lambda, e, n, r, "c chain failed");
            if (s < u) {
              if (!(c[r - 1] < c[s - 1])) complain(lambda, e, n, r, "c chain failed");
              for (int i = s; i + 1 < u; ++i)
                if (!(c[i - 1] < c[i])) complain(lambda, e, n, r, "c chain failed");
            }
            // translation part loses one step at index u
            std::vector<long long> expected_t = t;
            expected_t[u - 1] -= 1;
            if (expected_t != t_after)
              complain(lambda, e, n, r, "translation update failed");
            // inversion count difference of the sign parts
            long long inv_before = 0, inv_after_count = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
              for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i] > c[j]) ++inv_before;
            for (std::size_t i = 0; i < c_after.size(); ++i)
              for (std::size_t j = i + 1; j < c_after.size(); ++j)
                if (c_after[i] > c_after[j]) ++inv_after_count;
            if (inv_before - inv_after_count != 2LL * u - (r + s))
              complain(lambda, e, n, r, "inversion difference failed");
            // the two length routes must agree on both sides
            const ExtendedAffineElement wa{before.decomposition.t,
                                           before.decomposition.sigma_c};
            const ExtendedAffineElement wa_after{after.decomposition.t,
                                                 after.decomposition.sigma_c};
            if (length(wa) != before.length || length(wa_after) != after.length)
              complain(lambda, e, n, r, "length route mismatch");
          }
        }
  return result;
}

MullineuxSweepResult sweep_mullineux(const std::vector<int>& es, int max_n) {
  MullineuxSweepResult result;
  for (int e : es)
    for (int n = 0; n <= max_n; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        if (!is_e_regular(lambda, e)) continue;
        ++result.checks;
        const auto complain = [&](const char* what) {
          std::ostringstream msg;
          msg << what << ": lambda=" << lambda.to_text() << " e=" << e;
          result.violations.push_back(msg.str());
        };
        const Partition image = mullineux(lambda, e);
        if (mullineux(image, e) != lambda) complain("involution failed");
        const CoreData before = core_weight_sign(lambda, e);
        const CoreData after = core_weight_sign(image, e);
        if (after.core != conjugate(before.core) || after.weight != before.weight)
          complain("core conjugation failed");
        const int predicted =
            (static_cast<long long>(e) * before.weight % 2 == 0) ? before.sign
                                                                 : -before.sign;
        if (after.sign != predicted) complain("sign rule failed");
        const Laurent column =
            decomposition_entry(conjugate(image), lambda, e);
        if (column != Laurent::monomial(before.weight)) complain("v^w column failed");
      }
  return result;
}

MonomialSweepResult sweep_weight3_monomials(int e, const std::vector<Partition>& cores) {
  MonomialSweepResult result;
  for (const Partition& core : cores) {
    const auto matrix = block_matrix(e, core, 3);
    std::map<Partition, int, PartitionLess> signs;
    for (const Partition& row : matrix->rows)
      signs[row] = core_weight_sign(row, e).sign;
    for (std::size_t c = 0; c < matrix->cols.size(); ++c) {
      const Partition& mu = matrix->cols[c];
      const Partition twisted = conjugate(mullineux(mu, e));
      for (const auto& [lambda, value] : matrix->columns[c].terms()) {
        ++result.entries;
        Laurent expected;
        if (lambda == mu)
          expected = Laurent(1);
        else if (lambda == twisted)
          expected = Laurent::monomial(3);
        else
          expected = Laurent::monomial(signs.at(lambda) == signs.at(mu) ? 2 : 1);
        if (value != expected) {
          std::ostringstream msg;
          msg << "monomial rule failed: e=" << e << " core=" << core.to_text()
              << " lambda=" << lambda.to_text() << " mu=" << mu.to_text()
              << " value=" << value.to_string() << " expected="
              << expected.to_string();
          result.violations.push_back(msg.str());
        }
      }
    }
  }
  return result;
}

namespace {

FockVector random_vector(std::mt19937& rng, int size) {
  const auto& pool = partitions_of(size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> exponent(-3, 3);
  std::uniform_int_distribution<int> coefficient(-4, 4);
  FockVector x;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    Laurent c;
    for (int j = 0; j < 2; ++j)
      c += Laurent::monomial(exponent(rng), coefficient(rng));
    x.add(pool[pick(rng)], c);
  }
  return x;
}

}  // namespace

AdjointnessResult sweep_adjointness(int instances, unsigned seed) {
  AdjointnessResult result;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> esize(2, 5);
  std::uniform_int_distribution<int> nsize(0, 8);
  for (int i = 0; i < instances; ++i) {
    ++result.instances;
    const int e = esize(rng);
    std::uniform_int_distribution<int> rpick(0, e - 1);
    const int r = rpick(rng);
    const int n = nsize(rng);
    const FockVector x = random_vector(rng, n);
    const FockVector y = random_vector(rng, n + 1);
    const Laurent lhs = inner_product(f_action(r, x, e), y);
    const Laurent rhs = inner_product(x, e_action(r, y, e));
    if (lhs != rhs) {
      std::ostringstream msg;
      msg << "adjointness failed: e=" << e << " r=" << r << " n=" << n;
      result.violations.push_back(msg.str());
    }
    const int t = make_residue_context(e, r, x.max_length() + 1).t;
    if (f_action(r, x, e, t) != f_action(r, x, e, t + e)) {
      std::ostringstream msg;
      msg << "f display invariance failed: e=" << e << " r=" << r << " n=" << n;
      result.violations.push_back(msg.str());
    }
    const int ty = make_residue_context(e, r, y.max_length() + 1).t;
    if (e_action(r, y, e, ty) != e_action(r, y, e, ty + e)) {
      std::ostringstream msg;
      msg << "e display invariance failed: e=" << e << " r=" << r << " n=" << n;
      result.violations.push_back(msg.str());
    }
  }
  return result;
}

TriangularityResult sweep_triangularity(const std::vector<int>& es, int max_n) {
  TriangularityResult result;
  std::vector<BlockId> blocks;
  for (int e : es) {
    auto more = blocks_up_to(e, max_n);
    blocks.insert(blocks.end(), more.begin(), more.end());
  }
  result.blocks = static_cast<long long>(blocks.size());
  std::vector<std::vector<std::string>> notes(blocks.size());
  std::vector<long long> counts(blocks.size(), 0);
  parallel_for(blocks.size(), [&](std::size_t idx) {
    const BlockId& block = blocks[idx];
    const auto complain = [&](const std::string& what) {
      std::ostringstream msg;
      msg << what << " in block e=" << block.e << " core=" << block.core.to_text()
          << " w=" << block.weight;
      notes[idx].push_back(msg.str());
    };
    const auto matrix = block_matrix(block.e, block.core, block.weight);
    for (std::size_t c = 0; c < matrix->cols.size(); ++c) {
      const Partition& mu = matrix->cols[c];
      if (matrix->columns[c].coefficient(mu) != Laurent(1))
        complain("diagonal entry is not 1");
      for (const auto& [lambda, value] : matrix->columns[c].terms()) {
        ++counts[idx];
        if (lambda != mu) {
          if (!dominated_by(lambda, mu)) complain("support above the diagonal");
          if (value.min_exponent() < 1) complain("off-diagonal exponent below 1");
        }
        for (const auto& term : value.terms())
          if (term.second < 0) complain("negative coefficient");
      }
      // expanding a column must return exactly its own label
      const auto expansion = expand_in_canonical(matrix->columns[c], block.e);
      if (expansion.size() != 1 || expansion[0].first != mu ||
          expansion[0].second != Laurent(1))
        complain("column expansion is not the unit vector");
    }
    const DecompositionMatrix redone =
        canonical_basis_block(block.e, block.core, block.weight,
                              EliminationOrder::conjugate_lexicographic);
    if (redone.to_json() != matrix->to_json())
      complain("elimination depends on the refinement");
  });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    result.entries += counts[i];
    result.violations.insert(result.violations.end(), notes[i].begin(),
                             notes[i].end());
  }
  return result;
}

PairChecksResult run_pair_checks(const PairDescriptor& pair) {
  PairChecksResult result;
  result.table = verify_e2_table(pair);
  result.cases = verify_case_tables(pair);
  const int e = pair.block_b.e;
  const int r = pair_residue(pair);
  const PairExceptionals& exc = result.table.exceptionals;

  const auto column_is = [&](const BlockId& block, const ExceptionalQuadruple& quad) {
    const auto matrix = block_matrix(e, block.core, block.weight);
    FockVector expected;
    expected.add(quad.alpha, Laurent(1));
    expected.add(quad.beta, Laurent::monomial(1));
    expected.add(quad.gamma, Laurent::monomial(2));
    expected.add(quad.delta, Laurent::monomial(3));
    return matrix->column(quad.alpha) == expected;
  };
  result.alpha_column_ok = column_is(pair.block_b, exc.upstairs);
  result.alpha_tilde_column_ok = column_is(pair.block_c, exc.downstairs);

  // alpha_check has weight 0, so G = s there; one induction step reaches
  // the downstairs exceptional column exactly.
  const CoreData check_data = core_weight_sign(exc.alpha_check, e);
  result.vacuum_induction_ok = check_data.weight == 0;
  if (result.vacuum_induction_ok) {
    const FockVector induced =
        f_action(r, FockVector::standard(exc.alpha_check), e);
    const auto expansion = expand_in_canonical(induced, e);
    result.vacuum_induction_ok = expansion.size() == 1 &&
                                 expansion[0].first == exc.downstairs.alpha &&
                                 expansion[0].second == Laurent(1);
  }

  result.movable_beads_ok = true;
  const auto up = exc.upstairs.as_array();
  for (const Partition& lambda : enumerate_block(pair.block_b)) {
    bool exceptional = false;
    for (const auto* p : up) exceptional = exceptional || lambda == *p;
    if (exceptional) continue;
    if (movable_left_count(lambda, pair) != 2) result.movable_beads_ok = false;
  }
  return result;
}

}  // namespace fockcalc
