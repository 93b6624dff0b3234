#include "fockcalc/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "fockcalc/blocks.hpp"

namespace fockcalc {

LadderSequence ladders(const Partition& mu, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  if (!is_e_regular(mu, e))
    throw DomainError("ladder decomposition requires an e-regular partition");
  std::map<long long, int> counts;  // ladder index -> node count
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j)
      ++counts[i + static_cast<long long>(e - 1) * (j - 1)];
  LadderSequence steps;
  for (const auto& [index, m] : counts) {
    const int residue = static_cast<int>(((1 - index) % e + e) % e);
    steps.push_back(LadderStep{residue, m});
  }
  return steps;
}

FockVector ladder_vector(const Partition& mu, int e) {
  FockVector v = FockVector::standard(Partition{});
  for (const LadderStep& step : ladders(mu, e))
    v = f_divided(step.residue, step.multiplicity, v, e);
  if (v.coefficient(mu) != Laurent(1))
    throw InternalError("ladder vector is not unitriangular at its label");
  return v;
}

Laurent DecompositionMatrix::entry(const Partition& row, const Partition& col) const {
  return column(col).coefficient(row);
}

const FockVector& DecompositionMatrix::column(const Partition& col) const {
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c] == col) return columns[c];
  throw DomainError("partition does not label a column of this block");
}

namespace {

nlohmann::json partition_json(const Partition& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const nlohmann::json& j) {
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

}  // namespace

std::string DecompositionMatrix::to_json() const {
  nlohmann::json j;
  j["format"] = "fockcalc-decomp-v1";
  j["e"] = e;
  j["core"] = partition_json(core);
  j["weight"] = weight;
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : rows) jrows.push_back(partition_json(r));
  j["rows"] = jrows;
  nlohmann::json jcols = nlohmann::json::array();
  for (const auto& c : cols) jcols.push_back(partition_json(c));
  j["cols"] = jcols;
  nlohmann::json jentries = nlohmann::json::array();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Laurent value = columns[c].coefficient(rows[r]);
      if (value.is_zero()) continue;
      jentries.push_back(nlohmann::json::array({r, c, value.to_string()}));
    }
  j["entries"] = jentries;
  return j.dump();
}

DecompositionMatrix DecompositionMatrix::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("format").get<std::string>() != "fockcalc-decomp-v1")
    throw DomainError("unknown decomposition matrix format");
  DecompositionMatrix m;
  m.e = j.at("e").get<int>();
  m.core = partition_from_json(j.at("core"));
  m.weight = j.at("weight").get<int>();
  for (const auto& r : j.at("rows")) m.rows.push_back(partition_from_json(r));
  for (const auto& c : j.at("cols")) m.cols.push_back(partition_from_json(c));
  m.columns.assign(m.cols.size(), FockVector{});
  for (const auto& t : j.at("entries")) {
    const std::size_t r = t.at(0).get<std::size_t>();
    const std::size_t c = t.at(1).get<std::size_t>();
    if (r >= m.rows.size() || c >= m.cols.size())
      throw DomainError("decomposition matrix entry out of range");
    m.columns[c].add(m.rows[r], Laurent::parse(t.at(2).get<std::string>()));
  }
  return m;
}

namespace {

bool order_less(EliminationOrder order, const Partition& a, const Partition& b) {
  return order == EliminationOrder::lexicographic ? total_less(a, b)
                                                  : conjugate_total_less(a, b);
}

}  // namespace

DecompositionMatrix canonical_basis_block(int e, const Partition& core, int weight,
                                          EliminationOrder order) {
  if (core_weight_sign(core, e).weight != 0)
    throw DomainError("block core must be an e-core");

  std::vector<Partition> block = enumerate_block(BlockId{e, core, weight});
  // enumerate_block returns the descending presentation order; sweep ascending
  std::vector<Partition> sweep = block;
  std::sort(sweep.begin(), sweep.end(), [&](const Partition& a, const Partition& b) {
    return order_less(order, a, b);
  });

  std::map<Partition, FockVector, PartitionLess> basis;
  for (const Partition& mu : sweep) {
    if (!is_e_regular(mu, e)) continue;
    FockVector g = ladder_vector(mu, e);
    for (;;) {
      // the offending term maximal in the sweep order, excluding mu itself
      const Partition* worst = nullptr;
      for (const auto& [nu, c] : g.terms()) {
        if (nu == mu) continue;
        if (c.min_exponent() > 0) continue;
        if (!worst || order_less(order, *worst, nu)) worst = &nu;
      }
      if (!worst) break;
      const Partition nu = *worst;
      if (!is_e_regular(nu, e))
        throw InternalError("elimination hit an e-singular correction target");
      auto it = basis.find(nu);
      if (it == basis.end())
        throw InternalError("elimination referenced an unfinished column");
      const Laurent beta = symmetric_defect(g.coefficient(nu));
      g -= beta * it->second;
    }
    if (g.coefficient(mu) != Laurent(1))
      throw InternalError("canonical basis element lost its leading term");
    basis.emplace(mu, std::move(g));
  }

  DecompositionMatrix m;
  m.e = e;
  m.core = core;
  m.weight = weight;
  m.rows = std::move(block);  // already descending
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    m.cols.push_back(it->first);
    m.columns.push_back(it->second);
  }
  return m;
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string cache_file_name(int e, const Partition& core, int weight) {
  std::ostringstream name;
  name << "decomp_e" << e << "_w" << weight << "_" << std::hex << fnv1a(core.to_text())
       << ".json";
  return name.str();
}

namespace {

struct BlockKey {
  int e;
  Partition core;
  int weight;
  bool operator<(const BlockKey& o) const {
    if (e != o.e) return e < o.e;
    if (weight != o.weight) return weight < o.weight;
    return total_less(core, o.core);
  }
};

std::shared_ptr<const DecompositionMatrix> compute_or_load(const BlockKey& key) {
  const char* cache_dir = std::getenv("FOCKCALC_CACHE");
  std::filesystem::path path;
  if (cache_dir && *cache_dir) {
    path = std::filesystem::path(cache_dir) /
           cache_file_name(key.e, key.core, key.weight);
    std::ifstream in(path);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        auto loaded = std::make_shared<DecompositionMatrix>(
            DecompositionMatrix::from_json(buf.str()));
        if (loaded->e == key.e && loaded->core == key.core &&
            loaded->weight == key.weight)
          return loaded;
      } catch (const std::exception&) {
        // fall through and recompute on any malformed cache file
      }
    }
  }
  auto fresh = std::make_shared<DecompositionMatrix>(
      canonical_basis_block(key.e, key.core, key.weight));
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) out << fresh->to_json();
  }
  return fresh;
}

}  // namespace

std::shared_ptr<const DecompositionMatrix> block_matrix(int e, const Partition& core,
                                                        int weight) {
  static std::mutex mutex;
  static std::map<BlockKey, std::shared_future<std::shared_ptr<const DecompositionMatrix>>>
      memo;
  const BlockKey key{e, core, weight};
  std::shared_future<std::shared_ptr<const DecompositionMatrix>> entry;
  bool owner = false;
  std::promise<std::shared_ptr<const DecompositionMatrix>> promise;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(key);
    if (it == memo.end()) {
      entry = promise.get_future().share();
      memo.emplace(key, entry);
      owner = true;
    } else {
      entry = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(compute_or_load(key));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard<std::mutex> lock(mutex);
      memo.erase(key);
    }
  }
  return entry.get();
}

Laurent decomposition_entry(const Partition& lambda, const Partition& mu, int e) {
  if (!is_e_regular(mu, e))
    throw DomainError("decomposition columns are labelled by e-regular partitions");
  const CoreData mu_data = core_weight_sign(mu, e);
  const CoreData lambda_data = core_weight_sign(lambda, e);
  if (!(lambda_data.core == mu_data.core) || lambda_data.weight != mu_data.weight)
    return Laurent{};
  return block_matrix(e, mu_data.core, mu_data.weight)->entry(lambda, mu);
}

std::vector<std::pair<Partition, Laurent>> expand_in_canonical(const FockVector& x,
                                                               int e) {
  std::vector<std::pair<Partition, Laurent>> expansion;
  FockVector rest = x;
  while (!rest.is_zero()) {
    const Partition rho = rest.leading_partition();
    if (!is_e_regular(rho, e))
      throw DomainError("vector is not in the span of the canonical basis");
    const CoreData data = core_weight_sign(rho, e);
    const auto matrix = block_matrix(e, data.core, data.weight);
    const Laurent a = rest.coefficient(rho);
    rest -= a * matrix->column(rho);
    expansion.emplace_back(rho, a);
  }
  return expansion;
}

ParityBlockReport verify_parity_block(int e, const Partition& core, int weight) {
  ParityBlockReport report;
  report.e = e;
  report.core = core;
  report.weight = weight;
  const auto matrix = block_matrix(e, core, weight);
  std::map<Partition, int, PartitionLess> signs;
  for (const Partition& row : matrix->rows)
    signs[row] = core_weight_sign(row, e).sign;
  for (std::size_t c = 0; c < matrix->cols.size(); ++c) {
    const int col_sign = signs.at(matrix->cols[c]);
    for (const auto& [row, value] : matrix->columns[c].terms()) {
      ++report.entries_checked;
      const int row_sign = signs.at(row);
      const ExponentParity parity = value.exponent_parity();
      const bool ok = (row_sign == col_sign) ? parity == ExponentParity::even
                                             : parity == ExponentParity::odd;
      if (!ok)
        report.violations.push_back(
            ParityViolation{row, matrix->cols[c], value, row_sign, col_sign});
    }
  }
  return report;
}

}  // namespace fockcalc
