#include "fockcalc/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fockcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  if (text == "-" || text.empty()) return Partition{};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed partition: '" + text + "'");
    }
    if (used != item.size()) throw DomainError("malformed partition: '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
  if (i < 1) throw DomainError("partition rows are 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

std::string Partition::to_text() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool total_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                      b.parts().begin(), b.parts().end());
}

bool conjugate_total_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Partition ca = conjugate(a), cb = conjugate(b);
  return std::lexicographical_compare(cb.parts().begin(), cb.parts().end(),
                                      ca.parts().begin(), ca.parts().end());
}

Dominance dominance_leq(const Partition& lhs, const Partition& rhs) {
  if (lhs.size() != rhs.size())
    throw DomainError("dominance is defined for partitions of equal size");
  const int n = std::max(lhs.length(), rhs.length());
  bool leq = true, geq = true;
  long long sl = 0, sr = 0;
  for (int i = 1; i <= n; ++i) {
    sl += lhs.part(i);
    sr += rhs.part(i);
    if (sl > sr) leq = false;
    if (sr > sl) geq = false;
  }
  if (leq) return Dominance::less_or_equal;
  if (geq) return Dominance::greater;
  return Dominance::incomparable;
}

bool dominated_by(const Partition& lhs, const Partition& rhs) {
  return dominance_leq(lhs, rhs) == Dominance::less_or_equal;
}

BetaSequence beta_numbers(const Partition& lambda, int s) {
  if (s < lambda.length())
    throw DomainError("bead count below the partition length");
  BetaSequence beta;
  beta.betas.reserve(s);
  for (int i = 1; i <= s; ++i)
    beta.betas.push_back(lambda.part(i) + static_cast<long long>(s) - i);
  return beta;
}

Partition partition_from_beta(const BetaSequence& beta) {
  const auto& b = beta.betas;
  const int s = static_cast<int>(b.size());
  std::vector<int> parts;
  parts.reserve(s);
  for (int i = 1; i <= s; ++i) {
    if (b[i - 1] < 0) throw DomainError("beta-numbers must be non-negative");
    if (i < s && b[i - 1] <= b[i])
      throw DomainError("beta-numbers must be strictly decreasing");
    const long long part = b[i - 1] - (s - i);
    if (part < 0) throw DomainError("beta-numbers must be strictly decreasing");
    parts.push_back(static_cast<int>(part));
  }
  return Partition(std::move(parts));
}

AbacusDisplay::AbacusDisplay(const Partition& lambda, int e, int bead_count)
    : e_(e), beads_(bead_count) {
  if (e < 2) throw DomainError("abacus modulus must be at least 2");
  const BetaSequence beta = beta_numbers(lambda, bead_count);
  const long long top = beta.betas.empty() ? 0 : beta.betas.front();
  occ_.assign(static_cast<std::size_t>(top + 1), 0);
  for (long long b : beta.betas) occ_[static_cast<std::size_t>(b)] = 1;
}

AbacusDisplay::AbacusDisplay(int e, std::vector<char> occ)
    : e_(e), occ_(std::move(occ)) {
  if (e < 2) throw DomainError("abacus modulus must be at least 2");
  beads_ = static_cast<int>(std::count(occ_.begin(), occ_.end(), 1));
}

std::vector<long long> AbacusDisplay::runner_beads(int runner) const {
  std::vector<long long> out;
  for (long long p = runner; p < static_cast<long long>(occ_.size()); p += e_)
    if (occ_[static_cast<std::size_t>(p)]) out.push_back(p);
  return out;
}

int AbacusDisplay::runner_count(int runner) const {
  int n = 0;
  for (long long p = runner; p < static_cast<long long>(occ_.size()); p += e_)
    n += occ_[static_cast<std::size_t>(p)];
  return n;
}

void AbacusDisplay::move_bead(long long from, long long to) {
  if (!occupied(from)) throw InternalError("abacus move from a vacant position");
  if (to < 0) throw InternalError("abacus move to a negative position");
  if (to >= static_cast<long long>(occ_.size()))
    occ_.resize(static_cast<std::size_t>(to + 1), 0);
  if (occ_[static_cast<std::size_t>(to)])
    throw InternalError("abacus move to an occupied position");
  occ_[static_cast<std::size_t>(from)] = 0;
  occ_[static_cast<std::size_t>(to)] = 1;
}

Partition AbacusDisplay::decode() const {
  BetaSequence beta;
  for (long long p = static_cast<long long>(occ_.size()) - 1; p >= 0; --p)
    if (occ_[static_cast<std::size_t>(p)]) beta.betas.push_back(p);
  return partition_from_beta(beta);
}

CoreData core_weight_sign_with_beads(const Partition& lambda, int e, int bead_count) {
  if (e < 2) throw DomainError("e must be at least 2");
  AbacusDisplay abacus(lambda, e, bead_count);
  int weight = 0;
  long long crossings = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (long long p = e; p < static_cast<long long>(bead_count) + lambda.part(1); ++p) {
      if (!abacus.occupied(p) || abacus.occupied(p - e)) continue;
      for (long long q = p - e + 1; q < p; ++q)
        if (abacus.occupied(q)) ++crossings;
      abacus.move_bead(p, p - e);
      ++weight;
      moved = true;
    }
  }
  CoreData out;
  out.core = abacus.decode();
  out.weight = weight;
  out.sign = (crossings % 2 == 0) ? 1 : -1;
  return out;
}

CoreData core_weight_sign(const Partition& lambda, int e) {
  return core_weight_sign_with_beads(lambda, e, lambda.length());
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda.part(1); ++j) {
    int count = 0;
    for (int i = 1; i <= lambda.length(); ++i)
      if (lambda.part(i) >= j) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool is_e_regular(const Partition& lambda, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  int run = 1;
  for (int i = 2; i <= lambda.length(); ++i) {
    run = (lambda.part(i) == lambda.part(i - 1)) ? run + 1 : 1;
    if (run >= e) return false;
  }
  return true;
}

bool is_e_restricted(const Partition& lambda, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - lambda.part(i + 1) >= e) return false;
  return true;
}

std::vector<HookRemoval> removable_e_hooks(const Partition& lambda, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  const AbacusDisplay abacus(lambda, e, lambda.length());
  std::vector<HookRemoval> out;
  for (long long p = e; p < static_cast<long long>(lambda.length()) + lambda.part(1); ++p) {
    if (!abacus.occupied(p) || abacus.occupied(p - e)) continue;
    int leg = 0;
    for (long long q = p - e + 1; q < p; ++q)
      if (abacus.occupied(q)) ++leg;
    AbacusDisplay moved = abacus;
    moved.move_bead(p, p - e);
    out.push_back(HookRemoval{moved.decode(), leg});
  }
  return out;
}

std::pair<long long, Partition> strip_e_rim(const Partition& lambda, int e) {
  const int rows = lambda.length();
  std::vector<int> remainder(rows);
  long long removed = 0;
  int budget = e;  // unfilled slots of the current rim segment
  for (int j = 1; j <= rows; ++j) {
    const int rim = (j < rows) ? lambda.part(j) - lambda.part(j + 1) + 1
                               : lambda.part(rows);
    int take;
    if (budget > rim) {  // segment continues into the next row
      take = rim;
      budget -= rim;
    } else {  // segment ends here; the next one starts a row below
      take = budget;
      budget = e;
    }
    remainder[j - 1] = lambda.part(j) - take;
    removed += take;
  }
  return {removed, Partition(std::move(remainder))};
}

namespace {

// Inverse of strip_e_rim: the partition with `rows` rows whose e-rim has
// `rim_size` nodes and whose removal leaves `after`. The rim decomposes into
// ceil(rim_size/e) segments of consecutive rows; rows inside a segment are
// forced, so only the segment start rows are searched, and every candidate is
// confirmed by running the strip forward.
bool unstrip_search(const Partition& after, long long rim_size, int rows, int e,
                    int piece, int start_row, std::vector<int>& starts,
                    Partition& found) {
  const int pieces = static_cast<int>((rim_size + e - 1) / e);
  if (piece == pieces) {
    std::vector<int> mu(rows);
    for (int c = 0; c < pieces; ++c) {
      const int p = starts[c];
      const int q = (c + 1 < pieces) ? starts[c + 1] - 1 : rows;
      const long long piece_size =
          (c + 1 < pieces) ? e : rim_size - static_cast<long long>(e) * (pieces - 1);
      long long inner = 0;
      for (int j = p + 1; j <= q; ++j) {
        mu[j - 1] = after.part(j - 1) + 1;
        inner += mu[j - 1] - after.part(j);
      }
      const long long delta = piece_size - inner;
      if (delta < 1) return false;
      mu[p - 1] = after.part(p) + static_cast<int>(delta);
    }
    for (int j = 1; j < rows; ++j)
      if (mu[j - 1] < mu[j]) return false;
    if (mu[rows - 1] < 1) return false;
    Partition candidate(mu);
    auto [removed, rest] = strip_e_rim(candidate, e);
    if (removed != rim_size || rest != after) return false;
    found = candidate;
    return true;
  }
  for (int p = start_row; p <= rows; ++p) {
    starts[piece] = p;
    if (unstrip_search(after, rim_size, rows, e, piece + 1, p + 1, starts, found))
      return true;
  }
  return false;
}

Partition unstrip_e_rim(const Partition& after, long long rim_size, int rows, int e) {
  if (rim_size <= 0 || rows <= 0)
    throw InternalError("invalid Mullineux symbol column");
  const int pieces = static_cast<int>((rim_size + e - 1) / e);
  std::vector<int> starts(pieces, 0);
  starts[0] = 1;
  Partition found;
  if (!unstrip_search(after, rim_size, rows, e, 1, 2, starts, found))
    throw InternalError("Mullineux symbol reconstruction failed");
  return found;
}

}  // namespace

Partition mullineux(const Partition& lambda, int e) {
  if (!is_e_regular(lambda, e))
    throw DomainError("Mullineux map requires an e-regular partition");
  std::vector<std::pair<long long, int>> symbol;  // (nodes removed, rows)
  Partition mu = lambda;
  while (!mu.empty()) {
    const int rows = mu.length();
    auto [removed, rest] = strip_e_rim(mu, e);
    symbol.emplace_back(removed, rows);
    mu = rest;
  }
  Partition image;
  for (auto it = symbol.rbegin(); it != symbol.rend(); ++it) {
    const auto [a, r] = *it;
    const int eps = (a % e == 0) ? 0 : 1;
    const long long s = a - r + eps;
    if (s < 1 || s > a) throw InternalError("Mullineux symbol out of range");
    image = unstrip_e_rim(image, a, static_cast<int>(s), e);
  }
  return image;
}

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Partition> all;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      all.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      self(self, remaining - k, k);
      current.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
  return cache.emplace(n, std::move(all)).first->second;
}

}  // namespace fockcalc
