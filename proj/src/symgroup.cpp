#include "hcb/symgroup.hpp"

#include <numeric>

#include "hcb/errors.hpp"

namespace hcb {

YoungSubgroup::YoungSubgroup(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  for (int b : blocks_)
    if (b < 1) throw InputError("Young subgroup blocks must be positive");
  n_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

std::string YoungSubgroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out += (i ? "," : "") + std::to_string(blocks_[i]);
  return out;
}

Integer dim_irrep(const Partition& lambda) {
  Integer num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  const Partition conj = lambda.transpose();
  Integer hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) {
      const int arm = lambda.part(i) - j - 1;
      const int leg = conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  return num / hooks;
}

namespace {

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// Fills lambda/mu in reverse reading order (rows top to bottom, each row right
// to left); the reading word is a lattice word iff every prefix has
// count[v] <= count[v-1].
struct LrCounter {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> filling;  // per row, indexed by column; 0 = not in skew shape
  std::vector<int> used;
  long long total = 0;

  void cell(std::size_t row, int col) {
    if (row == lambda.length()) {
      ++total;
      return;
    }
    if (col < mu.part(row)) {
      cell(row + 1, row + 1 < lambda.length() ? lambda.part(row + 1) - 1 : 0);
      return;
    }
    int hi = static_cast<int>(nu.length());
    if (col + 1 < lambda.part(row)) hi = std::min(hi, filling[row][col + 1]);
    int lo = 1;
    if (row > 0 && col < lambda.part(row - 1) && col >= mu.part(row - 1)) lo = filling[row - 1][col] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v - 1);
      if (used[vi] >= nu.part(vi)) continue;
      if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;
      ++used[vi];
      filling[row][col] = v;
      if (col == 0 || col - 1 < mu.part(row))
        cell(row + 1, row + 1 < lambda.length() ? lambda.part(row + 1) - 1 : 0);
      else
        cell(row, col - 1);
      filling[row][col] = 0;
      --used[vi];
    }
  }
};

void partitions_inside(const Partition& outer, int size, std::size_t row, int max_part, std::vector<int>& current,
                       std::vector<Partition>& out) {
  if (size == 0) {
    out.emplace_back(current);
    return;
  }
  if (row >= outer.length()) return;
  for (int p = std::min({size, max_part, outer.part(row)}); p >= 1; --p) {
    current.push_back(p);
    partitions_inside(outer, size - p, row + 1, p, current, out);
    current.pop_back();
  }
}

std::vector<Partition> subpartitions(const Partition& outer, int size) {
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_inside(outer, size, 0, size, current, out);
  return out;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !contains(lambda, mu)) return 0;
  if (nu.empty()) return 1;
  LrCounter counter{lambda, mu, nu, {}, std::vector<int>(nu.length(), 0)};
  counter.filling.resize(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) counter.filling[r].assign(static_cast<std::size_t>(lambda.part(r)), 0);
  counter.cell(0, lambda.length() ? lambda.part(0) - 1 : 0);
  return counter.total;
}

long long branching_multiplicity(const Partition& lambda, const YoungSubgroup& subgroup,
                                 const std::vector<Partition>& taus) {
  const auto& blocks = subgroup.blocks();
  if (lambda.size() != subgroup.rank())
    throw ShapeMismatch("|lambda| = " + std::to_string(lambda.size()) + " but the subgroup has rank " +
                        std::to_string(subgroup.rank()));
  if (taus.size() != blocks.size()) throw ShapeMismatch("need one partition per block");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (taus[i].size() != blocks[i]) throw ShapeMismatch("tau " + std::to_string(i) + " has the wrong size");

  if (blocks.empty()) return lambda.empty() ? 1 : 0;
  if (blocks.size() == 1) return lambda == taus[0] ? 1 : 0;

  // Peel the last block: c^lambda_{tau_1..tau_k} = sum_rho c^lambda_{rho,tau_k} c^rho_{tau_1..tau_{k-1}}.
  const YoungSubgroup head({blocks.begin(), blocks.end() - 1});
  const std::vector<Partition> head_taus(taus.begin(), taus.end() - 1);
  long long total = 0;
  for (const auto& rho : subpartitions(lambda, head.rank())) {
    const long long c = lr_coefficient(lambda, rho, taus.back());
    if (c != 0) total += c * branching_multiplicity(rho, head, head_taus);
  }
  return total;
}

K0Vector restrict_standard_k0(const Partition& lambda, const YoungSubgroup& subgroup) {
  const auto& blocks = subgroup.blocks();
  if (lambda.size() != subgroup.rank())
    throw ShapeMismatch("|lambda| = " + std::to_string(lambda.size()) + " but the subgroup has rank " +
                        std::to_string(subgroup.rank()));
  K0Vector out;
  if (blocks.empty()) {
    out[{}] = 1;
    return out;
  }
  if (blocks.size() == 1) {
    out[{lambda}] = 1;
    return out;
  }
  const YoungSubgroup head({blocks.begin(), blocks.end() - 1});
  const auto last_labels = enumerate_partitions(blocks.back());
  for (const auto& rho : subpartitions(lambda, head.rank())) {
    K0Vector inner;
    bool computed = false;
    for (const auto& tau : last_labels) {
      const long long c = lr_coefficient(lambda, rho, tau);
      if (c == 0) continue;
      if (!computed) {
        inner = restrict_standard_k0(rho, head);
        computed = true;
      }
      for (const auto& [key, mult] : inner) {
        auto full = key;
        full.push_back(tau);
        out[full] += c * mult;
      }
    }
  }
  return out;
}

std::vector<YoungSubgroup> compositions(int n) {
  std::vector<YoungSubgroup> out;
  if (n <= 0) {
    out.emplace_back();
    return out;
  }
  // Bit i of mask set means "cut after position i+1".
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> blocks;
    int len = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        blocks.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    blocks.push_back(len);
    out.emplace_back(std::move(blocks));
  }
  return out;
}

}  // namespace hcb
