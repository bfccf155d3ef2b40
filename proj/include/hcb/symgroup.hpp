#pragma once

#include <map>
#include <vector>

#include "hcb/partitions.hpp"
#include "hcb/rational.hpp"

namespace hcb {

/// S_{n_1} x ... x S_{n_k} inside S_n, n = sum of blocks.
class YoungSubgroup {
 public:
  YoungSubgroup() = default;
  explicit YoungSubgroup(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  int rank() const { return n_; }
  std::string to_string() const;

  bool operator==(const YoungSubgroup&) const = default;

 private:
  std::vector<int> blocks_;
  int n_ = 0;
};

/// Grothendieck-group class over a Young subgroup: one multiplicity per tuple
/// of irreducible labels (one partition per block), keys in canonical order.
using K0Vector = std::map<std::vector<Partition>, long long>;

/// Number of standard Young tableaux of shape lambda (hook length formula).
Integer dim_irrep(const Partition& lambda);

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}, counted as LR tableaux
/// of shape lambda/mu and content nu.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// dim Hom_{W'}(tau_1 x ... x tau_k, lambda restricted to W').
long long branching_multiplicity(const Partition& lambda, const YoungSubgroup& subgroup,
                                 const std::vector<Partition>& taus);

/// [Res Delta(lambda)] as multiplicities of standard classes of the subgroup.
K0Vector restrict_standard_k0(const Partition& lambda, const YoungSubgroup& subgroup);

/// All compositions of n (ordered tuples of positive integers summing to n).
std::vector<YoungSubgroup> compositions(int n);

}  // namespace hcb
