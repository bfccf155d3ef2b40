#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hcb {

/// Integer partition stored without trailing zeros. Componentwise arithmetic
/// elsewhere treats missing parts as zero.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Accepts parts that may end in zeros (dropped); still rejects increases and negatives.
  static Partition from_padded(std::vector<int> parts);
  /// "7,5,1,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// Part i, zero past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition transpose() const;
  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct RestrictedDecomposition {
  Partition mu;  // m-restricted part
  Partition nu;
  int m = 0;
};

/// Unique lambda = mu + m * nu with mu m-restricted (digit-wise division of the
/// consecutive differences). Throws ParameterError for m < 2.
RestrictedDecomposition decompose(const Partition& lambda, int m);

/// Every consecutive difference, the last part minus zero included, is below m.
bool is_m_restricted(const Partition& lambda, int m);

/// (m-1, ..., m-1, b) with 0 <= b < m-1.
bool is_m_trivial(const Partition& lambda, int m);

/// The m-trivial partition of size k.
Partition triv_partition(int k, int m);

/// Partitions of n, largest first in lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Labels of the simple Harish-Chandra bimodules at c = r/m: those lambda of n whose
/// m-restricted part is m-trivial. Throws ParameterError unless 2 <= m <= n.
std::vector<Partition> phi_image_labels(int n, int m);

/// Number of partitions of n by the same enumeration order.
long long partition_count(int n);

}  // namespace hcb
