#include "hcb/partitions.hpp"

#include <charconv>
#include <numeric>

#include "hcb/errors.hpp"

namespace hcb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_padded(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void require_m(int m, int lowest) {
  if (m < lowest) throw ParameterError("m must be at least " + std::to_string(lowest) + ", got " + std::to_string(m));
}

// Rebuild a partition from its consecutive differences d_i = p_i - p_{i+1}.
Partition from_differences(const std::vector<int>& diffs) {
  std::vector<int> parts(diffs.size());
  int running = 0;
  for (std::size_t i = diffs.size(); i-- > 0;) {
    running += diffs[i];
    parts[i] = running;
  }
  return Partition::from_padded(std::move(parts));
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

RestrictedDecomposition decompose(const Partition& lambda, int m) {
  require_m(m, 2);
  std::vector<int> e(lambda.length()), f(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const int d = lambda.part(i) - lambda.part(i + 1);
    e[i] = d % m;
    f[i] = d / m;
  }
  return {from_differences(e), from_differences(f), m};
}

bool is_m_restricted(const Partition& lambda, int m) {
  require_m(m, 1);
  for (std::size_t i = 0; i < lambda.length(); ++i)
    if (lambda.part(i) - lambda.part(i + 1) >= m) return false;
  return true;
}

bool is_m_trivial(const Partition& lambda, int m) {
  require_m(m, 2);
  const auto& p = lambda.parts();
  std::size_t i = 0;
  while (i < p.size() && p[i] == m - 1) ++i;
  if (i == p.size()) return true;
  return i + 1 == p.size() && p[i] < m - 1;
}

Partition triv_partition(int k, int m) {
  require_m(m, 2);
  if (k < 0) throw ParameterError("triv_partition: k must be non-negative");
  std::vector<int> parts(static_cast<std::size_t>(k / (m - 1)), m - 1);
  if (k % (m - 1) != 0) parts.push_back(k % (m - 1));
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ParameterError("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Partition> phi_image_labels(int n, int m) {
  if (m < 2 || m > n)
    throw ParameterError("phi_image_labels needs 2 <= m <= n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(n))
    if (is_m_trivial(decompose(lambda, m).mu, m)) out.push_back(std::move(lambda));
  return out;
}

long long partition_count(int n) {
  if (n < 0) return 0;
  // p(n) by the standard "largest part at most k" table.
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int s = k; s <= n; ++s) p[s] += p[s - k];
  return p[n];
}

}  // namespace hcb
