#include "hcb/hc_model.hpp"

#include "hcb/errors.hpp"

namespace hcb {

CherednikParameter::CherednikParameter(Rational c) : value_(std::move(c)) { value_.canonicalize(); }

CherednikParameter CherednikParameter::parse(const std::string& text) { return CherednikParameter(parse_rational(text)); }

CherednikParameter CherednikParameter::irrational(bool negative) {
  CherednikParameter p;
  p.irrational_ = true;
  p.irrational_negative_ = negative;
  return p;
}

std::string CherednikParameter::to_string() const {
  if (irrational_) return irrational_negative_ ? "-irrational" : "irrational";
  return hcb::to_string(value_);
}

std::string to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::Integral:
      return "Integral";
    case ParameterKind::Rational:
      return "Rational";
    case ParameterKind::Generic:
      return "Generic";
  }
  return "?";
}

ParameterClass classify_parameter(const CherednikParameter& c, int n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  ParameterClass out;
  out.negative = c.negative();
  if (c.is_irrational()) return out;
  const Integer& den = c.value().get_den();
  if (den == 1) {
    out.kind = ParameterKind::Integral;
  } else if (den <= n) {
    out.kind = ParameterKind::Rational;
    out.r = c.value().get_num().get_si();
    out.m = den.get_si();
  }
  return out;
}

SimpleLabels simple_labels(int n, const CherednikParameter& c) {
  SimpleLabels out;
  out.parameter = classify_parameter(c, n);
  out.sign_twisted = out.parameter.negative;
  switch (out.parameter.kind) {
    case ParameterKind::Generic:
      out.labels = {Partition({n})};
      break;
    case ParameterKind::Integral:
      out.labels = enumerate_partitions(n);
      break;
    case ParameterKind::Rational:
      out.labels = phi_image_labels(n, static_cast<int>(out.parameter.m));
      break;
  }
  return out;
}

std::size_t count_simples(int n, const CherednikParameter& c) { return simple_labels(n, c).labels.size(); }

LeafDescriptor leaf(int n, int m, int index) {
  if (index < 0 || m * index > n) throw ParameterError("leaf index out of range");
  std::vector<int> blocks(static_cast<std::size_t>(index), m);
  blocks.insert(blocks.end(), static_cast<std::size_t>(n - m * index), 1);
  return {index, YoungSubgroup(std::move(blocks))};
}

IdealChain ideal_chain(int n, int m) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (m < 2) throw ParameterError("ideal_chain needs m >= 2, got " + std::to_string(m));
  IdealChain chain{n, m, {}};
  if (m > n) return chain;
  const int k = n / m;
  for (int i = 0; i <= k; ++i) {
    IdealChainEntry e{i, leaf(n, m, i), std::nullopt};
    if (i < k) e.quotient_support = leaf(n, m, i + 1);
    chain.entries.push_back(std::move(e));
  }
  return chain;
}

IdealChain ideal_chain(int n, const CherednikParameter& c) {
  const auto cls = classify_parameter(c, n);
  if (cls.kind != ParameterKind::Rational) return {n, 0, {}};
  return ideal_chain(n, static_cast<int>(cls.m));
}

std::string to_string(TwoParamCase kind) {
  switch (kind) {
    case TwoParamCase::Zero:
      return "Zero";
    case TwoParamCase::DerivedEquivalence:
      return "DerivedEquivalence";
    case TwoParamCase::RepOfSymmetricGroup:
      return "RepOfSymmetricGroup";
  }
  return "?";
}

TwoParamClass two_param_class(const CherednikParameter& c, const CherednikParameter& c_prime, int n) {
  if (n < 1) throw ParameterError("n must be at least 1");
  if (c.is_irrational() || c_prime.is_irrational())
    throw ParameterError("two_param_class needs rational parameters");
  const Rational diff = c.value() - c_prime.value();
  const Rational sum = c.value() + c_prime.value();
  if (is_integer(diff) || is_integer(sum)) return {TwoParamCase::DerivedEquivalence, 0, 0};
  // Reduced fractions: equal denominators m already force gcd(r, m) = gcd(r', m) = 1.
  const Integer& m = c.value().get_den();
  if (m == c_prime.value().get_den() && m > 1 && n % m.get_si() == 0) {
    const int rank = n / static_cast<int>(m.get_si());
    return {TwoParamCase::RepOfSymmetricGroup, rank, partition_count(rank)};
  }
  return {TwoParamCase::Zero, 0, 0};
}

}  // namespace hcb
