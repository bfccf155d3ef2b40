#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcb/partitions.hpp"
#include "hcb/rational.hpp"
#include "hcb/symgroup.hpp"

namespace hcb {

/// The parameter c of the rational Cherednik algebra of S_n. Only rational
/// values are representable; an irrational c is modeled by a flag, since every
/// statement here depends only on rationality, denominator and sign.
class CherednikParameter {
 public:
  explicit CherednikParameter(Rational c);
  static CherednikParameter parse(const std::string& text);
  /// An irrational (hence generic) parameter of the given sign.
  static CherednikParameter irrational(bool negative = false);

  const Rational& value() const { return value_; }
  bool is_irrational() const { return irrational_; }
  bool negative() const { return irrational_ ? irrational_negative_ : sgn(value_) < 0; }
  std::string to_string() const;

 private:
  CherednikParameter() = default;
  Rational value_;
  bool irrational_ = false;
  bool irrational_negative_ = false;
};

enum class ParameterKind { Integral, Rational, Generic };

struct ParameterClass {
  ParameterKind kind = ParameterKind::Generic;
  long r = 0;  // numerator, Rational kind only
  long m = 0;  // denominator, 2 <= m <= n, Rational kind only
  bool negative = false;

  bool operator==(const ParameterClass&) const = default;
};

std::string to_string(ParameterKind kind);

ParameterClass classify_parameter(const CherednikParameter& c, int n);

struct SimpleLabels {
  ParameterClass parameter;
  std::vector<Partition> labels;
  /// For c < 0 the labels follow the sign-twisted convention (Delta(sign) in
  /// place of Delta(triv)); the set itself is unchanged.
  bool sign_twisted = false;
};

SimpleLabels simple_labels(int n, const CherednikParameter& c);
std::size_t count_simples(int n, const CherednikParameter& c);

/// Closure of the symplectic leaf whose points have stabilizer S_m^{x index}.
struct LeafDescriptor {
  int index = 0;
  YoungSubgroup parabolic;  // index blocks of size m, then n - m*index singletons

  bool operator==(const LeafDescriptor&) const = default;
};

LeafDescriptor leaf(int n, int m, int index);

struct IdealChainEntry {
  int index = 0;                       // J_index
  LeafDescriptor simple_support;       // support of S_index = J_index / J_{index-1}
  std::optional<LeafDescriptor> quotient_support;  // support of H / J_index; none for J_k = H
};

/// 0 = J_{-1} < J_0 < ... < J_k = H, k = floor(n/m).
struct IdealChain {
  int n = 0;
  int m = 0;
  std::vector<IdealChainEntry> entries;  // empty when the algebra is simple
};

/// Throws ParameterError for m < 2; m > n gives the empty chain.
IdealChain ideal_chain(int n, int m);
/// Chain at a parameter: nontrivial only for the Rational class.
IdealChain ideal_chain(int n, const CherednikParameter& c);

enum class TwoParamCase { Zero, DerivedEquivalence, RepOfSymmetricGroup };

struct TwoParamClass {
  TwoParamCase kind = TwoParamCase::Zero;
  int group_rank = 0;          // n/m for RepOfSymmetricGroup
  long long simple_count = 0;  // p(n/m) for RepOfSymmetricGroup

  bool operator==(const TwoParamClass&) const = default;
};

std::string to_string(TwoParamCase kind);

/// Whether HC(c, c') is nonzero, and what it looks like when it is.
TwoParamClass two_param_class(const CherednikParameter& c, const CherednikParameter& c_prime, int n);

}  // namespace hcb
