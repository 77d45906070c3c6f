#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "octo/cd_number.hpp"
#include "octo/parallel.hpp"
#include "octo/sampling.hpp"

namespace octo {

enum class Property {
  commutative,
  associative,
  alternative,
  flexible,
  norm_multiplicative,
  two_generated_associative,
};

std::string_view property_name(Property p);
/// Inverse of property_name; also accepts the short CLI spellings
/// ("norm", "two-generated"). Throws LookupError.
Property property_from_name(std::string_view name);

enum class Verdict { holds, fails };

std::string_view verdict_name(Verdict v);

/// The expected verdict of each property along the Cayley-Dickson tower:
/// commutative up to level 1, associative up to 2, alternative and normed
/// up to 3, flexible at every level.
Verdict expected_verdict(Property p, int level);

struct PropertyReport {
  Property property;
  int level = 0;
  Verdict verdict = Verdict::holds;
  /// Arguments violating the identity; empty when the verdict is `holds`.
  /// For two_generated_associative this is (x, y, a, b, c): generators
  /// followed by three generated words with nonzero associator.
  std::vector<CDNumber<Rational>> counterexample;
  std::size_t samples_tested = 0;
  std::size_t basis_cases = 0;
};

inline constexpr int kMaxCheckLevel = 6;
inline constexpr int kDefaultWordLength = 4;

/// Exhaustive basis tuples, then `samples` random exact tuples drawn from
/// `rng`. Random tuples are generated serially, so the report depends only
/// on the rng state, not on `exec`.
PropertyReport check_property(Property p, int level, std::size_t samples, Rng& rng,
                              Execution exec = Execution::parallel);

PropertyReport check_commutative(int level, std::size_t samples, Rng& rng, Execution exec = Execution::parallel);
PropertyReport check_associative(int level, std::size_t samples, Rng& rng, Execution exec = Execution::parallel);
/// x(yy) = (xy)y and (xx)y = x(xy)
PropertyReport check_alternative(int level, std::size_t samples, Rng& rng, Execution exec = Execution::parallel);
/// x(yx) = (xy)x
PropertyReport check_flexible(int level, std::size_t samples, Rng& rng, Execution exec = Execution::parallel);
/// |xy|^2 = |x|^2 |y|^2
PropertyReport check_norm_multiplicative(int level, std::size_t samples, Rng& rng,
                                         Execution exec = Execution::parallel);

/// For each random pair (x, y), builds every parenthesized word of length
/// up to `word_length` in {x, y, x*, y*} and checks that all associators
/// among the produced elements vanish. Associators are trilinear, so it is
/// enough to test triples drawn from a maximal linearly independent subset.
PropertyReport check_two_generated_associativity(int level, std::size_t samples, Rng& rng,
                                                 Execution exec = Execution::parallel,
                                                 int word_length = kDefaultWordLength);

/// (xy)z - x(yz); throws ContractViolation unless all levels equal `level`.
CDNumber<Rational> check_associator_identity(int level, const CDNumber<Rational>& x, const CDNumber<Rational>& y,
                                             const CDNumber<Rational>& z);

/// True iff the report's counterexample really violates the identity.
/// Reports with verdict `holds` return false.
bool recheck(const PropertyReport& report, int word_length = kDefaultWordLength);

struct ZeroDivisorPair {
  CDNumber<Rational> left;
  CDNumber<Rational> right;
};

inline constexpr int kMaxZeroDivisorLevel = 5;

/// All pairs (e_i +- e_j, e_k +- e_l), i < j, k < l, with exactly zero
/// product. Every returned pair is re-verified with the doubling product.
std::vector<ZeroDivisorPair> find_zero_divisors(int level, Execution exec = Execution::parallel);

}  // namespace octo
