#include "octo/properties.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "octo/errors.hpp"
#include "octo/mult_table.hpp"

namespace octo {

namespace {

using Exact = CDNumber<Rational>;
using Small = CDNumber<std::int64_t>;

struct CoordLess {
  bool operator()(const Exact& a, const Exact& b) const {
    return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                        b.coords().end());
  }
};

int arity(Property p) {
  switch (p) {
    case Property::associative:
      return 3;
    default:
      return 2;
  }
}

template <Scalar S>
bool identity_holds(Property p, std::span<const CDNumber<S>> args) {
  const auto& x = args[0];
  const auto& y = args[1];
  switch (p) {
    case Property::commutative:
      return cd_mul(x, y) == cd_mul(y, x);
    case Property::associative:
      return associator(x, y, args[2]).is_zero();
    case Property::alternative: {
      const auto xy = cd_mul(x, y);
      return cd_mul(x, cd_mul(y, y)) == cd_mul(xy, y) && cd_mul(cd_mul(x, x), y) == cd_mul(x, xy);
    }
    case Property::flexible: {
      const auto xy = cd_mul(x, y);
      return cd_mul(x, cd_mul(y, x)) == cd_mul(xy, x);
    }
    case Property::norm_multiplicative:
      return cd_norm_sq(cd_mul(x, y)) == cd_norm_sq(x) * cd_norm_sq(y);
    case Property::two_generated_associative:
      break;
  }
  throw ContractViolation("identity_holds: property has no closed-form identity");
}

void require_level(int level, int max_level, const char* what) {
  if (level < 0 || level > max_level) {
    throw ContractViolation(std::string(what) + ": level " + std::to_string(level) + " outside [0, " +
                            std::to_string(max_level) + "]");
  }
}

// Maximal linearly independent subset of `vectors`, by exact elimination.
std::vector<Exact> independent_subset(const std::vector<Exact>& vectors) {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
  std::vector<Exact> chosen;
  for (const auto& v : vectors) {
    std::vector<Rational> r(v.coords().begin(), v.coords().end());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational f = r[pivots[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * rows[k][c];
    }
    const auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (it == r.end()) continue;
    const Rational lead = *it;
    for (auto& q : r) q /= lead;
    pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    rows.push_back(std::move(r));
    chosen.push_back(v);
  }
  return chosen;
}

std::optional<std::array<Exact, 3>> two_generated_witness(const Exact& x, const Exact& y, int word_length) {
  // words[k] holds the distinct values of all parenthesized words of length k.
  std::vector<std::set<Exact, CoordLess>> words(static_cast<std::size_t>(word_length) + 1);
  words[1] = {x, y, cd_conj(x), cd_conj(y)};
  for (int k = 2; k <= word_length; ++k) {
    for (int i = 1; i < k; ++i) {
      for (const auto& a : words[static_cast<std::size_t>(i)]) {
        for (const auto& b : words[static_cast<std::size_t>(k - i)]) words[static_cast<std::size_t>(k)].insert(cd_mul(a, b));
      }
    }
  }
  std::vector<Exact> all{Exact::real(x.level(), Rational(1))};
  for (const auto& w : words) all.insert(all.end(), w.begin(), w.end());
  const auto basis = independent_subset(all);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      for (const auto& c : basis) {
        if (!associator(a, b, c).is_zero()) return std::array<Exact, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::vector<Small> small_basis(int level) {
  std::vector<Small> basis;
  for (std::size_t i = 0; i < Small::dim(level); ++i) basis.push_back(basis_element<std::int64_t>(level, i));
  return basis;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::commutative:
      return "commutative";
    case Property::associative:
      return "associative";
    case Property::alternative:
      return "alternative";
    case Property::flexible:
      return "flexible";
    case Property::norm_multiplicative:
      return "norm_multiplicative";
    case Property::two_generated_associative:
      return "two_generated_associative";
  }
  return "unknown";
}

Property property_from_name(std::string_view name) {
  for (auto p : {Property::commutative, Property::associative, Property::alternative, Property::flexible,
                 Property::norm_multiplicative, Property::two_generated_associative}) {
    if (name == property_name(p)) return p;
  }
  if (name == "norm" || name == "norm-multiplicative") return Property::norm_multiplicative;
  if (name == "two-generated" || name == "two-generated-associative") return Property::two_generated_associative;
  throw LookupError("unknown property '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) { return v == Verdict::holds ? "holds" : "fails"; }

Verdict expected_verdict(Property p, int level) {
  switch (p) {
    case Property::commutative:
      return level <= 1 ? Verdict::holds : Verdict::fails;
    case Property::associative:
      return level <= 2 ? Verdict::holds : Verdict::fails;
    case Property::alternative:
    case Property::norm_multiplicative:
    case Property::two_generated_associative:
      return level <= 3 ? Verdict::holds : Verdict::fails;
    case Property::flexible:
      return Verdict::holds;
  }
  return Verdict::holds;
}

PropertyReport check_property(Property p, int level, std::size_t samples, Rng& rng, Execution exec) {
  if (p == Property::two_generated_associative) return check_two_generated_associativity(level, samples, rng, exec);
  require_level(level, kMaxCheckLevel, "check_property");

  PropertyReport report{p, level, Verdict::holds, {}, samples, 0};
  const int k = arity(p);
  const std::size_t n = Small::dim(level);
  std::size_t cases = 1;
  for (int i = 0; i < k; ++i) cases *= n;
  report.basis_cases = cases;

  const auto basis = small_basis(level);
  auto basis_tuple = [&](std::size_t idx) {
    std::vector<Small> t;
    for (int i = 0; i < k; ++i) {
      t.push_back(basis[idx % n]);
      idx /= n;
    }
    std::reverse(t.begin(), t.end());
    return t;
  };
  const auto basis_fail = first_failure(
      cases, [&](std::size_t idx) { return !identity_holds<std::int64_t>(p, basis_tuple(idx)); }, exec);
  if (basis_fail) {
    report.verdict = Verdict::fails;
    for (const auto& e : basis_tuple(*basis_fail)) report.counterexample.push_back(e.cast<Rational>());
    return report;
  }

  std::vector<std::vector<Exact>> tuples(samples);
  for (auto& t : tuples) {
    for (int i = 0; i < k; ++i) t.push_back(random_exact(level, rng));
  }
  const auto sample_fail = first_failure(
      samples, [&](std::size_t i) { return !identity_holds<Rational>(p, tuples[i]); }, exec);
  if (sample_fail) {
    report.verdict = Verdict::fails;
    report.counterexample = tuples[*sample_fail];
  }
  return report;
}

PropertyReport check_commutative(int level, std::size_t samples, Rng& rng, Execution exec) {
  return check_property(Property::commutative, level, samples, rng, exec);
}
PropertyReport check_associative(int level, std::size_t samples, Rng& rng, Execution exec) {
  return check_property(Property::associative, level, samples, rng, exec);
}
PropertyReport check_alternative(int level, std::size_t samples, Rng& rng, Execution exec) {
  return check_property(Property::alternative, level, samples, rng, exec);
}
PropertyReport check_flexible(int level, std::size_t samples, Rng& rng, Execution exec) {
  return check_property(Property::flexible, level, samples, rng, exec);
}
PropertyReport check_norm_multiplicative(int level, std::size_t samples, Rng& rng, Execution exec) {
  return check_property(Property::norm_multiplicative, level, samples, rng, exec);
}

PropertyReport check_two_generated_associativity(int level, std::size_t samples, Rng& rng, Execution exec,
                                                 int word_length) {
  require_level(level, 4, "check_two_generated_associativity");
  if (word_length < 1) throw ContractViolation("check_two_generated_associativity: word length must be >= 1");

  PropertyReport report{Property::two_generated_associative, level, Verdict::holds, {}, samples, 0};
  std::vector<std::pair<Exact, Exact>> pairs;
  pairs.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    auto x = random_exact(level, rng);
    auto y = random_exact(level, rng);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  std::vector<std::optional<std::array<Exact, 3>>> witnesses(samples);
  const auto fail = first_failure(
      samples,
      [&](std::size_t i) {
        witnesses[i] = two_generated_witness(pairs[i].first, pairs[i].second, word_length);
        return witnesses[i].has_value();
      },
      exec);
  if (fail) {
    report.verdict = Verdict::fails;
    const auto& w = *witnesses[*fail];
    report.counterexample = {pairs[*fail].first, pairs[*fail].second, w[0], w[1], w[2]};
  }
  return report;
}

Exact check_associator_identity(int level, const Exact& x, const Exact& y, const Exact& z) {
  if (x.level() != level || y.level() != level || z.level() != level) {
    throw ContractViolation("check_associator_identity: arguments must all have level " + std::to_string(level));
  }
  return associator(x, y, z);
}

bool recheck(const PropertyReport& report, int word_length) {
  if (report.verdict == Verdict::holds) return false;
  const auto& ce = report.counterexample;
  if (report.property == Property::two_generated_associative) {
    if (ce.size() != 5) return false;
    if (associator(ce[2], ce[3], ce[4]).is_zero()) return false;
    return two_generated_witness(ce[0], ce[1], word_length).has_value();
  }
  if (ce.size() != static_cast<std::size_t>(arity(report.property))) return false;
  return !identity_holds<Rational>(report.property, ce);
}

std::vector<ZeroDivisorPair> find_zero_divisors(int level, Execution exec) {
  if (level > kMaxZeroDivisorLevel) {
    throw ResourceGuard("find_zero_divisors: level " + std::to_string(level) + " exceeds the search cap " +
                        std::to_string(kMaxZeroDivisorLevel));
  }
  require_level(level, kMaxZeroDivisorLevel, "find_zero_divisors");
  const auto table = build_table(level);
  const std::size_t n = table.dim();

  struct Candidate {
    std::size_t i, j;
    int sign;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cands.push_back({i, j, +1});
      cands.push_back({i, j, -1});
    }
  }

  auto product_vanishes = [&](const Candidate& a, const Candidate& b) {
    // (e_i + s e_j)(e_k + t e_l): four signed basis products must cancel.
    std::array<std::pair<std::size_t, int>, 4> terms;
    const std::array<std::pair<std::size_t, int>, 2> lhs{{{a.i, 1}, {a.j, a.sign}}};
    const std::array<std::pair<std::size_t, int>, 2> rhs{{{b.i, 1}, {b.j, b.sign}}};
    std::size_t t = 0;
    for (const auto& [p, ps] : lhs) {
      for (const auto& [q, qs] : rhs) {
        const auto& e = table.at(p, q);
        terms[t++] = {e.index, ps * qs * e.sign};
      }
    }
    std::sort(terms.begin(), terms.end());
    for (std::size_t s = 0; s < terms.size();) {
      int sum = 0;
      std::size_t r = s;
      for (; r < terms.size() && terms[r].first == terms[s].first; ++r) sum += terms[r].second;
      if (sum != 0) return false;
      s = r;
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> hits(cands.size());
  auto scan = [&](std::size_t a) {
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (product_vanishes(cands[a], cands[b])) hits[a].push_back(b);
    }
  };
  if (exec == Execution::serial) {
    for (std::size_t a = 0; a < cands.size(); ++a) scan(a);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(cands.size()); ++a) scan(static_cast<std::size_t>(a));
  }

  auto to_exact = [&](const Candidate& c) {
    Exact v(level);
    v[c.i] = 1;
    v[c.j] = c.sign;
    return v;
  };
  std::vector<ZeroDivisorPair> out;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b : hits[a]) out.push_back({to_exact(cands[a]), to_exact(cands[b])});
  }
  for (const auto& [u, v] : out) {
    if (!cd_mul(u, v).is_zero()) throw Inconsistency("find_zero_divisors: table product disagrees with cd_mul");
  }
  return out;
}

}  // namespace octo
