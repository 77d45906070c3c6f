#include "octo/cw_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "octo/errors.hpp"

namespace octo {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw ResourceGuard("torsion coefficient does not fit in 64 bits");
  return v.get_si();
}

struct Reduced {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
};

Reduced reduce(const IntMatrix& m) {
  Reduced r;
  if (m.rows() == 0 || m.cols() == 0) return r;
  for (const auto& d : smith_normal_form(m).invariant_factors()) {
    ++r.rank;
    if (d != 1) r.torsion.push_back(to_int64(d));
  }
  return r;
}

}  // namespace

CoefficientSpec CoefficientSpec::modular(std::int64_t m) {
  if (m < 2) throw ContractViolation("CoefficientSpec: modulus must be >= 2");
  return CoefficientSpec(Kind::modular, m);
}

CoefficientSpec CoefficientSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Zmod:";
  if (text.starts_with(prefix)) {
    const std::string digits(text.substr(prefix.size()));
    std::size_t used = 0;
    long long m = 0;
    try {
      m = std::stoll(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (!digits.empty() && used == digits.size()) return modular(m);
  }
  throw ContractViolation("CoefficientSpec: expected Z, Zmod:m or Q, got '" + std::string(text) + "'");
}

std::string CoefficientSpec::to_string() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::modular:
      return "Zmod:" + std::to_string(modulus_);
  }
  return "?";
}

AbelianGroup AbelianGroup::from_cyclic(std::size_t rank, const std::vector<std::int64_t>& orders,
                                       CoefficientSpec ring) {
  AbelianGroup g;
  g.ring = ring;
  g.rank = rank;
  std::vector<std::int64_t> finite;
  for (auto o : orders) {
    if (o == 0) {
      ++g.rank;
    } else if (std::abs(o) != 1) {
      finite.push_back(std::abs(o));
    }
  }
  if (finite.empty()) return g;
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = static_cast<long>(finite[i]);
  for (const auto& d : smith_normal_form(diag).invariant_factors()) {
    if (d != 1) g.torsion.push_back(to_int64(d));
  }
  return g;
}

AbelianGroup AbelianGroup::of(const CoefficientSpec& a) {
  switch (a.kind()) {
    case CoefficientSpec::Kind::integers:
      return {1, {}, a};
    case CoefficientSpec::Kind::rationals:
      return {1, {}, a};
    case CoefficientSpec::Kind::modular:
      return {0, {a.modulus()}, a};
  }
  return {};
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  const char* base = ring.kind() == CoefficientSpec::Kind::rationals ? "Q" : "Z";
  bool first = true;
  if (rank > 0) {
    os << base;
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (auto t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

CWDescription::CWDescription(std::string name, std::vector<Cell> cells, std::map<int, IntMatrix> boundaries)
    : name_(std::move(name)), cells_(std::move(cells)) {
  for (const auto& c : cells_) {
    if (c.dim < 0) throw ContractViolation("CWDescription: negative cell dimension");
    max_dim_ = std::max(max_dim_, c.dim);
  }
  counts_.assign(static_cast<std::size_t>(max_dim_ + 1), 0);
  for (const auto& c : cells_) ++counts_[static_cast<std::size_t>(c.dim)];

  boundaries_.resize(static_cast<std::size_t>(max_dim_ + 1));
  for (int k = 1; k <= max_dim_; ++k) boundaries_[static_cast<std::size_t>(k)] = IntMatrix(count(k - 1), count(k));
  for (auto& [k, m] : boundaries) {
    if (k < 1 || k > max_dim_) {
      if (m.rows() * m.cols() != 0 && !m.is_zero()) {
        throw ContractViolation("CWDescription: boundary matrix for dimension " + std::to_string(k) +
                                " has no cells to act on");
      }
      continue;
    }
    if (m.rows() != count(k - 1) || m.cols() != count(k)) {
      throw ContractViolation("CWDescription: boundary " + std::to_string(k) + " must be " +
                              std::to_string(count(k - 1)) + "x" + std::to_string(count(k)));
    }
    boundaries_[static_cast<std::size_t>(k)] = std::move(m);
  }
  for (int k = 2; k <= max_dim_; ++k) {
    const auto& outer = boundary(k - 1);
    const auto& inner = boundary(k);
    if (outer.rows() == 0 || inner.cols() == 0 || outer.cols() == 0) continue;
    if (!(outer * inner).is_zero()) {
      throw ContractViolation("CWDescription: boundary(" + std::to_string(k - 1) + ") * boundary(" +
                              std::to_string(k) + ") != 0");
    }
  }
}

std::size_t CWDescription::count(int k) const {
  if (k < 0 || k > max_dim_) return 0;
  return counts_[static_cast<std::size_t>(k)];
}

const IntMatrix& CWDescription::boundary(int k) const {
  if (k < 1 || k > max_dim_) return empty_;
  return boundaries_[static_cast<std::size_t>(k)];
}

AbelianGroup homology(const CWDescription& cw, int k) {
  if (k < 0 || k > cw.max_dim()) return {};
  const Reduced out = reduce(cw.boundary(k));
  const Reduced in = reduce(cw.boundary(k + 1));
  AbelianGroup g;
  g.rank = cw.count(k) - out.rank - in.rank;
  g.torsion = in.torsion;
  return g;
}

namespace {

// Cochain route: C^k = Hom(C_k, Z), coboundary delta^k = boundary(k+1)^T.
AbelianGroup integral_cohomology(const CWDescription& cw, int k) {
  if (k < 0 || k > cw.max_dim()) return {};
  const Reduced out = reduce(cw.boundary(k + 1).transposed());
  const Reduced in = reduce(cw.boundary(k).transposed());
  AbelianGroup g;
  g.rank = cw.count(k) - out.rank - in.rank;
  g.torsion = in.torsion;
  return g;
}

}  // namespace

AbelianGroup cohomology(const CWDescription& cw, int k, const CoefficientSpec& a) {
  switch (a.kind()) {
    case CoefficientSpec::Kind::integers:
      return integral_cohomology(cw, k);
    case CoefficientSpec::Kind::rationals: {
      AbelianGroup g;
      g.ring = a;
      g.rank = homology(cw, k).rank;
      return g;
    }
    case CoefficientSpec::Kind::modular: {
      // Hom(H_k, Z/m) + Ext(H_{k-1}, Z/m)
      const std::int64_t m = a.modulus();
      const AbelianGroup hk = homology(cw, k);
      const AbelianGroup hk1 = homology(cw, k - 1);
      std::vector<std::int64_t> orders(hk.rank, m);
      for (auto t : hk.torsion) orders.push_back(std::gcd(t, m));
      for (auto t : hk1.torsion) orders.push_back(std::gcd(t, m));
      return AbelianGroup::from_cyclic(0, orders, a);
    }
  }
  return {};
}

namespace {

CWDescription one_cell_per_dim(std::string name, std::vector<int> dims) {
  std::vector<Cell> cells;
  for (int d : dims) cells.push_back({"e" + std::to_string(d), d});
  return CWDescription(std::move(name), std::move(cells));
}

}  // namespace

std::vector<std::string> builtin_cw_names() { return {"RP2", "CP2", "HP2", "OP2", "OP1", "hypothetical-OP3"}; }

CWDescription builtin_cw(std::string_view name) {
  if (name == "RP2") {
    return CWDescription("RP2", {{"e0", 0}, {"e1", 1}, {"e2", 2}}, {{1, IntMatrix{{0}}}, {2, IntMatrix{{2}}}});
  }
  if (name == "CP2") return one_cell_per_dim("CP2", {0, 2, 4});
  if (name == "HP2") return one_cell_per_dim("HP2", {0, 4, 8});
  if (name == "OP2") return one_cell_per_dim("OP2", {0, 8, 16});
  if (name == "OP1" || name == "S8" || name == "OP1/S8") return one_cell_per_dim("OP1", {0, 8});
  if (name == "hypothetical-OP3" || name == "OP3") return one_cell_per_dim("hypothetical-OP3", {0, 8, 16, 24});
  throw LookupError("builtin_cw: unknown space '" + std::string(name) + "'");
}

Op3Report ring_consistency_op3() {
  const CWDescription cw = builtin_cw("hypothetical-OP3");
  Op3Report r;
  bool ok = true;
  for (int k = 0; k <= cw.max_dim(); ++k) {
    const AbelianGroup g = cohomology(cw, k, CoefficientSpec::integers());
    const bool expect_z = k % 8 == 0;
    ok = ok && (expect_z ? g == AbelianGroup::of(CoefficientSpec::integers()) : g.is_trivial());
    if (!g.is_trivial()) r.groups.emplace(k, g);
  }
  r.matches_expected = ok;
  r.conclusion =
      "Integral cohomology is Z in degrees 0, 8, 16, 24 and 0 elsewhere, so a closed manifold with this cell "
      "structure would have cohomology ring Z[x]/(x^4) with |x| = 8. Steenrod power operations mod 2 and mod 3 "
      "rule out truncated polynomial rings Z[x]/(x^m), m > 3, unless |x| is 2 or 4; hence no such space exists. "
      "The Steenrod argument is cited, not computed here.";
  return r;
}

}  // namespace octo
