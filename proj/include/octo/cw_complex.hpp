#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "octo/smith.hpp"

namespace octo {

/// Coefficients for cohomology: Z, Z/m (m >= 2) or Q.
class CoefficientSpec {
 public:
  enum class Kind { integers, modular, rationals };

  static CoefficientSpec integers() { return CoefficientSpec(Kind::integers, 0); }
  static CoefficientSpec modular(std::int64_t m);
  static CoefficientSpec rationals() { return CoefficientSpec(Kind::rationals, 0); }
  /// "Z", "Zmod:m" or "Q". Throws ContractViolation.
  static CoefficientSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;

 private:
  CoefficientSpec(Kind k, std::int64_t m) : kind_(k), modulus_(m) {}
  Kind kind_;
  std::int64_t modulus_;
};

/// R^rank + Z/t_1 + ... + Z/t_k where R is the coefficient ring (Z or Q)
/// and t_1 | t_2 | ... | t_k, each t_i >= 2.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;
  CoefficientSpec ring = CoefficientSpec::integers();

  /// Normal form of R^rank + (+)_i Z/orders[i]. Orders of 1 are dropped and
  /// orders of 0 count as free summands.
  static AbelianGroup from_cyclic(std::size_t rank, const std::vector<std::int64_t>& orders,
                                  CoefficientSpec ring = CoefficientSpec::integers());
  /// The coefficient group itself as an abelian group.
  static AbelianGroup of(const CoefficientSpec& a);

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct Cell {
  std::string id;
  int dim = 0;
};

/// Cells plus integer incidence matrices. boundary(k) maps k-cells to
/// (k-1)-cells and has shape count(k-1) x count(k); cells of each dimension
/// are ordered as they appear in the cell list.
class CWDescription {
 public:
  /// Missing boundary matrices are zero. Throws ContractViolation on a shape
  /// mismatch or if a composite of boundaries is nonzero.
  CWDescription(std::string name, std::vector<Cell> cells, std::map<int, IntMatrix> boundaries = {});

  const std::string& name() const { return name_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int max_dim() const { return max_dim_; }
  std::size_t count(int k) const;
  /// Zero-sized for k outside [1, max_dim].
  const IntMatrix& boundary(int k) const;

 private:
  std::string name_;
  std::vector<Cell> cells_;
  int max_dim_ = -1;
  std::vector<std::size_t> counts_;
  std::vector<IntMatrix> boundaries_;
  IntMatrix empty_;
};

/// H_k(X; Z) via Smith normal forms of the boundary matrices.
AbelianGroup homology(const CWDescription& cw, int k);

/// H^k(X; A). For A = Z this dualizes the cellular chain complex and reduces
/// the coboundaries directly; Z/m and Q go through universal coefficients.
AbelianGroup cohomology(const CWDescription& cw, int k, const CoefficientSpec& a);

/// RP2, CP2, HP2, OP2, OP1 (alias S8, OP1/S8) and hypothetical-OP3.
/// Throws LookupError for anything else.
CWDescription builtin_cw(std::string_view name);

std::vector<std::string> builtin_cw_names();

struct Op3Report {
  /// Nontrivial cohomology degrees with integer coefficients.
  std::map<int, AbelianGroup> groups;
  bool matches_expected = false;
  std::string conclusion;
};

/// Cohomology of the hypothetical cell structure with cells in dimensions
/// 0, 8, 16, 24 and the reason no such space exists. Purely a report: the
/// Steenrod-power argument is cited, not computed.
Op3Report ring_consistency_op3();

}  // namespace octo
