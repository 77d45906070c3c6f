#include <doctest.h>

#include "octo/cw_complex.hpp"
#include "octo/errors.hpp"
#include "oracle/minors.hpp"

using namespace octo;

namespace {

const AbelianGroup kZero{};
AbelianGroup Z() { return AbelianGroup::of(CoefficientSpec::integers()); }
AbelianGroup Zmod(std::int64_t m) { return AbelianGroup::of(CoefficientSpec::modular(m)); }

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  }
  return out;
}

// dim H^k(X; F_p) = c_k - rank d_{k+1} - rank d_k, ranks taken mod p.
std::size_t mod_p_betti(const CWDescription& cw, int k, std::int64_t p) {
  auto rank_of = [&](int j) -> std::size_t {
    if (j < 1 || j > cw.max_dim()) return 0;
    const auto& b = cw.boundary(j);
    if (b.rows() == 0 || b.cols() == 0) return 0;
    return oracle::rank_mod_p(dense(b), p);
  };
  return cw.count(k) - rank_of(k + 1) - rank_of(k);
}

}  // namespace

TEST_CASE("octonionic projective plane, all coefficient families") {
  const auto op2 = builtin_cw("OP2");
  for (const auto& a : {CoefficientSpec::integers(), CoefficientSpec::modular(2), CoefficientSpec::modular(3),
                        CoefficientSpec::rationals()}) {
    for (int k = 0; k <= 20; ++k) {
      const auto g = cohomology(op2, k, a);
      if (k == 0 || k == 8 || k == 16) {
        CHECK(g == AbelianGroup::of(a));
      } else {
        CHECK(g.is_trivial());
      }
    }
  }
  CHECK(homology(op2, 8) == Z());
  CHECK(homology(op2, 5).is_trivial());
}

TEST_CASE("real projective plane") {
  const auto rp2 = builtin_cw("RP2");
  CHECK(cohomology(rp2, 0, CoefficientSpec::integers()) == Z());
  CHECK(cohomology(rp2, 1, CoefficientSpec::integers()).is_trivial());
  CHECK(cohomology(rp2, 2, CoefficientSpec::integers()) == AbelianGroup{0, {2}});
  for (int k = 0; k <= 2; ++k) CHECK(cohomology(rp2, k, CoefficientSpec::modular(2)) == Zmod(2));
  CHECK(homology(rp2, 1) == AbelianGroup{0, {2}});
  CHECK(homology(rp2, 2).is_trivial());
  CHECK(rp2.boundary(2)(0, 0) == 2);
  // Z/3 kills the 2-torsion.
  CHECK(cohomology(rp2, 2, CoefficientSpec::modular(3)).is_trivial());
  CHECK(cohomology(rp2, 2, CoefficientSpec::rationals()).is_trivial());
}

TEST_CASE("complex and quaternionic projective planes") {
  const auto cp2 = builtin_cw("CP2");
  const auto hp2 = builtin_cw("HP2");
  for (int k = 0; k <= 8; ++k) {
    const bool cp = k == 0 || k == 2 || k == 4;
    const bool hp = k == 0 || k == 4 || k == 8;
    CHECK(cohomology(cp2, k, CoefficientSpec::integers()) == (cp ? Z() : kZero));
    CHECK(cohomology(hp2, k, CoefficientSpec::integers()) == (hp ? Z() : kZero));
  }
}

TEST_CASE("mod p cohomology agrees with Gaussian elimination over F_p") {
  for (const auto& name : builtin_cw_names()) {
    const auto cw = builtin_cw(name);
    for (std::int64_t p : {2, 3, 5}) {
      for (int k = 0; k <= cw.max_dim(); ++k) {
        const auto g = cohomology(cw, k, CoefficientSpec::modular(p));
        CHECK(g.rank == 0);
        CHECK(g.torsion.size() == mod_p_betti(cw, k, p));
      }
    }
  }
}

TEST_CASE("cell structures") {
  const auto op2 = builtin_cw("OP2");
  CHECK(op2.cells().size() == 3);
  CHECK(op2.count(0) == 1);
  CHECK(op2.count(8) == 1);
  CHECK(op2.count(16) == 1);
  const auto op1 = builtin_cw("OP1/S8");
  CHECK(op1.cells().size() == 2);
  CHECK(op1.count(8) == 1);
  CHECK_THROWS_AS(builtin_cw("KP2"), LookupError);
}

TEST_CASE("boundary of a boundary must vanish") {
  // Two 1-cells with the same endpoints, one 2-cell hitting both once: d1 d2 != 0.
  std::map<int, IntMatrix> b;
  b.emplace(1, IntMatrix{{-1, -1}, {1, 1}});
  b.emplace(2, IntMatrix{{1}, {1}});
  CHECK_THROWS_AS(CWDescription("bad", {{"v0", 0}, {"v1", 0}, {"a", 1}, {"b", 1}, {"f", 2}}, b), ContractViolation);
  // Two hemispheres glued along a circle.
  std::map<int, IntMatrix> good;
  good.emplace(1, IntMatrix{{-1, -1}, {1, 1}});
  good.emplace(2, IntMatrix{{1, 1}, {-1, -1}});
  const CWDescription s2("sphere", {{"v0", 0}, {"v1", 0}, {"a", 1}, {"b", 1}, {"n", 2}, {"s", 2}}, good);
  CHECK(cohomology(s2, 2, CoefficientSpec::integers()) == Z());
  CHECK(cohomology(s2, 1, CoefficientSpec::integers()).is_trivial());
}

TEST_CASE("coefficient parsing") {
  CHECK(CoefficientSpec::parse("Z") == CoefficientSpec::integers());
  CHECK(CoefficientSpec::parse("Zmod:6") == CoefficientSpec::modular(6));
  CHECK(CoefficientSpec::parse("Q") == CoefficientSpec::rationals());
  CHECK_THROWS_AS(CoefficientSpec::parse("Zmod:1"), ContractViolation);
  CHECK_THROWS_AS(CoefficientSpec::parse("R"), ContractViolation);
}

TEST_CASE("composite moduli through universal coefficients") {
  // H^2(RP2; Z/4) = Ext(Z/2, Z/4) = Z/2; H^1(RP2; Z/4) = Hom(Z/2, Z/4) = Z/2.
  const auto rp2 = builtin_cw("RP2");
  CHECK(cohomology(rp2, 1, CoefficientSpec::modular(4)) == AbelianGroup{0, {2}, CoefficientSpec::modular(4)});
  CHECK(cohomology(rp2, 2, CoefficientSpec::modular(4)) == AbelianGroup{0, {2}, CoefficientSpec::modular(4)});
}

TEST_CASE("hypothetical OP3 report") {
  const auto r = ring_consistency_op3();
  CHECK(r.matches_expected);
  for (int k : {0, 8, 16, 24}) CHECK(r.groups.at(k) == Z());
  CHECK(r.conclusion.find("Steenrod") != std::string::npos);
  const auto op3 = builtin_cw("hypothetical-OP3");
  for (int k = 0; k <= 24; ++k) {
    if (k % 8 != 0) CHECK(cohomology(op3, k, CoefficientSpec::integers()).is_trivial());
  }
}
