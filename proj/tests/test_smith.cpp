#include <doctest.h>

#include <random>

#include "octo/smith.hpp"
#include "oracle/minors.hpp"

using namespace octo;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  }
  return out;
}

void check_form(const IntMatrix& m, const SmithForm& f) {
  CHECK(f.S == f.U * m * f.V);
  CHECK(is_unimodular(f.U));
  CHECK(is_unimodular(f.V));
  for (std::size_t i = 0; i < f.S.rows(); ++i) {
    for (std::size_t j = 0; j < f.S.cols(); ++j) {
      if (i != j) CHECK(f.S(i, j) == 0);
    }
  }
  const auto d = f.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] > 0);
    if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
  }
}

}  // namespace

TEST_CASE("zero matrix") {
  const IntMatrix z(3, 2);
  const auto f = smith_normal_form(z);
  CHECK(f.S.is_zero());
  CHECK(f.rank() == 0);
  check_form(z, f);
}

TEST_CASE("one by one") {
  const IntMatrix m{{2}};
  const auto f = smith_normal_form(m);
  CHECK(f.S == IntMatrix{{2}});
  const IntMatrix n{{-3}};
  CHECK(smith_normal_form(n).S == IntMatrix{{3}});
}

TEST_CASE("hand example") {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto f = smith_normal_form(m);
  CHECK(f.S == IntMatrix{{2, 0}, {0, 4}});
  check_form(m, f);
}

TEST_CASE("empty shapes") {
  const auto f = smith_normal_form(IntMatrix(0, 3));
  CHECK(f.rank() == 0);
  CHECK(f.V.rows() == 3);
}

TEST_CASE("determinant and unimodularity") {
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(is_unimodular(IntMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_FALSE(is_unimodular(IntMatrix(2, 3)));
}

TEST_CASE("invariant factors agree with the minor-gcd oracle on 4x4 matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> shape(1, 4);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t r = t < 500 ? 4 : static_cast<std::size_t>(shape(rng));
    const std::size_t c = t < 500 ? 4 : static_cast<std::size_t>(shape(rng));
    // Bias some samples toward rank deficiency.
    IntMatrix m = random_matrix(r, c, rng, t % 3 == 0 ? 2 : 20);
    const auto f = smith_normal_form(m);
    const auto want = oracle::invariant_factors(dense(m));
    const auto got = f.invariant_factors();
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("SNF properties on random matrices up to 8x8") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> shape(1, 8);
  for (int t = 0; t < 300; ++t) {
    const IntMatrix m = random_matrix(shape(rng), shape(rng), rng);
    check_form(m, smith_normal_form(m));
  }
}

TEST_CASE("rank-deficient products") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_matrix(6, 2, rng, 5) * random_matrix(2, 6, rng, 5);
    const auto f = smith_normal_form(m);
    CHECK(f.rank() <= 2);
    check_form(m, f);
  }
}
