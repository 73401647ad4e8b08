#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "boolspec/fourier.hpp"
#include "oracles.hpp"

using namespace boolspec;

namespace {

const ProductDistribution kBiased3({-0.4, 0.2, 0.6});

}  // namespace

TEST_CASE("basis evaluation") {
  const auto d = ProductDistribution::uniform(2);
  for (AssignmentIndex k = 0; k < 4; ++k) {
    CHECK(basis_eval(0, k, d) == 1.0);  // phi of the empty set
  }
  // uniform specialization is the parity: U={1,2}, x=(-1,+1) -> -1
  CHECK(basis_eval(0b11, 2, d) == -1.0);

  const ProductDistribution d1({-0.4});
  CHECK(basis_eval(0b1, 1, d1) ==
        doctest::Approx(1.4 / std::sqrt(0.84)).epsilon(1e-15));
  CHECK(basis_eval(0b1, 1, d1) == doctest::Approx(1.5275252316519467));
}

TEST_CASE("basis orthonormality under the product measure") {
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<double> mu_full{-0.4, 0.2, 0.6};
    const ProductDistribution biased(
        std::vector<double>(mu_full.begin(), mu_full.begin() + n));
    for (const bool uniform : {true, false}) {
      const ProductDistribution& d =
          uniform ? ProductDistribution::uniform(n) : biased;
      for (SubsetMask u = 0; u < (1u << n); ++u) {
        for (SubsetMask v = 0; v < (1u << n); ++v) {
          double sum = 0.0;
          for (AssignmentIndex k = 0; k < (1u << n); ++k) {
            sum += d.point_probability(k) * basis_eval(u, k, d) *
                   basis_eval(v, k, d);
          }
          CHECK(sum == doctest::Approx(u == v ? 1.0 : 0.0).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("transform of named functions") {
  const auto d2 = ProductDistribution::uniform(2);

  const auto constant = transform(TruthTable::constant(2, +1), d2);
  CHECK(constant.kind() == SpectrumKind::Exact);
  CHECK(constant.numerator(0) == 4);  // coefficient 1
  CHECK(constant.numerator(1) == 0);
  CHECK(constant.numerator(2) == 0);
  CHECK(constant.numerator(3) == 0);

  const auto biased_constant =
      transform(TruthTable::constant(2, +1), ProductDistribution({-0.4, 0.2}));
  CHECK(biased_constant.kind() == SpectrumKind::Float);
  CHECK(biased_constant.value(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(biased_constant.value(3) == doctest::Approx(0.0).epsilon(1e-12));

  const auto and2 = transform(TruthTable::from_bit_chars(2, "0001"), d2);
  CHECK(and2.numerator(0b00) == -2);  // -1/2
  CHECK(and2.numerator(0b01) == 2);   // +1/2
  CHECK(and2.numerator(0b10) == 2);
  CHECK(and2.numerator(0b11) == 2);

  for (unsigned i = 1; i <= 3; ++i) {
    const auto dict = transform(TruthTable::dictator(3, i),
                                ProductDistribution::uniform(3));
    for (SubsetMask m = 0; m < 8; ++m) {
      CHECK(dict.numerator(m) == (m == (1u << (i - 1)) ? 8 : 0));
    }
  }
}

TEST_CASE("transform matches the defining sum") {
  // exhaustive at n = 3, uniform and biased
  const auto uniform3 = ProductDistribution::uniform(3);
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    const auto tt = TruthTable::from_packed_bits(3, bits);

    const auto exact = transform(tt, uniform3);
    const auto naive_nums = oracle::naive_uniform_numerators(tt);
    for (SubsetMask m = 0; m < 8; ++m) {
      CHECK(exact.numerator(m) == naive_nums[m]);
    }

    const auto biased = transform(tt, kBiased3);
    const auto naive = oracle::naive_transform(tt, kBiased3);
    for (SubsetMask m = 0; m < 8; ++m) {
      CHECK(biased.value(m) == doctest::Approx(naive[m]).epsilon(1e-12));
    }
  }

  // random spot checks at n = 10
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mean(-0.9, 0.9);
  for (int trial = 0; trial < 2; ++trial) {
    const auto tt = TruthTable::random(10, rng);
    std::vector<double> mu(10);
    for (auto& m : mu) m = mean(rng);
    const ProductDistribution d(mu);
    const auto got = transform(tt, d);
    const auto want = oracle::naive_transform(tt, d);
    for (SubsetMask m = 0; m < tt.size(); ++m) {
      CHECK(got.value(m) == doctest::Approx(want[m]).epsilon(1e-10));
    }
  }
}

TEST_CASE("fast uniform transform equals the float path exactly") {
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    const auto tt = TruthTable::from_packed_bits(3, bits);
    const auto fast = fast_uniform_transform(tt);
    const auto slow = transform(tt, ProductDistribution::uniform(3));
    for (SubsetMask m = 0; m < 8; ++m) {
      CHECK(fast.numerator(m) == slow.numerator(m));
    }
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tt = TruthTable::random(12, rng);
    const auto fast = fast_uniform_transform(tt);
    const auto slow = transform(tt, ProductDistribution::uniform(12));
    for (SubsetMask m = 0; m < tt.size(); ++m) {
      REQUIRE(fast.numerator(m) == slow.numerator(m));
    }
  }

  const auto negated = fast_uniform_transform(TruthTable::constant(4, -1));
  CHECK(negated.numerator(0) == -16);
  for (SubsetMask m = 1; m < 16; ++m) CHECK(negated.numerator(m) == 0);
}

TEST_CASE("Parseval holds for every spectrum of a Boolean function") {
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    const auto tt = TruthTable::from_packed_bits(3, bits);
    CHECK(fast_uniform_transform(tt).parseval_exact());
    CHECK(transform(tt, kBiased3).parseval_sum() ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  std::mt19937_64 rng(9);
  const auto tt = TruthTable::random(12, rng);
  CHECK(fast_uniform_transform(tt).parseval_exact());
}

TEST_CASE("transform round-trips through the inverse") {
  // exhaustive at n <= 3
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<double> mu_full{-0.4, 0.2, 0.6};
    const ProductDistribution biased(
        std::vector<double>(mu_full.begin(), mu_full.begin() + n));
    const auto uniform = ProductDistribution::uniform(n);
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const auto tt = TruthTable::from_packed_bits(n, bits);
      CHECK(inverse_transform(transform(tt, uniform), uniform) == tt);
      CHECK(inverse_transform(transform(tt, biased), biased) == tt);
    }
  }

  // a fixed mixed-means case at n = 4 and random tables at n = 10
  std::mt19937_64 rng(1);
  const ProductDistribution d4({-0.4, 0.2, 0.6, 0.0});
  for (int trial = 0; trial < 10; ++trial) {
    const auto tt = TruthTable::random(4, rng);
    CHECK(inverse_transform(transform(tt, d4), d4) == tt);
  }
  std::uniform_real_distribution<double> mean(-0.9, 0.9);
  for (int trial = 0; trial < 3; ++trial) {
    const auto tt = TruthTable::random(10, rng);
    std::vector<double> mu(10);
    for (auto& m : mu) m = mean(rng);
    const ProductDistribution d(mu);
    CHECK(inverse_transform(transform(tt, d), d) == tt);
  }
}

TEST_CASE("inverse transform rejects non-Boolean spectra") {
  const auto d = ProductDistribution::uniform(1);
  const auto s = FourierSpectrum::dense(1, {0.3, 0.0});
  CHECK_THROWS_AS((void)inverse_transform(s, d), std::domain_error);
}

TEST_CASE("arity mismatches are rejected") {
  const auto tt = TruthTable::constant(2, +1);
  CHECK_THROWS_AS((void)transform(tt, ProductDistribution::uniform(3)),
                  std::invalid_argument);
}
