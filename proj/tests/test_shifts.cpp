#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "tcshift/error.hpp"
#include "tcshift/shifts.hpp"

using namespace tcshift;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("shifts") {
  TEST_CASE("moment sequences") {
    const auto g = MomentSequence::of_measure(AtomicMeasure1D{{0.0, 0.75}, {1.0, 0.25}}, 4);
    CHECK(g[0] == 1.0);
    CHECK(g[3] == doctest::Approx(0.25));
    const std::vector<double> w{0.5, 1.0, 1.0};
    const auto h = MomentSequence::of_weights(w);
    REQUIRE(h.size() == 4);
    CHECK(h[3] == doctest::Approx(0.25));
    CHECK(code_of([] { MomentSequence({2.0, 1.0}); }) == ErrorCode::InvalidMeasure);
  }

  TEST_CASE("weights_from_measure") {
    const auto u = weights_from_measure(AtomicMeasure1D::dirac(1.0), 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(u[k] == 1.0);
    CHECK(u[100] == 1.0);  // constant tail

    const auto w = weights_from_measure(AtomicMeasure1D{{0.0, 0.75}, {1.0, 0.25}}, 3);
    CHECK(w[0] == doctest::Approx(0.5));
    CHECK(w[1] == doctest::Approx(1.0));
    CHECK(w[2] == doctest::Approx(1.0));

    const auto v = weights_from_measure(AtomicMeasure1D{{0.0, 0.5}, {1.0, 0.5}}, 3);
    CHECK(v[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(v[1] == doctest::Approx(1.0));

    CHECK(code_of([] { weights_from_measure(AtomicMeasure1D::dirac(0.0), 3); }) ==
          ErrorCode::DegenerateMeasure);
  }

  TEST_CASE("weight sequences without a tail stop at the prefix") {
    const auto w = weights_from_measure(AtomicMeasure1D{{1.0, 0.5}, {4.0, 0.5}}, 3);
    CHECK_FALSE(w.tail());
    CHECK(code_of([&] { (void)w[3]; }) == ErrorCode::DepthExceeded);
    CHECK(w.norm_bound() == doctest::Approx(2.0));
  }

  TEST_CASE("two_atom_measure") {
    CHECK(ref::atom_diff1(two_atom_measure(1, 1), AtomicMeasure1D::dirac(1.0)) == 0.0);
    CHECK(ref::atom_diff1(two_atom_measure(0.5, 1), AtomicMeasure1D{{0.0, 0.75}, {1.0, 0.25}}) == 0.0);
    CHECK(ref::atom_diff1(two_atom_measure(1, 2), AtomicMeasure1D{{0.0, 0.75}, {4.0, 0.25}}) == 0.0);
    CHECK(code_of([] { two_atom_measure(2, 1); }) == ErrorCode::NotSubnormal);
  }

  TEST_CASE("restriction_measure") {
    CHECK(ref::atom_diff1(restriction_measure(AtomicMeasure1D::dirac(1.0), 7),
                          AtomicMeasure1D::dirac(1.0)) == 0.0);
    CHECK(ref::atom_diff1(restriction_measure(AtomicMeasure1D{{0.0, 0.5}, {1.0, 0.5}}, 1),
                          AtomicMeasure1D::dirac(1.0)) == 0.0);
    CHECK(ref::atom_diff1(restriction_measure(AtomicMeasure1D{{1.0, 0.5}, {4.0, 0.5}}, 1),
                          AtomicMeasure1D{{1.0, 0.2}, {4.0, 0.8}}) <= 1e-15);
    CHECK(code_of([] { restriction_measure(AtomicMeasure1D::dirac(0.0), 1); }) ==
          ErrorCode::DegenerateMeasure);
  }

  TEST_CASE("one_var_backward_extension") {
    const auto one = one_var_backward_extension(1.0, AtomicMeasure1D::dirac(1.0));
    REQUIRE(one.subnormal);
    CHECK(ref::atom_diff1(*one.measure, AtomicMeasure1D::dirac(1.0)) == 0.0);

    const auto half = one_var_backward_extension(0.5, AtomicMeasure1D::dirac(1.0));
    REQUIRE(half.subnormal);
    CHECK(ref::atom_diff1(*half.measure, two_atom_measure(0.5, 1.0)) <= 1e-15);

    const auto big = one_var_backward_extension(1.2, AtomicMeasure1D::dirac(1.0));
    CHECK_FALSE(big.subnormal);
    CHECK(big.ratio == doctest::Approx(1.44));

    const auto zero = one_var_backward_extension(0.5, AtomicMeasure1D{{0.0, 0.5}, {1.0, 0.5}});
    CHECK_FALSE(zero.subnormal);
    CHECK(std::isinf(zero.ratio));
  }

  TEST_CASE("property: two-atom round trip") {
    testgen::Rng rng(21);
    for (int i = 0; i < 50; ++i) {
      const double beta = rng.uniform(0.05, 2.0);
      const double alpha = rng.uniform(0.01, 1.0) * beta;
      const auto w = weights_from_measure(two_atom_measure(alpha, beta), 8);
      CHECK(std::abs(w[0] - alpha) <= 1e-12);
      for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(w[k] - beta) <= 1e-12);
    }
  }

  TEST_CASE("property: restriction composes") {
    testgen::Rng rng(22);
    for (int i = 0; i < 100; ++i) {
      const auto m = testgen::random_probability(rng, 0.0, 4.0);
      const int h = rng.integer(1, 5);
      auto iterated = m;
      for (int j = 0; j < h; ++j) iterated = restriction_measure(iterated, 1);
      CHECK(ref::atom_diff1(restriction_measure(m, h), iterated) <= 1e-12);
    }
  }

  TEST_CASE("property: backward extension prepends x0") {
    testgen::Rng rng(23);
    int extended = 0;
    for (int i = 0; i < 100; ++i) {
      const auto m = testgen::random_probability(rng);
      const double x0 = rng.uniform(0.05, 1.2) / std::sqrt(testgen::recip(m));
      const auto e = one_var_backward_extension(x0, m);
      CHECK(e.subnormal == (x0 * x0 * testgen::recip(m) <= 1.0));
      if (!e.subnormal) continue;
      ++extended;
      const auto w = weights_from_measure(*e.measure, 6);
      const auto tail = weights_from_measure(m, 5);
      CHECK(std::abs(w[0] - x0) <= 1e-10);
      for (std::size_t k = 1; k < 6; ++k) CHECK(std::abs(w[k] - tail[k - 1]) <= 1e-10);
    }
    CHECK(extended > 20);
  }

  TEST_CASE("property: weights of a measure are nondecreasing") {
    testgen::Rng rng(24);
    for (int i = 0; i < 100; ++i) {
      const auto w = weights_from_measure(testgen::random_probability(rng, 0.0, 4.0), 12);
      for (std::size_t k = 1; k < 12; ++k) CHECK(w[k - 1] <= w[k] * (1 + 1e-12));
    }
  }
}
