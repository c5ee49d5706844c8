#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "tcshift/error.hpp"
#include "tcshift/measure.hpp"

using namespace tcshift;

namespace {

AtomicMeasure1D half01() { return {{0.0, 0.5}, {1.0, 0.5}}; }
AtomicMeasure1D half14() { return {{1.0, 0.5}, {4.0, 0.5}}; }

bool throws_code(auto&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_SUITE("measure") {
  TEST_CASE("canonical form") {
    const SignedMeasure1D m{{2.0, 1.0}, {1.0, 0.5}, {2.0, -1.0}, {1.0 + 1e-14, 0.25}};
    REQUIRE(m.size() == 1);
    CHECK(m.atoms()[0].location == doctest::Approx(1.0));
    CHECK(m.atoms()[0].mass == doctest::Approx(0.75));

    const AtomicMeasure1D p{{3.0, 0.2}, {1.0, 0.0}, {0.5, 0.8}};
    REQUIRE(p.size() == 2);
    CHECK(p.atoms()[0].location == 0.5);
    CHECK(p.is_probability());
  }

  TEST_CASE("positive measures reject bad masses") {
    CHECK(throws_code([] { AtomicMeasure1D({{1.0, -0.1}}); }, ErrorCode::InvalidMeasure));
    CHECK(throws_code([] { AtomicMeasure1D({{-1.0, 0.1}}); }, ErrorCode::InvalidMeasure));
    CHECK(throws_code([] { AtomicMeasure1D({{1.0, NAN}}); }, ErrorCode::InvalidMeasure));
  }

  TEST_CASE("integrate_poly") {
    CHECK(integrate_poly(AtomicMeasure1D::dirac(1.0), 5) == 1.0);
    CHECK(integrate_poly(AtomicMeasure1D{{0.0, 0.75}, {1.0, 0.25}}, 3) == doctest::Approx(0.25));
    CHECK(integrate_poly(half14(), 2) == doctest::Approx(8.5));
    CHECK(integrate_poly(half14(), 0) == doctest::Approx(1.0));
  }

  TEST_CASE("reciprocal_norm") {
    CHECK(reciprocal_norm(AtomicMeasure1D::dirac(1.0)) == 1.0);
    CHECK(reciprocal_norm(half14()) == doctest::Approx(0.625));
    CHECK(throws_code([] { reciprocal_norm(AtomicMeasure1D{{0.0, 0.75}, {1.0, 0.25}}); },
                      ErrorCode::AtomAtZero));
  }

  TEST_CASE("tilde") {
    CHECK(ref::atom_diff1(tilde(AtomicMeasure1D::dirac(1.0)), AtomicMeasure1D::dirac(1.0)) == 0.0);
    CHECK(ref::atom_diff1(tilde(half14()), AtomicMeasure1D{{1.0, 0.8}, {4.0, 0.2}}) <= 1e-15);
    CHECK(ref::atom_diff1(tilde(AtomicMeasure1D::dirac(4.0)), AtomicMeasure1D::dirac(4.0)) == 0.0);
    CHECK(throws_code([] { tilde(half01()); }, ErrorCode::AtomAtZero));
  }

  TEST_CASE("extremal") {
    const AtomicMeasure2D d11{{1.0, 1.0, 1.0}};
    CHECK(ref::atom_diff2(extremal(d11), d11) == 0.0);
    const AtomicMeasure2D side{{1.0, 1.0, 0.5}, {0.0, 1.0, 0.5}};
    CHECK(ref::atom_diff2(extremal(side), side) <= 1e-15);
    const auto ext = extremal(product(AtomicMeasure1D::dirac(1.0), half14()));
    CHECK(ref::atom_diff2(ext, AtomicMeasure2D{{1.0, 1.0, 0.8}, {1.0, 4.0, 0.2}}) <= 1e-15);
    CHECK(throws_code([] { extremal(AtomicMeasure2D{{1.0, 0.0, 1.0}}); }, ErrorCode::AtomAtZero));
  }

  TEST_CASE("marginal") {
    CHECK(ref::atom_diff1(marginal(AtomicMeasure2D{{1.0, 1.0, 1.0}}, Axis::X),
                          AtomicMeasure1D::dirac(1.0)) == 0.0);
    const AtomicMeasure2D corners{
        {0.0, 0.0, 0.25}, {1.0, 0.0, 0.25}, {0.0, 1.0, 0.25}, {1.0, 1.0, 0.25}};
    CHECK(ref::atom_diff1(marginal(corners, Axis::X), half01()) <= 1e-15);
    CHECK(ref::atom_diff1(marginal(corners, Axis::Y), half01()) <= 1e-15);
    CHECK(ref::atom_diff1(marginal(product(half14(), half01()), Axis::X), half14()) <= 1e-15);
  }

  TEST_CASE("product") {
    CHECK(ref::atom_diff2(product(AtomicMeasure1D::dirac(1.0), AtomicMeasure1D::dirac(1.0)),
                          AtomicMeasure2D{{1.0, 1.0, 1.0}}) == 0.0);
    CHECK(ref::atom_diff2(product(half01(), AtomicMeasure1D::dirac(4.0)),
                          AtomicMeasure2D{{0.0, 4.0, 0.5}, {1.0, 4.0, 0.5}}) == 0.0);
    const auto p = product(half01(), half01());
    CHECK(p.size() == 4);
    for (const auto& a : p.atoms()) CHECK(a.mass == 0.25);
    CHECK(p.is_probability());
  }

  TEST_CASE("combine") {
    const SignedMeasure1D d1 = AtomicMeasure1D::dirac(1.0);
    CHECK(combine({{1.0, d1}, {-1.0, d1}}).empty());
    CHECK(ref::atom_diff1(combine({{1.0, d1}, {-0.5, d1}}), AtomicMeasure1D::dirac(1.0, 0.5)) == 0.0);
    const auto phi = combine({{1.0, half01()},
                              {-0.25, AtomicMeasure1D::dirac(0.0)},
                              {-0.25, AtomicMeasure1D::dirac(1.0)}});
    CHECK(ref::atom_diff1(phi, AtomicMeasure1D{{0.0, 0.25}, {1.0, 0.25}}) <= 1e-15);
  }

  TEST_CASE("positivity") {
    CHECK(positivity(AtomicMeasure1D::dirac(1.0, 0.5)).positive);
    CHECK(positivity(SignedMeasure1D{}).positive);
    const auto p = positivity(SignedMeasure1D{{0.0, -0.15}, {1.0, 0.65}});
    CHECK_FALSE(p.positive);
    REQUIRE(p.witness);
    CHECK(p.witness->location == 0.0);
    CHECK(p.witness->mass == -0.15);
  }

  TEST_CASE("to_positive clamps rounding noise only") {
    const SignedMeasure1D tiny{{0.0, -1e-17}, {1.0, 1.0}};
    CHECK(to_positive(tiny).size() == 1);
    CHECK(throws_code([] { to_positive(SignedMeasure1D{{0.0, -0.1}, {1.0, 1.0}}); },
                      ErrorCode::PreconditionViolated));
  }

  TEST_CASE("property: tilde and extremal are probability measures") {
    testgen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const auto m = testgen::random_probability(rng);
      CHECK(integrate_poly(tilde(m), 0) == doctest::Approx(1.0).epsilon(1e-12));
      const auto ext = extremal(product(testgen::random_probability(rng, 0.0, 4.0), m));
      CHECK(std::abs(ext.total_mass() - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("property: marginal of a product") {
    testgen::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
      const auto mx = testgen::random_probability(rng, 0.0, 4.0);
      const auto my = testgen::random_probability(rng, 0.0, 4.0);
      const auto p = product(mx, my);
      CHECK(ref::diff1(ref::marginal(p, true), ref::points1(mx)) <= 1e-12);
      CHECK(ref::diff1(ref::points1(marginal(p, Axis::Y)), ref::points1(my)) <= 1e-12);
    }
  }

  TEST_CASE("property: combine is linear") {
    testgen::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
      const auto m1 = testgen::random_probability(rng, 0.0, 2.0);
      const auto m2 = testgen::random_probability(rng, 0.0, 2.0);
      const double c1 = rng.uniform(-2, 2), c2 = rng.uniform(-2, 2);
      const auto c = combine({{c1, m1}, {c2, m2}});
      for (int k = 0; k <= 20; ++k) {
        const double expected = c1 * ref::moment1(m1, k) + c2 * ref::moment1(m2, k);
        const double scale = std::abs(c1) * ref::moment1(m1, k) + std::abs(c2) * ref::moment1(m2, k);
        CHECK(std::abs(integrate_poly(c, k) - expected) <= 1e-12 * std::max(1.0, scale));
      }
    }
  }

  TEST_CASE("property: negating one atom flips positivity") {
    testgen::Rng rng(14);
    for (int i = 0; i < 100; ++i) {
      const auto m = testgen::random_probability(rng, 0.0, 4.0);
      CHECK(positivity(m, 0.0).positive);
      std::vector<Atom1D> atoms(m.atoms().begin(), m.atoms().end());
      const auto j = static_cast<std::size_t>(rng.integer(0, static_cast<int>(atoms.size()) - 1));
      atoms[j].mass = -atoms[j].mass;
      const auto p = positivity(SignedMeasure1D(atoms), 0.0);
      CHECK_FALSE(p.positive);
      REQUIRE(p.witness);
      CHECK(p.witness->location == atoms[j].location);
    }
  }
}
