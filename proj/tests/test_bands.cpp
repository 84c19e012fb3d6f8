#include "doctest.h"

#include <algorithm>
#include <numbers>

#include "oracles.hpp"
#include "tbsym/analytic.hpp"
#include "tbsym/bands.hpp"
#include "tbsym/error.hpp"

using namespace tbsym;

namespace {

std::vector<double> sorted_energies(const BandData& b) {
  std::vector<double> e;
  for (const BandRow& row : b.rows) e.push_back(row.energy);
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("compute_dispersion") {
  SUBCASE("n=8 grid and levels") {
    const LatticeSpec spec{8, 1.0, 0.2};
    const Dispersion d = compute_dispersion(spec);
    REQUIRE(d.bands.rows.size() == 64);
    for (std::size_t j = 0; j < 64; ++j) {
      CHECK(d.bands.rows[j].r == j / 8);
      CHECK(d.bands.rows[j].s == j % 8);
      CHECK(d.bands.rows[j].kx == doctest::Approx(2 * std::numbers::pi * (j / 8) / 8.0));
      CHECK(d.bands.rows[j].ky == doctest::Approx(2 * std::numbers::pi * (j % 8) / 8.0));
    }
    CHECK(group_levels(sorted_energies(d.bands), 1e-9).size() == 13);
    CHECK(d.report.max_residual_h <= 1e-11);
    CHECK(d.report.max_eigenvalue_error <= 1e-13);
  }

  SUBCASE("t=0 is flat") {
    const Dispersion d = compute_dispersion({3, 0.5, 0.0});
    REQUIRE(d.bands.rows.size() == 9);
    for (const BandRow& row : d.bands.rows) CHECK(row.energy == doctest::Approx(0.5));
  }

  SUBCASE("combination method agrees with refine") {
    const LatticeSpec spec{4, 1.0, 0.2};
    const Dispersion a = compute_dispersion(spec);
    const Dispersion b = compute_dispersion(spec, {Method::combination, {}, {}});
    REQUIRE(b.bands.rows.size() == 16);
    for (std::size_t j = 0; j < 16; ++j)
      CHECK(std::abs(a.bands.rows[j].energy - b.bands.rows[j].energy) <= 1e-11);
  }

  CHECK_THROWS_AS(compute_dispersion({2, 1.0, 0.2}), InvalidArgument);
}

TEST_CASE("compute_spectrum") {
  SUBCASE("n=8 extremes") {
    const SpectrumData s = compute_spectrum({8, 1.0, 0.2});
    REQUIRE(s.values.size() == 64);
    CHECK(s.values.front() == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(s.values.back() == doctest::Approx(1.8).epsilon(1e-12));
    CHECK(std::is_sorted(s.values.begin(), s.values.end()));
  }

  SUBCASE("t=0 gives alpha everywhere") {
    const SpectrumData s = compute_spectrum({4, 2.5, 0.0});
    for (double v : s.values) CHECK(v == 2.5);
  }

  SUBCASE("n=6 multiset") {
    const SpectrumData s = compute_spectrum({6, 1.0, 0.2});
    const std::vector<double> expected = oracle::closed_form_spectrum(6, 1.0, 0.2);
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(std::abs(s.values[i] - expected[i]) <= 1e-12);
  }
}

TEST_CASE("compare_to_analytic") {
  SUBCASE("analytic bands compare to zero") {
    const LatticeSpec spec{5, 1.0, 0.2};
    for (const auto& row : compare_to_analytic(analytic_bands(spec), spec))
      for (double x : row) CHECK(x == 0.0);
  }

  SUBCASE("computed bands symmetric under r -> n-r") {
    const LatticeSpec spec{6, 1.0, 0.2};
    const BandData b = compute_dispersion(spec).bands;
    const auto diff = compare_to_analytic(b, spec);
    REQUIRE(diff.size() == 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t s = 0; s < 6; ++s) {
        CHECK(diff[r][s] <= 1e-12);
        CHECK(std::abs(b.rows[r * 6 + s].energy - b.rows[((6 - r) % 6) * 6 + s].energy) <=
              1e-12);
      }
  }
}

TEST_CASE("bands and spectrum agree over a sweep") {
  for (std::size_t n = 3; n <= 10; ++n)
    for (double alpha : {0.0, 1.0})
      for (double t : {0.2, 1.0}) {
        CAPTURE(n);
        CAPTURE(alpha);
        CAPTURE(t);
        const LatticeSpec spec{n, alpha, t};
        const BandData b = compute_dispersion(spec).bands;
        const std::vector<double> e = sorted_energies(b);
        const std::vector<double> s = compute_spectrum(spec).values;
        const double tol = 1e-10 * frobenius_norm(build_hamiltonian(spec));
        for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] - s[i]) <= tol);

        const auto census = degeneracy_census(spec, default_census_tol(spec));
        const auto levels = group_levels(e, default_census_tol(spec));
        REQUIRE(census.size() == levels.size());
        for (std::size_t i = 0; i < census.size(); ++i)
          CHECK(census[i].multiplicity == levels[i].multiplicity);

        if (n % 2 == 0) {
          const auto lo = std::min_element(b.rows.begin(), b.rows.end(),
                                           [](auto& x, auto& y) { return x.energy < y.energy; });
          const auto hi = std::max_element(b.rows.begin(), b.rows.end(),
                                           [](auto& x, auto& y) { return x.energy < y.energy; });
          CHECK(lo->r == 0);
          CHECK(lo->s == 0);
          CHECK(hi->r == n / 2);
          CHECK(hi->s == n / 2);
        }
      }
}

TEST_CASE("analytic_dispersion") {
  const LatticeSpec spec{4, 1.0, 0.2};
  const Dispersion d = analytic_dispersion(spec);
  REQUIRE(d.bands.rows.size() == 16);
  CHECK(d.bands.rows[2 * 4 + 2].energy == doctest::Approx(1.8));
  CHECK(d.report.max_residual_h <= 1e-13);
  CHECK(d.report.max_entrywise_vector_error == 0.0);
}
