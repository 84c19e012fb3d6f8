#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "tbsym/tbsym.h"

namespace {

tbsym_params params(size_t n, double alpha = 1.0, double t = 0.2) {
  tbsym_params p;
  tbsym_params_init(&p, n, alpha, t);
  return p;
}

}  // namespace

TEST_CASE("params validation") {
  tbsym_params p = params(4);
  CHECK(p.method == TBSYM_METHOD_REFINE);
  CHECK(p.has_gap_tol == 0);
  CHECK(tbsym_params_validate(&p) == TBSYM_OK);

  p = params(2);
  CHECK(tbsym_params_validate(&p) == TBSYM_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(tbsym_last_error()).find(">= 3") != std::string::npos);

  p = params(4, NAN);
  CHECK(tbsym_params_validate(&p) == TBSYM_ERROR_INVALID_ARGUMENT);

  p = params(4);
  p.has_gap_tol = 1;
  p.gap_tol = 0.0;
  CHECK(tbsym_params_validate(&p) == TBSYM_ERROR_INVALID_ARGUMENT);

  p = params(4);
  p.method = static_cast<tbsym_method>(7);
  CHECK(tbsym_params_validate(&p) == TBSYM_ERROR_INVALID_ARGUMENT);

  CHECK(tbsym_params_validate(nullptr) == TBSYM_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(tbsym_version()).size() > 0);
}

TEST_CASE("spectrum") {
  const tbsym_params p = params(8);
  tbsym_spectrum* s = nullptr;
  REQUIRE(tbsym_spectrum_compute(&p, &s) == TBSYM_OK);
  REQUIRE(tbsym_spectrum_size(s) == 64);
  const double* v = tbsym_spectrum_values(s);
  CHECK(v[0] == doctest::Approx(0.2));
  CHECK(v[63] == doctest::Approx(1.8));
  tbsym_spectrum_free(s);

  const tbsym_params bad = params(1);
  s = reinterpret_cast<tbsym_spectrum*>(0x1);
  CHECK(tbsym_spectrum_compute(&bad, &s) == TBSYM_ERROR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
}

TEST_CASE("bands") {
  const tbsym_params p = params(4);
  tbsym_bands* b = nullptr;
  REQUIRE(tbsym_bands_compute(&p, &b) == TBSYM_OK);
  REQUIRE(tbsym_bands_size(b) == 16);

  tbsym_band_row row;
  REQUIRE(tbsym_bands_row(b, 10, &row) == TBSYM_OK);
  CHECK(row.r == 2);
  CHECK(row.s == 2);
  CHECK(row.energy == doctest::Approx(1.8));
  CHECK(tbsym_bands_row(b, 16, &row) == TBSYM_ERROR_INVALID_ARGUMENT);

  tbsym_report rep;
  REQUIRE(tbsym_bands_report(b, &rep) == TBSYM_OK);
  CHECK(rep.max_residual_h <= 1e-12);
  CHECK(tbsym_report_within_thresholds(&rep) != 0);

  std::vector<double> vec(32);
  REQUIRE(tbsym_bands_vector(b, 0, vec.data(), vec.size()) == TBSYM_OK);
  double norm = 0.0;
  for (double x : vec) norm += x * x;
  CHECK(norm == doctest::Approx(1.0));
  // (0,0) is the uniform mode with a real positive first entry
  CHECK(vec[0] == doctest::Approx(0.25));
  CHECK(vec[1] == 0.0);
  CHECK(tbsym_bands_vector(b, 0, vec.data(), 31) == TBSYM_ERROR_INVALID_ARGUMENT);
  tbsym_bands_free(b);
}

TEST_CASE("combination method and analytic bands") {
  tbsym_params p = params(4);
  p.method = TBSYM_METHOD_COMBINATION;
  tbsym_bands* b = nullptr;
  REQUIRE(tbsym_bands_compute(&p, &b) == TBSYM_OK);
  tbsym_bands* a = nullptr;
  REQUIRE(tbsym_bands_analytic(&p, &a) == TBSYM_OK);
  for (size_t i = 0; i < 16; ++i) {
    tbsym_band_row x, y;
    tbsym_bands_row(b, i, &x);
    tbsym_bands_row(a, i, &y);
    CHECK(x.r == y.r);
    CHECK(x.s == y.s);
    CHECK(std::abs(x.energy - y.energy) <= 1e-11);
  }
  tbsym_bands_free(a);
  tbsym_bands_free(b);
}

TEST_CASE("null handles") {
  CHECK(tbsym_spectrum_size(nullptr) == 0);
  CHECK(tbsym_spectrum_values(nullptr) == nullptr);
  CHECK(tbsym_bands_size(nullptr) == 0);
  tbsym_band_row row;
  CHECK(tbsym_bands_row(nullptr, 0, &row) == TBSYM_ERROR_INVALID_ARGUMENT);
  tbsym_report rep;
  CHECK(tbsym_bands_report(nullptr, &rep) == TBSYM_ERROR_INVALID_ARGUMENT);
  CHECK(tbsym_spectrum_write_csv(nullptr, "x") == TBSYM_ERROR_INVALID_ARGUMENT);
  tbsym_spectrum_free(nullptr);
  tbsym_bands_free(nullptr);
  CHECK(tbsym_spectrum_compute(nullptr, nullptr) == TBSYM_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("csv files") {
  const tbsym_params p = params(3);
  tbsym_bands* b = nullptr;
  REQUIRE(tbsym_bands_compute(&p, &b) == TBSYM_OK);
  const std::string path = "tbsym_capi_bands.csv";
  REQUIRE(tbsym_bands_write_csv(b, path.c_str()) == TBSYM_OK);
  std::ifstream in(path);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "r,s,kx,ky,energy");
  CHECK(lines[1].rfind("0,0,0,0,", 0) == 0);
  std::remove(path.c_str());

  CHECK(tbsym_bands_write_csv(b, "/nonexistent-dir/x.csv") == TBSYM_ERROR_IO);
  tbsym_bands_free(b);
}
