#include "doctest.h"

#include <charconv>
#include <limits>
#include <random>
#include <sstream>

#include "tbsym/csv.hpp"

using namespace tbsym;

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::uniform_int_distribution<int> ex(-300, 300);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::ldexp(u(rng), ex(rng));
    const std::string s = format_double(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == x);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("spectrum csv") {
  std::ostringstream out;
  write_spectrum_csv(out, SpectrumData{{0.25, 1.0}});
  CHECK(out.str() == "index,energy\n0,0.25\n1,1\n");
}

TEST_CASE("bands csv") {
  BandData b{{3, 1.0, 0.2}, {{0, 1, 0.0, 2.0, 0.5}}};
  std::ostringstream out;
  write_bands_csv(out, b);
  CHECK(out.str() == "r,s,kx,ky,energy\n0,1,0,2,0.5\n");
}

TEST_CASE("vectors csv") {
  ComplexMatrix m(2);
  m(0, 0) = Complex{1.0, 0.0};
  m(1, 0) = Complex{0.0, -0.5};
  m(0, 1) = Complex{0.25, 0.75};
  std::ostringstream out;
  write_vectors_csv(out, m);
  CHECK(out.str() == "re_0,im_0,re_1,im_1\n1,0,0,-0.5\n0.25,0.75,0,0\n");
}
