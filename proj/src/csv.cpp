#include "tbsym/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>

#include "tbsym/error.hpp"

namespace tbsym {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x,
                    std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error("format_double: conversion failed");
  return {buf.data(), end};
}

void write_spectrum_csv(std::ostream& out, const SpectrumData& spectrum) {
  out << "index,energy\n";
  for (std::size_t i = 0; i < spectrum.values.size(); ++i)
    out << i << ',' << format_double(spectrum.values[i]) << '\n';
}

void write_bands_csv(std::ostream& out, const BandData& bands) {
  out << "r,s,kx,ky,energy\n";
  for (const BandRow& row : bands.rows)
    out << row.r << ',' << row.s << ',' << format_double(row.kx) << ','
        << format_double(row.ky) << ',' << format_double(row.energy) << '\n';
}

void write_vectors_csv(std::ostream& out, const ComplexMatrix& vectors) {
  const std::size_t dim = vectors.dim();
  for (std::size_t i = 0; i < dim; ++i)
    out << (i ? "," : "") << "re_" << i << ",im_" << i;
  out << '\n';
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex z = vectors(i, j);
      out << (i ? "," : "") << format_double(z.real()) << ','
          << format_double(z.imag());
    }
    out << '\n';
  }
}

}  // namespace tbsym
