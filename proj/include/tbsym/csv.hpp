#pragma once

#include <iosfwd>
#include <string>

#include "tbsym/bands.hpp"

// Plain CSV: comma separated, '\n' line endings, one header row, no quoting.
namespace tbsym {

/// 17 significant digits; parses back to the identical double.
std::string format_double(double x);

/// `index,energy`
void write_spectrum_csv(std::ostream& out, const SpectrumData& spectrum);

/// `r,s,kx,ky,energy`
void write_bands_csv(std::ostream& out, const BandData& bands);

/// One column of `vectors` per line as re_0,im_0,re_1,im_1,...
void write_vectors_csv(std::ostream& out, const ComplexMatrix& vectors);

}  // namespace tbsym
