#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bitmatrix.hpp"

namespace pgrank {

struct Gf2txtError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Plain-text matrix exchange format:
///   gf2 <rows> <cols>\n
/// followed by one line per row of exactly <cols> characters from {0,1}.
/// Line feed endings, no trailing whitespace anywhere.
void write_gf2txt(const BitMatrix& m, std::ostream& out);
std::string to_gf2txt(const BitMatrix& m);

/// Strict parser; throws Gf2txtError on a malformed header, a wrong line
/// length, an illegal character, or trailing data after the last row.
BitMatrix read_gf2txt(std::istream& in);
BitMatrix from_gf2txt(const std::string& text);

/// Writes to a temp file in the target directory, then renames into place.
void save_gf2txt(const BitMatrix& m, const std::string& path);
BitMatrix load_gf2txt(const std::string& path);

}  // namespace pgrank
