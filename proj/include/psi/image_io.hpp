#pragma once

#include "psi/image.hpp"

#include <string>

namespace psi {

// Reads PNG, PGM (P5) or PPM (P6), detected from content. 8-bit samples map
// to [0,1] by /255, 16-bit by /65535. Throws std::runtime_error on anything
// undecodable.
Image load_image(const std::string& path);

// Writes 8-bit PNG/PGM/PPM chosen by file extension (.png/.pgm/.ppm);
// samples are clipped and rounded to round(255*x).
void save_image(const std::string& path, const Image& img);

}  // namespace psi
