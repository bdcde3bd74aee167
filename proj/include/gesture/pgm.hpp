#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gesture/vision.hpp"

namespace gesture::vision {

/// Binary P5 with maxval 255.
GrayFrame parse_pgm(std::string_view bytes);
std::string write_pgm(const GrayFrame& f);

/// Masks are serialized as 0/255 grayscale.
std::string write_pgm(const BinaryMask& m);

GrayFrame read_pgm_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace gesture::vision
