#pragma once

#include "fmlat/core_ring.hpp"

#include <string>
#include <string_view>

namespace fmlat {

// Surface descriptor files are line-oriented `key = value` text:
//
//   # comment
//   name      = standard K3
//   chi_O     = 2
//   basis     = sigma, f
//   gram      = -2, 1; 1, 0      (rows separated by ';')
//   fiber     = 0, 1
//   section   = 1, 0             (optional)
//   canonical = 0, 0
//   lambda    = 1                (optional, defaults to gcd of fiber degrees)
//
// Blank lines and lines starting with '#' are ignored; keys may appear once.
// Syntax errors throw ParseError naming the line and key; lattice invariant
// violations throw ParseError naming the key they concern.
SurfaceDescriptor parse_surface(std::string_view text);
SurfaceDescriptor load_surface(const std::string& path);

std::string format_surface(const SurfaceDescriptor& S);

}  // namespace fmlat
