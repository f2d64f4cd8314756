#pragma once

#include "superkoszul/algebra.hpp"
#include "superkoszul/diffops.hpp"
#include "superkoszul/lie.hpp"

#include <string>

namespace superkoszul {

/// {"generators":[{"name","coh","s","h","weight"}],"relations":["..."],
///  "invertible":["t"]}; "tweight" is optional on generators.
Presentation presentation_from_json(const std::string& text);

/// {"basis":[{"name","s"}],"brackets":[{"x","y","value"}]}, each value a
/// linear expression in the basis. Unlisted brackets are zero.
LieSuperalgebra lie_from_json(const std::string& text);

/// {"coordinates":[{"name","s","invertible","tweight"}]}.
SuperSpace space_from_json(const std::string& text);

/// Reads a whole file; Error(Parse) when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace superkoszul
