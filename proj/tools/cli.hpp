#pragma once

#include <map>
#include <string>

#include "almost2d/field.hpp"

namespace a2d::cli {

/// Runs one verb. Returns 0 on success, 1 on a domain error, 2 on an I/O error.
int dispatch(int argc, const char* const* argv);

/// Norms reported by `norms` and recorded as computed values in `construct` sidecars.
std::map<std::string, double> field_norms(const SpectralVectorField& u);

}  // namespace a2d::cli
