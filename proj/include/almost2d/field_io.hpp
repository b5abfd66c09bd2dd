#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "almost2d/field.hpp"

namespace a2d {

/// Raised for unreadable, unwritable or malformed field files.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FieldFile {
  PhysicalVectorField field;
  /// Header keys beyond the required set (e.g. family, seed).
  std::map<std::string, std::string> extra;
};

/// Text header of key=value lines ending with a blank line, then little-endian
/// f64 samples, component-major, x3 fastest.
void write_field_file(const std::string& path, const PhysicalVectorField& f,
                      const std::map<std::string, std::string>& extra = {});
FieldFile read_field_file(const std::string& path);

}  // namespace a2d
