#include "almost2d/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace a2d {
namespace {

const std::map<std::string, std::string> fixed_keys = {{"version", "1"},        {"components", "3"},
                                                       {"storage", "physical"}, {"precision", "f64"},
                                                       {"order", "x3-fastest"}};

void put_f64(std::ostream& os, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(const unsigned char* b) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_field_file(const std::string& path, const PhysicalVectorField& f,
                      const std::map<std::string, std::string>& extra) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os << "version=1\n"
     << "n=" << f.grid.n() << "\n"
     << "components=3\nstorage=physical\nprecision=f64\norder=x3-fastest\n";
  for (const auto& [k, v] : extra) {
    if (k == "n" || fixed_keys.count(k) || k.find_first_of("=\n") != std::string::npos ||
        v.find('\n') != std::string::npos)
      throw std::invalid_argument("invalid extra header key " + k);
    os << k << "=" << v << "\n";
  }
  os << "\n";
  for (const auto& comp : f.samples)
    for (double v : comp) put_f64(os, v);
  if (!os) throw IoError("write failed for " + path);
}

FieldFile read_field_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  std::map<std::string, std::string> header;
  std::string line;
  while (true) {
    if (!std::getline(is, line)) throw IoError(path + ": header not terminated by a blank line");
    if (line.empty()) break;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError(path + ": malformed header line '" + line + "'");
    header[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (header["version"] != "1") throw IoError(path + ": unsupported version '" + header["version"] + "'");
  for (const auto& [k, v] : fixed_keys)
    if (header[k] != v) throw IoError(path + ": expected " + k + "=" + v);
  int n = 0;
  try {
    n = std::stoi(header.at("n"));
  } catch (const std::exception&) {
    throw IoError(path + ": missing or invalid n");
  }
  GridSpec g = [&] {
    try {
      return GridSpec(n);
    } catch (const std::invalid_argument& e) {
      throw IoError(path + ": " + e.what());
    }
  }();
  FieldFile out{PhysicalVectorField(g), {}};
  for (const auto& [k, v] : header)
    if (k != "n" && !fixed_keys.count(k)) out.extra[k] = v;
  std::vector<unsigned char> buf(g.size() * 8);
  for (auto& comp : out.field.samples) {
    is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size()));
    if (is.gcount() != std::streamsize(buf.size())) throw IoError(path + ": truncated sample data");
    for (std::size_t i = 0; i < g.size(); ++i) comp[i] = get_f64(&buf[8 * i]);
  }
  if (is.peek() != std::char_traits<char>::eof()) throw IoError(path + ": trailing bytes after samples");
  return out;
}

}  // namespace a2d
