#include "schwarzkit/vector_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/jsonfmt.hpp"

namespace schwarzkit {

namespace {

using nlohmann::json;

Complex entry_from_json(const json& cell, std::size_t vec, std::size_t pos) {
  const auto where = [&]() {
    return "vector " + std::to_string(vec) + ", entry " + std::to_string(pos);
  };
  if (cell.is_number()) {
    return Complex{cell.get<double>(), 0.0};
  }
  if (cell.is_array()) {
    if (cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
      throw ParseError("vector set: entry must be [re, im] at " + where());
    }
    return Complex{cell[0].get<double>(), cell[1].get<double>()};
  }
  throw ParseError("vector set: entry must be a number or [re, im] at " + where());
}

}  // namespace

VectorSet parse_vectors_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("vector set: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("vector set: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw ParseError("vector set: missing unsigned \"dim\"");
  }
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw ParseError("vector set: missing array \"vectors\"");
  }

  VectorSet set;
  set.format = VectorFormat::Json;
  set.dim = doc["dim"].get<std::size_t>();
  if (set.dim == 0) throw ParseError("vector set: dim must be >= 1");

  std::size_t vi = 0;
  for (const json& row : doc["vectors"]) {
    if (!row.is_array() || row.size() != set.dim) {
      throw ParseError("vector set: vector " + std::to_string(vi) + " must have " +
                       std::to_string(set.dim) + " entries");
    }
    std::vector<Complex> entries;
    entries.reserve(set.dim);
    for (std::size_t k = 0; k < set.dim; ++k) {
      entries.push_back(entry_from_json(row[k], vi, k));
    }
    try {
      set.vectors.emplace_back(std::move(entries));
    } catch (const Error& ex) {
      throw ParseError("vector set: vector " + std::to_string(vi) + ": " + ex.what());
    }
    ++vi;
  }
  if (set.vectors.empty()) throw ParseError("vector set: \"vectors\" must be nonempty");
  return set;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    std::size_t a = 0;
    std::size_t b = cell.size();
    while (a < b && std::isspace(static_cast<unsigned char>(cell[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(cell[b - 1]))) --b;
    cells.push_back(cell.substr(a, b - a));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no, std::size_t col) {
  const auto fail = [&]() {
    throw ParseError("vector set: line " + std::to_string(line_no) + ", column " +
                     std::to_string(col + 1) + ": expected a number, got \"" + cell + "\"");
  };
  if (cell.empty()) fail();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    fail();
  }
  if (used != cell.size()) fail();
  return v;
}

}  // namespace

VectorSet parse_vectors_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;

  // Header decides the shape: "re0,im0,..." pairs columns, anything else is real.
  std::vector<std::string> header;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    header = split_csv_line(line);
    break;
  }
  if (header.empty()) throw ParseError("vector set: empty CSV");

  const bool paired = header.size() >= 2 && header.size() % 2 == 0 &&
                      header[0].rfind("re", 0) == 0 && header[1].rfind("im", 0) == 0;
  const std::size_t dim = paired ? header.size() / 2 : header.size();
  if (dim == 0) throw ParseError("vector set: CSV header has no columns");

  VectorSet set;
  set.format = VectorFormat::Csv;
  set.dim = dim;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw ParseError("vector set: line " + std::to_string(line_no) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(header.size()));
    }
    std::vector<Complex> entries(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (paired) {
        entries[k] = Complex{parse_cell(cells[2 * k], line_no, 2 * k),
                             parse_cell(cells[2 * k + 1], line_no, 2 * k + 1)};
      } else {
        entries[k] = Complex{parse_cell(cells[k], line_no, k), 0.0};
      }
    }
    try {
      set.vectors.emplace_back(std::move(entries));
    } catch (const Error& ex) {
      throw ParseError("vector set: line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (set.vectors.empty()) throw ParseError("vector set: CSV has no data rows");
  return set;
}

VectorSet load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("vector set: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();

  const std::string ext = path.extension().string();
  if (ext == ".json") return parse_vectors_json(buf.str());
  if (ext == ".csv") return parse_vectors_csv(buf.str());
  throw ParseError("vector set: unsupported extension \"" + ext + "\" (want .json or .csv)");
}

std::string vectors_to_json(const VectorSet& set) {
  jsonfmt::Writer w;
  w.begin_object();
  w.key("dim").value(static_cast<std::uint64_t>(set.dim));
  w.key("vectors").begin_array();
  for (const CVector& v : set.vectors) {
    std::vector<Complex> entries(v.entries().begin(), v.entries().end());
    w.raw(jsonfmt::complex_array(entries));
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string vectors_to_csv(const VectorSet& set) {
  std::string out;
  for (std::size_t k = 0; k < set.dim; ++k) {
    if (k > 0) out += ',';
    out += "re" + std::to_string(k) + ",im" + std::to_string(k);
  }
  out += '\n';
  for (const CVector& v : set.vectors) {
    for (std::size_t k = 0; k < set.dim; ++k) {
      if (k > 0) out += ',';
      out += jsonfmt::number(v[k].real()) + ',' + jsonfmt::number(v[k].imag());
    }
    out += '\n';
  }
  return out;
}

std::string serialize_vectors(const VectorSet& set) {
  return set.format == VectorFormat::Csv ? vectors_to_csv(set) : vectors_to_json(set) + "\n";
}

void write_vectors(const std::filesystem::path& path, const VectorSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("vector set: cannot write " + path.string());
  out << serialize_vectors(set);
}

}  // namespace schwarzkit
