#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "schwarzkit/core_linalg.hpp"

namespace schwarzkit {

enum class VectorFormat { Json, Csv };

// A batch of same-dimension vectors, as read from disk.
struct VectorSet {
  VectorFormat format = VectorFormat::Json;
  std::size_t dim = 0;
  std::vector<CVector> vectors;
};

// JSON layout: {"dim": n, "vectors": [[[re, im], ...], ...]}. Real files may
// abbreviate an entry to a bare number (imaginary part zero).
VectorSet parse_vectors_json(const std::string& text);

// CSV layout: header "re0,im0,re1,im1,..." (or "x0,x1,..." for real data),
// one vector per subsequent row. The header decides whether columns pair up
// into complex entries.
VectorSet parse_vectors_csv(const std::string& text);

// Dispatches on extension: .json / .csv. Anything else is a ParseError.
VectorSet load_vectors(const std::filesystem::path& path);

// 17-significant-digit emission; parsing the result reproduces the set.
std::string vectors_to_json(const VectorSet& set);
std::string vectors_to_csv(const VectorSet& set);
// In the set's own format.
std::string serialize_vectors(const VectorSet& set);

void write_vectors(const std::filesystem::path& path, const VectorSet& set);

}  // namespace schwarzkit
