#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace schwarzkit::jsonfmt {

// Deterministic JSON emission with numbers printed at 17 significant digits
// (round-trip exact for doubles). Keys are emitted in the order the caller
// writes them, so equal in-memory values serialize to identical bytes.

std::string number(double v);

class Writer {
 public:
  Writer& begin_object();
  Writer& end_object();
  Writer& begin_array();
  Writer& end_array();

  Writer& key(const std::string& name);
  Writer& value(double v);
  Writer& value(std::uint64_t v);
  Writer& value(int v);
  Writer& value(bool v);
  Writer& value(const std::string& s);
  Writer& value_null();
  // Raw splice of a pre-serialized JSON fragment.
  Writer& raw(const std::string& fragment);

  const std::string& str() const { return out_; }

 private:
  void separate();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

std::string escape(const std::string& s);

// [[re, im], ...] for a span of complex entries.
std::string complex_array(const std::vector<std::complex<double>>& entries);

}  // namespace schwarzkit::jsonfmt
