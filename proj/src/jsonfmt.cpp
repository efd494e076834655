#include "schwarzkit/jsonfmt.hpp"

#include <cmath>
#include <cstdio>

namespace schwarzkit::jsonfmt {

std::string number(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void Writer::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (first_in_scope_.back()) {
      first_in_scope_.back() = false;
    } else {
      out_ += ',';
    }
  }
}

Writer& Writer::begin_object() {
  separate();
  out_ += '{';
  first_in_scope_.push_back(true);
  return *this;
}

Writer& Writer::end_object() {
  out_ += '}';
  first_in_scope_.pop_back();
  return *this;
}

Writer& Writer::begin_array() {
  separate();
  out_ += '[';
  first_in_scope_.push_back(true);
  return *this;
}

Writer& Writer::end_array() {
  out_ += ']';
  first_in_scope_.pop_back();
  return *this;
}

Writer& Writer::key(const std::string& name) {
  separate();
  out_ += '"';
  out_ += escape(name);
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

Writer& Writer::value(double v) {
  separate();
  out_ += number(v);
  return *this;
}

Writer& Writer::value(std::uint64_t v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

Writer& Writer::value(int v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

Writer& Writer::value(bool v) {
  separate();
  out_ += v ? "true" : "false";
  return *this;
}

Writer& Writer::value(const std::string& s) {
  separate();
  out_ += '"';
  out_ += escape(s);
  out_ += '"';
  return *this;
}

Writer& Writer::value_null() {
  separate();
  out_ += "null";
  return *this;
}

Writer& Writer::raw(const std::string& fragment) {
  separate();
  out_ += fragment;
  return *this;
}

std::string complex_array(const std::vector<std::complex<double>>& entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += number(entries[i].real());
    out += ',';
    out += number(entries[i].imag());
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace schwarzkit::jsonfmt
