#include "chaoscrypt/key.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

constexpr double kChenCMin = 20.0;
constexpr double kChenCMax = 28.4;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_integer(std::string_view name, std::string_view value,
                            std::uint64_t max) {
  std::string buf(value);
  errno = 0;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(buf.c_str(), &end, 10);
  if (buf.empty() || end != buf.c_str() + buf.size() || buf.front() == '-') {
    throw KeyFileError("key file: " + std::string(name) + " must be a positive integer, got '" +
                       buf + "'");
  }
  if (errno == ERANGE || parsed > max) {
    throw KeyFileError("key file: " + std::string(name) + " out of range: '" + buf + "'");
  }
  return parsed;
}

double parse_real(std::string_view name, std::string_view value) {
  std::string buf(value);
  errno = 0;
  char* end = nullptr;
  const double parsed = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw KeyFileError("key file: " + std::string(name) + " must be a decimal real, got '" +
                       buf + "'");
  }
  if (errno == ERANGE) {
    throw KeyFileError("key file: " + std::string(name) + " out of range: '" + buf + "'");
  }
  return parsed;
}

}  // namespace

void validate_key(const SecretKey& key) {
  if (key.p < 1 || key.q < 1) {
    throw std::invalid_argument("cat-map parameters p and q must be positive integers");
  }
  if (key.n < 1) {
    throw std::invalid_argument("cat-map iteration count n must be at least 1");
  }
  if (!(key.c >= kChenCMin && key.c <= kChenCMax)) {
    throw std::invalid_argument("Chen parameter c must lie in [20, 28.4]");
  }
}

SecretKey parse_key_text(std::string_view text) {
  SecretKey key;
  std::set<std::string> seen;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw KeyFileError("key file line " + std::to_string(line_no) +
                         ": expected name=value, got '" + std::string(line) + "'");
    }
    const std::string name(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    if (!seen.insert(name).second) {
      throw KeyFileError("key file line " + std::to_string(line_no) + ": duplicate entry '" +
                         name + "'");
    }

    if (name == "p") {
      key.p = static_cast<std::uint32_t>(parse_integer(name, value, UINT32_MAX));
    } else if (name == "q") {
      key.q = static_cast<std::uint32_t>(parse_integer(name, value, UINT32_MAX));
    } else if (name == "n") {
      key.n = parse_integer(name, value, UINT64_MAX);
    } else if (name == "x0") {
      key.x0 = parse_real(name, value);
    } else if (name == "y0") {
      key.y0 = parse_real(name, value);
    } else if (name == "z0") {
      key.z0 = parse_real(name, value);
    } else if (name == "c") {
      key.c = parse_real(name, value);
    } else {
      throw KeyFileError("key file line " + std::to_string(line_no) + ": unknown name '" +
                         name + "'");
    }
  }

  for (const char* required : {"p", "q", "n", "x0", "y0", "z0", "c"}) {
    if (!seen.contains(required)) {
      throw KeyFileError(std::string("key file: missing entry '") + required + "'");
    }
  }

  try {
    validate_key(key);
  } catch (const std::invalid_argument& e) {
    throw KeyFileError(std::string("key file: ") + e.what());
  }
  return key;
}

SecretKey load_key_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw KeyFileError("cannot open key file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_text(buf.str());
}

std::string format_key_text(const SecretKey& key) {
  char real[32];
  std::string out;
  out += "p=" + std::to_string(key.p) + "\n";
  out += "q=" + std::to_string(key.q) + "\n";
  out += "n=" + std::to_string(key.n) + "\n";
  for (const auto& [name, value] :
       {std::pair{"x0", key.x0}, {"y0", key.y0}, {"z0", key.z0}, {"c", key.c}}) {
    std::snprintf(real, sizeof(real), "%.17g", value);
    out += std::string(name) + "=" + real + "\n";
  }
  return out;
}

}  // namespace chaoscrypt
