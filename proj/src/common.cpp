#include "common.hpp"

#include <cstdlib>

namespace jclean {

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw input_error("cap '" + key + "': expected a non-negative integer, got '" + value + "'");
  }
}

}  // namespace

void Caps::apply(const std::string& overrides) {
  std::size_t start = 0;
  while (start <= overrides.size()) {
    std::size_t end = overrides.find(',', start);
    if (end == std::string::npos) end = overrides.size();
    std::string item = overrides.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw input_error("cap override '" + item + "': expected key=value");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    std::uint64_t v = parse_u64(key, value);
    if (key == "axiom") axiom_cap = static_cast<std::uint32_t>(v);
    else if (key == "analysis") analysis_cap = static_cast<std::uint32_t>(v);
    else if (key == "enum") enum_cap = v;
    else if (key == "similarity") similarity_cap = static_cast<std::uint32_t>(v);
    else if (key == "sample") sample_size = static_cast<std::uint32_t>(v);
    else if (key == "seed") seed = v;
    else if (key == "precision") series_precision = static_cast<std::uint32_t>(v);
    else if (key == "series-exhaustive") series_exhaustive_cap = v;
    else throw input_error("unknown cap '" + key + "'");
  }
}

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("JCLEAN_CAPS")) caps.apply(env);
  return caps;
}

}  // namespace jclean
