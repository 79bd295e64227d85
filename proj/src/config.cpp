#include "cubespec/config.hpp"

#include <cstdlib>
#include <string>

namespace cubespec {

namespace {

int read_dense_cap() {
  const char* env = std::getenv("CUBESPEC_MAX_N");
  if (env == nullptr || *env == '\0') return 12;
  try {
    int value = std::stoi(env);
    if (value >= 1) return value;
  } catch (const std::exception&) {
    // fall through to default
  }
  return 12;
}

}  // namespace

int dense_cap() {
  static const int cap = read_dense_cap();
  return cap;
}

int max_dimension() {
  return dense_cap() > 20 ? dense_cap() : 20;
}

}  // namespace cubespec
