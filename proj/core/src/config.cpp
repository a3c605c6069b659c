// SPDX-License-Identifier: Apache-2.0
#include "flagcube/config.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace flagcube {

Config Config::from_env() {
  Config c;
  if (const char* t = std::getenv("FLAGCUBE_THREADS")) {
    int v = std::stoi(std::string(t));
    if (v < 1) throw std::invalid_argument("FLAGCUBE_THREADS must be >= 1");
    c.threads = v;
  }
  return c;
}

const Config& default_config() {
  static const Config c = Config::from_env();
  return c;
}

}  // namespace flagcube
