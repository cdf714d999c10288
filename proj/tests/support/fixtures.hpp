#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef AGI_FIXTURE_DIR
#error "AGI_FIXTURE_DIR must point at the fixtures directory"
#endif

inline std::string fixture_path(const std::string& name) { return std::string(AGI_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) {
    throw std::runtime_error("missing fixture " + name);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}
