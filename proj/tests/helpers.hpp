#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "mmadf/io.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(MMADF_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline mmadf::MmaFramework load_mma(const std::string& name) {
  return std::get<mmadf::MmaFramework>(mmadf::parse(read_data(name)));
}

inline mmadf::AdfFramework load_adf(const std::string& name) {
  return std::get<mmadf::AdfFramework>(mmadf::parse(read_data(name)));
}

inline mmadf::ArgumentId id(const char* name) { return mmadf::ArgumentId(name); }

}  // namespace testing
