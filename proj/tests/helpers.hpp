#pragma once

#include <string>
#include <vector>

#include "fcc/fcc.hpp"
#include "oracles.hpp"

namespace testutil {

inline fcc::Word W(int s, std::vector<fcc::Symbol> v) { return fcc::Word(fcc::RingParams::make(s), std::move(v)); }

inline oracle::Vec vec(const fcc::Word& w) { return oracle::Vec(w.symbols().begin(), w.symbols().end()); }

inline fcc::Word word(const oracle::Vec& v, int s) {
  return fcc::Word(fcc::RingParams::make(s), std::vector<fcc::Symbol>(v.begin(), v.end()));
}

inline std::string data_path(const std::string& name) { return std::string(FCC_DATA_DIR) + "/" + name; }

inline fcc::FunctionSpec load_table(const std::string& name, int s) {
  return fcc::parse_table_function(fcc::read_file(data_path(name)), fcc::RingParams::make(s));
}

inline fcc::FunctionSpec load_linear(const std::string& name) {
  return fcc::FunctionSpec::linear(fcc::parse_matrix(fcc::read_file(data_path(name))));
}

}  // namespace testutil
