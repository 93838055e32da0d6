#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suites {

struct Options {
  std::uint64_t seed = 20240917;
  int max_len = 8;  // wang, length
  int n = 0;        // 0: every supported rank
};

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Names in criterion order.
const std::vector<std::string>& names();
// Throws std::invalid_argument for an unknown name.
Outcome run(const std::string& name, const Options& opt);

}  // namespace suites
