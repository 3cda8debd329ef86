#pragma once

// Helpers shared by the test binaries: fixture readers, naive reference
// implementations that avoid the library code paths, and seeded generators.

#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "abelian3/arith.hpp"

namespace support {

using abelian3::u64;

inline std::string data_path(const std::string& name) {
  return std::string(ABELIAN3_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The fixtures hold no quoted fields, so splitting on ',' is enough.
inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    for (;;) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  if (!rows.empty()) rows.erase(rows.begin());  // header
  return rows;
}

inline std::map<u64, u64> table1() {
  std::map<u64, u64> out;
  for (const auto& row : read_csv(data_path("table1.csv"))) {
    out[std::stoull(row[0])] = std::stoull(row[1]);
  }
  return out;
}

inline std::map<unsigned, std::string> table2() {
  std::map<unsigned, std::string> out;
  for (const auto& row : read_csv(data_path("table2.csv"))) {
    out[static_cast<unsigned>(std::stoul(row[0]))] = row[1];
  }
  return out;
}

inline std::map<std::tuple<unsigned, unsigned, unsigned>, std::string> table3() {
  std::map<std::tuple<unsigned, unsigned, unsigned>, std::string> out;
  for (const auto& row : read_csv(data_path("table3.csv"))) {
    out[{static_cast<unsigned>(std::stoul(row[0])), static_cast<unsigned>(std::stoul(row[1])),
         static_cast<unsigned>(std::stoul(row[2]))}] = row[3];
  }
  return out;
}

// Naive references: loops over all candidates, nothing shared with arith.
inline u64 naive_tau(u64 n) {
  u64 count = 0;
  for (u64 d = 1; d <= n; ++d) count += n % d == 0;
  return count;
}

inline u64 naive_phi(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

inline bool naive_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<u64> naive_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Fixed-seed generator for the property tests.
class Rng {
 public:
  explicit Rng(u64 seed) : engine_(seed) {}
  u64 uniform(u64 lo, u64 hi) {
    return std::uniform_int_distribution<u64>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace support
