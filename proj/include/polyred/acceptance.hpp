#ifndef POLYRED_ACCEPTANCE_HPP
#define POLYRED_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polyred::acceptance {

inline constexpr int kCriterionCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

struct SubCheck {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<SubCheck> subchecks;
};

/// Throws std::out_of_range for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

}  // namespace polyred::acceptance

#endif  // POLYRED_ACCEPTANCE_HPP
