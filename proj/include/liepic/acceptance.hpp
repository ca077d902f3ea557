#pragma once

#include <functional>
#include <string>
#include <vector>

namespace liepic::acceptance {

enum class Level { Quick, Full };

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct Check {
  int id;
  std::string name;
  bool quick;  // part of the quick battery
  std::function<std::string(int jobs)> run;  // returns a summary; throws on failure
};

/// The twelve acceptance criteria, in order.
const std::vector<Check>& checks();

/// Runs the battery; `on_result` (if set) is called after each check.
std::vector<CheckResult> run(Level level, int jobs = 0,
                             const std::function<void(const CheckResult&)>& on_result = {});

std::string format(const CheckResult& r);

}  // namespace liepic::acceptance
