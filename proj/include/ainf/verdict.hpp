#pragma once

#include <string>
#include <vector>

namespace ainf {

struct StageCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  std::vector<StageCheck> stages;

  bool passed() const {
    for (const StageCheck& s : stages)
      if (!s.passed) return false;
    return !stages.empty();
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    stages.push_back(StageCheck{std::move(name), ok, std::move(detail)});
  }
};

}  // namespace ainf
