#include "rttkit/verdict.hpp"

#include <algorithm>

namespace rttkit {

void CheckList::add(std::string anchor, std::string label, bool passed, std::string detail) {
  checks_.push_back({std::move(anchor), std::move(label), passed, std::move(detail)});
}

void CheckList::append(const CheckList& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool CheckList::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckList::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string CheckList::summary() const {
  const Check* f = first_failure();
  if (!f) return std::to_string(checks_.size()) + " checks passed";
  std::string s = f->anchor + " failed at " + f->label;
  if (!f->detail.empty()) s += ": " + f->detail;
  return s;
}

}  // namespace rttkit
