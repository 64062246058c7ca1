#pragma once

#include <string>
#include <vector>

namespace rttkit {

/// Outcome of one exact identity check. `anchor` names the identity being
/// tested (e.g. "rrt2", "zm-comF"); `label` pins the instance (indices etc.).
struct Check {
  std::string anchor;
  std::string label;
  bool passed = false;
  std::string detail;
};

class CheckList {
 public:
  void add(std::string anchor, std::string label, bool passed, std::string detail = {});
  void append(const CheckList& other);

  bool passed() const;
  const Check* first_failure() const;
  const std::vector<Check>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace rttkit
