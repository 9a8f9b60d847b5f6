#ifndef POLYSPEC_CHECK_HPP
#define POLYSPEC_CHECK_HPP

// Verification verdicts.  Identity checks never throw on mathematical
// failure; they return a Verdict listing each comparison so that callers can
// attribute failures precisely.

#include <string>
#include <vector>

namespace polyspec {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Verdict {
  std::vector<CheckItem> items;

  void record(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }

  void absorb(const Verdict& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  std::size_t fail_count() const {
    std::size_t n = 0;
    for (const auto& it : items)
      if (!it.pass) ++n;
    return n;
  }

  // One-line summary: "12 checks, all pass" or the first failure.
  std::string summary() const {
    if (items.empty()) return "no checks";
    if (all_pass()) return std::to_string(items.size()) + " checks, all pass";
    for (const auto& it : items) {
      if (!it.pass) {
        return std::to_string(fail_count()) + "/" +
               std::to_string(items.size()) + " failed, first: " + it.name +
               (it.detail.empty() ? "" : " (" + it.detail + ")");
      }
    }
    return "";
  }
};

}  // namespace polyspec

#endif  // POLYSPEC_CHECK_HPP
