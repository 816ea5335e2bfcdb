#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fh {

// Deterministic check report rendered as text or JSON; embeds the seed and
// the configuration hash so reruns are byte-comparable.
class Report {
 public:
  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool allPass() const;
  size_t size() const { return entries_.size(); }

  std::string renderText(uint64_t seed, uint64_t configHash) const;
  std::string renderJson(uint64_t seed, uint64_t configHash) const;

 private:
  struct Entry {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Entry> entries_;
};

}  // namespace fh
