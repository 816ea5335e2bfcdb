#include "frobhecke/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fh {

void Report::add(const std::string& name, bool pass,
                 const std::string& detail) {
  entries_.push_back({name, pass, detail});
}

bool Report::allPass() const {
  for (auto& e : entries_)
    if (!e.pass) return false;
  return true;
}

namespace {
std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}
}  // namespace

std::string Report::renderText(uint64_t seed, uint64_t configHash) const {
  std::ostringstream os;
  os << "seed " << seed << " config " << hex64(configHash) << "\n";
  size_t passed = 0;
  for (auto& e : entries_) {
    os << (e.pass ? "PASS " : "FAIL ") << e.name;
    if (!e.detail.empty()) os << ": " << e.detail;
    os << "\n";
    if (e.pass) ++passed;
  }
  os << passed << "/" << entries_.size() << " checks passed\n";
  return os.str();
}

std::string Report::renderJson(uint64_t seed, uint64_t configHash) const {
  nlohmann::json j;
  j["seed"] = seed;
  j["config"] = hex64(configHash);
  j["all_pass"] = allPass();
  j["checks"] = nlohmann::json::array();
  for (auto& e : entries_) {
    nlohmann::json c;
    c["name"] = e.name;
    c["pass"] = e.pass;
    c["detail"] = e.detail;
    j["checks"].push_back(c);
  }
  return j.dump(2) + "\n";
}

}  // namespace fh
