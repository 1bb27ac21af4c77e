#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/ext_norm.hpp"

namespace witt {

enum class CaseStatus { Pass, Fail, Inconclusive };
const char* status_name(CaseStatus s);

// One keyed check, aggregated over its samples.
struct CaseResult {
  std::string key;
  CaseStatus status = CaseStatus::Pass;
  long samples = 0;
  long failures = 0;
  // first failure, with both sides as exact exponents where norms are involved
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;  // sorted by key
  double seconds = 0;
  long count(CaseStatus s) const;
  bool ok() const { return count(CaseStatus::Fail) == 0; }
};

struct SuiteConfig {
  // 0: the suite's own list of primes
  long p = 0;
  std::uint64_t seed = 1;
  // overrides the per-group sample counts when positive
  int samples = 0;
  // only groups whose name starts with this prefix
  std::string group;
  std::optional<mpq_class> b;
  int depth = 0;
  int precision = 0;
};

const std::vector<std::string>& suite_names();

// name in suite_names() or "all"; unknown names raise unknown-suite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// Collects keyed checks; exceptions inside a group become failures of that group.
class Recorder {
 public:
  Recorder() = default;
  // groups unrelated to this key prefix are skipped
  explicit Recorder(std::string filter) : filter_(std::move(filter)) {}
  void check(const std::string& key, bool ok, const std::function<std::string()>& detail = {});
  void norm_eq(const std::string& key, const ExtNorm& lhs, const ExtNorm& rhs);
  void norm_le(const std::string& key, const ExtNorm& lhs, const ExtNorm& rhs);
  void inconclusive(const std::string& key, const std::string& why);
  void run_group(const std::string& name, const std::function<void()>& body);
  void merge(CaseResult c);
  std::vector<CaseResult> results() const;

 private:
  CaseResult& at(const std::string& key);
  std::string filter_;
  std::map<std::string, CaseResult> cases_;
};

}  // namespace witt
