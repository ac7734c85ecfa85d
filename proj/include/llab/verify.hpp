#pragma once

#include <memory>
#include <string>
#include <vector>

#include "llab/io.hpp"

namespace llab {

struct VerifyTag {
  std::string id;    // stable identifier used on the command line and in reports
  std::string name;  // what the property says
};

/// every property of the suite, in report order
const std::vector<VerifyTag>& verify_tags();

struct VerifyOptions {
  std::size_t axiom_len = 4;  // 0 skips the axiom checks
  std::size_t word_len = 3;   // homomorphism / projection checks
  std::vector<std::string> only;  // restrict to these tag ids (empty = all)
};

struct TagResult {
  std::string id, name;
  bool passed = true;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<TagResult> results;
  bool passed() const;
};

SuiteReport run_verify_suite(std::shared_ptr<const FiniteGroup> G, int p, const VerifyOptions& opt = {});
Json suite_json(const SuiteReport& r);
std::string suite_text(const SuiteReport& r);

/// G|_{F^c}, or its quotient by Theta when that restriction is not proper
LocalityPtr proper_baseline(const GroupSetting& gs);

}  // namespace llab
