#include "conway/report.hpp"

#include <sstream>

namespace conway {

void CheckReport::merge(const CheckReport& other) {
  cases += other.cases;
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << cases << " cases, " << checks << " checks, " << failures.size()
      << " failures\n";
  for (const auto& f : failures) {
    out << "  case " << f.case_index << " [" << f.law << "] L=" << f.max_len;
    if (!f.word.empty()) out << " word " << f.word;
    out << "\n    inputs: " << f.inputs << "\n    left:   " << f.left << "\n    right:  " << f.right << "\n";
  }
  out << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace conway
