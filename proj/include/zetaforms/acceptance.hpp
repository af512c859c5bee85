#ifndef ZETAFORMS_ACCEPTANCE_HPP
#define ZETAFORMS_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaforms {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full verification scoreboard, one line per criterion on `live`
// when given. `only` restricts to the listed criterion ids.
std::vector<CriterionResult> run_acceptance(std::ostream* live,
                                            const std::vector<int>& only = {});

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace zetaforms

#endif
