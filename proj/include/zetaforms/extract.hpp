#ifndef ZETAFORMS_EXTRACT_HPP
#define ZETAFORMS_EXTRACT_HPP

#include <optional>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Structured family over Q: v_j stacks lambda[i][j] * xi(j+i-1) for
// i = 1..k, so v_j lives in Q^(k*M). Indices into xi are 1-based over
// [1, N+k-1].
struct ExtractionInstance {
  int k = 1;
  int N = 1;
  int M = 1;
  std::vector<std::vector<Rat>> lambda;  // k x N
  std::vector<std::vector<Rat>> xi;      // (N+k-1) x M

  void validate() const;
  const std::vector<Rat>& xi_at(long idx) const { return xi[idx - 1]; }
};

struct SpreadRequest {
  Rat delta = Rat(0);
  int p = 1;
  std::vector<long> m;  // q = m.size()

  int q() const { return static_cast<int>(m.size()); }
};

// Step-type counters, for exercising every branch of the recursion in tests.
struct ExtractStats {
  long base_case = 0;
  long direct_extension = 0;
  long first_main_case = 0;
  long second_main_d0 = 0;
  long second_main_d1 = 0;
  long second_main_d2 = 0;
};

std::vector<std::vector<Rat>> build_vectors(const ExtractionInstance& inst);

// Exact rank over Q by fraction-free elimination.
int rank_Q(const std::vector<std::vector<Rat>>& vectors);

// Produces p indices n_1 < ... < n_p with xi-values linearly independent,
// pairwise distances > delta, and distance > delta from every requested m_j.
// Requires rank(v_1..v_N) > (k+4*delta)(p+q-1); throws CheckFailure when the
// rank precondition fails and never returns a partial answer.
std::vector<long> extract(const ExtractionInstance& inst, const SpreadRequest& req,
                          ExtractStats* stats = nullptr);

// Exhaustive witness search; requires N+k-1 <= 18.
std::optional<std::vector<long>> brute_force(const ExtractionInstance& inst,
                                             const SpreadRequest& req);

// Re-checks the three output conditions exactly.
bool certify(const ExtractionInstance& inst, const SpreadRequest& req,
             const std::vector<long>& result);

}  // namespace zetaforms

#endif
