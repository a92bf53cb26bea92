#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Thrown when an enumeration would visit more rich words than its budget.
struct budget_error : std::runtime_error {
  budget_error(std::uint64_t explored, std::uint64_t budget)
      : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                           " rich words exceeded after exploring " + std::to_string(explored)),
        nodes_explored(explored) {}
  std::uint64_t nodes_explored;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

/// Exact number of k-ary rich words per length 0..n_max, by depth-first
/// traversal of the prefix-closed rich-word tree with rollback.
/// split_depth > 0 partitions the traversal into independent subtrees that
/// run across `threads` workers; counts merge by addition.
std::vector<std::uint64_t> count_rich(int alphabet_size, int n_max,
                                      std::uint64_t node_budget = kDefaultNodeBudget,
                                      int threads = 1, int split_depth = 8);

/// All length-n words that are non-rich while every proper suffix is rich,
/// in lexicographic order. These carry defect exactly one and are exactly the
/// words that introduce new non-richness in a left-to-right scan, the
/// quantity the counting recurrences subtract.
std::vector<Word> minimal_nonrich(int alphabet_size, int n,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Exponentially decreasing bound on the rich fraction r_k(n)/k^n:
/// (63/64)^floor(n/8) for binary, (1 - k(k-1)(k-2)/k^4)^floor(n/4) otherwise.
/// Requires k >= 2.
Fraction upper_bound_ratio(int alphabet_size, int n);

/// The same bound scaled to a word count: an integer upper bound on r_k(n).
std::uint64_t upper_bound_count(int alphabet_size, int n);

struct RecurrenceReport {
  std::vector<std::int64_t> values;  // the recurrence, exact seeds for n <= 11
  std::vector<std::uint64_t> exact;  // enumerated counts for comparison
  std::vector<int> flagged;          // lengths where the claimed bound fails
};

/// The printed binary upper-bound recurrence
///   r(n) <= 2r(n-1) - 4r(n-8) - 16r(n-9) - 44r(n-10) - 108r(n-11) - 266r(n-12)
/// evaluated as stated and compared against exact counts. The recurrence is
/// reported, not trusted: every length where it falls below the exact count
/// is flagged.
RecurrenceReport upper_bound_recurrence(int n_max,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

/// Lower-bound recurrence lb(n) = lb(n-1) + lb(floor(n/3)), lb(0) = 1.
/// Requires k >= 2 (the bound argument needs two-way extendability).
std::vector<std::uint64_t> lower_bound_recurrence(int alphabet_size, int n_max);

struct CountSeries {
  int alphabet_size = 2;
  std::vector<std::uint64_t> exact;
  std::vector<Fraction> upper_ratio;
  std::vector<std::uint64_t> upper_count;
  std::vector<std::int64_t> upper_recurrence;  // binary only, empty otherwise
  std::vector<std::uint64_t> lower_recurrence;
};

CountSeries build_series(int alphabet_size, int n_max,
                         std::uint64_t node_budget = kDefaultNodeBudget, int threads = 1);

/// CSV with columns n, exact, upper_ratio_times_k_pow_n, lower_recurrence.
void emit_series_csv(const CountSeries& series, std::ostream& os);

}  // namespace richwords
