#include "richwords/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "richwords/eertree.hpp"
#include "richwords/parallel.hpp"
#include "richwords/richness.hpp"

namespace richwords {

namespace {

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in 1..10");
  }
}

// DFS over rich one-letter extensions with rollback. Counts per depth land in
// counts[tree depth]; `explored` guards the budget.
void count_subtree(Eertree& t, int n_max, std::vector<std::uint64_t>& counts,
                   std::atomic<std::uint64_t>& explored, std::uint64_t budget,
                   std::atomic<bool>& abort) {
  const int depth = static_cast<int>(t.size());
  if (depth >= n_max) return;
  for (int a = 0; a < t.alphabet_size(); ++a) {
    if (t.push(static_cast<Letter>(a))) {
      ++counts[depth + 1];
      if (explored.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
        abort.store(true, std::memory_order_relaxed);
      }
      if (abort.load(std::memory_order_relaxed)) {
        t.undo();
        return;
      }
      count_subtree(t, n_max, counts, explored, budget, abort);
    }
    t.undo();
  }
}

void collect_rich(Eertree& t, int depth_left, std::vector<Word>& out) {
  if (depth_left == 0) {
    out.push_back(t.word());
    return;
  }
  for (int a = 0; a < t.alphabet_size(); ++a) {
    if (t.push(static_cast<Letter>(a))) collect_rich(t, depth_left - 1, out);
    t.undo();
  }
}

}  // namespace

std::vector<std::uint64_t> count_rich(int alphabet_size, int n_max, std::uint64_t node_budget,
                                      int threads, int split_depth) {
  check_alphabet(alphabet_size);
  if (n_max < 0) throw std::invalid_argument("length bound must be non-negative");

  std::vector<std::uint64_t> counts(n_max + 1, 0);
  counts[0] = 1;  // the empty word
  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> abort{false};

  if (threads <= 1 || n_max <= split_depth) {
    Eertree t(alphabet_size);
    count_subtree(t, n_max, counts, explored, node_budget, abort);
  } else {
    // Counts up to the split depth come from the seed pass; each seed then
    // roots an independent subtree with its own tree and rollback.
    Eertree t(alphabet_size);
    count_subtree(t, split_depth, counts, explored, node_budget, abort);
    std::vector<Word> seeds;
    collect_rich(t, split_depth, seeds);
    std::vector<std::vector<std::uint64_t>> partial(
        std::max(1, threads), std::vector<std::uint64_t>(n_max + 1, 0));
    parallel_chunks(seeds.size(), threads, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
      Eertree sub(alphabet_size);
      for (std::uint64_t i = lo; i < hi && !abort.load(std::memory_order_relaxed); ++i) {
        sub.push_word(seeds[i]);
        count_subtree(sub, n_max, partial[chunk], explored, node_budget, abort);
        sub.undo_many(sub.size());
      }
    });
    for (const auto& p : partial) {
      for (int n = 0; n <= n_max; ++n) counts[n] += p[n];
    }
  }
  if (abort.load()) throw budget_error(explored.load(), node_budget);
  return counts;
}

std::vector<Word> minimal_nonrich(int alphabet_size, int n, std::uint64_t node_budget) {
  check_alphabet(alphabet_size);
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<Word> out;
  if (n == 0) return out;

  std::uint64_t explored = 0;
  Eertree t(alphabet_size);
  // A word is minimal non-rich iff it is non-rich while every proper suffix
  // is rich, i.e. reversed it reads as a rich (n-1)-prefix whose last push
  // fails. Walk rich words of length n-1 and record the reversed failures.
  const auto dfs = [&](auto&& self) -> void {
    if (++explored > node_budget) throw budget_error(explored, node_budget);
    const int depth = static_cast<int>(t.size());
    for (int a = 0; a < alphabet_size; ++a) {
      const bool created = t.push(static_cast<Letter>(a));
      if (depth + 1 == n) {
        if (!created) out.push_back(t.word().reversed());
      } else if (created) {
        self(self);
      }
      t.undo();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("bound series overflows 64-bit arithmetic at this length");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
  std::uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) v = checked_mul(v, base);
  return v;
}

}  // namespace

Fraction upper_bound_ratio(int alphabet_size, int n) {
  check_alphabet(alphabet_size);
  if (alphabet_size < 2) throw std::invalid_argument("the ratio bound needs at least two letters");
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  const std::uint64_t k = alphabet_size;
  if (alphabet_size == 2) return {checked_pow(63, n / 8), checked_pow(64, n / 8)};
  const std::uint64_t den = k * k * k * k;
  return {checked_pow(den - k * (k - 1) * (k - 2), n / 4), checked_pow(den, n / 4)};
}

std::uint64_t upper_bound_count(int alphabet_size, int n) {
  check_alphabet(alphabet_size);
  if (alphabet_size < 2) throw std::invalid_argument("the count bound needs at least two letters");
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  const std::uint64_t k = alphabet_size;
  // ratio * k^n is an integer: 63^e * 2^(n-6e) for binary with e = n/8,
  // (k^4 - k(k-1)(k-2))^e * k^(n-4e) otherwise with e = n/4.
  if (alphabet_size == 2) {
    const int e = n / 8;
    return checked_mul(checked_pow(63, e), checked_pow(2, n - 6 * e));
  }
  const int e = n / 4;
  return checked_mul(checked_pow(k * k * k * k - k * (k - 1) * (k - 2), e),
                     checked_pow(k, n - 4 * e));
}

RecurrenceReport upper_bound_recurrence(int n_max, std::uint64_t node_budget) {
  if (n_max < 0) throw std::invalid_argument("length must be non-negative");
  RecurrenceReport report;
  report.exact = count_rich(2, n_max, node_budget);
  report.values.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n <= 11) {
      report.values[n] = static_cast<std::int64_t>(report.exact[n]);
    } else {
      report.values[n] = 2 * report.values[n - 1] - 4 * report.values[n - 8] -
                         16 * report.values[n - 9] - 44 * report.values[n - 10] -
                         108 * report.values[n - 11] - 266 * report.values[n - 12];
    }
    if (report.values[n] < static_cast<std::int64_t>(report.exact[n])) {
      report.flagged.push_back(n);
    }
  }
  return report;
}

std::vector<std::uint64_t> lower_bound_recurrence(int alphabet_size, int n_max) {
  check_alphabet(alphabet_size);
  if (alphabet_size < 2) throw std::invalid_argument("the lower bound needs at least two letters");
  if (n_max < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<std::uint64_t> lb(n_max + 1);
  lb[0] = 1;
  for (int n = 1; n <= n_max; ++n) lb[n] = lb[n - 1] + lb[n / 3];
  return lb;
}

CountSeries build_series(int alphabet_size, int n_max, std::uint64_t node_budget, int threads) {
  CountSeries s;
  s.alphabet_size = alphabet_size;
  s.exact = count_rich(alphabet_size, n_max, node_budget, threads);
  if (alphabet_size >= 2) {
    for (int n = 0; n <= n_max; ++n) {
      s.upper_ratio.push_back(upper_bound_ratio(alphabet_size, n));
      s.upper_count.push_back(upper_bound_count(alphabet_size, n));
    }
    s.lower_recurrence = lower_bound_recurrence(alphabet_size, n_max);
    if (alphabet_size == 2) {
      s.upper_recurrence = upper_bound_recurrence(n_max, node_budget).values;
    }
  }
  return s;
}

void emit_series_csv(const CountSeries& series, std::ostream& os) {
  os << "n,exact,upper_ratio_times_k_pow_n,lower_recurrence\n";
  for (std::size_t n = 0; n < series.exact.size(); ++n) {
    os << n << ',' << series.exact[n] << ',';
    if (n < series.upper_count.size()) os << series.upper_count[n];
    os << ',';
    if (n < series.lower_recurrence.size()) os << series.lower_recurrence[n];
    os << '\n';
  }
}

}  // namespace richwords
