#pragma once

#include <cstdint>
#include <set>

#include "richwords/word.hpp"

// Brute-force reference implementations. They share no code with the
// palindromic-tree path and exist to cross-check it; they also back the
// operations where a direct scan is the natural algorithm.
namespace richwords::naive {

/// All distinct non-empty palindromic factors of w.
std::set<Word> palindromic_factors(const Word& w);

/// Number of distinct palindromic factors, including the empty word.
std::uint64_t palindrome_count(const Word& w);

bool is_rich(const Word& w);

Word lps(const Word& w);  // longest palindromic suffix, scan-based
Word lpp(const Word& w);  // longest palindromic prefix, scan-based

}  // namespace richwords::naive
