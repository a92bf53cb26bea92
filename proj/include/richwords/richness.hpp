#pragma once

#include <cstdint>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Distinct palindromic factors of w, including the empty word.
std::uint64_t palindrome_count(const Word& w);

/// True iff w has exactly |w|+1 distinct palindromic factors.
bool is_rich(const Word& w);

/// |w|+1 - palindrome_count(w); zero iff w is rich.
std::uint64_t defect(const Word& w);

/// Every factor of w whose prefix and suffix are consecutive occurrences of p
/// with no occurrence in between, in order of appearance.
/// Throws std::invalid_argument when p is empty or does not occur in w.
std::vector<Word> complete_returns(const Word& w, const Word& p);

/// Richness via the complete-return characterization: every complete return
/// to every palindromic factor is itself a palindrome. Independent of the
/// palindromic-tree path; serves as a cross-checking oracle.
bool is_rich_via_returns(const Word& w);

}  // namespace richwords
