#pragma once

#include "richwords/word.hpp"

namespace richwords {

/// Longest palindromic suffix of w (possibly w itself; empty for the empty word).
Word lps(const Word& w);

/// Longest palindromic prefix of w.
Word lpp(const Word& w);

/// Whether lps(w) occurs exactly once in w. Rich words always answer true.
bool lps_unioccurrent(const Word& w);
bool lpp_unioccurrent(const Word& w);

/// Longest palindromic suffix strictly shorter than w, possibly empty.
/// Throws std::invalid_argument on the empty word.
Word lpps(const Word& w);

/// Shortest palindrome with w as a prefix: v u v~ where w = vu, u = lps(w).
Word right_closure(const Word& w);

/// Shortest palindrome with w as a suffix.
Word left_closure(const Word& w);

/// As right_closure but with u = lpps(w); strictly lengthens palindromes.
/// Throws std::invalid_argument on the empty word.
Word proper_closure(const Word& w);

}  // namespace richwords
