#include "richwords/naive.hpp"

namespace richwords::naive {

std::set<Word> palindromic_factors(const Word& w) {
  std::set<Word> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len = 1; len <= w.size() - pos; ++len) {
      Word f = w.factor(pos, len);
      if (is_palindrome(f)) out.insert(std::move(f));
    }
  }
  return out;
}

std::uint64_t palindrome_count(const Word& w) { return palindromic_factors(w).size() + 1; }

bool is_rich(const Word& w) { return palindrome_count(w) == w.size() + 1; }

Word lps(const Word& w) {
  for (std::size_t len = w.size(); len > 0; --len) {
    Word s = w.suffix(len);
    if (is_palindrome(s)) return s;
  }
  return Word();
}

Word lpp(const Word& w) {
  for (std::size_t len = w.size(); len > 0; --len) {
    Word p = w.prefix(len);
    if (is_palindrome(p)) return p;
  }
  return Word();
}

}  // namespace richwords::naive
