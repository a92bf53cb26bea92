#include "richwords/richness.hpp"

#include <algorithm>
#include <stdexcept>

#include "richwords/eertree.hpp"
#include "richwords/naive.hpp"

namespace richwords {

namespace {

int scan_alphabet(const Word& w) { return std::max(w.min_alphabet(), 1); }

}  // namespace

std::uint64_t palindrome_count(const Word& w) {
  Eertree t(scan_alphabet(w));
  t.push_word(w);
  return t.palindrome_count();
}

bool is_rich(const Word& w) {
  Eertree t(scan_alphabet(w));
  for (Letter a : w) {
    if (!t.push(a)) return false;
  }
  return true;
}

std::uint64_t defect(const Word& w) {
  Eertree t(scan_alphabet(w));
  t.push_word(w);
  return t.defect();
}

std::vector<Word> complete_returns(const Word& w, const Word& p) {
  if (p.empty()) throw std::invalid_argument("complete returns to the empty word");
  const std::vector<std::size_t> occ = w.occurrences(p);
  if (occ.empty()) throw std::invalid_argument("factor does not occur in the word");
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    out.push_back(w.factor(occ[i], occ[i + 1] + p.size() - occ[i]));
  }
  return out;
}

bool is_rich_via_returns(const Word& w) {
  for (const Word& p : naive::palindromic_factors(w)) {
    for (const Word& r : complete_returns(w, p)) {
      if (!is_palindrome(r)) return false;
    }
  }
  return true;
}

}  // namespace richwords
