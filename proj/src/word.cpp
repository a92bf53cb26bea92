#include "richwords/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace richwords {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a >= kMaxAlphabet) throw std::invalid_argument("letter out of range 0..9");
  }
}

Word Word::parse(std::string_view digits) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("invalid character in word: '") + c + "'");
    }
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(letter_to_char(a));
  return s;
}

Word Word::reversed() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  return Word(std::move(rev));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("factor out of range");
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::size_t Word::count(Letter a) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

int Word::min_alphabet() const {
  int m = 0;
  for (Letter a : letters_) m = std::max(m, a + 1);
  return m;
}

std::vector<Letter> Word::alphabet() const {
  bool seen[kMaxAlphabet] = {};
  for (Letter a : letters_) seen[a] = true;
  std::vector<Letter> out;
  for (int a = 0; a < kMaxAlphabet; ++a) {
    if (seen[a]) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

std::size_t Word::max_run(Letter a) const {
  std::size_t best = 0, run = 0;
  for (Letter x : letters_) {
    run = (x == a) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

bool Word::contains(const Word& f) const {
  return std::search(letters_.begin(), letters_.end(), f.letters_.begin(), f.letters_.end()) !=
         letters_.end();
}

std::vector<std::size_t> Word::occurrences(const Word& f) const {
  std::vector<std::size_t> out;
  if (f.empty() || f.size() > size()) return out;
  auto it = letters_.begin();
  while (true) {
    it = std::search(it, letters_.end(), f.letters_.begin(), f.letters_.end());
    if (it == letters_.end()) break;
    out.push_back(static_cast<std::size_t>(it - letters_.begin()));
    ++it;
  }
  return out;
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& s) const {
  return s.size() <= size() &&
         std::equal(s.letters_.rbegin(), s.letters_.rend(), letters_.rbegin());
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word& Word::operator+=(const Word& b) {
  letters_.insert(letters_.end(), b.letters_.begin(), b.letters_.end());
  return *this;
}

Word repeat(const Word& u, std::size_t times) {
  std::vector<Letter> out;
  out.reserve(u.size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    out.insert(out.end(), u.letters().begin(), u.letters().end());
  }
  return Word(std::move(out));
}

bool is_palindrome(const Word& w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace richwords

std::size_t std::hash<richwords::Word>::operator()(const richwords::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (richwords::Letter a : w.letters()) {
    h ^= a;
    h *= 1099511628211ull;
  }
  return h;
}
