#include "richwords/closures.hpp"

#include <algorithm>
#include <stdexcept>

#include "richwords/eertree.hpp"

namespace richwords {

namespace {

Eertree scan(const Word& w) {
  Eertree t(std::max(w.min_alphabet(), 1));
  t.push_word(w);
  return t;
}

Word close_with_suffix(const Word& w, std::size_t suffix_len) {
  // w = v u with |u| = suffix_len; result is v u v~.
  Word out = w;
  for (std::size_t i = w.size() - suffix_len; i-- > 0;) out.push_back(w[i]);
  return out;
}

}  // namespace

Word lps(const Word& w) {
  Eertree t = scan(w);
  return w.suffix(static_cast<std::size_t>(t.lps_length()));
}

Word lpp(const Word& w) { return lps(w.reversed()).reversed(); }

bool lps_unioccurrent(const Word& w) {
  if (w.empty()) return true;
  Eertree t = scan(w);
  return t.last_created();
}

bool lpp_unioccurrent(const Word& w) { return lps_unioccurrent(w.reversed()); }

Word lpps(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lpps of the empty word");
  Eertree t = scan(w);
  return w.suffix(static_cast<std::size_t>(t.lpps_length()));
}

Word right_closure(const Word& w) {
  Eertree t = scan(w);
  return close_with_suffix(w, static_cast<std::size_t>(t.lps_length()));
}

Word left_closure(const Word& w) { return right_closure(w.reversed()); }

Word proper_closure(const Word& w) {
  if (w.empty()) throw std::invalid_argument("proper closure of the empty word");
  Eertree t = scan(w);
  return close_with_suffix(w, static_cast<std::size_t>(t.lpps_length()));
}

}  // namespace richwords
