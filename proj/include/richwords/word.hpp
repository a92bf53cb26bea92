#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace richwords {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 10;

inline char letter_to_char(Letter a) { return static_cast<char>('0' + a); }

/// A finite word over the digit alphabet {0, ..., 9}. Immutable value type
/// except for push_back/pop_back, which exist for incremental builders.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Parses an ASCII digit string; the empty string is the empty word.
  /// Throws std::invalid_argument on any non-digit character.
  static Word parse(std::string_view digits);

  std::string str() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter a) { letters_.push_back(a); }
  void pop_back() { letters_.pop_back(); }

  Word reversed() const;
  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix(std::size_t len) const { return factor(size() - len, len); }

  std::size_t count(Letter a) const;     // |w|_a
  int min_alphabet() const;              // max letter + 1, 0 for the empty word
  std::vector<Letter> alphabet() const;  // letters occurring in the word, ascending
  std::size_t max_run(Letter a) const;   // length of the longest a^k factor

  bool contains(const Word& f) const;
  std::vector<std::size_t> occurrences(const Word& f) const;
  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;

  friend Word operator+(const Word& a, const Word& b);
  Word& operator+=(const Word& b);

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word repeat(const Word& u, std::size_t times);
bool is_palindrome(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace richwords

template <>
struct std::hash<richwords::Word> {
  std::size_t operator()(const richwords::Word& w) const noexcept;
};
