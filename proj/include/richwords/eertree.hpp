#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Palindromic tree over a fixed alphabet with exact LIFO rollback.
///
/// One node per distinct non-empty palindromic factor of the buffered word,
/// plus the two conventional roots of length -1 and 0. A push creates at most
/// one node and touches at most one child edge, so a small journal entry per
/// push is enough to undo it exactly.
///
/// A push reports whether it created a node, i.e. whether the longest
/// palindromic suffix of the new buffer occurs there for the first time.
/// A word is rich iff every push of a left-to-right scan reports true.
class Eertree {
 public:
  explicit Eertree(int alphabet_size);

  /// Appends a letter. Returns true iff a new palindromic factor appeared.
  /// Throws std::invalid_argument when the letter is outside the alphabet.
  bool push(Letter a);

  /// Reverts the most recent push. Throws std::logic_error on empty buffer.
  void undo();

  /// Whether push(a) would create a new palindromic factor. No mutation.
  bool would_create(Letter a) const;

  void push_word(const Word& w);
  void undo_many(std::size_t n);

  int alphabet_size() const { return alphabet_; }
  std::size_t size() const { return buffer_.size(); }
  const std::vector<Letter>& buffer() const { return buffer_; }
  Word word() const { return Word(buffer_); }

  /// Distinct palindromic factors of the buffer, including the empty word.
  std::uint64_t palindrome_count() const { return nodes_.size() - 1; }

  /// size()+1 - palindrome_count(); zero iff the buffer is rich.
  std::uint64_t defect() const { return defect_; }

  /// True iff the most recent push created a node, i.e. the longest
  /// palindromic suffix of the buffer is unioccurrent in it.
  bool last_created() const;

  int lps_length() const { return nodes_[last_].len; }

  /// Length of the longest palindromic suffix strictly shorter than the
  /// buffer itself (the empty word counts). Requires a non-empty buffer.
  int lpps_length() const;

 private:
  struct Node {
    std::array<std::int32_t, kMaxAlphabet> child;
    std::int32_t len;
    std::int32_t link;
    std::int32_t first_end;  // buffer length right after this node was created
  };

  struct Journal {
    std::int32_t prev_last;
    std::int32_t parent;  // node that received a child edge, -1 if none
    Letter letter;
    bool created;
  };

  static constexpr std::int32_t kRootNeg = 0;    // length -1
  static constexpr std::int32_t kRootEmpty = 1;  // length 0

  // Longest suffix palindrome in the link chain of v that letter a extends.
  std::int32_t fit(std::int32_t v, Letter a) const;

  std::vector<Node> nodes_;
  std::vector<Letter> buffer_;
  std::vector<Journal> journal_;
  std::int32_t last_ = kRootEmpty;
  std::uint64_t defect_ = 0;
  int alphabet_;
};

}  // namespace richwords
