#include "richwords/eertree.hpp"

#include <stdexcept>

namespace richwords {

Eertree::Eertree(int alphabet_size) : alphabet_(alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in 1..10");
  }
  Node root_neg{};
  root_neg.child.fill(-1);
  root_neg.len = -1;
  root_neg.link = kRootNeg;
  root_neg.first_end = 0;
  Node root_empty = root_neg;
  root_empty.len = 0;
  root_empty.link = kRootNeg;
  nodes_.push_back(root_neg);
  nodes_.push_back(root_empty);
}

std::int32_t Eertree::fit(std::int32_t v, Letter a) const {
  // Pre-push indexing: the candidate palindrome ends at buffer_.back().
  const auto n = static_cast<std::int32_t>(buffer_.size());
  while (true) {
    const std::int32_t len = nodes_[v].len;
    if (len == -1) return v;
    const std::int32_t i = n - 1 - len;
    if (i >= 0 && buffer_[static_cast<std::size_t>(i)] == a) return v;
    v = nodes_[v].link;
  }
}

bool Eertree::push(Letter a) {
  if (a >= alphabet_) throw std::invalid_argument("letter outside the declared alphabet");
  const std::int32_t v = fit(last_, a);
  std::int32_t child = nodes_[v].child[a];
  const bool created = child < 0;
  Journal entry{last_, -1, a, created};
  if (created) {
    std::int32_t link;
    if (nodes_[v].len + 2 == 1) {
      link = kRootEmpty;
    } else {
      const std::int32_t u = fit(nodes_[v].link, a);
      link = nodes_[u].child[a];
    }
    child = static_cast<std::int32_t>(nodes_.size());
    Node nd{};
    nd.child.fill(-1);
    nd.len = nodes_[v].len + 2;
    nd.link = link;
    nd.first_end = static_cast<std::int32_t>(buffer_.size()) + 1;
    nodes_.push_back(nd);
    nodes_[v].child[a] = child;
    entry.parent = v;
  } else {
    ++defect_;
  }
  buffer_.push_back(a);
  last_ = child;
  journal_.push_back(entry);
  return created;
}

void Eertree::undo() {
  if (journal_.empty()) throw std::logic_error("undo on empty buffer");
  const Journal entry = journal_.back();
  journal_.pop_back();
  if (entry.created) {
    nodes_[entry.parent].child[entry.letter] = -1;
    nodes_.pop_back();
  } else {
    --defect_;
  }
  last_ = entry.prev_last;
  buffer_.pop_back();
}

bool Eertree::would_create(Letter a) const {
  if (a >= alphabet_) throw std::invalid_argument("letter outside the declared alphabet");
  const std::int32_t v = fit(last_, a);
  return nodes_[v].child[a] < 0;
}

void Eertree::push_word(const Word& w) {
  for (Letter a : w) push(a);
}

void Eertree::undo_many(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) undo();
}

bool Eertree::last_created() const {
  return !journal_.empty() && journal_.back().created;
}

int Eertree::lpps_length() const {
  if (buffer_.empty()) throw std::logic_error("lpps of the empty word");
  const Node& lps = nodes_[last_];
  if (lps.len == static_cast<std::int32_t>(buffer_.size())) return nodes_[lps.link].len;
  return lps.len;
}

}  // namespace richwords
