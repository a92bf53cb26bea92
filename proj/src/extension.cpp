#include "richwords/extension.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "richwords/closures.hpp"
#include "richwords/naive.hpp"
#include "richwords/richness.hpp"

namespace richwords {

namespace {

int checked_alphabet(const Word& w, int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in 1..10");
  }
  if (w.min_alphabet() > alphabet_size) {
    throw std::invalid_argument("word uses letters outside the declared alphabet");
  }
  return alphabet_size;
}

// Builds a tree for w, verifying richness along the way.
Eertree rich_scan(const Word& w, int alphabet_size) {
  Eertree t(checked_alphabet(w, alphabet_size));
  for (Letter a : w) {
    if (!t.push(a)) throw std::invalid_argument("input word is not rich");
  }
  return t;
}

std::vector<Letter> branch_letters(const Eertree& t) {
  std::vector<Letter> out;
  for (int a = 0; a < t.alphabet_size(); ++a) {
    if (t.would_create(static_cast<Letter>(a))) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

std::size_t trailing_run(const std::vector<Letter>& buf, Letter a) {
  std::size_t run = 0;
  for (auto it = buf.rbegin(); it != buf.rend() && *it == a; ++it) ++run;
  return run;
}

// Extends the rich buffer through proper palindromic closures, letter by
// letter, until a^power first becomes a suffix. Every push must create a new
// palindrome (closures of rich words stay rich). Returns false when more than
// `cap` letters would be appended.
bool chase_power_suffix(Eertree& t, Letter a, std::size_t power, std::size_t cap) {
  std::size_t run = trailing_run(t.buffer(), a);
  if (run >= power) return true;
  std::size_t appended = 0;
  while (true) {
    // Snapshot the current proper closure: append the reversal of the prefix
    // in front of the longest proper palindromic suffix.
    const std::size_t prefix_len = t.size() - static_cast<std::size_t>(t.lpps_length());
    for (std::size_t step = 0; step < prefix_len; ++step) {
      const Letter c = t.buffer()[prefix_len - 1 - step];
      if (++appended > cap) return false;
      if (!t.push(c)) throw std::logic_error("proper closure of a rich word left richness");
      run = (c == a) ? run + 1 : 0;
      if (run >= power) return true;
    }
  }
}

}  // namespace

std::vector<Letter> rich_extension_letters(const Word& w, Side side, int alphabet_size) {
  const Word oriented = (side == Side::Right) ? w : w.reversed();
  Eertree t = rich_scan(oriented, alphabet_size);
  return branch_letters(t);
}

std::vector<Letter> compulsory_chain(const Word& w, int alphabet_size) {
  if (w.alphabet().size() < 2) throw std::invalid_argument("compulsory chain needs a non-unary word");
  Eertree t = rich_scan(w, alphabet_size);
  const std::size_t cap = 2 * w.size() + 2;
  std::vector<Letter> chain;
  while (true) {
    const std::vector<Letter> letters = branch_letters(t);
    if (letters.empty()) {
      throw std::logic_error("rich word with no rich extension letter");
    }
    if (letters.size() > 1) break;
    t.push(letters.front());
    chain.push_back(letters.front());
    if (chain.size() > cap) throw std::logic_error("compulsory chain exceeded its bound");
  }
  return chain;
}

ExtensionResult eventually_extendable_in(const Word& w, int ways, std::uint64_t depth_limit,
                                         int alphabet_size) {
  if (ways < 1) throw std::invalid_argument("ways must be at least 1");
  Eertree t = rich_scan(w, alphabet_size);

  ExtensionResult result;
  result.depth_limit = depth_limit;

  // Iterative deepening visits candidates in breadth-first order with
  // lexicographic tie-breaking, so the first hit is the canonical witness.
  const auto check_leaf = [&](auto&& self, std::uint64_t remaining) -> bool {
    if (remaining == 0) {
      ++result.nodes_explored;
      std::vector<Letter> branches = branch_letters(t);
      if (static_cast<int>(branches.size()) >= ways) {
        result.found = true;
        result.witness = t.word().factor(w.size(), t.size() - w.size());
        result.branch_letters = std::move(branches);
        return true;
      }
      return false;
    }
    for (int a = 0; a < alphabet_size; ++a) {
      const bool created = t.push(static_cast<Letter>(a));
      if (created && self(self, remaining - 1)) {
        t.undo();
        return true;
      }
      t.undo();
    }
    return false;
  };

  for (std::uint64_t depth = 0; depth <= depth_limit; ++depth) {
    if (check_leaf(check_leaf, depth)) return result;
  }
  return result;
}

TwoWayWitness two_way_witness(const Word& w, int alphabet_size) {
  if (w.alphabet().size() < 2) throw std::invalid_argument("two-way witness needs a non-unary word");
  Eertree t = rich_scan(w, alphabet_size);

  bool have_best = false;
  TwoWayWitness best;
  const std::size_t cap = 4 * w.size() + 16;
  for (Letter a : w.alphabet()) {
    if (chase_power_suffix(t, a, w.max_run(a), cap)) {
      std::vector<Letter> branches = branch_letters(t);
      const std::size_t ext_len = t.size() - w.size();
      if (branches.size() >= 2 && (!have_best || ext_len < best.extension.size())) {
        best.extension = t.word().factor(w.size(), ext_len);
        best.letters = std::move(branches);
        have_best = true;
      }
    }
    t.undo_many(t.size() - w.size());
  }
  if (!have_best) throw std::logic_error("no two-way extension found by the construction");
  if (best.extension.size() >= 2 * w.size()) {
    throw std::logic_error("two-way witness exceeded the length bound");
  }
  return best;
}

namespace {

// Double polynomial hashing modulo the Mersenne prime 2^61-1.
struct FactorHasher {
  static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
    const auto p = static_cast<unsigned __int128>(x) * y;
    const auto r = static_cast<std::uint64_t>(p >> 61) + (static_cast<std::uint64_t>(p) & kMod);
    return r >= kMod ? r - kMod : r;
  }

  explicit FactorHasher(const Word& w) : n(w.size()) {
    pre1.resize(n + 1, 0);
    pre2.resize(n + 1, 0);
    pow1.resize(n + 1, 1);
    pow2.resize(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      pre1[i + 1] = (mulmod(pre1[i], kBase1) + w[i] + 1) % kMod;
      pre2[i + 1] = (mulmod(pre2[i], kBase2) + w[i] + 1) % kMod;
      pow1[i + 1] = mulmod(pow1[i], kBase1);
      pow2[i + 1] = mulmod(pow2[i], kBase2);
    }
  }

  // 128-bit fingerprint of w[i..j), with the length folded in.
  unsigned __int128 fingerprint(std::size_t i, std::size_t j) const {
    const std::uint64_t h1 =
        (pre1[j] + kMod - mulmod(pre1[i], pow1[j - i])) % kMod;
    const std::uint64_t h2 =
        (pre2[j] + kMod - mulmod(pre2[i], pow2[j - i])) % kMod;
    unsigned __int128 f = h1;
    f = (f << 61) ^ h2;
    f = (f << 6) ^ static_cast<unsigned __int128>(j - i);
    return f;
  }

  static constexpr std::uint64_t kBase1 = 131;
  static constexpr std::uint64_t kBase2 = 137;
  std::size_t n;
  std::vector<std::uint64_t> pre1, pre2, pow1, pow2;
};

// Palindrome structure of one word: for every factor, where its longest
// palindromic prefix ends and its longest palindromic suffix starts.
struct PalStructure {
  explicit PalStructure(const Word& w) : hasher(w), n(w.size()) {
    std::vector<std::vector<char>> pal(n, std::vector<char>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = j + 1; i-- > 0;) {
        pal[i][j] = (w[i] == w[j]) && (j - i < 2 || pal[i + 1][j - 1]);
      }
    }
    starts_by_end.resize(n);
    ends_by_start.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (pal[i][j]) {
          starts_by_end[j].push_back(i);
          ends_by_start[i].push_back(j);
        }
      }
    }
    for (auto& v : starts_by_end) std::sort(v.begin(), v.end());
    // ends_by_start is already ascending by construction.
  }

  // Keyed fingerprint of (lpp, lps) of the factor [i, j], inclusive ends.
  std::pair<unsigned __int128, unsigned __int128> key(std::size_t i, std::size_t j) const {
    const auto& starts = starts_by_end[j];
    const std::size_t lps_start = *std::lower_bound(starts.begin(), starts.end(), i);
    const auto& ends = ends_by_start[i];
    const std::size_t lpp_end = *(std::upper_bound(ends.begin(), ends.end(), j) - 1);
    return {hasher.fingerprint(i, lpp_end + 1), hasher.fingerprint(lps_start, j + 1)};
  }

  unsigned __int128 id(std::size_t i, std::size_t j) const {
    return hasher.fingerprint(i, j + 1);
  }

  FactorHasher hasher;
  std::size_t n;
  std::vector<std::vector<std::size_t>> starts_by_end;  // palindromic [s, j]
  std::vector<std::vector<std::size_t>> ends_by_start;  // palindromic [i, e]
};

struct KeyHash {
  std::size_t operator()(const std::pair<unsigned __int128, unsigned __int128>& k) const {
    const auto mix = [](unsigned __int128 v) {
      auto x = static_cast<std::uint64_t>(v) ^ static_cast<std::uint64_t>(v >> 64);
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdull;
      x ^= x >> 33;
      return x;
    };
    return mix(k.first) * 31 + mix(k.second);
  }
};

}  // namespace

bool joinable_necessary(const Word& u, const Word& v) {
  if (!is_rich(u) || !is_rich(v)) throw std::invalid_argument("joinability test needs rich words");
  if (u.empty() || v.empty()) return true;

  const PalStructure su(u);
  std::unordered_map<std::pair<unsigned __int128, unsigned __int128>, unsigned __int128, KeyHash>
      index;
  index.reserve(u.size() * (u.size() + 1) / 2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      const auto [it, inserted] = index.emplace(su.key(i, j), su.id(i, j));
      if (!inserted && it->second != su.id(i, j)) {
        throw std::logic_error("rich word with two factors sharing lpp and lps");
      }
    }
  }

  const PalStructure sv(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) {
      const auto it = index.find(sv.key(i, j));
      if (it != index.end() && it->second != sv.id(i, j)) return false;
    }
  }
  return true;
}

RichStream::RichStream(Mode mode, Word base) : mode_(mode), base_(std::move(base)) {}

RichStream RichStream::aperiodic(const Word& base) {
  if (base.alphabet().size() < 2) {
    throw std::invalid_argument("aperiodic extension needs a non-unary word");
  }
  RichStream s(Mode::Aperiodic, base);
  s.tree_.emplace(rich_scan(base, base.min_alphabet()));
  // Chase the letter with the largest maximal power, smallest letter on ties.
  std::size_t best = 0;
  for (Letter a : base.alphabet()) {
    const std::size_t run = base.max_run(a);
    if (run > best) {
      best = run;
      s.target_ = a;
    }
  }
  s.power_ = best;
  return s;
}

RichStream RichStream::periodic(const Word& base) {
  if (base.empty()) throw std::invalid_argument("periodic extension of the empty word");
  if (!is_rich(base)) throw std::invalid_argument("input word is not rich");
  RichStream s(Mode::Periodic, base);
  const PeriodicExtension pe = periodic_rich_extension(base);
  s.period_u_ = pe.period;
  s.tail_v_ = pe.tail;
  return s;
}

void RichStream::grow_to(std::size_t length) {
  Eertree& t = *tree_;
  while (t.size() < length) {
    // One round: resurface target^power as a suffix, push the target letter
    // for a strictly larger power, then the letter in front of that run.
    if (!chase_power_suffix(t, target_, power_, 8 * t.size() + 64)) {
      throw std::logic_error("power suffix chase exceeded its bound");
    }
    if (!t.push(target_)) throw std::logic_error("power extension left richness");
    ++power_;
    const Letter before = t.buffer()[t.size() - 1 - power_];
    if (!t.push(before)) throw std::logic_error("separator extension left richness");
  }
}

Word RichStream::prefix(std::size_t length) {
  if (mode_ == Mode::Periodic) {
    Word out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(period_u_[i % period_u_.size()]);
    return out;
  }
  grow_to(length);
  return tree_->word().prefix(length);
}

const Word& RichStream::period() const {
  if (mode_ != Mode::Periodic) throw std::logic_error("period of an aperiodic stream");
  return period_u_;
}

const Word& RichStream::tail() const {
  if (mode_ != Mode::Periodic) throw std::logic_error("tail of an aperiodic stream");
  return tail_v_;
}

PeriodicExtension periodic_rich_extension(const Word& w) {
  if (w.empty()) throw std::invalid_argument("periodic extension of the empty word");
  if (!is_rich(w)) throw std::invalid_argument("input word is not rich");
  const Word closure = proper_closure(w);
  const Word v = lpps(closure);
  return {closure.prefix(closure.size() - v.size()), v};
}

ExtensionCountPair left_closure_preserves_extension_count(const Word& w, int alphabet_size) {
  ExtensionCountPair out;
  out.before = rich_extension_letters(w, Side::Right, alphabet_size).size();
  out.after = rich_extension_letters(left_closure(w), Side::Right, alphabet_size).size();
  return out;
}

bool is_balanced(const Word& w) {
  if (w.min_alphabet() > 2) throw std::invalid_argument("balance is defined for binary words");
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < len; ++i) ones += w[i];
    std::size_t lo = ones, hi = ones;
    for (std::size_t i = len; i < n; ++i) {
      ones += w[i];
      ones -= w[i - len];
      lo = std::min(lo, ones);
      hi = std::max(hi, ones);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

std::optional<Word> unbalance_witness(const Word& w) {
  if (w.min_alphabet() > 2) throw std::invalid_argument("balance is defined for binary words");
  std::vector<Word> candidates;
  candidates.emplace_back();  // the empty palindrome
  for (const Word& p : naive::palindromic_factors(w)) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end(), [](const Word& a, const Word& b) {
    return std::pair(a.size(), a.letters()) < std::pair(b.size(), b.letters());
  });
  const Word zero = Word::parse("0");
  const Word one = Word::parse("1");
  for (const Word& v : candidates) {
    if (w.contains(zero + v + zero) && w.contains(one + v + one)) return v;
  }
  return std::nullopt;
}

DoubleExtension sturmian_double_extension(const Word& w) {
  if (!is_balanced(w)) throw std::invalid_argument("input word is not balanced");
  Word w0 = w;
  w0.push_back(0);
  Word w1 = w;
  w1.push_back(1);
  return {is_rich(w0), is_rich(w1)};
}

}  // namespace richwords
