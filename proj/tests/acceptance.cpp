// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run through ctest (test name "acceptance") or directly.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "richwords/closures.hpp"
#include "richwords/defect_bounds.hpp"
#include "richwords/enumeration.hpp"
#include "richwords/extension.hpp"
#include "richwords/grid2d.hpp"
#include "richwords/naive.hpp"
#include "richwords/richness.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

Word W(const char* s) { return Word::parse(s); }

void for_each_word(int k, int length, const std::function<void(const Word&)>& fn) {
  Word w;
  const auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == length) {
      fn(w);
      return;
    }
    for (int a = 0; a < k; ++a) {
      w.push_back(static_cast<Letter>(a));
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

Word random_rich_word(std::mt19937& rng, int alphabet, std::size_t length) {
  Word w;
  while (w.size() < length) {
    std::vector<Letter> options;
    for (int a = 0; a < alphabet; ++a) {
      Word cand = w;
      cand.push_back(static_cast<Letter>(a));
      if (is_rich(cand)) options.push_back(static_cast<Letter>(a));
    }
    w.push_back(options[rng() % options.size()]);
  }
  return w;
}

int failures = 0;

void criterion(int id, const char* name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("%s %2d  %s%s\n", ok ? "PASS" : "FAIL", id, name, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

const std::vector<std::uint64_t> kBinary25{
    1,    2,     4,     8,     16,    32,    64,     128,    252,    488,     932,     1756,
    3246, 5916,  10618, 18800, 32846, 56704, 96702,  163184, 272460, 450586,  738274,
    1199376, 1932338, 3089518};

}  // namespace

int main() {
  criterion(1, "exact enumeration r_2(0..25)", [] {
    const auto counts = count_rich(2, 25, kDefaultNodeBudget, 1);
    return counts == kBinary25;
  });

  criterion(2, "minimal non-rich words, lengths 8..12", [] {
    const std::set<Word> expected{W("00101100"), W("00110100"), W("11010011"), W("11001011")};
    const auto at8 = minimal_nonrich(2, 8);
    if (std::set<Word>(at8.begin(), at8.end()) != expected) return false;
    const std::vector<std::size_t> want{4, 16, 44, 108, 266};
    for (int n = 8; n <= 12; ++n) {
      if (minimal_nonrich(2, n).size() != want[n - 8]) return false;
    }
    return true;
  });

  criterion(3, "oracle agreement: tree, complete returns, brute force", [] {
    bool ok = true;
    const auto sweep = [&](int k, int max_len) {
      const auto counts = count_rich(k, max_len);
      for (int len = 0; len <= max_len && ok; ++len) {
        std::uint64_t rich_count = 0;
        for_each_word(k, len, [&](const Word& w) {
          const bool tree = is_rich(w);
          const bool returns = is_rich_via_returns(w);
          const bool brute = naive::palindrome_count(w) == w.size() + 1;
          if (tree != returns || tree != brute) ok = false;
          if (palindrome_count(w) != naive::palindrome_count(w)) ok = false;
          rich_count += tree ? 1 : 0;
        });
        if (rich_count != counts[len]) ok = false;
      }
    };
    sweep(2, 14);
    sweep(3, 9);
    return ok;
  });

  criterion(4, "two-way witness bound and search confirmation", [] {
    bool ok = true;
    const auto check_one = [&ok](const Word& w) {
      const TwoWayWitness tw = two_way_witness(w, 2);
      if (tw.extension.size() >= 2 * w.size()) ok = false;
      if (tw.letters.size() < 2) ok = false;
      if (!is_rich(w + tw.extension)) ok = false;
      if (!eventually_extendable_in(w, 2, 2 * w.size(), 2).found) ok = false;
    };
    for (int len = 2; len <= 14 && ok; ++len) {
      for_each_word(2, len, [&](const Word& w) {
        if (!is_rich(w) || w.alphabet().size() < 2) return;
        check_one(w);
      });
    }
    std::mt19937 rng(20240115);
    for (int i = 0; i < 1000 && ok; ++i) {
      const Word w = random_rich_word(rng, 2, 15 + i % 6);
      if (w.alphabet().size() < 2) continue;
      check_one(w);
    }
    const Word example = W("11011010101010110011000111000011100");
    const TwoWayWitness tw = two_way_witness(example, 2);
    if (example.size() + tw.extension.size() != 77) ok = false;
    const ExtensionResult bfs = eventually_extendable_in(example, 2, 2 * example.size(), 2);
    if (!bfs.found || bfs.witness != W("0")) ok = false;
    return ok;
  });

  criterion(5, "defect fixtures and brackets", [] {
    bool ok = true;
    ok = ok && defect(W("00101100")) == 1;
    const DefectBracket b1 = bracket(W("00101100"), 6);
    ok = ok && b1.lower == 1 && b1.upper == 1;
    ok = ok && defect(W("110100110111011001011")) == 2;
    ok = ok && lower_bound_context(W("110100110111011001011"), 1) == 3;
    const DefectBracket b2 = bracket(W("110010010110010"), 6);
    ok = ok && b2.lower == 4 && b2.upper == 4;
    const DefectBracket b3 = bracket(W("101001111000111101001"), 6);
    ok = ok && b3.lower == 4 && b3.upper == 4;
    ok = ok && upper_bound_letter_power(W("1101100111010011011001101101110011011")) == 17;
    ok = ok && upper_bound_rich_edge(W("00101100101")) == 3;
    return ok;
  });

  criterion(6, "periodized closures keep the square's defect", [] {
    bool ok = true;
    for (int len = 1; len <= 8 && ok; ++len) {
      for_each_word(2, len, [&](const Word& w) {
        const Word u = right_closure(w);
        const std::uint64_t d2 = defect(repeat(u, 2));
        for (int n = 2; n <= 6; ++n) {
          if (defect(repeat(u, static_cast<std::size_t>(n))) != d2) ok = false;
        }
      });
    }
    return ok;
  });

  criterion(7, "closures preserve richness; extension sets behave", [] {
    bool ok = true;
    for (int len = 0; len <= 12 && ok; ++len) {
      for_each_word(2, len, [&](const Word& w) {
        if (!is_rich(w)) return;
        if (!is_rich(right_closure(w)) || !is_rich(left_closure(w))) ok = false;
        if (!w.empty() && !is_rich(proper_closure(w))) ok = false;
        if (!w.empty()) {
          for (Side side : {Side::Right, Side::Left}) {
            const auto letters = rich_extension_letters(w, side, 2);
            bool inside = false;
            for (Letter a : letters) inside = inside || w.count(a) > 0;
            if (!inside) ok = false;
          }
        }
        const ExtensionCountPair p = left_closure_preserves_extension_count(w, 2);
        if (p.before != p.after) ok = false;
      });
    }
    return ok;
  });

  criterion(8, "balanced words: richness, double extension, witness criterion", [] {
    bool ok = true;
    for (int len = 0; len <= 14 && ok; ++len) {
      for_each_word(2, len, [&](const Word& w) {
        const bool balanced = is_balanced(w);
        const auto witness = unbalance_witness(w);
        if (balanced != !witness.has_value()) ok = false;
        if (balanced) {
          if (!is_rich(w)) ok = false;
          const DoubleExtension d = sturmian_double_extension(w);
          if (!d.zero_rich || !d.one_rich) ok = false;
        }
      });
    }
    return ok;
  });

  criterion(9, "bounded negative extendability results", [] {
    const ExtensionResult ternary = eventually_extendable_in(W("0020102202"), 3, 12, 3);
    const ExtensionResult staircase = eventually_extendable_in(W("0123"), 4, 8, 4);
    return !ternary.found && !staircase.found;
  });

  criterion(10, "bound series against the exact counts", [] {
    bool ok = true;
    const auto counts = count_rich(2, 25);
    const auto lb = lower_bound_recurrence(2, 25);
    for (int n = 0; n <= 25; ++n) {
      if (upper_bound_count(2, n) < counts[n]) ok = false;
      if (lb[n] > counts[n]) ok = false;
    }
    const RecurrenceReport rec = upper_bound_recurrence(25);
    ok = ok && rec.values[12] == 2662 && rec.exact[12] == 3246;
    ok = ok && std::find(rec.flagged.begin(), rec.flagged.end(), 12) != rec.flagged.end();
    return ok;
  });

  criterion(11, "grid suite: certificate, random squares, tiling, flanks", [] {
    bool ok = true;
    // Forced-contradiction instance with an independently checkable proof.
    Grid2D stuck(2);
    const Word row = W("0010110");
    for (std::size_t j = 0; j < row.size(); ++j) stuck.set(0, static_cast<std::int64_t>(j), row[j]);
    const Word col = W("1101001");
    for (std::size_t i = 0; i < col.size(); ++i) {
      stuck.set(static_cast<std::int64_t>(i) - 7, 7, col[i]);
    }
    for (int margin : {1, 2}) {
      const PlaneVerdict v = extend_to_rich_plane(stuck, margin, 1'000'000);
      if (v.kind != PlaneVerdict::Kind::NotExtendable || !v.certificate) ok = false;
      if (ok && !certificate_valid(*v.certificate, 2)) ok = false;
    }

    std::mt19937 rng(271828);
    for (int sample = 0; sample < 200 && ok; ++sample) {
      Grid2D g(2);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) g.set(i, j, static_cast<Letter>(rng() % 2));
      }
      const PlaneVerdict v = extend_to_rich_plane(g, 3, 10'000'000);
      if (v.kind != PlaneVerdict::Kind::ExtendableToMargin) ok = false;
      if (ok && !grid_is_rich(*v.witness)) ok = false;
    }

    Grid2D strip(2);
    strip.set(0, 0, 0);
    strip.set(0, 1, 1);
    const Grid2D tiled = tile_rectangle(strip, 4);
    if (!grid_is_rich(tiled)) ok = false;

    const Word zeros = repeat(W("0"), 32);
    const Word ones = repeat(W("1"), 32);
    int candidates = 0;
    for (int len = 0; len <= 4; ++len) {
      for_each_word(2, len, [&](const Word& u) {
        ++candidates;
        if (!is_rich(zeros + u + ones)) ok = false;
        if (!is_rich(zeros + u + W("0") + ones)) ok = false;
        if (!is_rich(zeros + W("1") + u + ones)) ok = false;
      });
    }
    if (candidates != 31) ok = false;
    return ok;
  });

  criterion(12, "compulsory chains", [] {
    return compulsory_chain(W("01011011101111011111001"), 2) ==
               std::vector<Letter>{1, 1, 1, 1} &&
           compulsory_chain(W("1010010011000110010"), 2) == std::vector<Letter>{0, 1};
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
