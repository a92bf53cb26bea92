#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "richwords/eertree.hpp"
#include "richwords/word.hpp"

namespace richwords {

enum class Side { Right, Left };

/// Letters a of the declared alphabet for which wa (resp. aw) stays rich.
/// Throws std::invalid_argument when w is not rich. For rich w the result
/// restricted to the letters of w is never empty.
std::vector<Letter> rich_extension_letters(const Word& w, Side side, int alphabet_size);

/// The maximal forced chain: while exactly one letter of the alphabet extends
/// the word richly, that letter is appended. Stops at the first word with two
/// or more rich extensions. Requires a rich, non-unary input.
std::vector<Letter> compulsory_chain(const Word& w, int alphabet_size);

struct ExtensionResult {
  bool found = false;
  Word witness;                        // u with wu rich and >= ways branches
  std::vector<Letter> branch_letters;  // rich extension letters of wu
  std::uint64_t nodes_explored = 0;    // rich extensions examined
  std::uint64_t depth_limit = 0;
};

/// Shortest u (ties broken lexicographically) with wu rich and at least
/// `ways` rich one-letter extensions, searching |u| <= depth_limit.
/// Exhaustive over all rich extensions up to the limit when not found.
ExtensionResult eventually_extendable_in(const Word& w, int ways, std::uint64_t depth_limit,
                                         int alphabet_size);

struct TwoWayWitness {
  Word extension;                // u; wu is rich and |u| < 2|w|
  std::vector<Letter> letters;   // rich extension letters of wu, at least two
};

/// Constructive witness for two-way extendability of a non-unary rich word:
/// extend through proper palindromic closures until the maximal power a^n of
/// a letter a first becomes a suffix. Every letter of the word is tried and
/// the shortest resulting extension wins (ties to the smaller letter).
TwoWayWitness two_way_witness(const Word& w, int alphabet_size);

/// Necessary condition for two rich words to occur inside one rich word:
/// false iff some factors u' of u and v' of v share both the longest
/// palindromic prefix and suffix while being distinct.
bool joinable_necessary(const Word& u, const Word& v);

/// Generator of ever-longer rich words extending a base word.
///
/// Aperiodic mode keeps forcing strictly larger powers of one letter, so the
/// limit word is aperiodic. Periodic mode emits prefixes of u^oo where the
/// proper closure of the base is uv, v its longest proper palindromic suffix.
class RichStream {
 public:
  enum class Mode { Aperiodic, Periodic };

  static RichStream aperiodic(const Word& base);  // requires rich, non-unary
  static RichStream periodic(const Word& base);   // requires rich, non-empty

  Mode mode() const { return mode_; }
  const Word& base() const { return base_; }

  /// First `length` letters of the generated infinite word.
  Word prefix(std::size_t length);

  const Word& period() const;  // Periodic mode only
  const Word& tail() const;    // Periodic mode only

 private:
  RichStream(Mode mode, Word base);
  void grow_to(std::size_t length);

  Mode mode_;
  Word base_;
  // Aperiodic state.
  std::optional<Eertree> tree_;
  Letter target_ = 0;
  std::size_t power_ = 0;
  // Periodic state.
  Word period_u_;
  Word tail_v_;
};

struct PeriodicExtension {
  Word period;  // u
  Word tail;    // v
};

/// Splits the proper closure of w as uv with v its longest proper palindromic
/// suffix; u^n v is rich for every n >= 1. Requires rich, non-empty input.
PeriodicExtension periodic_rich_extension(const Word& w);

struct ExtensionCountPair {
  std::size_t before = 0;
  std::size_t after = 0;
};

/// Number of rich right-extension letters of w and of the left closure of w.
/// The two counts always agree; the operation makes that testable.
ExtensionCountPair left_closure_preserves_extension_count(const Word& w, int alphabet_size);

/// Balance in the Sturmian sense: any two equal-length factors have letter
/// counts differing by at most one. Binary words only.
bool is_balanced(const Word& w);

/// A palindrome v with both 0v0 and 1v1 factors of w, when one exists; such a
/// witness exists iff w is unbalanced. Shortest witness, ties lexicographic.
std::optional<Word> unbalance_witness(const Word& w);

struct DoubleExtension {
  bool zero_rich = false;
  bool one_rich = false;
};

/// Richness of w0 and w1 for a balanced binary word; both always hold.
/// Throws std::invalid_argument on unbalanced input.
DoubleExtension sturmian_double_extension(const Word& w);

}  // namespace richwords
