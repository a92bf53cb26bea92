#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

struct ClosureSquareBounds {
  std::uint64_t via_right = 0;
  std::uint64_t via_left = 0;
};

/// Defect of the squared right closure and of the squared left closure; both
/// upper-bound the infinite defect. Requires a non-empty word.
ClosureSquareBounds upper_bound_closure(const Word& w);

/// |w| minus the length of the longest rich suffix or prefix, whichever is
/// longer. Upper-bounds the infinite defect. Requires a non-empty word.
std::uint64_t upper_bound_rich_edge(const Word& w);

/// defect(w) plus the smallest admissible letter-power increment: for each
/// letter, the length of its biggest power, reduced by the length of a run of
/// that letter at either end of the word. Requires a non-empty word.
std::uint64_t upper_bound_letter_power(const Word& w);

/// Certified lower bound on the infinite defect: minimum defect of s w y over
/// contexts from the letters of w with |s|, |y| <= depth and at least one side
/// of full length. Non-decreasing in depth; equals defect(w) at depth 0.
std::uint64_t lower_bound_context(const Word& w, int depth);

struct DefectBracket {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::string upper_witness;  // which bound or probe achieved the upper side
  int search_depth = 0;
  bool exact() const { return lower == upper; }
};

/// Sound bracket on the infinite defect: context lower bound against the
/// minimum of the three proposition bounds and stabilized periodic probes
/// (single letters and letter pairs appended or prepended K times).
DefectBracket bracket(const Word& w, int depth);

struct DefectTableRow {
  int n = 0;
  std::uint64_t d_max = 0;
  std::uint64_t dinf_upper_max = 0;
  std::uint64_t ddif_lower = 0;
  Word witness_d;
  Word witness_dinf;
  Word witness_ddif;
};

/// Exhaustive binary tables for lengths at most n: the exact maximal defect,
/// the maximal bracket upper bound, and the maximal certified gap between the
/// bracket lower bound and the defect.
std::vector<DefectTableRow> defect_tables(int n_max, int context_depth = 3,
                                          int exhaustion_limit = 16, int threads = 1);

void write_defect_csv(const std::vector<DefectTableRow>& rows, std::ostream& os);

}  // namespace richwords
