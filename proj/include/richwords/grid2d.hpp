#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Partial two-dimensional word: a finite set of occupied integer cells.
/// Row index i grows downward, column index j to the right.
class Grid2D {
 public:
  explicit Grid2D(int alphabet_size = 1);

  /// Text format: a header "origin i j", then one line per row of the
  /// bounding box, ASCII digits for letters and '.' for empty cells.
  /// alphabet_size 0 infers max digit + 1 (at least 1). Round-trips bit-exact.
  static Grid2D parse(const std::string& text, int alphabet_size = 0);
  std::string str() const;

  int alphabet_size() const { return alphabet_; }
  void set(std::int64_t i, std::int64_t j, Letter a);
  void erase(std::int64_t i, std::int64_t j);
  std::optional<Letter> at(std::int64_t i, std::int64_t j) const;
  std::size_t cell_count() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  struct Box {
    std::int64_t i_min = 0, i_max = -1, j_min = 0, j_max = -1;
    bool contains(std::int64_t i, std::int64_t j) const {
      return i >= i_min && i <= i_max && j >= j_min && j <= j_max;
    }
    std::int64_t height() const { return i_max - i_min + 1; }
    std::int64_t width() const { return j_max - j_min + 1; }
  };
  Box bounding_box() const;  // valid only when non-empty

  struct Run {
    bool horizontal = true;
    std::int64_t i = 0, j = 0;  // leading cell
    Word word;
  };
  std::vector<Run> maximal_runs() const;

  bool operator==(const Grid2D&) const = default;

  const std::map<std::pair<std::int64_t, std::int64_t>, Letter>& cells() const { return cells_; }

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, Letter> cells_;
  int alphabet_;
};

/// True iff every maximal horizontal and vertical run is a rich word.
bool grid_is_rich(const Grid2D& g);

/// The first non-rich maximal run in scan order, when one exists.
std::optional<Grid2D::Run> find_nonrich_run(const Grid2D& g);

/// Certificate that a single empty cell admits no letter: for every letter,
/// completing the horizontal or the vertical run through the cell with the
/// recorded context words breaks richness. Checkable with the richness
/// oracle alone.
struct PlaneCertificate {
  std::int64_t i = 0, j = 0;
  Word h_before, h_after;
  Word v_before, v_after;
};

bool certificate_valid(const PlaneCertificate& c, int alphabet_size);

struct PlaneVerdict {
  enum class Kind { ExtendableToMargin, NotExtendable, Unknown };
  Kind kind = Kind::Unknown;
  int margin = 0;
  std::optional<PlaneCertificate> certificate;  // NotExtendable via a stuck cell
  std::optional<Grid2D::Run> nonrich_run;       // NotExtendable via a non-rich input run
  std::optional<Grid2D> witness;                // ExtendableToMargin filling
  std::uint64_t nodes_explored = 0;
};

/// Tries to fill every empty cell of the bounding box inflated by `margin`
/// so that all runs stay rich. Forced contradictions (a cell whose completed
/// run contexts reject every letter, regardless of other free cells) yield
/// NotExtendable with a certificate; a complete filling yields
/// ExtendableToMargin; running out of budget yields Unknown.
PlaneVerdict extend_to_rich_plane(const Grid2D& g, int margin, std::uint64_t node_budget);

/// Richness of w repeated `power` times: a bounded probe of richness of the
/// infinite repetition. False refutes it; true certifies up to the power.
bool strongly_rich(const Word& w, int power = 4);

/// Replicates a fully occupied rectangle reps x reps times. Every row and
/// column must pass strongly_rich at max(power, reps), which makes the output
/// grid rich. Throws std::invalid_argument with the offending run otherwise.
Grid2D tile_rectangle(const Grid2D& g, int reps, int power = 4);

}  // namespace richwords
