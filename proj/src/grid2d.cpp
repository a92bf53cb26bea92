#include "richwords/grid2d.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "richwords/richness.hpp"

namespace richwords {

Grid2D::Grid2D(int alphabet_size) : alphabet_(alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in 1..10");
  }
}

Grid2D Grid2D::parse(const std::string& text, int alphabet_size) {
  std::istringstream in(text);
  std::string keyword;
  std::int64_t oi = 0, oj = 0;
  if (!(in >> keyword) || keyword != "origin" || !(in >> oi >> oj)) {
    throw std::invalid_argument("grid text must start with a line 'origin i j'");
  }
  std::string rest;
  std::getline(in, rest);  // consume the remainder of the header line

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  int max_letter = 0;
  std::vector<std::tuple<std::int64_t, std::int64_t, Letter>> cells;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    for (std::size_t c = 0; c < lines[r].size(); ++c) {
      const char ch = lines[r][c];
      if (ch == '.') continue;
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument(std::string("invalid grid character '") + ch + "'");
      }
      const auto letter = static_cast<Letter>(ch - '0');
      max_letter = std::max(max_letter, letter + 1);
      cells.emplace_back(oi + static_cast<std::int64_t>(r), oj + static_cast<std::int64_t>(c),
                         letter);
    }
  }
  if (alphabet_size == 0) alphabet_size = std::max(max_letter, 1);
  Grid2D g(alphabet_size);
  for (const auto& [i, j, a] : cells) g.set(i, j, a);
  return g;
}

std::string Grid2D::str() const {
  std::ostringstream out;
  if (cells_.empty()) {
    out << "origin 0 0\n";
    return out.str();
  }
  const Box box = bounding_box();
  out << "origin " << box.i_min << ' ' << box.j_min << '\n';
  for (std::int64_t i = box.i_min; i <= box.i_max; ++i) {
    std::string row(static_cast<std::size_t>(box.width()), '.');
    for (std::int64_t j = box.j_min; j <= box.j_max; ++j) {
      if (const auto a = at(i, j)) row[static_cast<std::size_t>(j - box.j_min)] = letter_to_char(*a);
    }
    out << row << '\n';
  }
  return out.str();
}

void Grid2D::set(std::int64_t i, std::int64_t j, Letter a) {
  if (a >= alphabet_) throw std::invalid_argument("letter outside the declared alphabet");
  cells_[{i, j}] = a;
}

void Grid2D::erase(std::int64_t i, std::int64_t j) { cells_.erase({i, j}); }

std::optional<Letter> Grid2D::at(std::int64_t i, std::int64_t j) const {
  const auto it = cells_.find({i, j});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

Grid2D::Box Grid2D::bounding_box() const {
  Box box;
  bool first = true;
  for (const auto& [pos, a] : cells_) {
    (void)a;
    if (first) {
      box.i_min = box.i_max = pos.first;
      box.j_min = box.j_max = pos.second;
      first = false;
    } else {
      box.i_min = std::min(box.i_min, pos.first);
      box.i_max = std::max(box.i_max, pos.first);
      box.j_min = std::min(box.j_min, pos.second);
      box.j_max = std::max(box.j_max, pos.second);
    }
  }
  return box;
}

std::vector<Grid2D::Run> Grid2D::maximal_runs() const {
  std::vector<Run> runs;
  // Horizontal: the cell map is ordered by (i, j) already.
  for (auto it = cells_.begin(); it != cells_.end();) {
    Run run;
    run.horizontal = true;
    run.i = it->first.first;
    run.j = it->first.second;
    std::int64_t j = run.j;
    while (it != cells_.end() && it->first.first == run.i && it->first.second == j) {
      run.word.push_back(it->second);
      ++it;
      ++j;
    }
    runs.push_back(std::move(run));
  }
  // Vertical: regroup by column.
  std::map<std::pair<std::int64_t, std::int64_t>, Letter> by_col;
  for (const auto& [pos, a] : cells_) by_col[{pos.second, pos.first}] = a;
  for (auto it = by_col.begin(); it != by_col.end();) {
    Run run;
    run.horizontal = false;
    run.j = it->first.first;
    run.i = it->first.second;
    std::int64_t i = run.i;
    while (it != by_col.end() && it->first.first == run.j && it->first.second == i) {
      run.word.push_back(it->second);
      ++it;
      ++i;
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

bool grid_is_rich(const Grid2D& g) { return !find_nonrich_run(g).has_value(); }

std::optional<Grid2D::Run> find_nonrich_run(const Grid2D& g) {
  for (const Grid2D::Run& run : g.maximal_runs()) {
    if (!is_rich(run.word)) return run;
  }
  return std::nullopt;
}

namespace {

// Contiguous occupied stretches next to a cell, read outward from it.
Word walk(const Grid2D& g, std::int64_t i, std::int64_t j, std::int64_t di, std::int64_t dj) {
  Word out;
  i += di;
  j += dj;
  while (const auto a = g.at(i, j)) {
    out.push_back(*a);
    i += di;
    j += dj;
  }
  return out;
}

struct CellContext {
  Word h_before, h_after, v_before, v_after;
};

CellContext context_of(const Grid2D& g, std::int64_t i, std::int64_t j) {
  CellContext ctx;
  ctx.h_before = walk(g, i, j, 0, -1).reversed();
  ctx.h_after = walk(g, i, j, 0, 1);
  ctx.v_before = walk(g, i, j, -1, 0).reversed();
  ctx.v_after = walk(g, i, j, 1, 0);
  return ctx;
}

bool letter_fits(const CellContext& ctx, Letter a) {
  Word h = ctx.h_before;
  h.push_back(a);
  h += ctx.h_after;
  if (!is_rich(h)) return false;
  Word v = ctx.v_before;
  v.push_back(a);
  v += ctx.v_after;
  return is_rich(v);
}

std::vector<Letter> cell_domain(const Grid2D& g, std::int64_t i, std::int64_t j) {
  const CellContext ctx = context_of(g, i, j);
  std::vector<Letter> out;
  for (int a = 0; a < g.alphabet_size(); ++a) {
    if (letter_fits(ctx, static_cast<Letter>(a))) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

PlaneCertificate make_certificate(const Grid2D& g, std::int64_t i, std::int64_t j) {
  const CellContext ctx = context_of(g, i, j);
  return {i, j, ctx.h_before, ctx.h_after, ctx.v_before, ctx.v_after};
}

}  // namespace

bool certificate_valid(const PlaneCertificate& c, int alphabet_size) {
  for (int a = 0; a < alphabet_size; ++a) {
    Word h = c.h_before;
    h.push_back(static_cast<Letter>(a));
    h += c.h_after;
    Word v = c.v_before;
    v.push_back(static_cast<Letter>(a));
    v += c.v_after;
    if (is_rich(h) && is_rich(v)) return false;  // this letter would fit
  }
  return true;
}

PlaneVerdict extend_to_rich_plane(const Grid2D& g, int margin, std::uint64_t node_budget) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (node_budget == 0) throw std::invalid_argument("node budget must be positive");

  PlaneVerdict verdict;
  verdict.margin = margin;

  if (const auto bad = find_nonrich_run(g)) {
    verdict.kind = PlaneVerdict::Kind::NotExtendable;
    verdict.nonrich_run = bad;
    return verdict;
  }
  if (g.empty()) {
    verdict.kind = PlaneVerdict::Kind::ExtendableToMargin;
    verdict.witness = g;
    return verdict;
  }

  Grid2D::Box box = g.bounding_box();
  box.i_min -= margin;
  box.i_max += margin;
  box.j_min -= margin;
  box.j_max += margin;

  // Constraint pass: commit cells forced to a single letter, to fixpoint.
  // A domain derived from committed letters holds in any rich-plane
  // extension, so an emptied domain certifies non-extendability.
  Grid2D work = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t i = box.i_min; i <= box.i_max; ++i) {
      for (std::int64_t j = box.j_min; j <= box.j_max; ++j) {
        if (work.at(i, j)) continue;
        const std::vector<Letter> domain = cell_domain(work, i, j);
        if (domain.empty()) {
          verdict.kind = PlaneVerdict::Kind::NotExtendable;
          verdict.certificate = make_certificate(work, i, j);
          return verdict;
        }
        if (domain.size() == 1) {
          work.set(i, j, domain.front());
          changed = true;
        }
      }
    }
  }

  // Backtracking fill, row-major cells, ascending letters.
  std::vector<std::pair<std::int64_t, std::int64_t>> free_cells;
  for (std::int64_t i = box.i_min; i <= box.i_max; ++i) {
    for (std::int64_t j = box.j_min; j <= box.j_max; ++j) {
      if (!work.at(i, j)) free_cells.emplace_back(i, j);
    }
  }

  bool out_of_budget = false;
  const auto fill = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == free_cells.size()) return true;
    const auto [i, j] = free_cells[idx];
    const CellContext ctx = context_of(work, i, j);
    for (int a = 0; a < work.alphabet_size(); ++a) {
      if (++verdict.nodes_explored > node_budget) {
        out_of_budget = true;
        return false;
      }
      if (!letter_fits(ctx, static_cast<Letter>(a))) continue;
      work.set(i, j, static_cast<Letter>(a));
      if (self(self, idx + 1)) return true;
      work.erase(i, j);
      if (out_of_budget) return false;
    }
    return false;
  };

  if (fill(fill, 0)) {
    verdict.kind = PlaneVerdict::Kind::ExtendableToMargin;
    verdict.witness = work;
    return verdict;
  }
  // Either the budget ran out or the margin could not be filled; both are
  // reported as Unknown since a stuck-cell certificate is not available.
  verdict.kind = PlaneVerdict::Kind::Unknown;
  return verdict;
}

bool strongly_rich(const Word& w, int power) {
  if (w.empty()) throw std::invalid_argument("strong richness of the empty word");
  if (power < 2) throw std::invalid_argument("power must be at least 2");
  return is_rich(repeat(w, static_cast<std::size_t>(power)));
}

Grid2D tile_rectangle(const Grid2D& g, int reps, int power) {
  if (reps < 1) throw std::invalid_argument("repetition count must be positive");
  if (g.empty()) throw std::invalid_argument("cannot tile an empty grid");
  const Grid2D::Box box = g.bounding_box();
  const auto area = static_cast<std::size_t>(box.height() * box.width());
  if (g.cell_count() != area) {
    throw std::invalid_argument("grid does not fully occupy its bounding rectangle");
  }
  const int effective = std::max(power, std::max(reps, 2));
  for (const Grid2D::Run& run : g.maximal_runs()) {
    if (!strongly_rich(run.word, effective)) {
      throw std::invalid_argument(
          std::string(run.horizontal ? "row " : "column ") + run.word.str() +
          " fails the strong richness probe at power " + std::to_string(effective));
    }
  }
  Grid2D out(g.alphabet_size());
  for (int r = 0; r < reps; ++r) {
    for (int c = 0; c < reps; ++c) {
      for (const auto& [pos, a] : g.cells()) {
        out.set(pos.first + static_cast<std::int64_t>(r) * box.height(),
                pos.second + static_cast<std::int64_t>(c) * box.width(), a);
      }
    }
  }
  return out;
}

}  // namespace richwords
