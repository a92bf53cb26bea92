#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "richwords/grid2d.hpp"
#include "richwords/richness.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

Word W(const char* s) { return Word::parse(s); }

Grid2D row_grid(const char* s, int alphabet = 2) {
  Grid2D g(alphabet);
  const Word w = W(s);
  for (std::size_t j = 0; j < w.size(); ++j) g.set(0, static_cast<std::int64_t>(j), w[j]);
  return g;
}

// The forced-contradiction instance: a row to the left of the open cell
// (0, 7) and a column above it, built from two minimal non-rich words less
// their last letter.
Grid2D stuck_instance() {
  Grid2D g(2);
  const Word row = W("0010110");
  for (std::size_t j = 0; j < row.size(); ++j) g.set(0, static_cast<std::int64_t>(j), row[j]);
  const Word col = W("1101001");
  for (std::size_t i = 0; i < col.size(); ++i) g.set(static_cast<std::int64_t>(i) - 7, 7, col[i]);
  return g;
}

}  // namespace

TEST_CASE("grid text format round-trips") {
  Grid2D g(3);
  g.set(-1, 2, 2);
  g.set(0, 0, 1);
  g.set(0, 3, 0);
  const std::string text = g.str();
  CHECK(text == "origin -1 0\n..2.\n1..0\n");
  CHECK(Grid2D::parse(text) == g);
  CHECK(Grid2D::parse(text).str() == text);

  const Grid2D empty(1);
  CHECK(empty.str() == "origin 0 0\n");
  CHECK(Grid2D::parse(empty.str()).cell_count() == 0);

  CHECK_THROWS_AS(Grid2D::parse("0101\n"), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::parse("origin 0 0\n01x\n"), std::invalid_argument);
}

TEST_CASE("grid richness reduces to run richness") {
  CHECK(grid_is_rich(row_grid("0010110")));
  CHECK_FALSE(grid_is_rich(row_grid("00101100")));

  Grid2D zeros(1);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 9; ++j) zeros.set(i, j, 0);
  }
  CHECK(grid_is_rich(zeros));

  const auto bad = find_nonrich_run(row_grid("00101100"));
  REQUIRE(bad.has_value());
  CHECK(bad->word == W("00101100"));
  CHECK(bad->horizontal);

  // A non-rich column is found too.
  Grid2D col(2);
  const Word w = W("11010011");
  for (std::size_t i = 0; i < w.size(); ++i) col.set(static_cast<std::int64_t>(i), 0, w[i]);
  const auto badcol = find_nonrich_run(col);
  REQUIRE(badcol.has_value());
  CHECK_FALSE(badcol->horizontal);
}

TEST_CASE("maximal runs split on gaps") {
  Grid2D g(2);
  g.set(0, 0, 1);
  g.set(0, 1, 0);
  g.set(0, 3, 1);  // gap at (0, 2)
  g.set(2, 0, 1);
  const auto runs = g.maximal_runs();
  // Horizontal: 10, 1, 1; vertical: 1, 1, 0, 1.
  CHECK(runs.size() == 7);
}

TEST_CASE("empty grid extends trivially") {
  const Grid2D g(2);
  const PlaneVerdict v = extend_to_rich_plane(g, 3, 1000);
  CHECK(v.kind == PlaneVerdict::Kind::ExtendableToMargin);
}

TEST_CASE("non-rich input is immediately not extendable") {
  const PlaneVerdict v = extend_to_rich_plane(row_grid("00101100"), 2, 1000);
  CHECK(v.kind == PlaneVerdict::Kind::NotExtendable);
  REQUIRE(v.nonrich_run.has_value());
  CHECK(v.nonrich_run->word == W("00101100"));
}

TEST_CASE("forced contradiction yields a checkable certificate") {
  const Grid2D g = stuck_instance();
  CHECK(grid_is_rich(g));
  for (int margin : {1, 2}) {  // the verdict is monotone in the margin
    const PlaneVerdict v = extend_to_rich_plane(g, margin, 100000);
    CHECK(v.kind == PlaneVerdict::Kind::NotExtendable);
    REQUIRE(v.certificate.has_value());
    const PlaneCertificate& c = *v.certificate;
    CHECK(c.i == 0);
    CHECK(c.j == 7);
    CHECK(c.h_before == W("0010110"));
    CHECK(c.h_after == W(""));
    CHECK(c.v_before == W("1101001"));
    CHECK(c.v_after == W(""));
    CHECK(certificate_valid(c, 2));
    // Independent re-verification: each letter breaks one completed run.
    CHECK_FALSE(is_rich(W("00101100")));
    CHECK_FALSE(is_rich(W("11010011")));
  }
}

TEST_CASE("random full squares extend to the margin") {
  std::mt19937 rng(4242);
  for (int sample = 0; sample < 12; ++sample) {
    Grid2D g(2);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) g.set(i, j, static_cast<Letter>(rng() % 2));
    }
    CHECK(grid_is_rich(g));  // every run has length 6, and those are all rich
    const PlaneVerdict v = extend_to_rich_plane(g, 2, 5'000'000);
    CHECK(v.kind == PlaneVerdict::Kind::ExtendableToMargin);
    REQUIRE(v.witness.has_value());
    CHECK(grid_is_rich(*v.witness));
    CHECK(v.witness->cell_count() == 10 * 10);
  }
}

TEST_CASE("budget exhaustion reports unknown") {
  const PlaneVerdict v = extend_to_rich_plane(row_grid("0100101"), 3, 1);
  CHECK(v.kind == PlaneVerdict::Kind::Unknown);
  CHECK_THROWS_AS(extend_to_rich_plane(row_grid("0"), 1, 0), std::invalid_argument);
}

TEST_CASE("strong richness probe") {
  CHECK(strongly_rich(W("0"), 6));
  CHECK_FALSE(strongly_rich(W("00101100"), 2));
  CHECK(strongly_rich(W("01"), 8));
  CHECK_THROWS_AS(strongly_rich(W(""), 4), std::invalid_argument);
  CHECK_THROWS_AS(strongly_rich(W("0"), 1), std::invalid_argument);
}

TEST_CASE("tiling a strongly rich rectangle") {
  const Grid2D five = tile_rectangle(row_grid("0", 1), 5);
  CHECK(five.cell_count() == 25);
  CHECK(grid_is_rich(five));

  const Grid2D tiled = tile_rectangle(row_grid("01"), 4);
  const Grid2D::Box box = tiled.bounding_box();
  CHECK(box.height() == 4);
  CHECK(box.width() == 8);
  CHECK(grid_is_rich(tiled));

  CHECK_THROWS_AS(tile_rectangle(row_grid("00101100"), 2), std::invalid_argument);

  Grid2D sparse(2);
  sparse.set(0, 0, 0);
  sparse.set(0, 2, 0);
  CHECK_THROWS_AS(tile_rectangle(sparse, 2), std::invalid_argument);

  // Tiling respects the requested repetitions even beyond the probe power.
  const Grid2D wide = tile_rectangle(row_grid("01"), 6, 4);
  CHECK(grid_is_rich(wide));
}

TEST_CASE("flanked short words stay rich (sample)") {
  const Word zeros = repeat(W("0"), 32);
  const Word ones = repeat(W("1"), 32);
  for (const char* u : {"", "01", "1101", "0110"}) {
    CHECK(is_rich(zeros + W(u) + ones));
    CHECK(is_rich(zeros + W(u) + W("0") + ones));
    CHECK(is_rich(zeros + W("1") + W(u) + ones));
  }
}
