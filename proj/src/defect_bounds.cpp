#include "richwords/defect_bounds.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "richwords/closures.hpp"
#include "richwords/eertree.hpp"
#include "richwords/parallel.hpp"
#include "richwords/richness.hpp"

namespace richwords {

namespace {

int scan_alphabet(const Word& w) { return std::max(w.min_alphabet(), 1); }

std::size_t longest_rich_prefix(const Word& w) {
  Eertree t(scan_alphabet(w));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!t.push(w[i])) return i;
  }
  return w.size();
}

// Defect of x followed by reps copies of p, accepted only when no defect was
// added across the final window of |p|*(|x|+2) pushes. A clean window means
// the periodic tail has settled into creating a palindrome per push, so the
// value bounds the defect of the infinite periodic word.
std::optional<std::uint64_t> periodic_suffix_probe(const Word& x, const Word& p) {
  const std::size_t reps = std::max<std::size_t>(64, x.size() + 16);
  const std::size_t window = p.size() * (x.size() + 2);
  Eertree t(std::max(scan_alphabet(x), scan_alphabet(p)));
  std::size_t last_defect_end = 0;
  for (Letter a : x) {
    if (!t.push(a)) last_defect_end = t.size();
  }
  for (std::size_t r = 0; r < reps; ++r) {
    for (Letter a : p) {
      if (!t.push(a)) last_defect_end = t.size();
    }
  }
  if (t.size() - last_defect_end < window) return std::nullopt;
  return t.defect();
}

std::optional<std::uint64_t> periodic_prefix_probe(const Word& x, const Word& p) {
  return periodic_suffix_probe(x.reversed(), p.reversed());
}

}  // namespace

ClosureSquareBounds upper_bound_closure(const Word& w) {
  if (w.empty()) throw std::invalid_argument("closure bound of the empty word");
  const Word right = right_closure(w);
  const Word left = right_closure(w.reversed());
  return {defect(right + right), defect(left + left)};
}

std::uint64_t upper_bound_rich_edge(const Word& w) {
  if (w.empty()) throw std::invalid_argument("rich edge bound of the empty word");
  const std::size_t prefix = longest_rich_prefix(w);
  const std::size_t suffix = longest_rich_prefix(w.reversed());
  return w.size() - std::max(prefix, suffix);
}

std::uint64_t upper_bound_letter_power(const Word& w) {
  if (w.empty()) throw std::invalid_argument("letter power bound of the empty word");
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (Letter a : w.alphabet()) {
    const std::size_t power = w.max_run(a);
    std::size_t edge = 0;
    std::size_t head = 0;
    while (head < w.size() && w[head] == a) ++head;
    std::size_t tail = 0;
    while (tail < w.size() && w[w.size() - 1 - tail] == a) ++tail;
    edge = std::max(head, tail);
    best = std::min<std::uint64_t>(best, power - std::min(edge, power));
  }
  return defect(w) + best;
}

std::uint64_t lower_bound_context(const Word& w, int depth) {
  if (depth < 0) throw std::invalid_argument("context depth must be non-negative");
  const std::vector<Letter> alphabet = w.alphabet();
  if (alphabet.empty() || depth == 0) return defect(w);

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto k = static_cast<std::size_t>(depth);

  // Right contexts on top of a fixed left context. A candidate needs a full
  // side; defects never shrink under extension, which drives the pruning.
  const auto right_dfs = [&](auto&& self, Eertree& t, std::size_t s_len,
                             std::size_t y_len) -> void {
    const std::uint64_t d = t.defect();
    if (d >= best) return;
    if (s_len == k || y_len == k) best = d;
    if (y_len == k) return;
    for (Letter a : alphabet) {
      t.push(a);
      self(self, t, s_len, y_len + 1);
      t.undo();
    }
  };

  std::vector<Letter> s_rev;  // left context, nearest letter first
  const auto left_rec = [&](auto&& self) -> void {
    Eertree t(scan_alphabet(w));
    for (auto it = s_rev.rbegin(); it != s_rev.rend(); ++it) t.push(*it);
    t.push_word(w);
    if (t.defect() >= best) return;  // no extension of this context improves
    right_dfs(right_dfs, t, s_rev.size(), 0);
    if (s_rev.size() < k) {
      for (Letter a : alphabet) {
        s_rev.push_back(a);
        self(self);
        s_rev.pop_back();
      }
    }
  };
  left_rec(left_rec);
  return best;
}

DefectBracket bracket(const Word& w, int depth) {
  if (w.empty()) throw std::invalid_argument("bracket of the empty word");
  DefectBracket out;
  out.search_depth = depth;
  out.lower = lower_bound_context(w, depth);

  std::uint64_t upper = std::numeric_limits<std::uint64_t>::max();
  std::string witness;
  const auto offer = [&](std::uint64_t value, std::string name) {
    if (value < upper) {
      upper = value;
      witness = std::move(name);
    }
  };

  const std::vector<Letter> alphabet = w.alphabet();
  for (Letter a : alphabet) {
    Word p;
    p.push_back(a);
    if (const auto v = periodic_prefix_probe(w, p)) {
      offer(*v, std::string("prefix-power ") + letter_to_char(a) + "^K\xc2\xb7w");
    }
    if (const auto v = periodic_suffix_probe(w, p)) {
      offer(*v, std::string("suffix-power w\xc2\xb7") + letter_to_char(a) + "^K");
    }
  }
  for (Letter a : alphabet) {
    for (Letter b : alphabet) {
      if (a == b) continue;
      Word p;
      p.push_back(a);
      p.push_back(b);
      const std::string ab{letter_to_char(a), letter_to_char(b)};
      if (const auto v = periodic_suffix_probe(w, p)) {
        offer(*v, "suffix-pair-power w\xc2\xb7(" + ab + ")^K");
      }
      if (const auto v = periodic_prefix_probe(w, p)) {
        offer(*v, "prefix-pair-power (" + ab + ")^K\xc2\xb7w");
      }
    }
  }
  const ClosureSquareBounds squares = upper_bound_closure(w);
  offer(squares.via_right, "closure-square right");
  offer(squares.via_left, "closure-square left");
  offer(upper_bound_rich_edge(w), "rich-edge");
  offer(upper_bound_letter_power(w), "letter-power");

  out.upper = upper;
  out.upper_witness = std::move(witness);
  if (out.lower > out.upper) throw std::logic_error("defect bracket inverted");
  return out;
}

std::vector<DefectTableRow> defect_tables(int n_max, int context_depth, int exhaustion_limit,
                                          int threads) {
  if (n_max < 0) throw std::invalid_argument("table length must be non-negative");
  if (n_max > exhaustion_limit) {
    throw std::invalid_argument("table length exceeds the exhaustion limit of " +
                                std::to_string(exhaustion_limit) +
                                "; raise the limit explicitly for longer runs");
  }

  struct Extreme {
    std::uint64_t value = 0;
    Word witness;
    void offer(std::uint64_t v, const Word& w, bool seeded) {
      if (!seeded || v > value) {
        value = v;
        witness = w;
      }
    }
  };

  std::vector<DefectTableRow> rows;
  Extreme d_max, up_max, dd_max;
  d_max.witness = Word();
  up_max.witness = Word();
  dd_max.witness = Word();
  rows.push_back({0, 0, 0, 0, Word(), Word(), Word()});

  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    struct Local {
      bool any = false;
      std::uint64_t d = 0, up = 0, dd = 0;
      std::uint64_t d_id = 0, up_id = 0, dd_id = 0;
    };
    std::vector<Local> locals(std::max(1, threads));
    parallel_chunks(total, threads, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
      Local& loc = locals[chunk];
      for (std::uint64_t id = lo; id < hi; ++id) {
        Word w;
        for (int bit = n - 1; bit >= 0; --bit) {
          w.push_back(static_cast<Letter>((id >> bit) & 1));
        }
        const std::uint64_t d = defect(w);
        const DefectBracket br = bracket(w, context_depth);
        const std::uint64_t dd = br.lower - d;
        if (!loc.any || d > loc.d) {
          loc.d = d;
          loc.d_id = id;
        }
        if (!loc.any || br.upper > loc.up) {
          loc.up = br.upper;
          loc.up_id = id;
        }
        if (!loc.any || dd > loc.dd) {
          loc.dd = dd;
          loc.dd_id = id;
        }
        loc.any = true;
      }
    });

    const auto word_of = [n](std::uint64_t id) {
      Word w;
      for (int bit = n - 1; bit >= 0; --bit) w.push_back(static_cast<Letter>((id >> bit) & 1));
      return w;
    };
    // Deterministic merge: higher value first, then the smaller word id.
    const auto merge = [&](auto field_value, auto field_id, Extreme& target) {
      bool seeded = false;
      std::uint64_t value = 0, id = 0;
      for (const Local& loc : locals) {
        if (!loc.any) continue;
        const std::uint64_t v = field_value(loc);
        const std::uint64_t i = field_id(loc);
        if (!seeded || v > value || (v == value && i < id)) {
          value = v;
          id = i;
          seeded = true;
        }
      }
      if (seeded && value > target.value) {
        target.value = value;
        target.witness = word_of(id);
      }
    };
    merge([](const Local& l) { return l.d; }, [](const Local& l) { return l.d_id; }, d_max);
    merge([](const Local& l) { return l.up; }, [](const Local& l) { return l.up_id; }, up_max);
    merge([](const Local& l) { return l.dd; }, [](const Local& l) { return l.dd_id; }, dd_max);

    rows.push_back({n, d_max.value, up_max.value, dd_max.value, d_max.witness, up_max.witness,
                    dd_max.witness});
  }
  return rows;
}

void write_defect_csv(const std::vector<DefectTableRow>& rows, std::ostream& os) {
  os << "n,d_max,dinf_upper_max,ddif_lower,witness_d,witness_dinf,witness_ddif\n";
  for (const DefectTableRow& r : rows) {
    os << r.n << ',' << r.d_max << ',' << r.dinf_upper_max << ',' << r.ddif_lower << ','
       << r.witness_d.str() << ',' << r.witness_dinf.str() << ',' << r.witness_ddif.str() << '\n';
  }
}

}  // namespace richwords
