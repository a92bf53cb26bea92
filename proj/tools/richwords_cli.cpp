// Command-line front end for the richwords library.
//
// Exit codes: 0 success, 1 negative verdict on a boolean query, 2 usage or
// input errors. Data output is byte-stable for fixed inputs and flags.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "richwords/closures.hpp"
#include "richwords/defect_bounds.hpp"
#include "richwords/enumeration.hpp"
#include "richwords/extension.hpp"
#include "richwords/grid2d.hpp"
#include "richwords/naive.hpp"
#include "richwords/parallel.hpp"
#include "richwords/richness.hpp"
#include "richwords/word.hpp"

namespace {

using json = nlohmann::json;
using namespace richwords;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string format = "text";
  int alphabet = 0;  // 0 = infer from the word
  int threads = 0;   // 0 = hardware concurrency
  bool json() const { return format == "json"; }
  int resolved_threads() const { return threads <= 0 ? default_thread_count() : threads; }
};

struct ParsedWord {
  Word word;
  int alphabet;
};

ParsedWord parse_word(const std::string& text, const Options& opt) {
  Word w = Word::parse(text);
  int alphabet = opt.alphabet;
  if (alphabet == 0) {
    alphabet = std::max(w.min_alphabet(), 1);
  } else if (w.min_alphabet() > alphabet) {
    throw std::invalid_argument("word uses letters outside the declared alphabet");
  }
  return {std::move(w), alphabet};
}

std::string join_letters(const std::vector<Letter>& letters) {
  std::string out;
  for (Letter a : letters) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(letter_to_char(a));
  }
  return out;
}

json letters_json(const std::vector<Letter>& letters) {
  json arr = json::array();
  for (Letter a : letters) arr.push_back(static_cast<int>(a));
  return arr;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open grid file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

int run_check(const Options& opt, const std::string& word_arg) {
  const auto [w, alphabet] = parse_word(word_arg, opt);
  const bool rich = is_rich(w);
  const std::uint64_t pal_count = palindrome_count(w);
  const std::uint64_t d = defect(w);
  const Word suffix = lps(w);
  const Word prefix = lpp(w);
  const bool lps_uni = lps_unioccurrent(w);
  const bool lpp_uni = lpp_unioccurrent(w);

  std::ostringstream text;
  text << "rich: " << (rich ? "true" : "false") << ", palindromes: " << pal_count << '\n'
       << "defect: " << d << '\n'
       << "lps: " << suffix << " (unioccurrent: " << (lps_uni ? "true" : "false") << ")\n"
       << "lpp: " << prefix << " (unioccurrent: " << (lpp_uni ? "true" : "false") << ")\n";
  json j{{"schema_version", kSchemaVersion}, {"command", "check"},
         {"word", w.str()},                 {"rich", rich},
         {"palindromes", pal_count},        {"defect", d},
         {"lps", suffix.str()},             {"lps_unioccurrent", lps_uni},
         {"lpp", prefix.str()},             {"lpp_unioccurrent", lpp_uni}};
  emit(opt, j, text.str());
  return rich ? 0 : 1;
}

int run_defect(const Options& opt, const std::string& word_arg, bool infinite, int depth) {
  const auto [w, alphabet] = parse_word(word_arg, opt);
  const std::uint64_t d = defect(w);
  std::ostringstream text;
  text << "defect: " << d << '\n';
  json j{{"schema_version", kSchemaVersion},
         {"command", "defect"},
         {"word", w.str()},
         {"defect", d}};
  if (infinite) {
    const DefectBracket br = bracket(w, depth);
    text << "infinite defect: [" << br.lower << ", " << br.upper << "]"
         << (br.exact() ? " (exact)" : "") << '\n'
         << "witness: " << br.upper_witness << '\n';
    j["bracket"] = {{"lower", br.lower},
                    {"upper", br.upper},
                    {"exact", br.exact()},
                    {"witness", br.upper_witness},
                    {"depth", br.search_depth}};
  }
  emit(opt, j, text.str());
  return 0;
}

int run_extend(const Options& opt, const std::string& word_arg, const std::string& side_name,
               bool chain, bool search, bool witness, int ways, std::optional<std::uint64_t> depth) {
  const auto [w, alphabet] = parse_word(word_arg, opt);
  const Side side = side_name == "left" ? Side::Left : Side::Right;
  std::ostringstream text;
  json j{{"schema_version", kSchemaVersion}, {"command", "extend"}, {"word", w.str()}};

  if (chain) {
    const std::vector<Letter> c = compulsory_chain(w, alphabet);
    text << "compulsory: " << join_letters(c) << '\n';
    j["compulsory"] = letters_json(c);
    emit(opt, j, text.str());
    return 0;
  }
  if (search) {
    const std::uint64_t limit = depth.value_or(2 * w.size());
    const ExtensionResult r = eventually_extendable_in(w, ways, limit, alphabet);
    text << "found: " << (r.found ? "true" : "false") << '\n';
    if (r.found) {
      text << "witness: " << r.witness << '\n'
           << "branches: " << join_letters(r.branch_letters) << '\n';
    }
    text << "nodes: " << r.nodes_explored << '\n';
    j["found"] = r.found;
    j["nodes"] = r.nodes_explored;
    j["depth_limit"] = r.depth_limit;
    if (r.found) {
      j["witness"] = r.witness.str();
      j["branches"] = letters_json(r.branch_letters);
    }
    emit(opt, j, text.str());
    return r.found ? 0 : 1;
  }
  if (witness) {
    const TwoWayWitness tw = two_way_witness(w, alphabet);
    text << "extension: " << tw.extension << '\n'
         << "extended length: " << w.size() + tw.extension.size() << '\n'
         << "letters: " << join_letters(tw.letters) << '\n';
    j["extension"] = tw.extension.str();
    j["extended_length"] = w.size() + tw.extension.size();
    j["letters"] = letters_json(tw.letters);
    emit(opt, j, text.str());
    return 0;
  }
  const std::vector<Letter> letters = rich_extension_letters(w, side, alphabet);
  text << "letters: " << join_letters(letters) << '\n';
  j["side"] = side_name;
  j["letters"] = letters_json(letters);
  emit(opt, j, text.str());
  return 0;
}

int run_closures(const Options& opt, const std::string& word_arg) {
  const auto [w, alphabet] = parse_word(word_arg, opt);
  const Word right = right_closure(w);
  const Word left = left_closure(w);
  std::ostringstream text;
  text << "right: " << right << '\n' << "left: " << left << '\n';
  json j{{"schema_version", kSchemaVersion}, {"command", "closures"}, {"word", w.str()},
         {"right", right.str()},            {"left", left.str()}};
  if (!w.empty()) {
    const Word proper = proper_closure(w);
    text << "proper: " << proper << '\n';
    j["proper"] = proper.str();
  }
  emit(opt, j, text.str());
  return 0;
}

int run_join(const Options& opt, const std::string& u_arg, const std::string& v_arg) {
  const Word u = Word::parse(u_arg);
  const Word v = Word::parse(v_arg);
  const bool possible = joinable_necessary(u, v);
  std::ostringstream text;
  text << "joinable: " << (possible ? "possibly" : "no") << '\n';
  json j{{"schema_version", kSchemaVersion},
         {"command", "join"},
         {"u", u.str()},
         {"v", v.str()},
         {"joinable_necessary", possible}};
  emit(opt, j, text.str());
  return possible ? 0 : 1;
}

int run_sturmian(const Options& opt, const std::string& word_arg) {
  const auto [w, alphabet] = parse_word(word_arg, opt);
  const bool balanced = is_balanced(w);
  std::ostringstream text;
  json j{{"schema_version", kSchemaVersion},
         {"command", "sturmian"},
         {"word", w.str()},
         {"balanced", balanced}};
  text << "balanced: " << (balanced ? "true" : "false") << '\n';
  if (balanced) {
    const DoubleExtension d = sturmian_double_extension(w);
    text << "extends with 0: " << (d.zero_rich ? "true" : "false") << '\n'
         << "extends with 1: " << (d.one_rich ? "true" : "false") << '\n';
    j["extends_with_0"] = d.zero_rich;
    j["extends_with_1"] = d.one_rich;
  } else {
    const auto v = unbalance_witness(w);
    text << "witness: " << (v ? v->str() : "") << '\n';
    j["witness"] = v ? v->str() : "";
  }
  emit(opt, j, text.str());
  return balanced ? 0 : 1;
}

int run_enumerate(const Options& opt, int max_n, bool bounds, const std::string& csv_path,
                  std::uint64_t budget) {
  const int alphabet = opt.alphabet == 0 ? 2 : opt.alphabet;
  CountSeries series;
  if (bounds) {
    series = build_series(alphabet, max_n, budget, opt.resolved_threads());
  } else {
    series.alphabet_size = alphabet;
    series.exact = count_rich(alphabet, max_n, budget, opt.resolved_threads());
  }

  std::ostringstream text;
  if (bounds) {
    text << "n,exact,upper,lower\n";
    for (int n = 0; n <= max_n; ++n) {
      text << n << ',' << series.exact[n] << ',' << series.upper_count[n] << ','
           << series.lower_recurrence[n] << '\n';
    }
    if (alphabet == 2) {
      const RecurrenceReport rec = upper_bound_recurrence(max_n, budget);
      text << "recurrence flagged at:";
      for (int n : rec.flagged) text << ' ' << n;
      text << '\n';
    }
  } else {
    text << "n,exact\n";
    for (int n = 0; n <= max_n; ++n) text << n << ',' << series.exact[n] << '\n';
  }

  json j{{"schema_version", kSchemaVersion},
         {"command", "enumerate"},
         {"alphabet", alphabet},
         {"exact", series.exact}};
  if (bounds) {
    j["upper"] = series.upper_count;
    j["lower"] = series.lower_recurrence;
    if (alphabet == 2) j["recurrence_flagged"] = upper_bound_recurrence(max_n, budget).flagged;
  }
  if (!csv_path.empty()) {
    std::ostringstream csv;
    emit_series_csv(series, csv);
    write_file(csv_path, csv.str());
  }
  emit(opt, j, text.str());
  return 0;
}

int run_minimal_nonrich(const Options& opt, int n, std::uint64_t budget) {
  const int alphabet = opt.alphabet == 0 ? 2 : opt.alphabet;
  const std::vector<Word> words = minimal_nonrich(alphabet, n, budget);
  std::ostringstream text;
  json arr = json::array();
  for (const Word& w : words) {
    text << w << '\n';
    arr.push_back(w.str());
  }
  json j{{"schema_version", kSchemaVersion},
         {"command", "minimal-nonrich"},
         {"alphabet", alphabet},
         {"n", n},
         {"words", arr}};
  emit(opt, j, text.str());
  return 0;
}

int run_tables(const Options& opt, int max_n, int context, int limit,
               const std::string& csv_path) {
  const auto rows = defect_tables(max_n, context, limit, opt.resolved_threads());
  std::ostringstream csv;
  write_defect_csv(rows, csv);
  if (!csv_path.empty()) write_file(csv_path, csv.str());

  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"d_max", r.d_max},
                   {"dinf_upper_max", r.dinf_upper_max},
                   {"ddif_lower", r.ddif_lower},
                   {"witness_d", r.witness_d.str()},
                   {"witness_dinf", r.witness_dinf.str()},
                   {"witness_ddif", r.witness_ddif.str()}});
  }
  json j{{"schema_version", kSchemaVersion}, {"command", "tables"}, {"rows", arr}};
  emit(opt, j, csv.str());
  return 0;
}

int run_grid_check(const Options& opt, const std::string& path) {
  const Grid2D g = Grid2D::parse(read_file(path), opt.alphabet);
  const auto bad = find_nonrich_run(g);
  std::ostringstream text;
  json j{{"schema_version", kSchemaVersion}, {"command", "grid-check"}, {"rich", !bad}};
  text << "rich: " << (bad ? "false" : "true") << '\n';
  if (bad) {
    text << "offending " << (bad->horizontal ? "horizontal" : "vertical") << " run at (" << bad->i
         << ", " << bad->j << "): " << bad->word << '\n';
    j["offending"] = {{"horizontal", bad->horizontal},
                      {"i", bad->i},
                      {"j", bad->j},
                      {"word", bad->word.str()}};
  }
  emit(opt, j, text.str());
  return bad ? 1 : 0;
}

int run_grid_extend(const Options& opt, const std::string& path, int margin,
                    std::uint64_t budget, const std::string& out_path) {
  const Grid2D g = Grid2D::parse(read_file(path), opt.alphabet);
  const PlaneVerdict v = extend_to_rich_plane(g, margin, budget);
  std::ostringstream text;
  json j{{"schema_version", kSchemaVersion},
         {"command", "grid-extend"},
         {"margin", v.margin},
         {"nodes", v.nodes_explored}};
  switch (v.kind) {
    case PlaneVerdict::Kind::ExtendableToMargin: {
      text << "verdict: extendable\nmargin: " << v.margin << "\nnodes: " << v.nodes_explored
           << '\n';
      j["verdict"] = "extendable";
      if (!out_path.empty() && v.witness) write_file(out_path, v.witness->str());
      emit(opt, j, text.str());
      return 0;
    }
    case PlaneVerdict::Kind::NotExtendable: {
      text << "verdict: not-extendable\n";
      j["verdict"] = "not-extendable";
      if (v.certificate) {
        const PlaneCertificate& c = *v.certificate;
        text << "cell: (" << c.i << ", " << c.j << ")\n"
             << "h-before: " << c.h_before << '\n'
             << "h-after: " << c.h_after << '\n'
             << "v-before: " << c.v_before << '\n'
             << "v-after: " << c.v_after << '\n';
        j["certificate"] = {{"i", c.i},
                            {"j", c.j},
                            {"h_before", c.h_before.str()},
                            {"h_after", c.h_after.str()},
                            {"v_before", c.v_before.str()},
                            {"v_after", c.v_after.str()}};
      }
      if (v.nonrich_run) {
        text << "offending " << (v.nonrich_run->horizontal ? "horizontal" : "vertical")
             << " run at (" << v.nonrich_run->i << ", " << v.nonrich_run->j
             << "): " << v.nonrich_run->word << '\n';
        j["offending"] = {{"horizontal", v.nonrich_run->horizontal},
                          {"i", v.nonrich_run->i},
                          {"j", v.nonrich_run->j},
                          {"word", v.nonrich_run->word.str()}};
      }
      emit(opt, j, text.str());
      return 1;
    }
    case PlaneVerdict::Kind::Unknown:
    default: {
      text << "verdict: unknown\nnodes: " << v.nodes_explored << '\n';
      j["verdict"] = "unknown";
      emit(opt, j, text.str());
      return 0;
    }
  }
}

int run_grid_tile(const Options& opt, const std::string& path, int reps, int power,
                  const std::string& out_path) {
  const Grid2D g = Grid2D::parse(read_file(path), opt.alphabet);
  const Grid2D tiled = tile_rectangle(g, reps, power);
  json j{{"schema_version", kSchemaVersion},
         {"command", "grid-tile"},
         {"reps", reps},
         {"grid", tiled.str()}};
  if (!out_path.empty()) {
    write_file(out_path, tiled.str());
    emit(opt, j, "written: " + out_path + "\n");
  } else {
    emit(opt, j, tiled.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"richwords: palindromic richness toolkit for finite words and grids"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--alphabet", opt.alphabet, "Alphabet size; 0 infers max digit + 1")
      ->check(CLI::Range(0, 10));
  app.add_option("--threads", opt.threads, "Worker threads; 0 uses all cores");

  // Let global flags appear after the subcommand as well.
  app.fallthrough();

  std::string word_arg, word_arg2;
  auto* check = app.add_subcommand("check", "Richness, palindrome count, lps/lpp");
  check->add_option("word", word_arg)->required();

  bool infinite = false;
  int bracket_depth = 4;
  auto* defect_cmd = app.add_subcommand("defect", "Defect and infinite-defect bracket");
  defect_cmd->add_option("word", word_arg)->required();
  defect_cmd->add_flag("--infinite", infinite, "Also bracket the infinite defect");
  defect_cmd->add_option("--depth", bracket_depth, "Context depth for the lower bound");

  std::string side = "right";
  bool chain = false, search = false, tw_witness = false;
  int ways = 2;
  std::optional<std::uint64_t> search_depth;
  auto* extend = app.add_subcommand("extend", "Rich extension queries");
  extend->add_option("word", word_arg)->required();
  extend->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
  extend->add_flag("--chain", chain, "Compulsory extension chain");
  extend->add_flag("--search", search, "Search for eventual n-way extendability");
  extend->add_flag("--witness", tw_witness, "Constructive two-way witness");
  extend->add_option("--ways", ways, "Branches required by --search");
  extend->add_option("--depth", search_depth, "Depth limit for --search (default 2|w|)");

  auto* closures = app.add_subcommand("closures", "Right, left and proper palindromic closures");
  closures->add_option("word", word_arg)->required();

  auto* join = app.add_subcommand("join", "Necessary condition for a common rich superword");
  join->add_option("u", word_arg)->required();
  join->add_option("v", word_arg2)->required();

  auto* sturmian = app.add_subcommand("sturmian", "Balance and two-way rich extendability");
  sturmian->add_option("word", word_arg)->required();

  int max_n = 12;
  bool bounds = false;
  std::string csv_path;
  std::uint64_t budget = kDefaultNodeBudget;
  auto* enumerate = app.add_subcommand("enumerate", "Exact rich word counts");
  enumerate->add_option("--max-n", max_n)->required();
  enumerate->add_flag("--bounds", bounds, "Include the bound series");
  enumerate->add_option("--csv", csv_path, "Also write the series CSV to a file");
  enumerate->add_option("--budget", budget, "Enumeration node budget");

  int mnr_n = 8;
  auto* minimal = app.add_subcommand("minimal-nonrich", "Non-rich words with all factors rich");
  minimal->add_option("--n", mnr_n)->required();

  int tables_n = 10, tables_context = 3, tables_limit = 16;
  std::string tables_csv;
  auto* tables = app.add_subcommand("tables", "Exhaustive binary defect tables");
  tables->add_option("--max-n", tables_n)->required();
  tables->add_option("--context", tables_context, "Bracket context depth");
  tables->add_option("--limit", tables_limit, "Exhaustion limit guard");
  tables->add_option("--csv", tables_csv, "Also write the CSV to a file");

  auto* grid = app.add_subcommand("grid", "Two-dimensional words");
  grid->require_subcommand(1);
  std::string grid_path, grid_out;
  auto* gcheck = grid->add_subcommand("check", "Richness of all runs");
  gcheck->add_option("file", grid_path)->required();
  int margin = 3;
  std::uint64_t grid_budget = 10'000'000;
  auto* gextend = grid->add_subcommand("extend", "Bounded rich-plane extension search");
  gextend->add_option("file", grid_path)->required();
  gextend->add_option("--margin", margin);
  gextend->add_option("--budget", grid_budget);
  gextend->add_option("--out", grid_out, "Write the witness filling to a file");
  int reps = 2, power = 4;
  auto* gtile = grid->add_subcommand("tile", "Replicate a strongly rich rectangle");
  gtile->add_option("file", grid_path)->required();
  gtile->add_option("--reps", reps)->required();
  gtile->add_option("--power", power, "Strong richness probe power");
  gtile->add_option("--out", grid_out, "Write the tiled grid to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(opt, word_arg);
    if (*defect_cmd) return run_defect(opt, word_arg, infinite, bracket_depth);
    if (*extend) return run_extend(opt, word_arg, side, chain, search, tw_witness, ways,
                                   search_depth);
    if (*closures) return run_closures(opt, word_arg);
    if (*join) return run_join(opt, word_arg, word_arg2);
    if (*sturmian) return run_sturmian(opt, word_arg);
    if (*enumerate) return run_enumerate(opt, max_n, bounds, csv_path, budget);
    if (*minimal) return run_minimal_nonrich(opt, mnr_n, budget);
    if (*tables) return run_tables(opt, tables_n, tables_context, tables_limit, tables_csv);
    if (*grid) {
      if (*gcheck) return run_grid_check(opt, grid_path);
      if (*gextend) return run_grid_extend(opt, grid_path, margin, grid_budget, grid_out);
      if (*gtile) return run_grid_tile(opt, grid_path, reps, power, grid_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
