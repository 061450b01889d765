#include "twistcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "twistcalc/bounds.hpp"
#include "twistcalc/errors.hpp"
#include "twistcalc/hplane.hpp"
#include "twistcalc/hurwitz_io.hpp"
#include "twistcalc/search.hpp"
#include "twistcalc/verify.hpp"

namespace twistcalc::cli {

namespace {

struct Options {
  std::string data_dir;
  int lemma_case = 1;
  int example_case = 1;
  std::string relation = "all";
  long max_n = 100;

  std::string tuple;
  std::string moves;
  std::string level = "flat";
  std::string out_path;

  std::uint64_t seed = 42;
  std::size_t max_moves = 200;
  double time_limit = 60;
  std::size_t restarts = 50;
  std::string strategy = "greedy-random";
  unsigned workers = 0;

  std::string bound;
  long h = 2;
  long mu = 1;
  long mu2 = 1;
  double k1 = 1;
  double eps1 = 2;
  double eps2 = 2;
  double d = 0;
  double l = 1;
  std::vector<std::string> terms;
  long cross = 0;
  long i1 = 1;
  long i2 = 1;

  std::uint64_t samples = 10000;
  std::uint64_t mc_seed = 1;
};

DataSet data_of(const Options& o) { return o.data_dir.empty() ? DataSet::installed() : DataSet(o.data_dir); }

std::filesystem::path resolve(const std::string& p, const Options& o) {
  std::filesystem::path path(p);
  if (path.is_absolute() || std::filesystem::exists(path)) return path;
  auto in_data = data_of(o).dir() / path;
  return std::filesystem::exists(in_data) ? in_data : path;
}

int finish(std::ostream& out, const VerificationReport& rep) {
  out << rep.render();
  return rep.passed ? kSuccess : kFailure;
}

int verdict(std::ostream& out, const std::string& name, bool pass) {
  out << "RESULT " << name << ' ' << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kSuccess : kFailure;
}

void print_value(std::ostream& out, const std::string& name, double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  out << name << '=' << s.str() << '\n';
}

int cmd_verify_relation(const Options& o, std::ostream& out) {
  if (o.relation != "all") return finish(out, check_relation(o.relation));
  bool all = true;
  for (const auto& name : relation_names()) {
    const auto rep = check_relation(name);
    out << rep.render();
    all = all && rep.passed;
  }
  return verdict(out, "relations", all);
}

int cmd_verify_example(const Options& o, std::ostream& out) {
  const DataSet data = data_of(o);
  if (o.example_case == 1) return finish(out, example1_check(data.words("ex41.words")));
  return finish(out, example2_check(data.words("ex42.words")));
}

int cmd_apply(const Options& o, std::ostream& out) {
  const TwistTuple t = load_tuple(resolve(o.tuple, o));
  const MoveSequence q = load_moves(resolve(o.moves, o));
  std::size_t zeros = 0;
  std::string payload;
  if (o.level == "sharp") {
    const TwistTuple moved = apply_sequence(t, q);
    zeros = zero_pair_score(matrix_of_tuple(moved));
    payload = format_tuple(moved);
  } else {
    const IntersectionMatrix m = apply_sequence(matrix_of_tuple(t), q);
    zeros = zero_pair_score(m);
    payload = m.entries().to_csv();
  }
  out << "entries: " << t.size() << ", moves: " << q.size() << ", level: " << o.level << '\n';
  out << "zero pairs after: " << zeros << '\n';
  if (o.out_path.empty()) {
    out << payload;
  } else {
    save_text(o.out_path, payload);
    out << "wrote " << o.out_path << '\n';
  }
  return verdict(out, "apply", true);
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const TwistTuple t = load_tuple(resolve(o.tuple, o));
  const IntersectionMatrix m = matrix_of_tuple(t);
  const std::string csv = m.entries().to_csv();
  if (o.out_path.empty()) {
    out << csv;
  } else {
    save_text(o.out_path, csv);
    out << "wrote " << o.out_path << '\n';
  }
  out << "zero pairs: " << zero_pair_score(m) << '\n';
  return verdict(out, "matrix", true);
}

int cmd_search(const Options& o, std::ostream& out) {
  const TwistTuple t = load_tuple(resolve(o.tuple, o));
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.max_moves = o.max_moves;
  cfg.time_limit_seconds = o.time_limit;
  cfg.restarts = o.restarts;
  cfg.strategy = o.strategy == "pure-random" ? SearchStrategy::PureRandom : SearchStrategy::GreedyRandom;
  cfg.workers = o.workers;
  const SearchOutcome r = search_nonzero(t, cfg);
  out << "entries: " << t.size() << ", seed: " << cfg.seed << ", strategy: " << o.strategy << '\n';
  out << "explored: " << r.explored << '\n';
  out << r.detail << '\n';
  if (r.found) {
    out << "length: " << r.sequence.size() << '\n';
    const std::string text = format_moves(r.sequence);
    if (o.out_path.empty()) {
      out << text;
    } else {
      save_text(o.out_path, text);
      out << "wrote " << o.out_path << '\n';
    }
  }
  return verdict(out, "search", r.found);
}

IvanovTerm parse_term(const std::string& s) {
  std::vector<long> v;
  std::stringstream in(s);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) throw ParseError("bad --term '" + s + "', expected r,i1,i2");
    v.push_back(x);
  }
  if (v.size() != 3) throw ParseError("bad --term '" + s + "', expected r,i1,i2");
  return IvanovTerm{v[0], v[1], v[2]};
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const std::string& b = o.bound;
  if (b == "wolpert") {
    print_value(out, "wolpert_factor", wolpert_factor(o.d));
  } else if (b == "penner") {
    print_value(out, "penner_bound", penner_bound(o.h));
  } else if (b == "eppa") {
    print_value(out, "eppa_systole_bound", eppa_systole_bound(o.h));
  } else if (b == "lmax") {
    print_value(out, "lmax", lmax(o.h, o.mu));
  } else if (b == "collar") {
    print_value(out, "collar_partner", collar_partner(o.l));
  } else if (b == "k5") {
    const auto [a, c] = k5_constants(o.k1, o.mu, o.mu2);
    print_value(out, "k5_12", a);
    print_value(out, "k5_21", c);
  } else if (b == "cusp") {
    const auto [lo, hi] = cusp_distance_bracket(o.eps1, o.eps2);
    print_value(out, "lower", lo);
    print_value(out, "upper", hi);
  } else if (b == "ivanov") {
    std::vector<IvanovTerm> terms;
    for (const auto& s : o.terms) terms.push_back(parse_term(s));
    out << "ivanov_lower_bound=" << ivanov_lower_bound(terms, o.cross) << '\n';
  } else if (b == "min-power") {
    out << "min_power_n=" << min_power_n(o.i1, o.i2, o.cross) << '\n';
  }
  return verdict(out, "bounds-" + b, true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dehn twist tuples, Hurwitz moves and the genus-2 checks", "twistcalc"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);
  app.add_option("--data", o.data_dir, "directory holding the shipped resources");

  auto* verify = app.add_subcommand("verify", "run a checker")->require_subcommand(1);
  auto* v_lemma = verify->add_subcommand("lemma", "q_i applied to A_i . (gamma1)");
  v_lemma->add_option("--case", o.lemma_case)->check(CLI::Range(1, 3));
  auto* v_rel = verify->add_subcommand("relation", "chain relations on homology");
  v_rel->add_option("--name", o.relation)
      ->check(CLI::IsMember(std::vector<std::string>{"all", "chain4-pow5", "chain5-pow6", "palindrome-sq"}));
  auto* v_ex = verify->add_subcommand("example", "the two families of monodromy identities");
  v_ex->add_option("--case", o.example_case)->check(CLI::Range(1, 2));
  auto* v_tw = verify->add_subcommand("twisted", "twisted concatenation of the processed tuples");
  v_tw->add_option("--max-n", o.max_n)->check(CLI::Range(1L, 100000L));

  auto* apply = app.add_subcommand("apply", "replay a move sequence");
  apply->add_option("--tuple", o.tuple)->required();
  apply->add_option("--moves", o.moves)->required();
  apply->add_option("--level", o.level)->check(CLI::IsMember({"sharp", "flat"}));
  apply->add_option("--out", o.out_path);

  auto* matrix = app.add_subcommand("matrix", "intersection matrix of a tuple");
  matrix->add_option("--tuple", o.tuple)->required();
  matrix->add_option("--out", o.out_path);

  auto* search = app.add_subcommand("search", "look for a sequence making every pairing nonzero");
  search->add_option("--tuple", o.tuple)->required();
  search->add_option("--seed", o.seed);
  search->add_option("--max-moves", o.max_moves)->check(CLI::PositiveNumber);
  search->add_option("--time-limit", o.time_limit)->check(CLI::PositiveNumber);
  search->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber);
  search->add_option("--strategy", o.strategy)->check(CLI::IsMember({"greedy-random", "pure-random"}));
  search->add_option("--workers", o.workers);
  search->add_option("--out", o.out_path);

  auto* bounds = app.add_subcommand("bounds", "closed-form constants");
  bounds->add_option("name", o.bound)
      ->required()
      ->check(CLI::IsMember({"wolpert", "penner", "eppa", "lmax", "collar", "k5", "cusp", "ivanov", "min-power"}));
  bounds->add_option("--h", o.h);
  bounds->add_option("--mu", o.mu);
  bounds->add_option("--mu2", o.mu2);
  bounds->add_option("--k1", o.k1);
  bounds->add_option("--eps1", o.eps1);
  bounds->add_option("--eps2", o.eps2);
  bounds->add_option("--d", o.d);
  bounds->add_option("--l", o.l);
  bounds->add_option("--term", o.terms, "r,i1,i2 for one twist power (repeatable)");
  bounds->add_option("--cross", o.cross);
  bounds->add_option("--i", o.i1);
  bounds->add_option("--i2", o.i2);

  auto* hplane = app.add_subcommand("hplane", "half-plane checks")->require_subcommand(1);
  auto* h_lemma = hplane->add_subcommand("check-lemma", "Monte-Carlo separation lemma");
  h_lemma->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  h_lemma->add_option("--seed", o.mc_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*v_lemma) return finish(out, verify_lemma_case(data_of(o), o.lemma_case));
    if (*v_rel) return cmd_verify_relation(o, out);
    if (*v_ex) return cmd_verify_example(o, out);
    if (*v_tw) return finish(out, verify_twisted_concatenation(data_of(o), o.max_n));
    if (*apply) return cmd_apply(o, out);
    if (*matrix) return cmd_matrix(o, out);
    if (*search) return cmd_search(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*h_lemma) return finish(out, mc_check_separation_lemma(o.samples, o.mc_seed));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace twistcalc::cli
