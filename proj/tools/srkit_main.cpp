#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srkit/actions.hpp"
#include "srkit/bounds.hpp"
#include "srkit/codes.hpp"
#include "srkit/errors.hpp"
#include "srkit/io.hpp"
#include "srkit/pascal.hpp"
#include "srkit/search.hpp"
#include "srkit/toeplitz.hpp"

namespace {

using namespace srkit;

constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 = success / property verified true, 1 = verified false
/// (not superregular, no witness exists, not MDP), 2 = budget or usage.
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kAbort = 2;

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::completed: return "completed";
    case Outcome::budget_exceeded: return "budget-exceeded";
    case Outcome::cap_exceeded: return "cap-exceeded";
  }
  return "?";
}

/// Shared report envelope. Identical inputs give byte-identical output apart
/// from wall_seconds (budget-truncated runs additionally vary in node and
/// depth counters, since those depend on where the clock cut the search).
struct Run {
  json report;
  bool want_json = false;
  std::ostringstream text;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Run(const std::string& subcommand) {
    report["tool_version"] = kVersion;
    report["subcommand"] = subcommand;
    report["deterministic"] = true;
    report["inputs"] = json::object();
  }

  json& inputs() { return report["inputs"]; }

  int finish(int exit_code) {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["exit_code"] = exit_code;
    report["wall_seconds"] = wall;
    if (want_json)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << text.str();
    return exit_code;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(errc::usage, "cannot open " + path + " for writing");
  out << content;
  if (!out.flush()) fail(errc::usage, "write to " + path + " failed");
}

json stats_json(const SearchStats& s) {
  json j;
  j["nodes_visited"] = s.nodes;
  j["deepest_level"] = s.deepest_level;
  return j;
}

Normalization parse_norm(const std::string& name) {
  if (name == "none") return Normalization::none;
  if (name == "a0") return Normalization::a0;
  if (name == "a0a1") return Normalization::a0a1;
  fail(errc::usage, "unknown normalization " + name);
}

std::vector<ActionKind> parse_generators(const std::string& csv) {
  std::vector<ActionKind> kinds;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inverse")
      kinds.push_back(ActionKind::inverse);
    else if (item == "scale")
      kinds.push_back(ActionKind::scale);
    else if (item == "frobenius")
      kinds.push_back(ActionKind::frobenius);
    else if (item == "global-scale")
      kinds.push_back(ActionKind::global_scale);
    else
      fail(errc::usage, "unknown generator " + item);
  }
  if (kinds.empty()) fail(errc::usage, "empty generator list");
  return kinds;
}

json bound_json(const BoundReport& r) {
  json j;
  j["gamma"] = r.gamma;
  j["catalan"] = r.catalan_prev.str();
  j["walks"] = r.walks.str();
  j["L"] = r.L_count.str();
  j["Lprime"] = r.Lprime_count.str();
  j["N"] = r.N.str();
  j["bound"] = r.bound.str();
  return j;
}

// ---------------------------------------------------------------- check ---

struct CheckArgs {
  std::string in;
};

int run_check(const CheckArgs& a, Run& run) {
  const Toeplitz t = load_toeplitz(a.in);
  run.inputs()["in"] = a.in;
  run.inputs()["q"] = t.field->q();
  run.inputs()["gamma"] = t.gamma();
  const SrCheck r = is_superregular(t);
  run.report["outcome"] = r.superregular ? "superregular" : "not-superregular";
  if (r.superregular) {
    run.text << "superregular\n";
    return kTrue;
  }
  run.text << "not superregular\n" << witness_line(*r.witness) << "\n";
  json w;
  w["s"] = static_cast<int>(r.witness->rows.size());
  w["rows"] = r.witness->rows;
  w["cols"] = r.witness->cols;
  w["line"] = witness_line(*r.witness);
  run.report["witness"] = w;
  return kFalse;
}

// --------------------------------------------------------------- search ---

struct SearchArgs {
  std::uint32_t q = 0;
  int gamma = 0;
  bool count = false;
  bool enumerate = false;
  std::string normalize = "none";
  double budget = 60.0;
  int threads = 1;
  std::string out;
};

int run_search_cmd(const SearchArgs& a, Run& run) {
  SearchConfig cfg;
  cfg.field = field_for_order(a.q);
  cfg.gamma = a.gamma;
  cfg.norm = parse_norm(a.normalize);
  cfg.budget_seconds = a.budget;
  cfg.threads = a.threads;
  run.inputs()["q"] = a.q;
  run.inputs()["gamma"] = a.gamma;
  run.inputs()["mode"] = a.count ? "count" : a.enumerate ? "enumerate" : "find";
  run.inputs()["normalize"] = a.normalize;
  run.inputs()["budget_seconds"] = a.budget;
  run.inputs()["threads"] = a.threads;
  if (a.count && a.enumerate) fail(errc::usage, "--count and --enumerate are exclusive");

  if (a.count) {
    const CountResult r = count_superregular(cfg);
    run.report["outcome"] = outcome_name(r.outcome);
    run.report["count"] = r.count;
    run.report["stats"] = stats_json(r.stats);
    run.text << "count=" << r.count << " nodes=" << r.stats.nodes << "\n";
    if (r.outcome != Outcome::completed) {
      run.text << "budget exceeded before the count completed\n";
      return kAbort;
    }
    return kTrue;
  }

  if (a.enumerate) {
    json list = json::array();
    std::uint64_t found = 0;
    std::ostringstream matrices;
    enumerate_superregular(cfg, [&](const Toeplitz& t) {
      ++found;
      list.push_back(toeplitz_to_json(t));
      matrices << to_text(t);
      return true;
    });
    run.report["outcome"] = "completed";
    run.report["count"] = found;
    run.report["witnesses"] = list;
    run.text << matrices.str() << "count=" << found << "\n";
    if (!a.out.empty()) {
      write_file(a.out, matrices.str());
      run.report["witness_path"] = a.out;
    }
    return kTrue;
  }

  const FindResult r = find_superregular(cfg);
  run.report["outcome"] = outcome_name(r.outcome);
  run.report["found"] = r.found;
  run.report["witness"] = r.found ? toeplitz_to_json(*r.witness) : json();
  run.report["stats"] = stats_json(r.stats);
  if (r.found) {
    run.text << to_text(*r.witness);
    run.text << "nodes=" << r.stats.nodes << "\n";
    if (!a.out.empty()) {
      write_file(a.out, to_text(*r.witness));
      run.report["witness_path"] = a.out;
    }
    return kTrue;
  }
  if (r.outcome == Outcome::completed) {
    run.text << "no superregular matrix of dimension " << a.gamma + 1 << " over GF(" << a.q
             << ") (search exhausted, " << r.stats.nodes << " nodes)\n";
    return kFalse;
  }
  run.text << "budget exceeded at depth " << r.stats.deepest_level << " after " << r.stats.nodes
           << " nodes\n";
  return kAbort;
}

// -------------------------------------------------------------- minfield ---

struct MinfieldArgs {
  int gamma = 0;  // matrix dimension, matching the summary table's row labels
  std::string family = "primes";
  std::uint32_t cap = 127;
  double budget = 60.0;
  int threads = 1;
  std::string out;
};

int run_minfield(const MinfieldArgs& a, Run& run) {
  run.inputs()["gamma"] = a.gamma;
  run.inputs()["family"] = a.family;
  run.inputs()["cap"] = a.cap;
  run.inputs()["budget_seconds"] = a.budget;
  run.inputs()["threads"] = a.threads;
  const FieldFamily family = [&] {
    if (a.family == "primes") return FieldFamily::primes;
    if (a.family == "prime-powers") return FieldFamily::prime_powers;
    fail(errc::usage, "unknown family " + a.family);
  }();
  if (a.gamma < 2) fail(errc::usage, "dimension must be at least 2");
  if (a.gamma > 10) fail(errc::usage, "dimensions above 10 are out of scope");

  if (a.gamma == 10) {
    // The dimension 10 row is only known as an upper bound: confirm that
    // GF(127) admits a witness instead of hunting for the true minimum.
    SearchConfig cfg;
    cfg.field = field_for_order(127);
    cfg.gamma = 9;
    cfg.norm = Normalization::a0a1;
    cfg.budget_seconds = a.budget;
    cfg.threads = a.threads;
    const FindResult r = find_superregular(cfg);
    run.report["outcome"] = r.found ? "upper-bound-confirmed" : outcome_name(r.outcome);
    run.report["q"] = 127;
    run.report["found"] = r.found;
    run.report["witness"] = r.found ? toeplitz_to_json(*r.witness) : json();
    run.report["stats"] = stats_json(r.stats);
    if (r.found) {
      run.text << "q<=127 confirmed\n" << to_text(*r.witness);
      if (!a.out.empty()) {
        write_file(a.out, to_text(*r.witness));
        run.report["witness_path"] = a.out;
      }
      return kTrue;
    }
    if (r.outcome == Outcome::completed) {
      run.text << "no witness over GF(127): exhausted\n";
      return kFalse;
    }
    run.text << "budget exceeded after " << r.stats.nodes << " nodes\n";
    return kAbort;
  }

  const MinFieldResult r = min_field_size(a.gamma, family, a.cap, a.budget, a.threads);
  run.report["outcome"] = outcome_name(r.outcome);
  run.report["ruled_out"] = r.ruled_out;
  run.report["stats"] = stats_json(r.stats);
  if (r.q) {
    run.report["q"] = *r.q;
    run.report["witness"] = toeplitz_to_json(*r.witness);
    run.text << "q=" << *r.q << "\n" << to_text(*r.witness);
    run.text << "ruled out:";
    for (auto v : r.ruled_out) run.text << " " << v;
    run.text << "\n";
    if (!a.out.empty()) {
      write_file(a.out, to_text(*r.witness));
      run.report["witness_path"] = a.out;
    }
    return kTrue;
  }
  run.report["q"] = json();
  run.report["witness"] = json();
  if (r.outcome == Outcome::cap_exceeded) {
    run.text << "no order up to " << a.cap << " admits a witness (all refuted by exhaustion)\n";
    return kFalse;
  }
  run.text << "budget exceeded; orders proven exhausted:";
  for (auto v : r.ruled_out) run.text << " " << v;
  run.text << "\n";
  return kAbort;
}

// ------------------------------------------------------------ conjecture ---

struct ConjectureArgs {
  int gamma = 0;  // matrix dimension; the field order follows as 2^(gamma-2)
  double budget = 60.0;
  int threads = 1;
  std::string out;
};

int run_conjecture(const ConjectureArgs& a, Run& run) {
  run.inputs()["gamma"] = a.gamma;
  run.inputs()["budget_seconds"] = a.budget;
  run.inputs()["threads"] = a.threads;
  const ConjectureResult r = test_conjecture(a.gamma, a.budget, a.threads);
  const char* status = r.status == ConjectureResult::Status::witness_found ? "witness-found"
                       : r.status == ConjectureResult::Status::refuted_by_exhaustion
                           ? "refuted-by-exhaustion"
                           : "budget-exceeded";
  run.report["outcome"] = status;
  run.report["q"] = r.q;
  run.report["witness"] = r.witness ? toeplitz_to_json(*r.witness) : json();
  run.report["stats"] = stats_json(r.stats);
  run.text << "dimension " << a.gamma << " over GF(" << r.q << "): " << status << "\n";
  if (r.witness) {
    run.text << to_text(*r.witness);
    if (!a.out.empty()) {
      write_file(a.out, to_text(*r.witness));
      run.report["witness_path"] = a.out;
    }
  }
  switch (r.status) {
    case ConjectureResult::Status::witness_found: return kTrue;
    case ConjectureResult::Status::refuted_by_exhaustion: return kFalse;
    case ConjectureResult::Status::budget_exceeded: return kAbort;
  }
  return kAbort;
}

// ---------------------------------------------------------------- orbit ---

struct OrbitArgs {
  std::string in;
  std::string generators = "inverse,scale,frobenius";
  bool canonical = false;
};

int run_orbit(const OrbitArgs& a, Run& run) {
  const Toeplitz t = load_toeplitz(a.in);
  run.inputs()["in"] = a.in;
  run.inputs()["generators"] = a.generators;
  run.inputs()["canonical"] = a.canonical;
  const std::vector<ActionKind> kinds = parse_generators(a.generators);

  if (a.canonical) {
    const Toeplitz c = canonical_form(t, kinds);
    run.report["outcome"] = "completed";
    run.report["canonical"] = toeplitz_to_json(c);
    run.text << to_text(c);
    return kTrue;
  }

  const std::vector<OrbitElement> orb = orbit(t, kinds);
  run.report["outcome"] = "completed";
  run.report["size"] = orb.size();
  json list = json::array();
  for (const OrbitElement& e : orb) {
    json item;
    item["word"] = e.word;
    item["matrix"] = toeplitz_to_json(e.matrix);
    list.push_back(std::move(item));
    run.text << "# " << (e.word.empty() ? "seed" : e.word) << "\n" << to_text(e.matrix);
  }
  run.report["elements"] = list;
  run.text << "size=" << orb.size() << "\n";
  return kTrue;
}

// ---------------------------------------------------------------- bound ---

struct BoundArgs {
  int gamma = 0;
  std::string table;
};

int run_bound(const BoundArgs& a, Run& run) {
  if (!a.table.empty()) {
    const auto dots = a.table.find("..");
    if (dots == std::string::npos) fail(errc::usage, "--table expects A..B");
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(a.table.substr(0, dots));
      hi = std::stoi(a.table.substr(dots + 2));
    } catch (const std::exception&) {
      fail(errc::usage, "--table expects A..B");
    }
    if (lo < 1 || hi < lo || hi > 1000) fail(errc::usage, "table range out of bounds");
    run.inputs()["table"] = a.table;
    json rows = json::array();
    for (int g = lo; g <= hi; ++g) {
      const BoundReport r = field_size_bound(g);
      rows.push_back(bound_json(r));
      run.text << g << " " << r.bound << "\n";
    }
    run.report["outcome"] = "completed";
    run.report["rows"] = rows;
    return kTrue;
  }
  if (a.gamma < 1) fail(errc::usage, "--gamma must be at least 1 (or use --table A..B)");
  run.inputs()["gamma"] = a.gamma;
  const BoundReport r = field_size_bound(a.gamma);
  run.report["outcome"] = "completed";
  run.report["bound"] = bound_json(r);
  run.text << "gamma=" << r.gamma << " catalan=" << r.catalan_prev << " walks=" << r.walks
           << " L=" << r.L_count << " Lprime=" << r.Lprime_count << " N=" << r.N
           << " bound=" << r.bound << "\n";
  return kTrue;
}

// --------------------------------------------------------- construct-mdp ---

struct ConstructArgs {
  std::string in;
  int n = 0, k = 0, delta = 0;
  int j = -1;  // defaults to L
  std::string out;
};

int run_construct(const ConstructArgs& a, Run& run) {
  const Toeplitz t = load_toeplitz(a.in);
  const CodeParams params{a.n, a.k, a.delta};
  validate_params(params);
  const int j = a.j >= 0 ? a.j : params.L();
  run.inputs()["in"] = a.in;
  run.inputs()["n"] = a.n;
  run.inputs()["k"] = a.k;
  run.inputs()["delta"] = a.delta;
  run.inputs()["j"] = j;
  const MdpExtraction ex = extract_mdp(t, params, j);
  run.report["outcome"] = "max-span-verified";
  run.report["rows"] = ex.rows1;
  run.report["cols"] = ex.cols1;
  run.report["assembled"] = mat_to_json(ex.assembled);
  run.text << "# rows:";
  for (int v : ex.rows1) run.text << " " << v;
  run.text << "\n# cols:";
  for (int v : ex.cols1) run.text << " " << v;
  run.text << "\n" << to_text(ex.assembled);
  if (!a.out.empty()) {
    write_file(a.out, to_text(ex.assembled));
    run.report["output_path"] = a.out;
  }
  return kTrue;
}

// -------------------------------------------------------------- coldist ---

struct ColdistArgs {
  std::string in;      // generator matrix
  std::string parity;  // transposed parity data, n rows
  int n = 0, k = 0;
  int j = -1;
  std::uint64_t enum_budget = std::uint64_t(1) << 24;
};

int run_coldist(const ColdistArgs& a, Run& run) {
  if (a.j < 0) fail(errc::usage, "--j is required");
  if (a.in.empty() == a.parity.empty())
    fail(errc::usage, "pass exactly one of --in (generator) or --parity (transposed parity)");
  int d = 0, n = 0, k = 0;
  if (!a.in.empty()) {
    const PolyMatrix g = load_poly_matrix(a.in);
    n = g.rows;
    k = g.cols;
    run.inputs()["in"] = a.in;
    run.inputs()["method"] = "generator";
    d = column_distance(g, a.j, a.enum_budget);
  } else {
    if (a.n <= 0 || a.k <= 0) fail(errc::usage, "--parity needs --n and --k");
    const PolyMatrix h = load_poly_matrix(a.parity);
    n = a.n;
    k = a.k;
    run.inputs()["in"] = a.parity;
    run.inputs()["method"] = "dual";
    d = dual_column_distance(h, n, k, a.j);
  }
  run.inputs()["n"] = n;
  run.inputs()["k"] = k;
  run.inputs()["j"] = a.j;
  run.inputs()["enum_budget"] = a.enum_budget;
  const int bound = coldist_bound({n, k, 0}, a.j);
  run.report["outcome"] = "completed";
  run.report["d"] = d;
  run.report["bound"] = bound;
  run.text << "d=" << d << " bound=" << bound << "\n";
  return kTrue;
}

// -------------------------------------------------------------- certify ---

struct CertifyArgs {
  std::string in;
  int n = 0, k = 0, delta = 0;
  std::uint64_t enum_budget = std::uint64_t(1) << 24;
};

int run_certify(const CertifyArgs& a, Run& run) {
  const PolyMatrix g = load_poly_matrix(a.in);
  const CodeParams params{a.n, a.k, a.delta};
  validate_params(params);
  if (g.rows != a.n || g.cols != a.k)
    fail(errc::usage, "generator shape " + std::to_string(g.rows) + "x" + std::to_string(g.cols) +
                          " does not match --n/--k");
  run.inputs()["in"] = a.in;
  run.inputs()["n"] = a.n;
  run.inputs()["k"] = a.k;
  run.inputs()["delta"] = a.delta;
  run.inputs()["enum_budget"] = a.enum_budget;
  const CertifyReport r = mdp_certify(g, params, a.enum_budget);
  run.report["outcome"] = r.is_mdp ? "mdp" : "not-mdp";
  run.report["L"] = r.L;
  run.report["profile"] = r.profile;
  run.report["bounds"] = r.bounds;
  run.report["methods"] = r.profile_method;
  run.report["monotone"] = r.monotone;
  run.report["within_bounds"] = r.within_bounds;
  json cx;
  cx["delta_hat"] = r.complexity.delta_hat;
  cx["declared"] = a.delta;
  cx["matches"] = r.delta_matches;
  cx["basic"] = r.complexity.basic;
  cx["minor_degrees"] = r.complexity.minor_degrees;
  cx["degree_sum"] = r.complexity.degree_sum;
  run.report["complexity"] = cx;
  run.text << "L=" << r.L << "\nprofile:";
  for (int d : r.profile) run.text << " " << d;
  run.text << "\nbounds: ";
  for (int b : r.bounds) run.text << " " << b;
  run.text << "\nmethods:";
  for (const std::string& m : r.profile_method) run.text << " " << m;
  run.text << "\nmdp: " << (r.is_mdp ? "yes" : "no") << "\nmonotone: "
           << (r.monotone ? "yes" : "no") << " within-bounds: " << (r.within_bounds ? "yes" : "no")
           << "\ndelta-hat: " << r.complexity.delta_hat << " declared: " << a.delta
           << " matches: " << (r.delta_matches ? "yes" : "no")
           << " basic: " << (r.complexity.basic ? "yes" : "no") << "\n";
  return r.is_mdp ? kTrue : kFalse;
}

// --------------------------------------------------------------- pascal ---

struct PascalArgs {
  int gamma = 0;
  std::uint32_t prime = 0;
  bool min_prime = false;
  std::uint32_t cap = 10000;
  std::string out;
};

int run_pascal(const PascalArgs& a, Run& run) {
  if (a.gamma < 1) fail(errc::usage, "--gamma must be at least 1");
  run.inputs()["gamma"] = a.gamma;
  if (a.prime != 0 && a.min_prime) fail(errc::usage, "--prime and --min-prime are exclusive");

  if (a.prime != 0) {
    run.inputs()["prime"] = a.prime;
    const Toeplitz t = pascal_mod_p(a.gamma, a.prime);
    const SrCheck r = is_superregular(t);
    run.report["outcome"] = r.superregular ? "superregular" : "not-superregular";
    run.report["matrix"] = toeplitz_to_json(t);
    run.text << to_text(t) << (r.superregular ? "superregular\n" : "not superregular\n");
    if (!r.superregular) {
      run.report["witness"] = witness_line(*r.witness);
      run.text << witness_line(*r.witness) << "\n";
    }
    if (!a.out.empty()) {
      write_file(a.out, to_text(t));
      run.report["output_path"] = a.out;
    }
    return r.superregular ? kTrue : kFalse;
  }

  if (a.min_prime) {
    run.inputs()["cap"] = a.cap;
    const PascalMinPrime r = pascal_min_prime(a.gamma, a.cap);
    run.report["outcome"] = outcome_name(r.outcome);
    run.report["failures"] = r.failures;
    if (r.prime) {
      run.report["prime"] = *r.prime;
      run.report["matrix"] = toeplitz_to_json(*r.witness);
      run.text << "p=" << *r.prime << "\n" << to_text(*r.witness);
      run.text << "failed primes:";
      for (auto p : r.failures) run.text << " " << p;
      run.text << "\n";
      if (!a.out.empty()) {
        write_file(a.out, to_text(*r.witness));
        run.report["output_path"] = a.out;
      }
      return kTrue;
    }
    run.report["prime"] = json();
    run.text << "no prime up to " << a.cap << " makes the reduction superregular\n";
    return kFalse;
  }

  // No mode flag: show the integer binomial column the construction reduces.
  const PascalMatrix pm = pascal_power(a.gamma);
  run.report["outcome"] = "completed";
  json col = json::array();
  run.text << "col:";
  for (const BigInt& v : pm.col) {
    col.push_back(v.str());
    run.text << " " << v;
  }
  run.text << "\n";
  run.report["col"] = col;
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superregular Toeplitz matrices and MDP convolutional code data over finite fields"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  bool want_json = false;
  app.add_flag("--json", want_json, "machine-readable report on stdout")->configurable(false);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "verify superregularity of a matrix file");
  check->add_option("--in", check_args.in, "matrix file")->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "search for superregular matrices");
  search->add_option("--q", search_args.q, "field order")->required();
  search->add_option("--gamma", search_args.gamma, "dimension minus one")->required();
  search->add_flag("--count", search_args.count, "count all matrices instead of finding one");
  search->add_flag("--enumerate", search_args.enumerate, "print every matrix found");
  search->add_option("--normalize", search_args.normalize, "none | a0 | a0a1 (find mode only)");
  search->add_option("--budget", search_args.budget, "time budget in seconds");
  search->add_option("--threads", search_args.threads, "worker threads")->envname("SRKIT_THREADS");
  search->add_option("--out", search_args.out, "write the witness to this file");

  MinfieldArgs minfield_args;
  auto* minfield = app.add_subcommand("minfield", "smallest field order admitting a given dimension");
  minfield->add_option("--gamma", minfield_args.gamma, "matrix dimension (summary table row)")->required();
  minfield->add_option("--family", minfield_args.family, "primes | prime-powers");
  minfield->add_option("--cap", minfield_args.cap, "largest order to try");
  minfield->add_option("--budget", minfield_args.budget, "time budget per field in seconds");
  minfield->add_option("--threads", minfield_args.threads, "worker threads")->envname("SRKIT_THREADS");
  minfield->add_option("--out", minfield_args.out, "write the witness to this file");

  ConjectureArgs conjecture_args;
  auto* conjecture = app.add_subcommand("conjecture", "probe dimension d over GF(2^(d-2))");
  conjecture->add_option("--gamma", conjecture_args.gamma, "matrix dimension, at least 5")->required();
  conjecture->add_option("--budget", conjecture_args.budget, "time budget in seconds");
  conjecture->add_option("--threads", conjecture_args.threads, "worker threads")->envname("SRKIT_THREADS");
  conjecture->add_option("--out", conjecture_args.out, "write the witness to this file");

  OrbitArgs orbit_args;
  auto* orbit_cmd = app.add_subcommand("orbit", "closure of a matrix under the symmetry actions");
  orbit_cmd->add_option("--in", orbit_args.in, "matrix file")->required();
  orbit_cmd->add_option("--generators", orbit_args.generators,
                        "comma list of inverse, scale, frobenius, global-scale");
  orbit_cmd->add_flag("--canonical", orbit_args.canonical, "print only the canonical orbit element");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "field size sufficient for existence, by dimension");
  bound->add_option("--gamma", bound_args.gamma, "matrix dimension");
  bound->add_option("--table", bound_args.table, "dimension range A..B, one row per dimension");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct-mdp", "extract MDP parity data from a matrix");
  construct->add_option("--in", construct_args.in, "superregular matrix file")->required();
  construct->add_option("--n", construct_args.n, "code length")->required();
  construct->add_option("--k", construct_args.k, "code dimension")->required();
  construct->add_option("--delta", construct_args.delta, "code complexity")->required();
  construct->add_option("--j", construct_args.j, "window index (default: the distance-profile length L)");
  construct->add_option("--out", construct_args.out, "write the assembled matrix to this file");

  ColdistArgs coldist_args;
  auto* coldist = app.add_subcommand("coldist", "column distance of a convolutional code");
  coldist->add_option("--in", coldist_args.in, "generator matrix file (n x k, polynomial entries)");
  coldist->add_option("--parity", coldist_args.parity, "transposed parity file (n x (n-k))");
  coldist->add_option("--n", coldist_args.n, "code length (with --parity)");
  coldist->add_option("--k", coldist_args.k, "code dimension (with --parity)");
  coldist->add_option("--j", coldist_args.j, "window index")->required();
  coldist->add_option("--enum-budget", coldist_args.enum_budget, "message enumeration cap");

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "column distance profile and MDP verdict");
  certify->add_option("--in", certify_args.in, "generator matrix file")->required();
  certify->add_option("--n", certify_args.n, "code length")->required();
  certify->add_option("--k", certify_args.k, "code dimension")->required();
  certify->add_option("--delta", certify_args.delta, "declared complexity")->required();
  certify->add_option("--enum-budget", certify_args.enum_budget, "message enumeration cap");

  PascalArgs pascal_args;
  auto* pascal = app.add_subcommand("pascal", "binomial-column construction mod p");
  pascal->add_option("--gamma", pascal_args.gamma, "matrix dimension")->required();
  pascal->add_option("--prime", pascal_args.prime, "reduce mod this prime and check");
  pascal->add_flag("--min-prime", pascal_args.min_prime, "scan for the smallest working prime");
  pascal->add_option("--cap", pascal_args.cap, "largest prime to try with --min-prime");
  pascal->add_option("--out", pascal_args.out, "write the matrix to this file");

  // let a trailing --json (or --version) reach the top-level app
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kAbort;
  }

  const auto dispatch = [&](Run& run) -> int {
    if (*check) return run_check(check_args, run);
    if (*search) return run_search_cmd(search_args, run);
    if (*minfield) return run_minfield(minfield_args, run);
    if (*conjecture) return run_conjecture(conjecture_args, run);
    if (*orbit_cmd) return run_orbit(orbit_args, run);
    if (*bound) return run_bound(bound_args, run);
    if (*construct) return run_construct(construct_args, run);
    if (*coldist) return run_coldist(coldist_args, run);
    if (*certify) return run_certify(certify_args, run);
    if (*pascal) return run_pascal(pascal_args, run);
    return kAbort;
  };

  Run run(app.get_subcommands().front()->get_name());
  run.want_json = want_json;
  try {
    return run.finish(dispatch(run));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == errc::not_superregular ? kFalse : kAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAbort;
  }
}
