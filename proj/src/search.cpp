#include "srkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <string>
#include <thread>

namespace srkit {

FieldPtr field_for_order(std::uint32_t q) {
  std::uint32_t p = 0, e = 0;
  if (!is_prime_power_u32(q, &p, &e)) fail(errc::usage, "order is not a prime power: " + std::to_string(q));
  return Field::create(p, e);
}

namespace {

using Clock = std::chrono::steady_clock;

enum class DfsStatus { exhausted, stopped, aborted };

/// Depth-first walk over free levels. The seed already carries the pinned
/// prefix plus the branch-root value; every allowed assignment below it
/// counts as one node.
class Dfs {
public:
  Dfs(const Field& f, int gamma, bool reverse,
      std::function<bool(const std::vector<code_t>&)> on_full, std::function<bool()> abort_now)
      : f_(f), gamma_(gamma), reverse_(reverse), on_full_(std::move(on_full)),
        abort_now_(std::move(abort_now)) {
    prefix_.reserve(static_cast<std::size_t>(gamma) + 1);
    scratch_.resize(static_cast<std::size_t>(gamma) + 1);
  }

  std::uint64_t nodes = 0;
  int deepest = -1;

  DfsStatus run(const std::vector<code_t>& seed) {
    prefix_ = seed;
    nodes = 1;  // the branch-root assignment
    deepest = static_cast<int>(seed.size()) - 1;
    return descend();
  }

private:
  DfsStatus descend() {
    const int level = static_cast<int>(prefix_.size());
    if (level == gamma_ + 1) return on_full_(prefix_) ? DfsStatus::exhausted : DfsStatus::stopped;
    auto& forbidden = scratch_[level];
    forbidden_values(f_, prefix_, level, forbidden);
    const std::uint32_t n = f_.q() - 1;
    for (std::uint32_t r = 0; r < n; ++r) {
      const code_t v = f_.value_by_rank(reverse_ ? n - 1 - r : r);
      if (forbidden[v]) continue;
      ++nodes;
      if ((nodes & 1023u) == 0 && abort_now_ && abort_now_()) return DfsStatus::aborted;
      if (level > deepest) deepest = level;
      prefix_.push_back(v);
      const DfsStatus st = descend();
      prefix_.pop_back();
      if (st != DfsStatus::exhausted) return st;
    }
    return DfsStatus::exhausted;
  }

  const Field& f_;
  int gamma_;
  bool reverse_;
  std::function<bool(const std::vector<code_t>&)> on_full_;
  std::function<bool()> abort_now_;
  std::vector<code_t> prefix_;
  std::vector<std::vector<char>> scratch_;  // per-level forbidden sets
};

struct Partition {
  std::vector<code_t> fixed;          // pinned assignments below the branch level
  std::vector<code_t> branch_values;  // branch-root candidates, in value order
  bool fixed_is_full = false;         // pins already cover every level
  bool fixed_dead = false;            // a pin hit a forbidden value
};

/// Levels pinned by the normalization come first (a_0 = 1, then a_1 = 1),
/// each validated against its forbidden set; the next level becomes the
/// branch level whose allowed values partition the search space.
Partition make_partition(const Field& f, const SearchConfig& cfg) {
  Partition part;
  int pins = 0;
  if (cfg.norm == Normalization::a0) pins = 1;
  if (cfg.norm == Normalization::a0a1) pins = 2;
  pins = std::min(pins, cfg.gamma + 1);

  std::vector<char> forbidden;
  for (int level = 0; level < pins; ++level) {
    if (level >= 1) {
      forbidden_values(f, part.fixed, level, forbidden);
      if (forbidden[1]) {
        part.fixed_dead = true;
        return part;
      }
    }
    part.fixed.push_back(1);
  }
  if (static_cast<int>(part.fixed.size()) == cfg.gamma + 1) {
    part.fixed_is_full = true;
    return part;
  }

  const int level = static_cast<int>(part.fixed.size());
  const std::uint32_t n = f.q() - 1;
  if (level >= 1) {
    forbidden_values(f, part.fixed, level, forbidden);
  } else {
    forbidden.assign(f.q(), 0);
  }
  for (std::uint32_t r = 0; r < n; ++r) {
    const code_t v = f.value_by_rank(cfg.reverse_value_order ? n - 1 - r : r);
    if (!forbidden[v]) part.branch_values.push_back(v);
  }
  return part;
}

struct BranchOutcome {
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  int deepest = -1;
  bool ran = false;
  bool completed = false;
  bool found = false;
  std::vector<code_t> witness;
};

struct RunSummary {
  Outcome outcome = Outcome::completed;
  bool found = false;
  std::vector<code_t> witness;
  std::uint64_t count = 0;
  SearchStats stats;
};

void validate_config(const SearchConfig& cfg, SearchMode mode) {
  if (!cfg.field) fail(errc::usage, "search needs a field");
  if (cfg.gamma < 0) fail(errc::too_small, "gamma must be nonnegative");
  if (cfg.gamma > kMaxSearchLevel)
    fail(errc::index_out_of_range, "gamma " + std::to_string(cfg.gamma) + " exceeds the search cap " +
                                       std::to_string(kMaxSearchLevel));
  if (mode != SearchMode::find_first && cfg.norm != Normalization::none)
    fail(errc::usage, "counting and enumeration require normalization none");
}

/// Shared driver. Branches are processed by index; in find mode a branch
/// aborts only once a lower-indexed branch holds a hit, so the reported
/// witness, node count and depth match the single-threaded search exactly
/// whenever the outcome is completed.
RunSummary run_search(const SearchConfig& cfg, SearchMode mode,
                      const std::function<bool(const Toeplitz&)>* enum_fn) {
  validate_config(cfg, mode);
  const Field& f = *cfg.field;
  const auto start = Clock::now();
  const bool has_deadline = cfg.budget_seconds > 0.0 && mode != SearchMode::enumerate_all;
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(std::max(cfg.budget_seconds, 0.0)));

  RunSummary out;
  const Partition part = make_partition(f, cfg);
  out.stats.nodes = part.fixed.size();
  out.stats.deepest_level = static_cast<int>(part.fixed.size()) - 1;

  auto finish = [&]() {
    out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  };

  if (part.fixed_dead) return finish();

  if (part.fixed_is_full) {
    // The pins alone already form a verified matrix.
    switch (mode) {
      case SearchMode::find_first:
        out.found = true;
        out.witness = part.fixed;
        break;
      case SearchMode::count_all:
        out.count = 1;
        break;
      case SearchMode::enumerate_all:
        (*enum_fn)(Toeplitz(cfg.field, part.fixed));
        break;
    }
    return finish();
  }

  const std::size_t nbranches = part.branch_values.size();
  std::vector<BranchOutcome> branches(nbranches);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> budget_flag{false};

  auto over_budget = [&]() -> bool {
    if (!has_deadline) return false;
    if (budget_flag.load(std::memory_order_relaxed)) return true;
    if (Clock::now() >= deadline) {
      budget_flag.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  };

  auto worker = [&]() {
    while (true) {
      const std::size_t b = next.fetch_add(1);
      if (b >= nbranches) return;
      if (mode == SearchMode::find_first && b > best.load()) return;

      BranchOutcome& res = branches[b];
      res.ran = true;

      std::vector<code_t> seed = part.fixed;
      seed.push_back(part.branch_values[b]);

      auto abort_now = [&]() -> bool {
        if (over_budget()) return true;
        return mode == SearchMode::find_first && b > best.load(std::memory_order_relaxed);
      };
      auto on_full = [&](const std::vector<code_t>& col) -> bool {
        switch (mode) {
          case SearchMode::find_first: {
            res.found = true;
            res.witness = col;
            std::size_t cur = best.load();
            while (b < cur && !best.compare_exchange_weak(cur, b)) {
            }
            return false;
          }
          case SearchMode::count_all:
            ++res.count;
            return true;
          case SearchMode::enumerate_all:
            return (*enum_fn)(Toeplitz(cfg.field, col));
        }
        return true;
      };

      Dfs local(f, cfg.gamma, cfg.reverse_value_order, on_full, abort_now);
      const DfsStatus st = local.run(seed);
      res.nodes = local.nodes;
      res.deepest = local.deepest;
      res.completed = (st == DfsStatus::exhausted) || (st == DfsStatus::stopped && res.found);
      if (mode == SearchMode::enumerate_all && st == DfsStatus::stopped) return;
    }
  };

  const int want = std::max(cfg.threads, 1);
  const int nthreads = mode == SearchMode::enumerate_all
                           ? 1
                           : static_cast<int>(std::min<std::size_t>(want, nbranches));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::size_t winner = best.load();
  const bool have_winner = winner != std::numeric_limits<std::size_t>::max();

  if (mode == SearchMode::find_first && have_winner) {
    out.found = true;
    out.witness = branches[winner].witness;
    bool deterministic = true;
    for (std::size_t b = 0; b <= winner; ++b) {
      if (!branches[b].ran || (b < winner && !branches[b].completed)) deterministic = false;
      if (branches[b].ran) {
        out.stats.nodes += branches[b].nodes;
        out.stats.deepest_level = std::max(out.stats.deepest_level, branches[b].deepest);
      }
    }
    out.outcome = deterministic ? Outcome::completed : Outcome::budget_exceeded;
    return finish();
  }

  bool all_completed = true;
  for (std::size_t b = 0; b < nbranches; ++b) {
    if (!branches[b].ran || !branches[b].completed) all_completed = false;
    if (branches[b].ran) {
      out.stats.nodes += branches[b].nodes;
      out.stats.deepest_level = std::max(out.stats.deepest_level, branches[b].deepest);
      out.count += branches[b].count;
    }
  }
  if (mode == SearchMode::enumerate_all) {
    // Stopping early through the callback is a normal completion.
    out.outcome = Outcome::completed;
  } else {
    out.outcome = all_completed ? Outcome::completed : Outcome::budget_exceeded;
  }
  return finish();
}

}  // namespace

FindResult find_superregular(const SearchConfig& cfg) {
  const RunSummary s = run_search(cfg, SearchMode::find_first, nullptr);
  FindResult out;
  out.outcome = s.outcome;
  out.found = s.found;
  if (s.found) out.witness = Toeplitz(cfg.field, s.witness);
  out.stats = s.stats;
  return out;
}

CountResult count_superregular(const SearchConfig& cfg) {
  const RunSummary s = run_search(cfg, SearchMode::count_all, nullptr);
  CountResult out;
  out.outcome = s.outcome;
  out.count = s.count;
  out.stats = s.stats;
  return out;
}

void enumerate_superregular(const SearchConfig& cfg, const std::function<bool(const Toeplitz&)>& fn) {
  run_search(cfg, SearchMode::enumerate_all, &fn);
}

MinFieldResult min_field_size(int dimension, FieldFamily family, std::uint32_t cap,
                              double budget_per_field, int threads) {
  if (dimension < 1) fail(errc::too_small, "dimension must be at least 1");
  if (dimension - 1 > kMaxSearchLevel)
    fail(errc::index_out_of_range, "dimension " + std::to_string(dimension) + " exceeds the search cap");

  MinFieldResult res;
  res.dimension = dimension;
  for (std::uint32_t q = 2; q <= cap; ++q) {
    const bool in_family = family == FieldFamily::primes ? is_prime_u32(q) : is_prime_power_u32(q);
    if (!in_family) continue;

    SearchConfig cfg;
    cfg.field = field_for_order(q);
    cfg.gamma = dimension - 1;
    cfg.norm = Normalization::a0a1;
    cfg.budget_seconds = budget_per_field;
    cfg.threads = threads;

    const FindResult fr = find_superregular(cfg);
    res.stats.nodes += fr.stats.nodes;
    res.stats.seconds += fr.stats.seconds;
    res.stats.deepest_level = std::max(res.stats.deepest_level, fr.stats.deepest_level);

    if (fr.found) {
      res.q = q;
      res.witness = fr.witness;
      res.outcome = Outcome::completed;
      return res;
    }
    if (fr.outcome != Outcome::completed) {
      // Cannot certify this order one way or the other.
      res.outcome = fr.outcome;
      return res;
    }
    res.ruled_out.push_back(q);
  }
  res.outcome = Outcome::cap_exceeded;  // every order up to the cap is ruled out
  return res;
}

ConjectureResult test_conjecture(int dimension, double budget_seconds, int threads) {
  if (dimension < 5) fail(errc::too_small, "dimension must be at least 5");
  if (dimension - 1 > kMaxSearchLevel)
    fail(errc::index_out_of_range, "dimension " + std::to_string(dimension) + " exceeds the search cap");

  SearchConfig cfg;
  cfg.field = Field::create(2, static_cast<std::uint32_t>(dimension - 2));
  cfg.gamma = dimension - 1;
  cfg.norm = Normalization::a0a1;
  cfg.budget_seconds = budget_seconds;
  cfg.threads = threads;

  ConjectureResult res;
  res.dimension = dimension;
  res.q = cfg.field->q();

  const FindResult fr = find_superregular(cfg);
  res.stats = fr.stats;
  if (fr.found) {
    res.status = ConjectureResult::Status::witness_found;
    res.witness = fr.witness;
  } else if (fr.outcome == Outcome::completed) {
    res.status = ConjectureResult::Status::refuted_by_exhaustion;
  } else {
    res.status = ConjectureResult::Status::budget_exceeded;
  }
  return res;
}

}  // namespace srkit
