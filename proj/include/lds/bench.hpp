#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lds/analytics.hpp"
#include "lds/jump_search.hpp"
#include "lds/lattice.hpp"
#include "lds/random.hpp"
#include "lds/skiplist.hpp"
#include "lds/sortedness.hpp"
#include "lds/validate.hpp"

namespace lds::bench {

struct BuildConfig {
  int h = 10;
  double beta = 0.0;  // target sortedness fraction; alpha = floor(beta * h)
  std::uint64_t seed = 1;
  bool full = true;   // N = h(h+1)/2; otherwise k is drawn uniformly from [1, h]
};

inline std::size_t triangle(std::size_t n) { return n * (n + 1) / 2; }

// Fully sorted full lattice: keys ascending diagonal by diagonal, head to tail.
inline Lattice sorted_full(int h, std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  return Lattice::from_keys(h, keys);
}

struct Built {
  Lattice lattice;
  std::vector<Key> insertion_order;  // every key, in the order it entered the lattice
  int target_alpha = 0;
};

/// beta = 0: seeded distinct keys inserted into an empty lattice in draw
/// order. beta > 0: the smallest alpha(alpha+1)/2 keys form a fully sorted
/// lattice of height alpha, then the remaining (larger) keys are inserted
/// in draw order. Larger keys never move into the sorted core, so the
/// result is at least alpha-sorted.
inline Built build(const BuildConfig& cfg) {
  if (cfg.h < 1) throw argument_error("build height must be >= 1");
  if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) throw argument_error("beta must be in [0, 1]");
  Rng rng(cfg.seed);
  const auto h = static_cast<std::size_t>(cfg.h);
  const std::size_t n = cfg.full ? triangle(h) : h * (h - 1) / 2 + 1 + uniform_below(rng, h);
  std::vector<Key> keys = distinct_keys(rng, n);

  Built out;
  out.target_alpha = alpha_for(cfg.h, cfg.beta);
  int core = out.target_alpha;
  while (core > 0 && triangle(static_cast<std::size_t>(core)) > n) --core;

  if (core == 0) {
    out.lattice = Lattice::empty(1);
    for (Key k : keys) out.lattice.insert(k);
    out.insertion_order = std::move(keys);
    return out;
  }
  std::vector<Key> ascending = keys;
  std::sort(ascending.begin(), ascending.end());
  const std::size_t core_n = triangle(static_cast<std::size_t>(core));
  const Key core_max = ascending[core_n - 1];
  out.lattice = Lattice::from_keys(core, std::span<const Key>(ascending.data(), core_n));
  out.insertion_order.assign(ascending.begin(), ascending.begin() + static_cast<std::ptrdiff_t>(core_n));
  for (Key k : keys) {
    if (k <= core_max) continue;
    out.lattice.insert(k);
    out.insertion_order.push_back(k);
  }
  return out;
}

inline Lattice build_random(const BuildConfig& cfg) { return build(cfg).lattice; }

/// One emitted table row. Fields that do not apply to a table stay empty.
struct StatRecord {
  std::string table;
  int h = 0;
  std::size_t n = 0;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<int> epochs;
  int trials = 1;
  std::uint64_t seed = 0;
  double degree_mean = 0;
  double avg_jf_present_mean = 0;
  double avg_jf_present_sd = 0;
  std::size_t max_jf = 0;
  std::optional<double> avg_cmp_basic;
  std::optional<double> avg_probes_jump_binary;
  std::optional<double> avg_probes_jump_linear;
  std::optional<double> skiplist_avg_cmp;
  std::optional<double> bound_avg_jf_present;
  std::optional<double> bound_avg_jf_absent_model;
  std::optional<std::int64_t> bound_max_jf;
  std::optional<std::size_t> sort_calls;
  // Informational only; hardware-specific and never asserted.
  std::optional<double> wall_ns_basic;
  std::optional<double> wall_ns_jump;
  std::optional<double> wall_ns_skiplist;
};

struct MeanSd {
  double mean = 0;
  double sd = 0;
};

inline MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  if (xs.empty()) return out;
  double sum = 0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

inline std::uint64_t config_seed(std::uint64_t base, int h, double param, int trial) {
  const auto p = static_cast<std::uint64_t>(std::llround(param * 1e6));
  return derive_seed(derive_seed(derive_seed(base, static_cast<std::uint64_t>(h)), p),
                     static_cast<std::uint64_t>(trial));
}

// Bound columns for a lattice of height h whose measured degree is alpha.
inline void fill_bounds(StatRecord& rec, int h, int alpha) {
  const Rational beta = ratio(alpha, h);
  if (beta >= ratio(1, 2)) {
    const AverageJumpBounds b = avg_jump_bounds_sorted(h, beta);
    rec.bound_avg_jf_present = to_double(b.present);
    rec.bound_avg_jf_absent_model = to_double(b.absent);
  } else {
    const AverageJumpBounds b = avg_jump_bounds(h);
    rec.bound_avg_jf_present = to_double(b.present);
    rec.bound_avg_jf_absent_model = to_double(b.absent);
  }
  if (alpha >= 3) rec.bound_max_jf = lattice_jump_bound(h, alpha);
}

struct SortedTrial {
  std::uint64_t seed = 0;
  EmpiricalStats stats;
  int target_alpha = 0;
};

inline SortedTrial run_sorted_trial(int h, double beta, std::uint64_t seed) {
  Built b = build({h, beta, seed, true});
  return {seed, empirical_stats(b.lattice), b.target_alpha};
}

/// Mean and standard deviation of the present-key average jump factor over
/// `trials` built lattices per (h, beta).
inline std::vector<StatRecord> run_sorted_table(const std::vector<int>& heights, const std::vector<double>& betas,
                                                int trials, std::uint64_t seed) {
  std::vector<StatRecord> rows;
  for (int h : heights) {
    for (double beta : betas) {
      std::vector<double> avg, cmp, deg;
      std::size_t max_jf = 0;
      int min_degree = h;
      std::size_t n = 0;
      for (int t = 0; t < trials; ++t) {
        const SortedTrial tr = run_sorted_trial(h, beta, config_seed(seed, h, beta, t));
        avg.push_back(to_double(tr.stats.avg_jf_present));
        cmp.push_back(to_double(tr.stats.avg_cmp_present));
        deg.push_back(tr.stats.degree);
        max_jf = std::max(max_jf, tr.stats.max_jf);
        min_degree = std::min(min_degree, tr.stats.degree);
        n = tr.stats.n;
      }
      StatRecord rec;
      rec.table = "sorted";
      rec.h = h;
      rec.n = n;
      rec.beta = beta;
      rec.trials = trials;
      rec.seed = seed;
      const MeanSd m = mean_sd(avg);
      rec.avg_jf_present_mean = m.mean;
      rec.avg_jf_present_sd = m.sd;
      rec.degree_mean = mean_sd(deg).mean;
      rec.max_jf = max_jf;
      rec.avg_cmp_basic = mean_sd(cmp).mean;
      fill_bounds(rec, h, min_degree);
      rows.push_back(rec);
    }
  }
  return rows;
}

// Order of the insert/delete stream inside an epoch.
enum class StreamOrder { Shuffled, InsertsFirst };

inline const char* to_string(StreamOrder o) { return o == StreamOrder::Shuffled ? "shuffled" : "inserts-first"; }

struct ScenarioConfig {
  int h = 100;
  double gamma = 0;
  int epochs = 1;
  std::uint64_t seed = 1;
  StreamOrder order = StreamOrder::Shuffled;
};

struct ScenarioResult {
  EmpiricalStats stats;
  std::vector<std::size_t> epoch_sizes;  // key count at the start of each epoch
  std::size_t inserts = 0;
  std::size_t deletes = 0;
  std::size_t sort_calls = 0;
  bool valid = true;  // validate() after the run
};

/// Idle-time maintenance simulation. Starts from an h-sorted full lattice.
/// Each epoch rebases N to the current key count, runs a stream of 0.1N
/// inserts of fresh uniform keys and 0.05N deletes of uniformly chosen
/// present keys (shuffled, or every insert before the first delete), then
/// calls sort_step ceil(gamma * (inserts + deletes)) times.
inline ScenarioResult run_gamma_scenario(const ScenarioConfig& cfg) {
  if (cfg.h < 1) throw argument_error("scenario height must be >= 1");
  if (cfg.epochs < 1) throw argument_error("scenario needs at least one epoch");
  if (!(cfg.gamma >= 0)) throw argument_error("gamma must be >= 0");
  Rng rng(cfg.seed);
  Lattice lat = sorted_full(cfg.h, distinct_keys(rng, triangle(static_cast<std::size_t>(cfg.h))));

  std::vector<Key> pool = lat.keys();
  std::unordered_map<Key, std::size_t> where;
  where.reserve(pool.size() * 2);
  for (std::size_t i = 0; i < pool.size(); ++i) where[pool[i]] = i;

  ScenarioResult res;
  for (int e = 0; e < cfg.epochs; ++e) {
    const std::size_t n = lat.size();
    res.epoch_sizes.push_back(n);
    const auto deletes = static_cast<std::size_t>(std::llround(0.05 * static_cast<double>(n)));
    const std::size_t inserts = 2 * deletes;
    std::vector<char> ops(inserts, 'i');
    ops.insert(ops.end(), deletes, 'd');
    if (cfg.order == StreamOrder::Shuffled) shuffle(ops, rng);
    for (char op : ops) {
      if (op == 'i') {
        Key k;
        do k = uniform_key(rng);
        while (where.count(k));
        lat.insert(k);
        where[k] = pool.size();
        pool.push_back(k);
      } else {
        if (pool.empty()) throw std::runtime_error("scenario delete stream exhausted the lattice");
        const std::size_t i = uniform_below(rng, pool.size());
        const Key k = pool[i];
        lat.erase(k);
        where[pool.back()] = i;
        pool[i] = pool.back();
        pool.pop_back();
        where.erase(k);
      }
    }
    res.inserts += inserts;
    res.deletes += deletes;
    const auto calls = static_cast<std::size_t>(std::ceil(cfg.gamma * static_cast<double>(inserts + deletes) - 1e-9));
    for (std::size_t c = 0; c < calls; ++c) {
      if (!sort_step(lat).swapped()) break;
      ++res.sort_calls;
    }
  }
  res.valid = validate(lat).sound();
  res.stats = empirical_stats(lat);
  return res;
}

/// Mean over `trials` seeds of the scenario outcome for each (h, gamma).
/// Trial t uses the same start lattice and operation stream for every gamma.
inline std::vector<StatRecord> run_gamma_table(const std::vector<int>& heights, const std::vector<double>& gammas,
                                               int epochs, int trials, std::uint64_t seed,
                                               StreamOrder order = StreamOrder::Shuffled) {
  std::vector<StatRecord> rows;
  for (int h : heights) {
    for (double gamma : gammas) {
      std::vector<double> avg, deg, cmp;
      std::size_t max_jf = 0, calls = 0, n = 0;
      int min_degree = h;
      for (int t = 0; t < trials; ++t) {
        const ScenarioResult r = run_gamma_scenario({h, gamma, epochs, config_seed(seed, h, 0.0, t), order});
        avg.push_back(to_double(r.stats.avg_jf_present));
        deg.push_back(r.stats.degree);
        cmp.push_back(to_double(r.stats.avg_cmp_present));
        max_jf = std::max(max_jf, r.stats.max_jf);
        min_degree = std::min(min_degree, r.stats.degree);
        calls += r.sort_calls;
        n = r.stats.n;
      }
      StatRecord rec;
      rec.table = order == StreamOrder::Shuffled ? "gamma" : "gamma-inserts-first";
      rec.h = h;
      rec.n = n;
      rec.gamma = gamma;
      rec.epochs = epochs;
      rec.trials = trials;
      rec.seed = seed;
      const MeanSd m = mean_sd(avg);
      rec.avg_jf_present_mean = m.mean;
      rec.avg_jf_present_sd = m.sd;
      rec.degree_mean = mean_sd(deg).mean;
      rec.max_jf = max_jf;
      rec.avg_cmp_basic = mean_sd(cmp).mean;
      rec.sort_calls = calls / static_cast<std::size_t>(std::max(trials, 1));
      rows.push_back(rec);
    }
  }
  return rows;
}

/// Search cost on equal footing: basic-search comparisons, jump-search
/// line probes (binary and linear) and skip-list comparisons over the same
/// present-key probe set. `probes` = 0 probes every present key.
inline volatile std::size_t timing_sink = 0;

inline std::vector<StatRecord> run_comparison_table(const std::vector<int>& heights, const std::vector<double>& betas,
                                                    std::size_t probes, std::uint64_t seed, bool timings = false) {
  using clock = std::chrono::steady_clock;
  std::vector<StatRecord> rows;
  for (int h : heights) {
    for (double beta : betas) {
      const std::uint64_t s = config_seed(seed, h, beta, 0);
      Built b = build({h, beta, s, true});
      const Lattice& lat = b.lattice;
      SkipList sl(derive_seed(s, 0x5b));
      for (Key k : b.insertion_order) sl.insert(k);

      std::vector<Key> probe_set = lat.keys();
      if (probes != 0 && probes < probe_set.size()) {
        Rng rng(derive_seed(s, 0x9e));
        std::vector<Key> sample;
        sample.reserve(probes);
        for (std::size_t i = 0; i < probes; ++i) sample.push_back(probe_set[uniform_below(rng, probe_set.size())]);
        probe_set = std::move(sample);
      }

      std::uint64_t basic = 0, bin = 0, lin = 0, skip = 0;
      for (Key k : probe_set) {
        basic += lat.search(k).comparisons;
        bin += search_jump(lat, k, BinaryLocate{}).probes;
        lin += search_jump(lat, k, LinearScan{}).probes;
        skip += sl.find(k).comparisons;
      }
      const auto cnt = static_cast<double>(probe_set.size());
      const EmpiricalStats st = empirical_stats(lat);

      StatRecord rec;
      rec.table = "compare";
      rec.h = h;
      rec.n = lat.size();
      rec.beta = beta;
      rec.seed = seed;
      rec.degree_mean = st.degree;
      rec.avg_jf_present_mean = to_double(st.avg_jf_present);
      rec.max_jf = st.max_jf;
      rec.avg_cmp_basic = static_cast<double>(basic) / cnt;
      rec.avg_probes_jump_binary = static_cast<double>(bin) / cnt;
      rec.avg_probes_jump_linear = static_cast<double>(lin) / cnt;
      rec.skiplist_avg_cmp = static_cast<double>(skip) / cnt;
      fill_bounds(rec, h, st.degree);

      if (timings) {
        std::size_t sink = 0;
        auto time_ns = [&](auto&& fn) {
          const auto t0 = clock::now();
          for (Key k : probe_set) sink += fn(k);
          const auto t1 = clock::now();
          return std::chrono::duration<double, std::nano>(t1 - t0).count() / cnt;
        };
        rec.wall_ns_basic = time_ns([&](Key k) { return lat.contains(k) ? 1u : 0u; });
        rec.wall_ns_jump = time_ns([&](Key k) { return search_jump(lat, k, BinaryLocate{}).found ? 1u : 0u; });
        rec.wall_ns_skiplist = time_ns([&](Key k) { return sl.contains(k) ? 1u : 0u; });
        timing_sink = sink;
      }
      rows.push_back(rec);
    }
  }
  return rows;
}

// ---- emission --------------------------------------------------------------

inline void sort_rows(std::vector<StatRecord>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const StatRecord& a, const StatRecord& b) {
    return std::make_tuple(a.table, a.h, a.beta.value_or(-1), a.gamma.value_or(-1)) <
           std::make_tuple(b.table, b.h, b.beta.value_or(-1), b.gamma.value_or(-1));
  });
}

namespace detail {

inline std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) return fixed(*v);
  else return std::to_string(*v);
}

} // namespace detail

inline const char* csv_header() {
  return "table,h,n,beta,gamma,epochs,trials,seed,degree_mean,avg_jf_present_mean,avg_jf_present_sd,max_jf,"
         "avg_cmp_basic,avg_probes_jump_binary,avg_probes_jump_linear,skiplist_avg_cmp,bound_avg_jf_present,"
         "bound_avg_jf_absent_model,bound_max_jf,sort_calls,wall_ns_basic,wall_ns_jump,wall_ns_skiplist";
}

// Rows are sorted by (table, h, beta, gamma) first, so output is order-independent.
inline void write_csv(std::ostream& os, std::vector<StatRecord> rows) {
  using detail::cell;
  using detail::fixed;
  sort_rows(rows);
  os << csv_header() << '\n';
  for (const StatRecord& r : rows) {
    os << r.table << ',' << r.h << ',' << r.n << ',' << cell(r.beta) << ',' << cell(r.gamma) << ','
       << cell(r.epochs) << ',' << r.trials << ',' << r.seed << ',' << fixed(r.degree_mean) << ','
       << fixed(r.avg_jf_present_mean) << ',' << fixed(r.avg_jf_present_sd) << ',' << r.max_jf << ','
       << cell(r.avg_cmp_basic) << ',' << cell(r.avg_probes_jump_binary) << ',' << cell(r.avg_probes_jump_linear)
       << ',' << cell(r.skiplist_avg_cmp) << ',' << cell(r.bound_avg_jf_present) << ','
       << cell(r.bound_avg_jf_absent_model) << ',' << cell(r.bound_max_jf) << ',' << cell(r.sort_calls) << ','
       << cell(r.wall_ns_basic) << ',' << cell(r.wall_ns_jump) << ',' << cell(r.wall_ns_skiplist) << '\n';
  }
}

/// Pivoted markdown: one row per height, one column per beta or gamma.
/// The comparison table shows basic and skip-list comparisons followed by
/// binary jump probes per beta.
inline void write_markdown(std::ostream& os, std::vector<StatRecord> rows) {
  using detail::fixed;
  sort_rows(rows);
  std::map<std::string, std::vector<const StatRecord*>> by_table;
  for (const StatRecord& r : rows) by_table[r.table].push_back(&r);

  for (const auto& [table, recs] : by_table) {
    std::vector<double> params;
    std::map<int, std::map<double, const StatRecord*>> grid;
    for (const StatRecord* r : recs) {
      const double p = r->gamma ? *r->gamma : r->beta.value_or(0);
      if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
      grid[r->h][p] = r;
    }
    std::sort(params.begin(), params.end());
    const char* sym = recs.front()->gamma ? "gamma" : "beta";
    if (table == "compare") {
      os << "| h | N | basic cmp | skip list cmp |";
      for (double p : params) os << " jump probes " << sym << "=" << fixed(p, 2) << " |";
      os << "\n|---|---|---|---|";
    } else {
      os << "| h |";
      for (double p : params) os << ' ' << sym << '=' << fixed(p, 2) << " |";
      os << "\n|---|";
    }
    for (std::size_t i = 0; i < params.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& [h, cols] : grid) {
      const StatRecord* first = cols.begin()->second;
      os << "| " << h << " |";
      if (table == "compare")
        os << ' ' << first->n << " | " << fixed(first->avg_cmp_basic.value_or(0), 2) << " | "
           << fixed(first->skiplist_avg_cmp.value_or(0), 2) << " |";
      for (double p : params) {
        auto it = cols.find(p);
        if (it == cols.end()) {
          os << "  |";
          continue;
        }
        const double v = table == "compare" ? it->second->avg_probes_jump_binary.value_or(0)
                                            : it->second->avg_jf_present_mean;
        os << ' ' << fixed(v, 2) << " |";
      }
      os << '\n';
    }
    os << '\n';
  }
}

} // namespace lds::bench
