// lds: build, query, sort and validate lattice files; emit experiment tables.
//
// Exit status: 0 success, 1 validation or argument failure, 2 I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lds/bench.hpp"
#include "lds/io.hpp"
#include "lds/jump_search.hpp"
#include "lds/sortedness.hpp"
#include "lds/validate.hpp"

namespace {

using namespace lds;

enum Exit { kOk = 0, kInvalid = 1, kIo = 2 };

void emit(const std::vector<bench::StatRecord>& rows, const std::string& csv, const std::string& markdown) {
  if (csv.empty()) {
    bench::write_csv(std::cout, rows);
  } else {
    std::ofstream out(csv);
    if (!out) throw io_error("cannot open " + csv + " for writing");
    bench::write_csv(out, rows);
    if (!out.flush()) throw io_error("write to " + csv + " failed");
  }
  if (!markdown.empty()) {
    std::ofstream out(markdown);
    if (!out) throw io_error("cannot open " + markdown + " for writing");
    bench::write_markdown(out, rows);
    if (!out.flush()) throw io_error("write to " + markdown + " failed");
  }
}

void summary(const Lattice& lat) {
  std::cout << "h=" << lat.height() << " k=" << lat.outer_count() << " n=" << lat.size();
  if (!lat.is_empty()) std::cout << " alpha=" << degree(lat).alpha;
  std::cout << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice data structure tool"};
  app.require_subcommand(1);

  // build
  bench::BuildConfig bcfg;
  bool partial = false;
  std::string build_out;
  auto* build = app.add_subcommand("build", "build a random or beta-sorted lattice and save it");
  build->add_option("--height", bcfg.h, "target height")->required();
  build->add_option("--beta", bcfg.beta, "sortedness fraction in [0, 1]")->default_val(0.0);
  build->add_option("--seed", bcfg.seed, "random seed")->default_val(1);
  build->add_flag("--partial", partial, "draw k uniformly from [1, h] instead of a full lattice");
  build->add_option("--out", build_out, "output lattice file")->required();

  // search
  std::string search_file;
  Key search_key = 0;
  bool jump = false;
  std::string strategy = "binary";
  auto* search = app.add_subcommand("search", "search one key");
  search->add_option("file", search_file)->required();
  search->add_option("--key", search_key)->required();
  search->add_flag("--jump", jump, "use jump search");
  search->add_option("--strategy", strategy, "line locate for jump search")
      ->check(CLI::IsMember({"binary", "linear"}));

  // sort
  std::string sort_file, sort_out;
  int target_alpha = 0;
  auto* sort = app.add_subcommand("sort", "apply sort steps until a target degree");
  sort->add_option("file", sort_file)->required();
  sort->add_option("--target-alpha", target_alpha)->required();
  sort->add_option("--out", sort_out, "write the sorted lattice here");

  // validate
  std::string validate_file;
  auto* valid = app.add_subcommand("validate", "check a lattice file");
  valid->add_option("file", validate_file)->required();

  // table
  auto* table = app.add_subcommand("table", "emit an experiment table");
  table->require_subcommand(1);
  std::string csv, markdown;
  std::uint64_t seed = 1;
  std::vector<int> heights;
  std::vector<double> betas, gammas;
  int trials = 30, epochs = 1;
  std::size_t probes = 0;
  bool timings = false;

  auto common = [&](CLI::App* t) {
    t->add_option("--seed", seed)->default_val(1);
    t->add_option("--csv", csv, "CSV output file (stdout when omitted)");
    t->add_option("--markdown", markdown, "markdown output file");
  };
  auto* sorted = table->add_subcommand("sorted", "average jump factor by degree of sortedness");
  sorted->add_option("--heights", heights)->delimiter(',')->required();
  sorted->add_option("--betas", betas)->delimiter(',')->required()->check(CLI::Range(0.5, 1.0));
  sorted->add_option("--trials", trials)->default_val(30)->check(CLI::PositiveNumber);
  common(sorted);

  auto* gamma = table->add_subcommand("gamma", "idle-time sorting scenario");
  gamma->add_option("--height,--heights", heights)->delimiter(',')->required();
  gamma->add_option("--gammas", gammas)->delimiter(',')->required()->check(CLI::NonNegativeNumber);
  gamma->add_option("--epochs", epochs)->default_val(1)->check(CLI::PositiveNumber);
  gamma->add_option("--trials", trials)->default_val(1)->check(CLI::PositiveNumber);
  std::string order = "shuffled";
  gamma->add_option("--order", order, "insert/delete stream order")
      ->check(CLI::IsMember({"shuffled", "inserts-first"}));
  common(gamma);

  auto* compare = table->add_subcommand("compare", "basic search, jump search and skip list costs");
  compare->add_option("--heights", heights)->delimiter(',')->required();
  compare->add_option("--betas", betas)->delimiter(',')->default_str("1.0")->check(CLI::Range(0.0, 1.0));
  compare->add_option("--probes", probes, "present keys probed per configuration, 0 = all")->default_val(0);
  compare->add_flag("--timings", timings, "add wall-clock columns (informational)");
  common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*build) {
      bcfg.full = !partial;
      const bench::Built b = bench::build(bcfg);
      save(b.lattice, build_out);
      summary(b.lattice);
      std::cout << "target_alpha=" << b.target_alpha << '\n';
    } else if (*search) {
      const Lattice lat = load(search_file);
      if (jump) {
        const JumpStrategy s = strategy == "linear" ? JumpStrategy::LinearScan : JumpStrategy::BinaryLocate;
        const JumpOutcome o = search_jump(lat, search_key, s);
        std::cout << (o.found ? "found " + o.location->to_string() : std::string("absent")) << " jumps=" << o.jumps
                  << " probes=" << o.probes << " strategy=" << to_string(s) << '\n';
      } else {
        require_key(search_key);
        const SearchOutcome o = lat.search(search_key);
        std::cout << (o.found ? "found " + o.location.to_string() : std::string("absent"))
                  << " comparisons=" << o.comparisons << " path=" << (o.path.empty() ? "-" : o.path)
                  << " jumps=" << jump_factor_of_path(o.path) << '\n';
      }
    } else if (*sort) {
      Lattice lat = load(sort_file);
      if (lat.is_empty()) throw argument_error("cannot sort an empty lattice");
      const std::size_t calls = sort_to_degree(lat, target_alpha);
      std::cout << "alpha=" << degree(lat).alpha << " calls=" << calls << " swaps=" << lat.counters().swaps << '\n';
      if (!sort_out.empty()) save(lat, sort_out);
    } else if (*valid) {
      const Lattice lat = load(validate_file);
      const ValidationReport rep = validate(lat);
      std::cout << rep.to_string() << "valid ";
      summary(lat);
    } else if (*sorted) {
      emit(bench::run_sorted_table(heights, betas, trials, seed), csv, markdown);
    } else if (*gamma) {
      const auto o = order == "shuffled" ? bench::StreamOrder::Shuffled : bench::StreamOrder::InsertsFirst;
      emit(bench::run_gamma_table(heights, gammas, epochs, trials, seed, o), csv, markdown);
    } else if (*compare) {
      if (betas.empty()) betas = {1.0};
      emit(bench::run_comparison_table(heights, betas, probes, seed, timings), csv, markdown);
    }
  } catch (const io_error& e) {
    std::cerr << "lds: " << e.what() << '\n';
    return kIo;
  } catch (const format_error& e) {
    std::cerr << "lds: invalid lattice: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "lds: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
