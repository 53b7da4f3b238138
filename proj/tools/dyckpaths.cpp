// dyckpaths: counting, bijections, sampling and oracle checks for rushed and
// progressive Dyck paths. Paths are read and written one per line over {U,D}.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "dyck/animals.hpp"
#include "dyck/asymptotics.hpp"
#include "dyck/bijections.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/path.hpp"
#include "dyck/sampler.hpp"
#include "dyck/verify.hpp"

namespace {

using namespace dyck;

int run_count(const std::string& family, int max_n, bool by_height, const std::string& format) {
  const CountTable table = count_table(max_n);
  const bool csv = format.empty() ? by_height : format == "csv";
  if (family == "both") {
    if (!csv || !by_height) throw CLI::ValidationError("--family both", "requires --by-height --format csv");
    write_count_table_csv(std::cout, table);
    return 0;
  }
  const bool rushed = family == "rushed";
  if (csv) std::cout << (by_height ? "n,h,count\n" : "n,count\n");
  const char sep = csv ? ',' : ' ';
  for (int n = 0; n <= max_n; ++n) {
    if (!by_height) {
      std::cout << n << sep << (rushed ? table.rushed_total(n) : table.progressive_total(n)).get_str() << '\n';
      continue;
    }
    for (int h = 0; h <= n; ++h)
      std::cout << n << sep << h << sep << (rushed ? table.rushed(n, h) : table.progressive(n, h)).get_str() << '\n';
  }
  return 0;
}

int run_enumerate(int n, const std::string& family) {
  PathFilter filter;
  if (family == "rushed") filter = is_rushed;
  if (family == "progressive") filter = is_progressive;
  if (family == "doubly-progressive") filter = is_doubly_progressive;
  for_each_dyck(n, [&](const Path& p) {
    if (!filter || filter(p)) std::cout << render_path(p) << '\n';
  });
  return 0;
}

int run_map(const std::string& bijection) {
  Path (*fn)(const Path&) = bijection == "f"       ? apply_f
                            : bijection == "f-inv" ? invert_f
                            : bijection == "g"     ? apply_g
                                                   : invert_g;
  std::string line;
  std::size_t line_no = 0;
  int status = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    try {
      std::cout << render_path(fn(parse_path(line))) << '\n';
    } catch (const std::exception& e) {
      std::cerr << "line " << line_no << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << s << '\n';
  return s;
}

int run_sample(int n, int count, std::optional<std::uint64_t> seed, const std::string& family) {
  const SamplerTables tables(n);
  RandomSource rng(resolve_seed(seed));
  const bool progressive = family == "progressive";
  for (int k = 0; k < count; ++k)
    std::cout << render_path(progressive ? sample_progressive(tables, rng) : sample_rushed(tables, rng)) << '\n';
  return 0;
}

int run_stats(int n, std::optional<std::uint64_t> samples, std::optional<std::uint64_t> seed, bool d_csv) {
  std::optional<DDistribution> dist;
  std::uint64_t used_seed = 0;
  if (samples) {
    used_seed = resolve_seed(seed);
    dist = d_empirical(n, DMode::Sampled, *samples, used_seed);
  } else if (d_csv) {
    if (n > 14) throw CLI::ValidationError("--d-csv", "exact distribution needs n <= 14; pass --samples");
    dist = d_empirical(n, DMode::Exhaustive);
  }
  if (d_csv) {
    write_distribution_csv(std::cout, *dist);
    return 0;
  }

  const CountTable table = count_table(n);
  const HeightStats st = height_stats(n, table);
  const mpz_class& rn = table.rushed_total(n);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["rn"] = rn.get_str();
  j["rn_decimal_digits"] = rn.get_str().size();
  j["log_error"] = (log_of(rn) - log_estimate(n)).to_double();
  j["mean_height"] = st.mean.get_d();
  j["var_height"] = st.variance.get_d();
  j["standardized_mean"] = st.standardized_mean;
  j["standardized_sd"] = st.standardized_sd;
  j["skewness"] = st.skewness;
  if (dist) {
    j["d_samples"] = dist->total;
    j["d_seed"] = used_seed;
    j["d_mean"] = dist->mean();
    j["d_zero_probability"] = dist->probability(0);
    nlohmann::ordered_json law = nlohmann::ordered_json::object();
    for (auto [d, c] : dist->counts) law[std::to_string(d)] = static_cast<double>(c) / static_cast<double>(dist->total);
    j["d_distribution"] = law;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_verify(int max_n) {
  bool ok = true;
  for (const auto& r : run_verification(max_n)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

int run_animals(int max_sites, std::optional<int> list, bool two_sided) {
  if (list) {
    auto emit = [](const SiteSet& a) { std::cout << format_animal(a) << '\n'; };
    if (two_sided)
      for_each_animal(*list, GrowthOrder::AbscissaThenRow, [&](const SiteSet& a) { if (is_acute_animal(a)) emit(a); });
    else
      for_each_half_animal(*list, GrowthOrder::AbscissaThenRow, [&](const SiteSet& a) { if (is_acute(a)) emit(a); });
    return 0;
  }
  std::cout << "sites,count\n";
  for (int s = 1; s <= max_sites; ++s)
    std::cout << s << ',' << (two_sided ? count_acute_animals(s) : count_acute_half_animals(s)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rushed and progressive Dyck paths: counts, bijections, sampling, checks"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Exact counts by semilength (and height)");
  std::string family = "rushed";
  int max_n = 0;
  bool by_height = false;
  std::string format;
  count->add_option("--family", family, "rushed, progressive, or both (both: full CSV table)")
      ->check(CLI::IsMember({"rushed", "progressive", "both"}));
  count->add_option("--max-n", max_n, "Largest semilength")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--by-height", by_height, "One row per (n, h)");
  count->add_option("--format", format, "plain or csv (default: csv with --by-height, plain otherwise)")->check(CLI::IsMember({"plain", "csv"}));

  auto* enumerate = app.add_subcommand("enumerate", "List Dyck paths of a family in lexicographic order");
  int enum_n = 0;
  std::string enum_family = "dyck";
  enumerate->add_option("--n", enum_n, "Semilength")->required()->check(CLI::Range(0, 16));
  enumerate->add_option("--family", enum_family, "dyck, rushed, progressive, doubly-progressive")
      ->check(CLI::IsMember({"dyck", "rushed", "progressive", "doubly-progressive"}));

  auto* map = app.add_subcommand("map", "Apply a bijection to each path on standard input");
  std::string bijection;
  map->add_option("-b,--bijection", bijection, "f, g, f-inv, or g-inv")
      ->required()
      ->check(CLI::IsMember({"f", "g", "f-inv", "g-inv"}));

  auto* sample = app.add_subcommand("sample", "Uniform random rushed or progressive paths");
  int sample_n = 1;
  int sample_count = 1;
  std::optional<std::uint64_t> seed;
  std::string sample_family = "rushed";
  sample->add_option("--n", sample_n, "Semilength")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", sample_count, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "64-bit seed (printed to stderr when omitted)");
  sample->add_option("--family", sample_family, "rushed or progressive")
      ->check(CLI::IsMember({"rushed", "progressive"}));

  auto* stats = app.add_subcommand("stats", "Height statistics and the height-drop law as JSON");
  int stats_n = 1;
  std::optional<std::uint64_t> samples;
  bool d_csv = false;
  stats->add_option("--n", stats_n, "Semilength")->required()->check(CLI::PositiveNumber);
  stats->add_option("--samples", samples, "Sample the height drop h(p) - h(G(p)) this many times");
  stats->add_option("--seed", seed, "64-bit seed for --samples");
  stats->add_flag("--d-csv", d_csv, "Print the height-drop distribution as CSV d,probability");

  auto* verify = app.add_subcommand("verify", "Run the exhaustive oracle checks");
  int verify_n = 8;
  verify->add_option("--max-n", verify_n, "Largest semilength checked")->check(CLI::Range(0, 14));

  auto* animals = app.add_subcommand("animals", "Count acute half-animals (CSV sites,count)");
  int max_sites = 9;
  std::optional<int> list;
  bool two_sided = false;
  animals->add_option("--max-sites", max_sites, "Largest site count")->check(CLI::Range(1, 12));
  animals->add_option("--list", list, "List the acute animals of this size instead")->check(CLI::Range(1, 12));
  animals->add_flag("--two-sided", two_sided, "Two-sided acute animals (brute force)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return run_count(family, max_n, by_height, format);
    if (*enumerate) return run_enumerate(enum_n, enum_family);
    if (*map) return run_map(bijection);
    if (*sample) return run_sample(sample_n, sample_count, seed, sample_family);
    if (*stats) return run_stats(stats_n, samples, seed, d_csv);
    if (*verify) return run_verify(verify_n);
    if (*animals) return run_animals(max_sites, list, two_sided);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
