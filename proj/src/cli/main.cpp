// lozenge: exact matching/tiling counts, identity verification sweeps,
// formula tables, and region rendering.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchings/condensation.hpp"
#include "matchings/formulas.hpp"
#include "matchings/json_io.hpp"
#include "matchings/lattice.hpp"
#include "matchings/matching.hpp"
#include "matchings/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitIo = 4;

// Raised for unreadable/unwritable files; mapped to kExitIo.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "-" reads stdin, a leading '{' is inline JSON, anything else is a file path.
std::string read_payload(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("failed to read standard input");
    return buf.str();
  }
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading: " + arg);
  return buf.str();
}

void write_payload(const std::string& out, const std::string& data) {
  if (out.empty() || out == "-") {
    std::cout << data;
    if (!std::cout) throw IoError("failed to write to standard output");
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + out);
  f << data;
  f.flush();
  if (!f) throw IoError("failed while writing: " + out);
}

// Ascending n-subsets of {1..m+n} for the trapezoid table.
bool next_subset(std::vector<int>& xs, int limit) {
  const int n = static_cast<int>(xs.size());
  int pos = n - 1;
  while (pos >= 0 && xs[pos] == limit - n + 1 + pos) --pos;
  if (pos < 0) return false;
  ++xs[pos];
  for (int j = pos + 1; j < n; ++j) xs[j] = xs[j - 1] + 1;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace matchings;

  CLI::App app{"Exact perfect-matching and lozenge-tiling arithmetic"};
  app.require_subcommand(1);

  std::size_t max_states = MatchingOptions::from_env().max_states;
  app.add_option("--max-states", max_states,
                 "cap on live dynamic-programming states before aborting");

  // count
  auto* cmd_count = app.add_subcommand(
      "count", "Exact tiling/matching count of a region spec or graph (JSON)");
  std::string count_input;
  cmd_count->add_option("input", count_input, "JSON text, file path, or - for stdin")
      ->required();

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run one verification suite and report per-instance results");
  std::string suite;
  cmd_verify
      ->add_option("suite", suite,
                   "one of: kuo4 thm21 prop22 cor24 eisenkolbl thm41 prop42 "
                   "recurrence48 gauss")
      ->required();
  std::uint64_t seed = 42;
  int trials = 50;
  int kopt = 2;
  int kmax = -1;
  int max_size = -1;
  int zmax = 12;
  bool oracle_entries = false;
  cmd_verify->add_option("--seed", seed, "random corpus seed");
  cmd_verify->add_option("--trials", trials, "instances per parameter point");
  cmd_verify->add_option("--k", kopt, "largest k for the marked 2k-tuples");
  cmd_verify->add_option("--kmax", kmax, "largest k in parameter sweeps");
  cmd_verify->add_option("--max-size", max_size, "largest side length in sweeps");
  cmd_verify->add_option("--zmax", zmax, "largest lower parameter (gauss)");
  cmd_verify->add_flag("--oracle-entries", oracle_entries,
                       "count matrix entries with the reference recursion");

  // table
  auto* cmd_table = app.add_subcommand("table", "Emit a CSV table of formula values");
  std::string family;
  cmd_table->add_option("family", family, "one of: macmahon clp prop42")->required();
  int tmax = 3;
  int tm = 2, tn = 2;
  int tkmax = 1;
  cmd_table->add_option("--max", tmax, "largest side length (macmahon, prop42)");
  cmd_table->add_option("--m", tm, "trapezoid bottom side (clp)");
  cmd_table->add_option("--n", tn, "trapezoid slanted side (clp)");
  cmd_table->add_option("--kmax", tkmax, "largest notch size (prop42)");

  // render
  auto* cmd_render = app.add_subcommand("render", "Draw a region spec (JSON)");
  std::string render_input;
  std::string format = "ascii";
  std::string out_path = "-";
  cmd_render->add_option("input", render_input, "JSON text, file path, or - for stdin")
      ->required();
  cmd_render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--out", out_path, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  MatchingOptions opt;
  opt.max_states = max_states;

  try {
    if (*cmd_count) {
      CountInput in = count_input_from_json(read_payload(count_input));
      ExactScalar value;
      if (in.graph) {
        value = count_matchings_fast(*in.graph, opt);
      } else {
        value = closed_form_count(in.region->region, opt);
      }
      std::cout << value.str() << "\n";
      return kExitOk;
    }

    if (*cmd_verify) {
      std::vector<SuiteReport> reports;
      if (suite == "kuo4") {
        reports.push_back(suite_kuo4(seed, trials, opt));
      } else if (suite == "thm21") {
        reports.push_back(suite_thm21(seed, trials, kopt, oracle_entries, opt));
      } else if (suite == "prop22") {
        reports.push_back(suite_prop22(seed, trials, kopt, opt));
      } else if (suite == "cor24") {
        reports.push_back(suite_cor24(seed, trials, kopt, opt));
      } else if (suite == "eisenkolbl") {
        const int top = max_size < 1 ? 1 : max_size;
        std::vector<std::array<int, 3>> tuples;
        for (int a = 1; a <= top; ++a)
          for (int b = 1; b <= top; ++b)
            for (int c = 1; c <= top; ++c) tuples.push_back({a, b, c});
        reports.push_back(suite_eisenkolbl(tuples, opt));
      } else if (suite == "thm41") {
        reports.push_back(
            suite_thm41(max_size < 0 ? 1 : max_size, kmax < 0 ? 2 : kmax, opt));
      } else if (suite == "prop42") {
        reports.push_back(
            suite_prop42(max_size < 0 ? 2 : max_size, kmax < 0 ? 1 : kmax, opt));
      } else if (suite == "recurrence48") {
        const int v = max_size < 0 ? 2 : max_size;
        const int kk = kmax < 0 ? 1 : kmax;
        reports.push_back(suite_recurrence48(v, v, kk, opt));
        reports.push_back(suite_thm43(v, v, kk, opt));
      } else if (suite == "gauss") {
        reports.push_back(suite_gauss(kmax < 0 ? 12 : kmax, zmax));
      } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitBadInput;
      }
      bool all_passed = true;
      for (const SuiteReport& r : reports) {
        std::cout << format_report(r);
        all_passed = all_passed && r.passed();
      }
      return all_passed ? kExitOk : kExitVerifyFailed;
    }

    if (*cmd_table) {
      std::ostringstream csv;
      if (family == "macmahon") {
        if (tmax < 0) {
          std::cerr << "--max must be nonnegative\n";
          return kExitBadInput;
        }
        csv << "a,b,c,count\n";
        for (int a = 0; a <= tmax; ++a)
          for (int b = 0; b <= tmax; ++b)
            for (int c = 0; c <= tmax; ++c)
              csv << a << "," << b << "," << c << "," << macmahon(a, b, c).str() << "\n";
      } else if (family == "clp") {
        if (tm < 0 || tn < 1) {
          std::cerr << "need m >= 0 and n >= 1\n";
          return kExitBadInput;
        }
        csv << "m,n,xs,count\n";
        std::vector<int> xs(tn);
        for (int i = 0; i < tn; ++i) xs[i] = i + 1;
        do {
          csv << tm << "," << tn << ",";
          for (int i = 0; i < tn; ++i) csv << (i ? "|" : "") << xs[i];
          csv << "," << clp_formula(tm, tn, xs).str() << "\n";
        } while (next_subset(xs, tm + tn));
      } else if (family == "prop42") {
        if (tmax < 0 || tkmax < 0) {
          std::cerr << "--max and --kmax must be nonnegative\n";
          return kExitBadInput;
        }
        csv << "x,y,z,k,l,prime,count\n";
        for (int prime = 0; prime <= 1; ++prime)
          for (int x = 0; x <= tmax; ++x)
            for (int y = 0; y <= tmax; ++y)
              for (int z = 0; z <= tmax; ++z)
                for (int k = 0; k <= tkmax; ++k)
                  for (int l = 0; l <= z + k; ++l) {
                    if (!h_kl_region_valid(x, y, z, k, l, prime != 0)) continue;
                    ExactScalar v = prime ? count_h_prime_kl(x, y, z, k, l)
                                          : count_h_kl(x, y, z, k, l);
                    csv << x << "," << y << "," << z << "," << k << "," << l << ","
                        << prime << "," << v.str() << "\n";
                  }
      } else {
        std::cerr << "unknown table family: " << family << "\n";
        return kExitBadInput;
      }
      std::cout << csv.str();
      return kExitOk;
    }

    if (*cmd_render) {
      RegionSpec spec = region_spec_from_json(read_payload(render_input));
      RenderFormat rf = format == "svg" ? RenderFormat::svg : RenderFormat::ascii;
      write_payload(out_path, render(spec.region, rf, spec.marked));
      return kExitOk;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
