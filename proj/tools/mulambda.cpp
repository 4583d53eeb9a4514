// mulambda: Moebius functions on subgroup lattices and class posets, the
// mu/lambda property checker, and closed-form family tables.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <mulambda/cache.hpp>
#include <mulambda/families.hpp>
#include <mulambda/group_spec.hpp>
#include <mulambda/property.hpp>
#include <mulambda/report.hpp>
#include <mulambda/zoo.hpp>

namespace {

using namespace mulambda;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1; // property failure / cross-check mismatch
constexpr int kExitError = 2;   // operational error

struct CommonOpts {
  std::string format = "human";
  std::string cache_dir;
  std::size_t element_cap = k_default_element_cap;
  std::size_t subgroup_cap = 200000;
  unsigned threads = 0;
  bool maxint_only = false;
};

void add_common(CLI::App *cmd, CommonOpts &c) {
  cmd->add_option("--format", c.format, "output format: human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  cmd->add_option("--cache-dir", c.cache_dir, "lattice cache directory");
  cmd->add_option("--element-cap", c.element_cap, "element enumeration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--subgroup-cap", c.subgroup_cap, "subgroup enumeration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads (0 = hardware)");
  cmd->add_flag("--maxint-only", c.maxint_only, "report only MaxInt classes");
}

LatticeOptions lattice_opts(const CommonOpts &c) {
  LatticeOptions o;
  o.element_cap = c.element_cap;
  o.subgroup_cap = c.subgroup_cap;
  o.threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  return o;
}

std::optional<std::filesystem::path> cache_dir_of(const CommonOpts &c) {
  if (!c.cache_dir.empty()) return std::filesystem::path(c.cache_dir);
  if (const char *env = std::getenv("MULAMBDA_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

GroupAnalysis analyze_spec(const std::string &spec_text, const CommonOpts &c) {
  GroupSpec spec = parse_spec(spec_text);
  std::string canon = spec.serialize();
  LatticeOptions opt = lattice_opts(c);
  Group g = build_group(spec, opt.element_cap);
  GroupAnalysis a;
  auto dir = cache_dir_of(c);
  bool cached = false;
  if (dir) {
    auto path = lattice_cache_path(*dir, canon);
    if (auto lat = load_lattice(path, canon); lat && lat->ambient == g) {
      a.lat = std::move(*lat);
      cached = true;
    }
  }
  if (!cached) {
    a.lat = enumerate_subgroups(g, opt);
    if (dir) save_lattice(a.lat, canon, lattice_cache_path(*dir, canon));
  }
  a.cp = conjugacy_classes(a.lat);
  a.tab = moebius_table(a.lat, a.cp);
  Group derived = g.derived_subgroup(opt.element_cap);
  auto id = a.lat.find_by_elements(derived.elements());
  if (!id) throw std::logic_error("derived subgroup not found in lattice");
  a.derived_id = *id;
  a.solvable = g.is_solvable(opt.element_cap);
  return a;
}

int cmd_analyze(const std::string &spec_text, const CommonOpts &c) {
  GroupAnalysis a = analyze_spec(spec_text, c);
  PropertyReport rep = check_property(a, c.maxint_only);
  rep.spec = parse_spec(spec_text).serialize();
  print_report(std::cout, rep, parse_format(c.format));
  return kExitOk;
}

int cmd_verify(const std::string &spec_text, const CommonOpts &c) {
  GroupAnalysis a = analyze_spec(spec_text, c);
  PropertyReport rep = check_property(a, c.maxint_only);
  rep.spec = parse_spec(spec_text).serialize();
  print_report(std::cout, rep, parse_format(c.format));
  return rep.verdict ? kExitOk : kExitFinding;
}

int cmd_family(const std::string &family, std::int64_t q, bool cross_check,
               const CommonOpts &c) {
  std::vector<FamilyRow> rows;
  if (family == "l2") rows = l2_rows(q);
  else if (family == "sz") rows = sz_rows(q);
  else if (family == "ree") rows = ree_rows(q);
  else throw std::invalid_argument("unknown family '" + family + "' (l2|sz|ree)");
  const FamilyRow *offender = nullptr;
  if (!table_self_check(rows, &offender))
    throw std::logic_error("table self-check failed at row " + offender->label);
  print_rows(std::cout, rows, parse_format(c.format));
  if (!cross_check) return kExitOk;
  if (family == "ree")
    throw std::invalid_argument("ree: no brute-force construction available");
  std::string spec = (family == "l2" ? "psl2:" : "sz:") + std::to_string(q);
  GroupAnalysis a = analyze_spec(spec, c);
  CrossCheckResult res = cross_check_family(a, rows);
  if (res.match) {
    std::cout << "cross-check vs " << spec << ": match\n";
    return kExitOk;
  }
  std::cout << "cross-check vs " << spec << ": MISMATCH\n";
  for (const auto &t : res.only_in_rows)
    std::cout << "  only in table: order " << wide_to_string(t[0]) << " mu "
              << wide_to_string(t[1]) << " lambda " << wide_to_string(t[2]) << " norm "
              << wide_to_string(t[3]) << "\n";
  for (const auto &t : res.only_in_brute)
    std::cout << "  only in brute force: order " << wide_to_string(t[0]) << " mu "
              << wide_to_string(t[1]) << " lambda " << wide_to_string(t[2]) << " norm "
              << wide_to_string(t[3]) << "\n";
  return kExitFinding;
}

int cmd_suite(const std::string &path, const CommonOpts &c) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "error: cannot read corpus file " << path << "\n";
    return kExitError;
  }
  std::string line;
  std::size_t ran = 0, met = 0;
  bool all_met = true;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string spec_text, kw, expect = "pass";
    if (!(ls >> spec_text)) continue;
    if (ls >> kw) {
      if (kw != "EXPECT" || !(ls >> expect) || (expect != "pass" && expect != "fail")) {
        std::cerr << "error: bad corpus line: " << line << "\n";
        return kExitError;
      }
    }
    ++ran;
    GroupAnalysis a = analyze_spec(spec_text, c);
    PropertyReport rep = check_property(a, c.maxint_only);
    bool ok = rep.verdict == (expect == "pass");
    if (ok) ++met;
    all_met = all_met && ok;
    std::cout << (ok ? "ok   " : "FAIL ") << spec_text << " (order " << rep.order
              << ", " << (rep.verdict ? "holds" : "fails") << ", expected " << expect
              << ")\n";
  }
  std::cout << ran << " specs, " << met << " expectations met\n";
  return all_met ? kExitOk : kExitFinding;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Moebius mu/lambda computations on subgroup lattices"};
  app.require_subcommand(1);

  CommonOpts copt;
  std::string spec_text, family, corpus;
  std::int64_t q = 0;
  bool cross_check = false;

  CLI::App *analyze = app.add_subcommand("analyze", "lattice summary and mu/lambda per class");
  analyze->add_option("spec", spec_text, "group spec, e.g. psl2:4")->required();
  add_common(analyze, copt);

  CLI::App *verify = app.add_subcommand("verify", "check the mu/lambda property");
  verify->add_option("spec", spec_text, "group spec")->required();
  add_common(verify, copt);

  CLI::App *fam = app.add_subcommand("family", "closed-form table rows for l2|sz|ree");
  fam->add_option("family", family, "l2|sz|ree")->required();
  fam->add_option("--q", q, "prime power parameter")->required();
  fam->add_flag("--cross-check", cross_check, "brute-force the group and compare");
  add_common(fam, copt);

  CLI::App *suite = app.add_subcommand("suite", "run verify over a corpus file");
  suite->add_option("corpus", corpus, "file with lines: spec [EXPECT pass|fail]")->required();
  add_common(suite, copt);

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return cmd_analyze(spec_text, copt);
    if (verify->parsed()) return cmd_verify(spec_text, copt);
    if (fam->parsed()) return cmd_family(family, q, cross_check, copt);
    if (suite->parsed()) return cmd_suite(corpus, copt);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
