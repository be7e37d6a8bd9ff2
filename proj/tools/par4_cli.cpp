#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "par4/atlas.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  unsigned jobs = 1;
  std::string in;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + opt.out);
  f << text;
}

par4::Atlas load_atlas(const Options& opt) {
  if (!opt.in.empty()) return par4::atlas_from_json(read_file(opt.in));
  return par4::build_atlas(opt.jobs);
}

int run_enumerate(const Options& opt, const std::string& what) {
  if (what == "zonotopal") {
    write_output(opt, par4::records_to_json(par4::enumerate_zonotopal()));
  } else if (what == "sums") {
    const auto zon = par4::enumerate_zonotopal();
    const auto scan = par4::scan_sums(opt.jobs);
    write_output(opt, par4::records_to_json(par4::enumerate_sums(scan, zon)));
  } else {
    write_output(opt, par4::atlas_to_json(par4::build_atlas(opt.jobs)));
  }
  return kPass;
}

int run_classify(const Options& opt) {
  const par4::Atlas atlas = load_atlas(opt);
  const par4::ClassifySummary s = par4::classify_all(atlas);
  std::ostringstream os;
  os << "records\t" << s.total << "\n"
     << "zonotopal\t" << s.zonotopal << "\n"
     << "sums\t" << s.sums << "\n"
     << "distinct certificates\t" << s.distinct_certificates << "\n"
     << "zonotopal/sum disjoint\t" << (s.zonotopal_sum_disjoint ? "yes" : "no") << "\n";
  for (const auto& c : s.collisions) os << "collision\t" << c << "\n";
  for (const auto& c : s.checks) {
    os << c.id << "\t" << (c.ok() ? "ok" : "FAIL");
    for (const auto& f : c.failures) os << "\t" << f;
    os << "\n";
  }
  os << (s.ok() ? "PASS" : "FAIL") << "\n";
  write_output(opt, os.str());
  return s.ok() ? kPass : kFail;
}

int run_show(const Options& opt, const std::string& id) {
  const par4::Atlas atlas = load_atlas(opt);
  const par4::CatalogRecord* r = atlas.find(id);
  if (r == nullptr) {
    std::cerr << "par4: no record with id '" << id << "'\n";
    return kUsage;
  }
  write_output(opt, par4::record_to_json(*r));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and classification of the four-dimensional parallelotopes"};
  app.set_version_flag("--version", std::string(par4::tool_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--jobs,-j", opt.jobs, "worker threads for the 4096-subset scan")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--in", opt.in, "read the atlas from this JSON file instead of enumerating");
  app.add_option("--out,-o", opt.out, "write output to this file");

  std::string enum_what = "all";
  auto* enumerate = app.add_subcommand("enumerate", "enumerate records and print JSON");
  enumerate->add_option("what", enum_what, "zonotopal, sums or all")
      ->check(CLI::IsMember({"zonotopal", "sums", "all"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "check the 52 records and their invariants");

  int table = 1;
  std::string format = "tsv";
  auto* tables = app.add_subcommand("tables", "print Table 1 or Table 2");
  tables->add_option("which", table, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  tables->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

  std::string prop = "all";
  auto* verify = app.add_subcommand("verify", "run the checks of one proposition and print a JSON report");
  std::vector<std::string> props(par4::verify_props().begin(), par4::verify_props().end());
  verify->add_option("prop", prop, "pnz, pzs, sum, sdn, unext, pvz, mcmullen or all")
      ->check(CLI::IsMember(props))
      ->capture_default_str();

  std::string id;
  auto* show = app.add_subcommand("show", "print one record");
  show->add_option("--id", id, "record id (N_D, or St)")->required();

  app.add_subcommand("export", "write the atlas JSON (re-serializes --in when given)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(opt, enum_what);
    if (*classify) return run_classify(opt);
    if (*tables) {
      const auto fmt = format == "json" ? par4::TableFormat::Json : par4::TableFormat::Tsv;
      write_output(opt, par4::emit_table(load_atlas(opt), table, fmt));
      return kPass;
    }
    if (*verify) {
      std::optional<par4::Atlas> atlas;
      if (!opt.in.empty()) atlas = load_atlas(opt);
      const auto report = par4::verify(prop, atlas ? &*atlas : nullptr, opt.jobs);
      write_output(opt, par4::report_json(report));
      return report.ok() ? kPass : kFail;
    }
    if (*show) return run_show(opt, id);
    write_output(opt, par4::atlas_to_json(load_atlas(opt)));
    return kPass;
  } catch (const par4::AtlasError& e) {
    std::cerr << "par4: " << e.what();
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "par4: " << e.what() << "\n";
    return kUsage;
  }
}
