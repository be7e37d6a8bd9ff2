// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "par4/atlas.hpp"
#include "par4/constructions.hpp"

using namespace par4;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

bool quadruple_free(RootMask u) {
  for (const auto& q : quadruples())
    if ((u & q.mask()) == q.mask()) return false;
  return true;
}

}  // namespace

int main() {
  // 1
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CatalogRecord> zon;
  std::string err1;
  try {
    zon = enumerate_zonotopal();
  } catch (const AtlasError& e) {
    err1 = e.what();
  }
  const double t_zon = seconds_since(t0);
  {
    bool ok = err1.empty() && zon.size() == 17;
    std::map<std::string, int> m_ref;
    for (const auto& row : table1_reference()) m_ref[std::string(row.nd)] = row.m;
    std::size_t graphic = 0;
    for (const auto& r : zon) {
      ok = ok && venkov_parallelotope(record_polytope(r));
      ok = ok && r.nd && m_ref.count(*r.nd) && m_ref[*r.nd] == r.m;
      graphic += r.graph_label != ConwayLabel::K33_dual;
    }
    ok = ok && graphic == 16 && t_zon < 60;
    report(1, ok, std::to_string(zon.size()) + " zonotopal records, " + std::to_string(graphic) + " graphic, " +
                      fmt_seconds(t_zon) + (err1.empty() ? "" : " " + err1));
  }

  // 2
  {
    const Polytope& c = cell24();
    bool ok = c.f_vector() == std::vector<std::size_t>{24, 96, 96, 24};
    for (std::size_t f = 0; f < c.facets().size(); ++f) {
      const VertexSet& fv = c.facet_vertices(f);
      int tri = 0;
      for (const auto& t : c.faces(2))
        if ((t & fv) == t) tri += t.count() == 3 ? 1 : 100;
      ok = ok && fv.count() == 6 && tri == 8;
    }
    const auto bs = belts(c);
    for (const auto& b : bs) ok = ok && b.size() == 6;
    const auto zs = edge_zones(c);
    for (const auto& z : zs) ok = ok && !z.closed;
    ok = ok && bs.size() == 16 && zs.size() == 12;
    report(2, ok, std::to_string(bs.size()) + " belts, " + std::to_string(zs.size()) + " open zones");
  }

  // 3
  {
    std::size_t bad = 0;
    for (const auto& row : table2_reference()) {
      const RootMask u = parse_root_list(row.roots);
      const PvzReport r = pvz_validate(u);
      const bool ok = r.ok() && r.facets == 24 + 2 * r.tau && r.belts3 == 16 + 3 * r.tau && r.belts2 == r.pi;
      bad += !ok;
    }
    report(3, bad == 0 && table2_reference().size() == 35,
           std::to_string(table2_reference().size()) + " rows, " + std::to_string(bad) + " mismatching");
  }

  // 4
  t0 = std::chrono::steady_clock::now();
  const SumScan scan = scan_sums(1);
  const double t_scan = seconds_since(t0);
  {
    const auto& uni = unimodular_root_subsets();
    std::size_t disagree = 0;
    std::set<std::string> certs;
    for (unsigned m = 0; m < 4096; ++m) {
      const auto u = static_cast<RootMask>(m);
      disagree += scan.venkov[m] != (uni[m] && quadruple_free(u));
      if (scan.venkov[m]) certs.insert(scan.certificates[m]);
    }
    report(4, disagree == 0 && certs.size() == 35 && t_scan < 1800,
           std::to_string(scan.passing()) + " passing subsets, " + std::to_string(disagree) + " disagreements, " +
               std::to_string(certs.size()) + " certificates, " + fmt_seconds(t_scan) + " single-threaded");
  }

  // 5
  Atlas atlas;
  {
    std::string err;
    try {
      atlas.provenance.tool = std::string(tool_version());
      atlas.records = zon;
      const auto sums = enumerate_sums(scan, zon);
      atlas.records.insert(atlas.records.end(), sums.begin(), sums.end());
    } catch (const AtlasError& e) {
      err = e.what();
    }
    std::set<std::string> all, zc;
    for (const auto& r : atlas.records) {
      all.insert(r.certificate);
      if (r.kind == RecordKind::Zonotopal) zc.insert(r.certificate);
    }
    bool disjoint = true;
    for (const auto& r : atlas.records)
      if (r.kind != RecordKind::Zonotopal && zc.count(r.certificate)) disjoint = false;
    report(5, err.empty() && atlas.records.size() == 52 && all.size() == 52 && disjoint,
           std::to_string(atlas.records.size()) + " records, " + std::to_string(all.size()) +
               " distinct certificates" + (err.empty() ? "" : " " + err));
  }

  // 6
  {
    bool ok = true;
    std::string detail;
    for (int n : {4, 3}) {
      const SdnReport r = sdn_validate(n);
      const std::size_t expect = (1u << (n - 1)) + static_cast<std::size_t>(n);
      ok = ok && r.ok() && r.accepted == expect && r.accepted_venkov == expect && r.formula_directions == expect;
      if (n == 4) ok = ok && r.belts3 == 16 && r.belts_a + r.belts_b == r.belts3;
      if (!detail.empty()) detail += "; ";
      detail += "D" + std::to_string(n) + ": " + std::to_string(r.accepted) + " accepted of " +
                std::to_string(r.directions_tested);
    }
    report(6, ok, detail);
  }

  // 7
  {
    const UnextendibleReport r = unextendible_unimodular_subsystems();
    std::map<std::string, std::size_t> sizes;
    for (const auto& c : r.classes) sizes[c.name] = c.size;
    const bool classes_ok = r.classes.size() == 3 && sizes["quadruple"] == 3 && sizes["A4-e"] == 48 && sizes["K33*"] == 16;
    const bool parity_ok = r.three_triple_sets == 64 && r.parity_matches_class;
    report(7, classes_ok && parity_ok,
           std::to_string(r.classes.size()) + " classes (" + std::to_string(sizes["quadruple"]) + "/" +
               std::to_string(sizes["A4-e"]) + "/" + std::to_string(sizes["K33*"]) + "); triad parity " +
               std::to_string(r.even_triads) + "/" + std::to_string(r.odd_triads) + " with " +
               std::to_string(r.parity_mismatches) + " sets disagreeing with the matroid class");
  }

  // 8
  {
    const std::string c24 = canonical_certificate(cell24());
    std::size_t bad = 0;
    std::string first;
    for (const auto& rec : atlas.records) {
      for (const RecordCheck& c : {check_pnz(rec), check_decompose(rec, c24)})
        if (!c.ok()) {
          ++bad;
          if (first.empty()) first = c.id + ": " + c.failures.front();
        }
    }
    report(8, bad == 0 && atlas.records.size() == 52,
           std::to_string(atlas.records.size()) + " records, " + std::to_string(bad) + " failing checks" +
               (first.empty() ? "" : " (" + first + ")"));
  }

  // 9
  {
    const VerifyReport r = verify("mcmullen", &atlas, 1);
    std::size_t bad = 0;
    for (const auto& c : r.checks) bad += !c.pass;
    report(9, r.ok() && non_unimodular_samples().size() >= 10,
           std::to_string(r.checks.size()) + " checks, " + std::to_string(bad) + " failing, " +
               std::to_string(non_unimodular_samples().size()) + " non-unimodular samples");
  }

  // 10
  {
    const Atlas a = build_atlas(1);
    const Atlas b = build_atlas(4);
    const bool json = atlas_to_json(a) == atlas_to_json(b);
    bool tsv = true;
    for (int t : {1, 2}) tsv = tsv && emit_table(a, t, TableFormat::Tsv) == emit_table(b, t, TableFormat::Tsv);
    report(10, json && tsv, std::string("json ") + (json ? "identical" : "differs") + ", tsv " +
                                (tsv ? "identical" : "differs"));
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
