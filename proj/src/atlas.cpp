#include "par4/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "par4/constructions.hpp"

namespace par4 {

using json = nlohmann::ordered_json;

std::string_view tool_version() { return "par4 0.1.0"; }

std::string kind_name(RecordKind kind) {
  switch (kind) {
    case RecordKind::Zonotopal:
      return "zonotopal";
    case RecordKind::Cell24Sum:
      return "cell24-sum";
    case RecordKind::Cell24:
      return "cell24";
  }
  throw std::logic_error("kind_name: unknown kind");
}

RecordKind parse_kind(std::string_view name) {
  for (auto k : {RecordKind::Zonotopal, RecordKind::Cell24Sum, RecordKind::Cell24})
    if (kind_name(k) == name) return k;
  throw std::invalid_argument("parse_kind: unknown kind '" + std::string(name) + "'");
}

const CatalogRecord* Atlas::find(std::string_view id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

using L = ConwayLabel;

constexpr Table1Row kTable1[] = {
    {"1", 10, L::K5},         {"4", 9, L::K5_minus_1},       {"19", 9, L::K33_dual},
    {"5", 8, L::K5_minus_2x1}, {"6", 8, L::K5_minus_2},       {"7", 7, L::K5_minus_1_minus_2},
    {"8", 7, L::K4_plus_1},   {"9", 7, L::C2221},            {"10", 7, L::K5_minus_3},
    {"11", 6, L::C222},       {"12", 6, L::C321},            {"13", 6, L::C221_plus_1},
    {"16", 6, L::C3_plus_C3}, {"14", 5, L::C4_plus_1},       {"15", 5, L::C5},
    {"17", 5, L::C3_plus_2x1}, {"18", 4, L::Forest4},
};

// Row 43 reads "14-" without the superscript in the source; it is 14-.
constexpr Table2Row kTable2[] = {
    {"2", 9, "(12-,12+,34-),(13-,13+,24-),(14-,14+,23-)", L::K5_minus_1, 4, "4"},
    {"3", 9, "(12-,12+,34-),(13-,13+,24+),(14-,14+,23-)", L::K33_dual, 4, "19"},
    {"20", 8, "(12-,12+,34-),(13-,13+,24-),(14+,23-)", L::K5_minus_2, 4, "6"},
    {"21", 8, "(12-,12+,34-),(13-,13+,24-),(14-,14+)", L::K5_minus_2x1, 4, "5"},
    {"22", 7, "(12+,34-),(13-,13+,24-),(14-,14+)", L::K5_minus_3, 4, "10"},
    {"23", 7, "34-,(13-,13+,24-),(14-,14+,23-)", L::C2221, 4, "9"},
    {"24", 7, "(12-,12+,34-),(13-,13+,24-),14+", L::K5_minus_1_minus_2, 4, "7"},
    {"25", 7, "(12+,34-),(13-,13+,24-),(14+,23-)", L::K4_plus_1, 4, "8"},
    {"26", 7, "(12-,12+,34-),(13-,13+),(14-,14+)", L::K5_minus_1_minus_2, 4, "7"},
    {"27", 6, "(12-,12+,34-),(13-,13+),14+", L::C321, 4, "12"},
    {"28", 6, "(12+,34-),(13-,13+,24-),14+", L::C221_plus_1, 4, "13"},
    {"29", 6, "(13-,13+,24-),(14-,14+,23-)", L::C222, 4, "11"},
    {"30", 6, "(12+,34-),(13+,24-),(14-,14+)", L::C221_plus_1, 4, "13"},
    {"31", 6, "(12-,12+),(13-,13+),(14-,14+)", L::C222, 4, "11"},
    {"32", 6, "(12+,34-),(13-,24-),(14-,14+)", L::C3_plus_C3, 4, "16"},
    {"33", 6, "(12+,34-),(13+,24-),(14+,23-)", L::K4, 3, "a1"},
    {"34", 5, "12+,(13-,13+,24-),14+", L::C3_plus_2x1, 4, "17"},
    {"35", 5, "(12-,12+,34-),13-,14+", L::C5, 4, "15"},
    {"36", 5, "(13-,13+,24-),(14-,14+)", L::C4_plus_1, 4, "14"},
    {"37", 5, "(12-,12+),(13-,13+),14+", L::C4_plus_1, 4, "14"},
    {"38", 5, "(12+,34-),(13-,13+),14+", L::C3_plus_2x1, 4, "17"},
    {"39", 5, "(12+,34-),(13+,24-),14+", L::C221, 3, "a2"},
    {"40", 4, "(13-,13+,24-),14+", L::Forest4, 4, "18"},
    {"41", 4, "12+,(13-,13+),14+", L::Forest4, 4, "18"},
    {"42", 4, "(12+,34-),13+,14+", L::C3_plus_1, 3, "a3"},
    {"43", 4, "(13+,24-),(14-,14+)", L::Forest4, 4, "18"},
    {"44", 4, "(13-,13+),(14-,14+)", L::C4, 3, "a4"},
    {"45", 3, "(14-,14+,23-)", L::Forest3, 3, "a5"},
    {"46", 3, "(13-,13+),14-", L::Forest3, 3, "a'5"},
    {"47", 3, "12+,13+,14+", L::Forest3, 3, "a''5"},
    {"St", 3, "34-,13+,14+", L::C3, 2, "alpha"},
    {"48", 2, "(14-,14+)", L::Forest2, 2, "beta1"},
    {"49", 2, "13+,14+", L::Forest2, 2, "beta2"},
    {"50", 1, "14+", L::Forest1, 1, ""},
    {"51", 0, "", L::Cell24, 0, ""},
};

}  // namespace

std::span<const Table1Row> table1_reference() { return kTable1; }
std::span<const Table2Row> table2_reference() { return kTable2; }

RootMask parse_root_list(std::string_view text) {
  std::vector<Root> roots;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) roots.push_back(Root::parse(token));
    token.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  const RootMask mask = mask_of(roots);
  if (static_cast<std::size_t>(std::popcount(mask)) != roots.size())
    throw std::invalid_argument("parse_root_list: repeated root in '" + std::string(text) + "'");
  return mask;
}

std::string format_root_groups(RootMask mask) {
  std::string out;
  for (const auto& q : quadruples()) {
    const auto group = roots_of(static_cast<RootMask>(mask & q.mask()));
    if (group.empty()) continue;
    if (!out.empty()) out += ',';
    if (group.size() > 1) out += '(';
    for (std::size_t k = 0; k < group.size(); ++k) out += (k ? "," : "") + group[k].symbol();
    if (group.size() > 1) out += ')';
  }
  return out;
}

int nd_order(std::string_view nd) {
  if (nd == "St") return 95;
  int v = 0;
  for (char c : nd) {
    if (c < '0' || c > '9') throw std::invalid_argument("nd_order: bad label '" + std::string(nd) + "'");
    v = v * 10 + (c - '0');
  }
  return 2 * v;
}

std::size_t SumScan::passing() const { return static_cast<std::size_t>(std::count(venkov.begin(), venkov.end(), true)); }

SumScan scan_sums(unsigned jobs) {
  constexpr std::size_t n = std::size_t{1} << kRootCount;
  std::vector<char> pass(n, 0);
  SumScan out;
  out.certificates.assign(n, {});
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t mask = next.fetch_add(1);
      if (mask >= n) return;
      const Polytope p = sum_cell24(static_cast<RootMask>(mask));
      if (venkov_parallelotope(p)) {
        pass[mask] = 1;
        out.certificates[mask] = canonical_certificate(p);
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  out.venkov.assign(pass.begin(), pass.end());
  return out;
}

namespace {

void sort_records(std::vector<CatalogRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return nd_order(a.id) < nd_order(b.id);
  });
}

void fill_geometry(CatalogRecord& rec, const Polytope& p) {
  const VenkovReport v = venkov_report(p);
  rec.f_vector = p.f_vector();
  rec.belts2 = v.belts4;
  rec.belts3 = v.belts6;
  rec.certificate = canonical_certificate(p);
}

}  // namespace

std::vector<CatalogRecord> enumerate_zonotopal() {
  struct Candidate {
    std::vector<Vector> vectors;
    ConwayLabel label;
  };
  std::vector<Candidate> systems;
  for (const auto& lg : enumerate_rank4_subgraphs_k5()) systems.push_back({graphic_vectors(lg.graph).vectors, lg.label});
  systems.push_back({cographic_k33_vectors().vectors, ConwayLabel::K33_dual});

  std::ostringstream problems;
  std::vector<CatalogRecord> out;
  std::set<std::string_view> used;
  for (const auto& sys : systems) {
    const Polytope p = zonotope(sys.vectors);
    CatalogRecord rec;
    rec.kind = RecordKind::Zonotopal;
    rec.graph_label = sys.label;
    rec.m = static_cast<int>(sys.vectors.size());
    rec.dim_u = static_cast<int>(rank(sys.vectors));
    for (const auto& v : sys.vectors) rec.generators.push_back(v.str());
    if (!venkov_parallelotope(p)) problems << "Z(" << label_name(sys.label) << ") fails Venkov\n";
    fill_geometry(rec, p);
    const Table1Row* row = nullptr;
    for (const auto& r : kTable1)
      if (r.label == sys.label) row = &r;
    if (row == nullptr) {
      problems << label_name(sys.label) << " has no Table 1 row\n";
      continue;
    }
    if (row->m != rec.m) problems << label_name(sys.label) << ": m = " << rec.m << ", table " << row->m << "\n";
    if (!used.insert(row->nd).second) problems << "Table 1 row " << row->nd << " matched twice\n";
    rec.id = std::string(row->nd);
    rec.nd = rec.id;
    out.push_back(std::move(rec));
  }
  if (out.size() != 17) problems << "zonotopal count " << out.size() << ", expected 17\n";
  if (!problems.str().empty()) throw AtlasError("enumerate_zonotopal:\n" + problems.str());
  sort_records(out);
  return out;
}

namespace {

struct Signature {
  ConwayLabel label;
  int m;
  int dim;
  std::size_t tau;
  std::size_t pi;
  auto operator<=>(const Signature&) const = default;
};

std::string signature_str(const Signature& s) {
  std::ostringstream os;
  os << "(" << label_name(s.label) << ", m=" << s.m << ", dim=" << s.dim << ", tau=" << s.tau << ", pi=" << s.pi
     << ")";
  return os.str();
}

ConwayLabel root_label(RootMask u) {
  if (u == 0) return ConwayLabel::Cell24;
  const auto label = matroid_label(root_vectors(u));
  if (!label) throw AtlasError("root system " + mask_symbols(u) + " has no label");
  return *label;
}

Signature signature_of(RootMask u) {
  const auto vecs = root_vectors(u);
  return {root_label(u), std::popcount(u), static_cast<int>(vecs.empty() ? 0 : rank(vecs)), tau(u).size(),
          pi(u).size()};
}

bool orthogonal_edges_at(const Polytope& p, const VertexSet& face) {
  const auto& verts = p.vertices();
  std::vector<Vector> dirs;
  const std::size_t first = face._Find_first();
  for (auto [a, b] : p.edges()) {
    if (!face.test(a) || !face.test(b)) continue;
    if (a == first) dirs.push_back(verts[b] - verts[a]);
    if (b == first) dirs.push_back(verts[a] - verts[b]);
  }
  return dirs.size() == 2 && dot(dirs[0], dirs[1]).is_zero();
}

}  // namespace

std::optional<std::string> derive_nd0(RootMask u, std::span<const CatalogRecord> zonotopal) {
  if (u == 0) return std::nullopt;
  const Polytope z = zonotope(root_vectors(u));
  const auto fv = z.f_vector();
  using F = std::vector<std::size_t>;
  switch (z.dim()) {
    case 4: {
      const std::string cert = canonical_certificate(z);
      for (const auto& rec : zonotopal)
        if (rec.certificate == cert) return rec.nd;
      return std::nullopt;
    }
    case 3: {
      if (fv == F{24, 36, 14}) return "a1";
      if (fv == F{18, 28, 12}) return "a2";
      if (fv == F{12, 18, 8}) return "a3";
      if (fv == F{14, 24, 12}) return "a4";
      if (fv != F{8, 12, 6}) return std::nullopt;
      int rectangles = 0;
      for (const auto& f : z.faces(2)) rectangles += orthogonal_edges_at(z, f) ? 1 : 0;
      if (rectangles == 6) return "a5";
      if (rectangles == 2) return "a'5";
      if (rectangles == 0) return "a''5";
      return std::nullopt;
    }
    case 2: {
      if (fv[0] == 6) return "alpha";
      if (fv[0] != 4) return std::nullopt;
      VertexSet all;
      for (std::size_t k = 0; k < z.vertices().size(); ++k) all.set(k);
      return orthogonal_edges_at(z, all) ? "beta1" : "beta2";
    }
    default:
      return std::nullopt;
  }
}

std::vector<CatalogRecord> enumerate_sums(const SumScan& scan, std::span<const CatalogRecord> zonotopal) {
  std::ostringstream problems;
  std::map<std::string, std::vector<RootMask>> classes;
  for (std::size_t mask = 0; mask < scan.venkov.size(); ++mask)
    if (scan.venkov[mask]) classes[scan.certificates[mask]].push_back(static_cast<RootMask>(mask));
  if (classes.size() != 35) problems << "sum classes " << classes.size() << ", expected 35\n";

  std::map<Signature, std::vector<const Table2Row*>> by_signature;
  for (const auto& row : kTable2) {
    const RootMask u = parse_root_list(row.roots);
    const Signature computed = signature_of(u);
    const Signature stated{row.label, row.m, row.dim_u, computed.tau, computed.pi};
    if (computed != stated)
      problems << "row " << row.nd << ": roots give " << signature_str(computed) << ", table states "
               << signature_str(stated) << "\n";
    by_signature[stated].push_back(&row);
  }
  for (const auto& [sig, rows] : by_signature)
    if (rows.size() > 1) problems << "signature " << signature_str(sig) << " is shared by " << rows.size() << " rows\n";

  std::vector<CatalogRecord> out;
  std::set<std::string_view> used;
  for (const auto& [cert, members] : classes) {
    const RootMask rep = members.front();
    const Signature sig = signature_of(rep);
    auto it = by_signature.find(sig);
    if (it == by_signature.end() || it->second.size() != 1) {
      problems << "class of " << mask_symbols(rep) << " " << signature_str(sig) << " matches no unique row\n";
      continue;
    }
    const Table2Row& row = *it->second.front();
    if (!used.insert(row.nd).second) problems << "row " << row.nd << " matched by two classes\n";
    const RootMask u = parse_root_list(row.roots);
    if (!scan.venkov[u] || scan.certificates[u] != cert)
      problems << "row " << row.nd << ": its roots are not in the class of " << mask_symbols(rep) << "\n";

    CatalogRecord rec;
    rec.id = std::string(row.nd);
    rec.nd = rec.id;
    rec.kind = u == 0 ? RecordKind::Cell24 : RecordKind::Cell24Sum;
    rec.graph_label = sig.label;
    rec.m = sig.m;
    rec.dim_u = sig.dim;
    rec.tau_count = sig.tau;
    rec.pi_count = sig.pi;
    for (const auto& r : roots_of(u)) rec.generators.push_back(r.symbol());
    rec.class_size = members.size();
    fill_geometry(rec, sum_cell24(u));
    if (rec.certificate != cert) problems << "row " << row.nd << ": certificate changed on rebuild\n";
    rec.nd0 = derive_nd0(u, zonotopal);
    const std::string stated_nd0(row.nd0);
    if (rec.nd0.value_or("") != stated_nd0)
      problems << "row " << row.nd << ": N_D0 " << rec.nd0.value_or("(none)") << ", table " << stated_nd0 << "\n";
    if (stated_nd0.empty()) rec.nd0.reset();
    out.push_back(std::move(rec));
  }
  if (!problems.str().empty()) throw AtlasError("enumerate_sums:\n" + problems.str());
  sort_records(out);
  return out;
}

namespace {

Atlas assemble(std::vector<CatalogRecord> zonotopal, std::vector<CatalogRecord> sums, const SumScan& scan) {
  Atlas atlas;
  atlas.provenance.tool = std::string(tool_version());
  atlas.provenance.subsets_scanned = scan.venkov.size();
  atlas.provenance.passing_subsets = scan.passing();
  atlas.provenance.sum_classes = sums.size();
  atlas.records = std::move(zonotopal);
  for (auto& r : sums) atlas.records.push_back(std::move(r));
  sort_records(atlas.records);
  return atlas;
}

}  // namespace

Atlas build_atlas(unsigned jobs) {
  auto zon = enumerate_zonotopal();
  const SumScan scan = scan_sums(jobs);
  auto sums = enumerate_sums(scan, zon);
  return assemble(std::move(zon), std::move(sums), scan);
}

std::vector<Vector> record_generators(const CatalogRecord& record) {
  std::vector<Vector> out;
  for (const auto& g : record.generators) {
    if (g.empty()) throw std::invalid_argument("record_generators: empty generator");
    if (g.front() != '(') {
      out.push_back(Root::parse(g).vector());
      continue;
    }
    if (g.back() != ')') throw std::invalid_argument("record_generators: bad vector '" + g + "'");
    std::vector<Rational> coords;
    std::stringstream ss(g.substr(1, g.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(Rational::parse(item));
    out.emplace_back(std::move(coords));
  }
  return out;
}

Polytope record_polytope(const CatalogRecord& record) {
  switch (record.kind) {
    case RecordKind::Zonotopal:
      return zonotope(record_generators(record));
    case RecordKind::Cell24:
      return cell24();
    case RecordKind::Cell24Sum: {
      std::vector<Root> roots;
      for (const auto& g : record.generators) roots.push_back(Root::parse(g));
      return sum_cell24(mask_of(roots));
    }
  }
  throw std::logic_error("record_polytope: unknown kind");
}

PnzResult pnz_check(const Polytope& p, const Vector& z) {
  PnzResult r;
  const auto zone = zone_along(p, z);
  r.closed_zone = zone && zone->closed;
  r.width_positive = width_positive(p, z);
  const Rational lambda = zone ? zone->shortest() * Rational(1, 2) : Rational(1);
  // p = q + lambda[-z,z] forces w - lambda z or w + lambda z into the eroded q
  // for every vertex w; checked first since it is cheap.
  for (const auto& e : p.equalities())
    if (!dot(e.normal, z).is_zero()) return r;
  const Vector shift = z * lambda;
  for (const auto& w : p.vertices()) {
    bool any = false;
    for (const Vector& x : {w - shift, w + shift}) {
      bool inside = true;
      for (const auto& f : p.facets())
        if (dot(f.normal, x) > f.rhs - lambda * abs(dot(f.normal, z))) {
          inside = false;
          break;
        }
      any = any || inside;
    }
    if (!any) return r;
  }
  try {
    const Polytope q = erode_segment(p, z, lambda);
    r.round_trip = add_segment(q, z, lambda).vertices() == p.vertices();
  } catch (const std::invalid_argument&) {
    r.round_trip = false;
  }
  return r;
}

RecordCheck check_pnz(const CatalogRecord& record) {
  RecordCheck out{record.id, {}};
  const Polytope p = record_polytope(record);
  std::set<Vector> gens;
  for (const auto& g : record_generators(record)) gens.insert(canonical_direction(g));
  std::set<Vector> dirs = gens;
  for (const auto& r : positive_roots(4)) dirs.insert(canonical_direction(r.vector()));
  for (const auto& z : dirs) {
    const PnzResult r = pnz_check(p, z);
    if (!r.consistent()) {
      std::ostringstream os;
      os << "along " << z.str() << ": closed zone " << r.closed_zone << ", width " << r.width_positive
         << ", round trip " << r.round_trip;
      out.failures.push_back(os.str());
    }
    if (r.closed_zone != (gens.count(z) > 0))
      out.failures.push_back("closed zone along " + z.str() + " does not match the generators");
  }
  return out;
}

namespace {

std::vector<Vector> sorted_directions(std::vector<Vector> dirs) {
  for (auto& d : dirs) d = canonical_direction(d);
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

}  // namespace

RecordCheck check_decompose(const CatalogRecord& record, const std::string& cell24_certificate) {
  RecordCheck out{record.id, {}};
  const Polytope p = record_polytope(record);
  const auto expected = sorted_directions(record_generators(record));
  const ZoneChooser last = [](const std::vector<EdgeZone>& zones) { return zones.size() - 1; };
  std::optional<std::string> first_core;
  for (const ZoneChooser& chooser : {ZoneChooser{}, last}) {
    const DecompositionResult d = decompose(p, chooser);
    if (record.kind == RecordKind::Zonotopal) {
      if (d.core.dim() != 0) out.failures.push_back("core has dimension " + std::to_string(d.core.dim()));
    } else if (canonical_certificate(d.core) != cell24_certificate) {
      out.failures.push_back("core is not the 24-cell");
    }
    if (sorted_directions(d.directions) != expected) out.failures.push_back("split directions differ from generators");
    for (const auto& l : d.lambdas)
      if (l != Rational(1)) out.failures.push_back("split length " + l.str() + " differs from 1");
    const std::string core_cert = canonical_certificate(d.core);
    if (first_core && *first_core != core_cert) out.failures.push_back("core depends on the split order");
    first_core = core_cert;
  }
  return out;
}

bool ClassifySummary::ok() const {
  if (total != 52 || zonotopal != 17 || sums != 35 || distinct_certificates != 52 || !zonotopal_sum_disjoint)
    return false;
  return std::all_of(checks.begin(), checks.end(), [](const RecordCheck& c) { return c.ok(); });
}

ClassifySummary classify_all(const Atlas& atlas) {
  ClassifySummary s;
  s.total = atlas.records.size();
  std::map<std::string, std::string> owner;
  std::set<std::string> zon_certs;
  std::set<std::string> sum_certs;
  for (const auto& r : atlas.records) {
    (r.kind == RecordKind::Zonotopal ? s.zonotopal : s.sums) += 1;
    (r.kind == RecordKind::Zonotopal ? zon_certs : sum_certs).insert(r.certificate);
    auto [it, fresh] = owner.emplace(r.certificate, r.id);
    if (!fresh) s.collisions.push_back(it->second + " and " + r.id + " share a certificate");
  }
  s.distinct_certificates = owner.size();
  s.zonotopal_sum_disjoint = std::none_of(zon_certs.begin(), zon_certs.end(),
                                          [&](const std::string& c) { return sum_certs.count(c) > 0; });
  const std::string cell_cert = canonical_certificate(cell24());
  for (const auto& r : atlas.records) {
    RecordCheck c = check_pnz(r);
    const RecordCheck d = check_decompose(r, cell_cert);
    c.failures.insert(c.failures.end(), d.failures.begin(), d.failures.end());
    if (canonical_certificate(record_polytope(r)) != r.certificate)
      c.failures.push_back("stored certificate differs from the rebuilt polytope");
    s.checks.push_back(std::move(c));
  }
  return s;
}

namespace {

std::string graph_column(const CatalogRecord& r) { return label_name(r.graph_label); }

std::string roots_column(const CatalogRecord& r) {
  std::vector<Root> roots;
  for (const auto& g : r.generators) roots.push_back(Root::parse(g));
  return format_root_groups(mask_of(roots));
}

}  // namespace

std::string emit_table(const Atlas& atlas, int which, TableFormat format) {
  if (which != 1 && which != 2) throw std::invalid_argument("emit_table: table must be 1 or 2");
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (which == 1) {
    header = {"N_D", "m", "G"};
    for (const auto& r : atlas.records)
      if (r.kind == RecordKind::Zonotopal) rows.push_back({r.nd.value_or(""), std::to_string(r.m), graph_column(r)});
  } else {
    header = {"N_D", "m", "roots", "graph", "dimU", "N_D0"};
    for (const auto& r : atlas.records) {
      if (r.kind == RecordKind::Zonotopal) continue;
      const bool cell = r.kind == RecordKind::Cell24;
      rows.push_back({r.nd.value_or(""), std::to_string(r.m), roots_column(r), graph_column(r),
                      cell ? "" : std::to_string(r.dim_u), r.nd0.value_or("")});
    }
  }
  if (format == TableFormat::Json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = row[k];
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "\t" : "") + cells[k];
    out += "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

namespace {

json record_json(const CatalogRecord& r) {
  json j;
  j["id"] = r.id;
  j["kind"] = kind_name(r.kind);
  j["N_D"] = r.nd ? json(*r.nd) : json(nullptr);
  j["N_D0"] = r.nd0 ? json(*r.nd0) : json(nullptr);
  j["graph"] = label_name(r.graph_label);
  j["m"] = r.m;
  j["dimU"] = r.dim_u;
  j["tau"] = r.tau_count;
  j["pi"] = r.pi_count;
  j["f_vector"] = r.f_vector;
  j["belts"] = {{"b2", r.belts2}, {"b3", r.belts3}};
  j["certificate"] = r.certificate;
  j["generators"] = r.generators;
  j["class_size"] = r.class_size;
  return j;
}

CatalogRecord record_from_json(const json& j) {
  CatalogRecord r;
  r.id = j.at("id").get<std::string>();
  r.kind = parse_kind(j.at("kind").get<std::string>());
  if (!j.at("N_D").is_null()) r.nd = j.at("N_D").get<std::string>();
  if (!j.at("N_D0").is_null()) r.nd0 = j.at("N_D0").get<std::string>();
  r.graph_label = parse_label(j.at("graph").get<std::string>());
  r.m = j.at("m").get<int>();
  r.dim_u = j.at("dimU").get<int>();
  r.tau_count = j.at("tau").get<std::size_t>();
  r.pi_count = j.at("pi").get<std::size_t>();
  r.f_vector = j.at("f_vector").get<std::vector<std::size_t>>();
  r.belts2 = j.at("belts").at("b2").get<std::size_t>();
  r.belts3 = j.at("belts").at("b3").get<std::size_t>();
  r.certificate = j.at("certificate").get<std::string>();
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.class_size = j.at("class_size").get<std::size_t>();
  return r;
}

}  // namespace

std::string atlas_to_json(const Atlas& atlas) {
  json j;
  j["version"] = atlas.version;
  j["provenance"] = {{"tool", atlas.provenance.tool},
                     {"scan",
                      {{"subsets", atlas.provenance.subsets_scanned},
                       {"passing", atlas.provenance.passing_subsets},
                       {"classes", atlas.provenance.sum_classes}}}};
  j["records"] = json::array();
  for (const auto& r : atlas.records) j["records"].push_back(record_json(r));
  return j.dump(2) + "\n";
}

std::string record_to_json(const CatalogRecord& record) { return record_json(record).dump(2) + "\n"; }

std::string records_to_json(std::span<const CatalogRecord> records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

Atlas atlas_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
    Atlas a;
    a.version = j.at("version").get<std::string>();
    a.provenance.tool = j.at("provenance").at("tool").get<std::string>();
    const auto& scan = j.at("provenance").at("scan");
    a.provenance.subsets_scanned = scan.at("subsets").get<std::size_t>();
    a.provenance.passing_subsets = scan.at("passing").get<std::size_t>();
    a.provenance.sum_classes = scan.at("classes").get<std::size_t>();
    for (const auto& r : j.at("records")) a.records.push_back(record_from_json(r));
    return a;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("atlas_from_json: ") + e.what());
  }
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::span<const std::string_view> verify_props() {
  static constexpr std::string_view props[] = {"pnz", "pzs", "sum", "sdn", "unext", "pvz", "mcmullen", "all"};
  return props;
}

std::vector<RootMask> non_unimodular_samples() {
  // rank 4, and no rescaling of the roots is unimodular
  static constexpr std::string_view lists[] = {
      "12-,12+,14-,14+,23-,23+",         "13-,13+,14-,14+,23-,23+",
      "12-,13-,14-,14+,23-,23+",         "12+,13+,14-,14+,23-,23+",
      "12-,14-,14+,23-,23+,24-",         "13+,14-,14+,23-,23+,24+",
      "12-,12+,13-,13+,24-,24+",         "12-,12+,13-,13+,34-,34+",
      "12-,12+,14-,14+,34-,34+,13+",     "12-,12+,13-,13+,24-,24+,34-,34+",
      "12-,12+,13-,13+,14-,14+,23-,23+", "12-,12+,13-,13+,14-,14+,23-,23+,24-,24+,34-,34+",
  };
  std::vector<RootMask> out;
  for (auto l : lists) out.push_back(parse_root_list(l));
  return out;
}

namespace {

Check make_check(std::string name, bool pass, std::string detail = {}) {
  return Check{std::move(name), pass, std::move(detail)};
}

void append(std::vector<Check>& into, std::vector<Check> from) {
  for (auto& c : from) into.push_back(std::move(c));
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 4) {
  std::string out;
  for (std::size_t k = 0; k < items.size() && k < limit; ++k) out += (k ? "; " : "") + items[k];
  if (items.size() > limit) out += "; ... (" + std::to_string(items.size()) + " total)";
  return out;
}

std::vector<Check> verify_pnz(const Atlas& atlas) {
  std::vector<Check> out;
  for (const auto& r : atlas.records) {
    const RecordCheck c = check_pnz(r);
    out.push_back(make_check("pnz " + r.id, c.ok(), join(c.failures)));
  }
  return out;
}

std::vector<Check> verify_pzs(const Atlas& atlas) {
  std::vector<Check> out;
  const std::string cell_cert = canonical_certificate(cell24());
  for (const auto& r : atlas.records) {
    const RecordCheck c = check_decompose(r, cell_cert);
    out.push_back(make_check("decompose " + r.id, c.ok(), join(c.failures)));
  }
  std::set<std::string> zon;
  std::set<std::string> sums;
  for (const auto& r : atlas.records) (r.kind == RecordKind::Zonotopal ? zon : sums).insert(r.certificate);
  std::size_t shared = 0;
  for (const auto& c : zon) shared += sums.count(c);
  out.push_back(make_check("zonotopal and sum certificates disjoint", shared == 0, std::to_string(shared) + " shared"));

  std::size_t open = 0;
  for (const auto& z : edge_zones(cell24())) open += z.closed ? 0 : 1;
  out.push_back(make_check("24-cell has no closed zone", open == 12, std::to_string(open) + " open zones"));

  // contracting 24- in the A4-e sum and 24+ in the K33* sum
  const RootMask a4e = parse_root_list(kTable2[0].roots);
  const RootMask k33 = parse_root_list(kTable2[1].roots);
  const auto bit = [](const char* s) { return static_cast<RootMask>(1u << Root::parse(s).index()); };
  const std::string c1 = canonical_certificate(sum_cell24(static_cast<RootMask>(a4e & ~bit("24-"))));
  const std::string c2 = canonical_certificate(sum_cell24(static_cast<RootMask>(k33 & ~bit("24+"))));
  const CatalogRecord* r21 = atlas.find("21");
  out.push_back(make_check("contracted A4-e and K33* sums both give 21", r21 && c1 == c2 && c1 == r21->certificate));

  // segment lengths do not change the type
  if (const CatalogRecord* r33 = atlas.find("33")) {
    std::vector<Root> roots;
    for (const auto& g : r33->generators) roots.push_back(Root::parse(g));
    std::vector<Rational> lengths;
    for (std::size_t k = 0; k < roots.size(); ++k) lengths.push_back(std::vector<Rational>{Rational(1, 3), 1, Rational(7, 2)}[k % 3]);
    const std::string c = canonical_certificate(sum_cell24(mask_of(roots), lengths));
    out.push_back(make_check("33 with lengths 1/3, 1, 7/2", c == r33->certificate));
  }
  return out;
}

std::vector<Check> verify_sum(const Atlas& atlas) {
  std::vector<Check> out;
  for (const auto& r : atlas.records) {
    const Polytope p = record_polytope(r);
    std::vector<std::string> bad;
    for (const auto& root : positive_roots(4)) {
      const Vector z = root.vector();
      const bool belt = can_add_segment(p, z);
      const bool direct = venkov_parallelotope(add_segment(p, z, Rational(1)));
      if (belt != direct) bad.push_back(root.symbol() + ": belt test " + (belt ? "accepts" : "rejects"));
    }
    out.push_back(make_check("belt test " + r.id, bad.empty(), join(bad)));
  }
  return out;
}

std::vector<Check> verify_sdn() {
  std::vector<Check> out;
  for (int n : {3, 4}) {
    const SdnReport s = sdn_validate(n);
    const std::size_t expect = (std::size_t{1} << (n - 1)) + static_cast<std::size_t>(n);
    std::ostringstream os;
    os << s.directions_tested << " directions, belt test accepts " << s.accepted << ", Venkov accepts "
       << s.accepted_venkov << ", " << s.edge_directions << " edge directions";
    out.push_back(make_check("P_V(D" + std::to_string(n) + ") accepted directions",
                             s.ok() && s.accepted == expect && s.accepted_venkov == expect, os.str()));
    if (n == 4) {
      std::ostringstream bs;
      bs << s.belts3 << " 3-belts: " << s.belts_a << " (a), " << s.belts_b << " (b)";
      out.push_back(make_check("P_V(D4) 3-belt patterns", s.belts3 == 16 && s.belts_a + s.belts_b == 16, bs.str()));
    }
    if (!s.ok()) out.back().detail += "; " + join(s.mismatches);
  }
  return out;
}

std::vector<Check> verify_unext() {
  std::vector<Check> out;
  const UnextendibleReport u = unextendible_unimodular_subsystems();
  std::ostringstream os;
  std::map<std::string, std::size_t> sizes;
  for (const auto& c : u.classes) {
    os << c.name << " x" << c.size << " ";
    sizes[c.name] = c.size;
  }
  const bool classes_ok =
      u.classes.size() == 3 && sizes["quadruple"] == 3 && sizes["A4-e"] == 48 && sizes["K33*"] == 16;
  out.push_back(make_check("3 classes of unextendible unimodular subsystems", classes_ok, os.str()));
  out.push_back(make_check("orbits under the root system automorphisms", u.automorphism_orbit_count == 3,
                           std::to_string(u.automorphism_orbit_count) + " orbits (" + std::to_string(u.orbit_count) +
                               " under signed permutations)"));
  out.push_back(make_check("64 three-triple sets split 32/32 by triad parity",
                           u.three_triple_sets == 64 && u.even_triads == 32 && u.odd_triads == 32,
                           std::to_string(u.even_triads) + " even, " + std::to_string(u.odd_triads) + " odd"));
  out.push_back(make_check("triad parity gives the matroid class", u.parity_matches_class,
                           std::to_string(u.parity_mismatches) + " of " + std::to_string(u.three_triple_sets) +
                               " sets disagree"));
  return out;
}

std::vector<Check> verify_pvz() {
  std::vector<Check> out;
  for (const auto& row : kTable2) {
    const PvzReport r = pvz_validate(parse_root_list(row.roots));
    std::ostringstream os;
    os << r.facets << " facets, " << r.belts3 << " 3-belts, " << r.belts2 << " 2-belts, tau " << r.tau << ", pi "
       << r.pi;
    if (!r.ok()) os << "; " << join(r.mismatches);
    out.push_back(make_check("pvz row " + std::string(row.nd), r.ok(), os.str()));
  }
  const auto& uni = unimodular_root_subsets();
  int largest = 0;
  bool k5 = false;
  for (std::size_t mask = 1; mask < uni.size(); ++mask) {
    if (!uni[mask]) continue;
    largest = std::max(largest, std::popcount(mask));
    if (std::popcount(mask) == 10) k5 = true;
  }
  out.push_back(make_check("A4 is not a subsystem of D4", !k5 && largest == 9,
                           "largest unimodular root subset has " + std::to_string(largest) + " roots"));
  return out;
}

std::vector<Check> verify_mcmullen(const Atlas& atlas) {
  std::vector<Check> out;
  for (const auto& r : atlas.records) {
    if (r.kind != RecordKind::Zonotopal) continue;
    const auto gens = record_generators(r);
    const bool uni = is_unimodular(gens);
    const bool venkov = venkov_parallelotope(zonotope(gens));
    out.push_back(make_check("Z(" + label_name(r.graph_label) + ")", uni && venkov,
                             std::string("unimodular ") + (uni ? "yes" : "no") + ", Venkov " + (venkov ? "yes" : "no")));
  }
  const auto samples = non_unimodular_samples();
  for (RootMask u : samples) {
    const auto gens = root_vectors(u);
    const bool uni = is_unimodular(gens);
    const bool spans = spans_unimodular(gens);
    const bool venkov = venkov_parallelotope(zonotope(gens));
    out.push_back(make_check("Z(" + mask_symbols(u) + ")", !uni && !spans && !venkov && rank(gens) == 4,
                             std::string("unimodular ") + (uni ? "yes" : "no") + ", Venkov " + (venkov ? "yes" : "no")));
  }
  // With free segment lengths the criterion is about spanning a unimodular
  // system; quadruple + root is the smallest case where the two differ.
  std::size_t subsets = 0;
  std::size_t disagree = 0;
  std::size_t rescaled = 0;
  for (unsigned mask = 1; mask <= kAllRoots; ++mask) {
    const auto gens = root_vectors(static_cast<RootMask>(mask));
    if (rank(gens) != 4) continue;
    ++subsets;
    const bool spans = spans_unimodular(gens);
    if (spans != venkov_parallelotope(zonotope(gens))) ++disagree;
    if (spans && !is_unimodular(gens)) ++rescaled;
  }
  out.push_back(make_check("Venkov <=> spans a unimodular system on all rank-4 root subsets", disagree == 0,
                           std::to_string(subsets) + " subsets, " + std::to_string(disagree) + " disagree, " +
                               std::to_string(rescaled) + " need rescaling"));
  out.push_back(make_check("at least 10 non-unimodular samples", samples.size() >= 10, std::to_string(samples.size())));
  return out;
}

std::vector<Check> verify_scan(const SumScan& scan, const std::vector<CatalogRecord>& zonotopal,
                               const Atlas& atlas) {
  std::vector<Check> out;
  const auto& uni = unimodular_root_subsets();
  std::size_t bad = 0;
  for (std::size_t mask = 0; mask < scan.venkov.size(); ++mask) {
    bool quad_free = true;
    for (const auto& q : quadruples()) quad_free = quad_free && (mask & q.mask()) != q.mask();
    if (scan.venkov[mask] != (uni[mask] && quad_free)) ++bad;
  }
  out.push_back(make_check("Venkov <=> unimodular and quadruple-free on 4096 subsets", bad == 0,
                           std::to_string(scan.passing()) + " pass, " + std::to_string(bad) + " disagree"));
  std::set<std::string> classes;
  for (std::size_t mask = 0; mask < scan.venkov.size(); ++mask)
    if (scan.venkov[mask]) classes.insert(scan.certificates[mask]);
  out.push_back(make_check("35 sum certificates", classes.size() == 35, std::to_string(classes.size())));
  out.push_back(make_check("17 zonotopal records", zonotopal.size() == 17, std::to_string(zonotopal.size())));
  std::set<std::string> all;
  for (const auto& r : atlas.records) all.insert(r.certificate);
  out.push_back(make_check("52 distinct certificates", atlas.records.size() == 52 && all.size() == 52,
                           std::to_string(all.size())));
  return out;
}

}  // namespace

VerifyReport verify(std::string_view prop, const Atlas* atlas, unsigned jobs) {
  const auto props = verify_props();
  if (std::find(props.begin(), props.end(), prop) == props.end())
    throw std::invalid_argument("verify: unknown prop '" + std::string(prop) + "'");
  VerifyReport report;
  report.prop = std::string(prop);
  const bool all = prop == "all";

  Atlas built;
  const bool needs_atlas = all || prop == "pnz" || prop == "pzs" || prop == "sum" || prop == "mcmullen";
  if (needs_atlas && (atlas == nullptr || all)) {
    try {
      auto zon = enumerate_zonotopal();
      const SumScan scan = scan_sums(jobs);
      auto sums = enumerate_sums(scan, zon);
      built = assemble(zon, std::move(sums), scan);
      if (all) append(report.checks, verify_scan(scan, zon, built));
    } catch (const AtlasError& e) {
      report.checks.push_back(make_check("build atlas", false, e.what()));
      return report;
    }
    atlas = &built;
  }
  if (all || prop == "pnz") append(report.checks, verify_pnz(*atlas));
  if (all || prop == "pzs") append(report.checks, verify_pzs(*atlas));
  if (all || prop == "sum") append(report.checks, verify_sum(*atlas));
  if (all || prop == "sdn") append(report.checks, verify_sdn());
  if (all || prop == "unext") append(report.checks, verify_unext());
  if (all || prop == "pvz") append(report.checks, verify_pvz());
  if (all || prop == "mcmullen") append(report.checks, verify_mcmullen(*atlas));
  return report;
}

std::string report_json(const VerifyReport& report) {
  json j;
  j["prop"] = report.prop;
  j["pass"] = report.ok();
  j["checks"] = json::array();
  for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

}  // namespace par4
