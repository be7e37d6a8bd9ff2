#include <doctest.h>

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <set>
#include <tuple>

#include "par4/atlas.hpp"
#include "par4/constructions.hpp"

using namespace par4;

namespace {

const Atlas& atlas() {
  static const Atlas a = build_atlas(4);
  return a;
}

const CatalogRecord& rec(std::string_view id) {
  const CatalogRecord* r = atlas().find(id);
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("root lists parse and print in grouped form") {
  for (const auto& row : table2_reference()) {
    CAPTURE(row.nd);
    const RootMask u = parse_root_list(row.roots);
    CHECK(format_root_groups(u) == row.roots);
  }
  CHECK(parse_root_list("(12-,12+),14+") == parse_root_list("14+,12+,12-"));
  CHECK(format_root_groups(parse_root_list("34-,12-,12+")) == "(12-,12+,34-)");
  CHECK_THROWS_AS(parse_root_list("15+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_list("12-,12-"), std::invalid_argument);
}

TEST_CASE("table rows are told apart by label, m, dim U, tau and pi") {
  std::set<std::tuple<ConwayLabel, int, int, std::size_t, std::size_t>> seen;
  for (const auto& row : table2_reference()) {
    const RootMask u = parse_root_list(row.roots);
    CHECK(std::popcount(static_cast<unsigned>(u)) == row.m);
    CHECK(static_cast<int>(rank(root_vectors(u))) == row.dim_u);
    seen.emplace(row.label, row.m, row.dim_u, tau(u).size(), pi(u).size());
  }
  CHECK(seen.size() == table2_reference().size());
  CHECK(table1_reference().size() == 17);
}

TEST_CASE("N_D ordering and kind names") {
  CHECK(nd_order("1") < nd_order("2"));
  CHECK(nd_order("47") < nd_order("St"));
  CHECK(nd_order("St") < nd_order("48"));
  for (RecordKind k : {RecordKind::Zonotopal, RecordKind::Cell24Sum, RecordKind::Cell24})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("cube"), std::invalid_argument);
}

TEST_CASE("atlas records match the tables") {
  const Atlas& a = atlas();
  CHECK(a.records.size() == 52);
  CHECK(a.provenance.subsets_scanned == 4096);
  CHECK(a.provenance.sum_classes == 35);

  const auto& k5 = rec("1");
  CHECK(k5.kind == RecordKind::Zonotopal);
  CHECK(k5.graph_label == ConwayLabel::K5);
  CHECK(k5.m == 10);
  CHECK(k5.f_vector == std::vector<std::size_t>{120, 240, 150, 30});

  CHECK(rec("19").graph_label == ConwayLabel::K33_dual);
  CHECK(rec("19").m == 9);
  CHECK(rec("18").graph_label == ConwayLabel::Forest4);
  CHECK(rec("18").f_vector == std::vector<std::size_t>{16, 32, 24, 8});
  CHECK(rec("16").graph_label == ConwayLabel::C3_plus_C3);
  CHECK(rec("16").m == 6);

  const auto& st = rec("St");
  CHECK(st.kind == RecordKind::Cell24Sum);
  CHECK(st.m == 3);
  CHECK(st.dim_u == 2);
  CHECK(st.nd0 == "alpha");

  CHECK(rec("33").graph_label == ConwayLabel::K4);
  CHECK(rec("33").nd0 == "a1");
  for (const char* id : {"40", "41", "43"}) {
    CHECK(rec(id).graph_label == ConwayLabel::Forest4);
    CHECK(rec(id).nd0 == "18");
  }
  CHECK(rec("40").certificate != rec("41").certificate);
  CHECK(rec("41").certificate != rec("43").certificate);
  CHECK(rec("40").certificate != rec("43").certificate);
  CHECK(rec("44").graph_label == ConwayLabel::C4);
  CHECK(rec("44").nd0 == "a4");
  CHECK(rec("47").nd0 == "a''5");

  std::size_t cells = 0;
  for (const auto& r : a.records)
    if (r.kind == RecordKind::Cell24) {
      ++cells;
      CHECK(r.certificate == canonical_certificate(cell24()));
      CHECK(r.generators.empty());
    }
  CHECK(cells == 1);
  CHECK(a.find("52") == nullptr);
}

TEST_CASE("sum records carry tau and pi of their root set") {
  for (const auto& r : atlas().records) {
    if (r.kind != RecordKind::Cell24Sum) continue;
    CAPTURE(r.id);
    std::vector<Root> roots;
    for (const auto& g : r.generators) roots.push_back(Root::parse(g));
    CHECK(r.tau_count == tau(roots).size());
    CHECK(r.pi_count == pi(roots).size());
    CHECK(r.f_vector[3] == 24 + 2 * r.tau_count);
    CHECK(r.belts3 == 16 + 3 * r.tau_count);
    CHECK(r.belts2 == r.pi_count);
  }
}

TEST_CASE("classification of the stored atlas") {
  const ClassifySummary s = classify_all(atlas());
  CHECK(s.ok());
  CHECK(s.total == 52);
  CHECK(s.zonotopal == 17);
  CHECK(s.sums == 35);
  CHECK(s.distinct_certificates == 52);
  CHECK(s.zonotopal_sum_disjoint);
}

TEST_CASE("JSON round trip and malformed input") {
  const std::string text = atlas_to_json(atlas());
  const Atlas back = atlas_from_json(text);
  CHECK(back == atlas());
  CHECK(atlas_to_json(back) == text);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["records"].size() == 52);
  CHECK(nlohmann::json::parse(record_to_json(atlas().records.front()))["id"] == atlas().records.front().id);
  CHECK_THROWS_AS(atlas_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(atlas_from_json(R"({"version":"1"})"), std::invalid_argument);
  // a tampered certificate is caught by classify
  Atlas bad = atlas();
  bad.records[3].certificate = bad.records[4].certificate;
  CHECK_FALSE(classify_all(bad).ok());
}

TEST_CASE("table output") {
  const std::string t1 = emit_table(atlas(), 1, TableFormat::Tsv);
  CHECK(std::count(t1.begin(), t1.end(), '\n') == 18);
  const std::string t2 = emit_table(atlas(), 2, TableFormat::Tsv);
  CHECK(std::count(t2.begin(), t2.end(), '\n') == 36);
  CHECK(t2.find("St\t3\t34-,13+,14+\tC3\t2\talpha\n") != std::string::npos);
  const auto j = nlohmann::json::parse(emit_table(atlas(), 2, TableFormat::Json));
  CHECK(j.size() == 35);
  CHECK_THROWS_AS(emit_table(atlas(), 3, TableFormat::Tsv), std::invalid_argument);
}

TEST_CASE("verify rejects unknown props") {
  CHECK_THROWS_AS(verify("nope"), std::invalid_argument);
  const VerifyReport r = verify("sdn");
  CHECK(r.ok());
  CHECK(nlohmann::json::parse(report_json(r))["prop"] == "sdn");
}
