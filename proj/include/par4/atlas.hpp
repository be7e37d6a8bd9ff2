#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "par4/graphs.hpp"
#include "par4/polytope.hpp"
#include "par4/roots.hpp"

namespace par4 {

std::string_view tool_version();  // "par4 <major>.<minor>.<patch>"

// Zonotopal: Z(G). Cell24: the 24-cell alone. Cell24Sum: 24-cell + Z(U), U non-empty.
enum class RecordKind { Zonotopal, Cell24Sum, Cell24 };

std::string kind_name(RecordKind kind);  // "zonotopal", "cell24-sum", "cell24"
RecordKind parse_kind(std::string_view name);

struct CatalogRecord {
  std::string id;  // the N_D label, "St" for Shtogrin's type
  RecordKind kind = RecordKind::Zonotopal;
  std::optional<std::string> nd;
  std::optional<std::string> nd0;  // Table-1 number or a1..a''5, alpha, beta1, beta2
  ConwayLabel graph_label = ConwayLabel::Cell24;
  int m = 0;
  int dim_u = 0;
  std::size_t tau_count = 0;  // sum records only
  std::size_t pi_count = 0;   // sum records only
  std::vector<std::size_t> f_vector;
  std::size_t belts2 = 0;
  std::size_t belts3 = 0;
  std::string certificate;
  // Root symbols ("13+") for sums, vectors ("(1,-1,0,0)") for zonotopes.
  std::vector<std::string> generators;
  std::size_t class_size = 0;  // sums: root subsets in the certificate class

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

struct Provenance {
  std::string tool;
  std::size_t subsets_scanned = 0;
  std::size_t passing_subsets = 0;
  std::size_t sum_classes = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Atlas {
  std::string version = "1";
  Provenance provenance;
  std::vector<CatalogRecord> records;  // sorted by (kind, N_D)

  [[nodiscard]] const CatalogRecord* find(std::string_view id) const;
  friend bool operator==(const Atlas&, const Atlas&) = default;
};

// Raised when an enumeration does not match the reference tables. what()
// carries the full diff report.
class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table1Row {
  std::string_view nd;
  int m;
  ConwayLabel label;
};

struct Table2Row {
  std::string_view nd;
  int m;
  std::string_view roots;  // grouped by quadruple: "(12-,12+,34-),13-,14+"
  ConwayLabel label;
  int dim_u;
  std::string_view nd0;
};

// Reference data of the published tables. Table 2 omits the A4 row, which
// is not a root subsystem of D4.
std::span<const Table1Row> table1_reference();
std::span<const Table2Row> table2_reference();

// "(12-,12+),14+" -> mask; parentheses are ignored.
RootMask parse_root_list(std::string_view text);

// Inverse of parse_root_list: roots grouped by quadruple (12|34, 13|24,
// 14|23), groups of two or more in parentheses.
std::string format_root_groups(RootMask mask);

// Numeric sort key of an N_D label; "St" sits between 47 and 48.
int nd_order(std::string_view nd);

struct SumScan {
  std::vector<bool> venkov;                // indexed by mask
  std::vector<std::string> certificates;   // empty for failing masks
  [[nodiscard]] std::size_t passing() const;
};

// Builds 24-cell + Z(U) for all 4096 masks with `jobs` worker threads.
// The result does not depend on jobs.
SumScan scan_sums(unsigned jobs = 1);

// Throws AtlasError on a Venkov failure or a count other than 17.
std::vector<CatalogRecord> enumerate_zonotopal();

// Classes of the scan by certificate, matched to Table 2 by the signature
// (graph label, m, dim U, |tau|, |pi|). Throws AtlasError unless there are
// exactly 35 classes and every signature matches one row and the row's own
// roots give the same certificate. `zonotopal` resolves N_D0 for dim U = 4.
std::vector<CatalogRecord> enumerate_sums(const SumScan& scan, std::span<const CatalogRecord> zonotopal);

Atlas build_atlas(unsigned jobs = 1);

// Polytope and generator directions of a record.
Polytope record_polytope(const CatalogRecord& record);
std::vector<Vector> record_generators(const CatalogRecord& record);

// N_D0 read off the shape of Z(U) (zonotope certificate for dim U = 4).
std::optional<std::string> derive_nd0(RootMask u, std::span<const CatalogRecord> zonotopal);

struct PnzResult {
  bool closed_zone = false;
  bool width_positive = false;
  bool round_trip = false;
  [[nodiscard]] bool consistent() const { return closed_zone == width_positive && width_positive == round_trip; }
};

// Closed zone along z, positive width along z, and whether eroding by half
// the shortest edge along z (or by z itself when no edge is parallel) and
// adding the segment back returns p.
PnzResult pnz_check(const Polytope& p, const Vector& z);

struct RecordCheck {
  std::string id;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

// Pnz equivalences along the 12 roots and the record's own generators.
RecordCheck check_pnz(const CatalogRecord& record);
// decompose gives a point (zonotopal) or the 24-cell (sums) with directions
// equal to the generator multiset, also when splitting zones in reverse order.
RecordCheck check_decompose(const CatalogRecord& record, const std::string& cell24_certificate);

struct ClassifySummary {
  std::size_t total = 0;
  std::size_t zonotopal = 0;
  std::size_t sums = 0;  // including the 24-cell
  std::size_t distinct_certificates = 0;
  bool zonotopal_sum_disjoint = false;
  std::vector<std::string> collisions;
  std::vector<RecordCheck> checks;
  [[nodiscard]] bool ok() const;
};

ClassifySummary classify_all(const Atlas& atlas);

enum class TableFormat { Tsv, Json };
std::string emit_table(const Atlas& atlas, int which, TableFormat format);

std::string atlas_to_json(const Atlas& atlas);
std::string record_to_json(const CatalogRecord& record);
std::string records_to_json(std::span<const CatalogRecord> records);  // JSON array
Atlas atlas_from_json(std::string_view text);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string prop;
  std::vector<Check> checks;
  [[nodiscard]] bool ok() const;
};

std::span<const std::string_view> verify_props();  // pnz pzs sum sdn unext pvz mcmullen all

// `atlas` may be null; the props that need one build it with `jobs` threads.
// Throws std::invalid_argument for an unknown prop.
VerifyReport verify(std::string_view prop, const Atlas* atlas = nullptr, unsigned jobs = 1);
std::string report_json(const VerifyReport& report);

// Root subsets of rank 4 that are not unimodular, used for the McMullen check.
std::vector<RootMask> non_unimodular_samples();

}  // namespace par4
