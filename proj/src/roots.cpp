#include "par4/roots.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "par4/graphs.hpp"

namespace par4 {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pair_index(int i, int j) {
  for (std::size_t p = 0; p < kPairs.size(); ++p)
    if (kPairs[p].first == i && kPairs[p].second == j) return static_cast<int>(p);
  throw std::invalid_argument("root index: not a D4 root");
}

// quadruple id of a D4 root: 0 for 12|34, 1 for 13|24, 2 for 14|23
int quadruple_of(const Root& r) {
  const int p = pair_index(r.i, r.j);
  return std::min(p, 5 - p);
}

Root make_root(int a, int ca, int b, int cb) {
  // ca e_a + cb e_b up to overall sign
  if (a > b) {
    std::swap(a, b);
    std::swap(ca, cb);
  }
  return Root{a, b, ca * cb};
}

}  // namespace

Vector Root::vector(std::size_t n) const {
  if (j > static_cast<int>(n)) throw std::invalid_argument("Root::vector: dimension too small");
  Vector v(n);
  v[static_cast<std::size_t>(i - 1)] = 1;
  v[static_cast<std::size_t>(j - 1)] = sign;
  return v;
}

std::string Root::symbol() const {
  return std::to_string(i) + std::to_string(j) + (sign > 0 ? "+" : "-");
}

Root Root::parse(std::string_view s) {
  if (s.size() != 3 || s[0] < '1' || s[0] > '9' || s[1] < '1' || s[1] > '9' || (s[2] != '+' && s[2] != '-'))
    throw std::invalid_argument("Root::parse: bad symbol '" + std::string(s) + "'");
  Root r{s[0] - '0', s[1] - '0', s[2] == '+' ? 1 : -1};
  if (r.i >= r.j) throw std::invalid_argument("Root::parse: need i < j in '" + std::string(s) + "'");
  return r;
}

int Root::index() const { return pair_index(i, j) * 2 + (sign > 0 ? 1 : 0); }

std::vector<Root> positive_roots(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("positive_roots: n must be in 2..5");
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({i, j, -1});
      out.push_back({i, j, 1});
    }
  return out;
}

Root root_of(const Vector& v) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (!v[k].is_zero()) support.push_back(k);
  if (support.size() != 2 || abs(v[support[0]]) != abs(v[support[1]]))
    throw std::invalid_argument("root_of: " + v.str() + " is not parallel to a root");
  const int sign = v[support[0]].sign() * v[support[1]].sign();
  return Root{static_cast<int>(support[0]) + 1, static_cast<int>(support[1]) + 1, sign};
}

bool orthogonal(const Root& a, const Root& b) {
  int d = 0;
  if (a.i == b.i) d += 1;
  if (a.i == b.j) d += b.sign;
  if (a.j == b.i) d += a.sign;
  if (a.j == b.j) d += a.sign * b.sign;
  return d == 0;
}

std::vector<Root> roots_of(RootMask mask) {
  static const std::vector<Root> all = positive_roots(4);
  std::vector<Root> out;
  for (int k = 0; k < kRootCount; ++k)
    if (mask >> k & 1) out.push_back(all[static_cast<std::size_t>(k)]);
  return out;
}

RootMask mask_of(std::span<const Root> roots) {
  RootMask m = 0;
  for (const auto& r : roots) m = static_cast<RootMask>(m | (1u << r.index()));
  return m;
}

std::vector<Vector> root_vectors(RootMask mask) {
  std::vector<Vector> out;
  for (const auto& r : roots_of(mask)) out.push_back(r.vector());
  return out;
}

std::string mask_symbols(RootMask mask) {
  std::string out;
  for (const auto& r : roots_of(mask)) {
    if (!out.empty()) out += ',';
    out += r.symbol();
  }
  return out;
}

RootMask Quadruple::mask() const { return mask_of(roots); }

std::vector<Quadruple> quadruples() {
  std::vector<Quadruple> out;
  for (int q = 0; q < 3; ++q) {
    auto [i, j] = kPairs[static_cast<std::size_t>(q)];
    auto [k, l] = kPairs[static_cast<std::size_t>(5 - q)];
    out.push_back(Quadruple{{Root{i, j, -1}, Root{i, j, 1}, Root{k, l, -1}, Root{k, l, 1}}});
  }
  return out;
}

Root completing_root(const Root& a, const Root& b, const Root& c) {
  if (!orthogonal(a, b) || !orthogonal(a, c) || !orthogonal(b, c))
    throw std::invalid_argument("completing_root: roots are not mutually orthogonal");
  for (const auto& r : positive_roots(4)) {
    if (r == a || r == b || r == c) continue;
    if (orthogonal(r, a) && orthogonal(r, b) && orthogonal(r, c)) return r;
  }
  throw std::logic_error("completing_root: no completion");
}

std::vector<Triple> tau(std::span<const Root> roots) {
  std::vector<Root> u(roots.begin(), roots.end());
  std::sort(u.begin(), u.end());
  std::vector<Triple> out;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      if (!orthogonal(u[a], u[b])) continue;
      for (std::size_t c = b + 1; c < u.size(); ++c) {
        if (orthogonal(u[a], u[c]) && orthogonal(u[b], u[c]))
          out.push_back(Triple{{u[a], u[b], u[c]}, completing_root(u[a], u[b], u[c])});
      }
    }
  return out;
}

std::vector<Triple> tau(RootMask mask) { return tau(roots_of(mask)); }

std::vector<std::pair<Root, Root>> pi(std::span<const Root> roots) {
  std::vector<Root> u(roots.begin(), roots.end());
  std::sort(u.begin(), u.end());
  std::vector<std::pair<Root, Root>> out;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      if (!orthogonal(u[a], u[b])) continue;
      bool maximal = true;
      for (std::size_t c = 0; c < u.size() && maximal; ++c) {
        if (c != a && c != b && orthogonal(u[a], u[c]) && orthogonal(u[b], u[c])) maximal = false;
      }
      if (maximal) out.emplace_back(u[a], u[b]);
    }
  return out;
}

std::vector<std::pair<Root, Root>> pi(RootMask mask) { return pi(roots_of(mask)); }

Triad triad_of(std::span<const Root> roots) {
  const RootMask mask = mask_of(roots);
  if (roots.size() != 9 || std::popcount(static_cast<unsigned>(mask)) != 9)
    throw std::invalid_argument("triad_of: need nine distinct roots");
  Triad t;
  for (const auto& q : quadruples()) {
    const RootMask missing = q.mask() & ~mask & kAllRoots;
    if (std::popcount(static_cast<unsigned>(missing)) != 1)
      throw std::invalid_argument("triad_of: not a union of three disjoint triples");
    t.roots[static_cast<std::size_t>(quadruple_of(q.roots[0]))] = roots_of(missing).front();
  }
  for (const auto& r : t.roots) t.minus_count += r.sign < 0 ? 1 : 0;
  t.cls = t.minus_count % 2 == 0 ? TriadClass::A4MinusE : TriadClass::K33Dual;
  return t;
}

Triad triad_of(RootMask mask) { return triad_of(roots_of(mask)); }

Root SignedPermutation::apply(const Root& r) const {
  const auto i = static_cast<std::size_t>(r.i - 1);
  const auto j = static_cast<std::size_t>(r.j - 1);
  return make_root(perm[i] + 1, signs[i], perm[j] + 1, r.sign * signs[j]);
}

RootMask SignedPermutation::apply(RootMask mask) const {
  RootMask out = 0;
  for (const auto& r : roots_of(mask)) out = static_cast<RootMask>(out | (1u << apply(r).index()));
  return out;
}

const std::vector<SignedPermutation>& signed_permutations() {
  static const std::vector<SignedPermutation> group = [] {
    std::vector<SignedPermutation> g;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      for (int s = 0; s < 16; ++s) {
        SignedPermutation sp;
        sp.perm = perm;
        for (int k = 0; k < 4; ++k) sp.signs[static_cast<std::size_t>(k)] = (s >> k & 1) ? -1 : 1;
        g.push_back(sp);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g;
  }();
  return group;
}

RootMask orbit_representative(RootMask mask) {
  RootMask best = mask;
  for (const auto& g : signed_permutations()) best = std::min(best, g.apply(mask));
  return best;
}

const std::vector<RootPermutation>& root_automorphisms() {
  static const std::vector<RootPermutation> group = [] {
    const auto positive = positive_roots(4);
    std::vector<Vector> all;
    for (const auto& r : positive) {
      all.push_back(r.vector());
      all.push_back(-r.vector());
    }
    // simple roots 12-, 23-, 34-, 34+ and their Gram matrix
    const std::array<Vector, 4> base{Root{1, 2, -1}.vector(), Root{2, 3, -1}.vector(), Root{3, 4, -1}.vector(),
                                     Root{3, 4, 1}.vector()};
    Matrix base_cols(4, 4);
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < 4; ++i) base_cols(i, k) = base[k][i];
    std::vector<RootPermutation> g;
    std::array<std::size_t, 4> pick{};
    auto search = [&](auto&& self, std::size_t depth) -> void {
      if (depth == 4) {
        // M base_k = all[pick[k]]: solve row by row
        Matrix image(4, 4);
        for (std::size_t k = 0; k < 4; ++k)
          for (std::size_t i = 0; i < 4; ++i) image(i, k) = all[pick[k]][i];
        const Matrix bt = base_cols.transpose();
        Matrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
          auto row = solve_linear(bt, image.transpose().column(i));
          for (std::size_t c = 0; c < 4; ++c) m(i, c) = (*row)[c];
        }
        RootPermutation p{};
        for (std::size_t k = 0; k < positive.size(); ++k) {
          Vector v = m * positive[k].vector();
          p[k] = static_cast<std::uint8_t>(root_of(v).index());
        }
        g.push_back(p);
        return;
      }
      for (std::size_t c = 0; c < all.size(); ++c) {
        bool ok = true;
        for (std::size_t prev = 0; prev < depth && ok; ++prev) ok = dot(all[c], all[pick[prev]]) == dot(base[depth], base[prev]);
        if (!ok) continue;
        pick[depth] = c;
        self(self, depth + 1);
      }
    };
    search(search, 0);
    return g;
  }();
  return group;
}

RootMask apply(const RootPermutation& g, RootMask mask) {
  RootMask out = 0;
  for (int k = 0; k < kRootCount; ++k)
    if (mask >> k & 1) out = static_cast<RootMask>(out | (1u << g[static_cast<std::size_t>(k)]));
  return out;
}

RootMask automorphism_representative(RootMask mask) {
  RootMask best = mask;
  for (const auto& g : root_automorphisms()) best = std::min(best, apply(g, mask));
  return best;
}

const std::vector<bool>& unimodular_root_subsets() {
  static const std::vector<bool> table = [] {
    std::vector<bool> t(std::size_t{1} << kRootCount, false);
    for (unsigned mask = 0; mask < t.size(); ++mask) {
      // unimodularity is inherited by subsets, so one bad subset decides
      bool ok = true;
      for (int k = 0; k < kRootCount && ok; ++k)
        if (mask >> k & 1) ok = t[mask & ~(1u << k)];
      if (ok) ok = is_unimodular(root_vectors(static_cast<RootMask>(mask)));
      t[mask] = ok;
    }
    return t;
  }();
  return table;
}

UnextendibleReport unextendible_unimodular_subsystems() {
  const auto& uni = unimodular_root_subsets();
  UnextendibleReport report;
  for (unsigned mask = 0; mask <= kAllRoots; ++mask) {
    if (!uni[mask]) continue;
    bool extendible = false;
    for (int k = 0; k < kRootCount && !extendible; ++k)
      if (!(mask >> k & 1) && uni[mask | (1u << k)]) extendible = true;
    if (!extendible) report.systems.push_back(static_cast<RootMask>(mask));
  }

  std::map<std::string, std::size_t> class_of_cert;
  std::set<RootMask> orbits;
  std::set<RootMask> aut_orbits;
  for (auto mask : report.systems) {
    orbits.insert(orbit_representative(mask));
    aut_orbits.insert(automorphism_representative(mask));
    auto vectors = root_vectors(mask);
    auto cert = matroid_certificate(vectors);
    auto it = class_of_cert.find(cert);
    if (it == class_of_cert.end()) {
      UnextendibleClass c;
      if (vectors.size() == 4) {
        c.name = "quadruple";
      } else if (auto label = matroid_label(vectors)) {
        c.name = *label == ConwayLabel::K5_minus_1 ? "A4-e" : label_name(*label);
      } else {
        c.name = "unlabeled";
      }
      c.representative = mask;
      it = class_of_cert.emplace(cert, report.classes.size()).first;
      report.classes.push_back(std::move(c));
    }
    auto& c = report.classes[it->second];
    ++c.size;
    c.members.push_back(mask);
  }
  report.orbit_count = orbits.size();
  report.automorphism_orbit_count = aut_orbits.size();

  // one triple from each quadruple: 4 choices each
  const auto quads = quadruples();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const std::array<int, 3> drop{a, b, c};
        RootMask mask = 0;
        for (std::size_t q = 0; q < 3; ++q)
          mask = static_cast<RootMask>(mask | (quads[q].mask() & ~(1u << quads[q].roots[static_cast<std::size_t>(drop[q])].index())));
        ++report.three_triple_sets;
        const Triad t = triad_of(mask);
        (t.cls == TriadClass::A4MinusE ? report.even_triads : report.odd_triads) += 1;
        auto label = matroid_label(root_vectors(mask));
        const bool matches = label && ((t.cls == TriadClass::A4MinusE && *label == ConwayLabel::K5_minus_1) ||
                                       (t.cls == TriadClass::K33Dual && *label == ConwayLabel::K33_dual));
        if (!matches) ++report.parity_mismatches;
      }
  report.parity_matches_class = report.parity_mismatches == 0;
  return report;
}

Matrix frame_map() {
  Matrix a(4, 4);
  // columns (1,1,0,0), (1,-1,0,0), (0,0,1,1), (0,0,1,-1)
  a(0, 0) = 1;
  a(1, 0) = 1;
  a(0, 1) = 1;
  a(1, 1) = -1;
  a(2, 2) = 1;
  a(3, 2) = 1;
  a(2, 3) = 1;
  a(3, 3) = -1;
  return a;
}

}  // namespace par4
