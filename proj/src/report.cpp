#include "jds/report.hpp"

#include <algorithm>
#include <iomanip>

namespace jds {

namespace {

std::string power(const std::string &value, long long count) {
  const bool wrap = value.find_first_of("/+*") != std::string::npos;
  std::string base = wrap ? "(" + value + ")" : value;
  return count == 1 ? value : base + "^" + std::to_string(count);
}

std::string spectrum_text(const Spectrum &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i > 0) out += ",";
    out += s.values[i].to_string();
  }
  return out + "}";
}

std::string k_text(const std::vector<long long> &k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(k[i]);
  }
  return out + ")";
}

std::string sub_orbit_text(const SubFamily &f) {
  std::vector<std::string> parts;
  const QuadNum lower = f.a - QuadNum(1);
  if (f.k > 0) parts.push_back(power(f.a.to_string(), f.k));
  if (f.n - f.k - 1 > 0) parts.push_back(power(lower.to_string(), f.n - f.k - 1));
  parts.push_back(f.b.to_string());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  out += ")";
  if (f.orbit_size() > 1) out += "^P'";
  return out;
}

}  // namespace

std::string orbit_notation(const CandidateFamily &fam) {
  std::string out = "(";
  bool first = true;
  for (int j = 1; j <= fam.l(); ++j) {
    const long long kj = fam.k()[static_cast<std::size_t>(j - 1)];
    if (kj == 0) continue;
    out += (first ? "" : ", ") + power(fam.level(j).to_string(), kj);
    first = false;
  }
  out += ")";
  if (fam.l() > 1) out += "^P";
  return out;
}

Json big_to_json(const BigInt &v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const CandidateFamily &fam) {
  Json levels = Json::array();
  for (const auto &v : fam.levels()) levels.push_back(v.to_string());
  return Json{{"n", fam.n()},     {"m", fam.m()},
              {"k0", fam.k0()},   {"k", fam.k()},
              {"size", big_to_json(family_size(fam))}, {"levels", levels}};
}

Json to_json(const Spectrum &s) {
  Json out = Json::array();
  for (const auto &v : s.values) out.push_back(v.to_string());
  return out;
}

Json to_json(const RationalPoint &p) {
  Json out = Json::array();
  for (const auto &v : p) out.push_back(v.to_string());
  return out;
}

Json to_json(const QuadPoint &p) {
  Json out = Json::array();
  for (const auto &v : p) out.push_back(v.to_string());
  return out;
}

Json to_json(const ClassificationReport &r) {
  Json fams = Json::array();
  for (const auto &f : r.families) {
    Json j = to_json(f.family);
    j["orbit"] = orbit_notation(f.family);
    j["johnson_spectrum"] = to_json(f.johnson_spectrum);
    j["intra_spectrum"] = to_json(f.intra_spectrum);
    fams.push_back(std::move(j));
  }
  Json pairs = Json::array();
  for (const auto &p : r.pairs)
    pairs.push_back({{"a", p.a}, {"b", p.b}, {"spectrum", to_json(p.spectrum)}, {"compatible", p.compatible}});
  Json out{{"kind", "classification"},
           {"n", r.params.n},
           {"m", r.params.m},
           {"johnson_size", big_to_json(r.johnson_size)},
           {"addable_families", fams},
           {"family_pairs", pairs},
           {"universe_size", big_to_json(r.universe_size)},
           {"resolution", to_string(r.resolution)},
           {"added", big_to_json(r.added)},
           {"total", big_to_json(r.total())},
           {"optimal", r.optimal},
           {"expansions", r.expansions},
           {"status", r.status()}};
  Json witness = Json::array();
  for (const auto &p : r.witness) witness.push_back(to_json(p));
  out["witness"] = witness;
  if (r.maximal_clique_sizes) {
    out["maximal_clique_sizes"] = Json(std::vector<std::size_t>(r.maximal_clique_sizes->begin(),
                                                                r.maximal_clique_sizes->end()));
  }
  if (r.known) {
    Json pts = Json::array();
    for (const auto &p : r.known->points) pts.push_back(to_json(p));
    out["known_extension"] = {{"description", r.known->description},
                              {"size", r.known->points.size()},
                              {"verified", r.known->verified},
                              {"points", pts}};
  }
  out["notes"] = r.notes;
  return out;
}

Json to_json(const SubFamily &f) {
  Json pts = Json::array();
  for (const auto &p : f.points()) pts.push_back(to_json(p));
  return Json{{"name", f.name()}, {"n", f.n},         {"k", f.k},
              {"a", f.a.to_string()}, {"b", f.b.to_string()}, {"orbit_size", f.orbit_size()},
              {"self_mirror", f.self_mirror}, {"orbit", sub_orbit_text(f)}, {"points", pts}};
}

// ---------------------------------------------------------------- tables

std::vector<ExpectedTableRow> expected_table(int m) {
  switch (m) {
    case 2: return {{9, 9, 45, false}};
    case 3: return {{8, 8, 64, false}, {9, 37, 121, false}};
    case 4: return {{8, 57, 127, false}, {9, 132, 258, true}, {18, 153, 3213, false}, {25, 25, 12675, false}};
    case 5:
      return {{16, 560, 4928, false}, {18, 2466, 11034, false}, {25, 601, 53731, false},
              {49, 1176, 1908060, false}};
    default: return {};
  }
}

std::vector<TableRow> reproduce_table(int m, const ClassifyOptions &options) {
  std::vector<TableRow> rows;
  const auto expected = expected_table(m);
  const long long last = corollary_max_n(m);
  for (long long n = 2LL * m; n <= last; ++n) {
    const Parameters params(static_cast<int>(n), m);
    if (addable_families(params).empty()) continue;
    TableRow row{classify(params, options), std::nullopt, "PASS", ""};
    const auto it = std::find_if(expected.begin(), expected.end(),
                                 [&](const ExpectedTableRow &e) { return e.n == n; });
    if (it != expected.end()) row.expected = *it;
    if (!row.expected) {
      if (!expected.empty()) {
        row.check = "FLAG";
        row.note = "row not in the published list";
      } else {
        row.check = "-";
      }
    } else if (row.report.added != BigInt(std::to_string(row.expected->added)) || row.report.total() != BigInt(std::to_string(row.expected->total))) {
      row.check = "FLAG";
      row.note = "published " + std::to_string(row.expected->added) + " [" +
                 std::to_string(row.expected->total) + "]";
    }
    if (row.expected && row.expected->conjectural)
      row.note += std::string(row.note.empty() ? "" : "; ") + "published maximum is a conjecture; " +
                  (row.report.optimal ? "proven by exhaustive search" : "unproven (search budget exhausted)");
    rows.push_back(std::move(row));
  }
  for (const auto &e : expected)
    if (std::none_of(rows.begin(), rows.end(), [&](const TableRow &r) { return r.report.params.n == e.n; })) {
      TableRow row{ClassificationReport{}, e, "FLAG", "published row has no addable family here"};
      row.report.params = Parameters(e.n, m);
      row.report.johnson_size = binomial(e.n, m);
      rows.push_back(std::move(row));
    }
  return rows;
}

Json to_json(const std::vector<TableRow> &rows, int m) {
  Json out = Json::array();
  for (const auto &r : rows) {
    Json fams = Json::array();
    for (const auto &f : r.report.families) fams.push_back(orbit_notation(f.family));
    Json row{{"n", r.report.params.n},
             {"families", fams},
             {"added", big_to_json(r.report.added)},
             {"total", big_to_json(r.report.total())},
             {"status", r.report.status()},
             {"optimal", r.report.optimal},
             {"check", r.check},
             {"note", r.note}};
    if (r.expected) row["expected"] = {{"added", r.expected->added}, {"total", r.expected->total},
                                       {"conjectural", r.expected->conjectural}};
    out.push_back(std::move(row));
  }
  return Json{{"kind", "table"}, {"m", m}, {"rows", out}};
}

void write_table_text(std::ostream &os, const std::vector<TableRow> &rows, int m) {
  os << "m = " << m << "\n";
  os << std::left << std::setw(5) << "n" << std::setw(9) << "added" << std::setw(10) << "total"
     << std::setw(18) << "published" << std::setw(7) << "check" << "status\n";
  for (const auto &r : rows) {
    std::string published = "-";
    if (r.expected)
      published = std::to_string(r.expected->added) + " [" + std::to_string(r.expected->total) + "]" +
                  (r.expected->conjectural ? "*" : "");
    os << std::left << std::setw(5) << r.report.params.n << std::setw(9) << r.report.added.get_str()
       << std::setw(10) << r.report.total().get_str() << std::setw(18) << published << std::setw(7)
       << r.check << r.report.status() << "\n";
    for (const auto &f : r.report.families)
      os << "       " << orbit_notation(f.family) << "  (" << f.size.get_str() << ")\n";
    if (!r.note.empty()) os << "       note: " << r.note << "\n";
  }
}

void write_table_csv(std::ostream &os, const std::vector<TableRow> &rows) {
  os << "n,m,family,added,total,status\n";
  for (const auto &r : rows) {
    std::string fams;
    for (const auto &f : r.report.families) fams += (fams.empty() ? "" : " | ") + orbit_notation(f.family);
    os << r.report.params.n << "," << r.report.params.m << ",\"" << fams << "\"," << r.report.added.get_str()
       << "," << r.report.total().get_str() << "," << r.report.status() << "\n";
  }
}

void write_classification_text(std::ostream &os, const ClassificationReport &r) {
  os << "J(" << r.params.n << "," << r.params.m << "): " << r.johnson_size.get_str() << " points\n";
  os << "addable families: " << r.families.size() << "\n";
  for (const auto &f : r.families) {
    os << "  k0=" << f.family.k0() << " k=" << k_text(f.family.k()) << "  " << orbit_notation(f.family)
       << "  size " << f.size.get_str() << "  to J: " << spectrum_text(f.johnson_spectrum)
       << "  within: " << spectrum_text(f.intra_spectrum) << "\n";
  }
  for (const auto &p : r.pairs)
    if (!p.compatible)
      os << "  incompatible: family " << p.a << " vs family " << p.b << " " << spectrum_text(p.spectrum) << "\n";
  os << "resolution: " << to_string(r.resolution) << "\n";
  os << "universe: " << r.universe_size.get_str() << "\n";
  os << "added: " << r.added.get_str() << "\n";
  os << "total: " << r.total().get_str() << "\n";
  os << "optimal: " << (r.optimal ? "true" : "false") << "\n";
  if (r.maximal_clique_sizes) {
    os << "maximal clique sizes:";
    for (auto s : *r.maximal_clique_sizes) os << " " << s;
    os << "\n";
  }
  os << "status: " << r.status() << "\n";
  for (const auto &n : r.notes) os << "note: " << n << "\n";
}

void write_classification_csv(std::ostream &os, const ClassificationReport &r) {
  os << "n,m,family,added,total,status\n";
  for (const auto &f : r.families)
    os << r.params.n << "," << r.params.m << ",\"" << orbit_notation(f.family) << "\"," << f.size.get_str()
       << ",," << "family\n";
  os << r.params.n << "," << r.params.m << ",\"*\"," << r.added.get_str() << "," << r.total().get_str() << ","
     << r.status() << "\n";
}

// ---------------------------------------------------------------- sub-Johnson

std::vector<ExpectedCombination> expected_combinations() {
  return {
      {5, {"X1+", "X1-"}, 2, 12},
      {6, {"X1+", "X4-"}, 6, 16},
      {6, {"X1-", "X4+"}, 6, 16},
      {7, {"X4+", "X4-"}, 12, 27},
      {8, {"X2+", "X4+"}, 8, 29},
      {8, {"X2-", "X4-"}, 8, 29},
      {9, {"X1+", "X1-"}, 2, 28},
      {9, {"X1+", "X3-", "X4-"}, 17, 45},
      {9, {"X1-", "X3+", "X4+"}, 17, 45},
      {17, {"X1+", "X2-"}, 2, 122},
      {17, {"X1-", "X2+"}, 2, 122},
  };
}

std::vector<CombinationCheck> check_combinations(const CombinationSearch &cs) {
  std::vector<CombinationCheck> out;
  for (const auto &e : expected_combinations()) {
    if (e.n != cs.n) continue;
    CombinationCheck c;
    c.expected = e;
    std::vector<std::size_t> members;
    bool all_present = true;
    for (const auto &name : e.members) {
      const auto it = std::find_if(cs.families.begin(), cs.families.end(),
                                   [&](const SubFamily &f) { return f.name() == name; });
      if (it == cs.families.end()) {
        all_present = false;
        break;
      }
      members.push_back(static_cast<std::size_t>(it - cs.families.begin()));
    }
    std::sort(members.begin(), members.end());
    if (all_present) {
      const auto it = std::find_if(cs.valid.begin(), cs.valid.end(),
                                   [&](const Combination &v) { return v.members == members; });
      if (it != cs.valid.end()) {
        c.found = true;
        c.maximal = it->maximal;
        c.added = it->added;
        c.total = it->total;
        c.verified = verify_point_set(union_points(cs.n, cs.families, members), 2).ok;
      }
    }
    if (!c.found) {
      c.check = "FLAG";
      c.note = "combination is not valid here";
    } else if (c.added == e.added && c.total == e.bracket) {
      c.check = "PASS";
    } else {
      c.check = "FLAG";
      c.note = "published " + std::to_string(e.added) + " vectors [" + std::to_string(e.bracket) +
               "], recomputed " + std::to_string(c.added) + " [" + std::to_string(c.total) + "]";
    }
    if (c.found && !c.maximal) c.note += std::string(c.note.empty() ? "" : "; ") + "not maximal";
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const CombinationSearch &cs, const std::vector<CombinationCheck> &checks) {
  Json fams = Json::array();
  for (const auto &f : cs.families) fams.push_back(to_json(f));
  Json combos = Json::array();
  for (const auto &c : cs.valid) {
    Json names = Json::array();
    for (auto i : c.members) names.push_back(cs.families[i].name());
    combos.push_back({{"members", names}, {"added", c.added}, {"total", c.total}, {"maximal", c.maximal}});
  }
  Json published = Json::array();
  for (const auto &c : checks) {
    published.push_back({{"members", c.expected.members},
                         {"published_added", c.expected.added},
                         {"published_total", c.expected.bracket},
                         {"found", c.found},
                         {"maximal", c.maximal},
                         {"added", c.added},
                         {"total", c.total},
                         {"verified", c.verified},
                         {"check", c.check},
                         {"note", c.note}});
  }
  return Json{{"kind", "sub2"},         {"n", cs.n},          {"johnson_size", cs.johnson_size},
              {"families", fams},       {"combinations", combos}, {"published", published}};
}

void write_sub2_text(std::ostream &os, const CombinationSearch &cs,
                     const std::vector<CombinationCheck> &checks) {
  os << "(n = " << cs.n << ")  J(" << cs.n - 1 << ",2): " << cs.johnson_size << " vectors\n";
  os << "families:\n";
  for (const auto &f : cs.families)
    os << "  " << std::left << std::setw(5) << f.name() << sub_orbit_text(f) << ": " << f.orbit_size()
       << (f.orbit_size() == 1 ? " vector" : " vectors") << "\n";
  os << "maximal combinations:\n";
  for (const auto &c : cs.valid) {
    if (!c.maximal) continue;
    os << "  " << c.label(cs.families) << ": " << c.added << (c.added == 1 ? " vector [" : " vectors [") << c.total << "]\n";
  }
  if (!checks.empty()) {
    os << "published list:\n";
    for (const auto &c : checks) {
      std::string label;
      for (const auto &m : c.expected.members) label += (label.empty() ? "" : " u ") + m;
      os << "  " << label << ": " << c.expected.added << (c.expected.added == 1 ? " vector [" : " vectors [") << c.expected.bracket << "]  " << c.check;
      if (c.found) os << "  recomputed " << c.added << " [" << c.total << "]" << (c.verified ? " verified" : " NOT verified");
      if (!c.note.empty()) os << "  (" << c.note << ")";
      os << "\n";
    }
  }
}

void write_sub2_csv(std::ostream &os, const CombinationSearch &cs,
                    const std::vector<CombinationCheck> &checks) {
  os << "n,m,family,added,total,status\n";
  for (const auto &c : cs.valid)
    if (c.maximal) os << cs.n << ",2,\"" << c.label(cs.families) << "\"," << c.added << "," << c.total << ",maximal\n";
  for (const auto &c : checks) {
    std::string label;
    for (const auto &m : c.expected.members) label += (label.empty() ? "" : " u ") + m;
    os << cs.n << ",2,\"" << label << "\"," << c.added << "," << c.total << "," << c.check << "\n";
  }
}

}  // namespace jds
