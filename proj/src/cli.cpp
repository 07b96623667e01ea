#include "jds/cli.hpp"

#include "jds/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace jds::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Parameters checked_params(long long n, long long m) {
  try {
    return Parameters(static_cast<int>(n), static_cast<int>(m));
  } catch (const InvalidParameters &e) {
    throw UsageError(e.what());
  }
}

ClassifyOptions classify_options(const RunConfig &c) {
  ClassifyOptions o;
  o.cap = c.cap;
  o.budget = c.budget;
  o.enumerate_maximal = c.enumerate_maximal;
  return o;
}

int cmd_n0(const RunConfig &c, std::ostream &os) {
  if (c.n < 1) throw UsageError("n0 needs n >= 1");
  const long long v = n0(c.n);
  switch (c.format) {
    case Format::json: {
      Json f = Json::array();
      for (const auto &[p, e] : factorize(c.n).pairs) f.push_back({p, e});
      os << Json{{"kind", "n0"}, {"n", c.n}, {"n0", v}, {"factorization", f}}.dump(2) << "\n";
      break;
    }
    case Format::csv: os << "n,n0\n" << c.n << "," << v << "\n"; break;
    case Format::text: os << v << "\n"; break;
  }
  return kExitOk;
}

int cmd_predicate(const RunConfig &c, std::ostream &os) {
  if (c.m < 2 || c.n < 2 * c.m) throw UsageError("predicate needs n >= 2m >= 4");
  const bool nm = nonmaximal_predicate(c.n, c.m);
  const long long s = n0(c.n);
  std::optional<PropositionFamily> prop;
  const long long n1 = c.n1.value_or(1);
  if (s * n1 < c.n && n1 > 0) prop = proposition_family(static_cast<int>(c.n), static_cast<int>(c.m), n1);
  else if (c.n1) throw UsageError("need 0 < n0*n1 < n");
  switch (c.format) {
    case Format::json: {
      Json j{{"kind", "predicate"}, {"n", c.n}, {"m", c.m}, {"n0", s}, {"not_maximal", nm}};
      if (prop) {
        j["n1"] = n1;
        j["extension_family"] = to_json(prop->family);
        j["extension_orbit"] = orbit_notation(prop->family);
        j["condition_holds"] = prop->condition_holds;
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "n,m,n0,not_maximal\n" << c.n << "," << c.m << "," << s << "," << (nm ? "true" : "false") << "\n";
      break;
    case Format::text:
      os << "not maximal: " << (nm ? "true" : "false") << "\n";
      os << "n0: " << s << "\n";
      if (prop)
        os << "extension (n1=" << n1 << "): " << orbit_notation(prop->family)
           << (prop->condition_holds ? "" : "  [condition fails]") << "\n";
      break;
  }
  return kExitOk;
}

int cmd_families(const RunConfig &c, std::ostream &os) {
  const Parameters p = checked_params(c.n, c.m);
  Json arr = Json::array();
  if (c.format == Format::csv) os << "n,m,k0,k,size,m_x,addable\n";
  for_each_family(p, [&](const CandidateFamily &f) {
    const bool add = is_addable(f);
    if (c.addable_only && !add) return true;
    switch (c.format) {
      case Format::json: {
        Json j = to_json(f);
        j["m_x"] = m_x(f).to_string();
        j["addable"] = add;
        arr.push_back(std::move(j));
        break;
      }
      case Format::csv: {
        std::string ks;
        for (auto v : f.k()) ks += (ks.empty() ? "" : " ") + std::to_string(v);
        os << p.n << "," << p.m << "," << f.k0() << ",\"" << ks << "\"," << family_size(f).get_str() << ","
           << m_x(f).to_string() << "," << (add ? "true" : "false") << "\n";
        break;
      }
      case Format::text:
        os << "k0=" << f.k0() << " k=(";
        for (std::size_t i = 0; i < f.k().size(); ++i) os << (i ? "," : "") << f.k()[i];
        os << ")  " << orbit_notation(f) << "  size " << family_size(f).get_str() << "  M_X " << m_x(f).to_string()
           << (add ? "  addable" : "") << "\n";
        break;
    }
    return true;
  });
  if (c.format == Format::json)
    os << Json{{"kind", "families"}, {"n", p.n}, {"m", p.m}, {"families", arr}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_classify(const RunConfig &c, std::ostream &os) {
  const Parameters p = checked_params(c.n, c.m);
  const ClassificationReport r = classify(p, classify_options(c));
  switch (c.format) {
    case Format::json: os << to_json(r).dump(2) << "\n"; break;
    case Format::csv: write_classification_csv(os, r); break;
    case Format::text: write_classification_text(os, r); break;
  }
  return r.optimal ? kExitOk : kExitBudget;
}

int cmd_tables(const RunConfig &c, std::ostream &os) {
  if (c.m < 2) throw UsageError("tables needs --m >= 2");
  const auto rows = reproduce_table(static_cast<int>(c.m), classify_options(c));
  switch (c.format) {
    case Format::json: os << to_json(rows, static_cast<int>(c.m)).dump(2) << "\n"; break;
    case Format::csv: write_table_csv(os, rows); break;
    case Format::text: write_table_text(os, rows, static_cast<int>(c.m)); break;
  }
  const bool all_optimal = std::all_of(rows.begin(), rows.end(), [](const TableRow &r) { return r.report.optimal; });
  return all_optimal ? kExitOk : kExitBudget;
}

int cmd_sub2(const RunConfig &c, std::ostream &os) {
  if (c.n < 5) throw UsageError("sub2 needs n >= 5");
  const CombinationSearch cs = combination_search(static_cast<int>(c.n));
  const auto checks = check_combinations(cs);
  switch (c.format) {
    case Format::json: os << to_json(cs, checks).dump(2) << "\n"; break;
    case Format::csv: write_sub2_csv(os, cs, checks); break;
    case Format::text: write_sub2_text(os, cs, checks); break;
  }
  return kExitOk;
}

int cmd_corollary(const RunConfig &c, std::ostream &os) {
  if (c.m < 2) throw UsageError("corollary needs m_max >= 2");
  Json rows = Json::array();
  if (c.format == Format::csv) os << "m,closed_form,scan_max,check\n";
  if (c.format == Format::text) os << "m    closed form   scan maximum   check\n";
  for (long long m = 2; m <= c.m; ++m) {
    const long long cf = corollary_max_n(m);
    long long best = 0;
    for (long long n = 2 * m; n <= cf + 50; ++n)
      if (nonmaximal_predicate(n, m)) best = n;
    const std::string check = best == cf ? "PASS" : "FLAG";
    switch (c.format) {
      case Format::json: rows.push_back({{"m", m}, {"closed_form", cf}, {"scan_max", best}, {"check", check}}); break;
      case Format::csv: os << m << "," << cf << "," << best << "," << check << "\n"; break;
      case Format::text:
        os << std::left << std::setw(5) << m << std::setw(14) << cf << std::setw(15) << best << check << "\n";
        break;
    }
  }
  if (c.format == Format::json) os << Json{{"kind", "corollary"}, {"rows", rows}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig &c, std::ostream &os) {
  if (c.m < 1) throw UsageError("verify needs --m >= 1");
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot read " + c.input);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<QuadPoint> pts;
  try {
    pts = read_point_set(buf.str());
  } catch (const std::exception &e) {
    throw UsageError(std::string("bad point set: ") + e.what());
  }
  const VerifyResult v = verify_point_set(pts, static_cast<int>(c.m));
  switch (c.format) {
    case Format::json: {
      Json s = Json::array();
      for (const auto &d : v.spectrum) s.push_back(d.to_string());
      os << Json{{"kind", "verify"}, {"m", c.m}, {"points", v.points}, {"ok", v.ok},
                 {"duplicates", v.duplicates}, {"spectrum", s}}
                .dump(2)
         << "\n";
      break;
    }
    case Format::csv: os << "points,ok,distances\n" << v.points << "," << (v.ok ? "true" : "false") << "," << v.spectrum.size() << "\n"; break;
    case Format::text:
      os << "points: " << v.points << "\n";
      os << "squared distances:";
      for (const auto &d : v.spectrum) os << " " << d.to_string();
      os << "\n";
      if (v.duplicates) os << "repeated points present\n";
      os << "valid " << c.m << "-distance set: " << (v.ok ? "true" : "false") << "\n";
      break;
  }
  return v.ok ? kExitOk : kExitInvalidSet;
}

}  // namespace

std::vector<QuadPoint> read_point_set(const std::string &text) {
  const Json j = Json::parse(text);
  if (!j.is_array()) throw ParseError("point set must be a JSON array");
  std::vector<QuadPoint> out;
  std::size_t dim = 0;
  for (const auto &row : j) {
    if (!row.is_array()) throw ParseError("each point must be a JSON array");
    QuadPoint p;
    for (const auto &x : row) {
      if (x.is_string()) p.push_back(QuadNum::parse(x.get<std::string>()));
      else if (x.is_number_integer()) p.emplace_back(x.get<long long>());
      else throw ParseError("coordinates must be strings or integers");
    }
    if (!out.empty() && p.size() != dim) throw ParseError("points differ in dimension");
    dim = p.size();
    out.push_back(std::move(p));
  }
  return out;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  std::ofstream file;
  std::ostream *os = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kExitUsage;
    }
    os = &file;
  }
  try {
    const std::string &s = config.subcommand;
    if (s == "n0") return cmd_n0(config, *os);
    if (s == "predicate") return cmd_predicate(config, *os);
    if (s == "families") return cmd_families(config, *os);
    if (s == "classify") return cmd_classify(config, *os);
    if (s == "tables") return cmd_tables(config, *os);
    if (s == "sub2") return cmd_sub2(config, *os);
    if (s == "corollary") return cmd_corollary(config, *os);
    if (s == "verify") return cmd_verify(config, *os);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Maximal m-distance sets containing the Johnson representation J(n,m)"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "text";
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", c.output, "write the report to this file");
  app.add_option("--budget", c.budget, "clique search node budget")->capture_default_str();
  app.add_option("--cap", c.cap, "largest universe that is materialized")->capture_default_str();

  auto *n0c = app.add_subcommand("n0", "special factor of n");
  n0c->add_option("n", c.n)->required();
  auto *pred = app.add_subcommand("predicate", "is J(n,m) not maximal?");
  pred->add_option("n", c.n)->required();
  pred->add_option("m", c.m)->required();
  pred->add_option("--n1", c.n1, "multiplier for the extension family");
  auto *fam = app.add_subcommand("families", "candidate extension families");
  fam->add_option("n", c.n)->required();
  fam->add_option("m", c.m)->required();
  fam->add_flag("--addable", c.addable_only, "only addable families");
  auto *cls = app.add_subcommand("classify", "maximal extensions of J(n,m)");
  cls->add_option("n", c.n)->required();
  cls->add_option("m", c.m)->required();
  cls->add_flag("--enumerate-maximal", c.enumerate_maximal, "collect the sizes of all maximal cliques");
  auto *tab = app.add_subcommand("tables", "reproduce the extension table for one m");
  tab->add_option("--m", c.m)->required();
  auto *sub = app.add_subcommand("sub2", "two-distance extensions of J(n-1,2)");
  sub->add_option("n", c.n)->required();
  auto *cor = app.add_subcommand("corollary", "largest non-maximal n for m = 2..m_max");
  cor->add_option("m_max", c.m)->required();
  auto *ver = app.add_subcommand("verify", "check a JSON point set");
  ver->add_option("file", c.input)->required();
  ver->add_option("--m", c.m)->required();

  for (auto *sc : {n0c, pred, fam, cls, tab, sub, cor, ver}) {
    sc->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sc->add_option("--output,-o", c.output, "write the report to this file");
    sc->add_option("--budget", c.budget, "clique search node budget");
    sc->add_option("--cap", c.cap, "largest universe that is materialized");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
  return run(c, out, err);
}

}  // namespace jds::cli
