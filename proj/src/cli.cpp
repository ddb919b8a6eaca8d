#include "cuspgroup/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspgroup/abelian.hpp"
#include "cuspgroup/curves.hpp"
#include "cuspgroup/errors.hpp"
#include "cuspgroup/families.hpp"
#include "cuspgroup/fox.hpp"
#include "cuspgroup/homcount.hpp"
#include "cuspgroup/words.hpp"

namespace cusp::cli {

namespace {

using json = nlohmann::ordered_json;

json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const AbelianStructure& a) {
  json t = json::array();
  for (const auto& d : a.torsion) t.push_back(big(d));
  return {{"free_rank", a.free_rank}, {"torsion", t}, {"text", a.to_string()}};
}

json to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(r.letters());
  return {{"generators", p.names()}, {"relators", rels}};
}

json to_json(const LaurentPolynomial& f) {
  json c = json::array();
  for (const auto& v : f.coefficients()) c.push_back(big(v));
  return {{"low", f.low()}, {"coefficients", c}, {"text", f.to_string()}};
}

json to_json(const ProjectivePoint& p) { return json::array({p.x, p.y, p.z}); }

Presentation from_json(const json& doc) {
  try {
    std::vector<std::string> names = doc.at("generators").get<std::vector<std::string>>();
    std::vector<Word> rels;
    for (const auto& r : doc.at("relators")) {
      auto letters = r.get<std::vector<int>>();
      for (int l : letters)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > names.size())
          throw ParseError("relator letter out of range: " + std::to_string(l));
      rels.emplace_back(std::move(letters));
    }
    return Presentation(std::move(names), std::move(rels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation document: ") + e.what());
  }
}

Presentation load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    return from_json(doc);
  }
  return parse_text(text);
}

ZariskiVariant variant_of(const RunConfig& c) { return parse_zariski_variant(c.variant); }

MeridianElimination meridians_of(const RunConfig& c) {
  if (c.meridians == "post") return MeridianElimination::PostRewrite;
  if (c.meridians == "pre") return MeridianElimination::PreRewrite;
  throw InvalidParameter("--meridians must be post or pre");
}

Presentation family_presentation(const RunConfig& c) {
  const std::string& f = c.family;
  if (f == "G") return presentation_G();
  if (f == "G-raw") return presentation_G_raw();
  if (f == "pi1") return presentation_pi1(c.n);
  if (f == "pi1-reduced") return presentation_pi1_reduced(c.n);
  if (f == "zariski3") return presentation_zariski3(variant_of(c));
  if (f == "oka") return presentation_oka(c.n);
  if (f == "oka-quotient") return oka_quotient(c.n).quotient;
  throw InvalidParameter("unknown family '" + f + "'");
}

Presentation input_presentation(const RunConfig& c) {
  if (!c.files.empty()) return load_file(c.files.front());
  return family_presentation(c);
}

void check_k(int k, const char* flag) {
  if (k < 2 || k > 5) throw InvalidParameter(std::string(flag) + " must lie in 2..5");
}

struct Report {
  json results = json::array();
  json failures = json::array();
  std::string raw_text;  // replaces the generic text rendering when set
};

void fail(Report& r, const std::string& check, const std::string& message) {
  r.failures.push_back({{"check", check}, {"message", message}});
}

std::vector<HomCountRow> count_rows(const Presentation& a, const Presentation& b, int kmax, std::uint64_t budget) {
  std::vector<HomCountRow> rows;
  for (int k = 2; k <= kmax; ++k) rows.push_back({k, count_homs(a, k, budget).total, count_homs(b, k, budget).total});
  return rows;
}

json rows_json(const std::vector<HomCountRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"k", r.k}, {"left", r.source}, {"right", r.target}});
  return out;
}

bool rows_match(const std::vector<HomCountRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.source == r.target; });
}

// --- individual checks, shared by the subcommands and verify-all ---

struct CheckOutcome {
  bool pass = false;
  std::string message;
  json details = json::object();
};

CheckOutcome check_abelianization(int n) {
  CheckOutcome o;
  const AbelianStructure a = abelianization(presentation_pi1(n));
  AbelianStructure expected;
  if (n % 2) {
    expected.torsion = {mpz_class(2 * n)};
  } else {
    expected.free_rank = 3;
    if (n > 2) expected.torsion = {mpz_class(n / 2)};
  }
  o.pass = a.free_rank == expected.free_rank && a.torsion == expected.torsion;
  o.details = {{"computed", to_json(a)}, {"expected", to_json(expected)}};
  if (!o.pass) o.message = "abelianization " + a.to_string() + ", expected " + expected.to_string();
  return o;
}

CheckOutcome check_alexander(int n, int strip) {
  CheckOutcome o;
  const AlexanderResult r = alexander_polynomial(presentation_pi1_reduced(n), static_cast<std::size_t>(strip));
  const LaurentPolynomial target = cyclotomic_target(n);
  o.pass = r.polynomial == target;
  o.details = {{"raw", to_json(r.raw)},
               {"stripped_t_minus_1", r.stripped},
               {"polynomial", to_json(r.polynomial)},
               {"target", to_json(target)},
               {"target_factored", "(" + cyclotomic_base(n).to_string() + ")^3"},
               {"matches", o.pass}};
  if (!o.pass) o.message = "Alexander polynomial " + r.polynomial.to_string() + " differs from the cyclotomic target";
  return o;
}

CheckOutcome check_commutator_rank(int n) {
  CheckOutcome o;
  const std::size_t rank = commutator_abelianization_rank(n);
  const std::size_t expected = 3 * static_cast<std::size_t>(n - 1);
  o.pass = rank == expected;
  o.details = {{"rank", rank}, {"expected", expected}};
  if (!o.pass) o.message = "commutator subgroup abelianization rank " + std::to_string(rank);
  return o;
}

CheckOutcome check_derivation(int n, MeridianElimination mode, std::uint64_t budget) {
  CheckOutcome o;
  const Presentation derived = derive_pi1_via_rs(n, mode);
  const Presentation stated = presentation_pi1(n);
  const AbelianStructure a = abelianization(derived), b = abelianization(stated);
  const auto rows = count_rows(derived, stated, n <= 3 ? 4 : 3, budget);
  const bool ab_ok = a.free_rank == b.free_rank && a.torsion == b.torsion;
  o.pass = ab_ok && rows_match(rows);
  o.details = {{"derived_generators", derived.generator_count()},
               {"derived_relators", derived.relator_count()},
               {"abelianization_derived", to_json(a)},
               {"abelianization_stated", to_json(b)},
               {"hom_counts", rows_json(rows)}};
  if (!o.pass) o.message = "derived and stated presentations differ on invariants";
  return o;
}

CheckOutcome check_oka(int n, std::uint64_t budget) {
  CheckOutcome o;
  const OkaQuotient q = oka_quotient(n);
  const Presentation oka = presentation_oka(n);
  const AbelianStructure a = abelianization(q.quotient), b = abelianization(oka);
  const auto rows = count_rows(q.quotient, oka, 4, budget);
  o.pass = a.free_rank == b.free_rank && a.torsion == b.torsion && rows_match(rows);
  o.details = {{"quotient_generators", q.quotient.generator_count()},
               {"abelianization_quotient", to_json(a)},
               {"abelianization_oka", to_json(b)},
               {"hom_counts", rows_json(rows)}};
  if (!o.pass) o.message = "quotient and Z/2 * Z/" + std::to_string(n) + " differ on invariants";
  return o;
}

CheckOutcome check_singular_points(int n, std::int64_t prime) {
  CheckOutcome o;
  const PrimeField field = prime ? PrimeField(prime) : choose_prime(n, 2);
  auto pts = singular_points(n, field);
  const int expected_rank = n == 2 ? 2 : 1;
  json list = json::array();
  bool ranks_ok = true;
  for (const auto& p : pts) {
    const int r = tangent_cone_rank(p, n, field);
    ranks_ok = ranks_ok && r == expected_rank;
    list.push_back({{"point", to_json(p)}, {"tangent_cone_rank", r}});
  }
  o.details = {{"prime", field.characteristic()}, {"count", pts.size()}, {"points", list}};
  bool scan_ok = true;
  if (field.characteristic() <= 1000) {
    auto scanned = singular_points_by_scan(curve_form(n, field));
    std::sort(pts.begin(), pts.end());
    scan_ok = scanned == pts;
    o.details["scan_count"] = scanned.size();
    o.details["scan_agrees"] = scan_ok;
  }
  o.pass = pts.size() == 3 * static_cast<std::size_t>(n) && ranks_ok && scan_ok;
  if (!o.pass) o.message = "singular locus check failed mod " + std::to_string(field.characteristic());
  return o;
}

CheckOutcome check_superabundance(int n, const std::vector<std::int64_t>& primes) {
  CheckOutcome o;
  const SuperabundanceReport r = primes.empty() ? superabundance(n) : superabundance(n, primes);
  o.pass = r.s == 3 && static_cast<long>(r.h0) == r.expected_h0;
  o.details = {{"primes", r.primes},         {"points", r.points}, {"monomials", r.monomials},
               {"rank", r.rank},             {"h0", r.h0},         {"s", r.s},
               {"expected_h0", r.expected_h0}};
  if (!o.pass) o.message = "superabundance " + std::to_string(r.s) + ", h0 " + std::to_string(r.h0);
  return o;
}

CheckOutcome check_split(std::int64_t prime) {
  CheckOutcome o;
  const SplittingReport r = splitting_check_n2(PrimeField(prime ? prime : 13));
  json pts = json::array();
  for (const auto& p : r.intersections) pts.push_back(to_json(p));
  o.pass = r.lines.size() == 4 && r.product_matches && r.intersections.size() == 6;
  o.details = {{"prime", r.prime},
               {"lines", r.lines},
               {"product_matches", r.product_matches},
               {"intersections", pts},
               {"arrangement_nodes", r.intersections.size()},
               {"branch_locus_nodes", r.branch_locus_nodes}};
  return o;
}

CheckOutcome check_zariski(ZariskiVariant v, int kmax, std::uint64_t budget) {
  CheckOutcome o;
  const GroupMap m = zariski_iso_candidate(v);
  const MapCheckReport r = map_check(m, kmax, budget);
  json consistency = json::array();
  for (bool b : r.consistency) consistency.push_back(b);
  const bool counts_ok = rows_match(r.hom_counts);
  o.pass = r.abelian.isomorphism && r.triviality.pass && counts_ok;
  o.details = {{"label", "consistent with isomorphism"},
               {"variant", to_string(v)},
               {"abelianization_source", to_json(r.abelian.source)},
               {"abelianization_target", to_json(r.abelian.target)},
               {"abelian_well_defined", r.abelian.well_defined},
               {"abelian_surjective", r.abelian.surjective},
               {"abelian_isomorphism", r.abelian.isomorphism},
               {"triviality_pass", r.triviality.pass},
               {"homs_checked", r.triviality.homs_checked},
               {"hom_counts", rows_json(r.hom_counts)},
               {"consistency", consistency}};
  if (r.triviality.witness) {
    const auto& w = *r.triviality.witness;
    o.details["witness"] = {{"k", w.k}, {"relator", w.relator}, {"assignment", w.assignment},
                            {"relator_image", w.relator_image}};
  }
  if (!o.pass) {
    std::vector<std::string> why;
    if (!r.abelian.isomorphism) why.emplace_back("no abelianization isomorphism");
    if (!r.triviality.pass) why.emplace_back("a relator survives in S_" + std::to_string(r.triviality.witness->k));
    if (!counts_ok) why.emplace_back("hom counts differ");
    o.message = why.front();
    for (std::size_t i = 1; i < why.size(); ++i) o.message += "; " + why[i];
  }
  return o;
}

void record(Report& rep, const std::string& name, const CheckOutcome& o) {
  json entry = {{"check", name}, {"status", o.pass ? "pass" : "fail"}};
  for (auto& [k, v] : o.details.items()) entry[k] = v;
  rep.results.push_back(std::move(entry));
  if (!o.pass) fail(rep, name, o.message.empty() ? "check failed" : o.message);
}

// --- subcommands ---

void cmd_present(const RunConfig& c, Report& rep) {
  const Presentation p = input_presentation(c);
  json entry = to_json(p);
  entry["text"] = to_text(p);
  rep.results.push_back(entry);
  rep.raw_text = to_text(p);
}

void cmd_derive(const RunConfig& c, Report& rep) {
  const Derivation d = derive_pi1_details(c.n, meridians_of(c));
  auto stage = [](const Presentation& p) {
    return json{{"generators", p.generator_count()}, {"relators", p.relator_count()}, {"length", p.total_length()}};
  };
  rep.results.push_back({{"n", c.n},
                         {"meridians", c.meridians},
                         {"rewritten", stage(d.rewritten)},
                         {"meridians_cut", stage(d.meridians_cut)},
                         {"eles", stage(d.eles)},
                         {"final", stage(d.final)},
                         {"presentation", to_json(d.final)},
                         {"abelianization", to_json(abelianization(d.final))}});
  rep.raw_text = to_text(d.final);
}

void cmd_abelianize(const RunConfig& c, Report& rep) {
  json entry = to_json(abelianization(input_presentation(c)));
  rep.results.push_back(entry);
}

void cmd_alexander(const RunConfig& c, Report& rep) {
  if (c.strip_t1 < 0) throw InvalidParameter("--strip-t1 must be non-negative");
  if (!c.files.empty() || c.family != "pi1-reduced" || c.n % 2 == 0) {
    const AlexanderResult r = alexander_polynomial(input_presentation(c), static_cast<std::size_t>(c.strip_t1));
    rep.results.push_back(
        {{"raw", to_json(r.raw)}, {"stripped_t_minus_1", r.stripped}, {"polynomial", to_json(r.polynomial)}});
    return;
  }
  record(rep, "alexander-polynomial", check_alexander(c.n, c.strip_t1));
}

void cmd_homcount(const RunConfig& c, Report& rep) {
  check_k(c.k, "--k");
  const HomCountReport r = count_homs(input_presentation(c), c.k, c.budget);
  rep.results.push_back({{"k", r.k}, {"total", r.total}, {"surjective", r.surjective}, {"nodes", r.nodes}});
}

void cmd_compare(const RunConfig& c, Report& rep) {
  if (c.files.size() != 2) throw InvalidParameter("compare needs exactly two --file arguments");
  check_k(c.kmax, "--kmax");
  const Presentation a = load_file(c.files[0]), b = load_file(c.files[1]);
  const AbelianStructure aa = abelianization(a), ab = abelianization(b);
  const bool ab_ok = aa.free_rank == ab.free_rank && aa.torsion == ab.torsion;
  rep.results.push_back({{"invariant", "abelianization"},
                         {"left", to_json(aa)},
                         {"right", to_json(ab)},
                         {"match", ab_ok}});
  if (!ab_ok) fail(rep, "abelianization", aa.to_string() + " vs " + ab.to_string());
  for (const auto& row : count_rows(a, b, c.kmax, c.budget)) {
    const bool ok = row.source == row.target;
    rep.results.push_back({{"invariant", "homcount"}, {"k", row.k}, {"left", row.source}, {"right", row.target},
                           {"match", ok}});
    if (!ok) fail(rep, "homcount-" + std::to_string(row.k), std::to_string(row.source) + " vs " +
                                                                std::to_string(row.target));
  }
}

void cmd_milnor(const RunConfig& c, Report& rep) {
  const mpq_class r = milnor_ratio(c.n);
  const mpq_class gap = abs(r - mpq_class(3, 4));
  rep.results.push_back({{"n", c.n},
                         {"ratio", r.get_str()},
                         {"distance_to_three_quarters", gap.get_str()},
                         {"within_one_over_n", gap < mpq_class(1, c.n)}});
}

void cmd_verify_all(const RunConfig& c, Report& rep) {
  using Runner = std::function<CheckOutcome()>;
  std::vector<std::pair<std::string, Runner>> checks;
  const int n = c.n;
  if (n < 2) throw InvalidParameter("verify-all needs n >= 2");
  check_k(c.kmax, "--kmax");
  checks.emplace_back("abelianization-dichotomy", [=] { return check_abelianization(n); });
  checks.emplace_back("derivation-match", [&] { return check_derivation(n, meridians_of(c), c.budget); });
  checks.emplace_back("singular-points", [&] { return check_singular_points(n, c.prime); });
  if (n % 2) {
    checks.emplace_back("alexander-polynomial", [&] { return check_alexander(n, c.strip_t1); });
    checks.emplace_back("commutator-rank", [=] { return check_commutator_rank(n); });
    checks.emplace_back("oka-quotient", [&] { return check_oka(n, c.budget); });
    checks.emplace_back("superabundance", [&] { return check_superabundance(n, c.primes); });
  }
  if (n == 2) checks.emplace_back("split-check", [] { return check_split(13); });
  if (n == 3)
    checks.emplace_back("zariski-correspondence", [&] { return check_zariski(variant_of(c), c.kmax, c.budget); });
  std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [name, runner] : checks) {
    try {
      record(rep, name, runner());
    } catch (const InvalidParameter&) {
      throw;
    } catch (const Error& e) {
      CheckOutcome o;
      o.message = e.what();
      record(rep, name, o);
    }
  }
}

json config_json(const RunConfig& c) {
  return {{"subcommand", c.subcommand}, {"family", c.family}, {"n", c.n},           {"variant", c.variant},
          {"files", c.files},           {"k", c.k},           {"kmax", c.kmax},     {"budget", c.budget},
          {"strip_t1", c.strip_t1},     {"primes", c.primes}, {"prime", c.prime},   {"meridians", c.meridians},
          {"format", c.format}};
}

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_text(const Report& rep) {
  std::ostringstream os;
  if (!rep.raw_text.empty()) {
    os << rep.raw_text;
  } else {
    for (const auto& r : rep.results) {
      if (r.contains("check")) {
        os << (r["status"] == "pass" ? "PASS " : "FAIL ") << r["check"].get<std::string>() << '\n';
        for (const auto& [k, v] : r.items())
          if (k != "check" && k != "status") os << "  " << k << ": " << render_value(v) << '\n';
      } else {
        for (const auto& [k, v] : r.items()) os << k << ": " << render_value(v) << '\n';
      }
    }
  }
  for (const auto& f : rep.failures)
    os << "failure: " << f["check"].get<std::string>() << ": " << f["message"].get<std::string>() << '\n';
  return os.str();
}

} // namespace

RunResult run(const RunConfig& c) {
  Report rep;
  RunResult result;
  if (c.format != "text" && c.format != "json") {
    fail(rep, "usage", "--format must be text or json");
    result.exit_code = kUsage;
  } else {
    try {
      const std::string& s = c.subcommand;
      if (s == "present") cmd_present(c, rep);
      else if (s == "derive") cmd_derive(c, rep);
      else if (s == "abelianize") cmd_abelianize(c, rep);
      else if (s == "alexander") cmd_alexander(c, rep);
      else if (s == "homcount") cmd_homcount(c, rep);
      else if (s == "compare") cmd_compare(c, rep);
      else if (s == "superabundance") record(rep, "superabundance", check_superabundance(c.n, c.primes));
      else if (s == "singular-points") record(rep, "singular-points", check_singular_points(c.n, c.prime));
      else if (s == "milnor-ratio") cmd_milnor(c, rep);
      else if (s == "split-check") record(rep, "split-check", check_split(c.prime));
      else if (s == "verify-all") cmd_verify_all(c, rep);
      else throw InvalidParameter("unknown subcommand '" + s + "'");
      result.exit_code = rep.failures.empty() ? kOk : kVerificationFailed;
    } catch (const InvalidParameter& e) {
      rep = Report{};
      fail(rep, "usage", e.what());
      result.exit_code = kUsage;
    } catch (const ParseError& e) {
      rep = Report{};
      fail(rep, "usage", e.what());
      result.exit_code = kUsage;
    } catch (const Error& e) {
      fail(rep, c.subcommand, e.what());
      result.exit_code = kVerificationFailed;
    }
  }
  if (c.format == "json") {
    json doc = {{"config", config_json(c)}, {"results", rep.results}, {"failures", rep.failures}};
    result.output = doc.dump(2) + "\n";
  } else {
    result.output = render_text(rep);
  }
  return result;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely presented groups of cuspidal plane curve complements"};
  app.require_subcommand(1);
  RunConfig c;
  std::string primes;

  auto add_format = [&](CLI::App* s) { s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"})); };
  auto add_source = [&](CLI::App* s) {
    s->add_option("--family", c.family, "G, G-raw, pi1, pi1-reduced, zariski3, oka, oka-quotient");
    s->add_option("--n", c.n, "family parameter");
    s->add_option("--variant", c.variant, "zariski3 variant: stated or corrected");
    s->add_option("--file", c.files, "presentation file (text or JSON)");
  };

  auto* present = app.add_subcommand("present", "print a presentation");
  add_source(present);
  add_format(present);

  auto* derive = app.add_subcommand("derive", "Reidemeister-Schreier derivation of pi1(n)");
  derive->add_option("--n", c.n)->required();
  derive->add_option("--meridians", c.meridians, "post or pre")->check(CLI::IsMember({"post", "pre"}));
  add_format(derive);

  auto* abel = app.add_subcommand("abelianize", "abelianization invariants");
  add_source(abel);
  add_format(abel);

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  add_source(alex);
  alex->add_option("--strip-t1", c.strip_t1, "maximum number of (t-1) factors to remove");
  add_format(alex);

  auto* hom = app.add_subcommand("homcount", "count homomorphisms into S_k");
  add_source(hom);
  hom->add_option("--k", c.k);
  hom->add_option("--budget", c.budget, "search node budget");
  add_format(hom);

  auto* cmp = app.add_subcommand("compare", "compare invariants of two presentation files");
  cmp->add_option("--file", c.files)->required()->expected(2);
  cmp->add_option("--kmax", c.kmax);
  cmp->add_option("--budget", c.budget);
  add_format(cmp);

  auto* sup = app.add_subcommand("superabundance", "linear system through the singular points");
  sup->add_option("--n", c.n)->required();
  sup->add_option("--primes", primes, "comma-separated primes");
  add_format(sup);

  auto* sing = app.add_subcommand("singular-points", "singular points of F_n over F_p");
  sing->add_option("--n", c.n)->required();
  sing->add_option("--prime", c.prime);
  add_format(sing);

  auto* mil = app.add_subcommand("milnor-ratio", "Milnor number sum over squared degree");
  mil->add_option("--n", c.n)->required();
  add_format(mil);

  auto* split = app.add_subcommand("split-check", "F_2 as four lines");
  split->add_option("--prime", c.prime);
  add_format(split);

  auto* all = app.add_subcommand("verify-all", "run every check for n");
  all->add_option("--n", c.n)->required();
  all->add_option("--variant", c.variant);
  all->add_option("--kmax", c.kmax);
  all->add_option("--budget", c.budget);
  all->add_option("--strip-t1", c.strip_t1);
  all->add_option("--primes", primes);
  all->add_option("--prime", c.prime);
  all->add_option("--meridians", c.meridians)->check(CLI::IsMember({"post", "pre"}));
  add_format(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (!primes.empty()) {
    std::stringstream ss(primes);
    std::string tok;
    try {
      while (std::getline(ss, tok, ',')) c.primes.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      err << "--primes: expected comma-separated integers\n";
      return kUsage;
    }
  }
  const RunResult r = run(c);
  (r.exit_code == kUsage && c.format != "json" ? err : out) << r.output;
  return r.exit_code;
}

} // namespace cusp::cli
