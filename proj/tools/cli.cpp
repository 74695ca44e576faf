#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "job.hpp"
#include "qci/error.hpp"
#include "qci/generic.hpp"
#include "qci/homotopy.hpp"
#include "qci/koszul.hpp"
#include "qci/regression.hpp"

#ifndef QCI_VERSION
#define QCI_VERSION "0.0.0"
#endif

namespace qci::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* schema = "qci-report/1";
constexpr std::size_t max_listed_pairs = 50;

struct Options {
  std::vector<std::string> expressions;
  std::string file;
  std::optional<int> deg_bound;
  std::string order = "grevlex";
};

// ------------------------------------------------------------------ input

std::string read_input(const Options& o) {
  if (!o.file.empty() && !o.expressions.empty())
    throw Error(ErrorCode::invalid_argument, "give the input either as a file or with -e, not both");
  if (!o.expressions.empty()) {
    std::string text;
    for (const auto& e : o.expressions) text += e + "\n";
    return text;
  }
  if (o.file.empty()) return {};
  std::ostringstream buf;
  if (o.file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(o.file);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + o.file);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string at(const Located& l) { return std::to_string(l.line) + ":" + std::to_string(l.column) + ": "; }

template <class F>
auto with_field(const JobSpec& job, F&& f) {
  if (job.prime) return f(PrimeField(*job.prime));
  const auto& name = job.ring->field;
  if (name.text == "QQ") return f(RationalField{});
  if (name.text.size() > 1 && name.text[0] == 'F' &&
      name.text.find_first_not_of("0123456789", 1) == std::string::npos && name.text.size() < 12) {
    const auto p = std::stoull(name.text.substr(1));
    try {
      if (p >= (1ull << 31)) throw Error(ErrorCode::invalid_field, name.text + ": modulus must be a prime below 2^31");
      return f(PrimeField(static_cast<std::uint32_t>(p)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_field) throw;
      throw Error(ErrorCode::invalid_field, at(name) + e.what());
    }
  }
  throw Error(ErrorCode::invalid_field, at(name) + "unknown field '" + name.text + "', expected QQ or F<p>");
}

template <Field K>
struct Context {
  RingPtr<K> poly;
  std::vector<Polynomial<K>> relations;
  QuotientPtr<K> ring;
  std::vector<RingElement<K>> ideal;
  std::vector<RingElement<K>> elements;
};

template <Field K>
Context<K> build_context(const JobSpec& job, const K& field, bool need_quotient) {
  Context<K> c;
  const auto& rs = *job.ring;
  c.poly = make_polynomial_ring(field, static_cast<int>(rs.variables.size()), job.order, rs.variables);
  for (const auto& r : rs.relations) c.relations.push_back(parse_polynomial(c.poly, r.text, r.line, r.column));
  if (!need_quotient) return c;
  c.ring = QuotientRing<K>::build(c.poly, c.relations);
  if (job.ideal)
    for (const auto& g : *job.ideal)
      c.ideal.push_back(RingElement<K>::from_polynomial(c.ring, parse_polynomial(c.poly, g.text, g.line, g.column)));
  for (const auto& e : job.elements)
    c.elements.push_back(RingElement<K>::from_polynomial(c.ring, parse_polynomial(c.poly, e.text, e.line, e.column)));
  return c;
}

template <Field K>
Json strings(const std::vector<RingElement<K>>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

template <Field K>
Json strings(const std::vector<Polynomial<K>>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

void require_ideal(const JobSpec& job) {
  if (!job.ideal) throw Error(ErrorCode::invalid_argument, "'" + job.command + "' needs an ideal statement");
}

// --------------------------------------------------------------- commands

struct Outcome {
  Json result = Json::object();
  bool negative = false;  // the mathematical answer is "no"
};

template <Field K>
Outcome cmd_hilbert(const JobSpec& job, const Context<K>& c) {
  Outcome o;
  o.result["dim"] = c.ring->dim();
  o.result["hilbert_series"] = c.ring->hilbert_series();
  o.result["loewy_length"] = c.ring->loewy_length();
  o.result["socle_dim"] = socle(c.ring).dim();
  if (job.ideal) {
    const auto q = quotient_by(c.ring, c.ideal);
    o.result["quotient_dim"] = q->dim();
    o.result["quotient_hilbert_series"] = q->hilbert_series();
  }
  return o;
}

template <Field K>
Outcome cmd_gb(const JobSpec&, const Context<K>& c) {
  Outcome o;
  const auto gb = buchberger(c.poly, c.relations);
  o.result["generators"] = strings(gb.generators());
  Json lead = Json::array();
  for (const auto& m : gb.leading_monomials()) lead.push_back(m.to_string(c.poly->names()));
  o.result["leading_monomials"] = lead;
  const auto& s = gb.stats();
  o.result["stats"] = {{"pairs", s.pairs},
                       {"skipped_monomial", s.skipped_monomial},
                       {"skipped_coprime", s.skipped_coprime},
                       {"skipped_chain", s.skipped_chain},
                       {"reduced", s.reduced},
                       {"reduced_to_zero", s.reduced_to_zero}};
  o.result["unit_ideal"] = gb.is_unit_ideal();
  const int ray = gb.infinite_ray();
  o.result["zero_dimensional"] = ray < 0;
  if (ray >= 0) {
    o.result["infinite_ray"] = c.poly->names()[ray];
  } else if (!gb.is_unit_ideal()) {
    Json std_monomials = Json::array();
    for (int d = 0;; ++d) {
      const auto ms = gb.standard_monomials(d);
      if (ms.empty()) break;
      Json row = Json::array();
      for (const auto& m : ms) row.push_back(m.to_string(c.poly->names()));
      std_monomials.push_back(row);
    }
    o.result["standard_monomials"] = std_monomials;
  }
  return o;
}

Json table_json(const std::vector<std::vector<std::size_t>>& t) {
  Json out = Json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

template <Field K>
Outcome cmd_koszul(const JobSpec& job, const Context<K>& c) {
  require_ideal(job);
  Outcome o;
  const KoszulComplex<K> e(c.ring, c.ideal);
  const auto rep = homology_report(e);
  const auto& t = rep.table;
  Json totals = Json::array();
  for (int p = 0; p <= e.length(); ++p)
    totals.push_back({{"p", p}, {"z", t.total_z(p)}, {"b", t.total_b(p)}, {"h", t.total_h(p)}});
  o.result["length"] = e.length();
  o.result["totals"] = totals;
  o.result["euler_characteristic"] = t.euler_characteristic();
  o.result["grade"] = grade(e, rep);
  o.result["z_by_degree"] = table_json(t.z);
  o.result["b_by_degree"] = table_json(t.b);
  o.result["h_by_degree"] = table_json(t.h);
  o.result["h1_generator_degrees"] = rep.h1_generator_degrees;
  return o;
}

template <Field K>
Outcome cmd_qci(const JobSpec& job, const Context<K>& c) {
  require_ideal(job);
  Outcome o;
  const auto res = qci_check(c.ring, c.ideal);
  const auto& cert = res.certificate;
  o.negative = !res.certified;
  o.result["certified"] = res.certified;
  o.result["refutation"] = res.refutation.empty() ? Json(nullptr) : Json(res.refutation);
  o.result["grade"] = cert.grade;
  o.result["nu_ideal"] = cert.nu_ideal;
  o.result["nu_h1"] = cert.nu_h1;
  o.result["cycle_degrees"] = cert.cycle_degrees;
  Json a = Json::array();
  for (const auto& row : cert.a) a.push_back(strings(row));
  o.result["cycle_matrix"] = a;
  o.result["h1_free"] = cert.h1_free;
  std::vector<bool> lambda(cert.lambda_bijective.begin(), cert.lambda_bijective.end());
  o.result["lambda_bijective"] = lambda;
  o.result["delta"] = cert.delta ? Json(cert.delta->to_string()) : Json(nullptr);
  o.result["checks"] = {{"delta_in_m_power", optional_json(cert.delta_in_m_power)},
                        {"annihilator_of_ideal_is_delta", optional_json(cert.annihilator_of_ideal_is_delta)},
                        {"annihilator_of_delta_is_ideal", optional_json(cert.annihilator_of_delta_is_ideal)},
                        {"h1_dimension_formula", optional_json(cert.h1_dimension_formula)},
                        {"multiplication_by_delta", optional_json(cert.multiplication_by_delta)}};
  if (res.certified && c.ideal.size() == 2 && cert.nu_h1 == 2 && cert.entries_in_m)
    o.result["two_generated_criterion"] =
        two_generated_criterion(c.ideal[0], c.ideal[1], cert.a[0][0], cert.a[0][1], cert.a[1][0], cert.a[1][1]);
  if (res.certified) {
    const auto l = loewy_check(RingIdeal<K>::generated_by(c.ring, c.ideal));
    o.result["loewy"] = {{"loewy_length", l.loewy_length},
                         {"nu_ideal", l.nu_ideal},
                         {"nu_maximal", l.nu_maximal},
                         {"nu_top_power", l.nu_top_power},
                         {"quotient_complete_intersection", l.quotient_complete_intersection},
                         {"all_bounds_hold", l.all_hold()}};
  }
  return o;
}

template <Field K>
Outcome cmd_ezd(const JobSpec& job, const Context<K>& c, const Options& opt) {
  Outcome o;
  if (!c.elements.empty()) {
    Json list = Json::array();
    bool all = true;
    for (const auto& x : c.elements) {
      const auto y = is_exact_zero_divisor(x);
      all = all && y.has_value();
      list.push_back({{"x", x.to_string()}, {"exact", y.has_value()}, {"y", y ? Json(y->to_string()) : Json(nullptr)}});
    }
    o.result["elements"] = list;
    o.negative = !all;
    return o;
  }
  if (job.symbolic) {
    require_ideal(job);
    const auto obs = ezd_symbolic(c.ring, c.ideal);
    std::vector<std::string> params(obs.parameters->names());
    o.result["parameters"] = params;
    o.result["expressions"] = strings(obs.expressions);
    o.result["product_ideal"] = strings(obs.product_ideal);
    o.result["exponent"] = obs.exponent ? Json(*obs.exponent) : Json(nullptr);
    // A finite exponent shows that no product of a linear form from the ideal
    // and another linear form vanishes unless one factor does.
    o.negative = !obs.exponent;
    return o;
  }
  EzdOptions eo;
  eo.inside_ideal = job.ideal.has_value();
  eo.max_degree = opt.deg_bound.value_or(1);
  const auto res = ezd_search(c.ring, c.ideal, eo);
  o.result["inside_ideal"] = eo.inside_ideal;
  o.result["max_degree"] = eo.max_degree;
  o.result["candidates"] = res.candidates;
  o.result["pairs_found"] = res.pairs.size();
  Json pairs = Json::array();
  for (std::size_t i = 0; i < res.pairs.size() && i < max_listed_pairs; ++i)
    pairs.push_back({{"x", res.pairs[i].x.to_string()}, {"y", res.pairs[i].y.to_string()}});
  o.result["pairs"] = pairs;
  o.negative = res.pairs.empty();
  return o;
}

template <Field K>
Outcome cmd_dual(const JobSpec& job, const Context<K>& c) {
  Outcome o;
  const auto dual = QuadraticDual<K>::build(c.poly, c.relations);
  o.result["dims"] = dual.dims();
  o.result["associative"] = dual.check_associativity();
  o.result["center_degree2_dim"] = degree2_center(dual).dim;
  const bool koszul = is_koszul_up_to(c.ring, job.hd_bound);
  o.result["koszul_up_to"] = job.hd_bound;
  o.result["koszul"] = koszul;
  o.negative = !koszul;
  return o;
}

Json betti_json(const BettiTable& b) {
  return {{"totals", b.totals()}, {"table", table_json(b.beta)}, {"complete", b.complete}};
}

template <Field K>
Outcome cmd_resolve(const JobSpec& job, const Context<K>& c, const Options& opt) {
  Outcome o;
  if (job.ideal) {
    const auto b = minimal_resolution(RingIdeal<K>::generated_by(c.ring, c.ideal), job.hd_bound, opt.deg_bound.value_or(-1));
    o.result["module"] = "R/I";
    o.result["betti"] = betti_json(b);
    return o;
  }
  const auto b = residue_field_resolution(c.ring, job.hd_bound);
  o.result["module"] = "k";
  o.result["betti"] = betti_json(b);
  std::vector<long> totals;
  for (auto t : b.totals()) totals.push_back(static_cast<long>(t));
  if (job.hd_bound >= 1)
    o.result["deviations"] = deviations(PowerSeries::polynomial(totals, job.hd_bound + 1), job.hd_bound);
  return o;
}

template <Field K>
Outcome cmd_betti_ambient(const JobSpec& job, const Context<K>& c) {
  Outcome o;
  o.result["betti"] = ambient_betti(c.ring);
  const bool ci = is_complete_intersection(c.ring);
  o.result["complete_intersection"] = ci;
  o.result["koszul_up_to"] = job.hd_bound;
  o.result["koszul"] = is_koszul_up_to(c.ring, job.hd_bound);
  return o;
}

Json trial_json(const TrialRecord& t) {
  auto opt = [](const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); };
  return {{"index", t.index},
          {"discards", t.discards},
          {"forms", t.forms},
          {"regular", t.regular},
          {"x_test_reducible", optional_json(t.x_test_reducible)},
          {"x_test_witness_degree", t.x_test_witness_degree ? Json(*t.x_test_witness_degree) : Json(nullptr)},
          {"witness_field", t.witness_field},
          {"witness", t.witness},
          {"pencil_element", opt(t.pencil_element)},
          {"x", opt(t.x)},
          {"y", opt(t.y)},
          {"pair_verified", t.pair_verified},
          {"linear_candidates", t.linear_candidates},
          {"linear_survivors", t.linear_survivors},
          {"exact_zero_divisors", t.exact_zero_divisors},
          {"note", t.note}};
}

Outcome cmd_quadrics(const JobSpec& job) {
  Outcome o;
  const auto rep = run_experiment(job.n, job.prime.value_or(101), job.trials, job.seed);
  Json trials = Json::array();
  for (const auto& t : rep.trials) trials.push_back(trial_json(t));
  o.result["n"] = rep.n;
  o.result["trials"] = trials;
  o.result["summary"] = {{"trials", rep.trials.size()},
                         {"regular", rep.regular},
                         {"discards", rep.discards},
                         {"pairs_verified", rep.pairs_verified},
                         {"trials_with_exact_zero_divisor", rep.trials_with_exact_zero_divisor},
                         {"anomalies", rep.anomalies}};
  o.negative = rep.n >= 5 ? rep.anomalies > 0 : rep.pairs_verified < rep.regular;
  return o;
}

Outcome cmd_paper(const JobSpec& job, std::ostream* text) {
  Outcome o;
  RegressionOptions ro;
  ro.seed = job.seed;
  ro.prime = job.prime.value_or(101);
  ro.quadric_trials = job.trials;
  Json ledger = Json::array();
  std::size_t passed = 0;
  run_regression(ro, [&](const CriterionResult& r) {
    passed += r.pass;
    ledger.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    if (text) {
      *text << summary_line(r) << '\n';
      for (const auto& d : r.details) *text << "        " << d << '\n';
      text->flush();
    }
  });
  o.result["criteria"] = ledger;
  o.result["passed"] = passed;
  o.result["total"] = criterion_count;
  o.negative = passed != static_cast<std::size_t>(criterion_count);
  return o;
}

// ------------------------------------------------------------ rendering

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto flat = [](const Json& v) {
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  // Polynomials contain spaces, so lists of them need commas.
  auto sep = [](const Json& v) {
    for (const auto& x : v)
      if (x.is_string() && x.get<std::string>().find(' ') != std::string::npos) return ", ";
    return " ";
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (!v.is_structured()) {
      out << pad << it.key() << ": " << scalar(v) << '\n';
    } else if (v.is_array() && flat(v)) {
      out << pad << it.key() << ":";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep(v) : " ") << scalar(v[i]);
      out << '\n';
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          std::ostringstream sub;
          render_text(x, sub, indent + 4);
          std::string s = sub.str();
          s.replace(indent + 2, 2, "- ");
          out << s;
        } else if (x.is_array() && flat(x)) {
          out << pad << "  ";
          for (std::size_t i = 0; i < x.size(); ++i) out << (i ? sep(x) : "") << scalar(x[i]);
          out << '\n';
        } else {
          out << pad << "  " << x.dump() << '\n';
        }
      }
    } else {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    }
  }
}

void render_quadrics_text(const Json& doc, std::ostream& out) {
  const auto& r = doc["result"];
  out << "quadrics n = " << r["n"].get<int>() << ", " << doc["field"].get<std::string>() << ", seed " << doc["seed"].dump()
      << '\n';
  for (const auto& t : r["trials"]) {
    out << "trial " << t["index"].dump() << ": regular " << t["regular"].dump();
    if (!t["x_test_reducible"].is_null()) out << ", reducible pencil element " << t["x_test_reducible"].dump();
    if (t["pair_verified"].get<bool>())
      out << ", pair over " << t["witness_field"].get<std::string>() << ": x = " << t["x"].get<std::string>()
          << ", y = " << t["y"].get<std::string>();
    if (t["linear_candidates"].get<std::size_t>() > 0)
      out << ", sieve " << t["linear_survivors"].dump() << " survivors, " << t["exact_zero_divisors"].dump() << " exact";
    if (!t["note"].get<std::string>().empty()) out << " [" << t["note"].get<std::string>() << "]";
    out << '\n';
  }
  out << "summary:\n";
  render_text(r["summary"], out, 2);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::internal_inconsistency: return exit_internal;
    case ErrorCode::not_koszul: return exit_refuted;
    default: return exit_input_error;
  }
}

Json header(const JobSpec& job) {
  Json doc;
  doc["schema"] = schema;
  doc["version"] = QCI_VERSION;
  doc["command"] = job.command;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  Options opt;
  CLI::App app{"Quasi-complete intersection toolkit: Groebner bases, Koszul homology, resolutions and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QCI_VERSION);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"hilbert", "Hilbert series, dimension and Loewy length of R (and R/I)"},
      {"gb", "reduced Groebner basis of the ring relations"},
      {"koszul", "Koszul homology of the ideal generators"},
      {"qci", "quasi-complete intersection certificate for the ideal"},
      {"ezd", "exact zero-divisors: test elements, enumerate, or the symbolic obstruction"},
      {"dual", "quadratic dual dimensions and degree-2 center"},
      {"resolve", "minimal resolution of k, or of R/I when an ideal is given"},
      {"betti-ambient", "betti numbers of R over the ambient polynomial ring"},
      {"quadrics", "random quadric complete intersection experiment"},
      {"paper", "pinned regression ledger"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&job, n = name] { job.command = n; });
    const bool ring_command = name != "quadrics" && name != "paper";
    if (ring_command) {
      sub->add_option("file", opt.file, "input file with ring/ideal/element statements, '-' for stdin");
      sub->add_option("-e,--expr", opt.expressions, "input statements given inline");
      sub->add_option("--order", opt.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
    }
    sub->add_option("--prime", job.prime, ring_command ? "work over F_p instead of the field of the ring" : "prime p");
    sub->add_option("--seed", job.seed, "master seed");
    sub->add_option("--trials", job.trials, "number of trials");
    sub->add_option("--hd-bound", job.hd_bound, "homological degree bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--deg-bound", opt.deg_bound, "internal degree bound")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", job.json, "structured output");
    sub->add_flag("--assert", job.assert_result, "exit with status 1 when the answer is negative");
    if (name == "quadrics") sub->add_option("--n", job.n, "number of variables and quadrics")->check(CLI::Range(1, 12));
    if (name == "ezd") sub->add_flag("--symbolic", job.symbolic, "factorization obstruction for linear ideals");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  auto fail = [&](const std::string& code_name, int code_value, const std::string& message, int exit) {
    err << "error[" << code_name << "]: " << message << '\n';
    if (job.json) {
      Json doc = header(job);
      doc["error"] = {{"code", code_name}, {"value", code_value}, {"message", message}};
      out << doc.dump(2) << '\n';
    }
    return exit;
  };

  try {
    job.order = parse_order(opt.order);
    const std::string text = read_input(opt);
    parse_input(text, job);
    Json doc = header(job);
    doc["seed"] = job.seed;
    Outcome outcome;
    std::ostream* live_text = nullptr;

    if (job.command == "quadrics" || job.command == "paper") {
      if (job.ring || job.ideal || !job.elements.empty())
        throw Error(ErrorCode::invalid_argument, "'" + job.command + "' takes no ring input");
      const std::uint32_t p = job.prime.value_or(101);
      doc["field"] = PrimeField(p).name();
      doc["prime"] = p;
      doc["order"] = to_string(job.order);
      doc["trials"] = job.trials;
      if (job.command == "quadrics") {
        outcome = cmd_quadrics(job);
      } else {
        if (!job.json) live_text = &out;
        outcome = cmd_paper(job, live_text);
      }
    } else {
      if (!job.ring) throw Error(ErrorCode::invalid_argument, "no ring statement in the input");
      with_field(job, [&](const auto& field) {
        using K = std::decay_t<decltype(field)>;
        doc["field"] = field.name();
        doc["prime"] = field.characteristic();
        doc["order"] = to_string(job.order);
        if (field.characteristic() == 2)
          doc["notes"] = Json::array({"characteristic 2: Hessian, quadratic dual and quadric experiment paths are unavailable"});
        const auto c = build_context<K>(job, field, job.command != "gb" && job.command != "dual");
        Json input;
        input["variables"] = c.poly->names();
        input["relations"] = strings(c.relations);
        if (!c.ideal.empty()) input["ideal"] = strings(c.ideal);
        if (!c.elements.empty()) input["elements"] = strings(c.elements);
        doc["input"] = input;
        if (job.command == "hilbert") outcome = cmd_hilbert(job, c);
        else if (job.command == "gb") outcome = cmd_gb(job, c);
        else if (job.command == "koszul") outcome = cmd_koszul(job, c);
        else if (job.command == "qci") outcome = cmd_qci(job, c);
        else if (job.command == "ezd") outcome = cmd_ezd(job, c, opt);
        else if (job.command == "dual") {
          Context<K> full = c;
          full.ring = QuotientRing<K>::build(c.poly, c.relations);
          outcome = cmd_dual(job, full);
        } else if (job.command == "resolve") outcome = cmd_resolve(job, c, opt);
        else outcome = cmd_betti_ambient(job, c);
      });
    }

    doc["result"] = outcome.result;
    if (job.json) {
      out << doc.dump(2) << '\n';
    } else if (job.command == "quadrics") {
      render_quadrics_text(doc, out);
    } else if (job.command == "paper") {
      out << doc["result"]["passed"].dump() << " of " << criterion_count << " criteria pass\n";
    } else {
      if (doc.contains("notes"))
        for (const auto& n : doc["notes"]) err << "note: " << n.get<std::string>() << '\n';
      render_text(doc, out, 0);
    }
    if (job.command == "paper") return outcome.negative ? exit_refuted : exit_ok;
    return job.assert_result && outcome.negative ? exit_refuted : exit_ok;
  } catch (const ParseError& e) {
    return fail(std::string(to_string(e.code())), static_cast<int>(e.code()), e.what(), exit_input_error);
  } catch (const Error& e) {
    return fail(std::string(to_string(e.code())), static_cast<int>(e.code()), e.what(), exit_code_for(e.code()));
  } catch (const std::exception& e) {
    return fail("internal", 0, e.what(), exit_internal);
  }
}

}  // namespace qci::cli
