#include "rootclosure/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rootclosure/corpus.hpp"
#include "rootclosure/errors.hpp"
#include "rootclosure/monomial_oracle.hpp"
#include "rootclosure/script.hpp"

namespace rootclosure {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  BudgetOverrides overrides;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string script_file;
  std::string element;
  std::string ideal;
  std::string kind;
  unsigned level = 1;
  unsigned max_degree = 3;
  std::string case_id = "all";
  std::string cert_file;
};

struct Outcome {
  Json json;
  std::string text;
  int code = kExitOk;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

class Session {
 public:
  Session(const Options& o, SessionScript script) : script_(std::move(script)) {
    budget_ = o.overrides.apply(SearchBudget{});
    budget_.validate();
  }

  const IdealDecl& ideal(const std::string& name) const {
    if (name.empty()) throw InputError("--ideal is required");
    if (!script_.ideals.count(name)) throw InputError("unknown ideal '" + name + "'");
    return script_.ideals.at(name);
  }

  Polynomial element(const std::string& text, const IdealDecl& d) const {
    if (text.empty()) throw InputError("--element is required");
    return script_.ring(d.ring)->reduce(script_.parse_element(text, d.ring));
  }

  Json inputs(const IdealDecl& d, const std::optional<Polynomial>& x = std::nullopt) const {
    Json j{{"ring", d.ideal.ring()->description()}, {"ideal", polys_json(d.ideal.generators())}};
    if (x) j["element"] = x->to_string();
    return j;
  }

  Outcome groebner(const std::string& ideal_name) const {
    const IdealDecl& d = ideal(ideal_name);
    std::vector<Polynomial> source = d.ideal.generators();
    const auto& rel = d.ideal.ring()->relations();
    source.insert(source.end(), rel.begin(), rel.end());
    const GroebnerBasis& gb = d.ideal.basis();
    Outcome out;
    out.json = envelope("groebner", inputs(d), groebner_json(gb, source), {}, true, budget_);
    out.text = "basis " + to_string(gb.generators()) + "\n";
    return out;
  }

  Outcome member(const std::string& x_text, const std::string& ideal_name) const {
    const IdealDecl& d = ideal(ideal_name);
    const Polynomial x = element(x_text, d);
    const bool in = d.ideal.contains(x);
    const Polynomial nf = d.ideal.normal_form(x);
    Outcome out;
    out.json = envelope("member", inputs(d, x), Json{{"member", in}, {"normal_form", nf.to_string()}}, {}, true,
                        budget_);
    out.text = std::string(in ? "member" : "not a member") + " (normal form " + nf.to_string() + ")\n";
    return out;
  }

  Outcome power_member(const std::string& x_text, const std::string& ideal_name) const {
    const IdealDecl& d = ideal(ideal_name);
    const Polynomial x = element(x_text, d);
    const RootSearchResult r = find_root_certificate(x, d.ideal, budget_);
    std::vector<RootCertificate> certs;
    if (r.certificate) certs.push_back(*r.certificate);
    Outcome out;
    out.json = envelope("power-member", inputs(d, x), search_result_json(r), certs,
                        r.status != RootSearchResult::Status::NotFoundWithinBudget, budget_);
    out.text = to_string(r.status);
    if (r.certificate) out.text += ", n = " + std::to_string(r.certificate->exponent);
    if (!r.tag.empty()) out.text += " (" + r.tag + ")";
    if (r.status == RootSearchResult::Status::NotFoundWithinBudget) {
      out.text += " (tried n <= " + std::to_string(r.exponents_tried) + ")";
    }
    out.text += "\n";
    return out;
  }

  Outcome radical_member(const std::string& x_text, const std::string& ideal_name) const {
    const IdealDecl& d = ideal(ideal_name);
    const Polynomial x = element(x_text, d);
    const RadicalMembership r = rootclosure::radical_member(x, d.ideal);
    Outcome out;
    out.json = envelope("radical-member", inputs(d, x),
                        Json{{"in_radical", r.in_radical},
                             {"exponent", r.exponent ? Json(*r.exponent) : Json(nullptr)},
                             {"by_auxiliary_variable", r.by_auxiliary_variable}},
                        {}, true, budget_);
    out.text = std::string(r.in_radical ? "in the radical" : "not in the radical") + "\n";
    return out;
  }

  Outcome closure(const std::string& kind, const std::string& ideal_name, unsigned level) const {
    const IdealDecl& d = ideal(ideal_name);
    ClosureApproximation a = kind == "sharp"   ? (level > 1 ? sharp_tower(d.ideal, level, budget_)
                                                            : sharp_approx(d.ideal, budget_))
                             : kind == "boxed" ? boxed_sharp_approx(d.ideal, budget_)
                                               : natural_approx(d.ideal, budget_);
    Outcome out;
    Json in = inputs(d);
    in["kind"] = kind;
    in["level"] = level;
    out.json = envelope("closure", std::move(in), approximation_json(a), all_certificates(a), a.exact, budget_);
    out.text = kind + ": " + a.result.to_string() + (a.exact ? " [exact]" : " [within budget]") + ", " +
               std::to_string(a.certified.size()) + " certified candidates (" + a.strategy + ")\n";
    return out;
  }

  Outcome monomial_closure(const std::string& ideal_name) const {
    const IdealDecl& d = ideal(ideal_name);
    const Ideal c = monomial_integral_closure(d.ideal);
    Outcome out;
    out.json = envelope("monomial-closure", inputs(d), Json{{"closure", polys_json(c.generators())}}, {}, true,
                        budget_);
    out.text = "closure " + c.to_string() + "\n";
    return out;
  }

  Outcome rees_check(const std::string& ideal_name, unsigned max_degree) const {
    const IdealDecl& d = ideal(ideal_name);
    const Theorem31Report r = theorem31_check(d.ideal, max_degree, budget_);
    bool exact = true;
    for (std::size_t n = 1; n < r.pieces.size(); ++n) {
      exact = exact && r.pieces[n].provenance == ReesProvenance::MonomialExact;
    }
    Outcome out;
    Json in = inputs(d);
    in["max_degree"] = max_degree;
    out.json = envelope("rees-check", std::move(in), theorem31_json(r), {}, exact, budget_);
    std::ostringstream t;
    for (const auto& deg : r.degrees) {
      t << "degree " << deg.degree << ": " << (deg.pass ? "pass" : "FAIL") << ", " << deg.lifted << "/"
        << deg.generators << " generators lifted, piece " << r.pieces[deg.degree].piece.to_string() << "\n";
      for (const auto& f : deg.failures) t << "  " << f << "\n";
    }
    t << (r.pass ? "pass" : "FAIL") << " (" << r.scope << ")\n";
    out.text = t.str();
    out.code = r.pass ? kExitOk : kExitCheckFailed;
    return out;
  }

  Outcome run_script() const {
    Outcome out;
    out.json = Json::array();
    for (const auto& c : script_.commands) {
      const auto& a = c.args;
      Outcome one;
      if (c.name == "groebner") one = groebner(a[0]);
      if (c.name == "member") one = member(a[0], a[1]);
      if (c.name == "power_member") one = power_member(a[0], a[1]);
      if (c.name == "radical_member") one = radical_member(a[0], a[1]);
      if (c.name == "sharp") one = closure("sharp", a[0], 1);
      if (c.name == "tower") one = closure("sharp", a[0], static_cast<unsigned>(std::stoul(a[1])));
      if (c.name == "boxed") one = closure("boxed", a[0], 1);
      if (c.name == "natural") one = closure("natural", a[0], 1);
      if (c.name == "monomial_closure") one = monomial_closure(a[0]);
      if (c.name == "rees_check") one = rees_check(a[0], static_cast<unsigned>(std::stoul(a[1])));
      out.json.push_back(std::move(one.json));
      out.text += "[" + std::to_string(c.line) + "] " + c.name + ": " + one.text;
      out.code = std::max(out.code, one.code);
    }
    return out;
  }

 private:
  SessionScript script_;
  SearchBudget budget_;
};

Outcome cert_verify(const Options& o, std::istream& in) {
  std::string text;
  if (o.cert_file.empty() || o.cert_file == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  } else {
    text = read_file(o.cert_file);
  }
  const Json j = Json::parse(text);
  const std::vector<std::string> problems = verify_certificates_json(j);
  std::size_t total = 1;
  if (j.is_array()) total = j.size();
  if (j.is_object() && j.contains("certificates") && j["certificates"].is_array()) total = j["certificates"].size();
  Outcome out;
  out.json = envelope("cert verify", Json{{"source", o.cert_file.empty() ? "stdin" : o.cert_file}},
                      Json{{"certificates", total}, {"rejected", problems}}, {}, true,
                      o.overrides.apply(SearchBudget{}));
  out.text = std::to_string(total - problems.size()) + "/" + std::to_string(total) + " certificates verified\n";
  for (const auto& p : problems) out.text += "rejected " + p + "\n";
  out.code = problems.empty() && total > 0 ? kExitOk : kExitCheckFailed;
  return out;
}

Outcome repro(const Options& o) {
  const auto ids = corpus_case_ids();
  if (o.case_id != "all" && std::find(ids.begin(), ids.end(), o.case_id) == ids.end()) {
    throw InputError("unknown case '" + o.case_id + "'");
  }
  const std::vector<CorpusReport> reports = run_corpus(o.case_id, o.overrides, o.seed);
  Json cases = Json::array();
  std::vector<RootCertificate> certs;
  bool passed = true, exact = true;
  std::ostringstream t;
  for (const auto& r : reports) {
    cases.push_back(corpus_report_json(r));
    certs.insert(certs.end(), r.certificates.begin(), r.certificates.end());
    passed = passed && r.passed;
    t << r.id << ": " << (r.passed ? "pass" : "FAIL") << "\n";
    for (const auto& a : r.assertions) {
      exact = exact && a.provenance != "budget";
      t << "  " << (a.passed ? "ok  " : "FAIL") << " " << a.id << " [" << a.provenance << "] " << a.anchor;
      if (!a.detail.empty()) t << " -- " << a.detail;
      t << "\n";
    }
  }
  Outcome out;
  out.json = envelope("repro", Json{{"case", o.case_id}, {"seed", o.seed}},
                      Json{{"cases", std::move(cases)}, {"passed", passed}}, certs, exact,
                      o.overrides.apply(SearchBudget{}));
  out.text = t.str();
  out.code = passed ? kExitOk : kExitCheckFailed;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Root-closure workbench"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--budget-n", o.overrides.max_exponent, "largest exponent n searched")->check(CLI::Range(1, 4096));
  app.add_option("--budget-degree", o.overrides.max_degree, "largest candidate degree")->check(CLI::Range(1, 64));
  app.add_option("--budget-tower", o.overrides.max_tower, "deepest sharp tower level")->check(CLI::Range(1, 64));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for randomized cases");
  app.add_option("--script", o.script_file, "script file with ring, ideal and let declarations");
  app.add_option("--element", o.element, "element text, parsed in the ideal's ring");
  app.add_option("--ideal", o.ideal, "ideal name from the script");

  auto* groebner = app.add_subcommand("groebner", "Groebner basis of an ideal plus the ring relations");
  auto* member = app.add_subcommand("member", "ideal membership by normal form");
  auto* power = app.add_subcommand("power-member", "search for x^n in I^n");
  auto* closure = app.add_subcommand("closure", "sharp, boxed or natural approximation");
  closure->add_option("kind", o.kind)->required()->check(CLI::IsMember({"sharp", "boxed", "natural"}));
  closure->add_option("--level", o.level, "sharp tower level")->check(CLI::Range(1, 64));
  auto* monomial = app.add_subcommand("monomial-closure", "integral closure of a monomial ideal");
  auto* rees = app.add_subcommand("rees-check", "graded-piece check of the Rees algebra");
  rees->add_option("--max-degree", o.max_degree, "largest degree checked")->check(CLI::Range(0, 16));
  auto* cert = app.add_subcommand("cert", "certificate tools");
  cert->require_subcommand(1);
  cert->fallthrough();
  auto* verify = cert->add_subcommand("verify", "verify certificates from a file or stdin");
  verify->add_option("file", o.cert_file, "JSON file, '-' or omitted for stdin");
  auto* repro_cmd = app.add_subcommand("repro", "run corpus cases");
  repro_cmd->add_option("case", o.case_id, "case id or all");
  auto* run = app.add_subcommand("run", "execute the commands of a script");
  for (auto* s : {groebner, member, power, closure, monomial, rees, verify, repro_cmd, run}) s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Outcome result;
    if (*verify) {
      result = cert_verify(o, in);
    } else if (*repro_cmd) {
      result = repro(o);
    } else {
      SessionScript script = o.script_file.empty() ? SessionScript{} : parse_script(read_file(o.script_file));
      const Session session(o, std::move(script));
      if (*groebner) result = session.groebner(o.ideal);
      if (*member) result = session.member(o.element, o.ideal);
      if (*power) result = session.power_member(o.element, o.ideal);
      if (*closure) result = session.closure(o.kind, o.ideal, o.level);
      if (*monomial) result = session.monomial_closure(o.ideal);
      if (*rees) result = session.rees_check(o.ideal, o.max_degree);
      if (*run) {
        if (o.script_file.empty()) throw InputError("run needs --script");
        result = session.run_script();
      }
    }
    out << (o.format == "json" ? dump(result.json) : result.text);
    return result.code;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidCertificateError& e) {
    err << "invalid certificate: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const AlgebraError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace rootclosure
