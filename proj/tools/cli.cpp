#include "cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiw/document.hpp"
#include "tiw/verify.hpp"

namespace tiw::cli {

namespace {

struct Options {
  std::string doc;
  std::string name;
  std::string cond;
  std::string report;
  std::string format = "text";
  std::optional<std::uint64_t> max_conditions;
  std::optional<std::uint64_t> seed;
};

struct Loaded {
  WorkbenchDoc doc;
  Workbench wb;
  std::vector<std::string> problems;
};

// Parses and builds everything; semantic problems are collected, input and
// resource errors propagate.
Loaded load(const Options& o) {
  Loaded l;
  l.doc = load_document(o.doc);
  if (o.max_conditions) l.doc.run.max_conditions = *o.max_conditions;
  if (o.seed) l.doc.run.seed = *o.seed;

  auto t = build_template(l.doc);
  if (auto* v = std::get_if<std::vector<TemplateViolation>>(&t)) {
    for (const auto& x : *v) l.problems.push_back(x.message);
    return l;
  }
  build_models(l.doc, l.wb);
  for (const auto& [name, m] : l.wb.models)
    for (const auto& v : validate_borel_model(*m)) l.problems.push_back("model " + name + ": " + v.message);
  for (const auto& [name, p] : l.wb.posets)
    if (auto e = check_linked_partition(p->poset, p->linked, false))
      l.problems.push_back("poset " + name + ": " + *e);

  IterationOptions io;
  io.max_conditions = l.doc.run.max_conditions;
  io.max_generics = l.doc.run.max_generics;
  try {
    build_iteration(l.doc, std::move(std::get<IndexedTemplate>(t)), l.wb, io);
    for (const auto& x : l.wb.names) validate_iter_name(*l.wb.it, x);
  } catch (const InputError&) {
    throw;
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    l.problems.push_back(e.what());
  }
  return l;
}

int report_problems(const Loaded& l, std::ostream& err) {
  for (const auto& p : l.problems) err << p << '\n';
  return l.problems.empty() ? ok : check_failed;
}

SynthOptions synth_options(const WorkbenchDoc& doc) {
  SynthOptions s;
  s.flip_bits = doc.run.fault == "flip-bit";
  return s;
}

nlohmann::json space_json(const SimpleIteration& it, const TupleSpace& t) {
  nlohmann::json j;
  std::vector<std::string> s, c;
  for (int x : points_of(t.hs)) s.push_back(it.order().label(x));
  for (int x : points_of(t.hc)) c.push_back(it.order().label(x));
  j["S"] = s;
  j["C"] = c;
  nlohmann::json w = nlohmann::json::object();
  for (auto [x, bits] : t.W) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
      if ((bits >> i) & 1u) v.push_back(i);
    w[it.order().label(x)] = v;
  }
  j["W"] = w;
  j["text"] = format_tuple_space(it, t);
  return j;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o);
  const int rc = report_problems(l, err);
  if (rc == ok) out << "ok: " << o.doc << '\n';
  return rc;
}

int cmd_synth(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.cond.empty() == o.name.empty()) {
    err << "synth needs exactly one of --cond and --name\n";
    return bad_input;
  }
  Loaded l = load(o);
  if (int rc = report_problems(l, err); rc != ok) return rc;
  const SimpleIteration& it = *l.wb.it;
  const SynthOptions so = synth_options(l.doc);
  std::string code;
  TupleSpace t;
  if (!o.cond.empty()) {
    const ConditionLiteral lit = parse_condition_literal(o.cond);
    Condition p;
    try {
      p = resolve_condition(it, lit);
    } catch (const InputError& e) {
      err << e.what() << '\n';
      return check_failed;
    }
    if (!it.member(it.all(), p)) {
      err << it.format(p) << " is not a condition of P*" << it.order().format(it.all()) << '\n';
      return check_failed;
    }
    code = print_code(*synth_E(it, it.all(), p, so));
    t = tuple_space(it, history_of_condition(it, it.all(), p));
  } else {
    auto f = std::find_if(l.wb.names.begin(), l.wb.names.end(), [&](const auto& n) { return n.label == o.name; });
    if (f == l.wb.names.end()) {
      err << "unknown name '" << o.name << "'\n";
      return check_failed;
    }
    code = print_fcode(*synth_F(it, it.all(), *f, so));
    t = tuple_space(it, history_of_name(it, it.all(), *f));
  }
  if (o.format == "structured") {
    nlohmann::json j{{"code", code}, {"tuple_space", space_json(it, t)}};
    out << j.dump(2) << '\n';
  } else {
    out << code << '\n' << format_tuple_space(it, t) << '\n';
  }
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o);
  if (int rc = report_problems(l, err); rc != ok) return rc;
  VerifyOptions vo;
  vo.synth = synth_options(l.doc);
  vo.seed = l.doc.run.seed;
  const Report r = verify_checks(*l.wb.it, l.wb.names, l.doc.run.checks, vo);
  const std::string text = o.format == "structured" ? report_json(r) : report_text(r);
  if (o.report.empty()) {
    out << text;
  } else {
    std::ofstream f(o.report);
    if (!f) {
      err << "cannot write " << o.report << '\n';
      return bad_input;
    }
    f << text;
    out << (r.pass() ? "PASS" : "FAIL") << ": " << r.failure_count << " failures, " << r.checked() << " checked\n";
  }
  return r.pass() ? ok : check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"template iteration workbench"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--doc", o.doc, "workbench document")->required();
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    s->add_option("--max-conditions", o.max_conditions, "cap on conditions per poset");
    s->add_option("--seed", o.seed, "sampling seed");
  };
  auto* validate = app.add_subcommand("validate", "check template, models and iteration");
  common(validate);
  auto* synth = app.add_subcommand("synth", "print the code for a condition or name");
  common(synth);
  synth->add_option("--name", o.name, "registered name label");
  synth->add_option("--cond", o.cond, "condition literal");
  auto* verify = app.add_subcommand("verify", "run the registered checks");
  common(verify);
  verify->add_option("--report", o.report, "report path");

  std::vector<char*> argv;
  std::vector<std::string> copy = args;
  for (auto& a : copy) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return bad_input;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (synth->parsed()) return cmd_synth(o, out, err);
    return cmd_verify(o, out, err);
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return bad_input;
  } catch (const ResourceError& e) {
    err << e.what() << '\n';
    return resource_cap;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return check_failed;
  }
}

}  // namespace tiw::cli
