#include "tiw/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tiw/models.hpp"

namespace tiw {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) { throw InputError(where + ": " + msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::string> as_strings(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, where));
  return out;
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      bad(where, "unknown field '" + it.key() + "'");
}

EntryLiteral entry_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return {EntryLiteral::Kind::element, j.get<std::string>(), 0};
  if (j.is_number_integer()) return {EntryLiteral::Kind::ordinal, {}, j.get<std::int64_t>()};
  if (j.is_object() && j.size() == 1 && j.contains("table"))
    return {EntryLiteral::Kind::table, as_string(j.at("table"), where), 0};
  bad(where, "entry must be a string, an integer or {\"table\": label}");
}

json entry_to_json(const EntryLiteral& e) {
  switch (e.kind) {
    case EntryLiteral::Kind::element: return e.text;
    case EntryLiteral::Kind::ordinal: return e.ordinal;
    case EntryLiteral::Kind::table: return json{{"table", e.text}};
  }
  return nullptr;
}

ConditionLiteral condition_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "condition must be an object");
  ConditionLiteral out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), entry_from_json(it.value(), where));
  return out;
}

json condition_to_json(const ConditionLiteral& c) {
  json j = json::object();
  for (const auto& [k, e] : c) j[k] = entry_to_json(e);
  return j;
}

TableSpec table_from_json(const json& j, const std::string& where) {
  only_keys(j, {"label", "base", "antichain", "values"}, where);
  TableSpec t;
  if (j.contains("label")) t.label = as_string(j.at("label"), where);
  if (j.contains("base")) t.base = as_strings(j.at("base"), where);
  const json& ac = field(j, "antichain", where);
  const json& vs = field(j, "values", where);
  if (!ac.is_array() || !vs.is_array()) bad(where, "antichain and values must be arrays");
  for (const auto& c : ac) t.antichain.push_back(condition_from_json(c, where));
  for (const auto& v : vs) {
    if (v.is_string())
      t.values.emplace_back(v.get<std::string>());
    else
      t.values.emplace_back(as_int(v, where));
  }
  return t;
}

json table_to_json(const TableSpec& t) {
  json j = json::object();
  if (!t.label.empty()) j["label"] = t.label;
  if (!t.base.empty()) j["base"] = t.base;
  json ac = json::array();
  for (const auto& c : t.antichain) ac.push_back(condition_to_json(c));
  j["antichain"] = ac;
  json vs = json::array();
  for (const auto& v : t.values) std::visit([&](const auto& x) { vs.push_back(x); }, v);
  j["values"] = vs;
  return j;
}

WorkbenchDoc doc_from_json(const json& root) {
  only_keys(root, {"template", "models", "iteration", "names", "run"}, "document");
  WorkbenchDoc doc;

  const json& tj = field(root, "template", "document");
  only_keys(tj, {"points", "families"}, "template");
  doc.tmpl.points = as_strings(field(tj, "points", "template"), "template.points");
  const json& fj = field(tj, "families", "template");
  if (fj.is_string()) {
    if (fj.get<std::string>() != "full") bad("template.families", "expected \"full\" or an object");
    doc.tmpl.full = true;
  } else {
    if (!fj.is_object()) bad("template.families", "expected \"full\" or an object");
    for (auto it = fj.begin(); it != fj.end(); ++it) {
      const std::string where = "template.families." + it.key();
      if (!it.value().is_array()) bad(where, "expected an array of sets");
      auto& fam = doc.tmpl.families[it.key()];
      for (const auto& s : it.value()) fam.push_back(as_strings(s, where));
    }
  }

  if (root.contains("models")) {
    const json& mj = root.at("models");
    if (!mj.is_object()) bad("models", "expected an object");
    for (auto it = mj.begin(); it != mj.end(); ++it) {
      const std::string where = "models." + it.key();
      const json& m = it.value();
      only_keys(m, {"type", "k", "m", "filters", "elements", "leq", "top", "linked"}, where);
      ModelSpec s;
      s.name = it.key();
      s.type = as_string(field(m, "type", where), where);
      if (s.type == "cohen" || s.type == "ed") {
        s.k = static_cast<int>(as_int(field(m, "k", where), where));
        s.m = static_cast<int>(as_int(field(m, "m", where), where));
        if (m.contains("filters")) s.filters = as_string(m.at("filters"), where);
      } else if (s.type == "poset") {
        s.elements = as_strings(field(m, "elements", where), where);
        s.top = as_string(field(m, "top", where), where);
        if (m.contains("leq")) {
          if (!m.at("leq").is_array()) bad(where, "leq must be an array of pairs");
          for (const auto& pr : m.at("leq")) {
            auto p = as_strings(pr, where);
            if (p.size() != 2) bad(where, "leq entries are pairs [lower, upper]");
            s.leq.emplace_back(p[0], p[1]);
          }
        }
        if (m.contains("linked")) {
          if (!m.at("linked").is_array()) bad(where, "linked must be an array of blocks");
          for (const auto& b : m.at("linked")) s.linked.push_back(as_strings(b, where));
        }
      } else {
        bad(where, "unknown model type '" + s.type + "'");
      }
      doc.models.push_back(std::move(s));
    }
  }

  if (root.contains("iteration")) {
    const json& ij = root.at("iteration");
    if (!ij.is_object()) bad("iteration", "expected an object");
    for (auto it = ij.begin(); it != ij.end(); ++it) {
      const std::string where = "iteration." + it.key();
      const json& p = it.value();
      only_keys(p, {"kind", "model", "support", "gamma", "posets", "subposets", "qname", "tables"}, where);
      PointSpec s;
      s.point = it.key();
      s.kind = as_string(field(p, "kind", where), where);
      if (s.kind != "B" && s.kind != "R" && s.kind != "C") bad(where, "kind must be B, R or C");
      if (p.contains("model")) s.model = as_string(p.at("model"), where);
      if (p.contains("support")) s.support = as_strings(p.at("support"), where);
      if (p.contains("gamma")) s.gamma = static_cast<int>(as_int(p.at("gamma"), where));
      if (p.contains("posets")) s.posets = as_strings(p.at("posets"), where);
      if (p.contains("subposets")) {
        if (!p.at("subposets").is_array()) bad(where, "subposets must be an array");
        for (const auto& q : p.at("subposets")) {
          only_keys(q, {"name", "elements", "zq"}, where);
          SubposetSpec sp;
          sp.name = as_string(field(q, "name", where), where);
          if (q.contains("elements")) sp.elements = as_strings(q.at("elements"), where);
          if (q.contains("zq")) sp.zq = as_strings(q.at("zq"), where);
          s.subposets.push_back(std::move(sp));
        }
      }
      if (p.contains("qname")) s.qname = table_from_json(p.at("qname"), where + ".qname");
      if (p.contains("tables")) {
        if (!p.at("tables").is_array()) bad(where, "tables must be an array");
        for (const auto& t : p.at("tables")) s.tables.push_back(table_from_json(t, where + ".tables"));
      }
      doc.iteration.push_back(std::move(s));
    }
  }

  if (root.contains("names")) {
    const json& nj = root.at("names");
    if (!nj.is_array()) bad("names", "expected an array");
    for (const auto& n : nj) {
      only_keys(n, {"label", "coords"}, "names");
      NameSpec s;
      s.label = as_string(field(n, "label", "names"), "names");
      const json& cj = field(n, "coords", "names." + s.label);
      if (!cj.is_array()) bad("names." + s.label, "coords must be an array");
      for (const auto& c : cj) s.coords.push_back(table_from_json(c, "names." + s.label));
      doc.names.push_back(std::move(s));
    }
  }

  if (root.contains("run")) {
    const json& rj = root.at("run");
    only_keys(rj, {"checks", "max_conditions", "max_generics", "seed", "fault"}, "run");
    if (rj.contains("checks")) doc.run.checks = as_strings(rj.at("checks"), "run.checks");
    auto count = [&](const char* key, std::uint64_t& out) {
      if (!rj.contains(key)) return;
      const auto v = as_int(rj.at(key), std::string("run.") + key);
      if (v < 0) bad(std::string("run.") + key, "must be nonnegative");
      out = static_cast<std::uint64_t>(v);
    };
    count("max_conditions", doc.run.max_conditions);
    count("max_generics", doc.run.max_generics);
    count("seed", doc.run.seed);
    if (rj.contains("fault")) doc.run.fault = as_string(rj.at("fault"), "run.fault");
  }
  return doc;
}

json doc_to_json(const WorkbenchDoc& doc) {
  json root;
  json fam;
  if (doc.tmpl.full) {
    fam = "full";
  } else {
    fam = json::object();
    for (const auto& [k, v] : doc.tmpl.families) fam[k] = v;
  }
  root["template"] = {{"points", doc.tmpl.points}, {"families", fam}};

  json models = json::object();
  for (const auto& m : doc.models) {
    json j{{"type", m.type}};
    if (m.type == "poset") {
      j["elements"] = m.elements;
      j["top"] = m.top;
      if (!m.leq.empty()) {
        json l = json::array();
        for (const auto& [a, b] : m.leq) l.push_back({a, b});
        j["leq"] = l;
      }
      if (!m.linked.empty()) j["linked"] = m.linked;
    } else {
      j["k"] = m.k;
      j["m"] = m.m;
      if (m.filters != "by_value") j["filters"] = m.filters;
    }
    models[m.name] = j;
  }
  if (!doc.models.empty()) root["models"] = models;

  json iter = json::object();
  for (const auto& p : doc.iteration) {
    json j{{"kind", p.kind}};
    if (!p.model.empty()) j["model"] = p.model;
    if (!p.support.empty()) j["support"] = p.support;
    if (p.gamma != 0) j["gamma"] = p.gamma;
    if (!p.posets.empty()) j["posets"] = p.posets;
    if (!p.subposets.empty()) {
      json sps = json::array();
      for (const auto& q : p.subposets) {
        json s{{"name", q.name}};
        if (q.elements) s["elements"] = *q.elements;
        if (q.zq) s["zq"] = *q.zq;
        sps.push_back(s);
      }
      j["subposets"] = sps;
    }
    if (p.qname) j["qname"] = table_to_json(*p.qname);
    if (!p.tables.empty()) {
      json ts = json::array();
      for (const auto& t : p.tables) ts.push_back(table_to_json(t));
      j["tables"] = ts;
    }
    iter[p.point] = j;
  }
  if (!doc.iteration.empty()) root["iteration"] = iter;

  if (!doc.names.empty()) {
    json names = json::array();
    for (const auto& n : doc.names) {
      json cs = json::array();
      for (const auto& c : n.coords) cs.push_back(table_to_json(c));
      names.push_back({{"label", n.label}, {"coords", cs}});
    }
    root["names"] = names;
  }

  json run{{"max_conditions", doc.run.max_conditions}, {"max_generics", doc.run.max_generics}, {"seed", doc.run.seed}};
  if (!doc.run.checks.empty()) run["checks"] = doc.run.checks;
  if (!doc.run.fault.empty()) run["fault"] = doc.run.fault;
  root["run"] = run;
  return root;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Mask mask_of(const LinearOrder& order, const std::vector<std::string>& labels, const std::string& where) {
  Mask m = 0;
  for (const auto& l : labels) {
    auto r = order.rank(l);
    if (!r) bad(where, "unknown point '" + l + "'");
    m |= bit(*r);
  }
  return m;
}

template <class V, class F>
DecisionTable<V> resolve_table(const SimpleIteration& it, const TableSpec& t, const std::string& where, F&& value) {
  DecisionTable<V> out;
  out.base = mask_of(it.order(), t.base, where);
  if (t.antichain.size() != t.values.size()) bad(where, "antichain and values differ in length");
  for (const auto& c : t.antichain) {
    try {
      out.antichain.push_back(resolve_condition(it, c, false));
    } catch (const InputError& e) {
      bad(where, e.what());
    }
  }
  for (const auto& v : t.values) out.values.push_back(value(v));
  return out;
}

}  // namespace

WorkbenchDoc parse_document(const std::string& text) { return doc_from_json(parse_json(text)); }

WorkbenchDoc load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string print_document(const WorkbenchDoc& doc) { return doc_to_json(doc).dump(2) + "\n"; }

ConditionLiteral parse_condition_literal(const std::string& text) {
  return condition_from_json(parse_json(text), "condition");
}

std::string print_condition_literal(const ConditionLiteral& c) { return condition_to_json(c).dump(); }

std::variant<IndexedTemplate, std::vector<TemplateViolation>> build_template(const WorkbenchDoc& doc) {
  if (doc.tmpl.points.size() > static_cast<std::size_t>(kMaxPoints)) bad("template", "too many points");
  std::vector<std::string> sorted = doc.tmpl.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("template.points", "duplicate label");
  if (doc.tmpl.full) return full_powerset_template(doc.tmpl.points);
  LinearOrder order(doc.tmpl.points);
  for (const auto& [k, fam] : doc.tmpl.families) {
    if (!order.rank(k)) bad("template.families", "unknown point '" + k + "'");
    for (const auto& s : fam) mask_of(order, s, "template.families." + k);
  }
  return validate_template(order, doc.tmpl.families);
}

void build_models(const WorkbenchDoc& doc, Workbench& wb) {
  for (const auto& m : doc.models) {
    const std::string where = "models." + m.name;
    try {
      if (m.type == "cohen") {
        wb.models[m.name] = std::make_shared<BorelPosetModel>(cohen_model(m.k, m.m));
      } else if (m.type == "ed") {
        EdFilters f;
        if (m.filters == "by_value")
          f = EdFilters::by_value;
        else if (m.filters == "minimal_upsets")
          f = EdFilters::minimal_upsets;
        else
          bad(where, "unknown filters '" + m.filters + "'");
        wb.models[m.name] = std::make_shared<BorelPosetModel>(ed_model(m.k, m.m, f));
      } else {
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < m.elements.size(); ++i)
          if (!idx.emplace(m.elements[i], static_cast<int>(i)).second) bad(where, "duplicate element");
        auto at = [&](const std::string& l) {
          auto f = idx.find(l);
          if (f == idx.end()) bad(where, "unknown element '" + l + "'");
          return f->second;
        };
        std::vector<std::pair<int, int>> rel;
        for (const auto& [a, b] : m.leq) rel.emplace_back(at(a), at(b));
        auto sp = std::make_shared<SmallPoset>();
        sp->name = m.name;
        sp->poset = FinitePoset::from_relation(m.elements, rel, at(m.top));
        for (const auto& block : m.linked) {
          std::vector<int> b;
          for (const auto& l : block) b.push_back(at(l));
          sp->linked.push_back(std::move(b));
        }
        wb.posets[m.name] = sp;
      }
    } catch (const InputError&) {
      throw;
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }
}

Condition resolve_condition(const SimpleIteration& it, const ConditionLiteral& c, bool widened) {
  std::vector<std::pair<int, int>> entries;
  for (const auto& [label, e] : c) {
    auto r = it.order().rank(label);
    if (!r) bad("condition", "unknown point '" + label + "'");
    const int x = *r;
    const auto& part = it.part(x);
    std::optional<int> idx;
    switch (e.kind) {
      case EntryLiteral::Kind::element: {
        if (part.kind == Kind::C) bad("condition", "point " + label + " takes an ordinal");
        auto v = part.model->poset.find(e.text);
        if (!v) bad("condition", "unknown element '" + e.text + "' at " + label);
        idx = it.find_constant(x, *v);
        if (!idx) bad("condition", "'" + e.text + "' is not an admissible entry at " + label);
        break;
      }
      case EntryLiteral::Kind::ordinal:
        if (part.kind != Kind::C) bad("condition", "point " + label + " takes an element label");
        if (e.ordinal < 0 || e.ordinal >= part.gamma) bad("condition", "ordinal out of range at " + label);
        idx = it.find_constant(x, static_cast<int>(e.ordinal));
        break;
      case EntryLiteral::Kind::table:
        idx = it.find_table(x, e.text, widened);
        if (!idx) bad("condition", "unknown table '" + e.text + "' at " + label);
        break;
    }
    entries.emplace_back(x, *idx);
  }
  std::sort(entries.begin(), entries.end());
  return Condition{entries};
}

void build_iteration(const WorkbenchDoc& doc, IndexedTemplate tmpl, Workbench& wb, IterationOptions options) {
  const LinearOrder order = tmpl.order();
  std::map<std::string, const PointSpec*> specs;
  for (const auto& p : doc.iteration) {
    if (!order.rank(p.point)) bad("iteration", "unknown point '" + p.point + "'");
    specs[p.point] = &p;
  }

  auto model_of = [&](const PointSpec& p, const std::string& where) {
    auto f = wb.models.find(p.model);
    if (f == wb.models.end()) bad(where, "unknown model '" + p.model + "'");
    return f->second;
  };

  auto resolve = [&](const SimpleIteration& it, int x) {
    const std::string label = order.label(x);
    const std::string where = "iteration." + label;
    auto sf = specs.find(label);
    if (sf == specs.end()) bad("iteration", "no entry for point '" + label + "'");
    const PointSpec& p = *sf->second;
    IterandAssignment a;
    a.kind = p.kind == "B" ? Kind::B : p.kind == "R" ? Kind::R : Kind::C;
    a.support = mask_of(order, p.support, where);
    std::map<std::string, int> value_index;

    if (a.kind == Kind::C) {
      a.gamma = p.gamma;
      for (const auto& name : p.posets) {
        auto f = wb.posets.find(name);
        if (f == wb.posets.end()) bad(where, "unknown poset '" + name + "'");
        const FinitePoset& q = f->second->poset;
        for (int i = 0; i < q.size(); ++i)
          if (q.label(i) != std::to_string(i)) bad(where, "poset '" + name + "' must be labelled 0..gamma-1 in order");
        value_index[name] = static_cast<int>(a.posets.size());
        a.posets.push_back(*f->second);
      }
      if (a.posets.empty()) bad(where, "a C point needs at least one poset");
    } else {
      a.model = model_of(p, where);
      const FinitePoset& S = a.model->poset;
      for (const auto& sp : p.subposets) {
        if (a.kind != Kind::R) bad(where, "subposets are only allowed at R points");
        NiceSubposet q;
        q.name = sp.name;
        if (sp.elements) {
          for (const auto& l : *sp.elements) {
            auto v = S.find(l);
            if (!v) bad(where, "unknown element '" + l + "' in subposet " + sp.name);
            q.elements.push_back(*v);
          }
          std::sort(q.elements.begin(), q.elements.end());
          q.elements.erase(std::unique(q.elements.begin(), q.elements.end()), q.elements.end());
        } else {
          for (int v = 0; v < S.size(); ++v) q.elements.push_back(v);
        }
        if (sp.zq) {
          for (const auto& l : *sp.zq) {
            auto z = a.model->z_index(l);
            if (!z) bad(where, "unknown generic value '" + l + "' in subposet " + sp.name);
            q.zq.push_back(*z);
          }
        } else {
          for (int z = 0; z < a.model->z_size(); ++z) q.zq.push_back(z);
        }
        value_index[sp.name] = static_cast<int>(a.subposets.size());
        a.subposets.push_back(std::move(q));
      }
      if (a.kind == Kind::R && a.subposets.empty()) bad(where, "an R point needs at least one subposet");
    }

    if (a.kind != Kind::B) {
      if (p.qname) {
        a.qname = resolve_table<int>(it, *p.qname, where + ".qname", [&](const Value& v) {
          const auto* s = std::get_if<std::string>(&v);
          if (!s || !value_index.count(*s)) bad(where + ".qname", "values must name a declared poset");
          return value_index.at(*s);
        });
      } else {
        a.qname = {0, {Condition{}}, {0}};
      }
    } else if (p.qname) {
      bad(where, "B points take no iterand name");
    }

    for (const auto& t : p.tables) {
      if (t.label.empty()) bad(where, "tables need a label");
      EntryName e;
      e.label = t.label;
      e.origin = EntryName::Origin::declared;
      e.table = resolve_table<int>(it, t, where + ".tables." + t.label, [&](const Value& v) -> int {
        if (a.kind == Kind::C) {
          const auto* n = std::get_if<std::int64_t>(&v);
          if (!n) bad(where, "table values at a C point are ordinals");
          return static_cast<int>(*n);
        }
        const auto* s = std::get_if<std::string>(&v);
        if (!s) bad(where, "table values are element labels");
        auto idx = a.model->poset.find(*s);
        if (!idx) bad(where, "unknown element '" + *s + "'");
        return *idx;
      });
      a.declared.push_back(std::move(e));
    }
    return a;
  };

  wb.it = std::make_unique<SimpleIteration>(std::move(tmpl), resolve, options);

  wb.names.clear();
  for (const auto& n : doc.names) {
    IterRealName name;
    name.label = n.label;
    for (const auto& c : n.coords)
      name.coords.push_back(resolve_table<std::int64_t>(*wb.it, c, "names." + n.label, [&](const Value& v) {
        const auto* i = std::get_if<std::int64_t>(&v);
        if (!i) bad("names." + n.label, "name values are integers");
        return *i;
      }));
    wb.names.push_back(std::move(name));
  }
}

}  // namespace tiw
