#pragma once

#include <map>
#include <memory>
#include <string>

#include "tiw/document.hpp"

namespace tiw::test {

inline std::string fixture(const std::string& name) { return std::string(TIW_FIXTURE_DIR) + "/" + name; }

struct Loaded {
  WorkbenchDoc doc;
  Workbench wb;
  const SimpleIteration& it() const { return *wb.it; }
};

/// Builds a fixture document end to end; throws on any problem.
inline std::unique_ptr<Loaded> load(const std::string& name) {
  auto l = std::make_unique<Loaded>();
  l->doc = load_document(fixture(name));
  auto t = build_template(l->doc);
  if (!std::holds_alternative<IndexedTemplate>(t)) throw Error("fixture template invalid: " + name);
  build_models(l->doc, l->wb);
  IterationOptions io;
  io.max_conditions = l->doc.run.max_conditions;
  io.max_generics = l->doc.run.max_generics;
  build_iteration(l->doc, std::move(std::get<IndexedTemplate>(t)), l->wb, io);
  return l;
}

/// Shared, lazily built copy of a fixture.
inline const Loaded& shared(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Loaded>> cache;
  auto& slot = cache[name];
  if (!slot) slot = load(name);
  return *slot;
}

inline Condition cond(const SimpleIteration& it, const std::string& literal) {
  return resolve_condition(it, parse_condition_literal(literal), false);
}

inline Mask set_of(const SimpleIteration& it, std::initializer_list<const char*> labels) {
  Mask m = 0;
  for (const char* l : labels) m |= bit(it.order().rank_or_throw(l));
  return m;
}

}  // namespace tiw::test
