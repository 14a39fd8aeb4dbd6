#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tiw/iteration.hpp"

namespace tiw {

/// Malformed or inconsistent document (exit status 2 in the CLI).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Entry of a condition literal: a model element label, an ordinal, or a
/// reference to a named table.
struct EntryLiteral {
  enum class Kind { element, ordinal, table };
  Kind kind = Kind::element;
  std::string text;
  std::int64_t ordinal = 0;
  bool operator==(const EntryLiteral&) const = default;
};

using ConditionLiteral = std::vector<std::pair<std::string, EntryLiteral>>;
using Value = std::variant<std::string, std::int64_t>;

struct TableSpec {
  std::string label;
  std::vector<std::string> base;
  std::vector<ConditionLiteral> antichain;
  std::vector<Value> values;
  bool operator==(const TableSpec&) const = default;
};

struct ModelSpec {
  std::string name;
  std::string type;  // cohen, ed, poset
  int k = 0, m = 0;
  std::string filters = "by_value";  // ed: by_value | minimal_upsets
  std::vector<std::string> elements;  // poset
  std::vector<std::pair<std::string, std::string>> leq;
  std::string top;
  std::vector<std::vector<std::string>> linked;
  bool operator==(const ModelSpec&) const = default;
};

struct SubposetSpec {
  std::string name;
  std::optional<std::vector<std::string>> elements;  // nullopt: every element
  std::optional<std::vector<std::string>> zq;        // nullopt: all of Z
  bool operator==(const SubposetSpec&) const = default;
};

struct PointSpec {
  std::string point;
  std::string kind;  // B, R, C
  std::string model;
  std::vector<std::string> support;
  int gamma = 0;
  std::vector<std::string> posets;
  std::vector<SubposetSpec> subposets;
  std::optional<TableSpec> qname;
  std::vector<TableSpec> tables;
  bool operator==(const PointSpec&) const = default;
};

struct NameSpec {
  std::string label;
  std::vector<TableSpec> coords;
  bool operator==(const NameSpec&) const = default;
};

struct RunSpec {
  std::vector<std::string> checks;  // empty: every check
  std::uint64_t max_conditions = 100000;
  std::uint64_t max_generics = 200000;
  std::uint64_t seed = 1;
  std::string fault;  // test-only: "flip-bit", "non-nice"
  bool operator==(const RunSpec&) const = default;
};

struct TemplateSpec {
  std::vector<std::string> points;
  bool full = false;  // every subset of the past
  RawFamilies families;
  bool operator==(const TemplateSpec&) const = default;
};

struct WorkbenchDoc {
  TemplateSpec tmpl;
  std::vector<ModelSpec> models;
  std::vector<PointSpec> iteration;
  std::vector<NameSpec> names;
  RunSpec run;
  bool operator==(const WorkbenchDoc&) const = default;
};

/// Throws InputError with line and column on malformed text.
WorkbenchDoc parse_document(const std::string& text);
WorkbenchDoc load_document(const std::string& path);
std::string print_document(const WorkbenchDoc& doc);

ConditionLiteral parse_condition_literal(const std::string& text);
std::string print_condition_literal(const ConditionLiteral& c);

/// Constructed objects of a document.
struct Workbench {
  std::map<std::string, std::shared_ptr<const BorelPosetModel>> models;
  std::map<std::string, std::shared_ptr<const SmallPoset>> posets;
  std::unique_ptr<SimpleIteration> it;
  std::vector<IterRealName> names;
};

std::variant<IndexedTemplate, std::vector<TemplateViolation>> build_template(const WorkbenchDoc& doc);
/// Models and small posets; throws InputError on bad parameters.
void build_models(const WorkbenchDoc& doc, Workbench& wb);
/// Needs a valid template and the models.  Throws InputError for unknown
/// labels; ResourceError when a cap is hit.
void build_iteration(const WorkbenchDoc& doc, IndexedTemplate tmpl, Workbench& wb, IterationOptions options);

Condition resolve_condition(const SimpleIteration& it, const ConditionLiteral& c, bool widened = true);

}  // namespace tiw
