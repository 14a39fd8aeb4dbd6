#include "tiw/code.hpp"

#include <cctype>
#include <sstream>

namespace tiw {

CodePtr code_true() {
  static const CodePtr t = std::make_shared<BorelCode>();
  return t;
}

CodePtr code_and_raw(std::vector<CodePtr> kids) {
  auto c = std::make_shared<BorelCode>();
  c->op = BorelCode::Op::And;
  c->kids = std::move(kids);
  return c;
}

CodePtr code_and(std::vector<CodePtr> kids) {
  std::vector<CodePtr> kept;
  for (auto& k : kids)
    if (k->op != BorelCode::Op::True) kept.push_back(std::move(k));
  if (kept.empty()) return code_true();
  if (kept.size() == 1) return kept.front();
  return code_and_raw(std::move(kept));
}

CodePtr code_or(std::vector<CodePtr> kids) {
  auto c = std::make_shared<BorelCode>();
  c->op = BorelCode::Op::Or;
  c->kids = std::move(kids);
  return c;
}

CodePtr code_not(CodePtr kid) {
  auto c = std::make_shared<BorelCode>();
  c->op = BorelCode::Op::Not;
  c->kids = {std::move(kid)};
  return c;
}

CodePtr code_bit(std::string point, int ordinal) {
  auto c = std::make_shared<BorelCode>();
  c->op = BorelCode::Op::Bit;
  c->point = std::move(point);
  c->ordinal = ordinal;
  return c;
}

CodePtr code_E(std::string point, FCodePtr cond) {
  if (!cond || cond->kind != FCode::Kind::element) throw Error("E atom needs an element-valued code");
  auto c = std::make_shared<BorelCode>();
  c->op = BorelCode::Op::E;
  c->point = std::move(point);
  c->cond = std::move(cond);
  return c;
}

FCodePtr fcode_const_element(std::string element) {
  auto f = std::make_shared<FCode>();
  f->kind = FCode::Kind::element;
  f->constant = true;
  f->coords = {{FCase{code_true(), std::move(element), 0}}};
  return f;
}

FCodePtr fcode_element(std::vector<FCase> cases) {
  auto f = std::make_shared<FCode>();
  f->kind = FCode::Kind::element;
  f->coords = {std::move(cases)};
  return f;
}

FCodePtr fcode_real(std::vector<std::vector<FCase>> coords, std::int64_t fallback) {
  auto f = std::make_shared<FCode>();
  f->kind = FCode::Kind::real;
  f->coords = std::move(coords);
  f->fallback = fallback;
  return f;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void print(std::ostream& os, const FCode& f);

void print(std::ostream& os, const BorelCode& c) {
  using Op = BorelCode::Op;
  switch (c.op) {
    case Op::True: os << "(true)"; return;
    case Op::Bit: os << "(bit " << c.point << ' ' << c.ordinal << ')'; return;
    case Op::E:
      os << "(E " << c.point << ' ';
      print(os, *c.cond);
      os << ')';
      return;
    case Op::And: os << "(and"; break;
    case Op::Or: os << "(or"; break;
    case Op::Not: os << "(not"; break;
  }
  for (const auto& k : c.kids) {
    os << ' ';
    print(os, *k);
  }
  os << ')';
}

void print(std::ostream& os, const FCode& f) {
  if (f.kind == FCode::Kind::element) {
    if (f.constant) {
      os << "(const " << quote(f.coords.at(0).at(0).element) << ')';
      return;
    }
    os << "(table";
    for (const auto& c : f.coords.at(0)) {
      os << " (case ";
      print(os, *c.when);
      os << ' ' << quote(c.element) << ')';
    }
    os << ')';
    return;
  }
  os << "(real";
  for (const auto& coord : f.coords) {
    os << " (coord";
    for (const auto& c : coord) {
      os << " (case ";
      print(os, *c.when);
      os << ' ' << c.value << ')';
    }
    os << ')';
  }
  os << " (default " << f.fallback << "))";
}

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  CodePtr code() {
    open();
    const std::string head = atom();
    CodePtr out;
    if (head == "true") {
      out = code_true();
    } else if (head == "and" || head == "or") {
      std::vector<CodePtr> kids;
      while (peek() == '(') kids.push_back(code());
      out = head == "and" ? code_and_raw(std::move(kids)) : code_or(std::move(kids));
    } else if (head == "not") {
      out = code_not(code());
    } else if (head == "bit") {
      std::string p = atom();
      out = code_bit(std::move(p), static_cast<int>(integer()));
    } else if (head == "E") {
      std::string p = atom();
      auto f = fcode();
      if (f->kind != FCode::Kind::element) fail("E atom needs an element-valued code");
      out = code_E(std::move(p), std::move(f));
    } else {
      fail("unknown code form '" + head + "'");
    }
    close();
    return out;
  }

  FCodePtr fcode() {
    open();
    const std::string head = atom();
    FCodePtr out;
    if (head == "const") {
      out = fcode_const_element(string());
    } else if (head == "table") {
      std::vector<FCase> cases;
      while (peek() == '(') {
        open();
        expect("case");
        CodePtr w = code();
        cases.push_back({std::move(w), string(), 0});
        close();
      }
      out = fcode_element(std::move(cases));
    } else if (head == "real") {
      std::vector<std::vector<FCase>> coords;
      std::int64_t fallback = 0;
      bool have_default = false;
      while (peek() == '(') {
        open();
        const std::string h = atom();
        if (h == "default") {
          fallback = integer();
          have_default = true;
          close();
          break;
        }
        if (h != "coord") fail("expected coord or default");
        std::vector<FCase> cases;
        while (peek() == '(') {
          open();
          expect("case");
          CodePtr w = code();
          cases.push_back({std::move(w), {}, integer()});
          close();
        }
        coords.push_back(std::move(cases));
        close();
      }
      if (!have_default) fail("real code needs a default");
      out = fcode_real(std::move(coords), fallback);
    } else {
      fail("unknown function form '" + head + "'");
    }
    close();
    return out;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("code parse error at offset " + std::to_string(i_) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void open() {
    if (peek() != '(') fail("expected '('");
    ++i_;
  }
  void close() {
    if (peek() != ')') fail("expected ')'");
    ++i_;
  }
  std::string atom() {
    skip();
    const std::size_t b = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != '"')
      ++i_;
    if (b == i_) fail("expected an atom");
    return s_.substr(b, i_ - b);
  }
  void expect(const char* word) {
    if (atom() != word) fail(std::string("expected '") + word + "'");
  }
  std::int64_t integer() {
    const std::string a = atom();
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(a, &used);
    } catch (const std::exception&) {
      fail("expected an integer");
    }
    if (used != a.size()) fail("expected an integer");
    return v;
  }
  std::string string() {
    if (peek() != '"') fail("expected a string");
    ++i_;
    std::string out;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
      out += s_[i_++];
    }
    if (i_ >= s_.size()) fail("unterminated string");
    ++i_;
    return out;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

int rank_of(const SimpleIteration& it, const std::string& label) { return it.order().rank_or_throw(label); }

std::uint64_t component(const TuplePoint& z, int x, const SimpleIteration& it) {
  if (static_cast<std::size_t>(x) >= z.values.size() || !z.values[x])
    throw Error("missing component " + it.order().label(x));
  return *z.values[x];
}

void collect(const SimpleIteration& it, const FCode& f, FreeComponents& out);

void collect(const SimpleIteration& it, const BorelCode& c, FreeComponents& out) {
  switch (c.op) {
    case BorelCode::Op::Bit: out.bits[rank_of(it, c.point)] |= std::uint64_t{1} << c.ordinal; break;
    case BorelCode::Op::E:
      out.s |= bit(rank_of(it, c.point));
      collect(it, *c.cond, out);
      break;
    default:
      for (const auto& k : c.kids) collect(it, *k, out);
  }
}

void collect(const SimpleIteration& it, const FCode& f, FreeComponents& out) {
  for (const auto& coord : f.coords)
    for (const auto& cs : coord) collect(it, *cs.when, out);
}

}  // namespace

std::string print_code(const BorelCode& c) {
  std::ostringstream os;
  print(os, c);
  return os.str();
}

std::string print_fcode(const FCode& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

CodePtr parse_code(const std::string& text) {
  Parser p(text);
  auto c = p.code();
  p.finish();
  return c;
}

FCodePtr parse_fcode(const std::string& text) {
  Parser p(text);
  auto f = p.fcode();
  p.finish();
  return f;
}

// ---------------------------------------------------------------------------
// Semantics

bool eval_code(const SimpleIteration& it, const BorelCode& c, const TuplePoint& z) {
  using Op = BorelCode::Op;
  switch (c.op) {
    case Op::True: return true;
    case Op::And:
      for (const auto& k : c.kids)
        if (!eval_code(it, *k, z)) return false;
      return true;
    case Op::Or:
      for (const auto& k : c.kids)
        if (eval_code(it, *k, z)) return true;
      return false;
    case Op::Not: return !eval_code(it, *c.kids.at(0), z);
    case Op::Bit: {
      const int x = rank_of(it, c.point);
      if (it.part(x).kind != Kind::C) throw Error("bit atom at a non-C point " + c.point);
      if (c.ordinal < 0 || c.ordinal >= it.part(x).gamma) throw Error("bit atom ordinal out of range at " + c.point);
      return (component(z, x, it) >> c.ordinal) & 1u;
    }
    case Op::E: {
      const int x = rank_of(it, c.point);
      const auto& model = it.part(x).model;
      if (it.part(x).kind == Kind::C || !model) throw Error("E atom at a point without a model: " + c.point);
      auto el = eval_element(it, *c.cond, z);
      if (!el) throw Error("ill-formed composition at " + c.point + ": the condition code is undecided");
      auto p = model->poset.find(*el);
      if (!p) throw Error("unknown condition '" + *el + "' at " + c.point);
      return model->E(static_cast<int>(component(z, x, it)), *p);
    }
  }
  return false;
}

std::optional<std::string> eval_element(const SimpleIteration& it, const FCode& f, const TuplePoint& z) {
  if (f.kind != FCode::Kind::element) throw Error("expected an element-valued code");
  const std::string* hit = nullptr;
  for (const auto& c : f.coords.at(0))
    if (eval_code(it, *c.when, z)) {
      if (hit) return std::nullopt;
      hit = &c.element;
    }
  if (!hit) return std::nullopt;
  return *hit;
}

RealValue eval_fcode(const SimpleIteration& it, const FCode& f, const TuplePoint& z) {
  if (f.kind != FCode::Kind::real) throw Error("expected a real-valued code");
  RealValue out;
  for (const auto& coord : f.coords) {
    int hits = 0;
    std::int64_t v = f.fallback;
    for (const auto& c : coord)
      if (eval_code(it, *c.when, z)) {
        ++hits;
        v = c.value;
      }
    if (hits != 1) {
      out.outside_d = true;
      v = f.fallback;
    }
    out.values.push_back(v);
  }
  return out;
}

FreeComponents free_components(const SimpleIteration& it, const BorelCode& c) {
  FreeComponents out;
  collect(it, c, out);
  return out;
}

FreeComponents free_components(const SimpleIteration& it, const FCode& f) {
  FreeComponents out;
  collect(it, f, out);
  return out;
}

bool fits(const FreeComponents& f, const TupleSpace& t) {
  if (!subset_of(f.s, t.hs)) return false;
  for (auto [x, b] : f.bits) {
    auto w = t.W.find(x);
    if (w == t.W.end() || (b & ~w->second) != 0) return false;
  }
  return true;
}

std::size_t code_size(const BorelCode& c) {
  std::size_t n = 1;
  for (const auto& k : c.kids) n += code_size(*k);
  if (c.cond)
    for (const auto& coord : c.cond->coords)
      for (const auto& cs : coord) n += code_size(*cs.when);
  return n;
}

Outcome outcome(const SimpleIteration& it, const BorelCode& c, const TuplePoint& z) {
  try {
    return eval_code(it, c, z) ? Outcome::yes : Outcome::no;
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("ill-formed composition", 0) == 0) return Outcome::ill_formed;
    throw;
  }
}

bool codes_equal(const SimpleIteration& it, const BorelCode& a, const BorelCode& b, const TupleSpace& t) {
  for (const auto& z : enumerate_tuple_space(it, t))
    if (outcome(it, a, z) != outcome(it, b, z)) return false;
  return true;
}

bool fcodes_equal(const SimpleIteration& it, const FCode& a, const FCode& b, const TupleSpace& t) {
  if (a.kind != b.kind) return false;
  for (const auto& z : enumerate_tuple_space(it, t)) {
    if (a.kind == FCode::Kind::element) {
      if (eval_element(it, a, z) != eval_element(it, b, z)) return false;
    } else if (eval_fcode(it, a, z) != eval_fcode(it, b, z)) {
      return false;
    }
  }
  return true;
}

}  // namespace tiw
