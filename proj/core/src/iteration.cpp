#include "tiw/iteration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tiw {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::B: return 'B';
    case Kind::R: return 'R';
    case Kind::C: return 'C';
  }
  return '?';
}

Mask Condition::domain() const {
  Mask m = 0;
  for (auto [x, e] : entries) m |= bit(x);
  return m;
}

Condition Condition::below(int x) const {
  Condition out;
  for (auto pe : entries)
    if (pe.first < x) out.entries.push_back(pe);
  return out;
}

std::optional<int> Condition::entry_at(int x) const {
  for (auto [y, e] : entries)
    if (y == x) return e;
  return std::nullopt;
}

Condition Condition::with(int x, int entry) const {
  if (x <= max_point()) throw Error("condition entries must be appended in increasing point order");
  Condition out = *this;
  out.entries.emplace_back(x, entry);
  return out;
}

std::optional<int> BuiltPoset::find(const Condition& p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Evaluator

Evaluator::Evaluator(const SimpleIteration& it, Mask ambient)
    : it_(it), ambient_(ambient), generics_(&it.generics(ambient)) {}

const std::vector<int>& Evaluator::entry_values(int x, int e) {
  auto key = std::make_pair(x, e);
  if (auto f = value_cache_.find(key); f != value_cache_.end()) return f->second;
  const auto& table = it_.catalog(x, true).at(e).table;
  std::vector<int> values(size(), -1);
  std::vector<const Bits*> member_bits;
  for (const auto& q : table.antichain) member_bits.push_back(&condition_bits(q));
  for (std::size_t g = 0; g < size(); ++g) {
    int hit = -1;
    for (std::size_t i = 0; i < member_bits.size(); ++i)
      if (member_bits[i]->test(g)) {
        if (hit >= 0) throw Error("entry " + it_.format_entry(x, e) + ": two antichain members in one generic filter");
        hit = static_cast<int>(i);
      }
    if (hit < 0) throw Error("entry " + it_.format_entry(x, e) + ": antichain not met by a generic filter");
    values[g] = table.values[hit];
  }
  return value_cache_.emplace(key, std::move(values)).first->second;
}

const Bits& Evaluator::condition_bits(const Condition& p) {
  if (auto f = cond_cache_.find(p); f != cond_cache_.end()) return f->second;
  Bits bits(size());
  if (p.empty()) {
    bits.set();
  } else {
    const int x = p.max_point();
    if (!contains(ambient_, x))
      throw Error("condition " + it_.format(p) + " lies outside the ambient set " + it_.order().format(ambient_));
    const int e = p.entries.back().second;
    bits = condition_bits(p.below(x));
    const auto& values = entry_values(x, e);
    for (auto g = bits.find_first(); g != Bits::npos; g = bits.find_next(g))
      if (!it_.coord_contains(x, (*generics_)[g].coords[x], values[g])) bits.reset(g);
  }
  return cond_cache_.emplace(p, std::move(bits)).first->second;
}

bool Evaluator::forces_equal(const Condition& lower, int x, int e1, int e2) {
  const Bits& bits = condition_bits(lower);
  const auto& v1 = entry_values(x, e1);
  const auto& v2 = entry_values(x, e2);
  for (auto g = bits.find_first(); g != Bits::npos; g = bits.find_next(g))
    if (v1[g] != v2[g]) return false;
  return true;
}

bool Evaluator::leq(const Condition& q, const Condition& p) {
  if (!subset_of(p.domain(), q.domain())) return false;
  for (auto [x, ep] : p.entries) {
    const int eq = *q.entry_at(x);
    const Bits& bits = condition_bits(q.below(x));
    const auto& vq = entry_values(x, eq);
    const auto& vp = entry_values(x, ep);
    for (auto g = bits.find_first(); g != Bits::npos; g = bits.find_next(g))
      if (!it_.instance_leq(x, (*generics_)[g].coords[x].instance, vq[g], vp[g])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SimpleIteration: setup

SimpleIteration::SimpleIteration(IndexedTemplate tmpl, std::vector<IterandAssignment> parts,
                                 IterationOptions options)
    : tmpl_(std::move(tmpl)), parts_(std::move(parts)), options_(options) {
  if (static_cast<int>(parts_.size()) != tmpl_.size()) throw Error("iteration needs one assignment per point");
  catalogs_.resize(size());
  widened_catalogs_.resize(size());
  for (int x = 0; x < size(); ++x) make_catalog(x);
}

SimpleIteration::SimpleIteration(IndexedTemplate tmpl, const PartResolver& resolve, IterationOptions options)
    : tmpl_(std::move(tmpl)), options_(options) {
  parts_.resize(size());
  catalogs_.resize(size());
  widened_catalogs_.resize(size());
  for (int x = 0; x < size(); ++x) {
    parts_[x] = resolve(*this, x);
    make_catalog(x);
  }
}

Mask SimpleIteration::kind_mask(Kind k) const {
  Mask m = 0;
  for (int x = 0; x < size(); ++x)
    if (parts_[x].kind == k) m |= bit(x);
  return m;
}

const std::vector<EntryName>& SimpleIteration::catalog(int x, bool widened) const {
  return widened ? widened_catalogs_.at(x) : catalogs_.at(x);
}

std::optional<int> SimpleIteration::find_constant(int x, int value) const {
  const auto& cat = catalog(x);
  for (std::size_t e = 0; e < cat.size(); ++e)
    if (cat[e].is_constant() && cat[e].table.values[0] == value) return static_cast<int>(e);
  return std::nullopt;
}

std::optional<int> SimpleIteration::find_table(int x, const std::string& label, bool widened) const {
  const auto& cat = catalog(x, widened);
  for (std::size_t e = 0; e < cat.size(); ++e)
    if (cat[e].origin != EntryName::Origin::constant && cat[e].label == label) return static_cast<int>(e);
  return std::nullopt;
}

int SimpleIteration::trivial_value(int x) const {
  return part(x).kind == Kind::C ? 0 : part(x).model->poset.top();
}

int SimpleIteration::trivial_entry(int x) const {
  auto e = find_constant(x, trivial_value(x));
  if (!e) throw Error("no trivial entry at " + order().label(x));
  return *e;
}

void SimpleIteration::check_table(int x, const DecisionTable<int>& t, const std::string& what) const {
  const std::string where = what + " at " + order().label(x);
  if (!subset_of(t.base, below(x))) throw Error(where + ": base is not contained in the strict past");
  if (t.antichain.empty() || t.antichain.size() != t.values.size())
    throw Error(where + ": antichain and values must be nonempty and of equal length");
  const BuiltPoset& b = build(t.base);
  std::vector<int> idx;
  for (const auto& q : t.antichain) {
    auto i = b.find(q);
    if (!i) throw Error(where + ": " + format(q) + " is not a condition over " + order().format(t.base));
    idx.push_back(*i);
  }
  if (!is_maximal_antichain(b.poset, idx)) throw Error(where + ": antichain is not maximal");
}

bool SimpleIteration::entry_valid_everywhere(int x, const DecisionTable<int>& t) const {
  const auto& p = part(x);
  for (const auto& g : generics(p.support | t.base)) {
    int v = -1;
    for (std::size_t i = 0; i < t.antichain.size(); ++i)
      if (in_filter(t.antichain[i], g)) v = t.values[i];
    const auto& q = p.subposets.at(interpret_qname(x, g));
    if (!std::binary_search(q.elements.begin(), q.elements.end(), v)) return false;
  }
  return true;
}

void SimpleIteration::make_catalog(int x) {
  const auto& p = part(x);
  const std::string name = order().label(x);
  auto& cat = catalogs_[x];
  auto constant = [](std::string label, int v) {
    return EntryName{std::move(label), EntryName::Origin::constant, {0, {Condition{}}, {v}}};
  };

  if (p.kind != Kind::B) {
    if (!subset_of(p.support, below(x))) throw Error("support of " + name + " is not contained in its past");
    if (!tmpl_.in_hat(x, p.support)) throw Error("support of " + name + " is not in the hat family");
    check_table(x, p.qname, "iterand name");
    if (!subset_of(p.qname.base, p.support)) throw Error("iterand name of " + name + " is not over its support");
    const std::size_t nvalues = p.kind == Kind::R ? p.subposets.size() : p.posets.size();
    for (int v : p.qname.values)
      if (v < 0 || static_cast<std::size_t>(v) >= nvalues) throw Error("iterand name of " + name + " has a bad value");
  }

  if (p.kind == Kind::C) {
    if (p.gamma < 1 || p.gamma > 63) throw Error("gamma of " + name + " must be in [1, 63]");
    for (const auto& sp : p.posets) {
      if (sp.poset.size() != p.gamma || sp.poset.top() != 0)
        throw Error("poset '" + sp.name + "' at " + name + " must live on gamma with maximum 0");
      if (auto err = check_linked_partition(sp.poset, sp.linked, false))
        throw Error("poset '" + sp.name + "' at " + name + ": " + *err);
    }
    for (int v = 0; v < p.gamma; ++v) cat.push_back(constant(std::to_string(v), v));
    widened_catalogs_[x] = cat;
    for (const auto& d : p.declared) {
      check_table(x, d.table, "table '" + d.label + "'");
      for (int v : d.table.values)
        if (v < 0 || v >= p.gamma) throw Error("table '" + d.label + "' at " + name + " has a value outside gamma");
      widened_catalogs_[x].push_back(d);
      widened_catalogs_[x].back().origin = EntryName::Origin::declared;
    }
    return;
  }

  if (!p.model) throw Error("coordinate " + name + " has no model");
  const FinitePoset& S = p.model->poset;
  if (p.kind == Kind::R) {
    for (const auto& q : p.subposets) {
      if (!std::is_sorted(q.elements.begin(), q.elements.end()))
        throw Error("subposet '" + q.name + "' elements must be sorted");
      if (!check_nice_subposet(*p.model, q).empty())
        throw Error("subposet '" + q.name + "' at " + name + " is not nice");
    }
  }
  for (int v = 0; v < S.size(); ++v) {
    EntryName c = constant(S.label(v), v);
    if (p.kind == Kind::R && !entry_valid_everywhere(x, c.table)) continue;
    cat.push_back(std::move(c));
  }
  const std::size_t n_constants = cat.size();
  for (const auto& d : p.declared) {
    check_table(x, d.table, "table '" + d.label + "'");
    for (int v : d.table.values)
      if (v < 0 || v >= S.size()) throw Error("table '" + d.label + "' at " + name + " has an unknown value");
    if (p.kind == Kind::R && !entry_valid_everywhere(x, d.table))
      throw Error("table '" + d.label + "' at " + name + " is not forced into the iterand");
    cat.push_back(d);
    cat.back().origin = EntryName::Origin::declared;
  }

  // Close the tables of each declared antichain under pointwise meets, so
  // that induced generic filters stay directed.
  std::vector<std::pair<Mask, std::vector<Condition>>> groups;
  for (std::size_t e = n_constants; e < cat.size(); ++e) {
    auto key = std::make_pair(cat[e].table.base, cat[e].table.antichain);
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  int generated = 0;
  for (const auto& [base, antichain] : groups) {
    const std::size_t width = antichain.size();
    std::vector<Bits> allowed(width, Bits(S.size()));
    for (std::size_t i = 0; i < width; ++i) {
      allowed[i].set();
      if (p.kind != Kind::R) continue;
      for (const auto& g : generics(p.support | base))
        if (in_filter(antichain[i], g)) {
          const auto& q = p.subposets.at(interpret_qname(x, g));
          allowed[i] &= q.member_bits(S.size());
        }
    }
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> pool;
    for (std::size_t e = 0; e < n_constants; ++e) {
      std::vector<int> row(width, cat[e].table.values[0]);
      if (seen.insert(row).second) pool.push_back(row);
    }
    for (std::size_t e = n_constants; e < cat.size(); ++e)
      if (cat[e].table.base == base && cat[e].table.antichain == antichain && seen.insert(cat[e].table.values).second)
        pool.push_back(cat[e].table.values);
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<int> meet(width);
        for (std::size_t r = 0; r < width; ++r) {
          auto m = S.glb(pool[i][r], pool[j][r], &allowed[r]);
          meet[r] = m ? *m : S.top();
        }
        if (!seen.insert(meet).second) continue;
        pool.push_back(meet);
        const bool flat = std::all_of(meet.begin(), meet.end(), [&](int v) { return v == meet[0]; });
        if (flat && find_constant(x, meet[0])) continue;
        if (cat.size() >= options_.max_catalog) throw ResourceError("catalog size at " + name, options_.max_catalog);
        cat.push_back({"g" + std::to_string(++generated), EntryName::Origin::generated, {base, antichain, meet}});
      }
  }
  widened_catalogs_[x] = cat;
}

// ---------------------------------------------------------------------------
// Membership

bool SimpleIteration::entry_ok_raw(int x, int e, Mask a_prime, bool widened) const {
  const auto& cat = catalog(x, widened);
  if (e < 0 || static_cast<std::size_t>(e) >= cat.size()) return false;
  const auto& entry = cat[e];
  if (!subset_of(entry.table.base, a_prime)) return false;
  const auto& p = part(x);
  if (p.kind == Kind::B) return true;
  if (subset_of(p.support, a_prime)) return p.kind != Kind::C || widened || entry.is_constant();
  return entry.is_constant() && entry.table.values[0] == trivial_value(x);
}

bool SimpleIteration::entry_ok(int x, int e, Mask a_prime, const Condition& rest, bool widened) const {
  if (!entry_ok_raw(x, e, a_prime, widened)) return false;
  // Canonical form: no earlier admissible entry is forced equal to this one
  // by the lower part.
  if (catalog(x, widened)[e].is_constant()) {
    // distinct constants are never forced equal
    return true;
  }
  Evaluator& ev = evaluator(a_prime);
  for (int e2 = 0; e2 < e; ++e2)
    if (entry_ok_raw(x, e2, a_prime, widened) && ev.forces_equal(rest, x, e2, e)) return false;
  return true;
}

std::vector<Mask> SimpleIteration::membership_witnesses(Mask a, const Condition& p, bool widened) const {
  if (p.empty()) return {};
  auto key = std::make_tuple(a, widened, p);
  if (auto f = witness_cache_.find(key); f != witness_cache_.end()) return f->second;
  std::vector<Mask> out;
  const int x = p.max_point();
  if (contains(a, x)) {
    const Condition rest = p.below(x);
    const int e = p.entries.back().second;
    for (Mask b : tmpl_.trace(x, a))
      if (member(b, rest, widened) && entry_ok(x, e, b, rest, widened)) out.push_back(b);
  }
  witness_cache_.emplace(key, out);
  return out;
}

bool SimpleIteration::member(Mask a, const Condition& p, bool widened) const {
  if (p.empty()) return true;
  return !membership_witnesses(a, p, widened).empty();
}

std::optional<Mask> SimpleIteration::canonical_witness(Mask a, const Condition& p, bool widened) const {
  const auto w = membership_witnesses(a, p, widened);
  if (w.empty()) return std::nullopt;
  for (Mask m : w)
    if (std::all_of(w.begin(), w.end(), [m](Mask o) { return subset_of(m, o); })) return m;
  return *std::min_element(w.begin(), w.end());
}

// ---------------------------------------------------------------------------
// Generic semantics

bool SimpleIteration::coord_contains(int x, const Coord& c, int value) const {
  const auto& p = part(x);
  switch (p.kind) {
    case Kind::B:
      return p.model->admissible.at(c.filter).members.test(value);
    case Kind::R: {
      if (c.instance < 0) return value == p.model->poset.top();
      const auto& q = p.subposets.at(c.instance);
      return std::binary_search(q.elements.begin(), q.elements.end(), value) &&
             p.model->E(static_cast<int>(c.value), value);
    }
    case Kind::C:
      return value >= 0 && value < 64 && ((c.value >> value) & 1u);
  }
  return false;
}

int SimpleIteration::value_of(int x, int entry, const GenericSequence& g) const {
  const auto& t = catalog(x, true).at(entry).table;
  int hit = -1;
  for (std::size_t i = 0; i < t.antichain.size(); ++i)
    if (in_filter(t.antichain[i], g)) {
      if (hit >= 0) throw Error("entry " + format_entry(x, entry) + ": two antichain members in one filter");
      hit = static_cast<int>(i);
    }
  if (hit < 0) throw Error("entry " + format_entry(x, entry) + ": antichain not met");
  return t.values[hit];
}

bool SimpleIteration::in_filter(const Condition& p, const GenericSequence& g) const {
  for (auto [x, e] : p.entries) {
    if (!contains(g.domain, x)) throw Error("generic sequence does not cover " + order().label(x));
    if (!coord_contains(x, g.coords[x], value_of(x, e, g))) return false;
  }
  return true;
}

int SimpleIteration::interpret_qname(int x, const GenericSequence& g) const {
  const auto& t = part(x).qname;
  int hit = -1;
  for (std::size_t i = 0; i < t.antichain.size(); ++i)
    if (in_filter(t.antichain[i], g)) {
      if (hit >= 0) throw Error("iterand name at " + order().label(x) + ": two antichain members in one filter");
      hit = static_cast<int>(i);
    }
  if (hit < 0) throw Error("iterand name at " + order().label(x) + ": antichain not met");
  return t.values[hit];
}

bool SimpleIteration::instance_leq(int x, int instance, int v, int w) const {
  const auto& p = part(x);
  if (p.kind != Kind::B && instance < 0) return v == w;
  if (p.kind == Kind::C) return p.posets.at(instance).poset.leq(v, w);
  return p.model->poset.leq(v, w);
}

const std::vector<GenericSequence>& SimpleIteration::generics(Mask a) const {
  if (auto f = generics_.find(a); f != generics_.end()) return *f->second;
  std::vector<GenericSequence> seqs(1);
  seqs[0].coords.resize(size());
  for (int x : points_of(a)) {
    const auto& p = part(x);
    std::vector<GenericSequence> next;
    for (const auto& s : seqs) {
      std::vector<Coord> options;
      if (p.kind == Kind::B) {
        for (std::size_t f = 0; f < p.model->admissible.size(); ++f)
          options.push_back({0, static_cast<int>(f), static_cast<std::uint64_t>(p.model->admissible[f].eta)});
      } else if (!subset_of(p.support, a)) {
        options.push_back({-1, -1, p.kind == Kind::C ? 1u : 0u});
      } else if (p.kind == Kind::R) {
        const int inst = interpret_qname(x, s);
        const auto& zq = p.subposets[inst].zq;
        for (std::size_t j = 0; j < zq.size(); ++j)
          options.push_back({inst, static_cast<int>(j), static_cast<std::uint64_t>(zq[j])});
      } else {
        const int inst = interpret_qname(x, s);
        const FinitePoset& Q = p.posets[inst].poset;
        for (int m : Q.minimal_elements()) {
          std::uint64_t chi = 0;
          for (int v : from_bits(Q.up(m))) chi |= std::uint64_t{1} << v;
          options.push_back({inst, m, chi});
        }
      }
      for (const auto& c : options) {
        GenericSequence t = s;
        t.domain |= bit(x);
        t.coords[x] = c;
        next.push_back(std::move(t));
        if (next.size() > options_.max_generics) throw ResourceError("generic sequences", options_.max_generics);
      }
    }
    seqs = std::move(next);
  }
  return *generics_.emplace(a, std::make_unique<std::vector<GenericSequence>>(std::move(seqs))).first->second;
}

Evaluator& SimpleIteration::evaluator(Mask a) const {
  if (auto f = evaluators_.find(a); f != evaluators_.end()) return *f->second;
  return *evaluators_.emplace(a, std::make_unique<Evaluator>(*this, a)).first->second;
}

bool SimpleIteration::order_leq(Mask a, const Condition& q, const Condition& p) const {
  if (!member(a, q) || !member(a, p)) throw Error("order_leq: arguments are not members of P*" + order().format(a));
  return evaluator(a).leq(q, p);
}

const BuiltPoset& SimpleIteration::build(Mask a, bool widened) const {
  auto key = std::make_pair(a, widened);
  if (auto f = built_.find(key); f != built_.end()) return *f->second;
  std::set<Condition> conds{Condition{}};
  for (int x : points_of(a)) {
    for (Mask b : tmpl_.trace(x, a)) {
      const BuiltPoset& lower = build(b, widened);
      const auto& cat = catalog(x, widened);
      for (const auto& rest : lower.conditions)
        for (std::size_t e = 0; e < cat.size(); ++e)
          if (entry_ok(x, static_cast<int>(e), b, rest, widened)) {
            conds.insert(rest.with(x, static_cast<int>(e)));
            if (conds.size() > options_.max_conditions)
              throw ResourceError("conditions in P*" + order().format(a), options_.max_conditions);
          }
    }
  }
  auto out = std::make_unique<BuiltPoset>();
  out->ambient = a;
  out->widened = widened;
  out->conditions.assign(conds.begin(), conds.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out->conditions.size(); ++i) {
    out->index.emplace(out->conditions[i], static_cast<int>(i));
    labels.push_back(format(out->conditions[i]));
  }
  Evaluator& ev = evaluator(a);
  const auto& cs = out->conditions;
  out->poset = FinitePoset::from_predicate(std::move(labels), [&](int i, int j) { return ev.leq(cs[i], cs[j]); }, 0);
  return *built_.emplace(key, std::move(out)).first->second;
}

std::string SimpleIteration::format_entry(int x, int e, bool) const {
  const auto& entry = catalog(x, true).at(e);
  if (entry.is_constant()) {
    if (part(x).kind == Kind::C) return std::to_string(entry.table.values[0]);
    return "\"" + part(x).model->poset.label(entry.table.values[0]) + "\"";
  }
  return "{\"table\":\"" + entry.label + "\"}";
}

std::string SimpleIteration::format(const Condition& p, bool) const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    const auto [x, e] = p.entries[i];
    os << (i ? "," : "") << '"' << order().label(x) << "\":" << format_entry(x, e);
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

bool member_Pstar(const SimpleIteration& it, Mask a, const Condition& p) { return it.member(a, p); }

bool order_leq(const SimpleIteration& it, Mask a, const Condition& q, const Condition& p) {
  return it.order_leq(a, q, p);
}

const FinitePoset& build_poset(const SimpleIteration& it, Mask a) { return it.build(a).poset; }

void validate_iter_name(const SimpleIteration& it, const IterRealName& x) {
  for (int n = 0; n < x.length(); ++n) {
    const auto& t = x.coords[n];
    const std::string where = "name '" + x.label + "' coordinate " + std::to_string(n);
    if (t.antichain.empty() || t.antichain.size() != t.values.size())
      throw Error(where + ": antichain and values must be nonempty and of equal length");
    const BuiltPoset& b = it.build(t.base);
    std::vector<int> idx;
    for (const auto& q : t.antichain) {
      auto i = b.find(q);
      if (!i) throw Error(where + ": " + it.format(q) + " is not in P*" + it.order().format(t.base));
      idx.push_back(*i);
    }
    if (!is_maximal_antichain(b.poset, idx)) throw Error(where + ": antichain is not maximal");
  }
}

std::optional<DensityFailure> check_density_Pstar(const SimpleIteration& it, Mask a) {
  const BuiltPoset& wide = it.build(a, true);
  const BuiltPoset& star = it.build(a, false);
  Evaluator& ev = it.evaluator(a);
  for (const auto& p : wide.conditions) {
    const bool found = std::any_of(star.conditions.begin(), star.conditions.end(),
                                   [&](const Condition& q) { return ev.leq(q, p); });
    if (!found) return DensityFailure{p, "no extension of " + it.format(p) + " in P*" + it.order().format(a)};
  }
  return std::nullopt;
}

std::vector<int> inclusion_map(const SimpleIteration& it, Mask sub, Mask sup) {
  const BuiltPoset& s = it.build(sub);
  const BuiltPoset& t = it.build(sup);
  std::vector<int> map;
  map.reserve(s.conditions.size());
  for (const auto& c : s.conditions) {
    auto i = t.find(c);
    if (!i)
      throw Error("coherence: " + it.format(c) + " is in P*" + it.order().format(sub) + " but not in P*" +
                  it.order().format(sup));
    map.push_back(*i);
  }
  return map;
}

std::optional<EmbeddingWitness> check_complete_embedding(const SimpleIteration& it, Mask sub, Mask sup) {
  if (!subset_of(sub, sup)) throw Error("complete embedding check needs sub to be a subset of sup");
  return check_complete_embedding(it.build(sub).poset, it.build(sup).poset, inclusion_map(it, sub, sup));
}

}  // namespace tiw
