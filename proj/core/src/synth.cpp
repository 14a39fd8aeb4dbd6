#include "tiw/synth.hpp"

#include <algorithm>

namespace tiw {

namespace {

Mask choose_witness(const SimpleIteration& it, int x, Mask a, const Condition& p, const SynthOptions& opts) {
  auto w = it.membership_witnesses(a, p);
  if (w.empty()) throw Error(it.format(p) + " is not a condition of P*" + it.order().format(a));
  if (opts.choose) {
    Mask m = opts.choose(x, a, w);
    if (std::find(w.begin(), w.end(), m) == w.end()) throw Error("chooser returned a set that is not a witness");
    return m;
  }
  return *it.canonical_witness(a, p);
}

CodePtr atom(const SimpleIteration& it, int x, int e, const SynthOptions& opts) {
  const auto& part = it.part(x);
  const auto& entry = it.catalog(x, true).at(e);
  const std::string& label = it.order().label(x);
  if (part.kind == Kind::C) {
    if (!entry.is_constant()) throw Error("synthesis of a non-literal ordinal at " + label);
    CodePtr b = code_bit(label, entry.table.values[0]);
    return opts.flip_bits ? code_not(b) : b;
  }
  // E(z, top) holds for every z.
  if (entry.is_constant() && entry.table.values[0] == part.model->poset.top()) return code_true();
  return code_E(label, synth_entry(it, x, e, opts));
}

}  // namespace

FCodePtr synth_entry(const SimpleIteration& it, int x, int e, const SynthOptions& opts) {
  const auto& part = it.part(x);
  if (part.kind == Kind::C) throw Error("element codes exist only at B and R points");
  const auto& t = it.catalog(x, true).at(e).table;
  const FinitePoset& S = part.model->poset;
  if (t.is_constant()) return fcode_const_element(S.label(t.values[0]));
  std::vector<FCase> cases;
  for (std::size_t i = 0; i < t.antichain.size(); ++i)
    cases.push_back({synth_E(it, t.base, t.antichain[i], opts), S.label(t.values[i]), 0});
  return fcode_element(std::move(cases));
}

CodePtr synth_E(const SimpleIteration& it, Mask a, const Condition& p, const SynthOptions& opts) {
  if (p.empty()) return code_true();
  if (!it.member(a, p)) throw Error(it.format(p) + " is not a condition of P*" + it.order().format(a));
  const int x = max_point(a);
  const Mask past = a & ~bit(x);
  if (p.max_point() != x) return synth_E(it, past, p, opts);

  const Condition rest = p.below(x);
  const int e = p.entries.back().second;
  if (it.tmpl().in_hat(x, past)) {
    auto w = it.membership_witnesses(a, p);
    const Mask lower = std::find(w.begin(), w.end(), past) != w.end() ? past : choose_witness(it, x, a, p, opts);
    return code_and({synth_E(it, lower, rest, opts), atom(it, x, e, opts)});
  }
  const Mask a_prime = choose_witness(it, x, a, p, opts);
  return synth_E(it, a_prime | bit(x), p, opts);
}

FCodePtr synth_F(const SimpleIteration& it, Mask a, const IterRealName& x, const SynthOptions& opts) {
  std::vector<std::vector<FCase>> coords;
  for (const auto& t : x.coords) {
    std::vector<FCase> cases;
    for (std::size_t i = 0; i < t.antichain.size(); ++i)
      cases.push_back({synth_E(it, a, t.antichain[i], opts), {}, t.values[i]});
    coords.push_back(std::move(cases));
  }
  return fcode_real(std::move(coords), 0);
}

SimpleIteration encode_fsi(std::vector<IterandAssignment> stages, IterationOptions options) {
  const int n = static_cast<int>(stages.size());
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    auto& s = stages[i];
    if (s.kind == Kind::R) throw Error("finite support stages must be Borel or small-poset stages");
    if (s.kind == Kind::C) {
      s.support = below(i);
      if (s.qname.antichain.empty()) s.qname = {0, {Condition{}}, {0}};
    }
  }
  return SimpleIteration(full_powerset_template(labels), std::move(stages), options);
}

}  // namespace tiw
