#include "tiw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

namespace tiw {

const std::vector<std::string> kAllChecks = {"main", "history", "well_defined", "density", "nice_correct"};

std::uint64_t Report::checked() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : counts) n += v;
  return n;
}

void Report::fail(Failure f) {
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(f));
}

void Report::merge(const Report& o) {
  for (const auto& [k, v] : o.counts) counts[k] += v;
  generics = std::max(generics, o.generics);
  failure_count += o.failure_count;
  for (const auto& f : o.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
  sampled = sampled || o.sampled;
  seconds += o.seconds;
}

std::string report_json(const Report& r, bool with_timing) {
  nlohmann::json j;
  j["pass"] = r.pass();
  j["checked"] = r.checked();
  j["counts"] = r.counts;
  j["generics"] = r.generics;
  j["sampled"] = r.sampled;
  j["failure_count"] = r.failure_count;
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : r.failures)
    fs.push_back({{"check", f.check}, {"subject", f.subject}, {"z", f.point}, {"expected", f.expected},
                  {"actual", f.actual}});
  j["failures"] = fs;
  if (with_timing) j["timing"] = {{"seconds", r.seconds}};
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r, bool with_timing) {
  std::ostringstream os;
  os << (r.pass() ? "PASS" : "FAIL") << ": checked " << r.checked() << ", generics " << r.generics
     << ", failures " << r.failure_count << (r.sampled ? " (sampled)" : "") << '\n';
  for (const auto& [k, v] : r.counts) os << "  " << k << ": " << v << '\n';
  for (const auto& f : r.failures) {
    os << "  failure [" << f.check << "] " << f.subject;
    if (!f.point.empty()) os << " at " << f.point;
    os << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  if (with_timing) os << "  time: " << r.seconds << " s\n";
  return os.str();
}

namespace {

class Timer {
 public:
  explicit Timer(Report& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  Report& r_;
  std::chrono::steady_clock::time_point start_;
};

std::string ordinals(std::uint64_t bits) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if ((bits >> i) & 1u) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return out + "}";
}

std::vector<std::size_t> select_generics(std::size_t n, const VerifyOptions& opts, Report& r) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  if (n > opts.sample_generics) {
    std::mt19937_64 rng(opts.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(opts.sample_generics);
    std::sort(idx.begin(), idx.end());
    r.sampled = true;
  }
  r.generics = std::max<std::uint64_t>(r.generics, idx.size());
  return idx;
}

/// Pairs (sub, sup) with sub contained in sup, exhaustive up to the point cap.
std::vector<std::pair<Mask, Mask>> subset_pairs(const SimpleIteration& it, const VerifyOptions& opts, Report& r) {
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask a : subsets_of(it.all()))
    for (Mask k : subsets_of(a)) out.emplace_back(k, a);
  if (it.size() > opts.exhaustive_points && out.size() > opts.sample_pairs) {
    std::mt19937_64 rng(opts.seed);
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(opts.sample_pairs);
    std::sort(out.begin(), out.end());
    r.sampled = true;
  }
  return out;
}

Mask name_base(const IterRealName& x) {
  Mask m = 0;
  for (const auto& t : x.coords) m |= t.base;
  return m;
}

std::string direct_values(const std::vector<std::int64_t>& v) {
  std::string out = "<";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ">";
}

}  // namespace

const std::vector<GenericSequence>& enumerate_generics(const SimpleIteration& it) { return it.generics(it.all()); }

std::string format_generic(const SimpleIteration& it, const GenericSequence& g) {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (int x : points_of(g.domain)) {
    os << (first ? "" : ", ") << it.order().label(x) << '=';
    first = false;
    const Coord& c = g.coords[x];
    if (it.part(x).kind == Kind::C)
      os << ordinals(c.value);
    else if (it.part(x).kind == Kind::R && c.instance < 0)
      os << '-';
    else
      os << it.part(x).model->z_labels.at(c.value);
  }
  os << '>';
  return os.str();
}

Bits realize_filter(const SimpleIteration& it, const GenericSequence& g) {
  const BuiltPoset& b = it.build(it.all());
  Bits out(b.conditions.size());
  for (std::size_t i = 0; i < b.conditions.size(); ++i)
    if (it.in_filter(b.conditions[i], g)) out.set(i);
  return out;
}

std::optional<std::string> audit_filter(const SimpleIteration& it, const Bits& members) {
  const FinitePoset& P = it.build(it.all()).poset;
  if (!is_filter(P, members)) return "induced set is not a filter";
  if (!meets_every_maximal_antichain(P, members)) return "induced filter misses a maximal antichain";
  return std::nullopt;
}

std::vector<WitnessChooser> witness_choosers() {
  std::vector<WitnessChooser> out;
  for (std::size_t k = 0; k < 4; ++k)
    out.push_back([k](int, Mask, const std::vector<Mask>& w) { return w[k % w.size()]; });
  out.push_back([](int, Mask, const std::vector<Mask>& w) { return w.back(); });
  return out;
}

Report verify_main_theorem(const SimpleIteration& it, const std::vector<IterRealName>& names,
                           const VerifyOptions& opts) {
  Report r;
  Timer timer(r);
  const Mask all = it.all();
  const BuiltPoset& b = it.build(all);
  const auto& gens = enumerate_generics(it);
  Evaluator& ev = it.evaluator(all);
  const auto sel = select_generics(gens.size(), opts, r);

  std::vector<const Bits*> cond_bits;
  for (const auto& p : b.conditions) cond_bits.push_back(&ev.condition_bits(p));
  for (std::size_t g : sel) {
    Bits m(b.conditions.size());
    for (std::size_t i = 0; i < b.conditions.size(); ++i)
      if (cond_bits[i]->test(g)) m.set(i);
    ++r.counts["filter_audit"];
    if (auto problem = audit_filter(it, m))
      r.fail({"filter_audit", "G", format_generic(it, gens[g]), "generic filter", *problem});
  }

  for (std::size_t i = 0; i < b.conditions.size(); ++i) {
    const Condition& p = b.conditions[i];
    const std::string subject = it.format(p);
    CodePtr code;
    TupleSpace t;
    try {
      code = synth_E(it, all, p, opts.synth);
      t = tuple_space(it, history_of_condition(it, all, p));
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      r.fail({"synth", subject, "", "code", e.what()});
      continue;
    }
    ++r.counts["free_components"];
    if (!fits(free_components(it, *code), t))
      r.fail({"free_components", subject, "", format_tuple_space(it, t), print_code(*code)});
    for (std::size_t g : sel) {
      ++r.counts["main"];
      const bool expected = cond_bits[i]->test(g);
      std::string actual;
      try {
        const Outcome o = outcome(it, *code, restrict_tuple(it, gens[g], t));
        if (o == Outcome::ill_formed)
          actual = "ill-formed";
        else if ((o == Outcome::yes) == expected)
          continue;
        else
          actual = o == Outcome::yes ? "code true" : "code false";
      } catch (const Error& e) {
        actual = e.what();
      }
      r.fail({"main", subject, format_generic(it, gens[g]), expected ? "in G" : "not in G", actual});
    }
  }

  for (const auto& x : names) {
    FCodePtr f;
    TupleSpace t;
    try {
      validate_iter_name(it, x);
      f = synth_F(it, all, x, opts.synth);
      t = tuple_space(it, history_of_name(it, all, x));
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      r.fail({"names", x.label, "", "valid name", e.what()});
      continue;
    }
    ++r.counts["free_components"];
    if (!fits(free_components(it, *f), t))
      r.fail({"free_components", x.label, "", format_tuple_space(it, t), print_fcode(*f)});
    for (std::size_t g : sel) {
      ++r.counts["names"];
      std::vector<std::int64_t> direct;
      bool unique = true;
      for (const auto& coord : x.coords) {
        int hits = 0;
        std::int64_t v = 0;
        for (std::size_t k = 0; k < coord.antichain.size(); ++k)
          if (ev.condition_bits(coord.antichain[k]).test(g)) {
            ++hits;
            v = coord.values[k];
          }
        if (hits != 1) unique = false;
        direct.push_back(v);
      }
      if (!unique) {
        r.fail({"antichain_uniqueness", x.label, format_generic(it, gens[g]), "one member per antichain",
                "not exactly one"});
        continue;
      }
      try {
        const RealValue got = eval_fcode(it, *f, restrict_tuple(it, gens[g], t));
        if (got.outside_d)
          r.fail({"names", x.label, format_generic(it, gens[g]), direct_values(direct), "outside D"});
        else if (got.values != direct)
          r.fail({"names", x.label, format_generic(it, gens[g]), direct_values(direct), direct_values(got.values)});
      } catch (const Error& e) {
        r.fail({"names", x.label, format_generic(it, gens[g]), direct_values(direct), e.what()});
      }
    }
  }
  return r;
}

Report verify_history_invariance(const SimpleIteration& it, const std::vector<IterRealName>& names,
                                 const VerifyOptions& opts) {
  Report r;
  Timer timer(r);
  const auto pairs = subset_pairs(it, opts, r);
  const auto choosers = witness_choosers();
  for (auto [sub, sup] : pairs) {
    for (const auto& p : it.build(sub).conditions) {
      ++r.counts["history"];
      const std::string subject = it.format(p) + " in " + it.order().format(sub) + " vs " + it.order().format(sup);
      if (!it.member(sup, p)) {
        r.fail({"coherence", subject, "", "member", "not a member"});
        continue;
      }
      const History h1 = history_of_condition(it, sub, p);
      const History h2 = history_of_condition(it, sup, p);
      if (!(h1 == h2)) r.fail({"history", subject, "", format_history(it, h1), format_history(it, h2)});
    }
  }
  for (Mask a : subsets_of(it.all())) {
    for (const auto& p : it.build(a).conditions) {
      if (it.membership_witnesses(a, p).size() < 2) continue;
      const History h = history_of_condition(it, a, p);
      for (const auto& c : choosers) {
        ++r.counts["history_choice"];
        const History hc = history_of_condition(it, a, p, c);
        if (!(hc == h))
          r.fail({"history_choice", it.format(p) + " in " + it.order().format(a), "", format_history(it, h),
                  format_history(it, hc)});
      }
    }
  }
  for (const auto& x : names) {
    const Mask base = name_base(x);
    const History h = history_of_name(it, base, x);
    for (Mask a : subsets_of(it.all())) {
      if (!subset_of(base, a)) continue;
      for (const auto& c : choosers) {
        ++r.counts["history_names"];
        const History ha = history_of_name(it, a, x, c);
        if (!(ha == h))
          r.fail({"history_names", x.label + " in " + it.order().format(a), "", format_history(it, h),
                  format_history(it, ha)});
      }
    }
  }
  return r;
}

Report verify_well_definedness(const SimpleIteration& it, const std::vector<IterRealName>& names,
                               const VerifyOptions& opts) {
  Report r;
  Timer timer(r);
  const auto pairs = subset_pairs(it, opts, r);
  auto compare = [&](const char* check, const std::string& subject, const BorelCode& a, const BorelCode& b,
                     const TupleSpace& t) {
    ++r.counts[check];
    try {
      if (!codes_equal(it, a, b, t)) r.fail({check, subject, "", print_code(a), print_code(b)});
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      r.fail({check, subject, "", print_code(a), e.what()});
    }
  };

  for (auto [sub, sup] : pairs) {
    if (sub == sup) continue;
    for (const auto& q : it.build(sub).conditions) {
      const TupleSpace t = tuple_space(it, history_of_condition(it, sub, q));
      const CodePtr c1 = synth_E(it, sub, q, opts.synth);
      const CodePtr c2 = synth_E(it, sup, q, opts.synth);
      compare("well_defined", it.format(q) + " in " + it.order().format(sub) + " vs " + it.order().format(sup), *c1,
              *c2, t);
    }
  }

  const auto choosers = witness_choosers();
  for (Mask a : subsets_of(it.all())) {
    for (const auto& q : it.build(a).conditions) {
      if (q.empty()) continue;
      const TupleSpace t = tuple_space(it, history_of_condition(it, a, q));
      const CodePtr base = synth_E(it, a, q, opts.synth);
      for (const auto& c : choosers) {
        SynthOptions so = opts.synth;
        so.choose = c;
        compare("synth_choice", it.format(q) + " in " + it.order().format(a), *base, *synth_E(it, a, q, so), t);
      }
    }
  }

  for (const auto& x : names) {
    const Mask base = name_base(x);
    const TupleSpace t = tuple_space(it, history_of_name(it, base, x));
    const FCodePtr f0 = synth_F(it, base, x, opts.synth);
    for (Mask a : subsets_of(it.all())) {
      if (!subset_of(base, a) || a == base) continue;
      ++r.counts["well_defined_names"];
      const FCodePtr fa = synth_F(it, a, x, opts.synth);
      try {
        if (!fcodes_equal(it, *f0, *fa, t))
          r.fail({"well_defined_names", x.label + " in " + it.order().format(a), "", print_fcode(*f0),
                  print_fcode(*fa)});
      } catch (const ResourceError&) {
        throw;
      } catch (const Error& e) {
        r.fail({"well_defined_names", x.label + " in " + it.order().format(a), "", print_fcode(*f0), e.what()});
      }
    }
  }
  return r;
}

Report verify_density(const SimpleIteration& it, const VerifyOptions&) {
  Report r;
  Timer timer(r);
  for (Mask a : subsets_of(it.all())) {
    r.counts["density"] += it.build(a, true).conditions.size();
    if (auto f = check_density_Pstar(it, a))
      r.fail({"density", it.format(f->condition) + " in " + it.order().format(a), "", "extension in P*", f->message});
  }
  return r;
}

Report verify_nice_and_correct(const SimpleIteration& it, const std::vector<std::pair<int, NiceSubposet>>& extra,
                               const VerifyOptions&) {
  Report r;
  Timer timer(r);
  auto nice = [&](int x, const NiceSubposet& q) {
    ++r.counts["nice"];
    try {
      for (const auto& v : check_nice_subposet(*it.part(x).model, q)) {
        std::string witness;
        for (int e : v.witness) witness += (witness.empty() ? "" : ",") + it.part(x).model->poset.label(e);
        r.fail({"nice", it.order().label(x) + ":" + q.name, it.part(x).model->z_labels.at(v.z), "nice subposet",
                v.message + (witness.empty() ? "" : " (antichain " + witness + ")")});
      }
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      r.fail({"nice", it.order().label(x) + ":" + q.name, "", "nice subposet", e.what()});
    }
  };
  for (int x = 0; x < it.size(); ++x)
    if (it.part(x).kind == Kind::R)
      for (const auto& q : it.part(x).subposets) nice(x, q);
  for (const auto& [x, q] : extra) nice(x, q);

  std::map<std::pair<Mask, Mask>, std::vector<int>> maps;
  std::map<std::pair<Mask, Mask>, std::vector<Bits>> reds;
  std::map<std::pair<Mask, Mask>, bool> embedded;
  auto map_of = [&](Mask a, Mask b) -> const std::vector<int>& {
    auto key = std::make_pair(a, b);
    if (auto f = maps.find(key); f != maps.end()) return f->second;
    return maps.emplace(key, inclusion_map(it, a, b)).first->second;
  };
  auto red_of = [&](Mask a, Mask b) -> const std::vector<Bits>& {
    auto key = std::make_pair(a, b);
    if (auto f = reds.find(key); f != reds.end()) return f->second;
    return reds.emplace(key, reduction_matrix(it.build(a).poset, it.build(b).poset, map_of(a, b))).first->second;
  };
  auto embed = [&](Mask a, Mask b) {
    auto key = std::make_pair(a, b);
    if (embedded.count(key)) return;
    ++r.counts["embedding"];
    std::optional<EmbeddingWitness> w;
    try {
      w = check_complete_embedding(it.build(a).poset, it.build(b).poset, map_of(a, b));
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      w = EmbeddingWitness{e.what(), {}, -1};
    }
    embedded[key] = !w;
    if (w) r.fail({"embedding", it.order().format(a) + " in " + it.order().format(b), "", "complete", w->message});
  };

  const auto all = subsets_of(it.all());
  for (Mask a1 : all)
    for (Mask b0 : all) {
      const Mask a0 = a1 & b0;
      for (Mask b1 : all) {
        if (!subset_of(a1 | b0, b1)) continue;
        ++r.counts["correct_system"];
        embed(a0, a1);
        embed(a0, b0);
        embed(a1, b1);
        embed(b0, b1);
        if (!embedded[{a0, a1}] || !embedded[{a0, b0}] || !embedded[{a1, b1}] || !embedded[{b0, b1}]) continue;
        auto v = check_reduction_persistence(red_of(a0, b0), red_of(a1, b1), map_of(a0, a1), map_of(a0, b0),
                                             map_of(b0, b1));
        for (const auto& s : v)
          r.fail({"correct_system",
                  it.order().format(a0) + "," + it.order().format(a1) + "," + it.order().format(b0) + "," +
                      it.order().format(b1),
                  "", "reduction persists",
                  it.build(a0).poset.label(s.p) + " reduces " + it.build(b0).poset.label(s.q) + " only below"});
      }
    }
  return r;
}

Report verify_checks(const SimpleIteration& it, const std::vector<IterRealName>& names,
                     const std::vector<std::string>& checks, const VerifyOptions& opts) {
  Report r;
  for (const auto& c : checks.empty() ? kAllChecks : checks) {
    if (c == "main")
      r.merge(verify_main_theorem(it, names, opts));
    else if (c == "history")
      r.merge(verify_history_invariance(it, names, opts));
    else if (c == "well_defined")
      r.merge(verify_well_definedness(it, names, opts));
    else if (c == "density")
      r.merge(verify_density(it, opts));
    else if (c == "nice_correct")
      r.merge(verify_nice_and_correct(it, {}, opts));
    else
      throw Error("unknown check '" + c + "'");
  }
  return r;
}

}  // namespace tiw
