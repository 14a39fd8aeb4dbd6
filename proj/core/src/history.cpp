#include "tiw/history.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace tiw {

namespace {

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

Mask pick(const SimpleIteration& it, int x, Mask a, const Condition& p, const WitnessChooser& choose) {
  auto w = it.membership_witnesses(a, p);
  if (w.empty()) throw Error(it.format(p) + " is not a condition of P*" + it.order().format(a));
  if (choose) {
    Mask m = choose(x, a, w);
    if (std::find(w.begin(), w.end(), m) == w.end()) throw Error("chooser returned a set that is not a witness");
    return m;
  }
  return *it.canonical_witness(a, p);
}

}  // namespace

void History::merge(const History& o) {
  H |= o.H;
  for (auto [x, w] : o.W) W[x] |= w;
}

History history_of_entry(const SimpleIteration& it, Mask a_prime, int x, int e, const WitnessChooser& choose) {
  History h;
  if (it.part(x).kind == Kind::C) return h;
  for (const auto& q : it.catalog(x, true).at(e).table.antichain) h.merge(history_of_condition(it, a_prime, q, choose));
  return h;
}

History history_of_condition(const SimpleIteration& it, Mask a, const Condition& p, const WitnessChooser& choose) {
  if (p.empty()) return {};
  const int x = p.max_point();
  const int e = p.entries.back().second;
  const Mask a_prime = pick(it, x, a, p, choose);
  History h = history_of_condition(it, a_prime, p.below(x), choose);
  h.H |= bit(x);
  if (it.part(x).kind == Kind::C) {
    const auto& entry = it.catalog(x, true).at(e);
    if (!entry.is_constant()) throw Error("history of a non-literal ordinal at " + it.order().label(x));
    h.W[x] |= std::uint64_t{1} << entry.table.values[0];
  } else {
    h.merge(history_of_entry(it, a_prime, x, e, choose));
  }
  return h;
}

History history_of_name(const SimpleIteration& it, Mask a, const IterRealName& x, const WitnessChooser& choose) {
  History h;
  for (const auto& t : x.coords)
    for (const auto& q : t.antichain) h.merge(history_of_condition(it, a, q, choose));
  return h;
}

std::string format_history(const SimpleIteration& it, const History& h) {
  std::string out = "H=" + it.order().format(h.H);
  for (auto [x, w] : h.W) out += " W_" + it.order().label(x) + "=" + ordinals(w);
  return out;
}

TupleSpace tuple_space(const SimpleIteration& it, const History& h) {
  TupleSpace t;
  for (int x : points_of(h.H)) {
    if (it.part(x).kind == Kind::C) {
      t.hc |= bit(x);
      auto w = h.W.find(x);
      t.W[x] = w == h.W.end() ? 0 : w->second;
    } else {
      t.hs |= bit(x);
    }
  }
  return t;
}

std::string format_tuple_space(const SimpleIteration& it, const TupleSpace& t) {
  std::vector<std::string> parts;
  if (t.hs) parts.push_back("S:" + it.order().format(t.hs));
  if (t.hc) parts.push_back("C:" + it.order().format(t.hc));
  for (auto [x, w] : t.W) parts.push_back("W_" + it.order().label(x) + "=" + ordinals(w));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out.empty() ? "{}" : out;
}

std::uint64_t tuple_space_size(const SimpleIteration& it, const TupleSpace& t) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  auto mul = [&](std::uint64_t f) { n = (f != 0 && n > kMax / f) ? kMax : n * f; };
  for (int x : points_of(t.hs)) mul(static_cast<std::uint64_t>(it.part(x).model->z_size()));
  for (auto [x, w] : t.W) {
    const int c = std::popcount(w);
    mul(c >= 64 ? kMax : std::uint64_t{1} << c);
  }
  return n;
}

std::string format_point(const SimpleIteration& it, const TuplePoint& z) {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (std::size_t x = 0; x < z.values.size(); ++x) {
    if (!z.values[x]) continue;
    os << (first ? "" : ", ") << it.order().label(static_cast<int>(x)) << '=';
    first = false;
    if (it.part(static_cast<int>(x)).kind == Kind::C)
      os << ordinals(*z.values[x]);
    else
      os << it.part(static_cast<int>(x)).model->z_labels.at(*z.values[x]);
  }
  os << '>';
  return os.str();
}

std::vector<TuplePoint> enumerate_tuple_space(const SimpleIteration& it, const TupleSpace& t, std::size_t cap) {
  if (tuple_space_size(it, t) > cap) throw ResourceError("tuple space points", cap);
  std::vector<TuplePoint> out(1);
  out[0].values.resize(it.size());
  for (int x = 0; x < it.size(); ++x) {
    std::vector<std::uint64_t> options;
    if (contains(t.hs, x)) {
      for (int z = 0; z < it.part(x).model->z_size(); ++z) options.push_back(z);
    } else if (contains(t.hc, x)) {
      // every sub-mask of W_x
      const std::uint64_t w = t.W.at(x);
      std::uint64_t s = 0;
      do {
        options.push_back(s);
        s = (s - w) & w;
      } while (s != 0);
      std::sort(options.begin(), options.end());
    } else {
      continue;
    }
    std::vector<TuplePoint> next;
    next.reserve(out.size() * options.size());
    for (const auto& z : out)
      for (auto v : options) {
        TuplePoint n = z;
        n.values[x] = v;
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

TuplePoint restrict_tuple(const SimpleIteration& it, const GenericSequence& g, const TupleSpace& t) {
  TuplePoint z;
  z.values.resize(it.size());
  for (int x : points_of(t.hs | t.hc)) {
    if (!contains(g.domain, x)) throw Error("generic sequence has no component at " + it.order().label(x));
    if (contains(t.hs, x))
      z.values[x] = g.coords[x].value;
    else
      z.values[x] = g.coords[x].value & t.W.at(x);
  }
  return z;
}

TuplePoint restrict_tuple(const TuplePoint& z, const TupleSpace& t) {
  TuplePoint out;
  out.values.resize(z.values.size());
  for (int x : points_of(t.hs | t.hc)) {
    if (static_cast<std::size_t>(x) >= z.values.size() || !z.values[x])
      throw Error("point has no component at rank " + std::to_string(x));
    out.values[x] = contains(t.hs, x) ? *z.values[x] : (*z.values[x] & t.W.at(x));
  }
  return out;
}

}  // namespace tiw
