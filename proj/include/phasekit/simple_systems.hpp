#pragma once

#include "phasekit/detail/simple_systems_data.hpp"
#include "phasekit/error.hpp"
#include "phasekit/model_catalog.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phasekit {

// Variables of the symmetrized N=3 systems.
namespace var {
enum Index : int { k1, k2, k3, k4, k5, L1, L2, L3, S1, S2 };
}
inline constexpr int kNumVars = 10;

inline constexpr std::array<std::string_view, kNumVars> kVarNames{"k1", "k2", "k3", "k4", "k5",
                                                                  "L1", "L2", "L3", "S1", "S2"};

inline int var_index(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return i;
  throw Error(ErrorCode::InvalidInput, "unknown variable '" + std::string(name) + "'");
}

struct Term {
  std::int64_t coeff = 0;
  std::array<std::uint8_t, kNumVars> exp{};
};

struct Polynomial {
  std::vector<Term> terms;

  template <class T>
  static T monomial(const Term& t, const std::array<T, kNumVars>& x, int skip = -1) {
    T m = T(static_cast<double>(t.coeff));
    for (int v = 0; v < kNumVars; ++v) {
      if (v == skip) continue;
      for (int e = 0; e < t.exp[v]; ++e) m *= x[v];
    }
    return m;
  }

  template <class T>
  T eval(const std::array<T, kNumVars>& x) const {
    T s = T(0);
    for (const auto& t : terms) s += monomial(t, x);
    return s;
  }

  // sum of |term| values: the natural magnitude scale of eval()
  template <class T>
  T abs_terms(const std::array<T, kNumVars>& x) const {
    using std::abs;
    T s = T(0);
    for (const auto& t : terms) s += abs(monomial(t, x));
    return s;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms) d = std::max<int>(d, t.exp[var]);
    return d;
  }

  bool involves(int var) const { return degree_in(var) > 0; }

  // Coefficients of var^0..var^deg with all other variables substituted.
  template <class T>
  std::vector<T> coefficients_in(int var, const std::array<T, kNumVars>& x) const {
    std::vector<T> c(degree_in(var) + 1, T(0));
    for (const auto& t : terms) c[t.exp[var]] += monomial(t, x, var);
    return c;
  }
};

struct Relation {
  bool equation = true;  // poly = 0, else poly != 0
  int leader = -1;
  Polynomial poly;
};

struct SimpleSystem {
  ModelId model;
  int index = 0;  // 1-based position in the published list
  std::vector<Relation> relations;
};

struct SystemSet {
  ModelId model;
  std::vector<int> ranking;  // variable indices, highest rank first
  std::vector<SimpleSystem> systems;
  std::uint64_t checksum = 0;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline Polynomial parse_terms(std::string_view s) {
  Polynomial p;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos || tok.size() - colon - 1 != kNumVars)
      throw std::logic_error("malformed term '" + tok + "'");
    Term t;
    t.coeff = std::stoll(tok.substr(0, colon));
    for (int v = 0; v < kNumVars; ++v) t.exp[v] = static_cast<std::uint8_t>(tok[colon + 1 + v] - '0');
    p.terms.push_back(t);
  }
  return p;
}

}  // namespace detail

// Parses one model's term-list text and checks the structural invariants:
// leaders agree with the ranking, leaders are pairwise distinct inside each
// system, and every relation led by a rate has degree <= 2 in its leader.
inline SystemSet parse_simple_systems(std::string_view text) {
  SystemSet set;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw std::logic_error("simple systems line " + std::to_string(line_no) + ": " + msg);
    };
    if (line.substr(0, 6) == "MODEL ") {
      set.model = ModelId::parse(detail::trim(line.substr(6)));
    } else if (line.substr(0, 8) == "RANKING ") {
      std::istringstream in{std::string(line.substr(8))};
      std::string v;
      while (in >> v) set.ranking.push_back(var_index(v));
      if (set.ranking.size() != kNumVars) fail("ranking must list all variables");
    } else if (line.substr(0, 7) == "SYSTEM ") {
      SimpleSystem s;
      s.model = set.model;
      s.index = std::stoi(std::string(line.substr(7)));
      set.systems.push_back(s);
    } else {
      const auto a = line.find(';');
      const auto b = line.find(';', a + 1);
      if (a == std::string_view::npos || b == std::string_view::npos) fail("expected 'KIND; leader; terms'");
      if (set.systems.empty()) fail("relation outside SYSTEM");
      Relation r;
      auto kind = detail::trim(line.substr(0, a));
      if (kind == "EQ")
        r.equation = true;
      else if (kind == "NEQ")
        r.equation = false;
      else
        fail("unknown relation kind");
      r.leader = var_index(detail::trim(line.substr(a + 1, b - a - 1)));
      r.poly = detail::parse_terms(line.substr(b + 1));
      // the leader must be the highest-ranked variable present
      int lead = -1;
      for (int v : set.ranking)
        if (r.poly.involves(v)) {
          lead = v;
          break;
        }
      if (lead != r.leader) fail("declared leader does not match the ranking");
      if (r.leader <= var::k5 && r.poly.degree_in(r.leader) > 2) fail("degree in rate leader exceeds 2");
      auto& rels = set.systems.back().relations;
      for (const auto& other : rels)
        if (other.leader == r.leader) fail("two relations share leader " + std::string(kVarNames[r.leader]));
      rels.push_back(std::move(r));
    }
  }
  if (set.ranking.empty()) throw std::logic_error("simple systems: missing RANKING");
  set.checksum = fnv1a64(text);
  return set;
}

// The embedded decompositions, verified against their pinned checksums on first use.
inline const SystemSet& simple_systems(ModelKind kind) {
  static const std::map<ModelKind, SystemSet> all = [] {
    std::map<ModelKind, SystemSet> m;
    for (const auto& e : detail::kEmbeddedSystems) {
      if (fnv1a64(e.text) != e.fnv1a)
        throw std::logic_error("embedded simple systems for " + std::string(e.model) + " fail checksum");
      auto set = parse_simple_systems(e.text);
      m.emplace(set.model.kind, std::move(set));
    }
    return m;
  }();
  auto it = all.find(kind);
  if (it == all.end()) throw Error(ErrorCode::InvalidInput, "no simple systems for this model");
  return it->second;
}

}  // namespace phasekit
