#include "permfe/weight.hpp"

#include <sstream>

#include "permfe/errors.hpp"

namespace permfe {

std::string VarId::to_string() const {
  std::ostringstream out;
  out << tier << '_';
  if (col == 0) {
    out << row;
  } else {
    out << '{' << row << ',' << col << '}';
  }
  return out.str();
}

int WeightMonomial::exponent(VarId v) const {
  auto it = vars.find(v);
  return it == vars.end() ? 0 : it->second;
}

void WeightMonomial::bump(VarId v, int by) {
  if (by != 0) vars[v] += by;
}

std::string WeightMonomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  if (t_exponent > 0) {
    sep();
    out << "t";
    if (t_exponent > 1) out << '^' << t_exponent;
  }
  for (const auto& [v, e] : vars) {
    sep();
    out << v.to_string();
    if (e > 1) out << '^' << e;
  }
  return first ? "1" : out.str();
}

namespace {

// Number of 21-pairs strictly after position `from` whose values both
// exceed `floor`.
int descents_above(const Permutation& pi, int from, int floor) {
  int c = 0;
  for (int b = from + 1; b < pi.size(); ++b) {
    if (pi[b] <= floor) continue;
    for (int d = b + 1; d < pi.size(); ++d) {
      if (pi[d] > floor && pi[d] < pi[b]) ++c;
    }
  }
  return c;
}

// Number of 132-triples strictly after `from` with every value above `floor`.
int tail_swap_triples_above(const Permutation& pi, int from, int floor) {
  int c = 0;
  for (int b = from + 1; b < pi.size(); ++b) {
    if (pi[b] <= floor) continue;
    c += descents_above(pi, b, pi[b]);
  }
  return c;
}

int ascents_above(const Permutation& pi, int from, int floor) {
  int c = 0;
  for (int b = from + 1; b < pi.size(); ++b) {
    if (pi[b] <= floor) continue;
    for (int d = b + 1; d < pi.size(); ++d) {
      if (pi[d] > pi[b]) ++c;
    }
  }
  return c;
}

WeightMonomial tail_swap_weight(const Permutation& pi, int k) {
  WeightMonomial w;
  const int n = pi.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[a] > pi[b]) w.bump({'x', pi[b], 0});
    }
  }
  if (k == 3) {
    for (int a = 0; a < n; ++a) w.t_exponent += descents_above(pi, a, pi[a]);
    return w;
  }
  for (int a = 0; a < n; ++a) {
    w.bump({'y', pi[a], 0}, descents_above(pi, a, pi[a]));
  }
  if (k == 4) {
    for (int a = 0; a < n; ++a) {
      w.t_exponent += tail_swap_triples_above(pi, a, pi[a]);
    }
    return w;
  }
  for (int a = 0; a < n; ++a) {
    w.bump({'z', pi[a], 0}, tail_swap_triples_above(pi, a, pi[a]));
  }
  // 12354: a 1243-quadruple preceded by a smaller entry.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[b] > pi[a]) w.t_exponent += tail_swap_triples_above(pi, b, pi[b]);
    }
  }
  return w;
}

WeightMonomial increasing_weight(const Permutation& pi, int k) {
  WeightMonomial w;
  const int n = pi.size();
  for (int a = 0; a < n; ++a) {
    int larger_after = 0;
    for (int b = a + 1; b < n; ++b) larger_after += pi[b] > pi[a];
    w.bump({'x', pi[a], 0}, larger_after);
  }
  if (k == 3) {
    for (int a = 0; a < n; ++a) w.t_exponent += ascents_above(pi, a, pi[a]);
    return w;
  }
  for (int a = 0; a < n; ++a) {
    w.bump({'y', pi[a], 0}, ascents_above(pi, a, pi[a]));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[b] > pi[a]) w.t_exponent += ascents_above(pi, b, pi[b]);
    }
  }
  return w;
}

WeightMonomial cycle_weight(const Permutation& pi, int k) {
  WeightMonomial w;
  const int n = pi.size();
  for (int a = 0; a < n; ++a) {
    const int i = pi[a];
    for (int b = a + 1; b < n; ++b) {
      if (pi[b] >= i) continue;
      // pair (i, pi_b) counts towards x_{i,j} for pi_b < j <= i
      for (int j = pi[b] + 1; j <= i; ++j) w.bump({'x', i, j});
    }
  }
  // 231-triples (i, w, v): later w > i, then later v < i.
  auto triples = [&](int a, auto&& on_triple) {
    const int i = pi[a];
    for (int b = a + 1; b < n; ++b) {
      if (pi[b] <= i) continue;
      for (int c = b + 1; c < n; ++c) {
        if (pi[c] < i) on_triple(pi[c]);
      }
    }
  };
  if (k == 3) {
    for (int a = 0; a < n; ++a) triples(a, [&](int) { ++w.t_exponent; });
    return w;
  }
  for (int a = 0; a < n; ++a) {
    const int i = pi[a];
    triples(a, [&](int v) {
      for (int j = v + 1; j <= i; ++j) w.bump({'y', i, j});
    });
  }
  // 2341: a 231-triple (w1, w2, v) preceded by an entry between v and w1.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[b] <= pi[a]) continue;
      triples(b, [&](int v) {
        if (v < pi[a]) ++w.t_exponent;
      });
    }
  }
  return w;
}

}  // namespace

WeightMonomial weight_monomial(const Permutation& pi,
                               const PatternSpec& family) {
  const int k = family.length();
  switch (family.kind()) {
    case PatternSpec::Kind::TailSwap:
      if (k >= 3 && k <= 5) return tail_swap_weight(pi, k);
      break;
    case PatternSpec::Kind::Increasing:
      if (k == 3 || k == 4) return increasing_weight(pi, k);
      break;
    case PatternSpec::Kind::Cycle:
      if (k == 3 || k == 4) return cycle_weight(pi, k);
      break;
    case PatternSpec::Kind::Explicit:
      break;
  }
  throw NotImplemented("no catalytic weight for pattern " + family.name());
}

}  // namespace permfe
