#pragma once

// Test-only oracles, coded independently of the library's computation paths:
// a closed-form for oriented-simplex atom components, a from-scratch validity
// check for double sequences, and plain brute-force cell enumeration.

#include <string>
#include <utility>
#include <vector>

#include "adc/complex.hpp"

namespace oracle {

using adc::AugmentedComplex;
using adc::ChainVector;
using adc::Int;
using adc::Sign;

inline std::string simplex_tuple_id(const std::vector<int>& tuple) {
  std::string id;
  for (int v : tuple) id += std::to_string(v);
  return id;
}

// Atom component of an oriented simplex by the parity-alternation sum: apply
// strictly increasing face indices whose parities alternate starting at the
// requested sign, removing the corresponding vertex positions.
inline ChainVector simplex_atom_oracle(const std::vector<int>& tuple, int m,
                                       Sign alpha) {
  int n = static_cast<int>(tuple.size()) - 1;
  if (m > n) return ChainVector(m);
  int removals = n - m;
  ChainVector out(m);

  std::vector<int> subset;
  auto emit = [&]() {
    std::vector<int> face;
    std::size_t s = 0;
    for (int pos = 0; pos <= n; ++pos) {
      if (s < subset.size() && subset[s] == pos) {
        ++s;
      } else {
        face.push_back(tuple[static_cast<std::size_t>(pos)]);
      }
    }
    out += ChainVector::unit(m, simplex_tuple_id(face));
  };
  auto rec = [&](auto&& self, int next, bool want_even) -> void {
    if (static_cast<int>(subset.size()) == removals) {
      emit();
      return;
    }
    for (int i = next; i <= n; ++i) {
      if ((i % 2 == 0) != want_even) continue;
      subset.push_back(i);
      self(self, i + 1, !want_even);
      subset.pop_back();
    }
  };
  if (removals == 0) {
    emit();
  } else {
    rec(rec, 0, alpha == Sign::plus);
  }
  return out;
}

using Sequence = std::pair<std::vector<ChainVector>, std::vector<ChainVector>>;

inline Sequence trim(Sequence seq) {
  while (!seq.first.empty() && seq.first.back().is_zero() &&
         seq.second.back().is_zero()) {
    seq.first.pop_back();
    seq.second.pop_back();
  }
  return seq;
}

// from-scratch nu-validity for a length-(n+1) double sequence over a based
// complex: boundary compatibility, top equality, nonnegativity, augmentation 1
inline bool naive_nu_valid(const AugmentedComplex& K,
                           const std::vector<ChainVector>& minus,
                           const std::vector<ChainVector>& plus) {
  std::size_t len = minus.size();
  if (plus.size() != len || len == 0) return false;
  auto bd = [&](const ChainVector& v) {
    ChainVector out(v.degree() - 1);
    for (const auto& [id, c] : v.terms()) out += c * K.boundary_of(id);
    return out;
  };
  for (std::size_t k = 0; k < len; ++k) {
    if (!minus[k].is_nonnegative() || !plus[k].is_nonnegative()) return false;
  }
  Int eminus = 0, eplus = 0;
  for (const auto& [id, c] : minus[0].terms()) eminus += c * K.augmentation_of(id);
  for (const auto& [id, c] : plus[0].terms()) eplus += c * K.augmentation_of(id);
  if (eminus != 1 || eplus != 1) return false;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    ChainVector diff = plus[k] - minus[k];
    if (bd(minus[k + 1]) != diff || bd(plus[k + 1]) != diff) return false;
  }
  if (minus[len - 1] != plus[len - 1]) return false;
  return true;
}

inline void all_vectors(const AugmentedComplex& K, int degree, const Int& bound,
                        std::vector<ChainVector>& out) {
  const std::vector<std::string>& ids = K.basis(degree);
  std::map<std::string, Int> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ids.size()) {
      out.emplace_back(degree, current);
      return;
    }
    for (Int c = 0; c <= bound; ++c) {
      if (c != 0) current[ids[i]] = c;
      self(self, i + 1);
      if (c != 0) current.erase(ids[i]);
    }
  };
  rec(rec, 0);
}

// every double sequence over degrees 0..n with coefficients in [0, bound],
// filtered only by the from-scratch validator
inline std::vector<Sequence> brute_force_nu_cells(const AugmentedComplex& K,
                                                  int n, const Int& bound) {
  std::vector<std::vector<ChainVector>> per_degree(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) all_vectors(K, k, bound, per_degree[k]);

  std::vector<Sequence> out;
  std::vector<ChainVector> minus, plus;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      if (naive_nu_valid(K, minus, plus)) out.push_back(trim({minus, plus}));
      return;
    }
    for (const ChainVector& a : per_degree[k]) {
      for (const ChainVector& b : per_degree[k]) {
        minus.push_back(a);
        plus.push_back(b);
        self(self, k + 1);
        minus.pop_back();
        plus.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// same search with necessary per-level conditions used to prune prefixes
// (augmentation 1, boundary compatibility, top equality); survivors still go
// through the full validator
inline std::vector<Sequence> brute_force_nu_cells_pruned(
    const AugmentedComplex& K, int n, const Int& bound) {
  std::vector<std::vector<ChainVector>> per_degree(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) all_vectors(K, k, bound, per_degree[k]);

  auto bd = [&](const ChainVector& v) {
    ChainVector out(v.degree() - 1);
    for (const auto& [id, c] : v.terms()) out += c * K.boundary_of(id);
    return out;
  };

  std::vector<Sequence> out;
  std::vector<ChainVector> minus, plus;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      if (naive_nu_valid(K, minus, plus)) out.push_back(trim({minus, plus}));
      return;
    }
    ChainVector diff = plus.back() - minus.back();
    for (const ChainVector& a : per_degree[k]) {
      if (bd(a) != diff) continue;
      for (const ChainVector& b : per_degree[k]) {
        if (k == n ? !(b == a) : bd(b) != diff) continue;
        minus.push_back(a);
        plus.push_back(b);
        self(self, k + 1);
        minus.pop_back();
        plus.pop_back();
      }
    }
  };
  for (const ChainVector& a : per_degree[0]) {
    Int ea = 0;
    for (const auto& [id, c] : a.terms()) ea += c * K.augmentation_of(id);
    if (ea != 1) continue;
    for (const ChainVector& b : per_degree[0]) {
      Int eb = 0;
      for (const auto& [id, c] : b.terms()) eb += c * K.augmentation_of(id);
      if (eb != 1) continue;
      if (n == 0 && !(a == b)) continue;
      minus.assign(1, a);
      plus.assign(1, b);
      rec(rec, 1);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace oracle
