#include "adc/enumerate.hpp"

#include <cmath>
#include <set>

namespace adc {

std::vector<ChainVector> bounded_vectors(const AugmentedComplex& K, int degree,
                                         const Int& bound) {
  if (bound < 0) throw std::invalid_argument("bounded_vectors: negative bound");
  const std::vector<std::string>& ids = K.basis(degree);
  double bits = static_cast<double>(ids.size()) *
                std::log2(bound.convert_to<double>() + 1.0);
  if (bits > 24.0) {
    throw std::domain_error("bounded_vectors: search space of ~2^" +
                            std::to_string(static_cast<long>(bits)) +
                            " candidates at degree " + std::to_string(degree));
  }

  std::vector<ChainVector> out;
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
  return out;
}

std::vector<Cell> enumerate_cells(const AugmentedComplex& K, int n,
                                  const Int& bound) {
  if (n < 0) throw std::invalid_argument("enumerate_cells: negative level");
  if (!K.based()) {
    throw std::domain_error(
        "enumerate_cells: not available on a predicate-submonoid complex");
  }
  if (!K.validate().ok()) {
    throw std::domain_error("enumerate_cells: complex is invalid:\n" +
                            K.validate().to_string());
  }

  std::set<Cell> results;
  std::vector<ChainVector> minus, plus;

  // candidates at a degree whose boundary matches the running difference
  auto matching = [&](int k, const ChainVector& diff) {
    std::vector<ChainVector> out;
    for (ChainVector& v : bounded_vectors(K, k, bound)) {
      if (K.boundary(v) == diff) out.push_back(std::move(v));
    }
    return out;
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      results.insert(make_cell(K, minus, plus, true));
      return;
    }
    ChainVector diff = plus.back() - minus.back();
    std::vector<ChainVector> candidates = matching(k, diff);
    if (k == n) {
      // top level: both components coincide
      for (const ChainVector& v : candidates) {
        minus.push_back(v);
        plus.push_back(v);
        self(self, k + 1);
        minus.pop_back();
        plus.pop_back();
      }
      return;
    }
    for (const ChainVector& a : candidates) {
      for (const ChainVector& b : candidates) {
        minus.push_back(a);
        plus.push_back(b);
        self(self, k + 1);
        minus.pop_back();
        plus.pop_back();
      }
    }
  };

  std::vector<ChainVector> unit_aug;
  for (ChainVector& v : bounded_vectors(K, 0, bound)) {
    if (K.augmentation(v) == 1) unit_aug.push_back(std::move(v));
  }
  for (const ChainVector& a : unit_aug) {
    if (n == 0) {
      minus.assign(1, a);
      plus.assign(1, a);
      rec(rec, 1);
      continue;
    }
    for (const ChainVector& b : unit_aug) {
      minus.assign(1, a);
      plus.assign(1, b);
      rec(rec, 1);
    }
  }

  return {results.begin(), results.end()};
}

} // namespace adc
