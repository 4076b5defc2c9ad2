// Acceptance suite: runs every checked property at desk scale and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "adc/constructions.hpp"
#include "adc/decompose.hpp"
#include "adc/enumerate.hpp"
#include "oracles.hpp"

using namespace adc;

namespace {

struct Harness {
  int failures = 0;
  int index = 0;

  void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::ostringstream line;
    line << "[" << (index < 10 ? " " : "") << index << "] "
         << (ok ? "PASS" : "FAIL") << " " << name;
    std::printf("%-64s (%.2fs)%s%s\n", line.str().c_str(), elapsed,
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

std::vector<AugmentedComplex> globe_families(int maxp) {
  std::vector<AugmentedComplex> out;
  for (int p = 0; p <= maxp; ++p) {
    out.push_back(globe(p));
    for (int n = 0; n < p; ++n) {
      out.push_back(composable_pair(p, n));
      out.push_back(composable_triple(p, n));
      for (int m = 0; m < n; ++m) out.push_back(interchange_quad(p, n, m));
    }
  }
  return out;
}

bool check_complex_properties(const AugmentedComplex& K, std::string& detail) {
  if (!K.validate().ok()) {
    detail = "validation failed";
    return false;
  }
  const AtomTable& table = K.atoms();
  for (const auto& b : K.basis_elements()) {
    for (int n = 0; n < b.degree; ++n) {
      ChainVector lo = table.component(b.id, Sign::minus, n);
      ChainVector hi = table.component(b.id, Sign::plus, n);
      if (!lo.is_nonnegative() || !hi.is_nonnegative() || !meet(lo, hi).is_zero()) {
        detail = "atom condition failed at " + b.id;
        return false;
      }
    }
  }
  if (!K.is_unital()) {
    detail = "not unital";
    return false;
  }
  if (!K.is_strongly_loop_free()) {
    detail = "not strongly loop-free";
    return false;
  }
  if (!order_witnesses_strong_loop_freeness(K, K.strong_loop_free_result().order)) {
    detail = "strong witness failed re-check";
    return false;
  }
  if (!K.is_loop_free()) {
    detail = "strongly loop-free complex is not loop-free";
    return false;
  }
  return true;
}

oracle::Sequence as_sequence(const Cell& x) {
  std::vector<ChainVector> minus, plus;
  for (int n = 0; n <= x.dimension(); ++n) {
    minus.push_back(x.component(Sign::minus, n));
    plus.push_back(x.component(Sign::plus, n));
  }
  return {std::move(minus), std::move(plus)};
}

// recursive re-check of one factorization: factors are nu-cells congruent to
// their atoms, recompose to x, and the leaf multiset above the index matches
// the congruence list
bool check_decomposition(const Cell& x, std::string& detail) {
  const AugmentedComplex& K = x.complex();
  int r = decomposition_index(x);
  if (r < 0) {
    if (!atom_id(x)) {
      detail = "index -1 cell is not an atom";
      return false;
    }
    return true;
  }
  auto factors = decompose_step(x);
  if (factors.size() < 2) {
    detail = "fewer than two factors";
    return false;
  }
  Cell recomposed = factors[0].first;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [cell, id] = factors[i];
    if (!cell.is_nu()) {
      detail = "factor is not a nu-cell";
      return false;
    }
    Cell a = atom_cell(K, id);
    for (int m = r + 1; m <= std::max(cell.dimension(), a.dimension()); ++m) {
      if (cell.component(Sign::minus, m) != a.component(Sign::minus, m) ||
          cell.component(Sign::plus, m) != a.component(Sign::plus, m)) {
        detail = "factor not congruent to its atom";
        return false;
      }
    }
    if (i > 0) recomposed = compose(r, recomposed, factors[i].first);
    if (!check_decomposition(cell, detail)) return false;
  }
  if (!(recomposed == x)) {
    detail = "factors do not recompose";
    return false;
  }
  return true;
}

} // namespace

int main() {
  Harness h;

  h.criterion("validation suite (simplexes, globes, cubes, tensors)",
              [](std::string& detail) {
                std::vector<AugmentedComplex> pool;
                for (int p = 0; p <= 5; ++p) pool.push_back(simplex(p));
                for (auto& K : globe_families(3)) pool.push_back(std::move(K));
                for (int p = 0; p <= 3; ++p) pool.push_back(cube(p));
                std::vector<AugmentedComplex> small = {simplex(1), simplex(2),
                                                       globe(1), globe(2)};
                for (const auto& K : small) {
                  for (const auto& L : small) pool.push_back(tensor(K, L));
                }
                for (const auto& K : pool) {
                  if (!check_complex_properties(K, detail)) return false;
                }
                return true;
              });

  h.criterion("simplex atom tables equal the parity-sum oracle", [](std::string& detail) {
    for (int p = 0; p <= 4; ++p) {
      AugmentedComplex K = simplex(p);
      const AtomTable& table = K.atoms();
      std::vector<std::vector<int>> tuples;
      for (unsigned long mask = 1; mask < (1ul << (p + 1)); ++mask) {
        std::vector<int> tuple;
        for (int v = 0; v <= p; ++v) {
          if (mask & (1ul << v)) tuple.push_back(v);
        }
        tuples.push_back(std::move(tuple));
      }
      for (const auto& tuple : tuples) {
        std::string id = oracle::simplex_tuple_id(tuple);
        int n = static_cast<int>(tuple.size()) - 1;
        for (int m = 0; m <= n; ++m) {
          for (Sign s : {Sign::minus, Sign::plus}) {
            if (table.component(id, s, m) != oracle::simplex_atom_oracle(tuple, m, s)) {
              detail = "mismatch at " + id;
              return false;
            }
          }
        }
        if (table.component(id, Sign::minus, 0) !=
                ChainVector::unit(0, std::to_string(tuple.front())) ||
            table.component(id, Sign::plus, 0) !=
                ChainVector::unit(0, std::to_string(tuple.back()))) {
          detail = "endpoint mismatch at " + id;
          return false;
        }
      }
    }
    return true;
  });

  h.criterion("enumeration counts vs independent brute force", [](std::string& detail) {
    AugmentedComplex point = simplex(0);
    for (int n = 0; n <= 4; ++n) {
      if (enumerate_cells(point, n).size() != 1) {
        detail = "point count";
        return false;
      }
    }
    if (enumerate_cells(simplex(1), 1).size() != 3 ||
        enumerate_cells(globe(1), 1).size() != 3) {
      detail = "hand-forced counts";
      return false;
    }
    for (const AugmentedComplex& K : {simplex(2), cube(2)}) {
      for (int n = 0; n <= 2; ++n) {
        std::vector<oracle::Sequence> expected = oracle::brute_force_nu_cells(K, n, 1);
        std::vector<oracle::Sequence> got;
        for (const Cell& x : enumerate_cells(K, n)) got.push_back(as_sequence(x));
        std::sort(got.begin(), got.end());
        if (got != expected) {
          detail = "mismatch at level " + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  });

  h.criterion("no nu-cell carries a coefficient 2 (bound-2 search)",
              [](std::string& detail) {
                for (const AugmentedComplex& K :
                     {simplex(2), tensor(globe(1), globe(1))}) {
                  int n = K.max_degree();
                  std::vector<oracle::Sequence> bound2 =
                      oracle::brute_force_nu_cells_pruned(K, n, 2);
                  for (const auto& [minus, plus] : bound2) {
                    for (const auto& side : {minus, plus}) {
                      for (const auto& v : side) {
                        if (!v.is_zero_one()) {
                          detail = "found a valid cell with a large coefficient";
                          return false;
                        }
                      }
                    }
                  }
                  std::vector<oracle::Sequence> bound1 =
                      oracle::brute_force_nu_cells_pruned(K, n, 1);
                  if (bound1 != bound2) {
                    detail = "bound-2 search found extra cells";
                    return false;
                  }
                }
                return true;
              });

  h.criterion("decomposition round-trip with nu-valid factors", [](std::string& detail) {
    std::vector<std::pair<AugmentedComplex, int>> jobs;
    jobs.emplace_back(simplex(2), 2);
    jobs.emplace_back(simplex(3), 3);
    jobs.emplace_back(cube(2), 2);
    for (const auto& [K, n] : jobs) {
      for (const Cell& x : enumerate_cells(K, n)) {
        CompositionTree tree = decompose_full(x);
        if (!(evaluate(K, tree) == x)) {
          detail = "evaluation differs";
          return false;
        }
        if (!check_decomposition(x, detail)) return false;
        // leaf multiset above the decomposition index matches the congruence
        // atom list; for atoms this is the full leaf set
        int r = decomposition_index(x);
        std::vector<std::string> high;
        for (const auto& id : tree_leaves(tree)) {
          if (K.degree_of(id) > r) high.push_back(id);
        }
        std::vector<std::string> expected = atom_list_mod(x, r);
        std::sort(high.begin(), high.end());
        std::sort(expected.begin(), expected.end());
        if (high != expected) {
          detail = "leaf multiset mismatch";
          return false;
        }
      }
    }
    return true;
  });

  h.criterion("omega-category axioms incl. interchange", [](std::string& detail) {
    for (const AugmentedComplex& K : {simplex(2), cube(2)}) {
      int top = K.max_degree();
      std::vector<Cell> cells = enumerate_cells(K, top);
      int maxn = top + 1;

      for (const Cell& x : cells) {
        // (ii) d at the dimension is the identity
        if (!(d(Sign::minus, x.dimension(), x) == x) ||
            !(d(Sign::plus, x.dimension(), x) == x)) {
          detail = "(ii)";
          return false;
        }
        // (iii) composition of boundary operators
        for (int m = 0; m <= maxn; ++m) {
          for (int n = 0; n <= maxn; ++n) {
            for (Sign a : {Sign::minus, Sign::plus}) {
              for (Sign b : {Sign::minus, Sign::plus}) {
                Cell lhs = d(b, m, d(a, n, x));
                Cell rhs = m < n ? d(b, m, x) : d(a, n, x);
                if (!(lhs == rhs)) {
                  detail = "(iii)";
                  return false;
                }
              }
            }
          }
        }
        // (iv) identity laws
        for (int n = 0; n <= maxn; ++n) {
          if (!(compose(n, d(Sign::minus, n, x), x) == x) ||
              !(compose(n, x, d(Sign::plus, n, x)) == x)) {
            detail = "(iv)";
            return false;
          }
        }
      }

      for (int n = 0; n <= top; ++n) {
        for (const Cell& x : cells) {
          for (const Cell& y : cells) {
            // (i) composability is exactly the boundary match
            bool matches = d(Sign::plus, n, x) == d(Sign::minus, n, y);
            if (matches != composable(n, x, y)) {
              detail = "(i)";
              return false;
            }
            if (!matches) continue;
            Cell xy = compose(n, x, y);
            // closure inside the enumerated filtration level
            if (std::find(cells.begin(), cells.end(), xy) == cells.end()) {
              detail = "composite escaped the enumeration";
              return false;
            }
            // (v) boundaries of composites
            for (int m = 0; m < n; ++m) {
              for (Sign s : {Sign::minus, Sign::plus}) {
                Cell dm = d(s, m, xy);
                if (!(dm == d(s, m, x)) || !(dm == d(s, m, y)) ||
                    !(dm == compose(n, d(s, m, x), d(s, m, y)))) {
                  detail = "(v) m<n";
                  return false;
                }
              }
            }
            if (!(d(Sign::minus, n, xy) == d(Sign::minus, n, x)) ||
                !(d(Sign::plus, n, xy) == d(Sign::plus, n, y))) {
              detail = "(v) at n";
              return false;
            }
            for (int m = n + 1; m <= maxn; ++m) {
              for (Sign s : {Sign::minus, Sign::plus}) {
                if (!(d(s, m, xy) == compose(n, d(s, m, x), d(s, m, y)))) {
                  detail = "(v) m>n";
                  return false;
                }
              }
            }
            // (vi) associativity
            for (const Cell& z : cells) {
              if (!composable(n, y, z)) continue;
              if (!(compose(n, xy, z) == compose(n, x, compose(n, y, z)))) {
                detail = "(vi)";
                return false;
              }
            }
          }
        }
      }

      // (vii) interchange
      for (int m = 0; m < top; ++m) {
        for (int n = m + 1; n <= top; ++n) {
          for (const Cell& x : cells) {
            for (const Cell& y : cells) {
              if (!composable(n, x, y)) continue;
              Cell xy = compose(n, x, y);
              for (const Cell& xp : cells) {
                for (const Cell& yp : cells) {
                  if (!composable(n, xp, yp)) continue;
                  Cell xpyp = compose(n, xp, yp);
                  if (!composable(m, xy, xpyp)) continue;
                  if (!composable(m, x, xp) || !composable(m, y, yp)) {
                    detail = "(vii) right side undefined";
                    return false;
                  }
                  Cell lhs = compose(m, xy, xpyp);
                  Cell rhs = compose(n, compose(m, x, xp), compose(m, y, yp));
                  if (!(lhs == rhs)) {
                    detail = "(vii)";
                    return false;
                  }
                }
              }
            }
          }
        }
      }
    }
    return true;
  });

  h.criterion("triangle identity and class additivity", [](std::string& detail) {
    std::vector<std::pair<AugmentedComplex, int>> jobs;
    jobs.emplace_back(simplex(2), 2);
    jobs.emplace_back(simplex(3), 3);
    jobs.emplace_back(cube(2), 2);
    for (const auto& [K, top] : jobs) {
      std::vector<Cell> cells = enumerate_cells(K, top);
      for (const Cell& x : cells) {
        if (!(eta(x) == x)) {
          detail = "eta(x) != x";
          return false;
        }
      }
      for (int m = 0; m < top; ++m) {
        for (const Cell& x : cells) {
          for (const Cell& y : cells) {
            if (!composable(m, x, y)) continue;
            Cell xy = compose(m, x, y);
            for (int n = std::max(m + 1, xy.dimension()); n <= top; ++n) {
              if (pi_class(xy, n) != pi_class(x, n) + pi_class(y, n)) {
                detail = "class additivity";
                return false;
              }
            }
          }
        }
      }
    }
    return true;
  });

  h.criterion("tensor atom formula and order witness", [](std::string& detail) {
    auto check_pair = [&](const AugmentedComplex& K, const AugmentedComplex& L) {
      AugmentedComplex T = tensor(K, L);
      const AtomTable& tk = K.atoms();
      const AtomTable& tl = L.atoms();
      const AtomTable& tt = T.atoms();
      for (const auto& a : K.basis_elements()) {
        for (const auto& b : L.basis_elements()) {
          for (int n = 0; n <= a.degree + b.degree; ++n) {
            for (Sign alpha : {Sign::minus, Sign::plus}) {
              ChainVector expected(n);
              for (int i = 0; i <= n; ++i) {
                Sign beta = (i % 2 == 0) ? alpha : opposite(alpha);
                ChainVector left = tk.component(a.id, alpha, i);
                ChainVector right = tl.component(b.id, beta, n - i);
                for (const auto& [x, cx] : left.terms()) {
                  for (const auto& [y, cy] : right.terms()) {
                    expected += (cx * cy) * ChainVector::unit(n, tensor_id(x, y));
                  }
                }
              }
              if (tt.component(tensor_id(a.id, b.id), alpha, n) != expected) {
                detail = "formula at " + tensor_id(a.id, b.id);
                return false;
              }
            }
          }
        }
      }
      std::vector<std::string> ord = tensor_order_witness(
          K, L, K.strong_loop_free_result().order, L.strong_loop_free_result().order);
      if (!order_witnesses_strong_loop_freeness(T, ord)) {
        detail = "order witness failed";
        return false;
      }
      return true;
    };
    return check_pair(simplex(1), simplex(1)) && check_pair(globe(1), simplex(2));
  });

  h.criterion("hom desk scale: validity and the 0-cell bijection",
              [](std::string& detail) {
                AugmentedComplex K = globe(1);
                AugmentedComplex L = simplex(2);
                AugmentedComplex H = hom(K, L);
                AugmentedComplex Hp = hom_prime(K, L);
                if (!H.validate().ok() || !Hp.validate().ok()) {
                  detail = "hom complex failed validation";
                  return false;
                }
                std::vector<Morphism> decoded;
                for (const Cell& x : hom_zero_cells(H, 1)) {
                  decoded.push_back(morphism_of_hom_zero_cell(x));
                }
                std::vector<Morphism> morphisms = enumerate_morphisms(K, L, 1);
                std::sort(decoded.begin(), decoded.end());
                std::sort(morphisms.begin(), morphisms.end());
                if (decoded != morphisms || decoded.empty()) {
                  detail = "0-cells and morphisms differ";
                  return false;
                }
                for (const AugmentedComplex& C : {globe(1), simplex(2)}) {
                  std::vector<Morphism> endo = enumerate_morphisms(C, C, 1);
                  if (std::find(endo.begin(), endo.end(), identity_morphism(C)) ==
                      endo.end()) {
                    detail = "identity morphism missing";
                    return false;
                  }
                }
                return true;
              });

  h.criterion("presentations of globes and the 2-simplex", [](std::string& detail) {
    for (int p = 0; p <= 3; ++p) {
      Presentation pres = presentation(globe(p));
      int top_count = 0;
      for (const auto& g : pres.generators) {
        if (g.dim == p) ++top_count;
      }
      if (top_count != 1) {
        detail = "globe should have one top generator";
        return false;
      }
      for (const auto& rel : pres.relations) {
        if (!rel.word.is_leaf()) {
          detail = "globe boundary words must be single atoms";
          return false;
        }
      }
      for (const auto& g : pres.generators) {
        if (g.dim == p) continue;
        bool named = false;
        for (const auto& rel : pres.relations) {
          if (rel.word.is_leaf() && rel.word.atom == g.id) named = true;
        }
        if (!named) {
          detail = "lower generator not reached by a boundary word";
          return false;
        }
      }
    }
    Presentation s2 = presentation(simplex(2));
    const Presentation::Relation* minus = s2.boundary_word("012", Sign::minus);
    const Presentation::Relation* plus = s2.boundary_word("012", Sign::plus);
    if (!minus || !plus || to_word(minus->word) != "⟨02⟩" ||
        to_word(plus->word) != "⟨01⟩ #0 ⟨12⟩") {
      detail = "2-simplex boundary words differ";
      return false;
    }
    return true;
  });

  std::printf("%d/%d criteria passed\n", h.index - h.failures, h.index);
  return h.failures == 0 ? 0 : 1;
}
