#include "adc/cell.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace adc {

// internal factory with access to the private constructor
class CellOps {
 public:
  static Cell raw(const AugmentedComplex& K, std::vector<ChainVector> minus,
                  std::vector<ChainVector> plus) {
    return Cell(&K, std::move(minus), std::move(plus));
  }
};

Cell::Cell(const AugmentedComplex* K, std::vector<ChainVector> minus,
           std::vector<ChainVector> plus)
    : complex_(K), minus_(std::move(minus)), plus_(std::move(plus)) {
  assert(minus_.size() == plus_.size());
  while (!minus_.empty() && minus_.back().is_zero() && plus_.back().is_zero()) {
    minus_.pop_back();
    plus_.pop_back();
  }
  if (minus_.empty()) {
    nu_ = false;
    return;
  }
  nu_ = true;
  for (std::size_t n = 0; n < minus_.size() && nu_; ++n) {
    nu_ = complex_->in_submonoid(static_cast<int>(n), minus_[n]) &&
          complex_->in_submonoid(static_cast<int>(n), plus_[n]);
  }
  if (nu_) {
    nu_ = complex_->augmentation(minus_[0]) == 1 &&
          complex_->augmentation(plus_[0]) == 1;
  }
}

ChainVector Cell::component(Sign sign, int n) const {
  if (n < 0) throw std::invalid_argument("cell component: negative degree");
  const auto& seq = sign == Sign::minus ? minus_ : plus_;
  if (n >= static_cast<int>(seq.size())) return ChainVector(n);
  return seq[static_cast<std::size_t>(n)];
}

std::string Cell::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t n = 0; n < minus_.size(); ++n) {
    if (n) os << ", ";
    os << minus_[n].to_string() << " | " << plus_[n].to_string();
  }
  os << ")";
  return os.str();
}

CellCheck check_cell(const AugmentedComplex& K, std::vector<ChainVector> minus,
                     std::vector<ChainVector> plus, bool require_nu) {
  CellCheck out;
  auto fail = [&](std::string msg) { out.report.push_back(std::move(msg)); };

  std::size_t len = std::max(minus.size(), plus.size());
  while (minus.size() < len) minus.emplace_back(static_cast<int>(minus.size()));
  while (plus.size() < len) plus.emplace_back(static_cast<int>(plus.size()));

  bool structural_ok = true;
  for (std::size_t n = 0; n < len; ++n) {
    for (const auto* v : {&minus[n], &plus[n]}) {
      if (v->degree() != static_cast<int>(n)) {
        fail("component at position " + std::to_string(n) + " has degree " +
             std::to_string(v->degree()));
        structural_ok = false;
        continue;
      }
      for (const auto& [id, c] : v->terms()) {
        if (!K.has_element(id)) {
          fail("component at degree " + std::to_string(n) +
               " references unknown element '" + id + "'");
          structural_ok = false;
        } else if (K.degree_of(id) != static_cast<int>(n)) {
          fail("component at degree " + std::to_string(n) + " references '" +
               id + "' of degree " + std::to_string(K.degree_of(id)));
          structural_ok = false;
        }
      }
    }
  }
  if (!structural_ok) return out;

  for (std::size_t n = 0; n < len; ++n) {
    if (!K.in_group(static_cast<int>(n), minus[n]) ||
        !K.in_group(static_cast<int>(n), plus[n])) {
      fail("component at degree " + std::to_string(n) +
           " is not in the chain group");
      return out;
    }
  }

  for (std::size_t n = 0; n < len; ++n) {
    ChainVector diff = plus[n] - minus[n];
    if (n + 1 < len) {
      if (K.boundary(minus[n + 1]) != diff) {
        fail("d x^-_" + std::to_string(n + 1) + " != x^+_" + std::to_string(n) +
             " - x^-_" + std::to_string(n));
        return out;
      }
      if (K.boundary(plus[n + 1]) != diff) {
        fail("d x^+_" + std::to_string(n + 1) + " != x^+_" + std::to_string(n) +
             " - x^-_" + std::to_string(n));
        return out;
      }
    } else if (!diff.is_zero()) {
      fail("x^-_" + std::to_string(n) + " != x^+_" + std::to_string(n) +
           " at the top level");
      return out;
    }
  }

  Cell cell = CellOps::raw(K, std::move(minus), std::move(plus));
  if (require_nu && !cell.is_nu()) {
    for (int n = 0; n <= cell.dimension(); ++n) {
      for (Sign s : {Sign::minus, Sign::plus}) {
        if (!K.in_submonoid(n, cell.component(s, n))) {
          fail(std::string("x^") + sign_char(s) + "_" + std::to_string(n) +
               " is not in the distinguished submonoid");
          return out;
        }
      }
    }
    if (cell.dimension() < 0) {
      fail("the zero sequence is not a nu-cell");
      return out;
    }
    for (Sign s : {Sign::minus, Sign::plus}) {
      Int e = K.augmentation(cell.component(s, 0));
      if (e != 1) {
        fail(std::string("eps x^") + sign_char(s) + "_0 = " + e.str() +
             ", expected 1");
        return out;
      }
    }
    fail("not a nu-cell");
    return out;
  }
  out.cell = std::move(cell);
  return out;
}

Cell make_cell(const AugmentedComplex& K, std::vector<ChainVector> minus,
               std::vector<ChainVector> plus, bool require_nu) {
  CellCheck check =
      check_cell(K, std::move(minus), std::move(plus), require_nu);
  if (!check.ok()) {
    std::string msg = "invalid cell";
    for (const auto& item : check.report) msg += "\n  " + item;
    throw CellError(msg);
  }
  return *std::move(check.cell);
}

Cell atom_cell(const AugmentedComplex& K, const std::string& id) {
  const AtomTable& table = K.atoms();
  int deg = K.degree_of(id);
  std::vector<ChainVector> minus, plus;
  minus.reserve(static_cast<std::size_t>(deg) + 1);
  plus.reserve(static_cast<std::size_t>(deg) + 1);
  for (int n = 0; n <= deg; ++n) {
    minus.push_back(table.component(id, Sign::minus, n));
    plus.push_back(table.component(id, Sign::plus, n));
  }
  return CellOps::raw(K, std::move(minus), std::move(plus));
}

std::optional<std::string> atom_id(const Cell& x) {
  int dim = x.dimension();
  if (dim < 0) return std::nullopt;
  ChainVector top = x.component(Sign::minus, dim);
  if (top.support_size() != 1 || top.terms().begin()->second != 1) {
    return std::nullopt;
  }
  const std::string& id = top.terms().begin()->first;
  if (x == atom_cell(x.complex(), id)) return id;
  return std::nullopt;
}

Cell d(Sign sign, int n, const Cell& x) {
  if (n < 0) throw std::invalid_argument("d: negative level");
  if (n >= x.dimension()) return x;
  std::vector<ChainVector> minus, plus;
  minus.reserve(static_cast<std::size_t>(n) + 1);
  plus.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m < n; ++m) {
    minus.push_back(x.component(Sign::minus, m));
    plus.push_back(x.component(Sign::plus, m));
  }
  ChainVector shared = x.component(sign, n);
  minus.push_back(shared);
  plus.push_back(std::move(shared));
  return CellOps::raw(x.complex(), std::move(minus), std::move(plus));
}

namespace {

// first degree at which d^+_n x and d^-_n y disagree, or -1 when composable
int first_composability_failure(int n, const Cell& x, const Cell& y) {
  for (int m = 0; m < n; ++m) {
    if (x.component(Sign::minus, m) != y.component(Sign::minus, m)) return m;
    if (x.component(Sign::plus, m) != y.component(Sign::plus, m)) return m;
  }
  if (x.component(Sign::plus, n) != y.component(Sign::minus, n)) return n;
  return -1;
}

} // namespace

bool composable(int n, const Cell& x, const Cell& y) {
  if (n < 0 || &x.complex() != &y.complex()) return false;
  return first_composability_failure(n, x, y) < 0;
}

Cell compose(int n, const Cell& x, const Cell& y) {
  if (n < 0) throw std::invalid_argument("compose: negative level");
  if (&x.complex() != &y.complex()) {
    throw std::invalid_argument("compose: cells of different complexes");
  }
  int bad = first_composability_failure(n, x, y);
  if (bad >= 0) {
    throw CellError("not #_" + std::to_string(n) +
                    "-composable: sequences disagree at degree " +
                    std::to_string(bad));
  }
  int dim = std::max({x.dimension(), y.dimension(), n});
  std::vector<ChainVector> minus, plus;
  minus.reserve(static_cast<std::size_t>(dim) + 1);
  plus.reserve(static_cast<std::size_t>(dim) + 1);
  for (int m = 0; m <= n; ++m) {
    minus.push_back(x.component(Sign::minus, m));
    plus.push_back(y.component(Sign::plus, m));
  }
  for (int m = n + 1; m <= dim; ++m) {
    minus.push_back(x.component(Sign::minus, m) + y.component(Sign::minus, m));
    plus.push_back(x.component(Sign::plus, m) + y.component(Sign::plus, m));
  }
  return CellOps::raw(x.complex(), std::move(minus), std::move(plus));
}

Cell mu_add(const Cell& x, const Cell& y) {
  if (&x.complex() != &y.complex()) {
    throw std::invalid_argument("mu_add: cells of different complexes");
  }
  int dim = std::max(x.dimension(), y.dimension());
  std::vector<ChainVector> minus, plus;
  for (int m = 0; m <= dim; ++m) {
    minus.push_back(x.component(Sign::minus, m) + y.component(Sign::minus, m));
    plus.push_back(x.component(Sign::plus, m) + y.component(Sign::plus, m));
  }
  return CellOps::raw(x.complex(), std::move(minus), std::move(plus));
}

Cell mu_negate(const Cell& x) {
  std::vector<ChainVector> minus, plus;
  for (int m = 0; m <= x.dimension(); ++m) {
    minus.push_back(-x.component(Sign::minus, m));
    plus.push_back(-x.component(Sign::plus, m));
  }
  return CellOps::raw(x.complex(), std::move(minus), std::move(plus));
}

Cell mu_sub(const Cell& x, const Cell& y) { return mu_add(x, mu_negate(y)); }

ChainVector pi_class(const Cell& x, int n) {
  if (n < 0) throw std::invalid_argument("pi_class: negative degree");
  if (x.dimension() > n) {
    throw std::invalid_argument("pi_class: cell has dimension " +
                                std::to_string(x.dimension()) +
                                " > " + std::to_string(n));
  }
  return x.component(Sign::minus, n);
}

Cell eta(const Cell& x) {
  std::vector<ChainVector> minus, plus;
  for (int n = 0; n <= x.dimension(); ++n) {
    minus.push_back(pi_class(d(Sign::minus, n, x), n));
    plus.push_back(pi_class(d(Sign::plus, n, x), n));
  }
  return CellOps::raw(x.complex(), std::move(minus), std::move(plus));
}

Cell mu_section(const AugmentedComplex& K, int n, const ChainVector& w) {
  if (n < 0) throw std::invalid_argument("mu_section: negative degree");
  if (w.degree() != n) {
    throw std::invalid_argument("mu_section: vector degree " +
                                std::to_string(w.degree()) + " != " +
                                std::to_string(n));
  }
  std::vector<ChainVector> minus, plus;
  for (int m = 0; m < n - 1; ++m) {
    minus.emplace_back(m);
    plus.emplace_back(m);
  }
  if (n > 0) {
    minus.emplace_back(n - 1);
    plus.push_back(K.boundary(w));
  }
  minus.push_back(w);
  plus.push_back(w);
  return make_cell(K, std::move(minus), std::move(plus));
}

} // namespace adc
