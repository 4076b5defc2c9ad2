#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adc/complex.hpp"

namespace adc {

struct CellError : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of the omega-category of double sequences over a complex K: a pair
// of chain-vector sequences (x^-_0, x^+_0, x^-_1, x^+_1, ...) with trailing
// zero pairs trimmed. The nu flag records whether every component lies in the
// distinguished submonoid and both degree-0 augmentations are 1; sequences
// with the flag off are plain mu-cells.
//
// Cells hold a non-owning pointer to their complex; keep the complex alive.
class Cell {
 public:
  static Cell zero(const AugmentedComplex& K) { return Cell(&K, {}, {}); }

  const AugmentedComplex& complex() const { return *complex_; }
  // least n with all components above n zero; -1 for the zero cell
  int dimension() const { return static_cast<int>(minus_.size()) - 1; }
  ChainVector component(Sign sign, int n) const;
  bool is_nu() const { return nu_; }

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.minus_ == b.minus_ && a.plus_ == b.plus_;
  }
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.minus_ != b.minus_) return a.minus_ < b.minus_;
    return a.plus_ < b.plus_;
  }

  std::string to_string() const;

 private:
  friend class CellOps;

  Cell(const AugmentedComplex* K, std::vector<ChainVector> minus,
       std::vector<ChainVector> plus);

  const AugmentedComplex* complex_;
  std::vector<ChainVector> minus_;
  std::vector<ChainVector> plus_;
  bool nu_ = false;
};

struct CellCheck {
  std::optional<Cell> cell;
  std::vector<std::string> report;
  bool ok() const { return cell.has_value(); }
};

// Checks the double-sequence identities (and, when require_nu is set,
// submonoid membership and unit augmentation); the report pinpoints the
// first failed identity.
CellCheck check_cell(const AugmentedComplex& K, std::vector<ChainVector> minus,
                     std::vector<ChainVector> plus, bool require_nu = false);

// Same, but throws CellError instead of reporting.
Cell make_cell(const AugmentedComplex& K, std::vector<ChainVector> minus,
               std::vector<ChainVector> plus, bool require_nu = false);

// The cell <b> attached to a basis element.
Cell atom_cell(const AugmentedComplex& K, const std::string& id);

// If x equals an atom, its basis element.
std::optional<std::string> atom_id(const Cell& x);

// Source/target operator: truncation at level n.
Cell d(Sign sign, int n, const Cell& x);

bool composable(int n, const Cell& x, const Cell& y);

// x #_n y; throws CellError naming the first mismatched degree when the
// cells are not n-composable.
Cell compose(int n, const Cell& x, const Cell& y);

// Abelian-group operations on double sequences (not omega-category
// composition; used by the decomposition machinery).
Cell mu_add(const Cell& x, const Cell& y);
Cell mu_negate(const Cell& x);
Cell mu_sub(const Cell& x, const Cell& y);

// The common component x^-_n = x^+_n of a cell of dimension <= n.
ChainVector pi_class(const Cell& x, int n);

// Rebuilds x from the classes of its sources and targets; equal to x by the
// triangle identity, which the tests exercise.
Cell eta(const Cell& x);

// Splitting of (mu K)_n -> K_n: w maps to (0,...,0,dw,w,w,0,...), and to
// (w,w,0,...) when n = 0.
Cell mu_section(const AugmentedComplex& K, int n, const ChainVector& w);

} // namespace adc
