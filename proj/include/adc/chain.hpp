#pragma once

#include <map>
#include <string>
#include <utility>

#include "adc/integer.hpp"

namespace adc {

// A named generator of one chain group. Ids are unique within a complex and
// the degree is fixed at creation.
struct BasisElement {
  std::string id;
  int degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// Sparse integer vector over the basis elements of a single degree.
// Canonical form: no stored zero coefficients, terms ordered by id, so
// equality and ordering are structural.
class ChainVector {
 public:
  explicit ChainVector(int degree) : degree_(degree) {}
  ChainVector(int degree, std::map<std::string, Int> coeffs);

  static ChainVector unit(int degree, const std::string& id);

  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  Int coeff(const std::string& id) const;
  const std::map<std::string, Int>& terms() const { return coeffs_; }

  bool is_nonnegative() const;
  // Every coefficient is 0 or 1.
  bool is_zero_one() const;

  ChainVector operator-() const;
  ChainVector& operator+=(const ChainVector& other);
  ChainVector& operator-=(const ChainVector& other);

  friend ChainVector operator+(ChainVector a, const ChainVector& b) {
    a += b;
    return a;
  }
  friend ChainVector operator-(ChainVector a, const ChainVector& b) {
    a -= b;
    return a;
  }
  friend ChainVector operator*(const Int& m, const ChainVector& v);

  friend bool operator==(const ChainVector&, const ChainVector&) = default;
  friend bool operator<(const ChainVector& a, const ChainVector& b);

  std::string to_string() const;

 private:
  int degree_ = 0;
  std::map<std::string, Int> coeffs_;
};

// Coordinatewise partial order: true iff y - x has no negative coefficient.
bool leq(const ChainVector& x, const ChainVector& y);

// Coordinatewise min / max (absent coefficient counts as zero).
ChainVector meet(const ChainVector& x, const ChainVector& y);
ChainVector join(const ChainVector& x, const ChainVector& y);

// Splits x into (neg, pos) with x = pos - neg, both parts nonnegative and
// meet(neg, pos) = 0.
std::pair<ChainVector, ChainVector> split_parts(const ChainVector& x);

} // namespace adc
