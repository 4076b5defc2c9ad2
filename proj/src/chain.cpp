#include "adc/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace adc {

namespace {

void require_same_degree(const ChainVector& a, const ChainVector& b,
                         const char* op) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()) + ")");
  }
}

} // namespace

ChainVector::ChainVector(int degree, std::map<std::string, Int> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

ChainVector ChainVector::unit(int degree, const std::string& id) {
  ChainVector v(degree);
  v.coeffs_.emplace(id, 1);
  return v;
}

Int ChainVector::coeff(const std::string& id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Int(0) : it->second;
}

bool ChainVector::is_nonnegative() const {
  for (const auto& [id, c] : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

bool ChainVector::is_zero_one() const {
  for (const auto& [id, c] : coeffs_) {
    if (c != 1) return false;
  }
  return true;
}

ChainVector ChainVector::operator-() const {
  ChainVector r(degree_);
  for (const auto& [id, c] : coeffs_) r.coeffs_.emplace(id, Int(-c));
  return r;
}

ChainVector& ChainVector::operator+=(const ChainVector& other) {
  require_same_degree(*this, other, "add");
  for (const auto& [id, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(id, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

ChainVector& ChainVector::operator-=(const ChainVector& other) {
  require_same_degree(*this, other, "subtract");
  for (const auto& [id, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(id, Int(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

ChainVector operator*(const Int& m, const ChainVector& v) {
  ChainVector r(v.degree_);
  if (m == 0) return r;
  for (const auto& [id, c] : v.coeffs_) r.coeffs_.emplace(id, m * c);
  return r;
}

bool operator<(const ChainVector& a, const ChainVector& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return a.coeffs_ < b.coeffs_;
}

std::string ChainVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : coeffs_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1) os << a.str() << "*";
    os << "(" << id << ")";
    first = false;
  }
  return os.str();
}

bool leq(const ChainVector& x, const ChainVector& y) {
  require_same_degree(x, y, "leq");
  return (y - x).is_nonnegative();
}

ChainVector meet(const ChainVector& x, const ChainVector& y) {
  require_same_degree(x, y, "meet");
  std::map<std::string, Int> out;
  for (const auto& [id, c] : x.terms()) {
    Int m = std::min(c, y.coeff(id));
    if (m != 0) out.emplace(id, m);
  }
  for (const auto& [id, c] : y.terms()) {
    if (x.terms().count(id)) continue;
    Int m = std::min(Int(0), c);
    if (m != 0) out.emplace(id, m);
  }
  return ChainVector(x.degree(), std::move(out));
}

ChainVector join(const ChainVector& x, const ChainVector& y) {
  require_same_degree(x, y, "join");
  std::map<std::string, Int> out;
  for (const auto& [id, c] : x.terms()) {
    Int m = std::max(c, y.coeff(id));
    if (m != 0) out.emplace(id, m);
  }
  for (const auto& [id, c] : y.terms()) {
    if (x.terms().count(id)) continue;
    Int m = std::max(Int(0), c);
    if (m != 0) out.emplace(id, m);
  }
  return ChainVector(x.degree(), std::move(out));
}

std::pair<ChainVector, ChainVector> split_parts(const ChainVector& x) {
  std::map<std::string, Int> neg, pos;
  for (const auto& [id, c] : x.terms()) {
    if (c > 0) {
      pos.emplace(id, c);
    } else {
      neg.emplace(id, -c);
    }
  }
  return {ChainVector(x.degree(), std::move(neg)),
          ChainVector(x.degree(), std::move(pos))};
}

} // namespace adc
