#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adc/chain.hpp"

namespace adc {

enum class Sign { minus, plus };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }

struct ValidationIssue {
  std::string element;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Result of the strong loop-freeness decision: either a total order on the
// basis compatible with every forced precedence, or a cycle of forced pairs.
struct StrongLoopFreeResult {
  bool ok = false;
  std::vector<std::string> order; // witness when ok
  std::vector<std::string> cycle; // b0 -> b1 -> ... -> b0 when not
};

// Result of the loop-freeness decision: per-level orders on the elements of
// dimension above the level, or a cycle at some level.
struct LoopFreeResult {
  bool ok = false;
  std::vector<std::vector<std::string>> level_orders;
  int cycle_level = -1;
  std::vector<std::string> cycle;
};

// Components <b>^a_n of every atom, n = 0..|b|.
class AtomTable {
 public:
  ChainVector component(const std::string& id, Sign sign, int n) const;
  bool has(const std::string& id) const { return table_.count(id) > 0; }

 private:
  friend class AugmentedComplex;
  // per id: component vectors indexed by degree, minus then plus chain
  std::map<std::string, std::pair<std::vector<ChainVector>, std::vector<ChainVector>>> table_;
};

class AugmentedComplex;

// Extra structure carried by internal-hom complexes, whose ambient chain
// groups have a coordinate basis but whose distinguished submonoid (and, in
// degree 0, the chain group itself) is cut out by predicates.
struct HomStructure {
  enum class Variant { standard, prime };

  struct Coordinate {
    bool is_eps = false;
    int source_degree = 0;
    std::string source; // basis id in K
    std::string target; // basis id in L
  };

  Variant variant = Variant::standard;
  std::shared_ptr<const AugmentedComplex> source;
  std::shared_ptr<const AugmentedComplex> target;
  std::map<std::string, Coordinate> coords;

  static constexpr const char* eps_id = "eps";
};

// Membership tests replacing the cone of the basis on predicate-submonoid
// complexes. in_group restricts the ambient chain group itself (nontrivial
// only in degree 0 for hom complexes).
struct PredicateSubmonoid {
  std::function<bool(int, const ChainVector&)> in_submonoid;
  std::function<bool(int, const ChainVector&)> in_group;
  std::shared_ptr<const HomStructure> hom;
};

// Nonnegatively graded chain complex of free abelian groups with a finite
// named basis, boundary and augmentation data, and a distinguished submonoid
// per degree (the cone of the basis unless a predicate is installed).
// Immutable after construction; decision procedures are cached.
class AugmentedComplex {
 public:
  AugmentedComplex(std::vector<BasisElement> basis,
                   std::map<std::string, ChainVector> boundary,
                   std::map<std::string, Int> augmentation,
                   std::optional<PredicateSubmonoid> predicate = std::nullopt);

  int max_degree() const { return max_degree_; }
  std::size_t basis_size() const { return degree_of_.size(); }
  // ids of one degree, sorted; empty vector outside [0, max_degree]
  const std::vector<std::string>& basis(int degree) const;
  std::vector<BasisElement> basis_elements() const;

  bool has_element(const std::string& id) const { return degree_of_.count(id) > 0; }
  int degree_of(const std::string& id) const;
  const ChainVector& boundary_of(const std::string& id) const;
  Int augmentation_of(const std::string& id) const;

  // linear extensions; boundary requires degree >= 1, augmentation degree 0
  ChainVector boundary(const ChainVector& v) const;
  Int augmentation(const ChainVector& v) const;

  bool based() const { return !predicate_.has_value(); }
  const HomStructure* hom_structure() const;
  bool in_submonoid(int degree, const ChainVector& v) const;
  bool in_group(int degree, const ChainVector& v) const;

  const ValidationReport& validate() const;
  const AtomTable& atoms() const;
  bool is_unital() const;
  const StrongLoopFreeResult& strong_loop_free_result() const;
  const LoopFreeResult& loop_free_result() const;
  bool is_strongly_loop_free() const { return strong_loop_free_result().ok; }
  bool is_loop_free() const { return loop_free_result().ok; }

 private:
  struct Caches;

  void require_valid_based(const char* op) const;

  std::vector<std::vector<std::string>> basis_by_degree_;
  std::map<std::string, int> degree_of_;
  std::map<std::string, ChainVector> boundary_;
  std::map<std::string, Int> augmentation_;
  std::optional<PredicateSubmonoid> predicate_;
  int max_degree_ = -1;
  std::shared_ptr<Caches> caches_;
};

// Re-checks that a proposed total order on the basis respects every forced
// precedence of strong loop-freeness.
bool order_witnesses_strong_loop_freeness(const AugmentedComplex& K,
                                          const std::vector<std::string>& order);
// Same for the forced relation of loop-freeness at one level.
bool order_witnesses_loop_freeness_at(const AugmentedComplex& K, int level,
                                      const std::vector<std::string>& order);

} // namespace adc
