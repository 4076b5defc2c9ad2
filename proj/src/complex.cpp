#include "adc/complex.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adc {

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << issue.element << ": " << issue.message << "\n";
  }
  return os.str();
}

ChainVector AtomTable::component(const std::string& id, Sign sign, int n) const {
  auto it = table_.find(id);
  if (it == table_.end()) {
    throw std::invalid_argument("unknown basis element '" + id + "'");
  }
  const auto& chain = sign == Sign::minus ? it->second.first : it->second.second;
  if (n < 0) throw std::invalid_argument("atom component: negative degree");
  if (n >= static_cast<int>(chain.size())) return ChainVector(n);
  return chain[static_cast<std::size_t>(n)];
}

struct AugmentedComplex::Caches {
  std::mutex mutex;
  std::optional<ValidationReport> validation;
  std::optional<AtomTable> atoms;
  std::optional<bool> unital;
  std::optional<StrongLoopFreeResult> strong;
  std::optional<LoopFreeResult> loop;
};

AugmentedComplex::AugmentedComplex(std::vector<BasisElement> basis,
                                   std::map<std::string, ChainVector> boundary,
                                   std::map<std::string, Int> augmentation,
                                   std::optional<PredicateSubmonoid> predicate)
    : boundary_(std::move(boundary)),
      augmentation_(std::move(augmentation)),
      predicate_(std::move(predicate)),
      caches_(std::make_shared<Caches>()) {
  for (const auto& b : basis) {
    if (b.degree < 0) {
      throw std::invalid_argument("basis element '" + b.id + "' has negative degree");
    }
    if (!degree_of_.emplace(b.id, b.degree).second) {
      throw std::invalid_argument("duplicate basis id '" + b.id + "'");
    }
    if (b.degree > max_degree_) max_degree_ = b.degree;
  }
  basis_by_degree_.assign(static_cast<std::size_t>(max_degree_ + 1), {});
  for (const auto& [id, deg] : degree_of_) {
    basis_by_degree_[static_cast<std::size_t>(deg)].push_back(id);
  }
  // degree_of_ iterates sorted, so per-degree lists are already sorted
}

const std::vector<std::string>& AugmentedComplex::basis(int degree) const {
  static const std::vector<std::string> empty;
  if (degree < 0 || degree > max_degree_) return empty;
  return basis_by_degree_[static_cast<std::size_t>(degree)];
}

std::vector<BasisElement> AugmentedComplex::basis_elements() const {
  std::vector<BasisElement> out;
  out.reserve(degree_of_.size());
  for (int d = 0; d <= max_degree_; ++d) {
    for (const auto& id : basis(d)) out.push_back({id, d});
  }
  return out;
}

int AugmentedComplex::degree_of(const std::string& id) const {
  auto it = degree_of_.find(id);
  if (it == degree_of_.end()) {
    throw std::invalid_argument("unknown basis element '" + id + "'");
  }
  return it->second;
}

const ChainVector& AugmentedComplex::boundary_of(const std::string& id) const {
  auto it = boundary_.find(id);
  if (it == boundary_.end()) {
    throw std::invalid_argument("no boundary stored for '" + id + "'");
  }
  return it->second;
}

Int AugmentedComplex::augmentation_of(const std::string& id) const {
  auto it = augmentation_.find(id);
  if (it == augmentation_.end()) {
    throw std::invalid_argument("no augmentation stored for '" + id + "'");
  }
  return it->second;
}

ChainVector AugmentedComplex::boundary(const ChainVector& v) const {
  if (v.degree() < 1) {
    throw std::invalid_argument("boundary: vector degree must be >= 1");
  }
  ChainVector out(v.degree() - 1);
  for (const auto& [id, c] : v.terms()) out += c * boundary_of(id);
  return out;
}

Int AugmentedComplex::augmentation(const ChainVector& v) const {
  if (v.degree() != 0) {
    throw std::invalid_argument("augmentation: vector degree must be 0");
  }
  Int out = 0;
  for (const auto& [id, c] : v.terms()) out += c * augmentation_of(id);
  return out;
}

const HomStructure* AugmentedComplex::hom_structure() const {
  return predicate_ && predicate_->hom ? predicate_->hom.get() : nullptr;
}

bool AugmentedComplex::in_submonoid(int degree, const ChainVector& v) const {
  assert(v.degree() == degree);
  if (!predicate_) return v.is_nonnegative();
  return predicate_->in_submonoid(degree, v);
}

bool AugmentedComplex::in_group(int degree, const ChainVector& v) const {
  assert(v.degree() == degree);
  if (!predicate_ || !predicate_->in_group) return true;
  return predicate_->in_group(degree, v);
}

const ValidationReport& AugmentedComplex::validate() const {
  std::lock_guard lock(caches_->mutex);
  if (caches_->validation) return *caches_->validation;

  ValidationReport report;
  auto add = [&](const std::string& el, std::string msg) {
    report.issues.push_back({el, std::move(msg)});
  };

  std::set<std::string> broken;

  // boundary defined on exactly the positive-degree basis, with entries one
  // degree lower
  for (const auto& [id, deg] : degree_of_) {
    if (deg == 0) {
      if (boundary_.count(id)) {
        add(id, "degree-0 element must not have a boundary");
        broken.insert(id);
      }
      if (!augmentation_.count(id)) {
        add(id, "missing augmentation");
        broken.insert(id);
      }
      continue;
    }
    auto it = boundary_.find(id);
    if (it == boundary_.end()) {
      add(id, "missing boundary");
      broken.insert(id);
      continue;
    }
    if (it->second.degree() != deg - 1) {
      add(id, "boundary has degree " + std::to_string(it->second.degree()) +
                  ", expected " + std::to_string(deg - 1));
      broken.insert(id);
      continue;
    }
    for (const auto& [ref, c] : it->second.terms()) {
      auto dit = degree_of_.find(ref);
      if (dit == degree_of_.end()) {
        add(id, "boundary references unknown element '" + ref + "'");
        broken.insert(id);
      } else if (dit->second != deg - 1) {
        add(id, "boundary references '" + ref + "' of degree " +
                    std::to_string(dit->second) + ", expected " +
                    std::to_string(deg - 1));
        broken.insert(id);
      }
    }
  }
  for (const auto& [id, bd] : boundary_) {
    if (!degree_of_.count(id)) add(id, "boundary declared for unknown element");
  }
  for (const auto& [id, eps] : augmentation_) {
    auto it = degree_of_.find(id);
    if (it == degree_of_.end()) {
      add(id, "augmentation declared for unknown element");
    } else if (it->second != 0) {
      add(id, "augmentation declared for element of degree " +
                  std::to_string(it->second));
    }
  }

  auto clean = [&](const std::string& id) { return !broken.count(id); };

  // dd = 0 and eps d = 0 on every structurally clean element
  for (const auto& [id, deg] : degree_of_) {
    if (deg < 1 || !clean(id)) continue;
    const ChainVector& bd = boundary_.at(id);
    bool refs_clean = true;
    for (const auto& [ref, c] : bd.terms()) {
      if (!clean(ref)) refs_clean = false;
    }
    if (!refs_clean) continue;
    if (deg >= 2) {
      ChainVector dd = boundary(bd);
      if (!dd.is_zero()) add(id, "dd != 0: " + dd.to_string());
    } else {
      Int e = augmentation(bd);
      if (e != 0) add(id, "eps d != 0: " + e.str());
    }
  }

  caches_->validation = std::move(report);
  return *caches_->validation;
}

void AugmentedComplex::require_valid_based(const char* op) const {
  if (!based()) {
    throw std::domain_error(std::string(op) +
                            ": not available on a predicate-submonoid complex");
  }
  const ValidationReport& report = validate();
  if (!report.ok()) {
    throw std::domain_error(std::string(op) +
                            ": complex is invalid:\n" + report.to_string());
  }
}

const AtomTable& AugmentedComplex::atoms() const {
  require_valid_based("atoms");
  std::lock_guard lock(caches_->mutex);
  if (caches_->atoms) return *caches_->atoms;

  AtomTable table;
  for (const auto& [id, deg] : degree_of_) {
    std::vector<ChainVector> minus_chain, plus_chain;
    minus_chain.reserve(static_cast<std::size_t>(deg) + 1);
    for (int n = 0; n <= deg; ++n) minus_chain.emplace_back(n);
    plus_chain = minus_chain;
    minus_chain[static_cast<std::size_t>(deg)] = ChainVector::unit(deg, id);
    plus_chain[static_cast<std::size_t>(deg)] = ChainVector::unit(deg, id);
    for (int n = deg - 1; n >= 0; --n) {
      ChainVector w = boundary(minus_chain[static_cast<std::size_t>(n) + 1]);
      assert(w == boundary(plus_chain[static_cast<std::size_t>(n) + 1]));
      auto [neg, pos] = split_parts(w);
      minus_chain[static_cast<std::size_t>(n)] = std::move(neg);
      plus_chain[static_cast<std::size_t>(n)] = std::move(pos);
    }
    table.table_.emplace(id, std::make_pair(std::move(minus_chain),
                                            std::move(plus_chain)));
  }
  caches_->atoms = std::move(table);
  return *caches_->atoms;
}

bool AugmentedComplex::is_unital() const {
  const AtomTable& table = atoms();
  {
    std::lock_guard lock(caches_->mutex);
    if (caches_->unital) return *caches_->unital;
  }
  bool unital = true;
  for (const auto& [id, deg] : degree_of_) {
    if (augmentation(table.component(id, Sign::minus, 0)) != 1 ||
        augmentation(table.component(id, Sign::plus, 0)) != 1) {
      unital = false;
      break;
    }
  }
  std::lock_guard lock(caches_->mutex);
  caches_->unital = unital;
  return unital;
}

namespace {

struct Digraph {
  // nodes carry (degree, id) keys for deterministic tie-breaking
  std::vector<std::string> nodes;
  std::map<std::string, int> degree;
  std::map<std::string, std::set<std::string>> succ;
  std::map<std::string, std::set<std::string>> pred;

  void add_node(const std::string& id, int deg) {
    if (degree.emplace(id, deg).second) nodes.push_back(id);
  }

  void add_edge(const std::string& a, const std::string& b) {
    if (a == b) return;
    succ[a].insert(b);
    pred[b].insert(a);
  }
};

struct TopoResult {
  bool ok = false;
  std::vector<std::string> order;
  std::vector<std::string> cycle;
};

TopoResult toposort(const Digraph& g) {
  using Key = std::pair<int, std::string>;
  std::map<std::string, std::size_t> indegree;
  for (const auto& id : g.nodes) indegree[id] = 0;
  for (const auto& [a, outs] : g.succ) {
    for (const auto& b : outs) indegree[b] += 1;
  }
  std::set<Key> ready;
  for (const auto& id : g.nodes) {
    if (indegree[id] == 0) ready.insert({g.degree.at(id), id});
  }

  TopoResult result;
  while (!ready.empty()) {
    auto [deg, id] = *ready.begin();
    ready.erase(ready.begin());
    result.order.push_back(id);
    auto it = g.succ.find(id);
    if (it == g.succ.end()) continue;
    for (const auto& b : it->second) {
      if (--indegree[b] == 0) ready.insert({g.degree.at(b), b});
    }
  }

  if (result.order.size() == g.nodes.size()) {
    result.ok = true;
    return result;
  }

  // walk predecessors inside the leftover set until a node repeats
  std::set<std::string> leftover;
  for (const auto& id : g.nodes) {
    if (indegree[id] > 0) leftover.insert(id);
  }
  std::vector<std::string> walk;
  std::map<std::string, std::size_t> seen;
  std::string cur = *leftover.begin();
  while (!seen.count(cur)) {
    seen[cur] = walk.size();
    walk.push_back(cur);
    const auto& preds = g.pred.at(cur);
    std::string next;
    for (const auto& p : preds) {
      if (leftover.count(p)) {
        next = p;
        break;
      }
    }
    assert(!next.empty());
    cur = next;
  }
  // walk[i] <- walk[i+1] edges; the repeat closes a forward cycle
  std::size_t start = seen[cur];
  result.cycle.push_back(cur);
  for (std::size_t i = walk.size(); i-- > start + 1;) {
    result.cycle.push_back(walk[i]);
  }
  result.ok = false;
  return result;
}

} // namespace

const StrongLoopFreeResult& AugmentedComplex::strong_loop_free_result() const {
  require_valid_based("is_strongly_loop_free");
  {
    std::lock_guard lock(caches_->mutex);
    if (caches_->strong) return *caches_->strong;
  }

  Digraph g;
  for (const auto& [id, deg] : degree_of_) g.add_node(id, deg);
  for (const auto& [id, deg] : degree_of_) {
    if (deg < 1) continue;
    auto [neg, pos] = split_parts(boundary_of(id));
    // a <= d^- b forces a before b; d^+ a >= b forces b after a
    for (const auto& [a, c] : neg.terms()) g.add_edge(a, id);
    for (const auto& [b, c] : pos.terms()) g.add_edge(id, b);
  }

  TopoResult topo = toposort(g);
  StrongLoopFreeResult result;
  result.ok = topo.ok;
  result.order = std::move(topo.order);
  result.cycle = std::move(topo.cycle);
  if (!result.ok) result.order.clear();

  std::lock_guard lock(caches_->mutex);
  if (!caches_->strong) caches_->strong = std::move(result);
  return *caches_->strong;
}

const LoopFreeResult& AugmentedComplex::loop_free_result() const {
  const AtomTable& table = atoms();
  {
    std::lock_guard lock(caches_->mutex);
    if (caches_->loop) return *caches_->loop;
  }

  LoopFreeResult result;
  result.ok = true;
  int levels = std::max(max_degree_, 0);
  result.level_orders.assign(static_cast<std::size_t>(levels), {});
  for (int n = 0; n < levels && result.ok; ++n) {
    Digraph g;
    std::vector<std::string> members;
    for (const auto& [id, deg] : degree_of_) {
      if (deg > n) {
        g.add_node(id, deg);
        members.push_back(id);
      }
    }
    for (const auto& a : members) {
      ChainVector aplus = table.component(a, Sign::plus, n);
      for (const auto& b : members) {
        if (a == b) continue;
        if (!meet(aplus, table.component(b, Sign::minus, n)).is_zero()) {
          g.add_edge(a, b);
        }
      }
    }
    TopoResult topo = toposort(g);
    if (topo.ok) {
      result.level_orders[static_cast<std::size_t>(n)] = std::move(topo.order);
    } else {
      result.ok = false;
      result.cycle_level = n;
      result.cycle = std::move(topo.cycle);
      result.level_orders.clear();
    }
  }

  std::lock_guard lock(caches_->mutex);
  if (!caches_->loop) caches_->loop = std::move(result);
  return *caches_->loop;
}

namespace {

bool respects(const std::vector<std::string>& order,
              const std::vector<std::pair<std::string, std::string>>& forced) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!pos.emplace(order[i], i).second) return false;
  }
  for (const auto& [a, b] : forced) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end() || ib == pos.end()) return false;
    if (ia->second >= ib->second) return false;
  }
  return true;
}

} // namespace

bool order_witnesses_strong_loop_freeness(const AugmentedComplex& K,
                                          const std::vector<std::string>& order) {
  if (order.size() != K.basis_size()) return false;
  std::vector<std::pair<std::string, std::string>> forced;
  for (const auto& b : K.basis_elements()) {
    if (b.degree < 1) continue;
    auto [neg, pos] = split_parts(K.boundary_of(b.id));
    for (const auto& [a, c] : neg.terms()) forced.push_back({a, b.id});
    for (const auto& [t, c] : pos.terms()) forced.push_back({b.id, t});
  }
  return respects(order, forced);
}

bool order_witnesses_loop_freeness_at(const AugmentedComplex& K, int level,
                                      const std::vector<std::string>& order) {
  const AtomTable& table = K.atoms();
  std::vector<std::string> members;
  for (const auto& b : K.basis_elements()) {
    if (b.degree > level) members.push_back(b.id);
  }
  if (order.size() != members.size()) return false;
  std::vector<std::pair<std::string, std::string>> forced;
  for (const auto& a : members) {
    ChainVector aplus = table.component(a, Sign::plus, level);
    for (const auto& b : members) {
      if (a == b) continue;
      if (!meet(aplus, table.component(b, Sign::minus, level)).is_zero()) {
        forced.push_back({a, b});
      }
    }
  }
  return respects(order, forced);
}

} // namespace adc
