#include "adc/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "adc/enumerate.hpp"

namespace adc {

namespace {

void require_valid(const AugmentedComplex& K, const char* op) {
  if (!K.validate().ok()) {
    throw std::domain_error(std::string(op) + ": complex is invalid:\n" +
                            K.validate().to_string());
  }
}

void require_based_valid(const AugmentedComplex& K, const char* op) {
  if (!K.based()) {
    throw std::invalid_argument(std::string(op) +
                                ": predicate-submonoid complex not accepted");
  }
  require_valid(K, op);
}

std::string simplex_id(const std::vector<int>& tuple, bool dotted) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (dotted && i) os << ".";
    os << tuple[i];
  }
  return os.str();
}

} // namespace

AugmentedComplex simplex(int p) {
  if (p < 0) throw std::invalid_argument("simplex: p must be >= 0");
  bool dotted = p > 9; // single digits concatenate unambiguously

  std::vector<BasisElement> basis;
  std::map<std::string, ChainVector> boundary;
  std::map<std::string, Int> augmentation;

  std::vector<std::vector<int>> tuples;
  for (unsigned long mask = 1; mask < (1ul << (p + 1)); ++mask) {
    std::vector<int> tuple;
    for (int v = 0; v <= p; ++v) {
      if (mask & (1ul << v)) tuple.push_back(v);
    }
    tuples.push_back(std::move(tuple));
  }

  for (const auto& tuple : tuples) {
    int n = static_cast<int>(tuple.size()) - 1;
    std::string id = simplex_id(tuple, dotted);
    basis.push_back({id, n});
    if (n == 0) {
      augmentation[id] = 1;
      continue;
    }
    ChainVector bd(n - 1);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      std::vector<int> face = tuple;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      Int sign = (i % 2 == 0) ? 1 : -1;
      bd += sign * ChainVector::unit(n - 1, simplex_id(face, dotted));
    }
    boundary.emplace(std::move(id), std::move(bd));
  }

  return AugmentedComplex(std::move(basis), std::move(boundary),
                          std::move(augmentation));
}

AugmentedComplex from_dimension_sequence(const DimensionSequence& seq) {
  const std::vector<int>& dims = seq.dims;
  if (dims.empty()) {
    throw std::invalid_argument("dimension sequence must be nonempty");
  }
  if (dims.front() != 0 || dims.back() != 0) {
    throw std::invalid_argument("dimension sequence must start and end at 0");
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) {
      throw std::invalid_argument("dimension sequence entries must be >= 0");
    }
    if (i && std::abs(dims[i] - dims[i - 1]) != 1) {
      throw std::invalid_argument(
          "adjacent dimension sequence entries must differ by exactly 1");
    }
  }

  std::vector<BasisElement> basis;
  std::map<std::string, ChainVector> boundary;
  std::map<std::string, Int> augmentation;

  auto id_of = [](std::size_t pos) { return std::to_string(pos); };

  for (std::size_t i = 0; i < dims.size(); ++i) {
    int dim = dims[i];
    basis.push_back({id_of(i), dim});
    if (dim == 0) {
      augmentation[id_of(i)] = 1;
      continue;
    }
    // last element of dimension dim-1 before i, first after i
    std::size_t before = i, after = i;
    while (dims[before] != dim - 1) --before;
    while (dims[after] != dim - 1) ++after;
    boundary.emplace(id_of(i), ChainVector::unit(dim - 1, id_of(after)) -
                                   ChainVector::unit(dim - 1, id_of(before)));
  }

  return AugmentedComplex(std::move(basis), std::move(boundary),
                          std::move(augmentation));
}

namespace {

DimensionSequence zigzag(int p, const std::vector<int>& valleys) {
  // 0 up to p, then for each valley v: down to v and back up to p, then down
  // to 0
  DimensionSequence seq;
  for (int d = 0; d <= p; ++d) seq.dims.push_back(d);
  for (int v : valleys) {
    int a = std::min(p, v);
    for (int d = p - 1; d >= a; --d) seq.dims.push_back(d);
    for (int d = a + 1; d <= p; ++d) seq.dims.push_back(d);
  }
  for (int d = p - 1; d >= 0; --d) seq.dims.push_back(d);
  return seq;
}

} // namespace

AugmentedComplex globe(int p) {
  if (p < 0) throw std::invalid_argument("globe: p must be >= 0");
  return from_dimension_sequence(zigzag(p, {}));
}

AugmentedComplex composable_pair(int p, int n) {
  if (p < 0 || n < 0) {
    throw std::invalid_argument("composable_pair: parameters must be >= 0");
  }
  return from_dimension_sequence(zigzag(p, {n}));
}

AugmentedComplex composable_triple(int p, int n) {
  if (p < 0 || n < 0) {
    throw std::invalid_argument("composable_triple: parameters must be >= 0");
  }
  return from_dimension_sequence(zigzag(p, {n, n}));
}

AugmentedComplex interchange_quad(int p, int n, int m) {
  if (p < 0 || n < 0 || m < 0) {
    throw std::invalid_argument("interchange_quad: parameters must be >= 0");
  }
  if (m >= n) throw std::invalid_argument("interchange_quad: m must be < n");
  return from_dimension_sequence(zigzag(p, {n, m, n}));
}

std::string tensor_id(const std::string& a, const std::string& b) {
  auto wrap = [](const std::string& s) {
    return s.find("⊗") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(a) + "⊗" + wrap(b);
}

AugmentedComplex tensor(const AugmentedComplex& K, const AugmentedComplex& L) {
  require_based_valid(K, "tensor");
  require_based_valid(L, "tensor");

  std::vector<BasisElement> basis;
  std::map<std::string, ChainVector> boundary;
  std::map<std::string, Int> augmentation;

  for (const auto& a : K.basis_elements()) {
    for (const auto& b : L.basis_elements()) {
      int deg = a.degree + b.degree;
      std::string id = tensor_id(a.id, b.id);
      basis.push_back({id, deg});
      if (deg == 0) {
        augmentation[id] = K.augmentation_of(a.id) * L.augmentation_of(b.id);
        continue;
      }
      ChainVector bd(deg - 1);
      if (a.degree >= 1) {
        for (const auto& [c, coef] : K.boundary_of(a.id).terms()) {
          bd += coef * ChainVector::unit(deg - 1, tensor_id(c, b.id));
        }
      }
      if (b.degree >= 1) {
        Int sign = (a.degree % 2 == 0) ? 1 : -1;
        for (const auto& [c, coef] : L.boundary_of(b.id).terms()) {
          bd += (sign * coef) * ChainVector::unit(deg - 1, tensor_id(a.id, c));
        }
      }
      boundary.emplace(std::move(id), std::move(bd));
    }
  }

  return AugmentedComplex(std::move(basis), std::move(boundary),
                          std::move(augmentation));
}

AugmentedComplex cube(int p) {
  if (p < 0) throw std::invalid_argument("cube: p must be >= 0");
  if (p == 0) return globe(0);
  AugmentedComplex out = globe(1);
  for (int i = 2; i <= p; ++i) out = tensor(out, globe(1));
  return out;
}

std::vector<std::string> tensor_order_witness(
    const AugmentedComplex& K, const AugmentedComplex& L,
    const std::vector<std::string>& ordK, const std::vector<std::string>& ordL) {
  if (!order_witnesses_strong_loop_freeness(K, ordK)) {
    throw std::invalid_argument(
        "tensor_order_witness: ordK does not witness strong loop-freeness");
  }
  if (!order_witnesses_strong_loop_freeness(L, ordL)) {
    throw std::invalid_argument(
        "tensor_order_witness: ordL does not witness strong loop-freeness");
  }

  std::map<std::string, std::size_t> posK, posL;
  for (std::size_t i = 0; i < ordK.size(); ++i) posK[ordK[i]] = i;
  for (std::size_t i = 0; i < ordL.size(); ++i) posL[ordL[i]] = i;

  struct Entry {
    std::size_t pa;
    bool odd;
    std::size_t pb;
    std::string id;
  };
  std::vector<Entry> entries;
  for (const auto& a : K.basis_elements()) {
    for (const auto& b : L.basis_elements()) {
      entries.push_back({posK.at(a.id), a.degree % 2 == 1, posL.at(b.id),
                         tensor_id(a.id, b.id)});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.pa != y.pa) return x.pa < y.pa;
    // second components sort by the witness order, reversed under an odd
    // first component
    return x.odd ? x.pb > y.pb : x.pb < y.pb;
  });

  std::vector<std::string> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.id));

  AugmentedComplex product = tensor(K, L);
  if (!order_witnesses_strong_loop_freeness(product, out)) {
    throw std::logic_error(
        "tensor_order_witness: produced order failed re-verification");
  }
  return out;
}

namespace {

std::string hom_coord_id(const std::string& a, const std::string& c) {
  return a + "->" + c;
}

// f restricted to the source basis, read off a degree-0 coordinate vector
std::map<std::string, ChainVector> decode_hom_degree0(const HomStructure& hs,
                                                      const ChainVector& v) {
  std::map<std::string, ChainVector> f;
  for (const auto& a : hs.source->basis_elements()) {
    f.emplace(a.id, ChainVector(a.degree));
  }
  for (const auto& [id, coef] : v.terms()) {
    const HomStructure::Coordinate& coord = hs.coords.at(id);
    if (coord.is_eps) continue;
    f.at(coord.source) +=
        coef * ChainVector::unit(coord.source_degree, coord.target);
  }
  return f;
}

bool hom_degree0_is_chain_map(const HomStructure& hs, const ChainVector& v) {
  const AugmentedComplex& K = *hs.source;
  const AugmentedComplex& L = *hs.target;
  std::map<std::string, ChainVector> f = decode_hom_degree0(hs, v);
  for (const auto& a : K.basis_elements()) {
    if (a.degree >= 1) {
      ChainVector expected(a.degree - 1);
      for (const auto& [x, coef] : K.boundary_of(a.id).terms()) {
        expected += coef * f.at(x);
      }
      if (L.boundary(f.at(a.id)) != expected) return false;
    } else {
      Int eps_f = v.coeff(HomStructure::eps_id);
      if (eps_f * K.augmentation_of(a.id) != L.augmentation(f.at(a.id))) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

AugmentedComplex hom(const AugmentedComplex& K, const AugmentedComplex& L,
                     HomVariant variant) {
  require_based_valid(K, "hom");
  require_based_valid(L, "hom");

  auto hs = std::make_shared<HomStructure>();
  hs->variant = variant == HomVariant::standard
                    ? HomStructure::Variant::standard
                    : HomStructure::Variant::prime;
  hs->source = std::make_shared<const AugmentedComplex>(K);
  hs->target = std::make_shared<const AugmentedComplex>(L);

  std::vector<BasisElement> basis;
  std::map<std::string, ChainVector> boundary;
  std::map<std::string, Int> augmentation;

  basis.push_back({HomStructure::eps_id, 0});
  augmentation[HomStructure::eps_id] = 1;
  hs->coords[HomStructure::eps_id] = {true, 0, "", ""};

  for (const auto& a : K.basis_elements()) {
    for (const auto& c : L.basis_elements()) {
      if (c.degree < a.degree) continue;
      int n = c.degree - a.degree;
      std::string id = hom_coord_id(a.id, c.id);
      basis.push_back({id, n});
      hs->coords[id] = {false, a.degree, a.id, c.id};
      if (n == 0) {
        augmentation[id] = 0;
        continue;
      }

      // term mapping a to the boundary of c, at source degree |a|
      ChainVector bd(n - 1);
      Int first_sign = 1, second_sign = 1;
      if (variant == HomVariant::standard) {
        first_sign = 1;
        second_sign = (n % 2 == 0) ? -1 : 1; // -(-1)^n
      } else {
        first_sign = (a.degree % 2 == 0) ? 1 : -1;
        second_sign = first_sign;
      }
      for (const auto& [dC, coef] : L.boundary_of(c.id).terms()) {
        bd += (first_sign * coef) *
              ChainVector::unit(n - 1, hom_coord_id(a.id, dC));
      }
      // term mapping each a' one degree up to c, weighted by the coefficient
      // of a in the boundary of a'
      for (const auto& aPrime : K.basis(a.degree + 1)) {
        Int coef = K.boundary_of(aPrime).coeff(a.id);
        if (coef == 0) continue;
        bd += (second_sign * coef) *
              ChainVector::unit(n - 1, hom_coord_id(aPrime, c.id));
      }
      boundary.emplace(std::move(id), std::move(bd));
    }
  }

  PredicateSubmonoid pred;
  pred.hom = hs;
  pred.in_submonoid = [hs](int, const ChainVector& v) {
    for (const auto& [id, coef] : v.terms()) {
      if (hs->coords.at(id).is_eps) continue;
      if (coef < 0) return false;
    }
    return true;
  };
  pred.in_group = [hs](int degree, const ChainVector& v) {
    if (degree != 0) return true;
    return hom_degree0_is_chain_map(*hs, v);
  };

  return AugmentedComplex(std::move(basis), std::move(boundary),
                          std::move(augmentation), std::move(pred));
}

AugmentedComplex hom_prime(const AugmentedComplex& K, const AugmentedComplex& L) {
  return hom(K, L, HomVariant::prime);
}

std::vector<Cell> hom_zero_cells(const AugmentedComplex& H, const Int& bound) {
  const HomStructure* hs = H.hom_structure();
  if (!hs) {
    throw std::invalid_argument("hom_zero_cells: not a hom complex");
  }
  std::vector<Cell> out;
  for (const ChainVector& v : bounded_vectors(H, 0, bound)) {
    if (H.augmentation(v) != 1) continue;
    if (!H.in_submonoid(0, v)) continue;
    if (!H.in_group(0, v)) continue;
    out.push_back(make_cell(H, {v}, {v}, true));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Morphism identity_morphism(const AugmentedComplex& K) {
  Morphism f;
  for (const auto& b : K.basis_elements()) {
    f.emplace(b.id, ChainVector::unit(b.degree, b.id));
  }
  return f;
}

Morphism morphism_of_hom_zero_cell(const Cell& x) {
  const HomStructure* hs = x.complex().hom_structure();
  if (!hs) {
    throw std::invalid_argument(
        "morphism_of_hom_zero_cell: not a cell of a hom complex");
  }
  if (x.dimension() != 0) {
    throw std::invalid_argument("morphism_of_hom_zero_cell: not a 0-cell");
  }
  return decode_hom_degree0(*hs, x.component(Sign::minus, 0));
}

std::vector<Morphism> enumerate_morphisms(const AugmentedComplex& K,
                                          const AugmentedComplex& L,
                                          const Int& bound) {
  require_based_valid(K, "enumerate_morphisms");
  require_based_valid(L, "enumerate_morphisms");

  std::vector<BasisElement> elements = K.basis_elements(); // degree-major
  std::vector<Morphism> out;
  Morphism partial;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == elements.size()) {
      out.push_back(partial);
      return;
    }
    const BasisElement& b = elements[i];
    if (b.degree == 0) {
      Int eps = K.augmentation_of(b.id);
      for (const ChainVector& v : bounded_vectors(L, 0, bound)) {
        if (L.augmentation(v) != eps) continue;
        partial.insert_or_assign(b.id, v);
        self(self, i + 1);
        partial.erase(b.id);
      }
      return;
    }
    ChainVector target(b.degree - 1);
    for (const auto& [x, coef] : K.boundary_of(b.id).terms()) {
      target += coef * partial.at(x);
    }
    for (const ChainVector& v : bounded_vectors(L, b.degree, bound)) {
      if (L.boundary(v) != target) continue;
      partial.insert_or_assign(b.id, v);
      self(self, i + 1);
      partial.erase(b.id);
    }
  };
  rec(rec, 0);
  return out;
}

const Presentation::Relation* Presentation::boundary_word(const std::string& id,
                                                          Sign sign) const {
  for (const auto& rel : relations) {
    if (rel.id == id && rel.sign == sign) return &rel;
  }
  return nullptr;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "generators:\n";
  for (const auto& g : generators) {
    os << "  ⟨" << g.id << "⟩ : " << g.dim << "\n";
  }
  os << "relations:\n";
  for (const auto& g : generators) {
    os << "  d-_" << g.dim << " ⟨" << g.id << "⟩ = ⟨" << g.id
       << "⟩\n";
    os << "  d+_" << g.dim << " ⟨" << g.id << "⟩ = ⟨" << g.id
       << "⟩\n";
  }
  for (const auto& rel : relations) {
    int dim = 0;
    for (const auto& g : generators) {
      if (g.id == rel.id) dim = g.dim;
    }
    os << "  d" << sign_char(rel.sign) << "_" << (dim - 1) << " ⟨"
       << rel.id << "⟩ = " << to_word(rel.word) << "\n";
  }
  return os.str();
}

Presentation presentation(const AugmentedComplex& K) {
  require_based_valid(K, "presentation");
  if (!K.is_loop_free()) {
    throw std::domain_error("presentation: complex is not loop-free");
  }
  if (!K.is_unital()) {
    throw std::domain_error("presentation: basis is not unital");
  }

  Presentation out;
  for (const auto& b : K.basis_elements()) {
    out.generators.push_back({b.id, b.degree});
    if (b.degree == 0) continue;
    Cell atom = atom_cell(K, b.id);
    for (Sign sign : {Sign::minus, Sign::plus}) {
      Presentation::Relation rel;
      rel.id = b.id;
      rel.sign = sign;
      rel.word = decompose_full(d(sign, b.degree - 1, atom));
      out.relations.push_back(std::move(rel));
    }
  }
  return out;
}

} // namespace adc
