#include "adc/serialize.hpp"

#include <regex>

#include "adc/constructions.hpp"

namespace adc {

namespace {

constexpr std::int64_t kDoubleSafe = 9007199254740992; // 2^53

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

} // namespace

nlohmann::json int_to_json(const Int& value) {
  if (value >= -Int(kDoubleSafe) && value <= Int(kDoubleSafe)) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    static const std::regex pattern("-?[0-9]+");
    if (!std::regex_match(s, pattern)) bad("not an integer: \"" + s + "\"");
    return Int(s);
  }
  bad("expected an integer (number or decimal string), got " +
      std::string(j.type_name()));
}

nlohmann::json chain_to_json(const ChainVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [id, c] : v.terms()) {
    out.push_back(nlohmann::json::array({id, int_to_json(c)}));
  }
  return out;
}

ChainVector chain_from_json(int degree, const nlohmann::json& j) {
  if (!j.is_array()) bad("coefficient list must be an array");
  std::map<std::string, Int> coeffs;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string()) {
      bad("coefficient entry must be [id, integer]");
    }
    std::string id = term[0].get<std::string>();
    if (!coeffs.emplace(std::move(id), int_from_json(term[1])).second) {
      bad("duplicate coefficient entry for '" + term[0].get<std::string>() + "'");
    }
  }
  return ChainVector(degree, std::move(coeffs));
}

nlohmann::json complex_to_json(const AugmentedComplex& K) {
  nlohmann::json out;
  nlohmann::json basis = nlohmann::json::array();
  for (int d = 0; d <= K.max_degree(); ++d) basis.push_back(K.basis(d));
  out["basis"] = std::move(basis);

  nlohmann::json boundary = nlohmann::json::object();
  nlohmann::json augmentation = nlohmann::json::object();
  for (const auto& b : K.basis_elements()) {
    if (b.degree == 0) {
      augmentation[b.id] = int_to_json(K.augmentation_of(b.id));
    } else {
      boundary[b.id] = chain_to_json(K.boundary_of(b.id));
    }
  }
  out["boundary"] = std::move(boundary);
  out["augmentation"] = std::move(augmentation);

  if (const HomStructure* hs = K.hom_structure()) {
    nlohmann::json sub;
    sub["kind"] = "hom";
    sub["variant"] =
        hs->variant == HomStructure::Variant::standard ? "standard" : "prime";
    sub["source"] = complex_to_json(*hs->source);
    sub["target"] = complex_to_json(*hs->target);
    out["submonoid"] = std::move(sub);
  } else {
    out["submonoid"] = "cone";
  }
  return out;
}

namespace {

AugmentedComplex based_complex_from_json(const nlohmann::json& j) {
  const nlohmann::json& jbasis = field(j, "basis");
  if (!jbasis.is_array()) bad("\"basis\" must be an array of id arrays");

  std::vector<BasisElement> basis;
  std::map<std::string, int> degree_of;
  for (std::size_t d = 0; d < jbasis.size(); ++d) {
    if (!jbasis[d].is_array()) bad("\"basis\" must be an array of id arrays");
    for (const auto& jid : jbasis[d]) {
      if (!jid.is_string()) bad("basis ids must be strings");
      std::string id = jid.get<std::string>();
      if (!degree_of.emplace(id, static_cast<int>(d)).second) {
        bad("duplicate basis id '" + id + "'");
      }
      basis.push_back({std::move(id), static_cast<int>(d)});
    }
  }

  const nlohmann::json& jboundary = field(j, "boundary");
  if (!jboundary.is_object()) bad("\"boundary\" must be an object");
  std::map<std::string, ChainVector> boundary;
  for (const auto& [id, entry] : jboundary.items()) {
    auto it = degree_of.find(id);
    if (it == degree_of.end()) {
      bad("boundary declared for unknown element '" + id + "'");
    }
    if (it->second == 0) {
      bad("boundary declared for degree-0 element '" + id + "'");
    }
    boundary.emplace(id, chain_from_json(it->second - 1, entry));
  }

  const nlohmann::json& jaug = field(j, "augmentation");
  if (!jaug.is_object()) bad("\"augmentation\" must be an object");
  std::map<std::string, Int> augmentation;
  for (const auto& [id, entry] : jaug.items()) {
    if (!degree_of.count(id)) {
      bad("augmentation declared for unknown element '" + id + "'");
    }
    augmentation.emplace(id, int_from_json(entry));
  }

  return AugmentedComplex(std::move(basis), std::move(boundary),
                          std::move(augmentation));
}

} // namespace

AugmentedComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("complex document must be a JSON object");
  auto sub = j.find("submonoid");
  if (sub == j.end() || (sub->is_string() && *sub == "cone")) {
    return based_complex_from_json(j);
  }
  if (!sub->is_object() || field(*sub, "kind") != "hom") {
    bad("\"submonoid\" must be \"cone\" or a hom descriptor");
  }
  const nlohmann::json& jvariant = field(*sub, "variant");
  HomVariant variant;
  if (jvariant == "standard") {
    variant = HomVariant::standard;
  } else if (jvariant == "prime") {
    variant = HomVariant::prime;
  } else {
    bad("hom variant must be \"standard\" or \"prime\"");
  }
  AugmentedComplex source = complex_from_json(field(*sub, "source"));
  AugmentedComplex target = complex_from_json(field(*sub, "target"));
  AugmentedComplex rebuilt = hom(source, target, variant);

  // the ambient data in the document must agree with the rebuilt complex
  nlohmann::json expected = complex_to_json(rebuilt);
  for (const char* key : {"basis", "boundary", "augmentation"}) {
    if (field(j, key) != expected[key]) {
      bad(std::string("hom document field \"") + key +
          "\" does not match the hom of its source and target");
    }
  }
  return rebuilt;
}

nlohmann::json cell_to_json(const Cell& x) {
  nlohmann::json minus = nlohmann::json::array();
  nlohmann::json plus = nlohmann::json::array();
  for (int n = 0; n <= x.dimension(); ++n) {
    minus.push_back(chain_to_json(x.component(Sign::minus, n)));
    plus.push_back(chain_to_json(x.component(Sign::plus, n)));
  }
  nlohmann::json out;
  out["minus"] = std::move(minus);
  out["plus"] = std::move(plus);
  return out;
}

Cell cell_from_json(const AugmentedComplex& K, const nlohmann::json& j) {
  if (!j.is_object()) bad("cell document must be a JSON object");
  const nlohmann::json& jminus = field(j, "minus");
  const nlohmann::json& jplus = field(j, "plus");
  if (!jminus.is_array() || !jplus.is_array()) {
    bad("\"minus\" and \"plus\" must be arrays");
  }
  std::vector<ChainVector> minus, plus;
  for (std::size_t n = 0; n < jminus.size(); ++n) {
    minus.push_back(chain_from_json(static_cast<int>(n), jminus[n]));
  }
  for (std::size_t n = 0; n < jplus.size(); ++n) {
    plus.push_back(chain_from_json(static_cast<int>(n), jplus[n]));
  }
  return make_cell(K, std::move(minus), std::move(plus));
}

} // namespace adc
