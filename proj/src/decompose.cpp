#include "adc/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace adc {

std::map<std::string, Int> atom_expansion(const Cell& x) {
  const AugmentedComplex& K = x.complex();
  const AtomTable& table = K.atoms();

  std::map<std::string, Int> coeffs;
  // (id, coefficient) grouped by decreasing dimension as they are found
  std::vector<std::pair<std::string, Int>> collected;
  for (int m = x.dimension(); m >= 0; --m) {
    ChainVector rem_minus = x.component(Sign::minus, m);
    ChainVector rem_plus = x.component(Sign::plus, m);
    for (const auto& [id, c] : collected) {
      rem_minus -= c * table.component(id, Sign::minus, m);
      rem_plus -= c * table.component(id, Sign::plus, m);
    }
    if (rem_minus != rem_plus) {
      throw CellError("atom expansion: minus/plus passes disagree at degree " +
                      std::to_string(m) + " (sequence is not a mu-cell)");
    }
    for (const auto& [id, c] : rem_minus.terms()) {
      collected.emplace_back(id, c);
      coeffs.emplace(id, c);
    }
  }
  return coeffs;
}

std::vector<std::string> atom_list_mod(const Cell& x, int r) {
  const AugmentedComplex& K = x.complex();
  std::map<std::string, Int> coeffs = atom_expansion(x);

  std::vector<std::pair<int, std::string>> keyed;
  for (const auto& [id, c] : coeffs) {
    int deg = K.degree_of(id);
    if (deg <= r) continue;
    if (c < 0) {
      throw CellError("atom_list_mod: coefficient of '" + id + "' is " +
                      c.str() +
                      " (cell is not congruent to a sum of atoms above level " +
                      std::to_string(r) + ")");
    }
    if (c > 1000000) {
      throw CellError("atom_list_mod: multiplicity of '" + id +
                      "' is unreasonably large");
    }
    for (Int i = 0; i < c; ++i) keyed.emplace_back(deg, id);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& [deg, id] : keyed) out.push_back(std::move(id));
  return out;
}

int decomposition_index(const Cell& x) {
  const AugmentedComplex& K = x.complex();
  std::map<std::string, Int> coeffs = atom_expansion(x);

  // entries of the expansion bucketed by dimension
  std::map<int, std::vector<Int>> by_degree;
  int top = -1;
  for (const auto& [id, c] : coeffs) {
    int deg = K.degree_of(id);
    by_degree[deg].push_back(c);
    top = std::max(top, deg);
  }

  for (int r = -1;; ++r) {
    // atoms of dimension > r+1 must form an empty set or a single unit
    std::size_t entries = 0;
    bool unit = true;
    for (const auto& [deg, cs] : by_degree) {
      if (deg <= r + 1) continue;
      entries += cs.size();
      for (const Int& c : cs) {
        if (c != 1) unit = false;
      }
    }
    if (entries == 0 || (entries == 1 && unit)) return r;
    if (r > top) return r; // unreachable; guards against malformed input
  }
}

namespace {

const std::vector<std::string>& level_order(const AugmentedComplex& K, int r) {
  const LoopFreeResult& lf = K.loop_free_result();
  if (!lf.ok) {
    throw std::domain_error("complex is not loop-free (cycle at level " +
                            std::to_string(lf.cycle_level) + ")");
  }
  return lf.level_orders.at(static_cast<std::size_t>(r));
}

} // namespace

std::vector<std::pair<Cell, std::string>> decompose_step(const Cell& x) {
  const AugmentedComplex& K = x.complex();
  if (!x.is_nu()) throw CellError("decompose_step: not a nu-cell");
  int r = decomposition_index(x);
  if (r < 0) {
    throw CellError("decompose_step: decomposition index is -1");
  }

  std::vector<std::string> list = atom_list_mod(x, r);
  const std::vector<std::string>& order = level_order(K, r);
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::stable_sort(list.begin(), list.end(),
                   [&](const std::string& a, const std::string& b) {
                     return position.at(a) < position.at(b);
                   });

  std::size_t k = list.size();
  assert(k >= 2);
  std::vector<Cell> atoms;
  atoms.reserve(k);
  for (const auto& id : list) atoms.push_back(atom_cell(K, id));

  Cell z = x;
  for (const auto& a : atoms) z = mu_sub(z, a);
  assert(z.dimension() <= r);

  // x_i = d^+_r(sum of earlier atoms) + <b_i> + d^-_r(sum of later atoms) + z
  std::vector<Cell> suffix(k, Cell::zero(K));
  for (std::size_t i = k - 1; i-- > 0;) {
    suffix[i] = mu_add(suffix[i + 1], atoms[i + 1]);
  }
  std::vector<std::pair<Cell, std::string>> out;
  out.reserve(k);
  Cell prefix = Cell::zero(K);
  for (std::size_t i = 0; i < k; ++i) {
    Cell xi = mu_add(mu_add(d(Sign::plus, r, prefix), atoms[i]),
                     mu_add(d(Sign::minus, r, suffix[i]), z));
    if (!xi.is_nu()) {
      throw CellError("decompose_step: factor " + std::to_string(i + 1) +
                      " is not a nu-cell");
    }
    out.emplace_back(std::move(xi), list[i]);
    prefix = mu_add(prefix, atoms[i]);
  }

#ifndef NDEBUG
  Cell recomposed = out[0].first;
  for (std::size_t i = 1; i < k; ++i) {
    recomposed = compose(r, recomposed, out[i].first);
  }
  assert(recomposed == x);
#endif
  return out;
}

CompositionTree decompose_full(const Cell& x) {
  if (!x.is_nu()) throw CellError("decompose_full: not a nu-cell");
  int r = decomposition_index(x);
  if (r < 0) {
    std::optional<std::string> id = atom_id(x);
    if (!id) {
      throw CellError(
          "decompose_full: cell of decomposition index -1 is not an atom "
          "(is the basis unital?)");
    }
    CompositionTree leaf;
    leaf.atom = *id;
    return leaf;
  }
  CompositionTree node;
  node.level = r;
  for (auto& [factor, b] : decompose_step(x)) {
    node.factors.push_back(decompose_full(factor));
  }
  return node;
}

Cell evaluate(const AugmentedComplex& K, const CompositionTree& tree) {
  if (tree.is_leaf()) return atom_cell(K, tree.atom);
  if (tree.factors.size() < 2) {
    throw std::invalid_argument("composition node needs at least two factors");
  }
  Cell out = evaluate(K, tree.factors[0]);
  for (std::size_t i = 1; i < tree.factors.size(); ++i) {
    out = compose(tree.level, out, evaluate(K, tree.factors[i]));
  }
  return out;
}

namespace {

void collect_leaves(const CompositionTree& tree, std::vector<std::string>& out) {
  if (tree.is_leaf()) {
    out.push_back(tree.atom);
    return;
  }
  for (const auto& f : tree.factors) collect_leaves(f, out);
}

} // namespace

std::vector<std::string> tree_leaves(const CompositionTree& tree) {
  std::vector<std::string> out;
  collect_leaves(tree, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_word(const CompositionTree& tree) {
  if (tree.is_leaf()) return "⟨" + tree.atom + "⟩";
  std::ostringstream os;
  for (std::size_t i = 0; i < tree.factors.size(); ++i) {
    if (i) os << " #" << tree.level << " ";
    const CompositionTree& f = tree.factors[i];
    if (f.is_leaf()) {
      os << to_word(f);
    } else {
      os << "(" << to_word(f) << ")";
    }
  }
  return os.str();
}

namespace {

struct WordParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit WordParser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool consume(const std::string& tok) {
    skip_space();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("composition word, position " + std::to_string(pos) +
                     ": " + msg);
  }

  CompositionTree parse_factor() {
    skip_space();
    if (consume("(")) {
      CompositionTree inner = parse_expr();
      if (!consume(")")) fail("expected ')'");
      return inner;
    }
    std::string close;
    if (consume("⟨")) {
      close = "⟩";
    } else if (consume("<")) {
      close = ">";
    } else {
      fail("expected an atom or '('");
    }
    std::size_t end = text.find(close, pos);
    if (end == std::string::npos) fail("unterminated atom");
    CompositionTree leaf;
    leaf.atom = text.substr(pos, end - pos);
    pos = end + close.size();
    return leaf;
  }

  CompositionTree parse_expr() {
    CompositionTree first = parse_factor();
    skip_space();
    if (pos >= text.size() || text[pos] != '#') return first;

    CompositionTree node;
    node.factors.push_back(std::move(first));
    node.level = -1;
    while (consume("#")) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == start) fail("expected a level after '#'");
      int level = std::stoi(text.substr(start, pos - start));
      if (node.level >= 0 && node.level != level) {
        fail("mixed composition levels; parenthesize");
      }
      node.level = level;
      node.factors.push_back(parse_factor());
      skip_space();
    }
    return node;
  }
};

} // namespace

CompositionTree parse_word(const std::string& word) {
  WordParser parser(word);
  CompositionTree tree = parser.parse_expr();
  parser.skip_space();
  if (parser.pos != word.size()) parser.fail("trailing input");
  return tree;
}

} // namespace adc
