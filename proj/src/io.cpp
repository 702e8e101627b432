#include <lieshift/errors.hpp>
#include <lieshift/io.hpp>
#include <lieshift/structure.hpp>

#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>

namespace lieshift {

using nlohmann::json;

// ------------------------------------------------------------------ expressions

namespace {

struct Node {
  enum Kind { number, symbol, add, sub, mul, div, neg, pow, call } kind;
  Rational value;
  std::string name;
  int exponent = 0;
  std::vector<std::shared_ptr<Node>> kids;
};
using NodePtr = std::shared_ptr<Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse \"" + std::string(s_) + "\": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static NodePtr make(Node::Kind k, std::vector<NodePtr> kids = {}) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    return n;
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (eat('+')) {
        n = make(Node::add, {n, term()});
      } else if (eat('-')) {
        n = make(Node::sub, {n, term()});
      } else {
        return n;
      }
    }
  }
  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (eat('*')) {
        n = make(Node::mul, {n, unary()});
      } else if (eat('/')) {
        n = make(Node::div, {n, unary()});
      } else {
        return n;
      }
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Node::neg, {unary()});
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer");
    auto n = make(Node::pow, {base});
    n->exponent = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (negative) n->exponent = -n->exponent;
    return n;
  }
  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
        fail("floating-point numbers are not accepted");
      }
      auto n = make(Node::number);
      n->value = Rational(Integer(std::string(s_.substr(start, pos_ - start))));
      return n;
    }
    if (ident_char(c) && c != '\'') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (eat('(')) {
        auto n = make(Node::call, {expr()});
        n->name = name;
        if (!eat(')')) fail("missing ')'");
        return n;
      }
      auto n = make(Node::symbol);
      n->name = std::move(name);
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::optional<FieldElement> tower_symbol(const std::string& name, const FieldPtr& field) {
  for (FieldPtr f = field; f && f->level() > 0; f = f->base()) {
    const auto& vars = f->variables();
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (vars[k] == name) return f->variable(k);
    }
  }
  return std::nullopt;
}

FieldElement eval_field(const Node& n, const FieldPtr& field) {
  switch (n.kind) {
    case Node::number:
      return n.value;
    case Node::symbol: {
      auto v = tower_symbol(n.name, field);
      if (!v) throw InputError("unknown symbol '" + n.name + "'");
      return *v;
    }
    case Node::add:
      return eval_field(*n.kids[0], field) + eval_field(*n.kids[1], field);
    case Node::sub:
      return eval_field(*n.kids[0], field) - eval_field(*n.kids[1], field);
    case Node::mul:
      return eval_field(*n.kids[0], field) * eval_field(*n.kids[1], field);
    case Node::div: {
      FieldElement d = eval_field(*n.kids[1], field);
      if (d.is_zero()) throw InputError("division by zero");
      return eval_field(*n.kids[0], field) / d;
    }
    case Node::neg:
      return -eval_field(*n.kids[0], field);
    case Node::pow: {
      FieldElement b = eval_field(*n.kids[0], field);
      if (b.is_zero() && n.exponent < 0) throw InputError("division by zero");
      return b.pow(n.exponent);
    }
    case Node::call:
      break;
  }
  throw InputError("function '" + n.name + "' is not allowed in a scalar");
}

std::optional<std::size_t> label_index(const std::vector<std::string>& labels, const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == name) return i;
  }
  return std::nullopt;
}

PolyElement eval_poly(const Node& n, const std::vector<std::string>& labels, const FieldPtr& field) {
  const std::size_t nv = labels.size();
  auto rec = [&](const Node& k) { return eval_poly(k, labels, field); };
  switch (n.kind) {
    case Node::number:
      return PolyElement::constant(nv, n.value);
    case Node::symbol: {
      if (auto i = label_index(labels, n.name)) return PolyElement::variable(nv, *i);
      if (auto v = tower_symbol(n.name, field)) return PolyElement::constant(nv, *v);
      throw InputError("unknown symbol '" + n.name + "'");
    }
    case Node::add:
      return rec(*n.kids[0]) + rec(*n.kids[1]);
    case Node::sub:
      return rec(*n.kids[0]) - rec(*n.kids[1]);
    case Node::mul:
      return rec(*n.kids[0]) * rec(*n.kids[1]);
    case Node::div: {
      PolyElement d = rec(*n.kids[1]);
      if (!d.is_constant() || d.is_zero()) throw InputError("division only by nonzero scalars");
      return rec(*n.kids[0]).scale(d.constant_value().inverse());
    }
    case Node::neg:
      return -rec(*n.kids[0]);
    case Node::pow:
      if (n.exponent < 0) throw InputError("negative powers are not allowed here");
      return rec(*n.kids[0]).pow(n.exponent);
    case Node::call:
      break;
  }
  throw InputError("function '" + n.name + "' is not allowed in a polynomial");
}

PBWElement eval_pbw(const Node& n, const PBWAlgebraPtr& U) {
  auto rec = [&](const Node& k) { return eval_pbw(k, U); };
  switch (n.kind) {
    case Node::number:
      return PBWElement::constant(U, n.value);
    case Node::symbol: {
      if (auto i = label_index(U->labels(), n.name)) return PBWElement::generator(U, *i);
      if (auto v = tower_symbol(n.name, U->field())) return PBWElement::constant(U, *v);
      throw InputError("unknown symbol '" + n.name + "'");
    }
    case Node::add:
      return rec(*n.kids[0]) + rec(*n.kids[1]);
    case Node::sub:
      return rec(*n.kids[0]) - rec(*n.kids[1]);
    case Node::mul:
      return rec(*n.kids[0]) * rec(*n.kids[1]);
    case Node::div: {
      PBWElement d = rec(*n.kids[1]);
      if (!d.is_constant() || d.is_zero()) throw InputError("division only by nonzero scalars");
      return rec(*n.kids[0]).scale(d.constant_value().inverse());
    }
    case Node::neg:
      return -rec(*n.kids[0]);
    case Node::pow: {
      PBWElement b = rec(*n.kids[0]);
      if (n.exponent >= 0) return b.pow(n.exponent);
      if (b.terms().size() != 1) throw InputError("negative powers only of monomials in Laurent variables");
      const auto& [e, c] = *b.terms().begin();
      Exponent inv = e;
      for (std::size_t i = 0; i < inv.size(); ++i) {
        if (inv[i] != 0 && !U->is_laurent(i)) throw InputError("negative power of non-Laurent '" + U->labels()[i] + "'");
        inv[i] = -inv[i];
      }
      return PBWElement::monomial(U, inv, c.inverse()).pow(-n.exponent);
    }
    case Node::call:
      if (n.name == "symm") return symmetrize(U, eval_poly(*n.kids[0], U->labels(), U->field()));
      break;
  }
  throw InputError("unknown function '" + n.name + "'");
}

}  // namespace

FieldElement parse_field_element(std::string_view text, const FieldPtr& field) {
  return eval_field(*Parser(text).parse(), field);
}

PolyElement parse_poly(std::string_view text, const LieAlgebra& L) {
  return eval_poly(*Parser(text).parse(), L.labels(), L.field());
}

PBWElement parse_pbw(std::string_view text, const PBWAlgebraPtr& U) { return eval_pbw(*Parser(text).parse(), U); }

Vector parse_vector(std::string_view text, const LieAlgebra& L) {
  PolyElement p = parse_poly(text, L);
  Vector v(L.dim());
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i]) at = i;
    }
    if (deg != 1) throw InputError("\"" + std::string(text) + "\" is not a linear combination of basis elements");
    v[at] = c;
  }
  return v;
}

LinearForm parse_linear_form(std::string_view text, const LieAlgebra& L) {
  auto parts = split_top_level(text, ',');
  if (parts.size() > 1 || (L.dim() == 1 && !label_index(L.labels(), std::string(text)))) {
    if (parts.size() != L.dim()) throw InputError("linear form needs " + std::to_string(L.dim()) + " coordinates");
    Vector v;
    for (const auto& p : parts) v.push_back(parse_field_element(p, L.field()));
    return {v};
  }
  return {parse_vector(text, L)};
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    auto b = s.find_first_not_of(" \t\n");
    auto e = s.find_last_not_of(" \t\n");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  std::erase_if(out, [](const std::string& s) { return s.empty(); });
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ------------------------------------------------------------------ AlgebraFile

namespace {

std::size_t resolve_index(const json& v, const std::vector<std::string>& labels) {
  if (v.is_number_integer()) {
    auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size()) throw InputError("basis index out of range");
    return static_cast<std::size_t>(i);
  }
  if (v.is_string()) {
    if (auto i = label_index(labels, v.get<std::string>())) return *i;
    throw InputError("unknown basis label '" + v.get<std::string>() + "'");
  }
  throw InputError("basis references must be labels or integer indices");
}

FieldElement coefficient(const json& v, const FieldPtr& field) {
  if (v.is_number_integer()) return FieldElement(Rational(v.get<long>()));
  if (!v.is_string()) throw InputError("coefficients must be strings such as \"3\" or \"-1/2\"");
  return parse_field_element(v.get<std::string>(), field);
}

Vector read_vector(const json& v, const std::vector<std::string>& labels, const FieldPtr& field) {
  if (!v.is_object()) throw InputError("vectors are objects mapping labels to coefficients");
  Vector out(labels.size());
  for (const auto& [k, c] : v.items()) out[resolve_index(json(k), labels)] = coefficient(c, field);
  return out;
}

Subspace read_subspace(const json& v, const std::vector<std::string>& labels, const FieldPtr& field) {
  if (!v.is_array()) throw InputError("subspaces are arrays of vectors");
  std::vector<Vector> vs;
  for (const auto& x : v) vs.push_back(read_vector(x, labels, field));
  Subspace s = Subspace::span(labels.size(), vs);
  if (s.dim() != vs.size()) throw InputError("subspace vectors are linearly dependent");
  return s;
}

json write_vector(const Vector& v, const std::vector<std::string>& labels) {
  json o = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) o[labels[i]] = v[i].to_string();
  }
  return o;
}

json write_subspace(const Subspace& s, const std::vector<std::string>& labels) {
  json a = json::array();
  for (const auto& v : s.basis()) a.push_back(write_vector(v, labels));
  return a;
}

void check_keys(const json& o, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : o.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw InputError("unknown key '" + k + "' in " + where);
  }
}

}  // namespace

LieAlgebra algebra_from_json(const json& j, bool check) {
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  check_keys(j, {"format", "name", "field", "dim", "basis", "brackets", "annotations", "comment"}, "algebra file");
  if (!j.contains("format") || j["format"] != "lieshift/1") throw InputError("expected \"format\": \"lieshift/1\"");
  if (!j.contains("basis") || !j["basis"].is_array()) throw InputError("missing basis");
  std::vector<std::string> labels;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw InputError("basis labels must be strings");
    labels.push_back(b.get<std::string>());
  }
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<long long>() != static_cast<long long>(labels.size()))) {
    throw InputError("dim does not match the number of basis labels");
  }
  FieldPtr field = Field::rationals();
  if (j.contains("field")) {
    if (!j["field"].is_array()) throw InputError("field must be a list of variable lists");
    for (const auto& level : j["field"]) {
      std::vector<std::string> vars;
      for (const auto& v : level) vars.push_back(v.get<std::string>());
      field = Field::extend(field, vars);
    }
  }
  LieAlgebra L(field, labels, j.value("name", std::string()));
  std::vector<std::vector<bool>> seen(labels.size(), std::vector<bool>(labels.size(), false));
  if (j.contains("brackets")) {
    for (const auto& b : j["brackets"]) {
      check_keys(b, {"i", "j", "coeffs"}, "bracket entry");
      if (!b.contains("i") || !b.contains("j")) throw InputError("bracket entry needs i and j");
      std::size_t i = resolve_index(b["i"], labels), k = resolve_index(b["j"], labels);
      if (seen[i][k]) throw InputError("bracket [" + labels[i] + ", " + labels[k] + "] given twice");
      seen[i][k] = seen[k][i] = true;
      L.set_bracket(i, k, read_vector(b.value("coeffs", json::object()), labels, field));
    }
  }
  if (j.contains("annotations")) {
    const json& a = j["annotations"];
    check_keys(a, {"central", "levi", "nilradical", "solvable_radical", "heisenberg_split"}, "annotations");
    auto& an = L.annotations();
    if (a.contains("central")) {
      std::vector<std::size_t> c;
      for (const auto& x : a["central"]) c.push_back(resolve_index(x, labels));
      an.central = c;
    }
    if (a.contains("levi")) an.levi = read_subspace(a["levi"], labels, field);
    if (a.contains("nilradical")) an.nilradical = read_subspace(a["nilradical"], labels, field);
    if (a.contains("solvable_radical")) an.solvable_radical = read_subspace(a["solvable_radical"], labels, field);
    if (a.contains("heisenberg_split")) {
      const json& s = a["heisenberg_split"];
      check_keys(s, {"l_basis", "x", "y", "z"}, "heisenberg_split");
      HeisenbergSplit split;
      split.l_basis = read_subspace(s.value("l_basis", json::array()), labels, field);
      for (const auto& v : s.value("x", json::array())) split.x.push_back(read_vector(v, labels, field));
      for (const auto& v : s.value("y", json::array())) split.y.push_back(read_vector(v, labels, field));
      if (!s.contains("z")) throw InputError("heisenberg_split needs z");
      split.z = read_vector(s["z"], labels, field);
      an.heisenberg_split = split;
    }
  }
  if (!check) return L;
  auto rep = validate(L);
  if (!rep.ok()) throw InputError("algebra fails validation: " + rep.failures.front());
  return L;
}

json algebra_to_json(const LieAlgebra& L) {
  json j;
  j["format"] = "lieshift/1";
  if (!L.name().empty()) j["name"] = L.name();
  std::vector<FieldPtr> chain;
  for (FieldPtr f = L.field(); f && f->level() > 0; f = f->base()) chain.insert(chain.begin(), f);
  if (!chain.empty()) {
    json levels = json::array();
    for (const auto& f : chain) levels.push_back(f->variables());
    j["field"] = levels;
  }
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  json br = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      if (is_zero(L.structure(i, k))) continue;
      br.push_back({{"i", L.labels()[i]}, {"j", L.labels()[k]}, {"coeffs", write_vector(L.structure(i, k), L.labels())}});
    }
  }
  j["brackets"] = br;
  const auto& an = L.annotations();
  json a = json::object();
  if (an.central) {
    json c = json::array();
    for (auto i : *an.central) c.push_back(L.labels()[i]);
    a["central"] = c;
  }
  if (an.levi) a["levi"] = write_subspace(*an.levi, L.labels());
  if (an.nilradical) a["nilradical"] = write_subspace(*an.nilradical, L.labels());
  if (an.solvable_radical) a["solvable_radical"] = write_subspace(*an.solvable_radical, L.labels());
  if (an.heisenberg_split) {
    const auto& s = *an.heisenberg_split;
    json x = json::array(), y = json::array();
    for (const auto& v : s.x) x.push_back(write_vector(v, L.labels()));
    for (const auto& v : s.y) y.push_back(write_vector(v, L.labels()));
    a["heisenberg_split"] = {{"l_basis", write_subspace(s.l_basis, L.labels())},
                             {"x", x},
                             {"y", y},
                             {"z", write_vector(s.z, L.labels())}};
  }
  if (!a.empty()) j["annotations"] = a;
  return j;
}

LieAlgebra read_algebra_file(const std::string& path, bool check) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return algebra_from_json(j, check);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_algebra_file(const LieAlgebra& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << algebra_to_json(L).dump(2) << "\n";
}

}  // namespace lieshift
