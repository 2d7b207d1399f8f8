#include "gg/model.hpp"

#include <algorithm>
#include <set>

#include "gg/parse.hpp"

namespace gg {

const char* to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::vector: return "vector";
    case ObjectKind::form: return "form";
    case ObjectKind::twoform: return "twoform";
    case ObjectKind::map: return "map";
  }
  return "vector";
}

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::almost_contact: return "almost_contact";
    case StructureKind::contact: return "contact";
    case StructureKind::complex: return "complex";
    case StructureKind::symplectic: return "symplectic";
  }
  return "almost_contact";
}

namespace {

template <class T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  for (const auto& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

/// Value of a model expression: a scalar, a section of TM (+) T*M or a two-form.
struct MValue {
  enum class Kind { scalar, section, twoform };
  Kind kind = Kind::scalar;
  Scalar scalar;
  GVector section;
  bool has_vec = false;
  bool has_form = false;
  Matrix two;

  const char* describe() const {
    switch (kind) {
      case Kind::scalar: return "scalar";
      case Kind::twoform: return "two-form";
      case Kind::section: return has_vec && has_form ? "mixed section" : has_form ? "one-form" : "vector";
    }
    return "scalar";
  }
};

struct ModelSemantics {
  using Value = MValue;

  const Model& model;
  const Manifold& manifold;

  const Chart& chart() const { return manifold.chart; }
  Eigen::Index n() const { return static_cast<Eigen::Index>(chart().dim()); }

  Value scalar(Scalar s) const { return {Value::Kind::scalar, std::move(s), {}, false, false, {}}; }
  Value section(GVector g, bool vec, bool form) const {
    return {Value::Kind::section, {}, std::move(g), vec, form, {}};
  }
  Value twoform(Matrix w) const { return {Value::Kind::twoform, {}, {}, false, false, std::move(w)}; }

  Value number(const mpq_class& q, const Token&) { return scalar(Scalar(GaussianRational(q))); }
  Value imaginary(const Token&) { return scalar(imaginary_unit()); }

  Value identifier(const Token& t) {
    const Chart& c = chart();
    if (auto k = c.index_of(t.text)) return scalar(coordinate(c.coord(*k)));
    if (t.text.size() > 1 && (t.text[0] == 'D' || t.text[0] == 'd')) {
      if (auto k = c.index_of(std::string_view(t.text).substr(1))) {
        const bool vec = t.text[0] == 'D';
        return section(GVector::basis(c, vec ? *k : c.dim() + *k), vec, !vec);
      }
    }
    if (const ModelObject* obj = model.find_object(t.text)) {
      if (obj->manifold != manifold.name)
        fail_at(t, "'" + t.text + "' is declared on manifold " + obj->manifold + ", not " + manifold.name);
      switch (obj->kind) {
        case ObjectKind::vector: return section(obj->section, true, false);
        case ObjectKind::form: return section(obj->section, false, true);
        case ObjectKind::twoform: return twoform(obj->two.comps);
        case ObjectKind::map: fail_at(t, "map '" + t.text + "' cannot be used in an expression");
      }
    }
    fail_at(t, "unresolved name '" + t.text + "'");
  }

  Value add(Value a, Value b, const Token& op) { return combine(std::move(a), std::move(b), op, false); }
  Value sub(Value a, Value b, const Token& op) { return combine(std::move(a), std::move(b), op, true); }

  Value combine(Value a, Value b, const Token& op, bool subtract) {
    if (a.kind != b.kind)
      fail_at(op, std::string("cannot ") + (subtract ? "subtract" : "add") + " a " + b.describe() + (subtract ? " from" : " to") + " a " + a.describe());
    switch (a.kind) {
      case Value::Kind::scalar: return scalar(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
      case Value::Kind::section:
        return section(subtract ? a.section - b.section : a.section + b.section, a.has_vec || b.has_vec,
                       a.has_form || b.has_form);
      case Value::Kind::twoform: return twoform(subtract ? Matrix(a.two - b.two) : Matrix(a.two + b.two));
    }
    return a;
  }

  Value scale(Value v, const Scalar& f) {
    switch (v.kind) {
      case Value::Kind::scalar: v.scalar = v.scalar * f; break;
      case Value::Kind::section: v.section = f * v.section; break;
      case Value::Kind::twoform: v.two = v.two * f; break;
    }
    return v;
  }

  Value mul(Value a, Value b, const Token& op) {
    if (a.kind == Value::Kind::scalar) return scale(std::move(b), a.scalar);
    if (b.kind == Value::Kind::scalar) return scale(std::move(a), b.scalar);
    fail_at(op, std::string("cannot multiply a ") + a.describe() + " by a " + b.describe() + "; use '^' for wedge");
  }

  Value div(Value a, Value b, const Token& op) {
    if (b.kind != Value::Kind::scalar) fail_at(op, std::string("cannot divide by a ") + b.describe());
    if (b.scalar.is_zero()) fail_at(op, "division by zero");
    return scale(std::move(a), Scalar(1) / b.scalar);
  }

  Value neg(Value a, const Token&) { return scale(std::move(a), Scalar(-1)); }

  Value power(Value a, std::uint32_t e, const Token& op) {
    if (a.kind != Value::Kind::scalar) fail_at(op, std::string("cannot raise a ") + a.describe() + " to a power");
    return scalar(a.scalar.pow(e));
  }

  Value wedge(Value a, Value b, const Token& op) {
    const bool forms = a.kind == Value::Kind::section && b.kind == Value::Kind::section && !a.has_vec &&
                       !b.has_vec;
    if (!forms) fail_at(op, std::string("wedge needs two one-forms, found ") + a.describe() + " and " + b.describe());
    const OneForm x = a.section.form();
    const OneForm y = b.section.form();
    return twoform(TwoForm::wedge(x, y).comps);
  }
};

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) : in_(tokenize(text)) {}

  Model parse() {
    while (true) {
      in_.skip_newlines();
      if (in_.at_end()) break;
      const Token& kw = in_.expect_identifier("declaration keyword");
      if (kw.text == "manifold")
        manifold();
      else if (kw.text == "vector" || kw.text == "form" || kw.text == "twoform")
        object(kw.text == "vector" ? ObjectKind::vector : kw.text == "form" ? ObjectKind::form : ObjectKind::twoform);
      else if (kw.text == "map")
        map();
      else if (kw.text == "structure")
        structure();
      else if (kw.text == "product")
        product();
      else
        fail_at(kw, "unknown declaration '" + kw.text + "'");
      end_of_statement();
    }
    return std::move(model_);
  }

 private:
  void end_of_statement() {
    const Token& t = in_.peek();
    if (t.kind != Token::Kind::newline && t.kind != Token::Kind::end)
      fail_at(t, "expected end of line, found " + TokenStream::describe(t));
  }

  Token new_name(std::set<std::string>& space, const char* what) {
    const Token name = in_.expect_identifier(what);
    if (name.text == "i" || name.text == "zero") fail_at(name, "'" + name.text + "' is reserved");
    if (!space.insert(name.text).second) fail_at(name, "duplicate name '" + name.text + "'");
    return name;
  }

  const Manifold& on_manifold() {
    const Token& on = in_.expect_identifier("'on'");
    if (on.text != "on") fail_at(on, "expected 'on', found " + TokenStream::describe(on));
    const Token m = in_.expect_identifier("manifold name");
    const Manifold* mf = model_.find_manifold(m.text);
    if (!mf) fail_at(m, "unresolved manifold '" + m.text + "'");
    return *mf;
  }

  MValue expression(const Manifold& mf) {
    ModelSemantics sem{model_, mf};
    ExpressionParser<ModelSemantics> p(in_, sem);
    return p.expr();
  }

  void manifold() {
    const Token name = new_name(manifold_names_, "manifold name");
    in_.expect("{");
    in_.skip_newlines();
    const Token& key = in_.expect_identifier("'coords'");
    if (key.text != "coords") fail_at(key, "expected 'coords', found " + TokenStream::describe(key));
    in_.expect(":");
    in_.expect("[");
    std::vector<std::string> coords;
    std::vector<Token> coord_tokens;
    if (!in_.peek().is("]")) {
      do {
        coord_tokens.push_back(in_.expect_identifier("coordinate name"));
        coords.push_back(coord_tokens.back().text);
      } while (in_.accept(","));
    }
    in_.expect("]");
    in_.skip_newlines();
    in_.expect("}");
    if (coords.empty()) fail_at(name, "manifold '" + name.text + "' has no coordinates");
    try {
      model_.manifolds.push_back({name.text, Chart(coords)});
    } catch (const Error& e) {
      fail_at(coord_tokens.front(), e.what());
    }
  }

  static GVector expect_kind(const MValue& v, ObjectKind kind, const Token& at) {
    const bool zero = v.kind == MValue::Kind::scalar && v.scalar.is_zero();
    if (kind == ObjectKind::vector && (zero || (v.kind == MValue::Kind::section && !v.has_form)))
      return zero ? GVector() : v.section;
    if (kind == ObjectKind::form && (zero || (v.kind == MValue::Kind::section && !v.has_vec)))
      return zero ? GVector() : v.section;
    fail_at(at, std::string("expected a ") + (kind == ObjectKind::vector ? "vector" : "one-form") + ", found a " +
                    v.describe());
  }

  GVector section_of(const MValue& v, ObjectKind kind, const Token& at, const Chart& chart) {
    GVector g = expect_kind(v, kind, at);
    return g.comps.size() == 0 ? GVector::zero(chart) : g;
  }

  TwoForm twoform_of(const MValue& v, const Token& at, const Chart& chart) {
    if (v.kind == MValue::Kind::scalar && v.scalar.is_zero()) return TwoForm::zero(chart);
    if (v.kind != MValue::Kind::twoform) fail_at(at, std::string("expected a two-form, found a ") + v.describe());
    return {chart, v.two};
  }

  void object(ObjectKind kind) {
    const Token name = new_name(object_names_, "object name");
    const Manifold& mf = on_manifold();
    in_.expect("=");
    const Token at = in_.peek();
    const MValue v = expression(mf);
    ModelObject obj{name.text, mf.name, kind, {}, {}, {}};
    if (kind == ObjectKind::twoform)
      obj.two = twoform_of(v, at, mf.chart);
    else
      obj.section = section_of(v, kind, at, mf.chart);
    model_.objects.push_back(std::move(obj));
  }

  void map() {
    const Token name = new_name(object_names_, "map name");
    const Manifold& mf = on_manifold();
    const Chart& chart = mf.chart;
    const auto n = static_cast<Eigen::Index>(chart.dim());
    Matrix m = Matrix::Zero(n, n);
    std::vector<bool> seen(chart.dim(), false);
    in_.expect("{");
    while (true) {
      while (in_.peek().kind == Token::Kind::newline || in_.peek().is(";")) in_.next();
      if (in_.accept("}")) break;
      const Token key = in_.expect_identifier("basis field D<coord>");
      std::optional<std::size_t> k;
      if (key.text.size() > 1 && key.text[0] == 'D') k = chart.index_of(std::string_view(key.text).substr(1));
      if (!k) fail_at(key, "expected a basis field D<coord> of manifold " + mf.name + ", found '" + key.text + "'");
      if (seen[*k]) fail_at(key, "duplicate entry for '" + key.text + "'");
      seen[*k] = true;
      in_.expect("->");
      const Token at = in_.peek();
      const GVector image = section_of(expression(mf), ObjectKind::vector, at, chart);
      m.col(static_cast<Eigen::Index>(*k)) = image.comps.head(n);
      const Token& sep = in_.peek();
      if (!sep.is(";") && !sep.is("}") && sep.kind != Token::Kind::newline)
        fail_at(sep, "expected ';' or '}', found " + TokenStream::describe(sep));
    }
    model_.objects.push_back({name.text, mf.name, ObjectKind::map, {}, {}, m});
  }

  /// A map argument: a declared map on `mf` or `zero`.
  std::pair<Matrix, std::string> map_argument(const Manifold& mf) {
    const Token t = in_.expect_identifier("map name");
    const auto n = static_cast<Eigen::Index>(mf.chart.dim());
    if (t.text == "zero") return {Matrix::Zero(n, n), "zero"};
    const ModelObject* obj = model_.find_object(t.text);
    if (!obj) fail_at(t, "unresolved name '" + t.text + "'");
    if (obj->kind != ObjectKind::map) fail_at(t, "'" + t.text + "' is a " + to_string(obj->kind) + ", not a map");
    if (obj->manifold != mf.name)
      fail_at(t, "'" + t.text + "' is declared on manifold " + obj->manifold + ", not " + mf.name);
    return {obj->map, t.text};
  }

  void structure() {
    const Token name = new_name(structure_names_, "structure name");
    const Manifold& mf = on_manifold();
    const Chart& chart = mf.chart;
    in_.expect("=");
    const Token ctor = in_.expect_identifier("structure constructor");
    ModelStructure s;
    s.name = name.text;
    s.manifold = mf.name;
    in_.expect("(");
    if (ctor.text == "almost_contact") {
        s.kind = StructureKind::almost_contact;
        auto [phi, phi_text] = map_argument(mf);
        in_.expect(",");
        Token at = in_.peek();
        const VectorField xi = section_of(expression(mf), ObjectKind::vector, at, chart).vec();
        in_.expect(",");
        at = in_.peek();
        const OneForm eta = section_of(expression(mf), ObjectKind::form, at, chart).form();
        s.args = {phi_text, to_string(xi), to_string(eta)};
        s.classical = ClassicalACS{phi, xi, eta};
        construct(s, [&] { s.gacs = from_almost_contact(*s.classical); });
      } else if (ctor.text == "contact") {
        s.kind = StructureKind::contact;
        const Token at = in_.peek();
        const OneForm eta = section_of(expression(mf), ObjectKind::form, at, chart).form();
        s.args = {to_string(eta)};
        construct(s, [&] { s.gacs = from_contact(eta); });
      } else if (ctor.text == "complex") {
        s.kind = StructureKind::complex;
        auto [j, j_text] = map_argument(mf);
        s.args = {j_text};
        construct(s, [&] { s.gcs = from_complex(chart, j); });
      } else if (ctor.text == "symplectic") {
        s.kind = StructureKind::symplectic;
        const Token at = in_.peek();
        const TwoForm w = twoform_of(expression(mf), at, chart);
        s.args = {to_string(w)};
        construct(s, [&] { s.gcs = from_symplectic(w); });
      } else {
        fail_at(ctor, "unknown structure constructor '" + ctor.text +
                          "' (expected almost_contact, contact, complex or symplectic)");
    }
    in_.expect(")");
    model_.structures.push_back(std::move(s));
  }

  template <class F>
  static void construct(ModelStructure& s, F&& build) {
    try {
      build();
    } catch (const PreconditionError& e) {
      s.error = e.what();
    }
  }

  const ModelStructure& structure_ref() {
    const Token t = in_.expect_identifier("structure name");
    const ModelStructure* s = model_.find_structure(t.text);
    if (!s) fail_at(t, "unresolved structure '" + t.text + "'");
    return *s;
  }

  void product() {
    const Token name = new_name(structure_names_, "product name");
    in_.expect("=");
    std::string left;
    std::string right;
    Token at = in_.peek();
    if (in_.peek().is_word("product") && in_.peek(1).is("(")) {
      in_.next();
      in_.next();
      at = in_.peek();
      left = structure_ref().name;
      in_.expect(",");
      right = structure_ref().name;
      in_.expect(")");
    } else {
      left = structure_ref().name;
      const Token& x = in_.expect_identifier("'x'");
      if (x.text != "x") fail_at(x, "expected 'x' or 'product(', found " + TokenStream::describe(x));
      right = structure_ref().name;
    }
    const ModelStructure& l = *model_.find_structure(left);
    const ModelStructure& r = *model_.find_structure(right);
    if (!l.is_contact_type())
      fail_at(at, "left factor '" + left + "' must be an almost contact or contact structure");
    try {
      Chart::product(model_.find_manifold(l.manifold)->chart, model_.find_manifold(r.manifold)->chart);
    } catch (const ChartMismatch& e) {
      fail_at(at, e.what());
    }
    model_.products.push_back({name.text, left, right});
  }

  TokenStream in_;
  Model model_;
  std::set<std::string> manifold_names_;
  std::set<std::string> object_names_;
  std::set<std::string> structure_names_;
};

}  // namespace

const Manifold* Model::find_manifold(std::string_view name) const { return find_named(manifolds, name); }
const ModelObject* Model::find_object(std::string_view name) const { return find_named(objects, name); }
const ModelStructure* Model::find_structure(std::string_view name) const { return find_named(structures, name); }
const ModelProduct* Model::find_product(std::string_view name) const { return find_named(products, name); }

Model parse_model(std::string_view text) { return ModelParser(text).parse(); }

std::string print_model(const Model& model) {
  std::string out;
  for (const auto& m : model.manifolds) {
    out += "manifold " + m.name + " { coords: [";
    const auto names = m.chart.names();
    for (std::size_t k = 0; k < names.size(); ++k) out += (k ? ", " : "") + names[k];
    out += "] }\n";
  }
  for (const auto& o : model.objects) {
    out += std::string(to_string(o.kind)) + " " + o.name + " on " + o.manifold;
    switch (o.kind) {
      case ObjectKind::vector: out += " = " + to_string(o.section.vec()) + "\n"; break;
      case ObjectKind::form: out += " = " + to_string(o.section.form()) + "\n"; break;
      case ObjectKind::twoform: out += " = " + to_string(o.two) + "\n"; break;
      case ObjectKind::map: {
        const Chart& chart = model.find_manifold(o.manifold)->chart;
        out += " {";
        for (std::size_t k = 0; k < chart.dim(); ++k)
          out += std::string(k ? ";" : "") + " D" + chart.coord(k).name() + " -> " +
                 to_string(VectorField{chart, o.map.col(static_cast<Eigen::Index>(k))});
        out += " }\n";
        break;
      }
    }
  }
  for (const auto& s : model.structures) {
    out += "structure " + s.name + " on " + s.manifold + " = " + to_string(s.kind) + "(";
    for (std::size_t k = 0; k < s.args.size(); ++k) out += (k ? ", " : "") + s.args[k];
    out += ")\n";
  }
  for (const auto& p : model.products) out += "product " + p.name + " = product(" + p.left + ", " + p.right + ")\n";
  return out;
}

GVector parse_section(std::string_view text, const Model& model, const std::string& manifold) {
  const Manifold* mf = model.find_manifold(manifold);
  if (!mf) throw Error("unknown manifold '" + manifold + "'");
  return parse_section(text, model, *mf);
}

GVector parse_section(std::string_view text, const Model& model, const Manifold& manifold) {
  const Manifold* mf = &manifold;
  TokenStream in(tokenize(text));
  ModelSemantics sem{model, *mf};
  ExpressionParser<ModelSemantics> p(in, sem);
  const Token start = in.peek();
  const MValue v = p.expr();
  if (!in.at_end()) fail_at(in.peek(), "unexpected " + TokenStream::describe(in.peek()));
  if (v.kind == MValue::Kind::scalar && v.scalar.is_zero()) return GVector::zero(mf->chart);
  if (v.kind != MValue::Kind::section) fail_at(start, std::string("expected a section, found a ") + v.describe());
  return v.section;
}

}  // namespace gg
