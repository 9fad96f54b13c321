#include "hopfkit/document.hpp"

#include <json.hpp>
#include <set>

#include "builtin_data.hpp"
#include "checks.hpp"

namespace hopfkit {

using json = nlohmann::json;

namespace {

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ShapeError, path + ": " + what);
}

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

class Reader {
 public:
  explicit Reader(Field f) : f_(f) {}

  Scalar scalar(const json& j, const std::string& path) const {
    if (j.is_number_integer()) return f_.from_int(j.get<long>());
    if (j.is_string()) {
      try {
        return f_.parse(j.get<std::string>());
      } catch (const Error& e) {
        parse_error(path, e.what());
      }
    }
    parse_error(path, "expected a scalar (string or integer)");
  }

  const json& array(const json& j, std::size_t n, const std::string& path) const {
    if (!j.is_array()) shape_error(path, "expected an array");
    if (j.size() != n) shape_error(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    return j;
  }

  std::vector<Scalar> vec(const json& j, std::size_t n, const std::string& path) const {
    array(j, n, path);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  /* t[i][j][k] with the given extents. */
  std::vector<std::vector<std::vector<Scalar>>> tensor(const json& j, std::size_t a, std::size_t b, std::size_t c,
                                                       const std::string& path) const {
    array(j, a, path);
    std::vector<std::vector<std::vector<Scalar>>> out(a);
    for (std::size_t i = 0; i < a; ++i) {
      const std::string pi = path + "/" + std::to_string(i);
      array(j[i], b, pi);
      for (std::size_t k = 0; k < b; ++k) out[i].push_back(vec(j[i][k], c, pi + "/" + std::to_string(k)));
    }
    return out;
  }

  /* m[i][j] as the matrix whose column i has entries m[i][·]. */
  Matrix columns(const json& j, std::size_t cols, std::size_t rows, const std::string& path) const {
    auto t = tensor(json::array({j}), 1, cols, rows, path);
    Matrix out(f_, rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) out.set(r, c, t[0][c][r]);
    return out;
  }

  const Field& field() const { return f_; }

 private:
  Field f_;
};

std::size_t read_dim(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) shape_error(path, "missing \"" + key + "\"");
  const json& d = obj[key];
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) shape_error(path + "/" + key, "expected a positive integer");
  return d.get<std::size_t>();
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) shape_error(path, "missing \"" + key + "\"");
  return obj[key];
}

std::string ref(const json& obj, const std::string& key, const std::string& path) {
  const json& r = member(obj, key, path);
  if (!r.is_string()) parse_error(path + "/" + key, "expected an object name");
  return r.get<std::string>();
}

Field parse_field(const json& doc) {
  if (!doc.contains("field") || !doc["field"].is_string()) parse_error("/field", "missing field descriptor");
  std::string s = doc["field"].get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::string digits = s.substr(3, s.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18)
      parse_error("/field", "bad characteristic in " + s);
    try {
      return Field::prime(std::stoull(digits));
    } catch (const Error& e) {
      parse_error("/field", e.what());
    }
  }
  parse_error("/field", "unknown field \"" + s + "\" (expected Q or GF(p))");
}

const std::set<std::string> kTasks = {"check", "antipode", "galois", "fthm", "h1", "operators", "coring"};

class Builder {
 public:
  Builder(Document& doc) : doc_(doc), rd_(doc.field) {}

  void add(const json& obj, const std::string& path) {
    if (!obj.is_object()) parse_error(path, "expected an object");
    std::string name = ref(obj, "name", path);
    std::string type = ref(obj, "type", path);
    for (auto& o : doc_.objects)
      if (o.name == name) parse_error(path + "/name", "duplicate object name \"" + name + "\"");
    doc_.objects.push_back({name, type, build(obj, type, path)});
  }

 private:
  template <class T>
  const T& lookup(const std::string& name, const std::string& path) const {
    for (auto& o : doc_.objects)
      if (o.name == name) {
        if (auto p = std::get_if<T>(&o.value)) return *p;
        shape_error(path, "\"" + name + "\" has type " + o.type);
      }
    throw Error(ErrorKind::UnknownName, path + ": unknown object \"" + name + "\"");
  }

  Algebra algebra_ref(const std::string& name, const std::string& path) const {
    for (auto& o : doc_.objects)
      if (o.name == name) {
        if (auto a = std::get_if<Algebra>(&o.value)) return *a;
        if (auto b = std::get_if<Bialgebra>(&o.value)) return b->alg;
        shape_error(path, "\"" + name + "\" is not an algebra");
      }
    throw Error(ErrorKind::UnknownName, path + ": unknown object \"" + name + "\"");
  }

  Coalgebra coalgebra_ref(const std::string& name, const std::string& path) const {
    for (auto& o : doc_.objects)
      if (o.name == name) {
        if (auto c = std::get_if<Coalgebra>(&o.value)) return *c;
        if (auto b = std::get_if<Bialgebra>(&o.value)) return b->coalg;
        shape_error(path, "\"" + name + "\" is not a coalgebra");
      }
    throw Error(ErrorKind::UnknownName, path + ": unknown object \"" + name + "\"");
  }

  Algebra read_algebra(const json& obj, const std::string& path) const {
    std::size_t n = read_dim(obj, "dim", path);
    auto m = rd_.tensor(member(obj, "mult", path), n, n, n, path + "/mult");
    auto u = rd_.vec(member(obj, "unit", path), n, path + "/unit");
    return Algebra::from_tensor(rd_.field(), m, u);
  }

  Coalgebra read_coalgebra(const json& obj, const std::string& path) const {
    std::size_t n = read_dim(obj, "dim", path);
    auto d = rd_.tensor(member(obj, "comult", path), n, n, n, path + "/comult");
    auto e = rd_.vec(member(obj, "counit", path), n, path + "/counit");
    return Coalgebra::from_tensor(rd_.field(), d, e);
  }

  /* t[i][j][k] → matrix with entry (j*n3 + k, i) */
  Matrix stacked(const std::vector<std::vector<std::vector<Scalar>>>& t, std::size_t n2, std::size_t n3) const {
    Matrix out(rd_.field(), n2 * n3, t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t k = 0; k < n3; ++k) out.set(j * n3 + k, i, t[i][j][k]);
    return out;
  }

  /* action[a][m][m'] → m' ← a⊗m */
  Matrix action_matrix(const std::vector<std::vector<std::vector<Scalar>>>& t, std::size_t na, std::size_t n) const {
    Matrix out(rd_.field(), n, na * n);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) out.set(k, a * n + m, t[a][m][k]);
    return out;
  }

  std::vector<Matrix> matrices(const json& j, std::size_t count, std::size_t n, const std::string& path) const {
    auto t = rd_.tensor(j, count, n, n, path);
    std::vector<Matrix> out;
    for (std::size_t g = 0; g < count; ++g) {
      Matrix m(rd_.field(), n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m.set(b, a, t[g][a][b]);
      out.push_back(m);
    }
    return out;
  }

  ObjectValue build(const json& obj, const std::string& type, const std::string& path) const {
    const Field& f = rd_.field();
    if (type == "algebra") return read_algebra(obj, path);
    if (type == "coalgebra") return read_coalgebra(obj, path);
    if (type == "bialgebra") return Bialgebra{read_algebra(obj, path), read_coalgebra(obj, path)};
    if (type == "comodule-algebra") {
      Bialgebra h = lookup<Bialgebra>(ref(obj, "bialgebra", path), path + "/bialgebra");
      Algebra a = algebra_ref(ref(obj, "algebra", path), path + "/algebra");
      auto t = rd_.tensor(member(obj, "coaction", path), a.dim(), h.dim(), a.dim(), path + "/coaction");
      Matrix nu = stacked(t, h.dim(), a.dim());
      ComoduleAlgebraObject out;
      if (obj.contains("base")) {
        const json& b = obj["base"];
        if (!b.is_array() || b.empty()) shape_error(path + "/base", "expected a nonempty list of vectors");
        Matrix basis = rd_.columns(b, b.size(), a.dim(), path + "/base");
        out.ca = make_comodule_algebra(h, a, nu, subalgebra_from_basis(a, basis));
      } else {
        out.ca = make_comodule_algebra(h, a, nu);
      }
      if (obj.contains("free-basis")) {
        const json& b = obj["free-basis"];
        if (!b.is_array() || b.empty()) shape_error(path + "/free-basis", "expected a nonempty list of vectors");
        out.free_basis = rd_.columns(b, b.size(), a.dim(), path + "/free-basis");
      }
      return out;
    }
    if (type == "module-coalgebra") {
      Bialgebra h = lookup<Bialgebra>(ref(obj, "bialgebra", path), path + "/bialgebra");
      Coalgebra c = coalgebra_ref(ref(obj, "coalgebra", path), path + "/coalgebra");
      if (!obj.contains("action")) return free_module_coalgebra(h, c);
      auto t = rd_.tensor(obj["action"], h.dim(), c.dim(), c.dim(), path + "/action");
      Matrix act(f, c.dim(), h.dim() * c.dim());
      for (std::size_t x = 0; x < h.dim(); ++x)
        for (std::size_t z = 0; z < c.dim(); ++z)
          for (std::size_t k = 0; k < c.dim(); ++k) act.set(k, x * c.dim() + z, t[x][z][k]);
      return ModuleCoalgebra{h, c, act};
    }
    if (type == "module") {
      std::string an = ref(obj, "algebra", path);
      Algebra a = algebra_ref(an, path + "/algebra");
      std::size_t n = read_dim(obj, "dim", path);
      auto t = rd_.tensor(member(obj, "action", path), a.dim(), n, n, path + "/action");
      return ModuleObject{an, left_module(a, n, action_matrix(t, a.dim(), n))};
    }
    if (type == "hopf-module") {
      std::string cn = ref(obj, "comodule-algebra", path);
      const ComoduleAlgebra& ca = lookup<ComoduleAlgebraObject>(cn, path + "/comodule-algebra").ca;
      ModuleCoalgebra z = obj.contains("module-coalgebra")
                              ? lookup<ModuleCoalgebra>(ref(obj, "module-coalgebra", path), path + "/module-coalgebra")
                              : free_module_coalgebra(ca.H, trivial_coalgebra(f));
      std::size_t n = read_dim(obj, "dim", path);
      auto t = rd_.tensor(member(obj, "action", path), ca.A.dim(), n, n, path + "/action");
      auto c = rd_.tensor(member(obj, "coaction", path), n, z.Z.dim(), n, path + "/coaction");
      return HopfModuleObject{cn, {ca, z, n, action_matrix(t, ca.A.dim(), n), stacked(c, z.Z.dim(), n)}};
    }
    if (type == "group") {
      std::size_t n = read_dim(obj, "order", path);
      const json& t = rd_.array(member(obj, "table", path), n, path + "/table");
      GroupPresentation g;
      g.order = n;
      for (std::size_t i = 0; i < n; ++i) {
        const std::string pi = path + "/table/" + std::to_string(i);
        rd_.array(t[i], n, pi);
        std::vector<std::size_t> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (!t[i][j].is_number_unsigned() || t[i][j].get<std::size_t>() >= n)
            shape_error(pi + "/" + std::to_string(j), "expected an element index below the order");
          row.push_back(t[i][j].get<std::size_t>());
        }
        g.table.push_back(row);
      }
      for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
        if (ok) {
          g.identity = e;
          break;
        }
      }
      g.inverse.assign(n, 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (g.table[x][y] == g.identity) g.inverse[x] = y;
      return g;
    }
    if (type == "group-action") {
      GroupPresentation g = lookup<GroupPresentation>(ref(obj, "group", path), path + "/group");
      Algebra a = algebra_ref(ref(obj, "algebra", path), path + "/algebra");
      GroupActionObject out{{g, a, matrices(member(obj, "maps", path), g.order, a.dim(), path + "/maps")}, {}};
      if (obj.contains("pool")) {
        const json& p = obj["pool"];
        if (!p.is_array()) shape_error(path + "/pool", "expected a list of matrices");
        out.pool = matrices(p, p.size(), a.dim(), path + "/pool");
      }
      return out;
    }
    if (type == "cocycle") {
      std::string an = ref(obj, "action", path);
      const GroupAction& act = lookup<GroupActionObject>(an, path + "/action").action;
      SemilinearModule n = regular_semilinear(act);
      auto vals = matrices(member(obj, "values", path), act.G.order, act.A.dim(), path + "/values");
      return CocycleObject{an, {n, vals}};
    }
    parse_error(path + "/type", "unknown object type \"" + type + "\"");
  }

  Document& doc_;
  Reader rd_;
};

}  // namespace

const NamedObject& Document::find(const std::string& name) const {
  for (auto& o : objects)
    if (o.name == name) return o;
  throw Error(ErrorKind::UnknownName, "unknown object \"" + name + "\"");
}

Document parse_document(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": " + e.what());
  }
  if (!doc.is_object()) parse_error("/", "expected a JSON object");
  Document out;
  out.source = source;
  out.field = parse_field(doc);
  Builder b(out);
  if (!doc.contains("objects") || !doc["objects"].is_array()) parse_error("/objects", "missing object list");
  try {
    for (std::size_t i = 0; i < doc["objects"].size(); ++i) b.add(doc["objects"][i], "/objects/" + std::to_string(i));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, source + ": " + e.what());
  }
  if (doc.contains("tasks")) {
    const json& t = doc["tasks"];
    if (!t.is_object()) parse_error("/tasks", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      const std::string path = "/tasks/" + it.key();
      if (!kTasks.count(it.key())) parse_error(path, "unknown task");
      if (!it->is_array()) parse_error(path, "expected a list of object names");
      std::vector<std::string> names;
      for (auto& n : *it) {
        if (!n.is_string()) parse_error(path, "expected object names");
        out.find(n.get<std::string>());
        names.push_back(n.get<std::string>());
      }
      out.tasks[it.key()] = names;
    }
  }
  return out;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltinDocuments) out.emplace_back(b.name);
  return out;
}

const std::string& builtin_text(const std::string& name) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> m;
    for (const auto& b : kBuiltinDocuments) m.emplace(b.name, b.text);
    return m;
  }();
  auto it = texts.find(name);
  if (it == texts.end()) throw Error(ErrorKind::UnknownName, "unknown builtin \"" + name + "\"");
  return it->second;
}

Document load_builtin(const std::string& name) { return parse_document(builtin_text(name), "builtin:" + name); }

}  // namespace hopfkit
