#include "unfolder/document.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "unfolder/error.hpp"

namespace unfolder {

using json = nlohmann::json;

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string label_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(where, "vertex labels must be strings or integers");
}

int int_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  auto x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) fail(where, "integer out of range");
  return static_cast<int>(x);
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail("/", std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<std::vector<std::string>> read_facets(const json& doc) {
  const json& facets = field(doc, "facets");
  if (!facets.is_array()) fail("/facets", "expected an array");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::string where = "/facets/" + std::to_string(i);
    if (!facets[i].is_array()) fail(where, "expected an array of vertex labels");
    std::vector<std::string> f;
    for (std::size_t j = 0; j < facets[i].size(); ++j)
      f.push_back(label_of(facets[i][j], where + "/" + std::to_string(j)));
    out.push_back(std::move(f));
  }
  return out;
}

int read_dim(const json& doc, const std::vector<std::vector<std::string>>& facets) {
  if (doc.contains("dim")) return int_of(doc["dim"], "/dim");
  if (facets.empty()) fail("/", "an empty facet list needs \"dim\"");
  return static_cast<int>(facets.front().size()) - 1;
}

void check_facet_shape(int dim, const std::vector<std::vector<std::string>>& facets) {
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (static_cast<int>(facets[i].size()) != dim + 1)
      throw Error(ErrorCode::MixedDimension, "facet " + std::to_string(i) + " has " +
                                                 std::to_string(facets[i].size()) + " vertices, expected " +
                                                 std::to_string(dim + 1));
    std::set<std::string> seen(facets[i].begin(), facets[i].end());
    if (seen.size() != facets[i].size())
      throw Error(ErrorCode::DegenerateFacet, "facet " + std::to_string(i) + " repeats a vertex");
  }
}

AbstractComplex parse_abstract(const json& doc) {
  auto facets = read_facets(doc);
  int dim = read_dim(doc, facets);
  if (dim < -1 || dim > kMaxDim) fail("/dim", "dimension out of range");
  check_facet_shape(dim, facets);

  std::vector<std::string> order;
  if (doc.contains("vertices")) {
    const json& vs = doc["vertices"];
    if (!vs.is_array()) fail("/vertices", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) order.push_back(label_of(vs[i], "/vertices/" + std::to_string(i)));
    if (std::set<std::string>(order.begin(), order.end()).size() != order.size())
      fail("/vertices", "duplicate vertex label");
  } else {
    std::set<std::string> all;
    for (const auto& f : facets) all.insert(f.begin(), f.end());
    order.assign(all.begin(), all.end());
    std::sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  }
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<int>(i);

  std::vector<VertexSet> ids;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    VertexSet f;
    for (const auto& l : facets[i]) {
      auto it = id.find(l);
      if (it == id.end()) fail("/facets/" + std::to_string(i), "label \"" + l + "\" missing from \"vertices\"");
      f.push_back(it->second);
    }
    ids.push_back(std::move(f));
  }
  AbstractComplex k(dim, std::move(ids));
  std::map<int, std::string> labels;
  for (std::size_t i = 0; i < order.size(); ++i) labels[static_cast<int>(i)] = order[i];
  k.set_vertex_labels(std::move(labels));
  return k;
}

PseudoComplex parse_pseudo(const json& doc, std::vector<int>& projection) {
  auto facets = read_facets(doc);
  int dim = read_dim(doc, facets);
  if (dim < 0 || dim > kMaxDim) fail("/dim", "dimension out of range");
  check_facet_shape(dim, facets);
  int n = static_cast<int>(facets.size());

  std::vector<Gluing> gluings;
  if (doc.contains("gluings")) {
    const json& gs = doc["gluings"];
    if (!gs.is_array()) fail("/gluings", "expected an array");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      std::string where = "/gluings/" + std::to_string(i);
      const json& g = gs[i];
      if (!g.is_object() || !g.contains("facets") || !g.contains("locals"))
        fail(where, "expected {\"facets\": [a, b], \"locals\": [[...], [...]]}");
      const json& fs = g["facets"];
      const json& ls = g["locals"];
      if (!fs.is_array() || fs.size() != 2 || !ls.is_array() || ls.size() != 2 || !ls[0].is_array() ||
          !ls[1].is_array())
        fail(where, "expected two facets and two local lists");
      Gluing out;
      out.facet_a = int_of(fs[0], where + "/facets/0");
      out.facet_b = int_of(fs[1], where + "/facets/1");
      if (out.facet_a < 0 || out.facet_a >= n || out.facet_b < 0 || out.facet_b >= n)
        fail(where, "facet index out of range");
      for (std::size_t s = 0; s < 2; ++s) {
        auto& dst = s == 0 ? out.a_locals : out.b_locals;
        for (std::size_t j = 0; j < ls[s].size(); ++j)
          dst.push_back(int_of(ls[s][j], where + "/locals/" + std::to_string(s) + "/" + std::to_string(j)));
      }
      gluings.push_back(std::move(out));
    }
  }
  PseudoComplex p(dim, n, std::move(gluings));

  std::vector<std::string> names(idx(static_cast<int>(p.faces().count(0))));
  for (int f = 0; f < n; ++f) {
    for (int l = 0; l <= dim; ++l) {
      auto& name = names[idx(p.faces().vertex_class(f, l))];
      const auto& given = facets[idx(f)][idx(l)];
      if (name.empty()) {
        name = given;
      } else if (name != given) {
        fail("/facets/" + std::to_string(f) + "/" + std::to_string(l),
             "label \"" + given + "\" disagrees with \"" + name + "\" on the same glued vertex");
      }
    }
  }
  p.set_vertex_names(std::move(names));

  if (doc.contains("projection")) {
    const json& pr = doc["projection"];
    if (!pr.is_array() || static_cast<int>(pr.size()) != n) fail("/projection", "expected one base facet per facet");
    for (std::size_t i = 0; i < pr.size(); ++i) projection.push_back(int_of(pr[i], "/projection/" + std::to_string(i)));
  }
  return p;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void emit_facets(std::ostringstream& out, const std::vector<std::vector<std::string>>& facets) {
  out << "  \"facets\": [";
  for (std::size_t i = 0; i < facets.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < facets[i].size(); ++j) out << (j ? ", " : "") << quoted(facets[i][j]);
    out << "]";
  }
  out << (facets.empty() ? "]" : "\n  ]");
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      auto x = a.substr(i, ie - i);
      auto y = b.substr(j, je - j);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

PseudoComplex Document::pseudo() const {
  if (is_pseudo()) return std::get<PseudoComplex>(complex);
  return as_pseudo(std::get<AbstractComplex>(complex));
}

Document parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto colon = msg.find("syntax error");
    throw Error(ErrorCode::ParseError, position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                                           (colon == std::string::npos ? msg : msg.substr(colon)));
  }
  if (!doc.is_object()) fail("/", "expected a JSON object");
  if (doc.contains("format_version") && int_of(doc["format_version"], "/format_version") != 1)
    fail("/format_version", "unsupported format version");
  std::string kind = "abstract";
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) fail("/kind", "expected \"abstract\" or \"pseudo\"");
    kind = doc["kind"].get<std::string>();
  }
  Document out;
  if (kind == "abstract") {
    out.complex = parse_abstract(doc);
  } else if (kind == "pseudo") {
    out.complex = parse_pseudo(doc, out.projection);
  } else {
    fail("/kind", "expected \"abstract\" or \"pseudo\"");
  }
  return out;
}

std::string emit(const AbstractComplex& k) {
  auto vertices = k.vertices();
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : k.facets()) {
    std::vector<std::string> labels;
    for (int v : f) labels.push_back(k.label(v));
    facets.push_back(std::move(labels));
  }
  std::ostringstream out;
  out << "{\n  \"format_version\": 1,\n  \"dim\": " << k.dim() << ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < vertices.size(); ++i) out << (i ? ", " : "") << quoted(k.label(vertices[i]));
  out << "],\n";
  emit_facets(out, facets);
  out << "\n}\n";
  return out.str();
}

std::string emit(const PseudoComplex& p, const std::vector<int>& projection) {
  const auto& fc = p.faces();
  int classes = static_cast<int>(fc.count(0));
  std::vector<std::string> names(idx(classes));
  for (int c = 0; c < classes; ++c) {
    names[idx(c)] = idx(c) < p.vertex_names().size() && !p.vertex_names()[idx(c)].empty()
                        ? p.vertex_names()[idx(c)]
                        : "v" + std::to_string(c);
  }
  std::vector<std::vector<std::string>> facets;
  for (int f = 0; f < p.facet_count(); ++f) {
    std::vector<std::string> labels;
    for (int l = 0; l <= p.dim(); ++l) labels.push_back(names[idx(fc.vertex_class(f, l))]);
    facets.push_back(std::move(labels));
  }
  std::ostringstream out;
  out << "{\n  \"format_version\": 1,\n  \"kind\": \"pseudo\",\n  \"dim\": " << p.dim() << ",\n";
  emit_facets(out, facets);
  out << ",\n  \"gluings\": [";
  const auto& gs = p.gluings();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto& g = gs[i];
    out << (i ? ",\n    " : "\n    ") << "{\"facets\": [" << g.facet_a << ", " << g.facet_b << "], \"locals\": [[";
    for (std::size_t j = 0; j < g.a_locals.size(); ++j) out << (j ? ", " : "") << g.a_locals[j];
    out << "], [";
    for (std::size_t j = 0; j < g.b_locals.size(); ++j) out << (j ? ", " : "") << g.b_locals[j];
    out << "]]}";
  }
  out << (gs.empty() ? "]" : "\n  ]");
  out << ",\n  \"vertex_classes\": [";
  for (int c = 0; c < classes; ++c) out << (c ? ", " : "") << quoted(names[idx(c)]);
  out << "]";
  if (!projection.empty()) {
    out << ",\n  \"projection\": [";
    for (std::size_t i = 0; i < projection.size(); ++i) out << (i ? ", " : "") << projection[i];
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

std::string emit(const Document& doc) {
  if (doc.is_pseudo()) return emit(std::get<PseudoComplex>(doc.complex), doc.projection);
  return emit(std::get<AbstractComplex>(doc.complex));
}

}  // namespace unfolder
