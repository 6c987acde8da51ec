#include "isograph/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "isograph/linalg.hpp"

namespace isograph {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object())
    fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(where, "missing field \"" + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number())
    fail(where, "expected a number");
  return j.get<double>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    fail(where, "expected an integer");
  return j.get<int>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string())
    fail(where, "expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array())
    fail(where, "expected an array");
  return j;
}

std::string at(const std::string& where, size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& where, const std::string& key) { return where + "." + key; }

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number())
    return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(where, "expected a number or an [re, im] pair");
}

int element_by_name(const FiniteGroup& g, const std::string& name, const std::string& where) {
  std::optional<int> x = g.find(name);
  if (!x)
    fail(where, "unknown group element '" + name + "'");
  return *x;
}

int edge_by_id(const MetricGraph& g, const std::string& id, const std::string& where) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[e].id == id)
      return e;
  fail(where, "unknown edge '" + id + "'");
}

int vertex_by_id(const MetricGraph& g, const std::string& id, const std::string& where) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.vertices[v].id == id)
      return v;
  fail(where, "unknown vertex '" + id + "'");
}

Json names_of(const FiniteGroup& g, const std::vector<int>& elements) {
  Json out = Json::array();
  for (int x : elements)
    out.push_back(g.name(x));
  return out;
}

std::vector<int> elements_from_json(const FiniteGroup& g, const Json& j, const std::string& where) {
  std::vector<int> out;
  for (size_t i = 0; i < array(j, where).size(); ++i)
    out.push_back(element_by_name(g, text(j[i], at(where, i)), at(where, i)));
  return out;
}

// Elements added in index order whenever they fall outside the subgroup
// generated so far.
std::vector<int> generating_set(const GroupPtr& g) {
  std::vector<int> gens;
  Subgroup s = trivial_subgroup(g);
  for (int x = 0; x < g->order(); ++x)
    if (!s.contains(x)) {
      gens.push_back(x);
      s = subgroup_generated(g, gens);
    }
  return gens;
}

bool exactly(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

CosetDecomposition cosets_with(const Subgroup& h, const std::vector<int>& reps, const std::string& where) {
  const FiniteGroup& g = *h.parent;
  CosetDecomposition c{h, reps, CosetDecomposition::Side::left, std::vector<int>(g.order(), -1)};
  for (int i = 0; i < c.index(); ++i)
    for (int x : h.elements) {
      int y = g.mul(reps[i], x);
      if (c.coset_of[y] >= 0)
        fail(where, "coset representatives share a coset");
      c.coset_of[y] = i;
    }
  for (int y : c.coset_of)
    if (y < 0)
      fail(where, "coset representatives do not cover the group");
  return c;
}

}  // namespace

Json parse_json(const std::string& content, const std::string& origin) {
  try {
    return Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << content;
  if (!out)
    throw InputError("failed writing " + path);
}

void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

CMatrix matrix_from_json(const Json& j, const std::string& where) {
  array(j, where);
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = 0;
  for (size_t r = 0; r < j.size(); ++r) {
    array(j[r], at(where, r));
    if (r == 0)
      cols = static_cast<Eigen::Index>(j[r].size());
    else if (static_cast<Eigen::Index>(j[r].size()) != cols)
      fail(at(where, r), "rows have different lengths");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c], at(at(where, r), c));
  return m;
}

Json matrix_to_json(const CMatrix& m, bool pairs) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (pairs || m(r, c).imag() != 0.0)
        row.push_back(complex_to_json(m(r, c)));
      else
        row.push_back(m(r, c).real());
    }
    out.push_back(row);
  }
  return out;
}

GroupPtr group_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return builtin_group(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  const int n = integer(field(j, "order", where), dot(where, "order"));
  if (n <= 0)
    fail(dot(where, "order"), "must be positive");
  const Json& rows = array(field(j, "table", where), dot(where, "table"));
  if (static_cast<int>(rows.size()) != n)
    fail(dot(where, "table"), "expected " + std::to_string(n) + " rows");
  std::vector<int> table;
  for (int a = 0; a < n; ++a) {
    const std::string w = at(dot(where, "table"), a);
    if (static_cast<int>(array(rows[a], w).size()) != n)
      fail(w, "expected " + std::to_string(n) + " entries");
    for (int b = 0; b < n; ++b)
      table.push_back(integer(rows[a][b], at(w, b)));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& nj = array(j["names"], dot(where, "names"));
    for (size_t i = 0; i < nj.size(); ++i)
      names.push_back(text(nj[i], at(dot(where, "names"), i)));
  }
  try {
    return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(names));
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b)
      row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  return {{"order", g.order()}, {"table", table}, {"names", g.names()}};
}

Json group_reference(const GroupPtr& g) {
  const int n = g->order();
  std::vector<std::string> ids = {"D4", "S3", "S4", "D4xD4", "Zn:" + std::to_string(n)};
  if (n % 2 == 0)
    ids.push_back("Dn:" + std::to_string(n / 2));
  for (const std::string& id : ids) {
    GroupPtr b;
    try {
      b = builtin_group(id);
    } catch (const InputError&) {
      continue;
    }
    if (b->order() == n && b->same_table(*g) && b->names() == g->names())
      return id;
  }
  return group_to_json(*g);
}

MetricGraph graph_from_json(const Json& j) {
  if (j.is_object() && !j.contains("edges") && j.contains("graph") && j.contains("provenance"))
    return graph_from_json(j["graph"]);
  const Json& ej = array(field(j, "edges", "graph"), "edges");
  const Json& vj = array(field(j, "vertices", "graph"), "vertices");
  MetricGraph g;
  std::map<std::string, int> vid;
  for (size_t v = 0; v < vj.size(); ++v) {
    std::string id = text(field(vj[v], "id", at("vertices", v)), dot(at("vertices", v), "id"));
    if (!vid.emplace(id, static_cast<int>(v)).second)
      fail(at("vertices", v), "duplicate vertex id '" + id + "'");
    g.vertices.push_back(Vertex{id, {}, {}, {}});
  }
  std::set<std::string> eid;
  for (size_t e = 0; e < ej.size(); ++e) {
    const std::string w = at("edges", e);
    Edge edge;
    edge.id = text(field(ej[e], "id", w), dot(w, "id"));
    if (!eid.insert(edge.id).second)
      fail(w, "duplicate edge id '" + edge.id + "'");
    for (const char* end : {"tail", "head"}) {
      std::string name = text(field(ej[e], end, w), dot(w, end));
      auto it = vid.find(name);
      if (it == vid.end())
        fail(dot(w, end), "unknown vertex '" + name + "'");
      (std::string(end) == "tail" ? edge.tail : edge.head) = it->second;
    }
    edge.length = number(field(ej[e], "length", w), dot(w, "length"));
    g.edges.push_back(edge);
  }
  for (size_t v = 0; v < vj.size(); ++v) {
    const std::string w = at("vertices", v);
    Vertex& vx = g.vertices[v];
    if (vj[v].contains("ends")) {
      const Json& ends = array(vj[v]["ends"], dot(w, "ends"));
      for (size_t i = 0; i < ends.size(); ++i) {
        const std::string we = at(dot(w, "ends"), i);
        if (!ends[i].is_array() || ends[i].size() != 2)
          fail(we, "expected [edgeId, \"tail\"|\"head\"]");
        int e = edge_by_id(g, text(ends[i][0], we), we);
        std::string side = text(ends[i][1], we);
        if (side != "tail" && side != "head")
          fail(we, "side must be \"tail\" or \"head\"");
        vx.ends.push_back({e, side == "tail" ? Side::tail : Side::head});
      }
    } else {
      for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e].tail == static_cast<int>(v))
          vx.ends.push_back({e, Side::tail});
        if (g.edges[e].head == static_cast<int>(v))
          vx.ends.push_back({e, Side::head});
      }
    }
    const int d = vx.degree();
    std::string bc = vj[v].contains("bc") ? text(vj[v]["bc"], dot(w, "bc"))
                                          : (vj[v].contains("A") ? "explicit" : "neumann");
    VertexCondition c;
    if (bc == "neumann") {
      c = neumann_condition(d);
    } else if (bc == "dirichlet") {
      if (d != 1)
        fail(dot(w, "bc"), "Dirichlet is only available at degree-one vertices; give A and B explicitly");
      c = dirichlet_condition(1);
    } else if (bc == "explicit") {
      c.A = matrix_from_json(field(vj[v], "A", w), dot(w, "A"));
      c.B = matrix_from_json(field(vj[v], "B", w), dot(w, "B"));
      for (const auto& [name, m] : {std::pair<const char*, const CMatrix&>{"A", c.A}, {"B", c.B}})
        if (m.rows() != d || m.cols() != d)
          fail(dot(w, name), "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    } else {
      fail(dot(w, "bc"), "unknown condition '" + bc + "'");
    }
    vx.A = c.A;
    vx.B = c.B;
  }
  ValidationReport r = validate(g);
  if (!r.ok)
    throw InputError("graph: " + r.problems.front());
  return g;
}

Json graph_to_json(const MetricGraph& g) {
  Json edges = Json::array(), vertices = Json::array();
  for (const Edge& e : g.edges)
    edges.push_back({{"id", e.id}, {"tail", g.vertices[e.tail].id}, {"head", g.vertices[e.head].id},
                     {"length", e.length}});
  for (const Vertex& v : g.vertices) {
    Json ends = Json::array();
    for (const EdgeEnd& end : v.ends)
      ends.push_back({g.edges[end.edge].id, side_name(end.side)});
    Json vx = {{"id", v.id}, {"ends", ends}};
    const int d = v.degree();
    VertexCondition n = neumann_condition(d);
    if (exactly(v.A, n.A) && exactly(v.B, n.B)) {
      vx["bc"] = "neumann";
    } else if (d == 1 && exactly(v.A, dirichlet_condition(1).A) && exactly(v.B, dirichlet_condition(1).B)) {
      vx["bc"] = "dirichlet";
    } else {
      vx["bc"] = "explicit";
      vx["A"] = matrix_to_json(v.A, false);
      vx["B"] = matrix_to_json(v.B, false);
    }
    vertices.push_back(vx);
  }
  return {{"edges", edges}, {"vertices", vertices}};
}

GraphAction action_from_json(const Json& j, const MetricGraph& g) {
  GroupPtr group = group_from_json(field(j, "group", "action"), "group");
  const Json& gens = field(j, "generators", "action");
  if (!gens.is_object())
    fail("generators", "expected an object keyed by element name");
  std::vector<int> elements;
  std::vector<std::vector<int>> vimg;
  std::vector<std::vector<EdgeImage>> eimg;
  for (const auto& [name, data] : gens.items()) {
    const std::string w = dot("generators", name);
    elements.push_back(element_by_name(*group, name, w));
    std::vector<int> vi(g.vertex_count(), -1);
    std::vector<EdgeImage> ei(g.edge_count(), EdgeImage{-1, 1});
    const Json& vj = field(data, "vertices", w);
    for (const auto& [vid, img] : vj.items())
      vi[vertex_by_id(g, vid, dot(w, "vertices"))] =
          vertex_by_id(g, text(img, dot(dot(w, "vertices"), vid)), dot(dot(w, "vertices"), vid));
    const Json& ej = field(data, "edges", w);
    for (const auto& [eid, img] : ej.items()) {
      const std::string we = dot(dot(w, "edges"), eid);
      EdgeImage im;
      im.edge = edge_by_id(g, text(field(img, "image", we), dot(we, "image")), dot(we, "image"));
      im.sign = img.contains("sign") ? integer(img["sign"], dot(we, "sign")) : 1;
      if (im.sign != 1 && im.sign != -1)
        fail(dot(we, "sign"), "must be +1 or -1");
      ei[edge_by_id(g, eid, dot(w, "edges"))] = im;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      if (vi[v] < 0)
        fail(dot(w, "vertices"), "missing image of vertex '" + g.vertices[v].id + "'");
    for (int e = 0; e < g.edge_count(); ++e)
      if (ei[e].edge < 0)
        fail(dot(w, "edges"), "missing image of edge '" + g.edges[e].id + "'");
    vimg.push_back(vi);
    eimg.push_back(ei);
  }
  if (elements.empty())
    return trivial_action(g, group);
  GraphAction a = action_from_generators(g, group, elements, vimg, eimg);
  ValidationReport r = validate_action(g, a);
  if (!r.ok)
    throw InputError("action: " + r.problems.front());
  return a;
}

Json action_to_json(const GraphAction& a, const MetricGraph& g) {
  Json gens = Json::object();
  for (int x : generating_set(a.group)) {
    Json vj = Json::object(), ej = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
      vj[g.vertices[v].id] = g.vertices[a.vertex_image(x, v)].id;
    for (int e = 0; e < g.edge_count(); ++e) {
      const EdgeImage& im = a.edge_image(x, e);
      ej[g.edges[e].id] = {{"image", g.edges[im.edge].id}, {"sign", im.sign}};
    }
    gens[a.group->name(x)] = {{"vertices", vj}, {"edges", ej}};
  }
  return {{"group", group_reference(a.group)}, {"generators", gens}};
}

MatrixRep rep_from_json(const Json& j, const GroupPtr& group) {
  GroupPtr g = group_from_json(field(j, "group", "rep"), "group");
  if (group) {
    if (!same_group(g, group))
      fail("group", "does not match the group of the action");
    g = group;
  }
  const Json& mj = field(j, "matrices", "rep");
  if (!mj.is_object() || mj.empty())
    fail("matrices", "expected a non-empty object keyed by element name");
  std::vector<int> listed;
  std::vector<CMatrix> mats;
  for (const auto& [name, m] : mj.items()) {
    listed.push_back(element_by_name(*g, name, "matrices"));
    mats.push_back(matrix_from_json(m, dot("matrices", name)));
  }
  const int dim = j.contains("dim") ? integer(j["dim"], "dim") : static_cast<int>(mats.front().rows());
  for (size_t i = 0; i < mats.size(); ++i)
    if (mats[i].rows() != dim || mats[i].cols() != dim)
      fail(dot("matrices", g->name(listed[i])), "expected a " + std::to_string(dim) + "x" +
                                                    std::to_string(dim) + " matrix");
  std::string label = j.contains("basis_label") ? text(j["basis_label"], "basis_label") : "";
  Subgroup gen = subgroup_generated(g, listed);
  try {
    if (gen.order() == static_cast<int>(listed.size())) {
      std::vector<CMatrix> full(g->order());
      for (size_t i = 0; i < listed.size(); ++i)
        full[listed[i]] = mats[i];
      return MatrixRep(gen, full, label);
    }
    return rep_from_generators(gen, listed, mats, label);
  } catch (const InputError& e) {
    fail("matrices", e.what());
  }
}

Json rep_to_json(const MatrixRep& rep) {
  Json mats = Json::object();
  for (int x : rep.domain().elements)
    mats[rep.group()->name(x)] = matrix_to_json(rep(x), true);
  return {{"group", group_reference(rep.group())}, {"dim", rep.dim()}, {"matrices", mats},
          {"basis_label", rep.basis_label()}};
}

std::string spectrum_to_csv(const Spectrum& s) {
  auto fmt = [](double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
  };
  std::string out = "k,multiplicity\n# k_max=" + fmt(s.k_max) + "\n";
  for (const SpectrumEntry& e : s.entries)
    out += fmt(e.k) + "," + std::to_string(e.multiplicity) + "\n";
  return out;
}

Spectrum spectrum_from_csv(const std::string& content, const std::string& origin) {
  Spectrum s;
  s.k_max = std::numeric_limits<double>::infinity();
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  bool header = false;
  auto parse_double = [&](std::string_view t, double& x) {
    auto res = std::from_chars(t.data(), t.data() + t.size(), x);
    return res.ec == std::errc() && res.ptr == t.data() + t.size();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const std::string where = origin + ":" + std::to_string(lineno);
    if (line.empty())
      continue;
    if (line[0] == '#') {
      const std::string key = "# k_max=";
      if (line.rfind(key, 0) == 0 && !parse_double(std::string_view(line).substr(key.size()), s.k_max))
        throw InputError(where + ": malformed k_max comment");
      continue;
    }
    if (!header) {
      if (line != "k,multiplicity")
        throw InputError(where + ": expected the header \"k,multiplicity\"");
      header = true;
      continue;
    }
    size_t comma = line.find(',');
    double k = 0.0, m = 0.0;
    if (comma == std::string::npos || !parse_double(std::string_view(line).substr(0, comma), k) ||
        !parse_double(std::string_view(line).substr(comma + 1), m) || m < 1 || m != static_cast<int>(m))
      throw InputError(where + ": expected \"k,multiplicity\" with a positive integer multiplicity");
    if (!s.entries.empty() && SpectrumEntry{k, 1}.lambda() < s.entries.back().lambda())
      throw InputError(where + ": entries must be sorted by eigenvalue");
    s.entries.push_back({k, static_cast<int>(m)});
  }
  if (!header)
    throw InputError(origin + ": empty spectrum file");
  if (!std::isfinite(s.k_max))
    s.k_max = s.entries.empty() ? 0.0 : std::abs(s.entries.back().k);
  return s;
}

Json quotient_to_json(const QuotientGraph& q, const CosetDecomposition* induced_from) {
  const MetricGraph& p = q.parent;
  Json orbits = Json::array();
  for (size_t i = 0; i < q.orbits.edge_reps.size(); ++i)
    orbits.push_back({{"representative", p.edges[q.orbits.edge_reps[i]].id},
                      {"basis", matrix_to_json(q.edge_bases[i])},
                      {"d", q.d[i]}});
  Json vreps = Json::array();
  for (int v : q.orbits.vertex_reps)
    vreps.push_back(p.vertices[v].id);
  Json edges = Json::array();
  for (size_t e = 0; e < q.edges.size(); ++e)
    edges.push_back({{"id", q.graph.edges[e].id},
                     {"orbit", q.edges[e].orbit},
                     {"parent_edge", p.edges[q.edges[e].parent_edge].id},
                     {"basis_index", q.edges[e].basis_index + 1}});
  Json prov = {{"parent", graph_to_json(p)},
               {"action", action_to_json(q.action, p)},
               {"rep", rep_to_json(q.rep)},
               {"global_basis", matrix_to_json(q.global_basis)},
               {"edge_orbits", orbits},
               {"vertex_representatives", vreps},
               {"edges", edges}};
  if (induced_from) {
    const FiniteGroup& g = *induced_from->subgroup.parent;
    prov["induced_from"] = {{"subgroup", names_of(g, induced_from->subgroup.elements)},
                            {"coset_representatives", names_of(g, induced_from->representatives)}};
  }
  return {{"graph", graph_to_json(q.graph)}, {"provenance", prov}};
}

QuotientRecord quotient_from_json(const Json& j) {
  const Json& prov = field(j, "provenance", "quotient");
  QuotientSpec spec{graph_from_json(field(prov, "parent", "provenance")), {}, trivial_rep(trivial_subgroup(make_cyclic(1))),
                    {}, {}, {}, {}};
  spec.action = action_from_json(field(prov, "action", "provenance"), spec.graph);
  spec.rep = rep_from_json(field(prov, "rep", "provenance"), spec.action.group);
  spec.global_basis = matrix_from_json(field(prov, "global_basis", "provenance"), "provenance.global_basis");
  const Json& orbits = array(field(prov, "edge_orbits", "provenance"), "provenance.edge_orbits");
  for (size_t i = 0; i < orbits.size(); ++i) {
    const std::string w = at("provenance.edge_orbits", i);
    spec.edge_reps.push_back(
        edge_by_id(spec.graph, text(field(orbits[i], "representative", w), dot(w, "representative")), w));
    spec.edge_bases.push_back(matrix_from_json(field(orbits[i], "basis", w), dot(w, "basis")));
  }
  const Json& vreps = array(field(prov, "vertex_representatives", "provenance"), "provenance.vertex_representatives");
  for (size_t i = 0; i < vreps.size(); ++i) {
    const std::string w = at("provenance.vertex_representatives", i);
    spec.vertex_reps.push_back(vertex_by_id(spec.graph, text(vreps[i], w), w));
  }
  QuotientRecord rec{spec, build_quotient(spec), std::nullopt};
  rec.spec = spec_of(rec.quotient);

  MetricGraph stored = graph_from_json(field(j, "graph", "quotient"));
  const MetricGraph& built = rec.quotient.graph;
  bool same = stored.edge_count() == built.edge_count() && stored.vertex_count() == built.vertex_count();
  for (int e = 0; same && e < built.edge_count(); ++e)
    same = stored.edges[e].id == built.edges[e].id && std::abs(stored.edges[e].length - built.edges[e].length) <= 1e-12;
  for (int v = 0; same && v < built.vertex_count(); ++v) {
    const Vertex &a = stored.vertices[v], &b = built.vertices[v];
    same = a.id == b.id && a.ends == b.ends &&
           (a.degree() == 0 || solution_space_distance(a.A, a.B, b.A, b.B) < 1e-8);
  }
  if (!same)
    throw InputError("quotient: the stored graph does not match the one rebuilt from its provenance");

  if (prov.contains("induced_from")) {
    const Json& ind = prov["induced_from"];
    const FiniteGroup& g = *spec.action.group;
    std::vector<int> h = elements_from_json(g, field(ind, "subgroup", "provenance.induced_from"),
                                            "provenance.induced_from.subgroup");
    std::vector<int> reps = elements_from_json(g, field(ind, "coset_representatives", "provenance.induced_from"),
                                               "provenance.induced_from.coset_representatives");
    Subgroup sub;
    try {
      sub = make_subgroup(spec.action.group, h);
    } catch (const InputError& e) {
      fail("provenance.induced_from.subgroup", e.what());
    }
    rec.induced_from = cosets_with(sub, reps, "provenance.induced_from.coset_representatives");
  }
  return rec;
}

Json transplant_to_json(const TransplantMap& m) {
  Json terms = Json::array();
  for (int s = 0; s < m.source.edge_count(); ++s)
    for (const TransplantMap::Term& t : m.terms(s))
      terms.push_back({{"source", m.source.edges[s].id},
                       {"target", m.target.edges[t.target_edge].id},
                       {"coefficient", complex_to_json(t.coefficient)},
                       {"reversed", t.reversed}});
  return {{"kind", m.kind},
          {"provenance", m.provenance},
          {"source", graph_to_json(m.source)},
          {"target", graph_to_json(m.target)},
          {"terms", terms}};
}

TransplantMap transplant_from_json(const Json& j) {
  TransplantMap m;
  m.source = graph_from_json(field(j, "source", "transplant"));
  m.target = graph_from_json(field(j, "target", "transplant"));
  m.kind = j.contains("kind") ? text(j["kind"], "kind") : "";
  if (j.contains("provenance"))
    for (size_t i = 0; i < array(j["provenance"], "provenance").size(); ++i)
      m.provenance.push_back(text(j["provenance"][i], at("provenance", i)));
  m.direct = CMatrix::Zero(m.target.edge_count(), m.source.edge_count());
  m.reversed = m.direct;
  const Json& terms = array(field(j, "terms", "transplant"), "terms");
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string w = at("terms", i);
    int s = edge_by_id(m.source, text(field(terms[i], "source", w), dot(w, "source")), dot(w, "source"));
    int t = edge_by_id(m.target, text(field(terms[i], "target", w), dot(w, "target")), dot(w, "target"));
    cplx c = complex_from_json(field(terms[i], "coefficient", w), dot(w, "coefficient"));
    bool rev = terms[i].contains("reversed") && terms[i]["reversed"].is_boolean() && terms[i]["reversed"].get<bool>();
    if (std::abs(m.source.edges[s].length - m.target.edges[t].length) > 1e-9 * m.source.edges[s].length)
      fail(w, "joins edges of different lengths");
    (rev ? m.reversed : m.direct)(t, s) += c;
  }
  return m;
}

Json transplant_report_to_json(const TransplantReport& r) {
  Json ev = Json::array();
  for (const TransplantCheck& c : r.eigenvalues)
    ev.push_back({{"k", c.k},
                  {"multiplicity", c.multiplicity},
                  {"max_residual", c.max_residual},
                  {"gram_det", c.gram_det},
                  {"target_has_k", c.target_has_k},
                  {"ok", c.ok}});
  return {{"ok", r.ok}, {"checked", r.checked}, {"eigenvalues", ev}, {"problems", r.problems}};
}

void apply_basis_file(QuotientSpec& spec, const Json& j) {
  if (j.contains("global")) {
    spec.global_basis = matrix_from_json(j["global"], "global");
    const int d = spec.rep.dim();
    if (spec.global_basis.rows() != d || spec.global_basis.cols() != d)
      fail("global", "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  }
  if (!j.contains("edges"))
    return;
  const Json& ej = j["edges"];
  if (!ej.is_object())
    fail("edges", "expected an object keyed by edge id");
  OrbitData od = orbits(spec.graph, spec.action, spec.rep.domain());
  std::vector<CMatrix> bases(od.edge_orbits.size());
  for (const auto& [id, m] : ej.items()) {
    int e = edge_by_id(spec.graph, id, "edges");
    bases[od.edge_orbit_of[e]] = matrix_from_json(m, dot("edges", id));
  }
  for (size_t i = 0; i < bases.size(); ++i)
    if (bases[i].size() == 0)
      fail("edges", "missing basis for the orbit of edge '" + spec.graph.edges[od.edge_reps[i]].id + "'");
  spec.edge_bases = bases;
}

void apply_representatives_file(QuotientSpec& spec, const Json& j) {
  if (j.contains("edges")) {
    spec.edge_reps.clear();
    for (size_t i = 0; i < array(j["edges"], "edges").size(); ++i)
      spec.edge_reps.push_back(edge_by_id(spec.graph, text(j["edges"][i], at("edges", i)), at("edges", i)));
  }
  if (j.contains("vertices")) {
    spec.vertex_reps.clear();
    for (size_t i = 0; i < array(j["vertices"], "vertices").size(); ++i)
      spec.vertex_reps.push_back(
          vertex_by_id(spec.graph, text(j["vertices"][i], at("vertices", i)), at("vertices", i)));
  }
}

}  // namespace isograph
