// Command-line front end: catalog emission, spectra, quotients,
// comparisons, transplantation and the acceptance suite.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "isograph/acceptance.hpp"
#include "isograph/catalog.hpp"
#include "isograph/io.hpp"
#include "isograph/irreps.hpp"
#include "isograph/linalg.hpp"

using namespace isograph;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct ScanFlags {
  double k_max = 0.0;
  int oversample = 8;
  double tol_null = 1e-9;
  double resolution = 1e-6;
  bool negative = false;

  void add(CLI::App* app, bool need_kmax) {
    auto* k = app->add_option("--kmax", k_max, "Upper end of the scan in k")->check(CLI::PositiveNumber);
    if (need_kmax)
      k->required();
    app->add_option("--oversample", oversample, "Grid points per mean eigenvalue spacing")
        ->check(CLI::PositiveNumber);
    app->add_option("--tol-null", tol_null, "Relative singular value marking a null vector")
        ->check(CLI::PositiveNumber);
    app->add_option("--resolution", resolution, "Root resolution in k")->check(CLI::PositiveNumber);
    app->add_flag("--neg", negative, "Also scan negative eigenvalues");
  }
  SpectralOptions options() const {
    SpectralOptions o;
    o.oversample = oversample;
    o.tol_null = tol_null;
    o.resolution = resolution;
    o.negative = negative;
    return o;
  }
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_text_file(path, content);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_warnings(const Spectrum& s) {
  for (const std::string& w : s.warnings)
    std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

Subgroup subgroup_from_names(const GroupPtr& g, const std::string& list) {
  std::vector<int> elements;
  for (const std::string& n : split_names(list))
    elements.push_back(g->element(n));
  return subgroup_generated(g, elements);
}

std::string file_safe(const std::string& name) {
  std::string out;
  for (char ch : name)
    out += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return out;
}

// catalog ------------------------------------------------------------------

int catalog_list() {
  for (const std::string& id : catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    std::cout << id << ": " << e.graph.vertex_count() << " vertices, " << e.graph.edge_count()
              << " edges, group of order " << e.action.group->order() << "\n  reps:";
    for (const CatalogRep& r : e.reps)
      std::cout << " " << r.name;
    std::cout << "\n  subgroups:";
    for (const NamedSubgroup& s : e.subgroups)
      std::cout << " " << s.name;
    std::cout << "\n";
  }
  return 0;
}

int catalog_emit(const std::string& id, const std::vector<double>& params, const std::string& dir) {
  CatalogEntry e = catalog_entry(id, params);
  std::filesystem::create_directories(dir);
  int written = 0;
  auto path = [&](const std::string& name) {
    ++written;
    return (std::filesystem::path(dir) / name).string();
  };
  write_json_file(path("graph.json"), graph_to_json(e.graph));
  write_json_file(path("action.json"), action_to_json(e.action, e.graph));
  Json subgroups = Json::object();
  for (const NamedSubgroup& s : e.subgroups) {
    Json names = Json::array();
    for (int x : s.subgroup.elements)
      names.push_back(e.action.group->name(x));
    subgroups[s.name] = names;
  }
  Json index = {{"id", e.id}, {"params", e.params}, {"notes", e.notes}, {"subgroups", subgroups}};
  Json reps = Json::array();
  for (const CatalogRep& r : e.reps) {
    const std::string stem = file_safe(r.name);
    Json item = {{"name", r.name}, {"rep", "rep-" + stem + ".json"}, {"note", r.note}};
    write_json_file(path("rep-" + stem + ".json"), rep_to_json(r.rep));
    // Quotient inputs that differ from the defaults.
    QuotientSpec spec = quotient_spec(e, r);
    if (r.global_basis.size() > 0) {
      Json basis = {{"global", matrix_to_json(r.global_basis)}};
      if (r.edge_bases_follow_global) {
        basis["edges"] = Json::object();
        for (int edge : spec.edge_reps)
          basis["edges"][spec.graph.edges[edge].id] = matrix_to_json(r.global_basis);
      }
      write_json_file(path("basis-" + stem + ".json"), basis);
      item["basis"] = "basis-" + stem + ".json";
    }
    if (!r.edge_reps.empty() || !r.vertex_reps.empty()) {
      Json choice = {{"edges", r.edge_reps}, {"vertices", r.vertex_reps}};
      write_json_file(path("reps-" + stem + ".json"), choice);
      item["reps_choice"] = "reps-" + stem + ".json";
    }
    reps.push_back(item);
  }
  index["reps"] = reps;
  write_json_file(path("index.json"), index);
  std::cout << "wrote " << written << " files for " << id << " to " << dir << "\n";
  return 0;
}

// spectra --------------------------------------------------------------------

int spectrum_cmd(const std::string& graph, const ScanFlags& f, const std::string& out) {
  MetricGraph g = graph_from_json(read_json_file(graph));
  Spectrum s = eigenvalues(g, f.k_max, f.options());
  print_warnings(s);
  emit(out, spectrum_to_csv(s));
  return 0;
}

int rspectrum_cmd(const std::string& graph, const std::string& action, const std::string& rep, const ScanFlags& f,
                  const std::string& out) {
  MetricGraph g = graph_from_json(read_json_file(graph));
  GraphAction a = action_from_json(read_json_file(action), g);
  MatrixRep r = rep_from_json(read_json_file(rep), a.group);
  Spectrum s = r_spectrum(g, a, r, f.k_max, f.options());
  print_warnings(s);
  emit(out, spectrum_to_csv(s));
  return s.warnings.empty() ? 0 : kVerificationFailed;
}

int compare_cmd(const std::string& a, const std::string& b, double tol, int max_entries) {
  Spectrum s1 = spectrum_from_csv(read_text(a), a);
  Spectrum s2 = spectrum_from_csv(read_text(b), b);
  SpectrumComparison c = compare_spectra(s1, s2, tol, max_entries);
  for (const std::string& m : c.mismatches)
    std::cout << "mismatch: " << m << "\n";
  std::cout << (c.match ? "match" : "differ") << ": " << c.compared << " entries compared, max |dk| " << c.max_dk
            << "\n";
  return c.match ? 0 : kVerificationFailed;
}

// quotients --------------------------------------------------------------------

struct QuotientFlags {
  std::string graph, action, rep, subgroup, basis, reps_choice, move, coordinated, out;
};

int quotient_cmd(const QuotientFlags& f) {
  MetricGraph g = graph_from_json(read_json_file(f.graph));
  GraphAction a = action_from_json(read_json_file(f.action), g);
  MatrixRep r = rep_from_json(read_json_file(f.rep), a.group);
  if (!f.subgroup.empty())
    r = restrict(r, subgroup_from_names(a.group, f.subgroup));
  QuotientSpec spec{g, a, r, {}, {}, {}, {}};
  if (!quotient_readiness(g, a, r.domain()).no_edge_reversed) {
    std::tie(spec.graph, spec.action) = ensure_quotient_ready(g, a, r.domain());
    std::cerr << "note: subdivided the edges reversed by the action\n";
  }
  if (!f.reps_choice.empty())
    apply_representatives_file(spec, read_json_file(f.reps_choice));
  if (!f.basis.empty())
    apply_basis_file(spec, read_json_file(f.basis));
  if (!f.move.empty()) {
    std::vector<int> moves;
    for (const std::string& n : split_names(f.move))
      moves.push_back(a.group->element(n));
    spec = move_representatives(resolve_spec(spec), moves);
  }

  Json out;
  QuotientGraph q = [&] {
    if (f.coordinated.empty())
      return build_quotient(spec);
    CosetDecomposition c = left_cosets(r.domain());
    auto [sub, ind] = induction_specs(spec.graph, spec.action, r, c);
    QuotientGraph qs = build_quotient(sub);
    write_json_file(f.coordinated, quotient_to_json(qs));
    QuotientGraph qi = build_quotient(ind);
    out = quotient_to_json(qi, &c);
    return qi;
  }();
  if (out.is_null())
    out = quotient_to_json(q);
  emit(f.out, out.dump(2) + "\n");
  SelfAdjointReport sa = is_self_adjoint(q.graph);
  std::cerr << "quotient: " << q.graph.vertex_count() << " vertices, " << q.graph.edge_count() << " edges"
            << (sa.overall ? "" : ", not self-adjoint") << "\n";
  return 0;
}

// transplants ------------------------------------------------------------------

// Elements moving every representative of q1 onto that of q2 with the
// matching transported basis.
std::vector<int> find_moves(const QuotientGraph& q1, const QuotientGraph& q2) {
  const FiniteGroup& g = *q1.rep.group();
  std::vector<int> moves;
  for (size_t i = 0; i < q1.orbits.edge_reps.size(); ++i) {
    int found = -1;
    for (int x : q1.rep.domain().elements) {
      if (q1.action.edge_image(x, q1.orbits.edge_reps[i]).edge != q2.orbits.edge_reps[i])
        continue;
      CMatrix moved = q1.rep(x) * q1.edge_bases[i];
      if (moved.rows() == q2.edge_bases[i].rows() && moved.cols() == q2.edge_bases[i].cols() &&
          max_norm(moved - q2.edge_bases[i]) < 1e-10) {
        found = x;
        break;
      }
    }
    if (found < 0)
      throw InputError("no element of the subgroup moves the representative and basis of orbit " +
                       q1.parent.edges[q1.orbits.edge_reps[i]].id + "; pass --elements");
    moves.push_back(found);
  }
  (void)g;
  return moves;
}

struct TransplantFlags {
  std::string from, to, mode = "basis", intertwiner, elements, out;
};

int transplant_cmd(const TransplantFlags& f) {
  QuotientRecord q1 = quotient_from_json(read_json_file(f.from));
  QuotientRecord q2 = quotient_from_json(read_json_file(f.to));
  TransplantMap m;
  if (f.mode == "basis") {
    CMatrix s = f.intertwiner.empty() ? CMatrix() : matrix_from_json(read_json_file(f.intertwiner), "intertwiner");
    m = basis_change_transplant(q1.quotient, q2.quotient, s);
  } else if (f.mode == "reps") {
    std::vector<int> moves;
    if (f.elements.empty()) {
      moves = find_moves(q1.quotient, q2.quotient);
    } else {
      for (const std::string& n : split_names(f.elements))
        moves.push_back(q1.quotient.rep.group()->element(n));
    }
    m = representative_change_transplant(q1.quotient, q2.quotient, moves);
  } else if (f.mode == "induction") {
    if (!q2.induced_from)
      throw InputError(f.to + ": not built as a coordinated induced quotient (quotient --coordinated)");
    m = induction_transplant(q1.quotient, q2.quotient, *q2.induced_from);
  } else {
    throw InputError("unknown mode '" + f.mode + "'");
  }
  m.provenance.insert(m.provenance.begin(), "from " + f.from + " to " + f.to);
  emit(f.out, transplant_to_json(m).dump(2) + "\n");
  return 0;
}

int verify_cmd(const std::string& map, int count, const ScanFlags& f, const std::string& out) {
  TransplantMap m = transplant_from_json(read_json_file(map));
  TransplantReport r = verify_transplant(m, count, f.options());
  if (!out.empty())
    write_json_file(out, transplant_report_to_json(r));
  for (const TransplantCheck& c : r.eigenvalues)
    std::cout << "k=" << c.k << " multiplicity " << c.multiplicity << " residual " << c.max_residual << " gram "
              << c.gram_det << (c.ok ? "" : "  FAILED") << "\n";
  for (const std::string& p : r.problems)
    std::cout << "problem: " << p << "\n";
  std::cout << (r.ok ? "verified" : "failed") << " on " << r.checked << " eigenvalues\n";
  return r.ok ? 0 : kVerificationFailed;
}

// reps -------------------------------------------------------------------------

int rep_character(const std::string& file) {
  MatrixRep r = rep_from_json(read_json_file(file));
  Character c = character(r);
  const FiniteGroup& g = *r.group();
  for (int x : r.domain().elements)
    std::cout << g.name(x) << "," << c(x).real() << "," << c(x).imag() << "\n";
  return 0;
}

int rep_induce(const std::string& file, const std::string& out) {
  MatrixRep r = rep_from_json(read_json_file(file));
  emit(out, rep_to_json(induce(r)).dump(2) + "\n");
  return 0;
}

int rep_restrict(const std::string& file, const std::string& subgroup, const std::string& out) {
  MatrixRep r = rep_from_json(read_json_file(file));
  emit(out, rep_to_json(restrict(r, subgroup_from_names(r.group(), subgroup))).dump(2) + "\n");
  return 0;
}

int rep_decompose(const std::string& file) {
  MatrixRep r = rep_from_json(read_json_file(file));
  if (!r.domain().is_whole())
    throw InputError("decompose needs a representation of the whole group");
  IrrepTable t = builtin_irreps(r.group());
  std::vector<int> m = decompose(r, t);
  for (size_t i = 0; i < m.size(); ++i)
    std::cout << t.names[i] << "," << m[i] << "\n";
  return 0;
}

int rep_isomorphic(const std::string& a, const std::string& b) {
  MatrixRep r1 = rep_from_json(read_json_file(a));
  MatrixRep r2 = rep_from_json(read_json_file(b), r1.group());
  bool iso = is_isomorphic(r1, r2);
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? 0 : kVerificationFailed;
}

int selfcheck_cmd(const AcceptanceOptions& opts) {
  int failed = 0;
  run_acceptance(opts, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    failed += r.pass ? 0 : 1;
  });
  return failed == 0 ? 0 : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotient quantum graphs and isospectrality checks"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* cat = app.add_subcommand("catalog", "Built-in example graphs");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog entries")->callback([&] { action = catalog_list; });
  auto* cemit = cat->add_subcommand("emit", "Write graph, action and rep files of an entry");
  std::string emit_id, emit_dir;
  std::vector<double> emit_params;
  cemit->add_option("id", emit_id, "Catalog id")->required();
  cemit->add_option("--params", emit_params, "Length parameters");
  cemit->add_option("-o,--out", emit_dir, "Output directory")->required();
  cemit->callback([&] { action = [&] { return catalog_emit(emit_id, emit_params, emit_dir); }; });

  ScanFlags spec_flags;
  std::string spec_graph, spec_out;
  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of a graph as CSV");
  spec->add_option("--graph", spec_graph, "Graph or quotient file")->required();
  spec->add_option("-o,--out", spec_out, "CSV output, stdout by default");
  spec_flags.add(spec, true);
  spec->callback([&] { action = [&] { return spectrum_cmd(spec_graph, spec_flags, spec_out); }; });

  ScanFlags rs_flags;
  std::string rs_graph, rs_action, rs_rep, rs_out;
  auto* rs = app.add_subcommand("rspectrum", "Multiplicities of a representation in the eigenspaces");
  rs->add_option("--graph", rs_graph)->required();
  rs->add_option("--action", rs_action)->required();
  rs->add_option("--rep", rs_rep)->required();
  rs->add_option("-o,--out", rs_out, "CSV output, stdout by default");
  rs_flags.add(rs, true);
  rs->callback([&] { action = [&] { return rspectrum_cmd(rs_graph, rs_action, rs_rep, rs_flags, rs_out); }; });

  QuotientFlags qf;
  auto* quo = app.add_subcommand("quotient", "Build the quotient graph by a representation");
  quo->add_option("--graph", qf.graph)->required();
  quo->add_option("--action", qf.action)->required();
  quo->add_option("--rep", qf.rep)->required();
  quo->add_option("--subgroup", qf.subgroup, "Comma-separated elements; the rep is restricted to their span");
  quo->add_option("--basis", qf.basis, "Global and per-orbit bases");
  quo->add_option("--reps-choice", qf.reps_choice, "Edge and vertex representatives");
  quo->add_option("--move", qf.move,
                  "Comma-separated element per edge orbit carrying representatives and bases along");
  quo->add_option("--coordinated", qf.coordinated,
                  "Write the quotient by the rep here and the coordinated quotient by its induction to -o");
  quo->add_option("-o,--out", qf.out, "Quotient file, stdout by default");
  quo->callback([&] { action = [&] { return quotient_cmd(qf); }; });

  double cmp_tol = 1e-7;
  int cmp_max = 0;
  std::string cmp_a, cmp_b;
  auto* cmp = app.add_subcommand("compare", "Compare two spectrum files");
  cmp->add_option("a", cmp_a)->required();
  cmp->add_option("b", cmp_b)->required();
  cmp->add_option("--tol", cmp_tol, "Largest accepted |dk|")->check(CLI::PositiveNumber);
  cmp->add_option("--first", cmp_max, "Only the first N entries");
  cmp->callback([&] { action = [&] { return compare_cmd(cmp_a, cmp_b, cmp_tol, cmp_max); }; });

  TransplantFlags tf;
  auto* tr = app.add_subcommand("transplant", "Build or verify a transplantation");
  tr->require_subcommand(0, 1);
  tr->add_option("--from", tf.from, "Source quotient file");
  tr->add_option("--to", tf.to, "Target quotient file");
  tr->add_option("--mode", tf.mode, "basis, reps or induction")
      ->check(CLI::IsMember({"basis", "reps", "induction"}));
  tr->add_option("--intertwiner", tf.intertwiner, "Matrix file for basis mode");
  tr->add_option("--elements", tf.elements, "Comma-separated element per edge orbit for reps mode");
  tr->add_option("-o,--out", tf.out, "Map file, stdout by default");
  auto* ver = tr->add_subcommand("verify", "Check a transplant on the lowest eigenvalues");
  std::string ver_map, ver_out;
  int ver_count = 10;
  ScanFlags ver_flags;
  ver->add_option("map", ver_map)->required();
  ver->add_option("--count", ver_count, "Number of source eigenvalues")->check(CLI::PositiveNumber);
  ver->add_option("-o,--out", ver_out, "JSON report");
  ver_flags.add(ver, false);
  ver->callback([&] { action = [&] { return verify_cmd(ver_map, ver_count, ver_flags, ver_out); }; });
  tr->callback([&] {
    if (action)
      return;
    if (tf.from.empty() || tf.to.empty())
      throw CLI::RequiredError("--from and --to");
    action = [&] { return transplant_cmd(tf); };
  });

  auto* rep = app.add_subcommand("rep", "Representation utilities");
  rep->require_subcommand(1);
  std::string rep_a, rep_b, rep_sub, rep_out;
  auto* rc = rep->add_subcommand("character", "Character values as CSV");
  rc->add_option("rep", rep_a)->required();
  rc->callback([&] { action = [&] { return rep_character(rep_a); }; });
  auto* ri = rep->add_subcommand("induce", "Induce to the whole group");
  ri->add_option("rep", rep_a)->required();
  ri->add_option("-o,--out", rep_out);
  ri->callback([&] { action = [&] { return rep_induce(rep_a, rep_out); }; });
  auto* rr = rep->add_subcommand("restrict", "Restrict to a subgroup");
  rr->add_option("rep", rep_a)->required();
  rr->add_option("--subgroup", rep_sub, "Comma-separated generators")->required();
  rr->add_option("-o,--out", rep_out);
  rr->callback([&] { action = [&] { return rep_restrict(rep_a, rep_sub, rep_out); }; });
  auto* rd = rep->add_subcommand("decompose", "Irreducible multiplicities");
  rd->add_option("rep", rep_a)->required();
  rd->callback([&] { action = [&] { return rep_decompose(rep_a); }; });
  auto* rio = rep->add_subcommand("is-isomorphic", "Compare two representations by character");
  rio->add_option("a", rep_a)->required();
  rio->add_option("b", rep_b)->required();
  rio->callback([&] { action = [&] { return rep_isomorphic(rep_a, rep_b); }; });

  AcceptanceOptions acc;
  auto* self = app.add_subcommand("selfcheck", "Run the acceptance suite");
  self->add_flag("--quick", acc.quick, "Only the D4 isospectral pair");
  self->add_option("--only", acc.only, "Criterion ids");
  self->add_option("--seed", acc.seed, "Seed of the random draws");
  self->callback([&] { action = [&] { return selfcheck_cmd(acc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
