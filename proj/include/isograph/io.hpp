#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isograph/action.hpp"
#include "isograph/graph.hpp"
#include "isograph/group.hpp"
#include "isograph/quotient.hpp"
#include "isograph/rep.hpp"
#include "isograph/spectral.hpp"
#include "isograph/transplant.hpp"

namespace isograph {

using Json = nlohmann::json;

// All readers throw InputError. Messages name the file (when read from
// disk), the parse position for malformed JSON and the offending field
// path, e.g. "vertices[2].A: expected a 3x3 matrix".

Json parse_json(const std::string& text, const std::string& origin = "input");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
void write_json_file(const std::string& path, const Json& j);

// Matrices are lists of rows; entries are numbers or [re, im] pairs.
CMatrix matrix_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const CMatrix& m, bool pairs = true);

// A built-in id or an inline {"order", "table", "names"} object.
GroupPtr group_from_json(const Json& j, const std::string& where = "group");
Json group_to_json(const FiniteGroup& g);
// The shortest built-in id whose table and names match, else the inline form.
Json group_reference(const GroupPtr& g);

// Vertices without "ends" take their edge-ends from the edge list in edge
// order; without "bc" they are Neumann unless "A" and "B" are given. A
// quotient file is accepted too and yields its quotient graph.
MetricGraph graph_from_json(const Json& j);
Json graph_to_json(const MetricGraph& g);

GraphAction action_from_json(const Json& j, const MetricGraph& g);
// Lists the images of a generating set of the group.
Json action_to_json(const GraphAction& a, const MetricGraph& g);

// The domain is the set of listed elements when it is a subgroup, and the
// subgroup they generate otherwise. `group` overrides the file's group
// when given; it must have the same table.
MatrixRep rep_from_json(const Json& j, const GroupPtr& group = nullptr);
Json rep_to_json(const MatrixRep& rep);

// Header "k,multiplicity", a "# k_max=..." comment, then one line per
// entry. Number formatting is locale independent.
std::string spectrum_to_csv(const Spectrum& s);
Spectrum spectrum_from_csv(const std::string& text, const std::string& origin = "input");

// A quotient together with everything needed to rebuild it.
struct QuotientRecord {
  QuotientSpec spec;
  QuotientGraph quotient;
  std::optional<CosetDecomposition> induced_from;
};

Json quotient_to_json(const QuotientGraph& q, const CosetDecomposition* induced_from = nullptr);
// Rebuilds the quotient from its provenance and checks it against the
// stored graph.
QuotientRecord quotient_from_json(const Json& j);

Json transplant_to_json(const TransplantMap& m);
TransplantMap transplant_from_json(const Json& j);
Json transplant_report_to_json(const TransplantReport& r);

// Optional quotient inputs. Basis file: {"global": matrix, "edges":
// {parentEdgeId: matrix}} keyed by edge representatives; representatives
// file: {"edges": [ids], "vertices": [ids]}.
void apply_basis_file(QuotientSpec& spec, const Json& j);
void apply_representatives_file(QuotientSpec& spec, const Json& j);

}  // namespace isograph
