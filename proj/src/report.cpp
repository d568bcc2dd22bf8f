#include "cmcells/report.hpp"

#include "cmcells/errors.hpp"

namespace cmcells {

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const Box& b) { return Json::array({b.row, b.col}); }

Json to_json(const Charge& s) { return Json(s.entries()); }

Json to_json(const Multipartition& mp) {
  Json out = Json::array();
  for (const auto& c : mp.components()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Permutation& w) { return Json(w.images()); }

Json to_json(const TypeJ& J) { return Json(J.members()); }

Json to_json(const ThetaPoint& theta) {
  Json out = Json::array();
  for (const auto& c : theta.coords()) out.push_back(c.str());
  return out;
}

Json to_json(const ReductionResult& reduction) {
  Json out = Json::object();
  out["word"] = reduction.word;
  out["charge"] = to_json(reduction.element.translation());
  out["permutation"] = to_json(reduction.element.permutation());
  out["reduced"] = to_json(reduction.reduced);
  out["typeJ"] = to_json(reduction.type);
  return out;
}

Json to_json(const DominoTableau& tableau) { return Json(tableau.labels()); }

Json to_json(const ElementaryMove& move) {
  Json out = Json::object();
  out["from"] = to_json(move.source);
  out["to"] = to_json(move.target());
  out["removed"] = to_json(move.removed);
  out["added"] = to_json(move.added);
  out["reverse"] = move.reverse;
  return out;
}

Json block_report(const BlockPartition& bp) {
  Json out = Json::object();
  out["ell"] = bp.ell;
  out["n"] = bp.n;
  out["theta"] = to_json(bp.theta);
  out["charge"] = to_json(bp.reduction.element.translation());
  out["permutation"] = to_json(bp.reduction.element.permutation());
  out["typeJ"] = to_json(bp.reduction.type);
  Json blocks = Json::array();
  for (const auto& block : bp.blocks) {
    Json entry = Json::object();
    entry["heart"] = to_json(block.heart);
    Json members = Json::array();
    for (const auto& mp : block.members) members.push_back(to_json(mp));
    entry["members"] = std::move(members);
    blocks.push_back(std::move(entry));
  }
  out["blocks"] = std::move(blocks);
  return out;
}

Json cell_report(const CellPartition& cells) {
  Json out = Json::object();
  out["n"] = cells.n;
  out["r"] = cells.r;
  Json list = Json::array();
  for (const auto& cell : cells.cells) {
    Json shapes = Json::array();
    for (const auto& lambda : cell) shapes.push_back(to_json(lambda));
    list.push_back(std::move(shapes));
  }
  out["cells"] = std::move(list);
  Json edges = Json::array();
  for (const auto& e : cells.edges) {
    Json entry = Json::object();
    entry["from"] = to_json(e.from);
    entry["to"] = to_json(e.to);
    entry["removed"] = to_json(e.removed);
    entry["added"] = to_json(e.added);
    edges.push_back(std::move(entry));
  }
  out["edges"] = std::move(edges);
  return out;
}

Json verify_report(const VerifyReport& report) {
  Json j = Json::object();
  j["passed"] = report.passed();
  j["instances_checked"] = report.instances.size();
  Json list = Json::array();
  for (const auto& i : report.instances) {
    Json e = Json::object();
    e["n"] = i.n;
    e["r"] = i.r;
    e["shapes"] = i.shapes;
    e["cells"] = i.cells;
    e["edges"] = i.edges;
    e["cells_match"] = i.cells_match;
    e["wall_invariant"] = i.wall_invariant;
    list.push_back(std::move(e));
  }
  j["instances"] = std::move(list);
  if (const auto* failure = report.first_failure()) j["counterexample"] = failure->counterexample;
  return j;
}

Json reduce_report(const ThetaPoint& theta, bool adjacent) {
  Json j = Json::object();
  j["ell"] = theta.ell();
  j["theta"] = to_json(theta);
  const Json fields = to_json(reduce_to_fundamental(theta));
  for (const auto& [key, value] : fields.items()) j[key] = value;
  if (adjacent) {
    Json list = Json::array();
    for (const auto& r : adjacent_alcove_reductions(theta)) list.push_back(to_json(r));
    j["adjacent"] = std::move(list);
  }
  return j;
}

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidParameter(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidParameter(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Partition partition_from_json(const Json& j) { return Partition(int_array(j, "partition")); }

Charge charge_from_json(const Json& j) { return Charge(int_array(j, "charge")); }

Multipartition multipartition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidParameter("multipartition must be a JSON array of partitions");
  std::vector<Partition> comps;
  for (const auto& c : j) comps.push_back(partition_from_json(c));
  return Multipartition(std::move(comps));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cmcells
