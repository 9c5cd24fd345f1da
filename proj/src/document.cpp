#include "afprov/document.hpp"

#include <algorithm>
#include <map>

#include "afprov/error.hpp"
#include "afprov/json_codec.hpp"

namespace afprov {

namespace json {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SchemaError, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t index_of_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) schema_error(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

ArgumentId id_of(const Json& j) {
  auto s = string_of(j, "argument name");
  if (!ArgumentId::is_valid(s)) schema_error("invalid argument name '" + s + "'");
  return ArgumentId(std::move(s));
}

Json length_json(const Length& l) {
  return l.is_finite() ? Json(l.value()) : Json("inf");
}

Length length_of(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Length::infinity();
  if (j.is_number_unsigned()) return Length::finite(j.get<std::uint32_t>());
  schema_error("length must be a natural number or \"inf\"");
}

Json edge_types_json(const ArgumentationFramework& af, std::span<const EdgeType> types) {
  Json arr = Json::array();
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    arr.push_back({{"attacker", af.attack(e).attacker.str()},
                   {"target", af.attack(e).target.str()},
                   {"type", std::string(to_string(types[e]))}});
  }
  return arr;
}

std::vector<EdgeType> edge_types_of(const ArgumentationFramework& af, const Json& j) {
  if (!j.is_array() || j.size() != af.edge_count()) {
    schema_error("edge_types must list every attack exactly once");
  }
  std::vector<EdgeType> types(af.edge_count());
  std::vector<bool> seen(af.edge_count(), false);
  for (const auto& item : j) {
    AttackEdge edge{id_of(field(item, "attacker")), id_of(field(item, "target"))};
    auto e = af.find_edge(edge);
    if (!e || seen[*e]) schema_error("edge_types entry does not resolve to a unique attack");
    auto t = parse_edge_type(string_of(field(item, "type"), "edge type"));
    if (!t) schema_error("unknown edge type");
    types[*e] = *t;
    seen[*e] = true;
  }
  return types;
}

Minimality minimality_of(const Json& j) {
  auto m = parse_minimality(string_of(j, "minimality"));
  if (!m) schema_error("minimality must be \"cardinality\" or \"subset\"");
  return *m;
}

Json key_json(const OverlayKey& key) {
  return {{"stable_index", key.stable_index},
          {"delta_index", key.delta_index},
          {"minimality", std::string(to_string(key.minimality))}};
}

OverlayKey key_of_json(const Json& j) {
  return {index_of_json(field(j, "stable_index"), "stable_index"),
          index_of_json(field(j, "delta_index"), "delta_index"),
          minimality_of(field(j, "minimality"))};
}

template <typename Map>
Json name_map(const ArgumentationFramework& af, const Map& value_of) {
  Json obj = Json::object();
  for (ArgIndex i = 0; i < af.size(); ++i) obj[af.argument(i).str()] = value_of(i);
  return obj;
}

const Json& per_argument(const Json& obj, const ArgumentationFramework& af, ArgIndex i,
                         const char* what) {
  if (!obj.is_object() || obj.size() != af.size()) {
    schema_error(std::string(what) + " must cover every argument exactly once");
  }
  auto it = obj.find(af.argument(i).str());
  if (it == obj.end()) schema_error(std::string(what) + " misses '" + af.argument(i).str() + "'");
  return *it;
}

GroundedSolution grounded_from_json(const ArgumentationFramework& af, const Json& j) {
  const Json& labels = field(j, "labels");
  const Json& lengths = field(j, "lengths");
  std::vector<Label> ls;
  std::vector<Length> lens;
  for (ArgIndex i = 0; i < af.size(); ++i) {
    auto l = parse_label(string_of(per_argument(labels, af, i, "labels"), "label"));
    if (!l) schema_error("unknown label");
    ls.push_back(*l);
    lens.push_back(length_of(per_argument(lengths, af, i, "lengths")));
  }
  try {
    return GroundedSolution(af, Labeling(std::move(ls)), std::move(lens),
                            edge_types_of(af, field(j, "edge_types")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema_error(std::string("inconsistent grounded solution: ") + e.what());
  }
}

LayeredLayout layout_from_json(const ArgumentationFramework& af, const Json& j) {
  LayeredLayout out;
  const Json& layers = field(j, "layers");
  if (!layers.is_array()) schema_error("layers must be an array");
  for (const auto& layer : layers) {
    const auto index = static_cast<std::uint32_t>(index_of_json(field(layer, "layer"), "layer"));
    if (out.layers.count(index)) schema_error("duplicate layer");
    auto& row = out.layers[index];
    const Json& nodes = field(layer, "nodes");
    if (!nodes.is_array()) schema_error("layer nodes must be an array");
    for (const auto& n : nodes) {
      row.push_back(id_of(n));
      if (!out.positions.emplace(row.back(), LayoutPosition{index, static_cast<std::uint32_t>(row.size() - 1)}).second) {
        schema_error("argument placed twice in layout");
      }
    }
  }
  const Json& band = field(j, "undec_band");
  if (!band.is_array()) schema_error("undec_band must be an array");
  for (const auto& n : band) {
    out.undec_band.push_back(id_of(n));
    if (!out.positions.emplace(out.undec_band.back(), LayoutPosition{std::nullopt, static_cast<std::uint32_t>(out.undec_band.size() - 1)}).second) {
      schema_error("argument placed twice in layout");
    }
  }
  if (out.positions.size() != af.size()) schema_error("layout must place every argument");
  for (const auto& [id, pos] : out.positions) {
    if (!af.find(id)) schema_error("layout names unknown argument '" + id.str() + "'");
  }
  return out;
}

}  // namespace

Json edge_json(const AttackEdge& edge) {
  return Json::array({edge.attacker.str(), edge.target.str()});
}

std::vector<AttackEdge> edges_from_json(const Json& j) {
  if (!j.is_array()) schema_error("edges must be an array of [attacker, target] pairs");
  std::vector<AttackEdge> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) schema_error("an edge is an [attacker, target] pair");
    out.push_back({id_of(pair[0]), id_of(pair[1])});
  }
  return out;
}

Json to_json(const ArgumentationFramework& af) {
  Json args = Json::array();
  for (const auto& a : af.arguments()) args.push_back(a.str());
  Json attacks = Json::array();
  for (const auto& e : af.attacks()) attacks.push_back(edge_json(e));
  return {{"arguments", args}, {"attacks", attacks}};
}

ArgumentationFramework af_from_json(const Json& j) {
  if (!j.is_object()) schema_error("framework must be a JSON object");
  // Either list may be omitted; attack endpoints are arguments anyway.
  std::vector<ArgumentId> ids;
  if (j.contains("arguments")) {
    const Json& args = j["arguments"];
    if (!args.is_array()) schema_error("arguments must be an array");
    for (const auto& a : args) ids.push_back(id_of(a));
  }
  std::vector<AttackEdge> attacks;
  if (j.contains("attacks")) attacks = edges_from_json(j["attacks"]);
  if (!j.contains("arguments") && !j.contains("attacks")) schema_error("missing field 'arguments'");
  return build_af(std::move(ids), std::move(attacks));
}

Json to_json(const GroundedSolution& sol) {
  const auto& af = sol.af();
  return {{"labels", name_map(af, [&](ArgIndex i) { return std::string(to_string(sol.label(i))); })},
          {"lengths", name_map(af, [&](ArgIndex i) { return length_json(sol.length(i)); })},
          {"edge_types", edge_types_json(af, sol.edge_types())}};
}

Json to_json(const StableSolution& s) {
  Json ext = Json::array();
  for (const auto& m : s.extension.members()) ext.push_back(m.str());
  return {{"index", s.index}, {"extension", ext}};
}

Json to_json(const CriticalSetFamily& family) {
  Json deltas = Json::array();
  for (const auto& d : family.deltas) {
    Json edges = Json::array();
    for (const auto& e : d.edges) edges.push_back(edge_json(e));
    deltas.push_back({{"delta_index", d.delta_index}, {"edges", edges}});
  }
  return {{"stable_index", family.stable_index},
          {"minimality", std::string(to_string(family.minimality))},
          {"deltas", deltas}};
}

Json to_json(const ProvenanceOverlay& ov) {
  Json j = key_json(key_of(ov));
  Json delta = Json::array();
  for (const auto& e : ov.delta.edges) delta.push_back(edge_json(e));
  j["delta"] = delta;
  j["nodes"] = name_map(ov.af, [&](ArgIndex i) {
    const auto& n = ov.node_labels[i];
    return Json{{"base", std::string(to_string(n.base))},
                {"effective", std::string(to_string(n.effective))},
                {"base_length", length_json(n.base_length)},
                {"effective_length", length_json(n.effective_length)},
                {"length_changed", n.length_changed}};
  });
  j["edge_types"] = edge_types_json(ov.af, ov.edge_types);
  return j;
}

Json to_json(const LayeredLayout& layout) {
  Json layers = Json::array();
  for (const auto& [index, row] : layout.layers) {
    Json nodes = Json::array();
    for (const auto& id : row) nodes.push_back(id.str());
    layers.push_back({{"layer", index}, {"nodes", nodes}});
  }
  Json band = Json::array();
  for (const auto& id : layout.undec_band) band.push_back(id.str());
  return {{"layers", layers}, {"undec_band", band}};
}

Json to_json(const LayoutEntry& entry) {
  Json j = to_json(entry.layout);
  if (entry.overlay) {
    j["subject"] = "overlay";
    const Json key = key_json(*entry.overlay);
    for (const auto& [k, v] : key.items()) j[k] = v;
  } else {
    j["subject"] = "grounded";
  }
  return j;
}

namespace {

bool layout_entry_less(const LayoutEntry& a, const LayoutEntry& b) {
  if (!a.overlay || !b.overlay) return !a.overlay && b.overlay;
  return *a.overlay < *b.overlay;
}

}  // namespace

Json to_json(const SolutionDocument& doc) {
  Json j;
  j["schema"] = std::string(kSchemaVersion);
  j["af"] = to_json(doc.af);
  j["grounded"] = to_json(doc.grounded);

  auto stable = doc.stable_solutions;
  std::sort(stable.begin(), stable.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  j["stable_solutions"] = Json::array();
  for (const auto& s : stable) j["stable_solutions"].push_back(to_json(s));

  auto critical = doc.critical_sets;
  std::sort(critical.begin(), critical.end(), [](const auto& a, const auto& b) {
    return std::pair(a.stable_index, a.minimality) < std::pair(b.stable_index, b.minimality);
  });
  j["critical_sets"] = Json::array();
  for (const auto& c : critical) j["critical_sets"].push_back(to_json(c));

  std::vector<const ProvenanceOverlay*> overlays;
  for (const auto& o : doc.overlays) overlays.push_back(&o);
  std::sort(overlays.begin(), overlays.end(),
            [](const auto* a, const auto* b) { return key_of(*a) < key_of(*b); });
  j["overlays"] = Json::array();
  for (const auto* o : overlays) j["overlays"].push_back(to_json(*o));

  auto layouts = doc.layouts;
  std::sort(layouts.begin(), layouts.end(), layout_entry_less);
  j["layouts"] = Json::array();
  for (const auto& l : layouts) j["layouts"].push_back(to_json(l));
  return j;
}

namespace {

// Every derived section must be what the engines produce for doc.af.
template <class FindStable, class FindDelta>
void verify(const SolutionDocument& doc, FindStable&& find_stable, FindDelta&& find_delta) {
  if (doc.grounded != solve_grounded(doc.af)) schema_error("grounded solution does not match the framework");
  for (const auto& s : doc.stable_solutions) {
    if (!is_stable(doc.af, s.extension)) schema_error("listed extension is not stable");
  }
  for (const auto& f : doc.critical_sets) {
    for (const auto& d : f.deltas) {
      if (!validate_delta(doc.af, find_stable(f.stable_index), d.edges)) {
        schema_error("critical set does not yield its stable solution");
      }
    }
  }
  for (const auto& ov : doc.overlays) {
    const auto key = key_of(ov);
    if (ov != build_overlay(doc.grounded, find_stable(key.stable_index), find_delta(key))) {
      schema_error("overlay does not match its critical set");
    }
  }
  for (const auto& entry : doc.layouts) {
    LayeredLayout expected;
    if (entry.overlay) {
      expected = layout_overlay(
          build_overlay(doc.grounded, find_stable(entry.overlay->stable_index), find_delta(*entry.overlay)));
    } else {
      expected = layout_grounded(doc.grounded);
    }
    if (entry.layout != expected) schema_error("layout does not match its subject");
  }
}

}  // namespace

SolutionDocument document_from_json(const Json& j) {
  if (!j.is_object()) schema_error("document must be a JSON object");
  if (string_of(field(j, "schema"), "schema") != kSchemaVersion) {
    schema_error("unsupported schema, expected " + std::string(kSchemaVersion));
  }
  SolutionDocument doc;
  doc.af = af_from_json(field(j, "af"));
  doc.grounded = grounded_from_json(doc.af, field(j, "grounded"));

  const Json& stable = field(j, "stable_solutions");
  if (!stable.is_array()) schema_error("stable_solutions must be an array");
  for (const auto& s : stable) {
    const Json& ext = field(s, "extension");
    if (!ext.is_array()) schema_error("extension must be an array");
    std::vector<ArgumentId> members;
    for (const auto& m : ext) members.push_back(id_of(m));
    ExtensionSet extension(std::move(members));
    Labeling labeling;
    try {
      labeling = labeling_of(doc.af, extension);
    } catch (const Error& e) {
      schema_error(e.what());
    }
    doc.stable_solutions.push_back(
        {index_of_json(field(s, "index"), "index"), std::move(extension), std::move(labeling)});
  }
  auto find_stable = [&](std::size_t index) -> const StableSolution& {
    for (const auto& s : doc.stable_solutions) {
      if (s.index == index) return s;
    }
    schema_error("stable index " + std::to_string(index) + " does not resolve");
  };

  const Json& critical = field(j, "critical_sets");
  if (!critical.is_array()) schema_error("critical_sets must be an array");
  for (const auto& c : critical) {
    CriticalSetFamily family{index_of_json(field(c, "stable_index"), "stable_index"),
                             minimality_of(field(c, "minimality")),
                             {}};
    find_stable(family.stable_index);
    const Json& deltas = field(c, "deltas");
    if (!deltas.is_array()) schema_error("deltas must be an array");
    for (const auto& d : deltas) {
      auto edges = edges_from_json(field(d, "edges"));
      for (const auto& e : edges) {
        if (!doc.af.find_edge(e)) schema_error("critical edge is not an attack of the framework");
      }
      std::sort(edges.begin(), edges.end());
      family.deltas.push_back({family.stable_index,
                               index_of_json(field(d, "delta_index"), "delta_index"),
                               std::move(edges), family.minimality});
    }
    doc.critical_sets.push_back(std::move(family));
  }
  auto find_delta = [&](const OverlayKey& key) -> const CriticalAttackSet& {
    for (const auto& f : doc.critical_sets) {
      if (f.stable_index != key.stable_index || f.minimality != key.minimality) continue;
      for (const auto& d : f.deltas) {
        if (d.delta_index == key.delta_index) return d;
      }
    }
    schema_error("overlay key does not resolve to a critical set");
  };

  const Json& overlays = field(j, "overlays");
  if (!overlays.is_array()) schema_error("overlays must be an array");
  for (const auto& o : overlays) {
    const OverlayKey key = key_of_json(o);
    find_stable(key.stable_index);
    ProvenanceOverlay ov{doc.af, doc.grounded, key.stable_index, find_delta(key), {}, {}};
    auto delta = edges_from_json(field(o, "delta"));
    std::sort(delta.begin(), delta.end());
    if (delta != ov.delta.edges) schema_error("overlay delta disagrees with its critical set");
    const Json& nodes = field(o, "nodes");
    for (ArgIndex i = 0; i < doc.af.size(); ++i) {
      const Json& n = per_argument(nodes, doc.af, i, "overlay nodes");
      auto base = parse_label(string_of(field(n, "base"), "base"));
      auto effective = parse_effective_label(string_of(field(n, "effective"), "effective"));
      if (!base || !effective) schema_error("bad overlay node label");
      const Json& changed = field(n, "length_changed");
      if (!changed.is_boolean()) schema_error("length_changed must be a boolean");
      ov.node_labels.push_back({*base, *effective, length_of(field(n, "base_length")),
                                length_of(field(n, "effective_length")), changed.get<bool>()});
    }
    ov.edge_types = edge_types_of(doc.af, field(o, "edge_types"));
    doc.overlays.push_back(std::move(ov));
  }

  const Json& layouts = field(j, "layouts");
  if (!layouts.is_array()) schema_error("layouts must be an array");
  for (const auto& l : layouts) {
    LayoutEntry entry;
    const auto subject = string_of(field(l, "subject"), "subject");
    if (subject == "overlay") {
      entry.overlay = key_of_json(l);
      find_delta(*entry.overlay);
    } else if (subject != "grounded") {
      schema_error("layout subject must be \"grounded\" or \"overlay\"");
    }
    entry.layout = layout_from_json(doc.af, l);
    doc.layouts.push_back(std::move(entry));
  }
  verify(doc, find_stable, find_delta);
  return doc;
}

std::string dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace json

OverlayKey key_of(const ProvenanceOverlay& overlay) {
  return {overlay.stable_index, overlay.delta.delta_index, overlay.delta.minimality};
}

SolutionDocument analyze(const ArgumentationFramework& af, const AnalysisOptions& options) {
  SolutionDocument doc;
  doc.af = af;
  doc.grounded = solve_grounded(af);
  if (options.layouts) doc.layouts.push_back({std::nullopt, layout_grounded(doc.grounded)});
  if (!options.stable) return doc;

  doc.stable_solutions = enumerate_stable(doc.grounded);
  if (!options.critical) return doc;

  CriticalSearchOptions search;
  search.minimality = *options.critical;
  search.max_candidates = options.max_candidates;
  for (const auto& s : doc.stable_solutions) {
    CriticalSetFamily family{s.index, search.minimality,
                             find_critical_sets(doc.grounded, s, search)};
    if (options.overlays) {
      for (const auto& d : family.deltas) {
        auto ov = build_overlay(doc.grounded, s, d);
        if (options.layouts) doc.layouts.push_back({key_of(ov), layout_overlay(ov)});
        doc.overlays.push_back(std::move(ov));
      }
    }
    doc.critical_sets.push_back(std::move(family));
  }
  return doc;
}

std::string export_json(const SolutionDocument& doc) { return json::dump(json::to_json(doc)); }

SolutionDocument parse_document(std::string_view json_text) {
  json::Json j;
  try {
    j = json::Json::parse(json_text);
  } catch (const json::Json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  return json::document_from_json(j);
}

ArgumentationFramework parse_af_json(std::string_view json_text) {
  json::Json j;
  try {
    j = json::Json::parse(json_text);
  } catch (const json::Json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("schema")) return json::document_from_json(j).af;
  if (j.is_object() && j.contains("af")) return json::af_from_json(j["af"]);
  return json::af_from_json(j);
}

}  // namespace afprov
