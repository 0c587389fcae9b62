#include "starcat/document.hpp"

#include <json.hpp>

namespace starcat {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Errc::Parse, "invalid JSON");
  return j;
}

WObject object_from_json(RingId ring, const json& j, const std::string& name) {
  require(j.is_object() && j.contains("weights") && j["weights"].is_array(), Errc::Parse,
          "object '" + name + "' needs a weights array");
  std::vector<Scalar> weights;
  for (const json& w : j["weights"]) {
    require(w.is_string(), Errc::Parse, "object '" + name + "': weights must be scalar literals");
    Scalar s = parse_scalar(ring, w.get<std::string>());
    require(!s.is_zero() && is_hermitian(s) && is_positive_scalar(s), Errc::Parse,
            "object '" + name + "': weight '" + w.get<std::string>() + "' is not positive Hermitian nonzero");
    weights.push_back(std::move(s));
  }
  return WObject(ring, std::move(weights));
}

}  // namespace

Document parse_document(const std::string& text) {
  json j = parse_json(text);
  require(j.is_object(), Errc::Parse, "document must be a JSON object");
  require(j.contains("ring") && j["ring"].is_string(), Errc::Parse, "document needs a ring");
  Document doc;
  doc.ring = ring_from_name(j["ring"].get<std::string>());
  if (j.contains("objects")) {
    require(j["objects"].is_object(), Errc::Parse, "objects must be a map");
    for (auto it = j["objects"].begin(); it != j["objects"].end(); ++it)
      doc.objects.emplace(it.key(), object_from_json(doc.ring, it.value(), it.key()));
  }
  if (j.contains("morphisms")) {
    require(j["morphisms"].is_object(), Errc::Parse, "morphisms must be a map");
    for (auto it = j["morphisms"].begin(); it != j["morphisms"].end(); ++it) {
      const json& m = it.value();
      require(m.is_object() && m.contains("dom") && m.contains("cod") && m.contains("matrix"),
              Errc::Parse, "morphism '" + it.key() + "' needs dom, cod, matrix");
      std::string dom_name = m["dom"].get<std::string>();
      std::string cod_name = m["cod"].get<std::string>();
      auto dom_it = doc.objects.find(dom_name);
      auto cod_it = doc.objects.find(cod_name);
      require(dom_it != doc.objects.end(), Errc::Parse,
              "morphism '" + it.key() + "': unknown dom object '" + dom_name + "'");
      require(cod_it != doc.objects.end(), Errc::Parse,
              "morphism '" + it.key() + "': unknown cod object '" + cod_name + "'");
      const WObject& dom = dom_it->second;
      const WObject& cod = cod_it->second;
      require(m["matrix"].is_array() && static_cast<int>(m["matrix"].size()) == cod.dim(), Errc::Parse,
              "morphism '" + it.key() + "': matrix must have cod.dim rows");
      Mat mat(doc.ring, cod.dim(), dom.dim());
      int r = 0;
      for (const json& row : m["matrix"]) {
        require(row.is_array() && static_cast<int>(row.size()) == dom.dim(), Errc::Parse,
                "morphism '" + it.key() + "': row " + std::to_string(r) + " must have dom.dim entries");
        for (int c = 0; c < dom.dim(); ++c) {
          require(row[static_cast<size_t>(c)].is_string(), Errc::Parse,
                  "morphism '" + it.key() + "': entries must be scalar literals");
          mat.set(r, c, parse_scalar(doc.ring, row[static_cast<size_t>(c)].get<std::string>()));
        }
        ++r;
      }
      doc.morphisms.emplace(it.key(), Document::MorRec{dom_name, cod_name,
                                                       WMorphism(dom, cod, std::move(mat))});
    }
  }
  if (j.contains("results")) {
    require(j["results"].is_object(), Errc::Parse, "results must be a map");
    doc.results = j["results"].dump();
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  json j;
  j["ring"] = ring_name(doc.ring);
  j["objects"] = json::object();
  for (const auto& [name, obj] : doc.objects) {
    json weights = json::array();
    for (const Scalar& w : obj.weights()) weights.push_back(format_scalar(w));
    j["objects"][name] = json{{"weights", weights}};
  }
  j["morphisms"] = json::object();
  for (const auto& [name, rec] : doc.morphisms) {
    json rows = json::array();
    for (int r = 0; r < rec.mor.cod().dim(); ++r) {
      json row = json::array();
      for (int c = 0; c < rec.mor.dom().dim(); ++c) row.push_back(format_scalar(rec.mor.mat().at(r, c)));
      rows.push_back(std::move(row));
    }
    j["morphisms"][name] = json{{"dom", rec.dom}, {"cod", rec.cod}, {"matrix", rows}};
  }
  json results = parse_json(doc.results);
  if (!results.empty()) j["results"] = results;
  return j.dump(2) + "\n";
}

std::string ensure_object(Document& doc, const std::string& hint, const WObject& obj) {
  for (const auto& [name, existing] : doc.objects)
    if (existing == obj) return name;
  std::string name = hint;
  int suffix = 2;
  while (doc.objects.count(name)) name = hint + "_" + std::to_string(suffix++);
  doc.objects.emplace(name, obj);
  return name;
}

void add_morphism(Document& doc, const std::string& name, const WMorphism& mor) {
  auto it = doc.morphisms.find(name);
  if (it != doc.morphisms.end()) {
    require(it->second.mor == mor, Errc::Parse, "morphism name '" + name + "' already taken");
    return;
  }
  std::string dom = ensure_object(doc, name + "_dom", mor.dom());
  std::string cod = ensure_object(doc, name + "_cod", mor.cod());
  doc.morphisms.emplace(name, Document::MorRec{dom, cod, mor});
}

void add_result(Document& doc, const std::string& key, const std::string& raw_json_value) {
  json results = parse_json(doc.results);
  results[key] = parse_json(raw_json_value);
  doc.results = results.dump();
}

const WMorphism& find_morphism(const Document& doc, const std::string& name) {
  auto it = doc.morphisms.find(name);
  require(it != doc.morphisms.end(), Errc::Parse, "no morphism named '" + name + "' in the document");
  return it->second.mor;
}

}  // namespace starcat
