#pragma once

#include <map>
#include <string>

#include "starcat/weightmat.hpp"

namespace starcat {

// Single-document in/out model: named objects and morphisms over one ring.
// Morphisms reference objects by name; names are the join keys for CLI
// pipelines. An optional free-form "results" JSON object carries
// non-morphism outputs (classification flags, verdicts, notes).
struct Document {
  RingId ring = RingId::Rational;

  std::map<std::string, WObject> objects;

  struct MorRec {
    std::string dom, cod;
    WMorphism mor;
  };
  std::map<std::string, MorRec> morphisms;

  std::string results = "{}";  // JSON object, merged verbatim on emission
};

// Throws Errc::Parse on malformed JSON, unresolved references, shape or
// literal errors.
Document parse_document(const std::string& text);

// Canonical form: UTF-8, keys sorted, two-space indent, newline-terminated.
std::string emit_document(const Document& doc);

// Returns the name of an existing equal object, or inserts the object under
// `hint` (uniquified with numeric suffixes if taken by a different object).
std::string ensure_object(Document& doc, const std::string& hint, const WObject& obj);

// Registers a morphism, ensuring its dom/cod objects exist. Errc::Parse if
// the name is taken by a different morphism.
void add_morphism(Document& doc, const std::string& name, const WMorphism& mor);

// Inserts a key into the "results" section.
void add_result(Document& doc, const std::string& key, const std::string& raw_json_value);

const WMorphism& find_morphism(const Document& doc, const std::string& name);

}  // namespace starcat
