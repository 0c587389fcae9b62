#pragma once

#include <functional>
#include <string>

#include "starcat/dilation.hpp"
#include "starcat/document.hpp"

namespace starcat {

struct GenConfig {
  RingId ring = RingId::Rational;
  uint64_t seed = 1;
  int cases = 50;
  int max_dim = 5;
  int numerator_bound = 3;
  int denominator_bound = 2;
  int ratfun_degree_bound = 1;
};
void validate(const GenConfig& cfg);  // bounds >= 1, cases/max_dim >= 0

// splitmix64; generation is a pure function of (config, law name, case index)
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}
  uint64_t next();
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t s_;
};

Rng case_rng(const GenConfig& cfg, std::string_view law, uint64_t index);

Rat gen_rat(Rng& rng, const GenConfig& cfg);
Scalar gen_scalar(Rng& rng, const GenConfig& cfg);
Scalar gen_weight(Rng& rng, const GenConfig& cfg);
Column gen_column(Rng& rng, const GenConfig& cfg, const WObject& x);
WObject gen_object(Rng& rng, const GenConfig& cfg, int min_dim = 0);
WObject gen_object_dim(Rng& rng, const GenConfig& cfg, int dim);
Mat gen_mat(Rng& rng, const GenConfig& cfg, int rows, int cols);
WMorphism gen_morphism(Rng& rng, const GenConfig& cfg);
WMorphism gen_morphism_between(Rng& rng, const GenConfig& cfg, const WObject& dom, const WObject& cod);
WMorphism gen_mono_into(Rng& rng, const GenConfig& cfg, const WObject& cod, int dom_dim);
WMorphism gen_isometry(Rng& rng, const GenConfig& cfg);
WMorphism gen_isometry_into(Rng& rng, const GenConfig& cfg, const WObject& cod, int dom_dim);
// varied isometry with the given domain: a unitary applied to a block embedding
WMorphism gen_isometry_from(Rng& rng, const GenConfig& cfg, const WObject& dom);
// unitary out of the given object (the adjoint of an orthogonalized basis)
WMorphism gen_unitary_from(Rng& rng, const GenConfig& cfg, const WObject& dom);
WMorphism gen_contraction(Rng& rng, const GenConfig& cfg);
WMorphism gen_contraction_between(Rng& rng, const GenConfig& cfg, const WObject& dom, const WObject& cod);
WMorphism gen_strict_contraction(Rng& rng, const GenConfig& cfg);
WMorphism gen_positive(Rng& rng, const GenConfig& cfg);  // G*G on a random object
WMorphism gen_positive_on(Rng& rng, const GenConfig& cfg, const WObject& x);
WMorphism gen_strictly_positive_on(Rng& rng, const GenConfig& cfg, const WObject& x);  // 1 + G*G
WMorphism gen_hermitian(Rng& rng, const GenConfig& cfg);  // M + M*
WideCospan gen_split_cospan(Rng& rng, const GenConfig& cfg);

// spec-level pure wrappers: value determined by (config, case index)
WMorphism gen_matrix(const GenConfig& cfg, uint64_t case_index, int rows, int cols);
WMorphism gen_isometry(const GenConfig& cfg, uint64_t case_index);
WMorphism gen_contraction(const GenConfig& cfg, uint64_t case_index);
WMorphism gen_positive(const GenConfig& cfg, uint64_t case_index);
WideCospan gen_split_cospan(const GenConfig& cfg, uint64_t case_index);

// Records the data a law touches so the first failure can be replayed from a
// serialized document.
class CaseRecorder {
 public:
  explicit CaseRecorder(RingId ring) { doc_.ring = ring; }
  void mor(const std::string& name, const WMorphism& f) { add_morphism(doc_, name, f); }
  void obj(const std::string& name, const WObject& x) { ensure_object(doc_, name, x); }
  void scal(const std::string& name, const Scalar& s);
  void check(bool ok, const std::string& what);
  bool failed() const { return failed_; }
  std::string serialize() const;

 private:
  Document doc_;
  bool failed_ = false;
  std::string what_;
};

using LawBody = std::function<void(Rng&, const GenConfig&, CaseRecorder&)>;

struct LawResult {
  std::string name;
  int pass = 0;
  int fail = 0;
  std::string counterexample;  // document JSON of the first failing case
};

struct LawReport {
  GenConfig cfg;
  std::vector<LawResult> laws;
  int failures = 0;
  long elapsed_ms = 0;
};

// Runs one law body over `cfg.cases` cases. A failing case never throws; all
// laws run and report.
LawResult run_law(const std::string& name, const GenConfig& cfg, const LawBody& body);

// The full suite: scalar, core, factorization, Gram-Schmidt, order, dilation
// laws plus the R1-R4/H1-H4 axiom checks.
LawReport run_laws(const GenConfig& cfg);

std::vector<std::pair<std::string, LawBody>> law_table();

std::string law_report_json(const LawReport& report);

}  // namespace starcat
