#include "starcat/harness.hpp"

#include <chrono>

#include <json.hpp>

namespace starcat {

void validate(const GenConfig& cfg) {
  require(cfg.cases >= 0 && cfg.max_dim >= 0, Errc::PreconditionFailed, "negative cases or max_dim");
  require(cfg.numerator_bound >= 1 && cfg.denominator_bound >= 1 && cfg.ratfun_degree_bound >= 1,
          Errc::PreconditionFailed, "generator bounds must be >= 1");
}

uint64_t Rng::next() {
  s_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr int kRetries = 64;

}  // namespace

Rng case_rng(const GenConfig& cfg, std::string_view law, uint64_t index) {
  uint64_t mix = cfg.seed;
  mix = mix * 0x100000001b3ull ^ fnv1a(law);
  mix = mix * 0x100000001b3ull ^ (index + 0x9e3779b97f4a7c15ull);
  return Rng(mix);
}

Rat gen_rat(Rng& rng, const GenConfig& cfg) {
  long num = rng.int_in(-cfg.numerator_bound, cfg.numerator_bound);
  long den = rng.int_in(1, cfg.denominator_bound);
  return Rat(num, den);
}

namespace {

Rat gen_nonzero_rat(Rng& rng, const GenConfig& cfg) {
  for (int i = 0; i < kRetries; ++i) {
    Rat r = gen_rat(rng, cfg);
    if (!r.is_zero()) return r;
  }
  return Rat(1);
}

Poly gen_poly(Rng& rng, const GenConfig& cfg, int max_degree) {
  std::vector<Rat> coeffs;
  int deg = static_cast<int>(rng.int_in(0, max_degree));
  for (int i = 0; i <= deg; ++i) coeffs.push_back(gen_rat(rng, cfg));
  return Poly(std::move(coeffs));
}

}  // namespace

Scalar gen_scalar(Rng& rng, const GenConfig& cfg) {
  switch (cfg.ring) {
    case RingId::Rational:
      return Scalar::rational(gen_rat(rng, cfg));
    case RingId::Gaussian:
      return Scalar::gaussian(gen_rat(rng, cfg), gen_rat(rng, cfg));
    case RingId::Quaternion:
      return Scalar::quaternion(gen_rat(rng, cfg), gen_rat(rng, cfg), gen_rat(rng, cfg), gen_rat(rng, cfg));
    case RingId::RatFun: {
      Poly num = gen_poly(rng, cfg, cfg.ratfun_degree_bound);
      // denominators stay rare and tiny to keep elimination degrees low
      if (rng.below(4) == 0) {
        Poly den = Poly::x() + Poly::constant(gen_nonzero_rat(rng, cfg));
        return Scalar::ratfun(num, den);
      }
      return Scalar::ratfun(num, Poly::constant(Rat(1)));
    }
  }
  fail(Errc::Parse, "bad ring id");
}

Scalar gen_weight(Rng& rng, const GenConfig& cfg) {
  // a*a for nonzero a is a nonzero positive Hermitian element in any of the rings
  Scalar a = Scalar::zero(cfg.ring);
  switch (cfg.ring) {
    case RingId::Rational:
      a = Scalar::rational(gen_nonzero_rat(rng, cfg));
      break;
    case RingId::Gaussian: {
      Rat re = gen_rat(rng, cfg);
      Rat im = re.is_zero() ? Rat(1) : gen_rat(rng, cfg);
      a = Scalar::gaussian(re, im);
      break;
    }
    case RingId::Quaternion: {
      Rat x = gen_nonzero_rat(rng, cfg);
      a = Scalar::quaternion(gen_rat(rng, cfg), x, gen_rat(rng, cfg), gen_rat(rng, cfg));
      break;
    }
    case RingId::RatFun: {
      Rat c = gen_nonzero_rat(rng, cfg);
      switch (rng.below(3)) {
        case 0:
          a = Scalar::from_rational(RingId::RatFun, c);
          break;
        case 1:
          a = Scalar::ratfun(Poly::x().scaled(c), Poly::constant(Rat(1)));
          break;
        default:
          a = Scalar::ratfun(Poly::constant(c), Poly::x());
          break;
      }
      break;
    }
  }
  return mul(star(a), a);
}

Column gen_column(Rng& rng, const GenConfig& cfg, const WObject& x) {
  Column out;
  out.reserve(static_cast<size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) out.push_back(gen_scalar(rng, cfg));
  return out;
}

WObject gen_object_dim(Rng& rng, const GenConfig& cfg, int dim) {
  std::vector<Scalar> weights;
  weights.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) weights.push_back(gen_weight(rng, cfg));
  return WObject(cfg.ring, std::move(weights));
}

WObject gen_object(Rng& rng, const GenConfig& cfg, int min_dim) {
  return gen_object_dim(rng, cfg, static_cast<int>(rng.int_in(min_dim, cfg.max_dim)));
}

Mat gen_mat(Rng& rng, const GenConfig& cfg, int rows, int cols) {
  Mat m(cfg.ring, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, gen_scalar(rng, cfg));
  return m;
}

WMorphism gen_morphism(Rng& rng, const GenConfig& cfg) {
  WObject dom = gen_object(rng, cfg);
  WObject cod = gen_object(rng, cfg);
  return WMorphism(dom, cod, gen_mat(rng, cfg, cod.dim(), dom.dim()));
}

WMorphism gen_morphism_between(Rng& rng, const GenConfig& cfg, const WObject& dom, const WObject& cod) {
  return WMorphism(dom, cod, gen_mat(rng, cfg, cod.dim(), dom.dim()));
}

WMorphism gen_mono_into(Rng& rng, const GenConfig& cfg, const WObject& cod, int dom_dim) {
  require(dom_dim <= cod.dim(), Errc::GenerationFailed, "mono domain larger than codomain");
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Mat m = gen_mat(rng, cfg, cod.dim(), dom_dim);
    if (rank(m) == dom_dim) return WMorphism(gen_object_dim(rng, cfg, dom_dim), cod, std::move(m));
  }
  fail(Errc::GenerationFailed, "could not sample a full-column-rank matrix");
}

WMorphism gen_isometry_into(Rng& rng, const GenConfig& cfg, const WObject& cod, int dom_dim) {
  require(dom_dim <= cod.dim(), Errc::GenerationFailed, "isometry domain larger than codomain");
  if (dom_dim == 0) return WMorphism(zero_object(cfg.ring), cod, Mat(cfg.ring, cod.dim(), 0));
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Mat m = gen_mat(rng, cfg, cod.dim(), dom_dim);
    if (rank(m) != dom_dim) continue;
    std::vector<Column> cols;
    for (int c = 0; c < dom_dim; ++c) cols.push_back(m.col(c));
    return isometry_from_columns(orthogonalize_columns(cols, cod), cod);
  }
  fail(Errc::GenerationFailed, "could not sample an isometry");
}

WMorphism gen_isometry(Rng& rng, const GenConfig& cfg) {
  WObject cod = gen_object(rng, cfg);
  int dom_dim = static_cast<int>(rng.int_in(0, cod.dim()));
  return gen_isometry_into(rng, cfg, cod, dom_dim);
}

WMorphism gen_unitary_from(Rng& rng, const GenConfig& cfg, const WObject& dom) {
  return adjoint(gen_isometry_into(rng, cfg, dom, dom.dim()));
}

WMorphism gen_isometry_from(Rng& rng, const GenConfig& cfg, const WObject& dom) {
  WObject pad = gen_object(rng, cfg);
  Biproduct bp = biproduct(dom, pad);
  return compose(gen_unitary_from(rng, cfg, bp.apex), bp.i1);
}

WMorphism gen_contraction(Rng& rng, const GenConfig& cfg) {
  WMorphism f = gen_morphism(rng, cfg);
  return bounded_transform(f, compose(adjoint(f), f)).c;
}

WMorphism gen_contraction_between(Rng& rng, const GenConfig& cfg, const WObject& dom, const WObject& cod) {
  WMorphism f = gen_morphism_between(rng, cfg, dom, cod);
  return bounded_transform(f, compose(adjoint(f), f)).c;
}

WMorphism gen_strict_contraction(Rng& rng, const GenConfig& cfg) {
  WMorphism c = gen_contraction(rng, cfg);
  long den = rng.int_in(2, 4);
  return rational_scale(c, Rat(rng.int_in(1, den - 1), den));
}

WMorphism gen_positive_on(Rng& rng, const GenConfig& cfg, const WObject& x) {
  WObject mid = gen_object(rng, cfg);
  WMorphism g = gen_morphism_between(rng, cfg, x, mid);
  return compose(adjoint(g), g);
}

WMorphism gen_positive(Rng& rng, const GenConfig& cfg) {
  return gen_positive_on(rng, cfg, gen_object(rng, cfg));
}

WMorphism gen_strictly_positive_on(Rng& rng, const GenConfig& cfg, const WObject& x) {
  return add(identity(x), gen_positive_on(rng, cfg, x));
}

WMorphism gen_hermitian(Rng& rng, const GenConfig& cfg) {
  WObject x = gen_object(rng, cfg);
  WMorphism m = gen_morphism_between(rng, cfg, x, x);
  return add(m, adjoint(m));
}

WideCospan gen_split_cospan(Rng& rng, const GenConfig& cfg) {
  WObject apex = gen_object(rng, cfg);
  int legs = static_cast<int>(rng.int_in(1, 3));
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<int> dims;
    int remaining = apex.dim();
    for (int i = 0; i < legs; ++i) {
      int d = static_cast<int>(rng.int_in(0, remaining));
      dims.push_back(d);
      remaining -= d;
    }
    std::vector<WMorphism> ls;
    for (int d : dims) ls.push_back(gen_morphism_between(rng, cfg, gen_object_dim(rng, cfg, d), apex));
    WideCospan c = make_wide_cospan(std::move(ls));
    if (is_split(c).has_value()) return c;
  }
  fail(Errc::GenerationFailed, "could not sample a split cospan");
}

WMorphism gen_matrix(const GenConfig& cfg, uint64_t case_index, int rows, int cols) {
  Rng rng = case_rng(cfg, "gen_matrix", case_index);
  WObject dom = gen_object_dim(rng, cfg, cols);
  WObject cod = gen_object_dim(rng, cfg, rows);
  return WMorphism(dom, cod, gen_mat(rng, cfg, rows, cols));
}

WMorphism gen_isometry(const GenConfig& cfg, uint64_t case_index) {
  Rng rng = case_rng(cfg, "gen_isometry", case_index);
  return gen_isometry(rng, cfg);
}

WMorphism gen_contraction(const GenConfig& cfg, uint64_t case_index) {
  Rng rng = case_rng(cfg, "gen_contraction", case_index);
  return gen_contraction(rng, cfg);
}

WMorphism gen_positive(const GenConfig& cfg, uint64_t case_index) {
  Rng rng = case_rng(cfg, "gen_positive", case_index);
  return gen_positive(rng, cfg);
}

WideCospan gen_split_cospan(const GenConfig& cfg, uint64_t case_index) {
  Rng rng = case_rng(cfg, "gen_split_cospan", case_index);
  return gen_split_cospan(rng, cfg);
}

void CaseRecorder::scal(const std::string& name, const Scalar& s) {
  WObject unit = WObject::unit(s.ring(), 1);
  Mat m(s.ring(), 1, 1);
  m.set(0, 0, s);
  mor(name, WMorphism(unit, unit, std::move(m)));
}

void CaseRecorder::check(bool ok, const std::string& what) {
  if (ok || failed_) return;
  failed_ = true;
  what_ = what;
}

std::string CaseRecorder::serialize() const {
  Document doc = doc_;
  add_result(doc, "law_failure", "\"" + what_ + "\"");
  return emit_document(doc);
}

LawResult run_law(const std::string& name, const GenConfig& cfg, const LawBody& body) {
  validate(cfg);
  LawResult out;
  out.name = name;
  for (int i = 0; i < cfg.cases; ++i) {
    Rng rng = case_rng(cfg, name, static_cast<uint64_t>(i));
    CaseRecorder rec(cfg.ring);
    try {
      body(rng, cfg, rec);
    } catch (const std::exception& e) {
      rec.check(false, std::string("exception: ") + e.what());
    }
    if (rec.failed()) {
      if (out.fail == 0) out.counterexample = rec.serialize();
      ++out.fail;
    } else {
      ++out.pass;
    }
  }
  return out;
}

namespace laws {

void scalar_involution(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  Scalar a = gen_scalar(rng, cfg);
  Scalar b = gen_scalar(rng, cfg);
  rec.scal("a", a);
  rec.scal("b", b);
  rec.check(star(star(a)) == a, "(a*)* != a");
  rec.check(star(mul(a, b)) == mul(star(b), star(a)), "(ab)* != b*a*");
  rec.check(star(add(a, b)) == add(star(a), star(b)), "(a+b)* != a*+b*");
  rec.check(star(Scalar::one(cfg.ring)) == Scalar::one(cfg.ring), "1* != 1");
}

void scalar_anisotropy(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  Scalar a = gen_scalar(rng, cfg);
  rec.scal("a", a);
  if (!a.is_zero()) rec.check(!mul(star(a), a).is_zero(), "a*a = 0 with a != 0");
}

void scalar_squares_positive(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  Scalar a = gen_scalar(rng, cfg);
  rec.scal("a", a);
  rec.check(is_positive_scalar(mul(star(a), a)), "a*a not in the cone");
}

void scalar_trichotomy(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  Scalar a = gen_scalar(rng, cfg);
  Scalar h = add(a, star(a));
  rec.scal("h", h);
  int count = (h.is_zero() ? 1 : 0) + (!h.is_zero() && is_positive_scalar(h) ? 1 : 0) +
              (!h.is_zero() && is_positive_scalar(neg(h)) ? 1 : 0);
  rec.check(count == 1, "Hermitian trichotomy fails");
}

void core_involution(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism g = gen_morphism_between(rng, cfg, f.cod(), gen_object(rng, cfg));
  rec.mor("f", f);
  rec.mor("g", g);
  rec.check(adjoint(adjoint(f)) == f, "(f*)* != f");
  rec.check(adjoint(compose(g, f)) == compose(adjoint(f), adjoint(g)), "(gf)* != f*g*");
  rec.check(adjoint(identity(f.dom())) == identity(f.dom()), "id* != id");
}

void core_star_addition(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism g = gen_morphism_between(rng, cfg, f.dom(), f.cod());
  rec.mor("f", f);
  rec.mor("g", g);
  rec.check(adjoint(add(f, g)) == add(adjoint(f), adjoint(g)), "(f+g)* != f*+g*");
}

void core_adjoint_inner_product(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  Column x = gen_column(rng, cfg, f.dom());
  Column y = gen_column(rng, cfg, f.cod());
  rec.mor("f", f);
  WMorphism fs = adjoint(f);
  Column fx(static_cast<size_t>(f.cod().dim()), Scalar::zero(cfg.ring));
  for (int r = 0; r < f.cod().dim(); ++r)
    for (int c = 0; c < f.dom().dim(); ++c)
      fx[static_cast<size_t>(r)] = fx[static_cast<size_t>(r)] + f.mat().at(r, c) * x[static_cast<size_t>(c)];
  Column fsy(static_cast<size_t>(f.dom().dim()), Scalar::zero(cfg.ring));
  for (int r = 0; r < f.dom().dim(); ++r)
    for (int c = 0; c < f.cod().dim(); ++c)
      fsy[static_cast<size_t>(r)] = fsy[static_cast<size_t>(r)] + fs.mat().at(r, c) * y[static_cast<size_t>(c)];
  rec.check(inner_product(fsy, x, f.dom()) == inner_product(y, fx, f.cod()),
            "<f*y, x> != <y, fx>");
}

void core_biproduct(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject x = gen_object(rng, cfg);
  WObject y = gen_object(rng, cfg);
  Biproduct bp = biproduct(x, y);
  rec.obj("X", x);
  rec.obj("Y", y);
  rec.check(compose(bp.p1, bp.i1) == identity(x), "i1*i1 != 1");
  rec.check(compose(bp.p2, bp.i2) == identity(y), "i2*i2 != 1");
  rec.check(compose(bp.p2, bp.i1) == zero_morphism(x, y), "i2*i1 != 0");
  rec.check(add(compose(bp.i1, bp.p1), compose(bp.i2, bp.p2)) == identity(bp.apex),
            "i1i1* + i2i2* != 1");
}

void core_matrix_anisotropy(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  rec.mor("f", f);
  if (!f.mat().is_zero())
    rec.check(!compose(adjoint(f), f).mat().is_zero(), "f*f = 0 with f != 0");
}

void core_sum_formula(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism g = gen_morphism_between(rng, cfg, f.dom(), f.cod());
  rec.mor("f", f);
  rec.mor("g", g);
  WMorphism via_blocks = compose(codiagonal(f.cod()), compose(direct_sum(f, g), diagonal(f.dom())));
  rec.check(add(f, g) == via_blocks, "f+g != nabla (f (+) g) Delta");
}

void core_q_linearity(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism g = gen_morphism_between(rng, cfg, f.cod(), gen_object(rng, cfg));
  Rat q = gen_rat(rng, cfg);
  rec.mor("f", f);
  rec.mor("g", g);
  rec.check(rational_scale(compose(g, f), q) == compose(rational_scale(g, q), f),
            "(g q) f != (g f) q");
  rec.check(rational_scale(compose(g, f), q) == compose(g, rational_scale(f, q)),
            "g (f q) != (g f) q");
  rec.check(adjoint(rational_scale(f, q)) == rational_scale(adjoint(f), q), "(f q)* != f* q");
}

// orthogonal (non-orthonormal) coproduct of closed monos, by Gram-Schmidt
std::vector<WMorphism> orthogonal_decomposition(Rng& rng, const GenConfig& cfg, const WObject& apex) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<int> dims;
    int remaining = apex.dim();
    while (remaining > 0) {
      int d = static_cast<int>(rng.int_in(1, remaining));
      dims.push_back(d);
      remaining -= d;
    }
    if (dims.empty()) dims.push_back(0);
    std::vector<WMorphism> ls;
    for (int d : dims) ls.push_back(gen_morphism_between(rng, cfg, gen_object_dim(rng, cfg, d), apex));
    WideCospan c = make_wide_cospan(std::move(ls));
    if (rank(copairing(c.legs).mat()) != apex.dim()) continue;
    return gram_schmidt(c).legs;
  }
  fail(Errc::GenerationFailed, "could not sample a coproduct cospan");
}

void core_block_adjoint_orthogonal(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 4);
  WObject xapex = gen_object(rng, small);
  WObject yapex = gen_object(rng, small);
  std::vector<WMorphism> xs = orthogonal_decomposition(rng, small, xapex);
  std::vector<WMorphism> ys = orthogonal_decomposition(rng, small, yapex);
  WMorphism f = gen_morphism_between(rng, small, xapex, yapex);
  rec.mor("f", f);
  WMorphism fs = adjoint(f);
  for (size_t j = 0; j < xs.size(); ++j) {
    WMorphism rj = canonical_retraction(xs[j]);
    for (size_t k = 0; k < ys.size(); ++k) {
      WMorphism rk = canonical_retraction(ys[k]);
      WMorphism lhs = compose(rj, compose(fs, ys[k]));
      WMorphism gram_j = invert(compose(adjoint(xs[j]), xs[j]));
      WMorphism gram_k = compose(adjoint(ys[k]), ys[k]);
      WMorphism rhs = compose(gram_j, compose(adjoint(compose(rk, compose(f, xs[j]))), gram_k));
      rec.check(lhs == rhs, "orthogonal block adjoint formula fails at (" + std::to_string(j) +
                                "," + std::to_string(k) + ")");
      if (rec.failed()) return;
    }
  }
}

void fact_kernel(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism k = kernel(f);
  rec.mor("f", f);
  rec.mor("k", k);
  rec.check(compose(f, k) == zero_morphism(k.dom(), f.cod()), "f k != 0");
  rec.check(compose(adjoint(k), k) == identity(k.dom()), "kernel is not isometric");
}

void fact_kernel_universal(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism k = kernel(f);
  WMorphism w = gen_morphism_between(rng, cfg, gen_object(rng, cfg), k.dom());
  WMorphism g = compose(k, w);
  rec.mor("f", f);
  rec.mor("g", g);
  rec.check(compose(f, g) == zero_morphism(g.dom(), f.cod()), "generated g with f g != 0");
  std::optional<Mat> lift = solve_left(k.mat(), g.mat());
  rec.check(lift.has_value(), "g with f g = 0 does not factor through the kernel");
  if (!lift) return;
  WMorphism h(g.dom(), k.dom(), *lift);
  rec.check(compose(k, h) == g, "kernel lift does not recompose");
  rec.check(h == w, "kernel lift is not unique");
}

void fact_cokernel(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism q = cokernel(f);
  rec.mor("f", f);
  rec.mor("q", q);
  rec.check(compose(q, f) == zero_morphism(f.dom(), q.cod()), "q f != 0");
  rec.check(compose(q, adjoint(q)) == identity(q.cod()), "cokernel is not coisometric");
}

void fact_complement_splitting(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism s = gen_isometry(rng, cfg);
  WMorphism sp = orthogonal_complement(s);
  rec.mor("s", s);
  rec.mor("s_perp", sp);
  WMorphism joint = copairing(s, sp);
  rec.check(classify(joint).unitary, "[s s_perp] is not unitary");
  WMorphism projs = add(compose(s, adjoint(s)), compose(sp, adjoint(sp)));
  rec.check(projs == identity(s.cod()), "s s* + s_perp s_perp* != 1");
}

void fact_orthogonal_coproduct_extension(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 4);
  WObject apex = gen_object(rng, small);
  std::vector<WMorphism> ts = orthogonal_decomposition(rng, small, apex);
  WMorphism sum = zero_morphism(apex, apex);
  for (size_t k = 0; k < ts.size(); ++k) {
    rec.mor("t" + std::to_string(k), ts[k]);
    WMorphism rk = canonical_retraction(ts[k]);
    for (size_t j = 0; j < ts.size(); ++j) {
      WMorphism prod = compose(rk, ts[j]);
      if (j == k)
        rec.check(prod == identity(ts[k].dom()), "r_k t_k != 1");
      else
        rec.check(prod == zero_morphism(ts[j].dom(), ts[k].dom()), "r_k t_j != 0");
    }
    sum = add(sum, compose(ts[k], rk));
  }
  rec.check(sum == identity(apex), "sum t_k r_k != 1");
}

void fact_complement_inequations(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject cod = gen_object(rng, cfg);
  WMorphism m = gen_mono_into(rng, cfg, cod, static_cast<int>(rng.int_in(0, cod.dim())));
  rec.mor("m", m);
  WMorphism p1 = orthogonal_complement(m);
  WMorphism p2 = orthogonal_complement(p1);
  WMorphism p3 = orthogonal_complement(p2);
  rec.check(solve_left(p2.mat(), m.mat()).has_value(), "m does not factor through m_perp_perp");
  rec.check(same_subobject(p3, p1), "m_perp_perp_perp is not m_perp");
}

void fact_abelian_objects(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject x = gen_object(rng, cfg);
  rec.obj("X", x);
  WMorphism delta = diagonal(x);
  WMorphism r = cokernel(delta);
  WMorphism s = adjoint(r);  // a section: r is coisometric
  rec.check(compose(r, s) == identity(r.cod()), "cokernel section fails");
  WMorphism e = compose(s, r);
  Biproduct bp = biproduct(x, x);
  WMorphism expr = add(identity(x),
                       add(compose(bp.p1, compose(e, bp.i2)), compose(bp.p2, compose(e, bp.i1))));
  rec.check(expr == zero_morphism(x, x), "1 + p1 e i2 + p2 e i1 != 0");
}

void fact_pushout_split_mono(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject x = gen_object(rng, cfg);
  WMorphism s = gen_mono_into(rng, cfg, x, static_cast<int>(rng.int_in(0, x.dim())));
  WMorphism a = gen_morphism_between(rng, cfg, s.dom(), gen_object(rng, cfg));
  rec.mor("s", s);
  rec.mor("a", a);
  WMorphism w = pairing(s, negate(a));
  WMorphism q = cokernel(w);
  Biproduct bp = biproduct(x, a.cod());
  WMorphism leg_x = compose(q, bp.i1);
  WMorphism leg_a = compose(q, bp.i2);
  rec.check(compose(leg_x, s) == compose(leg_a, a), "pushout square does not commute");
  Extension retr = solve_extension(identity(a.cod()), leg_a);
  rec.check(compose(retr.h, leg_a) == identity(a.cod()), "pushout of a split mono is not split");
}

void fact_range_factorization(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  RangeFactorization rf = range_factorization(f);
  rec.mor("f", f);
  rec.mor("j", rf.j);
  rec.mor("u", rf.u);
  rec.mor("e", rf.e);
  rec.check(compose(rf.j, compose(rf.u, rf.e)) == f, "j u e != f");
  rec.check(compose(adjoint(rf.j), rf.j) == identity(rf.j.dom()), "j is not isometric");
  rec.check(compose(rf.e, adjoint(rf.e)) == identity(rf.e.cod()), "e is not coisometric");
  rec.check(invert_mat(rf.u.mat()).has_value(), "u is not invertible");
}

void fact_classify_implications(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = rng.coin() ? gen_morphism(rng, cfg) : gen_isometry(rng, cfg);
  rec.mor("f", f);
  MorphismClass c = classify(f);
  rec.check(!c.unitary || (c.isometry && c.coisometry), "unitary without isometry+coisometry");
  rec.check(!c.isometry || c.closed_mono, "isometry that is not a closed mono");
  rec.check(!c.closed_mono || c.split_mono, "closed mono that is not split");
  rec.check(!c.split_mono || c.mono, "split mono that is not mono");
  rec.check(!c.isometry || c.partial_isometry, "isometry that is not a partial isometry");
}

void gs_orthogonal_closed(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WideCospan c = gen_split_cospan(rng, cfg);
  WideCospan t = gram_schmidt(c);
  for (size_t i = 0; i < t.legs.size(); ++i) {
    rec.mor("s" + std::to_string(i), c.legs[i]);
    rec.mor("t" + std::to_string(i), t.legs[i]);
  }
  for (size_t i = 0; i < t.legs.size(); ++i) {
    rec.check(invert_mat(compose(adjoint(t.legs[i]), t.legs[i]).mat()).has_value(),
              "output leg is not a closed mono");
    for (size_t j = 0; j < i; ++j)
      rec.check(compose(adjoint(t.legs[j]), t.legs[i]) ==
                    zero_morphism(t.legs[i].dom(), t.legs[j].dom()),
                "output legs are not orthogonal");
  }
}

void gs_prefix_union(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WideCospan c = gen_split_cospan(rng, cfg);
  WideCospan t = gram_schmidt(c);
  for (size_t m = 1; m <= c.legs.size(); ++m) {
    std::vector<WMorphism> sp(c.legs.begin(), c.legs.begin() + static_cast<long>(m));
    std::vector<WMorphism> tp(t.legs.begin(), t.legs.begin() + static_cast<long>(m));
    rec.check(same_subobject(copairing(sp), copairing(tp)),
              "prefix union differs at m = " + std::to_string(m));
  }
}

void gs_idempotent(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WideCospan c = gen_split_cospan(rng, cfg);
  WideCospan once = gram_schmidt(c);
  WideCospan twice = gram_schmidt(once);
  for (size_t i = 0; i < once.legs.size(); ++i)
    rec.check(once.legs[i] == twice.legs[i], "gram_schmidt is not idempotent");
}

void gs_coproduct_invertible(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 4);
  WObject apex = gen_object(rng, small);
  std::vector<WMorphism> ts = orthogonal_decomposition(rng, small, apex);
  rec.obj("apex", apex);
  rec.check(invert_mat(copairing(ts).mat()).has_value(),
            "orthogonalized coproduct block is not invertible");
}

void gs_gram_roundtrip(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 4);
  WObject w = gen_object(rng, small);
  int n = w.dim();
  Mat basis(cfg.ring, n, n);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    basis = gen_mat(rng, small, n, n);
    if (invert_mat(basis).has_value()) break;
  }
  Mat g(cfg.ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.set(i, j, inner_product(basis.col(i), basis.col(j), w));
  GramDiagonalization d = orthogonalize_gram(GramMatrix(cfg.ring, g));
  rec.obj("weights", d.object);
  Mat conj = mat_mul(mat_dagger(d.basis_change), mat_mul(g, d.basis_change));
  Mat expected(cfg.ring, n, n);
  for (int i = 0; i < n; ++i) expected.set(i, i, inv(d.object.weight(i)));
  rec.check(conj == expected, "conjugated Gram matrix is not the diagonal of weight inverses");
}

void order_certificate(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism h = rng.coin() ? gen_hermitian(rng, cfg) : gen_positive(rng, cfg);
  rec.mor("H", h);
  PositivityVerdict v = is_positive_endo(h);
  rec.check(verify_verdict(h, v), "positivity certificate does not re-verify");
}

void order_axioms(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject x = gen_object(rng, cfg);
  rec.check(le(zero_morphism(x, x), identity(x)), "0 <= 1 fails");
  WMorphism a = gen_hermitian(rng, cfg);
  WMorphism b = add(a, gen_positive_on(rng, cfg, a.dom()));
  WObject dom = gen_object(rng, cfg);
  WMorphism r = gen_morphism_between(rng, cfg, dom, a.dom());
  WMorphism cc = gen_morphism_between(rng, cfg, dom, dom);
  WMorphism c = add(cc, adjoint(cc));
  rec.mor("a", a);
  rec.mor("b", b);
  rec.mor("r", r);
  rec.mor("c", c);
  WMorphism lhs = add(compose(adjoint(r), compose(a, r)), c);
  WMorphism rhs = add(compose(adjoint(r), compose(b, r)), c);
  rec.check(le(lhs, rhs), "a <= b but r*ar + c <= r*br + c fails");
}

void order_inverse_closure(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject x = gen_object(rng, cfg);
  WMorphism b = gen_strictly_positive_on(rng, cfg, x);
  WMorphism a = add(b, gen_positive_on(rng, cfg, x));
  rec.mor("a", a);
  rec.mor("b", b);
  WMorphism a_inv = invert(a);  // throws if inverse closure fails
  rec.check(compose(a, a_inv) == identity(x), "a a^{-1} != 1");
  rec.check(is_strictly_positive(a_inv), "inverse of a strictly positive morphism is not strictly positive");
}

void order_antisymmetry(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism a = gen_hermitian(rng, cfg);
  WMorphism p = gen_positive_on(rng, cfg, a.dom());
  WMorphism b = add(a, p);
  rec.mor("a", a);
  rec.mor("b", b);
  rec.check(le(a, b), "a <= a + p fails");
  bool reversed = le(b, a);
  rec.check(reversed == (p == zero_morphism(a.dom(), a.dom())), "le(b, a) inconsistent with p = 0");
  if (reversed) rec.check(a == b, "antisymmetry fails");
}

void order_schur(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 4);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    WObject xa = gen_object(rng, small);
    WObject xb = gen_object(rng, small);
    WMorphism a = gen_strictly_positive_on(rng, small, xa);
    WMorphism b = gen_strictly_positive_on(rng, small, xb);
    WMorphism f = gen_morphism_between(rng, small, xa, xb);
    WMorphism mid = sub(a, compose(adjoint(f), compose(invert(b), f)));
    if (!invert_mat(mid.mat()).has_value()) continue;
    WMorphism direct = sub(b, compose(f, compose(invert(a), adjoint(f))));
    if (!invert_mat(direct.mat()).has_value()) continue;
    rec.mor("a", a);
    rec.mor("b", b);
    rec.mor("f", f);
    rec.check(schur_inverse(a, b, f) == invert(direct), "Schur inverse identity fails");
    return;
  }
  fail(Errc::GenerationFailed, "could not sample an admissible Schur triple");
}

void order_contraction_closure(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_contraction(rng, cfg);
  WMorphism g = gen_contraction_between(rng, cfg, f.cod(), gen_object(rng, cfg));
  rec.mor("f", f);
  rec.mor("g", g);
  rec.check(is_contraction(f) && is_contraction(g), "generated contraction fails its predicate");
  rec.check(is_contraction(compose(g, f)), "composite of contractions is not contractive");
  rec.check(is_contraction(adjoint(f)), "adjoint of a contraction is not contractive");
}

void order_split_mono_contraction(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism s = gen_isometry(rng, cfg);
  if (rng.coin()) {
    WObject cod = gen_object(rng, cfg);
    s = gen_mono_into(rng, cfg, cod, static_cast<int>(rng.int_in(0, cod.dim())));
  }
  WMorphism r = canonical_retraction(s);
  if (!is_contraction(s) || !is_contraction(r)) return;  // not a split mono in Con
  rec.mor("s", s);
  rec.mor("r", r);
  rec.check(classify(s).isometry, "split mono in Con that is not isometric");
}

void order_positive_block(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 4);
  WMorphism f = rng.coin() ? gen_morphism(rng, small) : gen_strict_contraction(rng, small);
  rec.mor("f", f);
  WMorphism blk = block({{identity(f.dom()), adjoint(f)}, {f, identity(f.cod())}});
  rec.check(is_contraction(f) == is_positive_endo(blk).positive,
            "contraction iff positive block fails");
  bool strict = is_strict_contraction(f);
  rec.check(strict == is_strictly_positive(blk), "strict contraction iff strictly positive block fails");
  if (strict) {
    WMorphism gap_inv = invert(sub(identity(f.dom()), compose(adjoint(f), f)));
    WMorphism top_left = gap_inv;
    WMorphism top_right = negate(compose(gap_inv, adjoint(f)));
    WMorphism bottom_left = negate(compose(f, gap_inv));
    WMorphism bottom_right = add(identity(f.cod()), compose(f, compose(gap_inv, adjoint(f))));
    WMorphism inv_formula = block({{top_left, top_right}, {bottom_left, bottom_right}});
    rec.check(invert(blk) == inv_formula, "explicit block inverse formula fails");
  }
}

void dil_gram_identity(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_contraction(rng, cfg);
  CodilatorCertificate cert = codilator(f);
  rec.mor("f", f);
  rec.mor("s1", cert.codilation.s1);
  rec.mor("s2", cert.codilation.s2);
  WMorphism joint = copairing(cert.codilation.s1, cert.codilation.s2);
  WMorphism gram = compose(adjoint(joint), joint);
  WMorphism expected = block({{identity(f.dom()), adjoint(f)}, {f, identity(f.cod())}});
  rec.check(gram == expected, "codilation Gram identity fails");
}

Codilation conjugated_codilation(Rng& rng, const GenConfig& cfg, const CodilatorCertificate& cert) {
  const Codilation& c = cert.codilation;
  WMorphism u = gen_unitary_from(rng, cfg, c.apex());
  WObject pad = gen_object(rng, cfg);
  Biproduct bp = biproduct(u.cod(), pad);
  WMorphism embed = compose(bp.i1, u);
  return make_codilation(c.subject, compose(embed, c.s1), compose(embed, c.s2));
}

void dil_codilator_universal(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 3);
  WMorphism f = gen_contraction(rng, small);
  CodilatorCertificate cert = codilator(f);
  Codilation other = conjugated_codilation(rng, small, cert);
  rec.mor("f", f);
  rec.mor("t1", other.s1);
  rec.mor("t2", other.s2);
  WMorphism h = mediating_isometry(cert, other);
  rec.check(compose(h, cert.codilation.s1) == other.s1, "h s1 != t1");
  rec.check(compose(h, cert.codilation.s2) == other.s2, "h s2 != t2");
  rec.check(compose(adjoint(h), h) == identity(h.dom()), "mediator is not isometric");
}

void dil_strict_coproduct(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_strict_contraction(rng, cfg);
  CodilatorCertificate cert = codilator_strict(f);
  rec.mor("f", f);
  WMorphism joint = copairing(cert.codilation.s1, cert.codilation.s2);
  std::optional<Mat> inverse = invert_mat(joint.mat());
  rec.check(inverse.has_value(), "strict codilator copairing is not invertible");
  if (inverse)
    rec.check(mat_mul(*inverse, joint.mat()) == Mat::identity(cfg.ring, joint.dom().dim()),
              "copairing inverse does not certify the coproduct");
}

void dil_agreement(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 3);
  WMorphism f = gen_strict_contraction(rng, small);
  CodilatorCertificate a = codilator(f);
  CodilatorCertificate b = codilator_strict(f);
  rec.mor("f", f);
  WMorphism h1 = mediating_isometry(a, b.codilation);
  WMorphism h2 = mediating_isometry(b, a.codilation);
  rec.check(compose(h2, h1) == identity(a.codilation.apex()), "h2 h1 != 1");
  rec.check(compose(h1, h2) == identity(b.codilation.apex()), "h1 h2 != 1");
}

void dil_douglas_converse(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism h = gen_contraction(rng, cfg);
  WMorphism f = gen_morphism_between(rng, cfg, gen_object(rng, cfg), h.dom());
  WMorphism g = compose(h, f);
  rec.mor("h", h);
  rec.mor("f", f);
  rec.mor("g", g);
  rec.check(le(compose(adjoint(g), g), compose(adjoint(f), f)),
            "contractive extension exists but g*g <= f*f fails");
}

void dil_extensions(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 3);
  WMorphism f = gen_morphism(rng, small);
  WMorphism w = gen_isometry_from(rng, small, f.cod());
  WMorphism g = compose(w, f);  // g*g = f*f
  rec.mor("f", f);
  rec.mor("g", g);
  WMorphism h = douglas_extension(f, g);
  rec.mor("h", h);
  rec.check(compose(h, f) == g, "h f != g");
  rec.check(is_contraction(h), "canonical extension is not contractive");
  rec.check(classify(h).partial_isometry, "equal-Gram extension is not a partial isometry");
  RangeFactorization rh = range_factorization(h);
  RangeFactorization rg = range_factorization(g);
  rec.check(same_subobject(rh.j, rg.j), "(Ran h)^perp^perp != (Ran g)^perp^perp");
  WMorphism ker_h = kernel(h);
  WMorphism ran_f_perp = orthogonal_complement(range_factorization(f).j);
  rec.check(same_subobject(ker_h, ran_f_perp), "Ker h != (Ran f)^perp in the equal-Gram case");
}

void dil_pushout_universal(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  GenConfig small = cfg;
  small.max_dim = std::min(cfg.max_dim, 3);
  WObject a = gen_object(rng, small);
  WMorphism s = gen_isometry_from(rng, small, a);
  WMorphism t = gen_isometry_from(rng, small, a);
  rec.mor("s", s);
  rec.mor("t", t);
  IsometryPushout push = pushout_of_isometries(s, t);
  rec.check(compose(push.from_x, s) == compose(push.from_y, t), "pushout square does not commute");
  // cocone: p arbitrary, g built so that g t = p s
  WObject z = gen_object(rng, small);
  WMorphism p = gen_morphism_between(rng, small, s.cod(), z);
  WMorphism w = gen_morphism_between(rng, small, t.cod(), z);
  WMorphism g = add(compose(p, compose(s, adjoint(t))),
                    compose(w, sub(identity(t.cod()), compose(t, adjoint(t)))));
  rec.mor("p", p);
  rec.mor("g", g);
  rec.check(compose(g, t) == compose(p, s), "constructed cocone does not commute");
  WMorphism sp = orthogonal_complement(s);
  WMorphism tp = orthogonal_complement(t);
  WMorphism h = copairing({compose(p, sp), compose(p, s), compose(g, tp)});
  rec.check(compose(h, push.from_x) == p, "mediating morphism fails on the X leg");
  rec.check(compose(h, push.from_y) == g, "mediating morphism fails on the Y leg");
  WMorphism joint = copairing(push.from_x, push.from_y);
  rec.check(rank(joint.mat()) == joint.cod().dim(), "pushout legs are not jointly epic");
}

void axiom_h4(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism m = gen_isometry(rng, cfg);
  rec.mor("m", m);
  WMorphism k = kernel(sub(identity(m.cod()), compose(m, adjoint(m))));
  rec.check(same_subobject(k, m), "isometry m is not a kernel of 1 - m m*");
}

void axiom_r4(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WObject x = gen_object(rng, cfg);
  WMorphism delta = diagonal(x);
  WMorphism q = copairing(identity(x), negate(identity(x)));
  rec.obj("X", x);
  rec.check(compose(q, delta) == zero_morphism(x, x), "[1 -1] Delta != 0");
  WMorphism v = gen_morphism_between(rng, cfg, gen_object(rng, cfg), x);
  WMorphism g = pairing(v, v);
  std::optional<Mat> lift = solve_left(delta.mat(), g.mat());
  rec.check(lift.has_value(), "pair(v, v) does not factor through Delta");
  if (!lift) return;
  WMorphism h(g.dom(), x, *lift);
  rec.check(compose(delta, h) == g, "Delta lift does not recompose");
  rec.check(h == v, "Delta lift is not the expected mediator");
}

void axiom_h3(Rng& rng, const GenConfig& cfg, CaseRecorder& rec) {
  WMorphism f = gen_morphism(rng, cfg);
  WMorphism g = gen_morphism_between(rng, cfg, f.dom(), f.cod());
  WMorphism k = kernel(sub(f, g));
  rec.mor("f", f);
  rec.mor("g", g);
  rec.mor("k", k);
  rec.check(compose(f, k) == compose(g, k), "equaliser candidate does not equalise");
  rec.check(compose(adjoint(k), k) == identity(k.dom()), "equaliser is not isometric");
  WMorphism z = gen_morphism_between(rng, cfg, gen_object(rng, cfg), k.dom());
  WMorphism w = compose(k, z);
  std::optional<Mat> lift = solve_left(k.mat(), w.mat());
  rec.check(lift.has_value(), "equalising morphism does not factor through the equaliser");
}

}  // namespace laws

std::vector<std::pair<std::string, LawBody>> law_table() {
  return {
      {"scalar/involution", laws::scalar_involution},
      {"scalar/anisotropy", laws::scalar_anisotropy},
      {"scalar/squares-positive", laws::scalar_squares_positive},
      {"scalar/hermitian-trichotomy", laws::scalar_trichotomy},
      {"core/involution", laws::core_involution},
      {"core/star-addition", laws::core_star_addition},
      {"core/adjoint-inner-product", laws::core_adjoint_inner_product},
      {"core/biproduct-orthonormal", laws::core_biproduct},
      {"core/matrix-anisotropy", laws::core_matrix_anisotropy},
      {"core/sum-formula", laws::core_sum_formula},
      {"core/q-linearity", laws::core_q_linearity},
      {"core/block-adjoint-orthogonal", laws::core_block_adjoint_orthogonal},
      {"fact/kernel", laws::fact_kernel},
      {"fact/kernel-universal", laws::fact_kernel_universal},
      {"fact/cokernel", laws::fact_cokernel},
      {"fact/complement-splitting", laws::fact_complement_splitting},
      {"fact/orthogonal-coproduct-extension", laws::fact_orthogonal_coproduct_extension},
      {"fact/complement-inequations", laws::fact_complement_inequations},
      {"fact/abelian-objects", laws::fact_abelian_objects},
      {"fact/pushout-split-mono", laws::fact_pushout_split_mono},
      {"fact/range-factorization", laws::fact_range_factorization},
      {"fact/classify-implications", laws::fact_classify_implications},
      {"gs/orthogonal-closed", laws::gs_orthogonal_closed},
      {"gs/prefix-union", laws::gs_prefix_union},
      {"gs/idempotent", laws::gs_idempotent},
      {"gs/coproduct-invertible", laws::gs_coproduct_invertible},
      {"gs/gram-roundtrip", laws::gs_gram_roundtrip},
      {"order/certificate", laws::order_certificate},
      {"order/axioms", laws::order_axioms},
      {"order/inverse-closure", laws::order_inverse_closure},
      {"order/antisymmetry", laws::order_antisymmetry},
      {"order/schur", laws::order_schur},
      {"order/contraction-closure", laws::order_contraction_closure},
      {"order/split-mono-contraction", laws::order_split_mono_contraction},
      {"order/positive-block", laws::order_positive_block},
      {"dil/gram-identity", laws::dil_gram_identity},
      {"dil/codilator-universal", laws::dil_codilator_universal},
      {"dil/strict-coproduct", laws::dil_strict_coproduct},
      {"dil/agreement", laws::dil_agreement},
      {"dil/douglas-converse", laws::dil_douglas_converse},
      {"dil/extensions", laws::dil_extensions},
      {"dil/pushout-universal", laws::dil_pushout_universal},
      {"axiom/h4-isometry-normal", laws::axiom_h4},
      {"axiom/r4-diagonal-kernel", laws::axiom_r4},
      {"axiom/h3-isometric-equaliser", laws::axiom_h3},
  };
}

LawReport run_laws(const GenConfig& cfg) {
  validate(cfg);
  LawReport report;
  report.cfg = cfg;
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, body] : law_table()) {
    LawResult result = run_law(name, cfg, body);
    report.failures += result.fail;
    report.laws.push_back(std::move(result));
  }
  auto end = std::chrono::steady_clock::now();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return report;
}

std::string law_report_json(const LawReport& report) {
  nlohmann::json j;
  j["ring"] = ring_name(report.cfg.ring);
  j["seed"] = report.cfg.seed;
  j["cases"] = report.cfg.cases;
  j["max_dim"] = report.cfg.max_dim;
  j["failures"] = report.failures;
  j["elapsed_ms"] = report.elapsed_ms;
  j["laws"] = nlohmann::json::array();
  for (const LawResult& law : report.laws) {
    nlohmann::json entry;
    entry["name"] = law.name;
    entry["pass"] = law.pass;
    entry["fail"] = law.fail;
    if (law.fail > 0)
      entry["counterexample"] = nlohmann::json::parse(law.counterexample);
    else
      entry["counterexample"] = nullptr;
    j["laws"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

}  // namespace starcat
