#include "cartankit/flat_models.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cartankit {

namespace {

using nlohmann::json;

void require(bool cond, const std::string& msg) {
  if (!cond) throw ModelParseError(msg);
}

void check_spec(const ModelSpec& spec) {
  require(spec.n >= 2 && spec.n <= 12, "model: n out of range");
  auto injective = [](const std::vector<int>& vals) {
    std::vector<int> v = vals;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  switch (spec.mod) {
    case Modification::None:
      require(spec.beta.empty() && spec.gamma.empty() && spec.delta.empty(),
              "model: unmodified frame takes no exponent data");
      return;
    case Modification::SingleY34:
      require(spec.n >= 4, "model: single-pair modification needs n >= 4");
      require(spec.beta.size() == 1 && spec.beta.count({3, 4}) == 1 &&
                  spec.beta.at({3, 4}) == 1 && spec.gamma.empty() && spec.delta.empty(),
              "model: single-pair modification is the fixed entry (3,4) -> 1");
      return;
    case Modification::General:
      require(spec.n >= 4, "model: general modification needs n >= 4");
      break;
  }
  std::vector<int> bvals, gvals, dvals;
  for (const auto& [jk, m] : spec.beta) {
    require(3 <= jk.first && jk.first < jk.second && jk.second <= spec.n,
            "model: beta index out of range");
    require(m >= 1, "model: beta exponent must be positive");
    bvals.push_back(m);
  }
  for (const auto& [j, m] : spec.gamma) {
    require(4 <= j && j <= spec.n, "model: gamma index out of range");
    require(m >= 1, "model: gamma exponent must be positive");
    gvals.push_back(m);
  }
  for (const auto& [j, m] : spec.delta) {
    require(4 <= j && j <= spec.n, "model: delta index out of range");
    require(m >= 1, "model: delta exponent must be positive");
    dvals.push_back(m);
  }
  require(injective(bvals) && injective(gvals) && injective(dvals),
          "model: exponents must be injective within each family");
}

}  // namespace

ModelSpec saturated_general(int n) {
  ModelSpec spec;
  spec.n = n;
  spec.mod = Modification::General;
  int next = 1;
  for (int j = 3; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) spec.beta[{j, k}] = next++;
  next = 1;
  for (int j = 4; j <= n; ++j) spec.gamma[j] = next++;
  next = 1;
  for (int j = 4; j <= n; ++j) spec.delta[j] = next++;
  check_spec(spec);
  return spec;
}

ModelSpec parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelParseError(std::string("model: invalid JSON: ") + e.what());
  }
  require(doc.is_object(), "model: top level must be an object");
  require(doc.contains("n") && doc["n"].is_number_integer(), "model: missing integer field 'n'");
  require(doc.contains("modification") && doc["modification"].is_string(),
          "model: missing string field 'modification'");

  ModelSpec spec;
  spec.n = doc["n"].get<int>();
  const std::string mod = doc["modification"].get<std::string>();
  if (mod == "none") {
    spec.mod = Modification::None;
  } else if (mod == "single_y34") {
    spec.mod = Modification::SingleY34;
    spec.beta[{3, 4}] = 1;
  } else if (mod == "general") {
    spec.mod = Modification::General;
  } else {
    throw ModelParseError("model: unknown modification '" + mod + "'");
  }

  if (spec.mod == Modification::General) {
    if (doc.contains("beta")) {
      require(doc["beta"].is_array(), "model: 'beta' must be an array");
      for (const auto& row : doc["beta"]) {
        require(row.is_array() && row.size() == 3 && row[0].is_number_integer() &&
                    row[1].is_number_integer() && row[2].is_number_integer(),
                "model: beta rows are [j, k, exponent]");
        auto key = std::make_pair(row[0].get<int>(), row[1].get<int>());
        require(spec.beta.count(key) == 0, "model: duplicate beta index");
        spec.beta[key] = row[2].get<int>();
      }
    }
    for (const char* name : {"gamma", "delta"}) {
      if (!doc.contains(name)) continue;
      require(doc[name].is_array(), std::string("model: '") + name + "' must be an array");
      auto& target = (std::string(name) == "gamma") ? spec.gamma : spec.delta;
      for (const auto& row : doc[name]) {
        require(row.is_array() && row.size() == 2 && row[0].is_number_integer() &&
                    row[1].is_number_integer(),
                std::string("model: ") + name + " rows are [j, exponent]");
        int j = row[0].get<int>();
        require(target.count(j) == 0, "model: duplicate index");
        target[j] = row[1].get<int>();
      }
    }
  }
  check_spec(spec);
  return spec;
}

ModelSpec parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelParseError("model: cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

PolyVF vf_zero(int nvars) { return PolyVF(static_cast<size_t>(nvars), Poly(nvars)); }

bool vf_is_zero(const PolyVF& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyVF vf_add(const PolyVF& a, const PolyVF& b) {
  PolyVF r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

PolyVF vf_sub(const PolyVF& a, const PolyVF& b) {
  PolyVF r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

PolyVF vf_bracket(const PolyVF& X, const PolyVF& Y) {
  const int nv = static_cast<int>(X.size());
  PolyVF r = vf_zero(nv);
  for (int k = 0; k < nv; ++k) {
    for (int j = 0; j < nv; ++j) {
      if (!X[j].is_zero()) r[k] += X[j] * Y[k].derivative(j);
      if (!Y[j].is_zero()) r[k] -= Y[j] * X[k].derivative(j);
    }
  }
  return r;
}

Poly vf_apply(const PolyVF& X, const Poly& f) {
  Poly r(f.nvars());
  for (size_t j = 0; j < X.size(); ++j) {
    if (X[j].is_zero()) continue;
    r += X[j] * f.derivative(static_cast<int>(j));
  }
  return r;
}

FrameModel::FrameModel(const ModelSpec& spec)
    : spec_(spec), n_(spec.n), nvars_(spec.n + spec.n * (spec.n - 1) / 2), basis_(spec.n) {
  check_spec(spec_);

  auto ypoly = [&](int src_var, int expo) {
    // y^expo / expo!
    return Poly::monomial(nvars_, src_var, static_cast<unsigned>(expo),
                          rat(1) / factorial(static_cast<unsigned>(expo)));
  };

  // X'_i fields.
  for (int i = 0; i < n_; ++i) {
    PolyVF f = vf_zero(nvars_);
    f[static_cast<size_t>(x_var(i))] = Poly::constant(nvars_, rat(1));
    for (int p = i + 1; p < n_; ++p) {
      f[static_cast<size_t>(y_var(i, p))] -= Poly::variable(nvars_, x_var(p));
    }
    if (i == 0) {
      for (const auto& [jk, m] : spec_.beta) {
        f[static_cast<size_t>(y_var(jk.first - 1, jk.second - 1))] += ypoly(y_var(0, 1), m);
      }
      for (const auto& [j, m] : spec_.gamma) {
        f[static_cast<size_t>(y_var(1, j - 1))] += ypoly(y_var(0, 2), m);
      }
    }
    if (i == 1) {
      for (const auto& [j, m] : spec_.delta) {
        f[static_cast<size_t>(y_var(0, j - 1))] += ypoly(y_var(1, 2), m);
      }
    }
    frame_.push_back(std::move(f));
  }
  // Y fields.
  for (int j = 0; j < n_; ++j) {
    for (int k = j + 1; k < n_; ++k) {
      PolyVF f = vf_zero(nvars_);
      f[static_cast<size_t>(y_var(j, k))] = Poly::constant(nvars_, rat(1));
      frame_.push_back(std::move(f));
    }
  }

  // The bracket relations of the unmodified frame must survive the
  // modification exactly; verify rather than assume.
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      PolyVF br = vf_bracket(frame_[static_cast<size_t>(i)], frame_[static_cast<size_t>(j)]);
      if (!vf_is_zero(vf_sub(br, frame_[static_cast<size_t>(frame_y(i, j))])))
        throw std::logic_error("frame bracket relation violated");
    }
  }
}

int FrameModel::y_var(int j, int k) const { return n_ + basis_.index_m2(j, k); }

int FrameModel::frame_y(int j, int k) const { return n_ + basis_.index_m2(j, k); }

std::string FrameModel::frame_label(int f) const {
  return basis_.label(g_index_of_frame(f)).text();
}

int FrameModel::g_index_of_frame(int f) const {
  if (f < n_) return basis_.index_m1(f);
  return f - n_;  // grade -2 section starts the flat order in pair order
}

Vec FrameModel::ident_coords(int f) const {
  Vec v(static_cast<size_t>(basis_.dim()), ExactScalar(0));
  v[static_cast<size_t>(g_index_of_frame(f))] = rat(1);
  return v;
}

std::vector<Poly> FrameModel::expand_in_frame(const PolyVF& vf) const {
  std::vector<Poly> coeffs(static_cast<size_t>(nvars_), Poly(nvars_));
  PolyVF residual = vf;
  // X coefficients read off directly (each X'_i is the only field with a
  // d/dx_i component, and that component is 1).
  for (int i = 0; i < n_; ++i) {
    Poly c = residual[static_cast<size_t>(x_var(i))];
    coeffs[static_cast<size_t>(i)] = c;
    if (c.is_zero()) continue;
    for (size_t comp = 0; comp < residual.size(); ++comp) {
      if (!frame_[static_cast<size_t>(i)][comp].is_zero())
        residual[comp] -= c * frame_[static_cast<size_t>(i)][comp];
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (!residual[static_cast<size_t>(x_var(i))].is_zero())
      throw std::logic_error("expand_in_frame: field not in frame span");
  }
  for (int f = n_; f < nvars_; ++f) coeffs[static_cast<size_t>(f)] = residual[static_cast<size_t>(f)];
  return coeffs;
}

int FrameModel::max_exponent() const {
  int m = 1;
  for (const auto& [jk, v] : spec_.beta) {
    (void)jk;
    m = std::max(m, v);
  }
  for (const auto& [j, v] : spec_.gamma) {
    (void)j;
    m = std::max(m, v);
  }
  for (const auto& [j, v] : spec_.delta) {
    (void)j;
    m = std::max(m, v);
  }
  return m;
}

void ASection::add(int gidx, const Poly& p) {
  if (p.is_zero()) return;
  auto it = comp.find(gidx);
  if (it == comp.end()) {
    comp.emplace(gidx, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) comp.erase(it);
  }
}

bool ASection::is_zero() const { return comp.empty(); }

ASection ASection::operator+(const ASection& o) const {
  ASection r = *this;
  for (const auto& [g, p] : o.comp) r.add(g, p);
  return r;
}

ASection ASection::operator-(const ASection& o) const {
  ASection r = *this;
  for (const auto& [g, p] : o.comp) r.add(g, -p);
  return r;
}

ASection ASection::scaled(const ExactScalar& c) const {
  ASection r;
  r.nvars = nvars;
  if (is_zero_scalar(c)) return r;
  for (const auto& [g, p] : comp) r.comp.emplace(g, p * c);
  return r;
}

Vec ASection::eval(const GradedBasis& basis, const Vec& point) const {
  Vec v(static_cast<size_t>(basis.dim()), ExactScalar(0));
  for (const auto& [g, p] : comp) v[static_cast<size_t>(g)] = p.eval(point);
  return v;
}

Curvature::Curvature(const FrameModel& m) : model_(&m) {
  const GradedBasis& basis = m.basis();
  for (int a = 0; a < m.frame_size(); ++a) {
    for (int b = a + 1; b < m.frame_size(); ++b) {
      PolyVF br = vf_bracket(m.frame(a), m.frame(b));
      std::vector<Poly> coeffs = m.expand_in_frame(br);
      ASection val;
      val.nvars = m.nvars();
      for (int f = 0; f < m.frame_size(); ++f) {
        val.add(m.g_index_of_frame(f), coeffs[static_cast<size_t>(f)]);
      }
      // Algebraic bracket of the identified elements.
      LieElement alg = bracket(basis.element(m.g_index_of_frame(a)),
                               basis.element(m.g_index_of_frame(b)));
      Vec alg_coords = basis.coordinates(alg);
      for (int g = 0; g < basis.dim(); ++g) {
        if (!is_zero(alg_coords[static_cast<size_t>(g)]))
          val.add(g, Poly::constant(m.nvars(), -alg_coords[static_cast<size_t>(g)]));
      }
      if (!val.is_zero()) val_.emplace(std::make_pair(a, b), std::move(val));
    }
  }
}

ASection Curvature::eval_pair(int fa, int fb) const {
  if (fa == fb) return ASection::zero(model_->nvars());
  const bool flip = fa > fb;
  auto key = flip ? std::make_pair(fb, fa) : std::make_pair(fa, fb);
  auto it = val_.find(key);
  if (it == val_.end()) return ASection::zero(model_->nvars());
  return flip ? it->second.scaled(rat(-1)) : it->second;
}

std::vector<std::pair<int, int>> Curvature::support() const {
  std::vector<std::pair<int, int>> s;
  for (const auto& [k, v] : val_) {
    (void)v;
    s.push_back(k);
  }
  return s;
}

NormalityReport normality_check(const FrameModel& m, const Curvature& kappa) {
  const GradedBasis& basis = m.basis();
  const std::vector<LieElement>& dual = basis.dual_basis();
  NormalityReport report;
  report.ok = true;
  for (int f = 0; f < m.frame_size(); ++f) {
    ASection image;
    image.nvars = m.nvars();
    for (int l = 0; l < m.frame_size(); ++l) {
      const LieElement& zl_dual = dual[static_cast<size_t>(m.g_index_of_frame(l))];
      // sum_l { Z^l, kappa(Z_l, X) }
      ASection kv = kappa.eval_pair(l, f);
      for (const auto& [g, p] : kv.comp) {
        Vec coords = basis.coordinates(bracket(zl_dual, basis.element(g)));
        for (int t = 0; t < basis.dim(); ++t) {
          if (!is_zero(coords[static_cast<size_t>(t)]))
            image.add(t, p * coords[static_cast<size_t>(t)]);
        }
      }
      // - 1/2 kappa( {Z^l, X}_-, Z_l )
      LieElement br = bracket(zl_dual, basis.element(m.g_index_of_frame(f)));
      LieElement neg = br.graded_part(-1) + br.graded_part(-2);
      if (!neg.is_zero()) {
        Vec coords = basis.coordinates(neg);
        for (int fm = 0; fm < m.frame_size(); ++fm) {
          const ExactScalar c = coords[static_cast<size_t>(m.g_index_of_frame(fm))];
          if (is_zero(c)) continue;
          ASection part = kappa.eval_pair(fm, l).scaled(c * rat(-1, 2));
          for (const auto& [g, p] : part.comp) image.add(g, p);
        }
      }
    }
    if (!image.is_zero()) {
      report.ok = false;
      report.nonzero_at.push_back(m.frame_label(f));
    }
  }
  return report;
}

ASection tractor_derivative(const FrameModel& m, int dir_frame, const ASection& s) {
  const GradedBasis& basis = m.basis();
  ASection out;
  out.nvars = m.nvars();
  for (const auto& [g, p] : s.comp) out.add(g, vf_apply(m.frame(dir_frame), p));
  const LieElement& dir_elt = basis.element(m.g_index_of_frame(dir_frame));
  for (const auto& [g, p] : s.comp) {
    Vec coords = basis.coordinates(bracket(dir_elt, basis.element(g)));
    for (int t = 0; t < basis.dim(); ++t) {
      if (!is_zero(coords[static_cast<size_t>(t)])) out.add(t, p * coords[static_cast<size_t>(t)]);
    }
  }
  return out;
}

namespace {

// Exact sparse triangular reduction over section space, used to keep the
// derivative frontier free of linear redundancy.
class SectionSpan {
 public:
  using Key = std::pair<int, Monomial>;
  using Row = std::map<Key, ExactScalar>;

  bool add(const ASection& s) {
    Row row;
    for (const auto& [g, p] : s.comp) {
      for (const auto& [mono, c] : p.terms()) row[{g, mono}] = c;
    }
    while (!row.empty()) {
      const Key pivot = row.begin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        const ExactScalar lead = row.begin()->second;
        for (auto& [k, c] : row) c /= lead;
        rows_.emplace(pivot, std::move(row));
        return true;
      }
      const ExactScalar factor = row.begin()->second;
      for (const auto& [k, c] : it->second) {
        auto jt = row.find(k);
        if (jt == row.end()) {
          row.emplace(k, -factor * c);
        } else {
          jt->second -= factor * c;
          if (is_zero(jt->second)) row.erase(jt);
        }
      }
    }
    return false;
  }

 private:
  std::map<Key, Row> rows_;
};

}  // namespace

HolonomyResult infinitesimal_holonomy(const FrameModel& m, const Curvature& kappa,
                                      RationalSampler& rng) {
  const GradedBasis& basis = m.basis();
  HolonomyResult result;

  std::vector<Vec> points;
  points.push_back(Vec(static_cast<size_t>(m.nvars()), ExactScalar(0)));
  for (int t = 0; t < 3; ++t) {
    Vec p;
    for (int v = 0; v < m.nvars(); ++v) p.push_back(rng.rational());
    points.push_back(std::move(p));
  }

  SpanAccumulator span_all(basis.dim());
  SpanAccumulator span_origin(basis.dim());
  auto feed = [&](const ASection& s) {
    span_origin.add(s.eval(basis, points[0]));
    for (const Vec& pt : points) span_all.add(s.eval(basis, pt));
  };

  SectionSpan seen;
  std::vector<ASection> frontier;
  for (const auto& [key, val] : kappa.stored()) {
    (void)key;
    if (seen.add(val)) {
      frontier.push_back(val);
      feed(val);
    }
  }

  const int min_order = m.max_exponent() + 1;
  const int cap = 2 * m.max_exponent() + 4;
  int stable = 0;
  int order = 0;
  while (!frontier.empty() && order < cap) {
    ++order;
    const int dim_before = span_all.dim();
    std::vector<ASection> next;
    for (const ASection& s : frontier) {
      for (int dir = 0; dir < m.frame_size(); ++dir) {
        ASection d = tractor_derivative(m, dir, s);
        if (d.is_zero()) continue;
        if (seen.add(d)) {
          feed(d);
          next.push_back(std::move(d));
        }
      }
    }
    frontier = std::move(next);
    stable = (span_all.dim() == dim_before) ? stable + 1 : 0;
    if (stable >= 2 && order >= min_order) break;
  }
  result.stop_order = order;

  result.dim = span_all.dim();
  result.span_basis = span_all.basis();
  for (const Vec& row : result.span_basis) {
    int hit = -1;
    int nonzero = 0;
    for (int g = 0; g < basis.dim(); ++g) {
      if (!is_zero(row[static_cast<size_t>(g)])) {
        ++nonzero;
        hit = g;
      }
    }
    if (nonzero == 1) result.value_labels.push_back(basis.label(hit).text());
  }

  result.closed_under_bracket = true;
  result.abelian = true;
  for (size_t a = 0; a < result.span_basis.size(); ++a) {
    for (size_t b = a + 1; b < result.span_basis.size(); ++b) {
      LieElement br = bracket(basis.from_coordinates(result.span_basis[a]),
                              basis.from_coordinates(result.span_basis[b]));
      if (!br.is_zero()) {
        result.abelian = false;
        if (!span_all.contains(basis.coordinates(br))) result.closed_under_bracket = false;
      }
    }
  }

  result.origin_span_equals_full = span_origin.same_span_as(span_all);

  result.avoids_distribution_pairs = true;
  if (m.n() >= 3) {
    const int banned[3] = {basis.index_m2(0, 1), basis.index_m2(0, 2), basis.index_m2(1, 2)};
    for (const Vec& row : result.span_basis) {
      for (int bidx : banned) {
        if (!is_zero(row[static_cast<size_t>(bidx)])) result.avoids_distribution_pairs = false;
      }
    }
  }
  return result;
}

LeadingTermReport leading_term_extraction(const FrameModel& m, const Curvature& kappa) {
  const GradedBasis& basis = m.basis();
  LeadingTermReport report;
  report.all_exact = true;
  report.pure_grade_minus2 = true;
  const Vec origin(static_cast<size_t>(m.nvars()), ExactScalar(0));

  auto run_family = [&](int src_j, int src_k, int base_x, int tgt_j, int tgt_k, int expo) {
    ASection s = kappa.eval_pair(m.frame_y(src_j, src_k), m.frame_x(base_x));
    for (int t = 0; t < expo - 1; ++t) s = tractor_derivative(m, m.frame_y(src_j, src_k), s);
    Vec v = s.eval(basis, origin);
    const int target = basis.index_m2(tgt_j, tgt_k);
    bool exact = true;
    for (int g = 0; g < basis.dim(); ++g) {
      const ExactScalar expected = (g == target) ? rat(1) : ExactScalar(0);
      if (v[static_cast<size_t>(g)] != expected) exact = false;
      if (basis.grade_of(g) != -2 && !is_zero(v[static_cast<size_t>(g)]))
        report.pure_grade_minus2 = false;
    }
    report.all_exact = report.all_exact && exact;
    std::ostringstream line;
    line << "D^" << (expo - 1) << "_" << basis.label(basis.index_m2(src_j, src_k)).text()
         << " kappa(" << basis.label(basis.index_m2(src_j, src_k)).text() << ", "
         << basis.label(basis.index_m1(base_x)).text() << ") at 0 = "
         << basis.label(target).text() << (exact ? "" : "  [MISMATCH]");
    report.lines.push_back(line.str());
  };

  for (const auto& [jk, expo] : m.spec().beta)
    run_family(0, 1, 0, jk.first - 1, jk.second - 1, expo);
  for (const auto& [j, expo] : m.spec().gamma) run_family(0, 2, 0, 1, j - 1, expo);
  for (const auto& [j, expo] : m.spec().delta) run_family(1, 2, 1, 0, j - 1, expo);
  return report;
}

}  // namespace cartankit
