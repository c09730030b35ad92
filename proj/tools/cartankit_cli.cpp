// cartankit — command-line front end for the exact verification library.
//
// Subcommands:
//   verify-all               run every check suite (honours CARTANKIT_MAX_N)
//   homology   --n N         degree-two homology blocks of one rank
//   octonion   [mode]        table | derivations | classify
//   inclusions [--case C]    embedding and stabiliser chains
//   holonomy   --model FILE  curvature, normality and holonomy of a model
//   conformal3               rank-three conformal structure checks
//   tractor                  pointwise tractor metric checks
//
// Common options: --seed (default 0), --trials (default 200), --json PATH.
// Exit codes: 0 all checks pass, 1 a check failed, 2 unknown subcommand,
// 3 model file unreadable or malformed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cartankit/conformal3.hpp"
#include "cartankit/flat_models.hpp"
#include "cartankit/homology.hpp"
#include "cartankit/lie_so.hpp"
#include "cartankit/octonion_orbits.hpp"
#include "cartankit/spin_incl.hpp"
#include "cartankit/tractor_point.hpp"

#ifdef CARTANKIT_HAVE_FMT
#include <fmt/core.h>
#endif

namespace {

using cartankit::rat;
using json = nlohmann::json;

void say(const std::string& line) {
#ifdef CARTANKIT_HAVE_FMT
  fmt::print("{}\n", line);
#else
  std::cout << line << "\n";
#endif
}

struct Reporter {
  std::vector<std::pair<std::string, bool>> checks;
  json details = json::object();

  void add(const std::string& id, bool ok, json detail = json::object()) {
    checks.emplace_back(id, ok);
    if (!detail.empty()) details[id] = std::move(detail);
    say(std::string(ok ? "[ ok ] " : "[FAIL] ") + id);
  }

  bool all_ok() const {
    for (const auto& [id, ok] : checks)
      if (!ok) return false;
    return true;
  }

  json to_json(uint64_t seed, int trials) const {
    json out;
    out["seed"] = seed;
    out["trials"] = trials;
    json arr = json::array();
    for (const auto& [id, ok] : checks) {
      json one;
      one["id"] = id;
      one["ok"] = ok;
      if (details.contains(id)) one["detail"] = details[id];
      arr.push_back(one);
    }
    out["checks"] = arr;
    out["ok"] = all_ok();
    return out;
  }
};

int max_rank_from_env() {
  const char* raw = std::getenv("CARTANKIT_MAX_N");
  if (raw == nullptr) return 5;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v < 2) return 5;
  return static_cast<int>(v > 5 ? 5 : v);
}

std::string spec_name(const cartankit::ModelSpec& spec) {
  std::string mod;
  switch (spec.mod) {
    case cartankit::Modification::None: mod = "none"; break;
    case cartankit::Modification::SingleY34: mod = "single_y34"; break;
    case cartankit::Modification::General: mod = "general"; break;
  }
  return mod + "_n" + std::to_string(spec.n);
}

// ---------------------------------------------------------------- structure

void run_structure(Reporter& rep, uint64_t seed, int trials, int max_n) {
  cartankit::RationalSampler rng(seed + 1);
  bool jacobi = true, additive = true;
  for (int n = 2; n <= max_n; ++n) {
    cartankit::GradedBasis basis(n);
    const int per_rank = trials / (max_n - 1) + 1;
    for (int t = 0; t < per_rank; ++t) {
      cartankit::LieElement x = basis.random_element(rng);
      cartankit::LieElement y = basis.random_element(rng);
      cartankit::LieElement z = basis.random_element(rng);
      cartankit::LieElement jac =
          bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
      if (!jac.is_zero()) jacobi = false;
    }
    for (int a = 0; a < basis.dim(); ++a) {
      for (int b = 0; b < basis.dim(); ++b) {
        cartankit::LieElement br = bracket(basis.element(a), basis.element(b));
        int g = basis.grade_of(a) + basis.grade_of(b);
        if (g < -2 || g > 2) {
          if (!br.is_zero()) additive = false;
        } else if (!(br - br.graded_part(g)).is_zero()) {
          additive = false;
        }
      }
    }
  }
  rep.add("structure.bracket_jacobi", jacobi);
  rep.add("structure.grade_additivity", additive);

  bool nil = true;
  for (int n = 2; n <= max_n; ++n)
    if (!cartankit::nilradical_check(n).ok()) nil = false;
  rep.add("structure.parabolic_nilradical", nil);
  rep.add("structure.cyclic_distribution", cartankit::sl3_distribution_check().ok());
}

// ----------------------------------------------------------------- homology

struct ReferenceHomology {
  int homogeneity;
  int dim;
  int value_grade;
  bool nonnegative;
};

bool reference_homology(int n, ReferenceHomology& out) {
  switch (n) {
    case 2: out = {3, 4, 0, true}; return true;
    case 3: out = {3, 27, 0, true}; return true;
    case 4: out = {1, 60, -2, false}; return true;
    case 5: out = {1, 280, -2, false}; return true;
    default: return false;
  }
}

void run_homology(Reporter& rep, int n) {
  cartankit::HomologyResult res = cartankit::homology_analysis(n);
  bool ok = res.image_contained_in_kernel && res.representable_in_claimed_shape;
  json detail;
  for (const auto& [h, d] : res.dim_by_homogeneity) detail["dim_by_homogeneity"][std::to_string(h)] = d;
  detail["claimed_homogeneity"] = res.claimed_homogeneity;
  detail["claimed_value_grade"] = res.claimed_value_grade;
  detail["value_grade_nonnegative"] = res.value_grade_nonnegative;

  ReferenceHomology expect{};
  if (reference_homology(n, expect)) {
    int total = 0;
    for (const auto& [h, d] : res.dim_by_homogeneity) {
      total += d;
      if (h != expect.homogeneity && d != 0) ok = false;
    }
    if (total != expect.dim) ok = false;
    if (res.claimed_homogeneity != expect.homogeneity) ok = false;
    if (res.claimed_value_grade != expect.value_grade) ok = false;
    if (res.value_grade_nonnegative != expect.nonnegative) ok = false;
  }
  rep.add("homology.blocks.n" + std::to_string(n), ok, detail);
}

void run_homology_square_zero(Reporter& rep, int max_n) {
  bool ok = true;
  for (int n = 2; n <= std::min(max_n, 4); ++n)
    for (int c : {2, 3})
      if (!cartankit::codifferential_squares_to_zero(n, c)) ok = false;
  rep.add("homology.square_zero", ok);
}

// ----------------------------------------------------------------- octonion

void print_triple_table(const cartankit::TripleTable& table) {
  static const char* heads[7] = {"a", "x", "y", "z", "yz", "zx", "xy"};
  for (int r = 0; r < 7; ++r) {
    std::ostringstream line;
    line << heads[r] << ":";
    for (int c = 0; c < 7; ++c) line << "  [" << heads[c] << "] "
                                     << cartankit::table_entry_text(table.entry[r][c]);
    say(line.str());
  }
}

void run_octonion_table(Reporter& rep, uint64_t seed, bool print_table) {
  cartankit::TripleTable expect = cartankit::expected_triple_table();
  bool ok = true;

  auto check_plane = [&](const cartankit::ImPlane& p) {
    cartankit::ImPlane norm = cartankit::normalise_open_triple(p);
    auto table = cartankit::triple_table(norm);
    if (!table || !(*table == expect)) ok = false;
  };
  check_plane(cartankit::standard_open_plane());
  cartankit::RationalSampler rng(seed + 2);
  for (int t = 0; t < 3; ++t) check_plane(cartankit::random_open_plane(rng));

  if (print_table) print_triple_table(expect);
  rep.add("octonion.table_canonical", ok);
}

void run_octonion_derivations(Reporter& rep) {
  cartankit::DerivationAlgebra der = cartankit::derivation_algebra();
  bool ok = der.dim == 14 && der.annihilates_one && der.preserves_imaginary &&
            der.norm_skew && der.kills_triple_form;
  json detail;
  detail["dim"] = der.dim;
  rep.add("octonion.derivation_dimension", ok, detail);

  cartankit::ThetaStabiliserReport theta = cartankit::theta_stabiliser();
  bool theta_ok = theta.dim == 14 && theta.ambient_dim == 21 &&
                  theta.ambient_signature == std::make_pair(3, 4) &&
                  theta.equals_derivations_on_imaginaries;
  rep.add("octonion.triple_form_stabiliser", theta_ok);
}

void run_octonion_classify(Reporter& rep, uint64_t seed, int trials) {
  cartankit::RationalSampler rng(seed + 3);
  bool orbits = true;
  {
    cartankit::ImPlane open = cartankit::standard_open_plane();
    cartankit::ImPlane closed = cartankit::standard_closed_plane();
    if (cartankit::classify_plane(open) != cartankit::PlaneKind::Open) orbits = false;
    if (cartankit::classify_plane(closed) != cartankit::PlaneKind::Closed) orbits = false;
    if (cartankit::multiplication_closed(open)) orbits = false;
    if (!cartankit::multiplication_closed(closed)) orbits = false;
  }
  const int rounds = std::max(5, trials / 10);
  for (int t = 0; t < rounds; ++t) {
    cartankit::ImPlane open = cartankit::random_open_plane(rng);
    cartankit::ImPlane closed = cartankit::random_closed_plane(rng);
    if (!open.valid || cartankit::classify_plane(open) != cartankit::PlaneKind::Open)
      orbits = false;
    if (!closed.valid || cartankit::classify_plane(closed) != cartankit::PlaneKind::Closed)
      orbits = false;
    cartankit::ZornOct z = cartankit::random_isotropic_imaginary(rng);
    auto kernel = cartankit::two_sided_kernel(z);
    if (kernel.size() != 3) orbits = false;
  }
  rep.add("octonion.plane_orbits", orbits);

  bool stab = true;
  auto expect_stab = [&](const cartankit::ImPlane& p, int dim, int krank, bool ss) {
    cartankit::PlaneStabiliser s = cartankit::plane_stabiliser(p);
    if (s.dim != dim || s.killing_rank != krank || s.semisimple != ss) stab = false;
  };
  expect_stab(cartankit::standard_open_plane(), 8, 8, true);
  expect_stab(cartankit::standard_closed_plane(), 9, 4, false);
  for (int t = 0; t < 3; ++t) {
    expect_stab(cartankit::random_open_plane(rng), 8, 8, true);
    expect_stab(cartankit::random_closed_plane(rng), 9, 4, false);
  }
  rep.add("octonion.plane_stabilisers", stab);
}

void run_octonion_random_identities(Reporter& rep, uint64_t seed, int trials) {
  cartankit::RationalSampler rng(seed + 4);
  auto random_oct = [&]() {
    cartankit::Vec c;
    for (int i = 0; i < 8; ++i) c.push_back(rng.rational());
    return cartankit::ZornOct::from_coords8(c);
  };
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    cartankit::ZornOct x = random_oct(), y = random_oct(), z = random_oct();
    if (cartankit::norm_quad(cartankit::zorn_mul(x, y)) !=
        cartankit::norm_quad(x) * cartankit::norm_quad(y))
      ok = false;
    // alternativity: the associator vanishes when two slots agree
    if (!cartankit::associator(x, x, y).is_zero()) ok = false;
    if (!cartankit::associator(x, y, y).is_zero()) ok = false;
    if (!(cartankit::associator(x, y, z) + cartankit::associator(y, x, z)).is_zero()) ok = false;
  }
  rep.add("octonion.random_identities", ok);
}

// --------------------------------------------------------------- inclusions

json embedding_json(const cartankit::EmbeddingReport& e) {
  json d;
  d["source_dim"] = e.source_dim;
  d["image_rank"] = e.image_rank;
  d["injective"] = e.injective;
  d["bracket_preserving"] = e.bracket_preserving;
  d["signature"] = {e.target_signature.first, e.target_signature.second};
  return d;
}

void run_inclusions(Reporter& rep, const std::string& which, int max_n) {
  auto wants = [&](const char* name) { return which.empty() || which == name; };

  if (wants("isomorphisms")) {
    cartankit::EmbeddingReport sl4 = cartankit::sl4_to_so33();
    bool ok = sl4.source_dim == 15 && sl4.injective && sl4.bracket_preserving &&
              sl4.lands_in_orthogonal && sl4.target_signature == std::make_pair(3, 3);
    cartankit::ConjugationReport su = cartankit::su22_to_so42();
    ok = ok && su.embedding.source_dim == 15 && su.embedding.injective &&
         su.embedding.bracket_preserving && su.conjugation_squares_to_identity &&
         su.fixed_space_dim == 6 && su.embedding.target_signature == std::make_pair(4, 2);
    json detail;
    detail["wedge_action"] = embedding_json(sl4);
    detail["conjugation_fixed"] = embedding_json(su.embedding);
    rep.add("inclusions.low_rank_isomorphisms", ok, detail);
  }
  if (wants("four_form")) {
    cartankit::FourFormStabiliserReport f = cartankit::four_form_stabiliser(true);
    cartankit::FourFormStabiliserReport zero = cartankit::four_form_stabiliser(false);
    bool ok = f.ambient_dim == 28 && f.dim == 21 && f.su22_image_contained &&
              zero.dim == 28;
    rep.add("inclusions.four_form_stabiliser", ok);
  }
  if (wants("theta")) {
    cartankit::ThetaStabiliserReport t = cartankit::theta_stabiliser();
    rep.add("inclusions.triple_form_stabiliser",
            t.dim == 14 && t.ambient_dim == 21 && t.equals_derivations_on_imaginaries);
  }
  if (wants("spinorial")) {
    bool ok = true;
    json detail;
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
      cartankit::InclusionReport r = cartankit::spinorial_inclusion(n);
      bool good = r.intersection_equals_p && r.transverse &&
                  r.subalg_dim == n * (2 * n + 1) &&
                  r.ambient_dim == (n + 1) * (2 * n + 1);
      if (!good) ok = false;
      detail["n" + std::to_string(n)] = {
          {"ambient", r.ambient_dim}, {"subalgebra", r.subalg_dim},
          {"parabolic", r.parabolic_dim}, {"intersection", r.intersection_dim}};
    }
    rep.add("inclusions.vector_stabiliser_chain", ok, detail);
  }
  if (wants("cr")) {
    cartankit::InclusionReport r = cartankit::cr_inclusion();
    bool ok = r.ambient_dim == 21 && r.subalg_dim == 15 && r.parabolic_dim == 15 &&
              r.parabolic_in_g_dim == 10 && r.intersection_dim == 9 &&
              !r.intersection_equals_p && r.transverse;
    json detail;
    detail["chain"] = {r.ambient_dim, r.subalg_dim, r.parabolic_dim, r.parabolic_in_g_dim,
                       r.intersection_dim};
    rep.add("inclusions.hypersurface_chain", ok, detail);
  }
  if (wants("lagrangian")) {
    cartankit::LagrangianReport lag = cartankit::lagrangian_inclusion();
    bool ok = lag.transverse_case.intersection_dim == 9 && lag.transverse_case.transverse &&
              lag.nontransverse_case.intersection_dim == 12 &&
              !lag.nontransverse_case.transverse;
    rep.add("inclusions.lagrangian_cases", ok);
  }
}

// ------------------------------------------------------------------- models

void run_model(Reporter& rep, const cartankit::ModelSpec& spec, uint64_t seed) {
  const std::string name = spec_name(spec);
  cartankit::FrameModel m(spec);
  cartankit::Curvature kappa(m);

  cartankit::NormalityReport norm = cartankit::normality_check(m, kappa);
  rep.add("models.normality." + name, norm.ok);

  cartankit::RationalSampler rng(seed + 5);
  cartankit::HolonomyResult hol = cartankit::infinitesimal_holonomy(m, kappa, rng);
  const int expected =
      static_cast<int>(spec.beta.size() + spec.gamma.size() + spec.delta.size());
  bool ok = hol.dim == expected && hol.closed_under_bracket &&
            hol.avoids_distribution_pairs &&
            (expected == 0 || (hol.abelian && hol.origin_span_equals_full));
  json detail;
  detail["dim"] = hol.dim;
  detail["expected_dim"] = expected;
  detail["values"] = hol.value_labels;
  detail["stop_order"] = hol.stop_order;
  rep.add("models.holonomy." + name, ok, detail);

  if (spec.mod == cartankit::Modification::General) {
    cartankit::LeadingTermReport lead = cartankit::leading_term_extraction(m, kappa);
    rep.add("models.leading_terms." + name, lead.all_exact && lead.pure_grade_minus2);
    for (const std::string& line : lead.lines) say("    " + line);
  }
}

// ---------------------------------------------------------------- conformal

void run_conformal(Reporter& rep, uint64_t seed) {
  cartankit::FrameModel m{cartankit::ModelSpec{}};
  cartankit::Poly sigma = cartankit::standard_sigma();
  cartankit::PartialConnection conn = cartankit::preferred_connection(m, sigma);

  cartankit::ConnectionChecks checks = cartankit::run_connection_checks(m, sigma, conn);
  json cd;
  cd["torsion_identity"] = checks.torsion_identity;
  cd["levi_compatibility"] = checks.levi_compatibility;
  cd["h_directions"] = checks.two_on_h_directions;
  cd["transverse_directions"] = checks.two_on_transverse_directions;
  cd["volume_parallel"] = checks.volume_parallel;
  rep.add("conformal.connection_identities", checks.ok(), cd);

  rep.add("conformal.negative_control",
          cartankit::checks_detect_perturbation(m, sigma, conn));
  rep.add("conformal.frame_independence",
          cartankit::frames_independent_at_samples(m, sigma, conn));

  cartankit::RationalSampler rng(seed + 6);
  cartankit::MetricReport metric = cartankit::run_metric_checks(m, sigma, conn, rng);
  json md;
  md["cross_block_exact"] = metric.cross_block_exact;
  md["yy_block_vanishes"] = metric.yy_block_vanishes;
  md["weyl_invariant"] = metric.weyl_invariant;
  md["scales_inversely"] = metric.scales_inversely;
  md["signature_split"] = metric.signature_split;
  bool ok = metric.cross_block_exact && metric.yy_block_vanishes && metric.weyl_invariant &&
            metric.scales_inversely && metric.signature_split;
  rep.add("conformal.metric_structure", ok, md);
}

// ------------------------------------------------------------------ tractor

void run_tractor(Reporter& rep, uint64_t seed, int trials) {
  cartankit::TractorCalculus tc(3);
  cartankit::RationalSampler rng(seed + 7);

  bool invariant = true;
  for (int t = 0; t < trials; ++t) {
    cartankit::TractorVec t1 = tc.random_tractor(rng);
    cartankit::TractorVec t2 = tc.random_tractor(rng);
    cartankit::UpsilonData u = tc.random_upsilon(rng);
    if (tc.metric(tc.change_splitting(t1, u), tc.change_splitting(t2, u)) !=
        tc.metric(t1, t2))
      invariant = false;
  }
  rep.add("tractor.metric_invariance", invariant);

  bool leibniz = true;
  for (int t = 0; t < trials; ++t) {
    cartankit::TractorVec t1 = tc.random_tractor(rng);
    cartankit::TractorVec t2 = tc.random_tractor(rng);
    cartankit::SlotJet j1 = tc.random_jet(rng);
    cartankit::SlotJet j2 = tc.random_jet(rng);
    cartankit::ConnectionData c = tc.random_connection(rng);
    cartankit::ExactScalar lhs = tc.metric(tc.covariant_deriv(c, j1, t1), t2) +
                                 tc.metric(t1, tc.covariant_deriv(c, j2, t2));
    if (lhs != tc.leibniz_rhs(j1, t1, j2, t2)) leibniz = false;
  }
  rep.add("tractor.derivative_product_rule", leibniz);

  bool projection = true;
  for (int t = 0; t < trials; ++t) {
    cartankit::TractorVec tv = tc.random_tractor(rng);
    cartankit::UpsilonData u = tc.random_upsilon(rng);
    if (tc.project_vector(tc.change_splitting(tv, u)) != tc.project_vector(tv))
      projection = false;
  }
  rep.add("tractor.projection_invariance", projection);

  auto [p, q] = tc.gram_signature();
  json detail;
  detail["computed_signature"] = tc.computed_signature_label();
  detail["quoted_label"] = cartankit::TractorCalculus::quoted_signature_label();
  detail["labels_agree"] =
      tc.computed_signature_label() == cartankit::TractorCalculus::quoted_signature_label();
  rep.add("tractor.signature", p == 4 && q == 3, detail);
}

// ---------------------------------------------------------------- dispatch

void add_common(CLI::App& app, uint64_t& seed, int& trials, std::string& json_path) {
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--trials", trials, "random trial count")->capture_default_str();
  app.add_option("--json", json_path, "write a JSON report to this path");
}

int finish(const Reporter& rep, uint64_t seed, int trials, const std::string& json_path) {
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << rep.to_json(seed, trials).dump(2) << "\n";
  }
  say(rep.all_ok() ? "all checks passed" : "CHECKS FAILED");
  return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string usage =
      "usage: cartankit {verify-all|homology|octonion|inclusions|holonomy|conformal3|tractor} "
      "[options]";
  if (argc < 2) {
    say(usage);
    return 2;
  }
  const std::string cmd = argv[1];
  if (cmd == "-h" || cmd == "--help") {
    say(usage);
    return 0;
  }

  uint64_t seed = 0;
  int trials = 200;
  std::string json_path;
  Reporter rep;

  try {
    if (cmd == "verify-all") {
      CLI::App app{"run every check suite"};
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      const int max_n = max_rank_from_env();

      run_structure(rep, seed, trials, max_n);
      run_homology_square_zero(rep, std::min(max_n, 3));
      for (int n = 2; n <= max_n; ++n) run_homology(rep, n);
      run_octonion_table(rep, seed, false);
      run_octonion_derivations(rep);
      run_octonion_classify(rep, seed, trials);
      run_octonion_random_identities(rep, seed, trials);
      run_inclusions(rep, "", max_n);
      run_model(rep, cartankit::ModelSpec{}, seed);
      if (max_n >= 4) {
        cartankit::ModelSpec single;
        single.n = 4;
        single.mod = cartankit::Modification::SingleY34;
        single.beta[{3, 4}] = 1;
        run_model(rep, single, seed);
        run_model(rep, cartankit::saturated_general(4), seed);
      }
      if (max_n >= 5) run_model(rep, cartankit::saturated_general(5), seed);
      run_conformal(rep, seed);
      run_tractor(rep, seed, trials);
      return finish(rep, seed, trials, json_path);
    }

    if (cmd == "homology") {
      CLI::App app{"degree-two homology blocks"};
      int n = 3;
      app.add_option("--n", n, "rank")->check(CLI::Range(2, 5))->capture_default_str();
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      run_homology(rep, n);
      return finish(rep, seed, trials, json_path);
    }

    if (cmd == "octonion") {
      CLI::App app{"split-octonion checks"};
      std::string mode = "table";
      app.add_option("mode", mode, "table | derivations | classify")
          ->check(CLI::IsMember({"table", "derivations", "classify"}));
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      if (mode == "table") run_octonion_table(rep, seed, true);
      if (mode == "derivations") run_octonion_derivations(rep);
      if (mode == "classify") {
        run_octonion_classify(rep, seed, trials);
        run_octonion_random_identities(rep, seed, trials);
      }
      return finish(rep, seed, trials, json_path);
    }

    if (cmd == "inclusions") {
      CLI::App app{"embedding and stabiliser chains"};
      std::string which;
      app.add_option("--case", which, "isomorphisms | four_form | theta | spinorial | cr | lagrangian")
          ->check(CLI::IsMember(
              {"isomorphisms", "four_form", "theta", "spinorial", "cr", "lagrangian"}));
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      run_inclusions(rep, which, max_rank_from_env());
      return finish(rep, seed, trials, json_path);
    }

    if (cmd == "holonomy") {
      CLI::App app{"curvature, normality and holonomy of one model"};
      std::string model_path;
      app.add_option("--model", model_path, "model description JSON")->required();
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      cartankit::ModelSpec spec;
      try {
        spec = cartankit::parse_model_file(model_path);
      } catch (const cartankit::ModelParseError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
      }
      run_model(rep, spec, seed);
      return finish(rep, seed, trials, json_path);
    }

    if (cmd == "conformal3") {
      CLI::App app{"rank-three conformal structure checks"};
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      run_conformal(rep, seed);
      return finish(rep, seed, trials, json_path);
    }

    if (cmd == "tractor") {
      CLI::App app{"pointwise tractor metric checks"};
      add_common(app, seed, trials, json_path);
      app.parse(argc - 1, argv + 1);
      run_tractor(rep, seed, trials);
      return finish(rep, seed, trials, json_path);
    }
  } catch (const CLI::CallForHelp& e) {
    std::cout << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  std::cerr << "unknown subcommand: " << cmd << "\n" << usage << "\n";
  return 2;
}
