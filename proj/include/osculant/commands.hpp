#pragma once

// The four report-producing commands behind the command-line tool. Each
// returns a Report; a precondition that the arguments cannot meet raises
// UsageError instead.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "osculant/bwspread.hpp"
#include "osculant/idealprobe.hpp"
#include "osculant/klein.hpp"
#include "osculant/report.hpp"

namespace osculant {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  unsigned degree = 2;
  unsigned threads = 1;
};

namespace detail {

template <class E>
Json skew_witness_json(const SkewWitness<E>& w) {
  return Json{{"first", to_json(w.first)},
              {"second", to_json(w.second)},
              {"criterion", to_json(w.criterion)},
              {"determinant", to_json(w.determinant)},
              {"lines_meet", w.lines_meet}};
}

inline std::optional<CheckStatus> predict(std::optional<bool> expected) {
  if (!expected) return std::nullopt;
  return status_of(*expected);
}

}  // namespace detail

/// Spread, covering, maximality and dual-spread certification over any
/// supported field.
inline Report cmd_certify(const FieldSpec& spec, const CommandOptions& opts = {}) {
  Report r;
  r.command = "certify";
  r.field = spec.to_string();
  const std::uint64_t samples = opts.samples.value_or(200);
  r.parameters = {{"seed", opts.seed}, {"samples", samples}};
  visit_field(spec, [&](const auto& field) {
    using K = std::decay_t<decltype(field)>;
    const CertifyOptions copts{opts.seed, samples, opts.threads};
    const SpreadRegime regime = classify_field(field);
    r.regime = std::string(regime_name(regime));
    const bool char3 = regime == SpreadRegime::Char3;
    const bool spread = regime == SpreadRegime::SpreadAndCovering;
    const bool partial_expected = regime_is_partial_spread(regime);
    // in characteristic 3 nothing is predicted for the spread checks
    auto expect = [&](bool v) { return char3 ? std::optional<bool>() : std::optional<bool>(v); };

    r.checks.push_back(timed_check("regime", "the regime follows from cube roots in the field", [&](Check& c) {
      const auto profile = cube_root_profile(field);
      c.status = CheckStatus::Pass;
      c.predicted = CheckStatus::Pass;
      c.counts = {{"characteristic", field.characteristic()},
                  {"cubing_surjective", profile.cubing_surjective},
                  {"nontrivial_cube_root_of_unity", profile.nontrivial_unity_root.has_value()}};
      if (profile.nontrivial_unity_root) c.witness = {{"cube_root_of_unity", to_json(*profile.nontrivial_unity_root)}};
    }));

    std::optional<PartialSpreadCert<Elem<K>>> partial_cert;
    r.checks.push_back(timed_check(
        "partial_spread", "the osculating tangents and g_inf are pairwise skew iff no cube root of unity other than 1",
        [&](Check& c) {
          const auto& partial = partial_cert.emplace(certify_partial_spread(field, copts));
          c.status = status_of(partial.holds);
          c.predicted = detail::predict(expect(partial_expected));
          c.counts = {{"method", partial.method}, {"lines", partial.lines}, {"pairs_checked", partial.pairs_checked}};
          if (partial.witness) c.witness = detail::skew_witness_json(*partial.witness);
        }));
    const auto& partial = *partial_cert;
    r.checks.push_back(timed_check("skew_routes_agree", "closed-form skew criterion equals the 4x4 determinant",
                                   [&](Check& c) {
                                     c.status = status_of(partial.routes_agree);
                                     c.predicted = CheckStatus::Pass;
                                     c.counts = {{"pairs_checked", partial.pairs_checked}};
                                   }));

    std::optional<CoveringCert<Elem<K>>> covering_cert;
    r.checks.push_back(timed_check("covering", "every point lies on a line of O iff cubing is onto", [&](Check& c) {
      const auto& covering = covering_cert.emplace(certify_covering(field, copts));
      c.status = status_of(covering.holds);
      c.predicted = detail::predict(expect(spread));
      c.counts = {{"method", covering.method},
                  {"points", covering.points},
                  {"covered", covering.covered},
                  {"uncovered", covering.uncovered},
                  {"multiply_covered", covering.multiply_covered},
                  {"incidences", covering.incidences},
                  {"exact_partition", covering.exact_partition}};
      if (covering.witness) c.witness = {{"uncovered_point", to_json(*covering.witness)}};
    }));
    const auto& covering = *covering_cert;
    r.checks.push_back(timed_check("covering_routes_agree", "solved lines through a point match the incidence scan",
                                   [&](Check& c) {
                                     c.status = status_of(covering.analytic_agrees);
                                     c.predicted = CheckStatus::Pass;
                                     c.counts = {{"points", covering.points}};
                                   }));

    if (char3) {
      r.checks.push_back(skipped_check("omega_covered", "every point of omega lies on a line of O",
                                       "characteristic 3"));
      r.checks.push_back(skipped_check("maximal_partial_spread", "a partial spread covering omega is maximal",
                                       "characteristic 3"));
    } else {
      std::optional<MaximalityCert<Elem<K>>> maximal_cert;
      r.checks.push_back(timed_check("omega_covered", "every point of omega lies on a line of O", [&](Check& c) {
        const auto& maximal = maximal_cert.emplace(certify_maximality(field, copts));
        c.status = status_of(maximal.holds);
        c.predicted = CheckStatus::Pass;
        c.counts = {{"method", maximal.method},
                    {"points_checked", maximal.points_checked},
                    {"exhaustive_agrees", maximal.exhaustive_agrees}};
        if (maximal.witness) c.witness = {{"point", to_json(*maximal.witness)}};
      }));
      const auto& maximal = *maximal_cert;
      r.checks.push_back(timed_check("maximal_partial_spread", "a partial spread covering omega is maximal",
                                     [&](Check& c) {
                                       c.status = status_of(partial.holds && maximal.holds);
                                       c.predicted = status_of(partial_expected);
                                     }));
    }

    if constexpr (K::is_finite()) {
      std::optional<DualSpreadCert<Elem<K>>> dual_cert;
      r.checks.push_back(timed_check("dual_spread", "every plane contains exactly one line of O", [&](Check& c) {
        const auto& dual = dual_cert.emplace(certify_dual_spread(field, copts));
        c.status = status_of(dual.holds);
        c.predicted = detail::predict(expect(spread));
        c.counts = {{"planes", dual.planes},
                    {"exactly_one", dual.exactly_one},
                    {"none", dual.none},
                    {"several", dual.several}};
        if (dual.witness) c.witness = {{"plane", to_json(*dual.witness)}, {"lines_in_plane", dual.witness_count}};
      }));
      const auto& dual = *dual_cert;
      r.checks.push_back(timed_check("planes_through_Z", "every plane through Z contains a line of O",
                                     [&](Check& c) {
                                       // dual to omega_covered, so it holds whenever 3 is invertible
                                       c.status = status_of(dual.planes_through_z_hit);
                                       c.predicted = detail::predict(expect(true));
                                     }));
      r.checks.push_back(timed_check("duality_preserves_O", "the duality of F maps O onto itself", [&](Check& c) {
        c.status = status_of(duality_preserves_O(field));
        c.predicted = CheckStatus::Pass;
      }));
    } else {
      r.checks.push_back(skipped_check("dual_spread", "every plane contains exactly one line of O", "infinite field"));
      r.checks.push_back(skipped_check("planes_through_Z", "every plane through Z contains a line of O",
                                       "infinite field"));
      r.checks.push_back(skipped_check("duality_preserves_O", "the duality of F maps O onto itself",
                                       "infinite field"));
    }
  });
  return r;
}

/// Klein-image checks over a finite field of characteristic other than 3.
inline Report cmd_klein(const FieldSpec& spec, const CommandOptions& opts = {}) {
  if (!spec.is_finite()) throw UsageError("klein needs a finite field (gf:<p>)");
  Report r;
  r.command = "klein";
  r.field = spec.to_string();
  const PrimeField field(spec.modulus());
  r.regime = std::string(regime_name(classify_field(field)));
  const char* variety_anchor = "V(h1,h2,h3,k) is the Klein image of O and the pencil L[Z,omega]";
  const char* regulus_anchor = "the lines T(s, s^2 + t) with g_inf form a regulus whose opposite contains g(1,s)";
  const char* projection_anchor = "projection through C-perp sends kappa of each tangent to (1,3s,0,3s^2,s^3,0)";
  if (field.characteristic() == 3) {
    r.checks.push_back(skipped_check("variety_equality", variety_anchor, "characteristic 3"));
    r.checks.push_back(skipped_check("reguli", regulus_anchor, "characteristic 3"));
    r.checks.push_back(skipped_check("projection", projection_anchor, "characteristic 3"));
    return r;
  }

  r.checks.push_back(timed_check("variety_equality", variety_anchor, [&](Check& c) {
    const auto rep = verify_variety_equality(field, opts.threads);
    c.status = status_of(rep.equal);
    c.predicted = CheckStatus::Pass;
    c.counts = {{"candidates", rep.candidates},
                {"variety_points", rep.variety_points},
                {"target_points", rep.target_points},
                {"expected", rep.expected}};
    if (rep.extra) c.witness["extra"] = to_json(*rep.extra);
    if (rep.missing) c.witness["missing"] = to_json(*rep.missing);
  }));

  r.checks.push_back(timed_check("reguli", regulus_anchor, [&](Check& c) {
    std::uint64_t checked = 0, good = 0;
    for (const auto& s : field.elements()) {
      ++checked;
      const auto rc = verify_regulus(field, regulus_minus(field, s));
      const bool ok = rc.is_regulus && rc.opposite.contains(generator(field, field.one(), s));
      good += ok;
      if (!ok && c.witness.is_null()) c.witness = {{"s", to_json(s)}};
    }
    c.status = status_of(good == checked);
    c.predicted = CheckStatus::Pass;
    c.counts = {{"reguli", checked}, {"lines_per_regulus", field.order() + 1}};
  }));

  r.checks.push_back(timed_check("projection", projection_anchor, [&](Check& c) {
    const auto b = subspace_B(field);
    std::uint64_t checked = 0, good = 0;
    for (const auto& [u1, u2] : o_parameters(field)) {
      ++checked;
      const auto image = project_through_Cperp(field, kappa_osculating(field, u1, u2));
      const bool ok = image == projected_cubic(field, u1) && b.contains(image.coords());
      good += ok;
      if (!ok && c.witness.is_null()) c.witness = {{"u", to_json(Params<Fp>{u1, u2})}};
    }
    c.status = status_of(good == checked);
    c.predicted = CheckStatus::Pass;
    c.counts = {{"tangents", checked}};
  }));
  return r;
}

/// The characteristic-3 parabolic congruence and the osculating-plane pencil.
inline Report cmd_char3(const FieldSpec& spec, const CommandOptions& opts = {}) {
  if (spec.characteristic() != 3) throw UsageError("char3 needs a field of characteristic 3 (gf:3)");
  Report r;
  r.command = "char3";
  r.field = spec.to_string();
  const PrimeField field(spec.modulus());
  r.regime = std::string(regime_name(classify_field(field)));
  r.checks.push_back(timed_check(
      "parabolic_congruence", "O with the pencil L[Z,omega] is the congruence of lines meeting n, Klein image Q meet D",
      [&](Check& c) {
        const auto rep = char3_congruence_check(field, opts.threads);
        c.status = status_of(rep.holds());
        c.predicted = CheckStatus::Pass;
        c.counts = {{"congruence_lines", rep.congruence_lines},
                    {"qd_points", rep.qd_points},
                    {"expected", rep.expected},
                    {"images_in_QD", rep.images_in_QD},
                    {"all_meet_n", rep.all_meet_n},
                    {"equals_O_and_pencil", rep.equals_O_and_pencil},
                    {"cubing_surjective", rep.cubing_surjective},
                    {"kappa_n_is_vertex", rep.kappa_n_is_vertex}};
        Json lines = Json::array();
        for (const auto& y : kappa_O_and_pencil(field)) lines.push_back(to_json(y));
        c.witness = {{"kappa_n", to_json(rep.kappa_n)}, {"klein_images", lines}};
        if (rep.witness) c.witness["counterexample"] = to_json(*rep.witness);
      }));
  r.checks.push_back(timed_check("osculating_plane_pencil", "all osculating planes of the cubic contain the axis D-perp",
                                 [&](Check& c) {
                                   const auto rep = osculating_plane_pencil_check(field);
                                   c.status = status_of(rep.holds());
                                   c.predicted = CheckStatus::Pass;
                                   c.counts = {{"points_checked", rep.points_checked},
                                               {"planes_containing_axis", rep.planes_containing_axis},
                                               {"axis_is_Dperp", rep.axis_is_Dperp}};
                                   if (rep.witness) c.witness = {{"s", to_json(*rep.witness)}};
                                 }));
  return r;
}

/// Degree-bounded probe over Q: forms through sampled kappa(O) vanish on
/// the pencil line, so no set of forms cuts out kappa(O) alone.
inline Report cmd_ideal(const CommandOptions& opts) {
  if (opts.degree < 1 || opts.degree > 3) throw UsageError("--degree must be 1, 2 or 3");
  static constexpr std::size_t kDefaultSamples[] = {0, 30, 60, 120};
  const std::size_t samples = opts.samples.value_or(kDefaultSamples[opts.degree]);
  if (samples == 0) throw UsageError("--samples must be positive");
  Report r;
  r.command = "ideal";
  r.field = "q";
  r.regime = std::string(regime_name(SpreadRegime::MaximalPartialNotCovering));
  r.parameters = {{"seed", opts.seed}, {"samples", samples}, {"degree", opts.degree}};

  std::optional<VanishingSpace> vs;
  Check interpolate = timed_check("vanishing_space", "forms of the given degree through the sampled kappa(O)",
                                  [&](Check& c) {
                                    vs = vanishing_space(sample_kappa_O(samples, opts.seed), opts.degree, opts.threads);
                                    c.status = CheckStatus::Pass;
                                    c.predicted = std::nullopt;
                                    c.counts = {{"monomials", vs->basis.size()},
                                                {"evaluation_rank", vs->rank},
                                                {"nullspace_dimension", vs->forms.size()},
                                                {"note", "computed at these samples only"}};
                                  });
  r.checks.push_back(std::move(interpolate));

  const auto probe = pencil_closure_probe(*vs, opts.seed);
  r.checks.push_back(timed_check("pencil_vanishing", "every form vanishing on kappa(O) vanishes on kappa(L[Z,omega])",
                                 [&](Check& c) {
                                   c.status = status_of(probe.pencil_vanishing);
                                   c.predicted = CheckStatus::Pass;
                                   c.counts = {{"pencil_points", probe.pencil_points},
                                               {"forms", probe.nullspace_dimension}};
                                   if (probe.witness) c.witness = {{"pencil_point", to_json(*probe.witness)}};
                                 }));
  if (opts.degree == 2) {
    r.checks.push_back(timed_check("known_quadrics", "k, h1, h2, h3 are independent and vanish on kappa(O)",
                                   [&](Check& c) {
                                     c.status = status_of(probe.contains_known_forms);
                                     c.predicted = CheckStatus::Pass;
                                   }));
  } else {
    r.checks.push_back(skipped_check("known_quadrics", "k, h1, h2, h3 are independent and vanish on kappa(O)",
                                     "degree is not 2"));
  }
  r.checks.push_back(timed_check("nonalgebraicity", "O is not an algebraic set of lines", [&](Check& c) {
    const auto ev = nonalgebraicity_evidence(*vs);
    c.status = status_of(ev.holds());
    c.predicted = CheckStatus::Pass;
    c.counts = {{"forms", ev.forms}, {"witness_in_kappa_O", ev.witness_in_kappa_O}};
    c.witness = {{"point", to_json(ev.witness)}, {"on_common_zero_set", ev.witness_on_zero_set}};
  }));
  return r;
}

}  // namespace osculant
