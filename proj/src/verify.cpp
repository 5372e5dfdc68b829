#include "linksig/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "linksig/io.hpp"

namespace linksig {

namespace {

int abs_i(int x) { return x < 0 ? -x : x; }
std::string istr(long x) { return std::to_string(x); }

bool congruent_mod(int a, int b, int m) { return ((a - b) % m + m) % m == 0; }

// Multiplicity of the critical point as a root of A_L (the stored value
// counts roots of (t-1) A_L, so One carries one extra).
int mult_in_a(const StepPoint& pt) {
  return pt.point.kind() == CircleKind::One ? pt.multiplicity - 1 : pt.multiplicity;
}

int total_jump(const StepPoint& pt) { return pt.arc_after - pt.arc_before; }

// ju^-(-1): the stored value when -1 is a critical point, otherwise 0
// (sigma is constant across the final arc through -1).
int ju_minus_at_pi(const StepFunction& sf) {
  if (!sf.ends_at_pi) return 0;
  return sf.points.back().jumps->first;
}

}  // namespace

LinkData analyze(const SeifertMatrix& s, int samples_per_arc) {
  LinkData ld{s, link_invariants(s), {}};
  ld.step = signature_function(s, ld.invariants, samples_per_arc);
  return ld;
}

TheoremReport check_main(const LinkData& ld, bool inject_fault) {
  const int fault = inject_fault ? 1 : 0;
  TheoremReport r;
  r.theorem_id = "main";
  const LaurentPoly& a = ld.invariants.a_poly;
  const int mu = ld.seifert.components();

  int jump_sites = 0;
  bool confined = true;
  for (const StepPoint& pt : ld.step.points) {
    const bool moved = total_jump(pt) != 0 ||
                       (pt.jumps && (pt.jumps->first != 0 || pt.jumps->second != 0));
    if (!moved) continue;
    ++jump_sites;
    if (pt.multiplicity < 1) confined = false;
  }
  r.add("discontinuities confined to roots of (t-1)A_L", istr(jump_sites) + " jump sites",
        "all at candidate roots", confined);

  for (const StepPoint& pt : ld.step.points) {
    if (pt.point.is_boundary()) continue;
    const int m = mult_in_a(pt);
    if (pt.jumps) {
      const bool ok = abs_i(pt.jumps->first) <= m - fault && abs_i(pt.jumps->second) <= m - fault;
      r.add("|ju(+-)| <= mult at " + pt.point.report_form(),
            "(" + istr(pt.jumps->first) + ", " + istr(pt.jumps->second) + ")", "mult " + istr(m),
            ok);
    } else {
      const int jt = total_jump(pt);
      r.add("|arc difference| <= 2 mult at unresolved " + pt.point.report_form(), istr(jt),
            "2 mult = " + istr(2 * m), abs_i(jt) <= 2 * m - fault, /*weakened=*/true);
    }
  }

  const int m_minus = multiplicity(a, LaurentPoly({1, 1}, 0));
  r.add("mult_{-1}(A_L) is even", istr(m_minus), "even", m_minus % 2 == 0);

  const int ju_pi = ju_minus_at_pi(ld.step);
  r.add("|ju(+-)(-1)| <= mult_{-1}(A_L)/2", istr(ju_pi), istr(m_minus / 2),
        abs_i(ju_pi) <= m_minus / 2);

  const int ju_one = ld.step.sigma_plus_at_one();
  r.add("|ju(+-)(1)| <= mu - 1", istr(ju_one), istr(mu - 1), abs_i(ju_one) <= mu - 1);

  r.witnesses.push_back("A_L = " + a.str());
  return r;
}

TheoremReport check_corollary_bound(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "bound";
  const int m_minus = multiplicity(ld.invariants.a_poly, LaurentPoly({1, 1}, 0));
  int roots_away_from_one = 0;
  for (const StepPoint& pt : ld.step.points) {
    if (pt.point.kind() == CircleKind::One) continue;
    if (pt.point.kind() == CircleKind::MinusOne)
      roots_away_from_one += pt.multiplicity;
    else
      roots_away_from_one += 2 * pt.multiplicity;  // conjugate pair
  }
  const int sigma = ld.step.murasugi;
  const int lhs = abs_i(sigma) + 1 - ld.seifert.components() + m_minus / 2;
  r.add("|sigma_L| + 1 - mu + mult_{-1}(A_L)/2 <= #circle roots of A_L away from 1",
        istr(lhs), istr(roots_away_from_one), lhs <= roots_away_from_one);
  r.witnesses.push_back("sigma_L = " + istr(sigma));
  return r;
}

TheoremReport check_bound2(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "bound2";
  if (ld.invariants.h_index != 1) {
    r.applicable = false;
    r.witnesses.push_back("Delta_L = 0; theorem not applicable");
    return r;
  }
  // Delta_L = A_L here.
  bool confined = true;
  for (const StepPoint& pt : ld.step.points) {
    int delta_mult = mult_in_a(pt);
    bool discont;
    if (pt.point.kind() == CircleKind::One)
      discont = ld.step.sigma_plus_at_one() != 0;
    else if (pt.jumps)
      discont = pt.jumps->first != 0 || pt.jumps->second != 0;
    else
      discont = total_jump(pt) != 0;
    if (discont && delta_mult < 1) confined = false;
  }
  r.add("discontinuities confined to roots of Delta_L", "observed jumps", "roots of Delta_L",
        confined);

  int circle_roots_count = 0;
  for (const StepPoint& pt : ld.step.points) {
    const int m = mult_in_a(pt);
    circle_roots_count += pt.point.is_boundary() ? m : 2 * m;
  }
  const int m_minus = multiplicity(ld.invariants.a_poly, LaurentPoly({1, 1}, 0));
  const int lhs = abs_i(ld.step.murasugi) + m_minus / 2;
  r.add("|sigma_L| + mult_{-1}(Delta_L)/2 <= #circle roots of Delta_L", istr(lhs),
        istr(circle_roots_count), lhs <= circle_roots_count);
  return r;
}

TheoremReport check_cong(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "cong";
  for (const StepPoint& pt : ld.step.points) {
    if (pt.point.is_boundary()) continue;
    const int m = mult_in_a(pt);
    const int jt = total_jump(pt);
    r.add("ju = 2 mult (mod 4) at " + pt.point.report_form(), istr(jt),
          "2*" + istr(m) + " (mod 4)", congruent_mod(jt, 2 * m, 4));
    if (m == 1) {
      if (pt.jumps) {
        const bool ok = pt.jumps->first == pt.jumps->second && abs_i(pt.jumps->first) == 1;
        r.add("mult 1 forces ju^- = ju^+ = +-1 at " + pt.point.report_form(),
              "(" + istr(pt.jumps->first) + ", " + istr(pt.jumps->second) + ")", "(+-1, +-1)",
              ok);
      } else {
        r.add("mult 1 forces |arc difference| = 2 at " + pt.point.report_form(), istr(jt),
              "+-2", abs_i(jt) == 2, /*weakened=*/true);
      }
    }
  }
  return r;
}

TheoremReport check_even(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "even";
  const int m1 = multiplicity(ld.invariants.a_poly, LaurentPoly({-1, 1}, 0));
  const int total = m1 + ld.seifert.components() + ld.invariants.h_index;
  r.add("mult_1(A_L) + mu_L + h_L is even",
        istr(m1) + " + " + istr(ld.seifert.components()) + " + " + istr(ld.invariants.h_index),
        "even", total % 2 == 0);
  return r;
}

TheoremReport check_estmult(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "estmult";
  const int mu = ld.seifert.components();
  const int h = ld.invariants.h_index;
  const int m1 = multiplicity(ld.invariants.a_poly, LaurentPoly({-1, 1}, 0));
  if (h == 1)
    r.add("mult_1(Delta_L) >= mu - 1", istr(m1), istr(mu - 1), m1 >= mu - 1);
  else
    r.witnesses.push_back("Delta_L = 0; lemma part skipped");
  r.add("mult_1(A_L) >= mu - h", istr(m1), istr(mu - h), m1 >= mu - h);
  return r;
}

TheoremReport check_module7(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "module7";
  int phi_odd_sum = 0;
  for (const StepPoint& pt : ld.step.points) {
    if (pt.point.is_boundary()) continue;
    auto [phi_o, phi_e] = phi_counts_at(ld.invariants, pt.point);
    phi_odd_sum += phi_o;
    const int jt = total_jump(pt);
    r.add("|ju| <= 2 phi_o at " + pt.point.report_form(), istr(jt), "2*" + istr(phi_o),
          abs_i(jt) <= 2 * phi_o);
    r.add("|ju| = 2 phi_o (mod 4) at " + pt.point.report_form(), istr(abs_i(jt)),
          "2*" + istr(phi_o) + " (mod 4)", congruent_mod(abs_i(jt), 2 * phi_o, 4));
  }
  auto [phi_o_pi, phi_e_pi] =
      phi_counts_at(ld.invariants, CirclePoint::minus_one());
  (void)phi_o_pi;
  const int ju_pi = ju_minus_at_pi(ld.step);
  r.add("|ju(+-)(-1)| <= phi_e(L,-1)", istr(ju_pi), istr(phi_e_pi),
        abs_i(ju_pi) <= phi_e_pi);
  r.add("|ju(+-)(-1)| = phi_e(L,-1) (mod 2)", istr(abs_i(ju_pi)), istr(phi_e_pi) + " (mod 2)",
        congruent_mod(abs_i(ju_pi), phi_e_pi, 2));

  const int lhs = abs_i(ld.step.murasugi - ld.step.sigma_plus_at_one());
  const int rhs = phi_e_pi + phi_odd_sum;
  r.add("|sigma_L - sigma_L^+(1)| <= phi_e(L,-1) + sum phi_o", istr(lhs), istr(rhs), lhs <= rhs);
  return r;
}

TheoremReport check_oracles(const LinkData& ld) {
  TheoremReport r;
  r.theorem_id = "oracles";
  const SeifertMatrix& s = ld.seifert;
  const int n = s.n();

  if (n <= 6) {
    bool all_match = true;
    for (int i = 1; i <= n + 1; ++i) {
      const LaurentPoly by_minors = higher_alexander_by_minors(s, i);
      if (by_minors != ld.invariants.delta(i)) all_match = false;
    }
    r.add("minor-GCD Deltas match invariant-factor Deltas (n <= 6)", "all i in 1..n+1",
          "equal", all_match);
  }

  const Matrix<LaurentPoly> w = w_matrix(s);
  std::optional<LaurentPoly> det_w;
  if (ld.invariants.h_index == 1) det_w = laurent_determinant(w);

  for (const StepPoint& pt : ld.step.points) {
    if (pt.point.kind() != CircleKind::RationalCos) continue;
    const LaurentPoly f = trace_factor_of(pt.point);
    const DiagonalForm form = diagonalize_localized(w, f);
    const PredictedJump pj = jump_from_diagonal(form, pt.point);
    const bool match = pt.jumps && pj.ju == *pt.jumps;
    r.add("localized-diagonal jumps match sampled jumps at " + pt.point.report_form(),
          "(" + istr(pj.ju.first) + ", " + istr(pj.ju.second) + ")",
          pt.jumps ? "(" + istr(pt.jumps->first) + ", " + istr(pt.jumps->second) + ")" : "?",
          match);
    const int e_total = form.total_exponent();
    const int worst =
        std::max(abs_i(pj.ju.first), abs_i(pj.ju.second));
    r.add("lemma bound |ju(+-)| <= e_rho at " + pt.point.report_form(), istr(worst),
          istr(e_total), worst <= e_total);
    if (det_w) {
      const int det_mult = multiplicity(*det_w, f);
      r.add("sum of epsilons equals mult_f(det W) at " + pt.point.report_form(), istr(e_total),
            istr(det_mult), e_total == det_mult);
    }
  }

  const MinusOneJumpBound m1 = jump_at_minus_one(s, ld.invariants);
  const int ju_pi = ju_minus_at_pi(ld.step);
  r.add("W* diagonalization bound respected at -1", istr(abs_i(ju_pi)),
        "|D - E| = " + istr(m1.bound), abs_i(ju_pi) <= m1.bound);
  r.add("W* diagonalization predicts ju^-(-1) exactly", istr(ju_pi), istr(m1.exact_ju_minus),
        ju_pi == m1.exact_ju_minus);

  const EvennessReport ev = evenness_witness(s, ld.invariants);
  r.add("e_{t+1/t}(W**) is even", istr(ev.e_total), "even", ev.is_even);
  r.add("e_{t+1/t}(W**) = mult_1(A_L) + 2g + mu - h", istr(ev.e_total), istr(ev.expected),
        ev.matches_formula);

  const auto* at_one = std::get_if<SignatureValue>(&ld.step.points.front().value);
  r.add("sigma(1) = 0", at_one ? istr(at_one->signature) : "?", "0",
        at_one && at_one->signature == 0);
  return r;
}

std::vector<std::string> all_theorem_ids() {
  return {"main", "bound", "bound2", "cong", "even", "estmult", "module7"};
}

std::vector<TheoremReport> run_checks(const LinkData& ld, const std::vector<std::string>& ids) {
  std::vector<TheoremReport> out;
  for (const std::string& id : ids) {
    if (id == "main")
      out.push_back(check_main(ld));
    else if (id == "bound")
      out.push_back(check_corollary_bound(ld));
    else if (id == "bound2")
      out.push_back(check_bound2(ld));
    else if (id == "cong")
      out.push_back(check_cong(ld));
    else if (id == "even")
      out.push_back(check_even(ld));
    else if (id == "estmult")
      out.push_back(check_estmult(ld));
    else if (id == "module7")
      out.push_back(check_module7(ld));
    else if (id == "oracles")
      out.push_back(check_oracles(ld));
    else
      throw std::invalid_argument("unknown theorem id: " + id);
  }
  return out;
}

CampaignSummary run_campaign(const CampaignOptions& options) {
  CampaignSummary summary;
  summary.options = options;
  SplitMix64 master(options.seed);

  for (int idx = 0; idx < options.count; ++idx) {
    const int g = idx % 4;
    const int mu = (idx / 4) % 4 + 1;
    const std::uint64_t sub_seed = master.next();
    SeifertMatrix s = random_seifert(g, mu, options.size_bound, sub_seed);
    std::string name = "random(g=" + istr(g) + ",mu=" + istr(mu) + ",bound=" +
                       istr(options.size_bound) + ",seed=" + std::to_string(sub_seed) + ")";
    if (idx % 3 == 2) {
      s = random_congruence(s, 4, sub_seed ^ 0x9e3779b97f4a7c15ull);
      name += "+congruence";
    }
    const std::string witness = matrix_to_json(name, s.v());

    auto record = [&](const std::string& check, const std::string& detail) {
      summary.failures.push_back({idx, name, witness, check, detail});
    };

    try {
      LinkData ld = analyze(s, options.samples_per_arc);

      std::vector<TheoremReport> reports = run_checks(ld, all_theorem_ids());
      if (options.inject_fault) reports.push_back(check_main(ld, /*inject_fault=*/true));
      reports.push_back(check_oracles(ld));
      for (const TheoremReport& rep : reports) {
        summary.checks_run += static_cast<long>(rep.checks.size());
        if (rep.applicable && !rep.overall())
          for (const CheckItem& c : rep.checks)
            if (!c.pass)
              record(rep.theorem_id, c.description + ": " + c.lhs + " vs " + c.rhs);
      }

      for (const ShadowSample& sh :
           floating_shadow(s, ld.step, options.shadow_threshold)) {
        ++summary.shadow_samples;
        if (sh.checked) ++summary.shadow_checked;
        ++summary.checks_run;
        if (!sh.agrees)
          record("shadow", "floating signature disagrees with exact value at min |eig| = " +
                               std::to_string(sh.min_abs_eigenvalue));
      }
    } catch (const std::exception& e) {
      record("exception", e.what());
    }
    ++summary.matrices;
  }
  return summary;
}

}  // namespace linksig
