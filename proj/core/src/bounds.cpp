#include "meyersig/bounds.hpp"

namespace meyersig::bounds {

namespace {

void require_hypotheses(const Int& g, const Int& h, const Int& s, const Int& n) {
  if (h < 2)
    throw HypothesisViolation("bounds require fiber genus h >= 2");
  if (g < 1)
    throw HypothesisViolation("bounds require base genus g >= 1");
  if (s < 0 || n < 0)
    throw HypothesisViolation("singular fiber counts must be >= 0");
}

}  // namespace

Int separating_bound(const Int& g, const Int& h, const Int& n) {
  require_hypotheses(g, h, 0, n);
  return 6 * (3 * h - 1) * (g - 1) + 5 * n;
}

Int torelli_separating_bound(const Int& g, const Int& h, const Int& n) {
  require_hypotheses(g, h, 0, n);
  return 6 * (h - 1) * (g - 1) + 5 * n;
}

B2Bounds b2_bounds(const Int& s, const Int& g) {
  (void)g;  // enters the derivation only through b1 >= 2g >= 2
  B2Bounds b;
  b.b2_minus_lower = s + 1;
  b.b2_plus_lower = 1 + make_rat(s, 5);
  b.vacuous = (s == 0);
  return b;
}

CanonicalChain canonical_chain(const Int& g, const Int& h, const Int& s,
                               const Int& n) {
  require_hypotheses(g, h, s, n);
  CanonicalChain c;
  const Int chi = 4 * (g - 1) * (h - 1) + s + n;
  const Int sigma_upper = 2 * h * (2 * g - 2) + n - s;
  c.k2_upper = 2 * chi + 3 * sigma_upper;
  c.genus_sigma_upper = 2 * (10 * h - 4) * (g - 1) + 5 * n - s;
  c.degree = 2 * h - 2;
  c.kneser_lower = 2 * (h - 1) * (g - 1);
  return c;
}

const char* to_string(Verdict v) {
  return v == Verdict::Consistent ? "Consistent" : "NoSuchFibration";
}

BoundReport check(const Int& g, const Int& h, const Int& s, const Int& n,
                  bool torelli) {
  require_hypotheses(g, h, s, n);

  BoundReport report;
  report.g = g;
  report.h = h;
  report.s = s;
  report.n = n;
  report.torelli = torelli;
  report.chi = 4 * (g - 1) * (h - 1) + s + n;
  report.sigma_upper_closed = 2 * h * (2 * g - 2) + n - s;
  report.b2 = b2_bounds(s, g);
  report.chain = canonical_chain(g, h, s, n);

  report.entries.push_back(
      {"separating_bound", separating_bound(g, h, n), s <= separating_bound(g, h, n)});
  if (torelli)
    report.entries.push_back({"torelli_separating_bound",
                              torelli_separating_bound(g, h, n),
                              s <= torelli_separating_bound(g, h, n)});
  report.entries.push_back({"canonical_genus_chain", report.chain.genus_sigma_upper,
                            report.chain.kneser_lower <= report.chain.genus_sigma_upper});

  report.verdict = Verdict::Consistent;
  for (const BoundEntry& e : report.entries) {
    if (!e.satisfied) {
      report.verdict = Verdict::NoSuchFibration;
      report.failing = e.name;
      break;
    }
  }
  return report;
}

BoundReport check(const fibration::FibrationData& data, bool torelli) {
  return check(data.base_genus, data.fiber_genus, data.separating_count(),
               data.nonseparating_count(), torelli);
}

}  // namespace meyersig::bounds
