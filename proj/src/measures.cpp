#include "diagre/measures.hpp"

#include <sstream>

namespace diagre {

int big_d(const TermPtr& t) {
  int max_def = 0;
  for (const GenRef& g : generators_of(t)) {
    int d = g.defect();
    if (d < 0) d = -d;
    if (d > max_def) max_def = d;
  }
  return 2 + max_def;
}

BigInt alpha_measure(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id:
      return 0;
    case TermKind::Gen:
      return 0;
    case TermKind::Swap: {
      BigInt n = t->swap_n(), m = t->swap_m();
      return n * m * m + 1;
    }
    case TermKind::Seq:
    case TermKind::Par:
      return alpha_measure(t->left()) + alpha_measure(t->right());
  }
  return 0;
}

BigInt beta_measure(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id:
      return 2;
    case TermKind::Gen:
    case TermKind::Swap:
      return 5;
    case TermKind::Seq:
      return 2 * beta_measure(t->left()) + beta_measure(t->right()) + 1;
    case TermKind::Par: {
      BigInt u = beta_measure(t->left());
      return u * u * beta_measure(t->right());
    }
  }
  return 0;
}

BigInt gamma_measure(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id:
      return t->id_width();
    case TermKind::Gen:
    case TermKind::Swap:
      return 0;
    case TermKind::Seq:
      return gamma_measure(t->left()) + gamma_measure(t->right());
    case TermKind::Par:
      return gamma_measure(t->left()) + 2 * gamma_measure(t->right());
  }
  return 0;
}

BigRat delta_measure(const TermPtr& t, int d_param) {
  switch (t->kind()) {
    case TermKind::Id:
    case TermKind::Gen:
    case TermKind::Swap:
      return 0;
    case TermKind::Seq:
      return delta_measure(t->left(), d_param) +
             delta_measure(t->right(), d_param) / d_param;
    case TermKind::Par:
      if (is_id(t->left()))
        return BigRat(t->left()->id_width()) +
               delta_measure(t->right(), d_param);
      return delta_measure(t->left(), d_param) +
             delta_measure(t->right(), d_param);
  }
  return 0;
}

namespace {

MeasureTuple tuple_with_d(const TermPtr& t, int d_param) {
  MeasureTuple m;
  m.alpha = alpha_measure(t);
  m.beta = beta_measure(t);
  m.gamma = gamma_measure(t);
  m.delta = delta_measure(t, d_param);
  m.d_param = d_param;
  return m;
}

}  // namespace

MeasureTuple measure_tuple(const TermPtr& t, Mode mode) {
  if (mode == Mode::Perm && !symmetry_only(t))
    throw SymmetryError("perm-mode measures are defined on symmetry-only terms");
  return tuple_with_d(t, big_d(t));
}

bool lex_less(const MeasureTuple& a, const MeasureTuple& b, Mode mode) {
  if (a.d_param != b.d_param)
    throw MeasureError("comparing measures with different D parameters: " +
                       std::to_string(a.d_param) + " vs " +
                       std::to_string(b.d_param));
  if (mode == Mode::Pro) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.delta < b.delta;
  }
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  if (a.gamma != b.gamma) return a.gamma < b.gamma;
  return a.delta < b.delta;
}

DecreaseReport verify_decrease(const RewriteStep& step, Mode mode) {
  int n = rule_number(step.rule);
  int d_param = big_d(step.before);

  DecreaseReport rep;
  rep.rule = step.rule;
  TermPtr redex_before = subterm_at(step.before, step.position);
  TermPtr redex_after = subterm_at(step.after, step.position);
  rep.before = tuple_with_d(redex_before, d_param);
  rep.after = tuple_with_d(redex_after, d_param);

  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.detail = why;
    return rep;
  };

  if (big_d(step.after) != d_param)
    return fail("D changed from " + std::to_string(d_param) + " to " +
                std::to_string(big_d(step.after)));

  const MeasureTuple& b = rep.before;
  const MeasureTuple& a = rep.after;

  if (n <= 9) {
    if (mode == Mode::Perm && a.alpha != b.alpha)
      return fail("alpha not preserved");
    if (!(a.beta < b.beta)) return fail("beta not strictly decreased");
  } else if (n <= 11) {
    if (a.beta != b.beta) return fail("beta not preserved");
    if (!(b.delta >= a.delta + BigRat(1, d_param)))
      return fail("delta not decreased by at least 1/" +
                  std::to_string(d_param));
  } else if (n <= 14) {
    if (!(a.alpha < b.alpha)) return fail("alpha not strictly decreased");
  } else if (n <= 16) {
    if (a.alpha != b.alpha) return fail("alpha not preserved");
    if (a.beta != b.beta) return fail("beta not preserved");
    if (!(a.gamma < b.gamma)) return fail("gamma not strictly decreased");
  } else if (n <= 20) {
    if (!(a.alpha < b.alpha)) return fail("alpha not strictly decreased");
  } else {
    if (a.alpha != b.alpha) return fail("alpha not preserved");
    if (a.beta != b.beta) return fail("beta not preserved");
    if (a.gamma != b.gamma) return fail("gamma not preserved");
    if (!(b.delta >= a.delta + BigRat(1, 2)))
      return fail("delta not decreased by at least 1/2");
  }

  // The lexicographic measure of the whole term must drop as well.
  MeasureTuple whole_before = tuple_with_d(step.before, d_param);
  MeasureTuple whole_after = tuple_with_d(step.after, d_param);
  if (!lex_less(whole_after, whole_before, mode))
    return fail("whole-term lexicographic measure did not decrease");

  rep.ok = true;
  return rep;
}

std::string report_line(const DecreaseReport& r) {
  std::ostringstream out;
  out << rule_name(r.rule) << " α:" << r.before.alpha << "→"
      << r.after.alpha << " β:" << r.before.beta << "→"
      << r.after.beta << " γ:" << r.before.gamma << "→"
      << r.after.gamma << " δ:" << r.before.delta << "→"
      << r.after.delta << (r.ok ? " [OK]" : " [FAIL " + r.detail + "]");
  return out.str();
}

}  // namespace diagre
