#include "qseries/identities.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "formulas.hpp"

namespace qseries {

namespace {

namespace fm = formulas;

template <class F, Scalar S>
Formula<S> make_formula() {
  return {[](const ParameterPoint<S>& p, const TruncationPolicy& pol) { return F::lhs(p, pol); },
          [](const ParameterPoint<S>& p, const TruncationPolicy& pol) { return F::rhs(p, pol); },
          [](const ParameterPoint<S>& p) { return F::template constraints<S>(p); }};
}

template <class F>
IdentityDef entry(IdentityId id, std::string_view name, std::vector<Slot> slots,
                  std::string_view domain, std::string_view citation, std::string_view summary,
                  bool exact = false) {
  IdentityDef def{id,       name,    std::move(slots), domain, citation, summary,
                  make_formula<F, Complex>(), std::nullopt};
  if (exact) {
    def.exact = make_formula<F, FormalSeries>();
  }
  return def;
}

std::vector<IdentityDef> build_registry() {
  using S = Slot;
  using I = IdentityId;
  std::vector<IdentityDef> r;
  r.reserve(kIdentityCount);
  r.push_back(entry<fm::Jtp>(I::jtp, "JTP", {S::x}, "x != 0", "Jacobi triple product",
                             "(q, x, q/x; q)_inf = sum_n (-1)^n q^{n(n-1)/2} x^n", true));
  r.push_back(entry<fm::AndrewsAskey>(
      I::andrews_askey, "ANDREWS_ASKEY", {S::a, S::b, S::u, S::v},
      "max{|au|, |av|, |bu|, |bv|} < 1, uv != 0", "Andrews-Askey integral",
      "int_u^v (qx/u, qx/v)/(ax, bx) d_qx = (1-q) Delta(u,v) (abuv)/(au, av, bu, bv)"));
  r.push_back(entry<fm::AlSalamVerma>(
      I::al_salam_verma, "AL_SALAM_VERMA", {S::a, S::b, S::c, S::u, S::v},
      "max{|au|, |av|, |bu|, |bv|, |cu|, |cv|} < 1, uv != 0", "Al-Salam-Verma integral",
      "int_u^v (qx/u, qx/v, abcuvx)/(ax, bx, cx) d_qx = (1-q) Delta(u,v) (abuv, acuv, "
      "bcuv)/(au, av, bu, bv, cu, cv)"));
  r.push_back(entry<fm::Qint6>(
      I::qint6, "QINT6", {S::a, S::b, S::c, S::r, S::u, S::v},
      "max{|au|, |av|, |bu|, |bv|, |cu|, |cv|, |abr/c|} < 1, uv != 0, cr != 0",
      "six-parameter q-integral",
      "int_u^v (qx/u, qx/v, abrx)/(ax, bx, cx) d_qx as a 3phi2 in abr/c"));
  r.push_back(entry<fm::Qint7>(
      I::qint7, "QINT7", {S::a, S::b, S::c, S::d, S::r, S::u, S::v},
      "max{|au|, ..., |dv|} < 1 over a, b, c, d and u, v; |abr/c| < 1; |bduv| < 1; uv != 0, "
      "cr != 0",
      "seven-parameter q-integral",
      "int_u^v with integrand 3phi2(ar, ax, cx; acduvx, abrx; q, bduv) equals a 3phi2 in abr/c"));
  r.push_back(entry<fm::Qint7R>(
      I::qint7_r, "QINT7_R", {S::a, S::b, S::c, S::d, S::u, S::v},
      "max{|au|, ..., |dv|} < 1 over a, b, c, d and u, v; |bduv| < 1; uv != 0",
      "seven-parameter q-integral at r = cuv",
      "the r = cuv case, where the right 3phi2 equals 1"));
  r.push_back(entry<fm::SearsEquiv>(
      I::sears_equiv, "SEARS_EQUIV", {S::a, S::b, S::c, S::d, S::r, S::u, S::v},
      "max{|au|, ..., |cv|} < 1 over a, b, c and u, v; |abr/c| < 1; no poles at du, dv; uv != 0, "
      "cr != 0",
      "integral form of the Sears transformation",
      "int_u^v with integrand 3phi2(cduv, cduvx/r, cx; acduvx, bcduvx; q, abr/c)"));
  r.push_back(entry<fm::RamRecip>(
      I::ram_recip, "RAM_RECIP", {S::a, S::u, S::v}, "uv != 0, au, av not q^{-m}",
      "Ramanujan's reciprocity theorem",
      "(1-v/u) sum (-1)^n q^{n(n+1)/2} (v/u)^n/(av)_{n+1} + (u <-> v) = (q, u/v, v/u)/(au, av)", true));
  r.push_back(entry<fm::Recip5>(
      I::recip5, "RECIP5", {S::a, S::c, S::d, S::u, S::v},
      "max{|au|, |av|, |cu|, |cv|, |du|, |dv|} < 1, uv != 0", "five-variable reciprocity",
      "antisymmetrized (q/du, acuv)_n (dv)^n/(av, cv)_{n+1} series equals a product", true));
  r.push_back(entry<fm::Lambert>(
      I::lambert, "LAMBERT", {S::c, S::u, S::v},
      "|q/cu| < 1, |q/cv| < 1, cu, cv not q^{-m}, uv != 0", "Lambert series identity",
      "v sum (q/cu)^n/(1-cvq^n) - u sum (q/cv)^n/(1-cuq^n) = v (q, q, u/v, qv/u)/(cu, cv, q/cu, "
      "q/cv)",
      true));
  r.push_back(entry<fm::Recip7>(
      I::recip7, "RECIP7", {S::a, S::b, S::c, S::d, S::r, S::u, S::v},
      "max{|au|, ..., |dv|, |abr/d|, |abcruv/q|} < 1, uv != 0, dr != 0",
      "seven-variable reciprocity", "rho(a,b,c,d,r,u,v) - rho(a,b,c,d,r,v,u) in closed form"));
  r.push_back(entry<fm::Recip6>(
      I::recip6, "RECIP6", {S::a, S::b, S::c, S::d, S::u, S::v},
      "max{|au|, ..., |dv|, |abcdu^2v^2/q|} < 1, uv != 0, d != 0", "six-variable reciprocity",
      "the r = duv case of the seven-variable formula"));
  r.push_back(entry<fm::QBinomialTheorem>(I::qbinomial_thm, "QBINOMIAL_THM", {S::a, S::z},
                                          "|z| < 1", "q-binomial theorem",
                                          "sum (a)_n z^n/(q)_n = (az)/(z)"));
  r.push_back(entry<fm::QMehler>(
      I::qmehler, "QMEHLER", {S::a, S::b, S::s, S::t, S::z},
      "max{|asz|, |atz|, |bsz|, |btz|} < 1", "q-Mehler formula",
      "sum h_n(a,b) h_n(s,t) z^n/(q)_n = (abstz^2)/(asz, atz, bsz, btz)"));
  r.push_back(entry<fm::QpdeL>(
      I::qpde_l, "QPDE_L", {S::a, S::b, S::u, S::v, S::s, S::t},
      "max{|as|, |at|, |au|, |bs|, |bt|, |bu|, |abstu/v|} < 1, abuvst != 0",
      "q-partial differential equation for L", "D_{q,a} L = D_{q,b} L"));
  r.push_back(entry<fm::Sears32>(
      I::sears_32, "SEARS_32", {S::a, S::b, S::c, S::u, S::v},
      "a1 = a, a2 = b, a3 = c, b1 = u, b2 = v; |b1b2/(a1a2a3)| < 1, |b2/a3| < 1",
      "Sears 3phi2 transformation",
      "3phi2(a1, a2, a3; b1, b2; q, b1b2/(a1a2a3)) in terms of 3phi2(b1/a1, b1/a2, a3; b1, "
      "b1b2/(a1a2); q, b2/a3)"));
  r.push_back(entry<fm::LimitA>(I::limit_a, "LIMIT_A", {S::a, S::c, S::d},
                                "|d| < 1, a, c, d not q^{-m}", "limiting derivative identity",
                                "the v -> u limit of the five-variable formula, as a series in n"));
  r.push_back(entry<fm::LimitEulerD>(I::limit_euler_d, "LIMIT_EULER_D", {S::d}, "|d| < 1",
                                     "limiting identity in d",
                                     "sum [(n+1)(q/d)_n d^n - ...] = (q)^3/(d)^2", true));
  r.push_back(entry<fm::LimitDNegQ>(I::limit_d_negq, "LIMIT_D_NEGQ", {}, "none",
                                    "limiting identity at d = -q", "series = (q)^3/(-q)^2"));
  r.push_back(entry<fm::Lambert4>(I::lambert4, "LAMBERT4", {S::a}, "|q| < |a| < 1/|q|",
                                  "Lambert series for (q)^4/(qa, q/a)^2",
                                  "(q)^4/(qa, q/a)^2 = 1 + weighted Lambert series in a"));
  r.push_back(entry<fm::FourSquare>(I::four_square, "FOUR_SQUARE", {}, "none",
                                    "Jacobi four-square identity",
                                    "(1 + 2 sum q^{n^2})^4 = 1 + 8 sum nq^n/(1-q^n) - 32 sum "
                                    "nq^{4n}/(1-q^{4n})",
                                    true));
  r.push_back(entry<fm::FourTriangular>(I::four_triangular, "FOUR_TRIANGULAR", {}, "none",
                                        "Legendre four triangular numbers identity",
                                        "(sum q^{n(n+1)/2})^4 = sum (2n+1) q^n/(1-q^{2n+1})",
                                        true));
  return r;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

bool fail(std::string* why, std::string msg) {
  if (why != nullptr) {
    *why = std::move(msg);
  }
  return false;
}

std::string describe(const Complex& x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Tiny margin used for the predicate itself; samplers add their own margin.
constexpr double kPredicateMargin = 1e-12;

bool numeric_pole_free(const Complex& p, const Complex& q) {
  Complex pqk = p;
  for (int k = 0; k < 100000; ++k) {
    if (std::abs(1.0 - pqk) < kPredicateMargin) {
      return false;
    }
    if (std::abs(pqk) < 0.5) {
      return true;
    }
    pqk *= q;
  }
  return true;
}

}  // namespace

std::string_view mode_name(Mode m) { return m == Mode::numeric ? "numeric" : "exact"; }

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::passed:
      return "pass";
    case Outcome::failed:
      return "fail";
    case Outcome::near_trivial:
      return "near_trivial";
    case Outcome::skipped:
      return "skipped";
    case Outcome::error:
      return "error";
  }
  return "?";
}

const std::vector<IdentityDef>& registry() {
  static const std::vector<IdentityDef> reg = build_registry();
  return reg;
}

const IdentityDef& identity(IdentityId id) { return registry()[static_cast<std::size_t>(id)]; }

std::string_view identity_name(IdentityId id) { return identity(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  const std::string key = upper(name);
  for (const auto& def : registry()) {
    if (def.name == key) {
      return def.id;
    }
  }
  return std::nullopt;
}

bool in_domain(IdentityId id, const ParameterPoint<Complex>& point, std::string* why) {
  const Complex q = point.q();
  if (!detail::finite(q) || !(std::abs(q) < 1.0)) {
    return fail(why, "|q| must be < 1");
  }
  if (q == 0.0) {
    return fail(why, "q must be non-zero");
  }
  Constraints<Complex> c;
  try {
    c = identity(id).numeric.constraints(point);
  } catch (const Error& e) {
    return fail(why, e.what());
  }
  for (const Complex& z : c.nonzero) {
    if (z == 0.0) {
      return fail(why, "a required non-zero quantity is zero");
    }
  }
  for (const auto* list : {&c.bounded, &c.poles, &c.zeros}) {
    for (const Complex& z : *list) {
      if (!detail::finite(z)) {
        return fail(why, "a constrained quantity is not finite (division by zero)");
      }
    }
  }
  for (const Complex& z : c.bounded) {
    if (!(std::abs(z) < 1.0)) {
      return fail(why, "modulus constraint violated: |" + describe(z) + "| >= 1");
    }
  }
  for (const Complex& p : c.poles) {
    if (!numeric_pole_free(p, q)) {
      return fail(why, "pole: " + describe(p) + " q^k hits 1");
    }
  }
  return true;
}

bool in_domain(IdentityId id, const ParameterPoint<FormalSeries>& point, std::string* why) {
  const auto& def = identity(id);
  if (!def.exact) {
    return fail(why, std::string(def.name) + " has no exact-mode formula");
  }
  const FormalSeries& q = point.q();
  if (sgn(q.coeff(0)) != 0 || q.is_zero()) {
    return fail(why, "exact mode needs q with zero constant term and q != 0");
  }
  Constraints<FormalSeries> c;
  try {
    c = def.exact->constraints(point);
  } catch (const Error& e) {
    return fail(why, e.what());
  }
  for (const FormalSeries& z : c.nonzero) {
    if (z.is_zero()) {
      return fail(why, "a required non-zero quantity is zero");
    }
  }
  // Formal convergence replaces the modulus constraints; only the constant
  // term of each denominator factor matters.
  for (const FormalSeries& p : c.poles) {
    if (p.coeff(0) == 1) {
      return fail(why, "pole: a denominator factor has zero constant term");
    }
  }
  return true;
}

namespace {

template <Scalar S>
const Formula<S>& formula_for(IdentityId id) {
  const auto& def = identity(id);
  if constexpr (ScalarTraits<S>::exact) {
    if (!def.exact) {
      throw DomainError(std::string(def.name) + " has no exact-mode formula");
    }
    return *def.exact;
  } else {
    return def.numeric;
  }
}

template <Scalar S>
S evaluate(IdentityId id, const ParameterPoint<S>& point, const TruncationPolicy& policy,
           bool left) {
  policy.validate();
  std::string why;
  if (!in_domain(id, point, &why)) {
    throw DomainError(std::string(identity_name(id)) + ": " + why);
  }
  const auto& f = formula_for<S>(id);
  return left ? f.lhs(point, policy) : f.rhs(point, policy);
}

}  // namespace

Complex evaluate_lhs(IdentityId id, const ParameterPoint<Complex>& point,
                     const TruncationPolicy& policy) {
  return evaluate(id, point, policy, true);
}

Complex evaluate_rhs(IdentityId id, const ParameterPoint<Complex>& point,
                     const TruncationPolicy& policy) {
  return evaluate(id, point, policy, false);
}

FormalSeries evaluate_lhs(IdentityId id, const ParameterPoint<FormalSeries>& point,
                          const TruncationPolicy& policy) {
  return evaluate(id, point, policy, true);
}

FormalSeries evaluate_rhs(IdentityId id, const ParameterPoint<FormalSeries>& point,
                          const TruncationPolicy& policy) {
  return evaluate(id, point, policy, false);
}

namespace {

IdentityReport compare(IdentityId id, const ParameterPoint<Complex>& point, Complex lhs,
                       Complex rhs, double tolerance) {
  IdentityReport rep{id, Mode::numeric, point, lhs, rhs};
  const double ml = std::abs(lhs);
  const double mr = std::abs(rhs);
  rep.abs_err = std::abs(lhs - rhs);
  rep.rel_err = rep.abs_err / std::max({ml, mr, 1e-300});
  rep.pass = rep.rel_err <= tolerance;
  rep.near_trivial = ml < kNearTrivial && mr < kNearTrivial;
  if (rep.near_trivial) {
    rep.outcome = Outcome::near_trivial;
    rep.diagnostics = "both sides below 1e-12";
  } else {
    rep.outcome = rep.pass ? Outcome::passed : Outcome::failed;
  }
  return rep;
}

}  // namespace

IdentityReport check_identity(IdentityId id, const ParameterPoint<Complex>& point,
                              const TruncationPolicy& policy, double tolerance) {
  Complex lhs = evaluate_lhs(id, point, policy);
  Complex rhs = evaluate_rhs(id, point, policy);
  return compare(id, point, lhs, rhs, tolerance);
}

IdentityReport check_identity(IdentityId id, const ParameterPoint<FormalSeries>& point,
                              const TruncationPolicy& policy) {
  FormalSeries lhs = evaluate_lhs(id, point, policy);
  FormalSeries rhs = evaluate_rhs(id, point, policy);
  IdentityReport rep{id, Mode::exact, point, lhs, rhs};
  double max_diff = 0.0;
  double max_coeff = 0.0;
  std::optional<std::size_t> first_diff;
  for (std::size_t k = 0; k < lhs.order(); ++k) {
    const Rational diff = lhs.coeff(k) - rhs.coeff(k);
    max_diff = std::max(max_diff, std::abs(diff.get_d()));
    max_coeff = std::max({max_coeff, std::abs(lhs.coeff(k).get_d()), std::abs(rhs.coeff(k).get_d())});
    if (sgn(diff) != 0 && !first_diff) {
      first_diff = k;
    }
  }
  rep.abs_err = max_diff;
  rep.rel_err = max_diff / std::max(max_coeff, 1e-300);
  rep.pass = !first_diff.has_value();
  rep.outcome = rep.pass ? Outcome::passed : Outcome::failed;
  if (first_diff) {
    rep.diagnostics = "first differing coefficient at q^" + std::to_string(*first_diff);
  } else {
    rep.diagnostics = "all " + std::to_string(lhs.order()) + " coefficients equal";
  }
  return rep;
}

IdentityReport sears_transform_check(const ParameterPoint<Complex>& point,
                                     const TruncationPolicy& policy, double tolerance) {
  return check_identity(IdentityId::sears_32, point, policy, tolerance);
}

}  // namespace qseries
