#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qseries/composite.hpp"

namespace checks {

using qseries::Complex;
using qseries::IdentityId;
using qseries::ParameterPoint;
using qseries::Slot;

double rel_diff(const Complex& x, const Complex& y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

namespace {

using Point = ParameterPoint<Complex>;

struct LinkSpec {
  std::string name;
  IdentityId source;  // sampled entry
  IdentityId general;
  IdentityId special;
  std::function<Point(const Point&)> general_point;
  std::function<Point(const Point&)> special_point;
  // general side times this equals the specialized side
  std::function<Complex(const Point&)> scale;
};

Point same(const Point& p) { return p; }
Complex unit(const Point&) { return 1.0; }

std::vector<LinkSpec> link_specs() {
  return {
      {"QINT7 at d=0 vs QINT6", IdentityId::qint6, IdentityId::qint7, IdentityId::qint6,
       [](const Point& p) { return p.with(Slot::d, 0.0); }, same, unit},
      {"AL_SALAM_VERMA at c=0 vs ANDREWS_ASKEY", IdentityId::andrews_askey,
       IdentityId::al_salam_verma, IdentityId::andrews_askey,
       [](const Point& p) { return p.with(Slot::c, 0.0); }, same, unit},
      {"RECIP7 at b=0 vs RECIP5", IdentityId::recip5, IdentityId::recip7, IdentityId::recip5,
       [](const Point& p) { return p.with(Slot::b, 0.0).with(Slot::r, Complex(0.5, 0.25)); },
       same, unit},
      {"RECIP5 at c=d=0 vs RAM_RECIP", IdentityId::ram_recip, IdentityId::recip5,
       IdentityId::ram_recip, [](const Point& p) { return p.with(Slot::c, 0.0).with(Slot::d, 0.0); },
       same,
       [](const Point& p) {
         const Complex u = p[Slot::u];
         const Complex v = p[Slot::v];
         return (1.0 - v / u) / v;
       }},
      {"RECIP5 at a=c=d=0 vs JTP at x=u/v", IdentityId::ram_recip, IdentityId::recip5,
       IdentityId::jtp,
       [](const Point& p) {
         return p.with(Slot::a, 0.0).with(Slot::c, 0.0).with(Slot::d, 0.0);
       },
       [](const Point& p) {
         Point j(p.q());
         j.set(Slot::x, p[Slot::u] / p[Slot::v]);
         return j;
       },
       [](const Point& p) { return 1.0 / p[Slot::v]; }},
      {"QINT6 at r=cuv vs AL_SALAM_VERMA", IdentityId::al_salam_verma, IdentityId::qint6,
       IdentityId::al_salam_verma,
       [](const Point& p) { return p.with(Slot::r, p[Slot::c] * p[Slot::u] * p[Slot::v]); }, same,
       unit},
      {"QINT7 at r=cuv vs QINT7_R", IdentityId::qint7_r, IdentityId::qint7, IdentityId::qint7_r,
       [](const Point& p) { return p.with(Slot::r, p[Slot::c] * p[Slot::u] * p[Slot::v]); }, same,
       unit},
      {"RECIP7 at r=duv vs RECIP6", IdentityId::recip6, IdentityId::recip7, IdentityId::recip6,
       [](const Point& p) { return p.with(Slot::r, p[Slot::d] * p[Slot::u] * p[Slot::v]); }, same,
       unit},
  };
}

void note(std::string& detail, const std::string& text) {
  if (detail.empty()) {
    detail = text;
  }
}

}  // namespace

std::vector<ChainLink> specialization_chains(std::uint64_t seed, std::size_t count,
                                             const qseries::SampleMargins& margins) {
  const qseries::TruncationPolicy policy;
  std::vector<ChainLink> out;
  for (const auto& spec : link_specs()) {
    ChainLink link;
    link.name = spec.name;
    // oversample: a point admissible for the special entry can still put the
    // general entry on a domain boundary
    const auto points = qseries::sample_domain(spec.source, seed, 3 * count, margins);
    for (const Point& p : points) {
      if (link.points == count) {
        break;
      }
      const Point g = spec.general_point(p);
      const Point s = spec.special_point(p);
      std::string why;
      if (!qseries::in_domain(spec.general, g, &why) ||
          !qseries::in_domain(spec.special, s, &why)) {
        continue;
      }
      const Complex k = spec.scale(p);
      const double dl = rel_diff(k * qseries::evaluate_lhs(spec.general, g, policy),
                                 qseries::evaluate_lhs(spec.special, s, policy));
      const double dr = rel_diff(k * qseries::evaluate_rhs(spec.general, g, policy),
                                 qseries::evaluate_rhs(spec.special, s, policy));
      link.worst = std::max({link.worst, dl, dr});
      ++link.points;
    }
    if (link.points < count) {
      note(link.detail, "only " + std::to_string(link.points) + " shared points");
    }
    out.push_back(link);
  }

  // r = c in the theta integral
  ChainLink beta;
  beta.name = "beta integral at r=c vs Askey-Wilson";
  const qseries::QuadratureConfig quad;
  for (const auto& p : qseries::sample_integral_params(seed, count, margins)) {
    const auto aw = qseries::askey_wilson_integral(p.a, p.b, p.c, p.d, p.q, policy, quad);
    const auto bi = qseries::beta_integral(p.a, p.b, p.c, p.d, p.c, p.q, policy, quad);
    beta.worst = std::max(beta.worst, rel_diff(aw.value, bi.value));
    ++beta.points;
  }
  out.push_back(beta);
  return out;
}

double qpde_worst(std::uint64_t seed, std::size_t count) {
  const qseries::TruncationPolicy policy;
  double worst = 0.0;
  for (const Point& p : qseries::sample_domain(IdentityId::qpde_l, seed, count)) {
    auto l = [&](const Point& pt) { return qseries::l_function(pt, policy); };
    const Complex da = qseries::q_partial(l, Slot::a, p);
    const Complex db = qseries::q_partial(l, Slot::b, p);
    worst = std::max(worst, std::abs(da - db) / std::max(1.0, std::abs(l(p))));
  }
  return worst;
}

namespace {

// relative slack for rounding in the computed products
constexpr double kRounding = 1e-13;

}  // namespace

BoundResult product_bound(std::uint64_t seed, std::size_t draws) {
  const qseries::TruncationPolicy policy;
  qseries::Rng rng(qseries::splitmix64(seed ^ 0x50524f50ULL));
  BoundResult res;
  for (std::size_t i = 0; i < draws; ++i) {
    const double q = rng.uniform(0.01, 0.95);
    const double b = rng.uniform();
    // first inequality: any a >= 0; second: 0 <= a <= 1
    const double a1 = rng.uniform(0.0, 5.0);
    const double a2 = rng.uniform();
    const long k = rng.integer(0, 31);  // 31 stands for infinity
    auto poch = [&](double x) -> double {
      return k == 31 ? qseries::qpoch_infinite<Complex>(x, q, policy).real()
                     : qseries::qpoch<Complex>(x, q, k).real();
    };
    const double lhs1 = poch(-a1 * b);
    const double rhs1 = qseries::qpoch_infinite<Complex>(-a1, q, policy).real();
    const double lhs2 = poch(a2 * b);
    const double rhs2 = qseries::qpoch_infinite<Complex>(a2, q, policy).real();
    ++res.draws;
    const bool ok1 = lhs1 <= rhs1 * (1.0 + kRounding);
    const bool ok2 = lhs2 >= rhs2 - kRounding * std::max(1.0, std::abs(rhs2));
    if (!ok1 || !ok2) {
      ++res.violations;
      if (res.first_violation.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "q=" << q << " b=" << b << " a1=" << a1 << " a2=" << a2 << " k=" << k;
        res.first_violation = os.str();
      }
    }
  }
  return res;
}

BoundResult phi_bound(std::uint64_t seed, std::size_t draws) {
  const qseries::TruncationPolicy policy;
  qseries::Rng rng(qseries::splitmix64(seed ^ 0x504849ULL));
  auto complex_in = [&](double max_modulus) {
    return std::polar(rng.uniform(0.0, max_modulus), rng.uniform(-std::numbers::pi, std::numbers::pi));
  };
  BoundResult res;
  for (std::size_t i = 0; i < draws; ++i) {
    const double q = rng.uniform(0.05, 0.9);
    const long r = rng.integer(1, 3);
    const long n = rng.integer(0, 10);
    const double qn = std::pow(q, static_cast<double>(n));
    const Complex a = complex_in(3.0);
    const Complex x = complex_in(0.9);
    std::vector<Complex> num = {a};
    std::vector<Complex> den;
    std::vector<Complex> bound_num = {-std::abs(a * x)};
    std::vector<Complex> bound_den = {std::abs(x)};
    for (long j = 0; j < r; ++j) {
      const Complex aj = complex_in(2.0);
      const Complex bj = complex_in(0.9);
      num.push_back(aj * qn);
      den.push_back(bj * qn);
      bound_num.push_back(-std::abs(aj));
      bound_den.push_back(std::abs(bj));
    }
    const double value = std::abs(qseries::phi_series<Complex>(num, den, q, x, policy));
    const double bound =
        (qseries::qpoch_multi_infinite<Complex>(bound_num, q, policy) /
         qseries::qpoch_multi_infinite<Complex>(bound_den, q, policy))
            .real();
    ++res.draws;
    if (!(value <= bound * (1.0 + kRounding))) {
      ++res.violations;
      if (res.first_violation.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "q=" << q << " r=" << r << " n=" << n << " |phi|=" << value << " bound=" << bound;
        res.first_violation = os.str();
      }
    }
  }
  return res;
}

}  // namespace checks
