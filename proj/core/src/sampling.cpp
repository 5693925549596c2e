#include "qseries/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qseries {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, IdentityId id) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(id) + 1));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

namespace {

// Smallest |1 - p q^k| over k >= 0; factors with |p q^k| < 1/2 are >= 1/2.
double min_factor_distance(const Complex& p, const Complex& q) {
  double best = 1.0;
  Complex pqk = p;
  for (int k = 0; k < 10000 && std::abs(pqk) >= 0.5; ++k) {
    best = std::min(best, std::abs(1.0 - pqk));
    pqk *= q;
  }
  return std::min(best, 0.5);
}

struct SlotRange {
  Slot slot;
  double lo;
  double hi;
};

// Modulus range per slot; anything not listed uses kDefaultRange.
constexpr double kDefaultLo = 0.1;
constexpr double kDefaultHi = 1.5;

std::vector<SlotRange> ranges_for(IdentityId id) {
  using S = Slot;
  switch (id) {
    case IdentityId::jtp:
      return {{S::x, 0.2, 5.0}};
    case IdentityId::ram_recip:
      return {{S::a, 0.05, 1.5}, {S::u, 0.2, 3.0}, {S::v, 0.2, 3.0}};
    case IdentityId::lambert:
      return {{S::c, 0.3, 3.0}, {S::u, 0.3, 3.0}, {S::v, 0.3, 3.0}};
    case IdentityId::lambert4:
      return {{S::a, 0.1, 10.0}};
    case IdentityId::qbinomial_thm:
      return {{S::a, 0.05, 3.0}, {S::z, 0.05, 1.0}};
    case IdentityId::qmehler:
      return {{S::z, 0.05, 1.0}};
    case IdentityId::limit_a:
      return {{S::a, 0.05, 2.0}, {S::c, 0.05, 2.0}, {S::d, 0.05, 1.0}};
    case IdentityId::limit_euler_d:
      return {{S::d, 0.01, 1.0}};
    case IdentityId::sears_32:
      return {{S::a, 0.3, 3.0}, {S::b, 0.3, 3.0}, {S::c, 0.3, 3.0}, {S::u, 0.1, 1.0},
              {S::v, 0.1, 1.0}};
    case IdentityId::recip7:
    case IdentityId::recip6:
      return {{S::a, 0.05, 1.0}, {S::b, 0.05, 1.0}, {S::c, 0.05, 1.0}, {S::d, 0.05, 1.0},
              {S::r, 0.1, 3.0},  {S::u, 0.3, 1.5},  {S::v, 0.3, 1.5}};
    default:
      return {};
  }
}

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

}  // namespace

bool admissible(IdentityId id, const ParameterPoint<Complex>& point, const SampleMargins& margins,
                std::string* why) {
  auto reject = [&](std::string msg) {
    if (why != nullptr) {
      *why = std::move(msg);
    }
    return false;
  };
  if (!in_domain(id, point, why)) {
    return false;
  }
  const Complex q = point.q();
  const Constraints<Complex> c = identity(id).numeric.constraints(point);
  for (const Complex& z : c.bounded) {
    if (std::abs(z) > margins.bound_fraction) {
      return reject("bounded quantity above safety fraction");
    }
  }
  for (const Complex& z : c.nonzero) {
    if (std::abs(z) < margins.nonzero_distance) {
      return reject("non-zero quantity inside punctured neighbourhood");
    }
  }
  for (const Complex& p : c.poles) {
    if (min_factor_distance(p, q) < margins.pole_distance) {
      return reject("denominator factor too close to zero");
    }
  }
  for (const Complex& p : c.zeros) {
    if (min_factor_distance(p, q) < margins.zero_distance) {
      return reject("numerator factor too close to zero");
    }
  }
  return true;
}

std::vector<ParameterPoint<Complex>> sample_domain(IdentityId id, std::uint64_t seed,
                                                   std::size_t count,
                                                   const SampleMargins& margins) {
  if (count == 0) {
    throw DomainError("sample count must be >= 1");
  }
  const IdentityDef& def = identity(id);
  const auto overrides = ranges_for(id);
  Rng rng(stream_seed(seed, id));
  std::vector<ParameterPoint<Complex>> out;
  out.reserve(count);
  const std::size_t budget = 1000 * count;
  for (std::size_t draw = 0; draw < budget && out.size() < count; ++draw) {
    ParameterPoint<Complex> p(Complex(rng.uniform(margins.q_min, margins.q_max), 0.0));
    for (Slot s : def.slots) {
      double lo = kDefaultLo;
      double hi = kDefaultHi;
      for (const auto& r : overrides) {
        if (r.slot == s) {
          lo = r.lo;
          hi = r.hi;
        }
      }
      const double modulus = log_uniform(rng, lo, hi);
      const double arg = rng.uniform(-std::numbers::pi, std::numbers::pi);
      p.set(s, std::polar(modulus, arg));
    }
    if (admissible(id, p, margins)) {
      out.push_back(std::move(p));
    }
  }
  if (out.size() < count) {
    throw SamplingExhausted(std::string(def.name) + ": only " + std::to_string(out.size()) +
                            " of " + std::to_string(count) + " points found in " +
                            std::to_string(budget) + " draws");
  }
  return out;
}

namespace {

// Slots an exact entry varies, with the power of t each carries.
struct ExactSlot {
  Slot slot;
  int min_power;
  int max_power;
};

std::vector<ExactSlot> exact_slots(IdentityId id) {
  using S = Slot;
  switch (id) {
    case IdentityId::jtp:
      return {{S::x, 0, 0}};
    case IdentityId::ram_recip:
      return {{S::a, 0, 0}, {S::u, 0, 0}, {S::v, 0, 0}};
    case IdentityId::recip5:
      // (q/du; q)_n (dv)^n only gains q-adic valuation when d does
      return {{S::a, 0, 0}, {S::c, 0, 0}, {S::d, 1, 1}, {S::u, 0, 0}, {S::v, 0, 0}};
    case IdentityId::lambert:
      return {{S::c, 0, 0}, {S::u, 0, 0}, {S::v, 0, 0}};
    case IdentityId::limit_euler_d:
      return {{S::d, 1, 2}};
    default:
      return {};
  }
}

Rational small_rational(Rng& rng, long max_num, long max_den) {
  long num = 0;
  while (num == 0) {
    num = rng.integer(-max_num, max_num);
  }
  Rational r{mpz_class(num), mpz_class(rng.integer(1, max_den))};
  r.canonicalize();
  return r;
}

bool exact_admissible(IdentityId id, const ParameterPoint<FormalSeries>& p) {
  if (!in_domain(id, p)) {
    return false;
  }
  // a numerator factor with zero constant term makes both sides vanish
  const auto c = identity(id).exact->constraints(p);
  for (const FormalSeries& z : c.zeros) {
    if (z.coeff(0) == 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<ParameterPoint<FormalSeries>> sample_exact(IdentityId id, std::uint64_t seed,
                                                       std::size_t count, std::size_t order) {
  if (count == 0) {
    throw DomainError("sample count must be >= 1");
  }
  const IdentityDef& def = identity(id);
  if (!def.exact) {
    throw DomainError(std::string(def.name) + " has no exact-mode formula");
  }
  const auto slots = exact_slots(id);
  Rng rng(stream_seed(seed, id));
  std::vector<ParameterPoint<FormalSeries>> out;
  out.reserve(count);
  const std::size_t budget = 1000 * count;
  for (std::size_t draw = 0; draw < budget && out.size() < count; ++draw) {
    // the first point of every stream is the plain formal variable
    const Rational lambda = draw == 0 ? Rational(1) : small_rational(rng, 3, 3);
    ParameterPoint<FormalSeries> p(FormalSeries::monomial(lambda, 1, order));
    for (const auto& es : slots) {
      const auto power = static_cast<std::size_t>(rng.integer(es.min_power, es.max_power));
      p.set(es.slot, FormalSeries::monomial(small_rational(rng, 5, 5), power, order));
    }
    const bool repeat = std::any_of(out.begin(), out.end(), [&](const auto& seen) {
      if (seen.q() != p.q()) {
        return false;
      }
      return std::all_of(slots.begin(), slots.end(),
                         [&](const ExactSlot& es) { return seen[es.slot] == p[es.slot]; });
    });
    if (!repeat && exact_admissible(id, p)) {
      out.push_back(std::move(p));
    }
  }
  if (out.size() < count) {
    throw SamplingExhausted(std::string(def.name) + ": only " + std::to_string(out.size()) +
                            " exact points in " + std::to_string(budget) + " draws");
  }
  return out;
}

std::vector<IntegralParams> sample_integral_params(std::uint64_t seed, std::size_t count,
                                                   const SampleMargins& margins) {
  if (count == 0) {
    throw DomainError("sample count must be >= 1");
  }
  // stream separate from every registry entry
  Rng rng(splitmix64(seed ^ 0x5157414452415455ULL));
  auto signed_modulus = [&](double lo, double hi) {
    const double m = rng.uniform(lo, hi);
    return rng.uniform() < 0.5 ? -m : m;
  };
  std::vector<IntegralParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    IntegralParams p;
    p.q = rng.uniform(margins.q_min, margins.q_max);
    p.a = signed_modulus(0.05, margins.bound_fraction);
    p.b = signed_modulus(0.05, margins.bound_fraction);
    p.c = signed_modulus(0.05, margins.bound_fraction);
    p.d = signed_modulus(0.05, margins.bound_fraction);
    const double r_max = std::min(3.0, margins.bound_fraction * std::abs(p.c / (p.a * p.b)));
    p.r = signed_modulus(std::min(0.05, 0.5 * r_max), r_max);
    out.push_back(p);
  }
  return out;
}

}  // namespace qseries
