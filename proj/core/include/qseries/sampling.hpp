#ifndef QSERIES_SAMPLING_HPP
#define QSERIES_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qseries/identities.hpp"

namespace qseries {

/// Portable pseudo-random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; it is seeded with splitmix64(seed) and
/// doubles are formed from the top 53 bits, so streams agree across
/// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for one identity under a run seed.
std::uint64_t stream_seed(std::uint64_t seed, IdentityId id);

/// Safety margins applied on top of the domain predicate.
struct SampleMargins {
  // every bounded quantity has modulus <= bound_fraction
  double bound_fraction = 0.8;
  // every denominator factor 1 - p q^k has modulus >= pole_distance
  double pole_distance = 1e-3;
  // every required non-zero quantity has modulus >= nonzero_distance
  double nonzero_distance = 1e-3;
  // numerator factors stay this far from zero so sides are not near-trivial
  double zero_distance = 1e-2;
  double q_min = 0.05;
  double q_max = 0.8;
};

/// Whether the point satisfies the domain predicate with the given margins.
bool admissible(IdentityId id, const ParameterPoint<Complex>& point,
                const SampleMargins& margins = {}, std::string* why = nullptr);

/// count deterministic points for the identity. q is real in [q_min, q_max];
/// slots are complex with log-uniform modulus and uniform argument.
/// Throws SamplingExhausted after 1000 * count rejected draws.
std::vector<ParameterPoint<Complex>> sample_domain(IdentityId id, std::uint64_t seed,
                                                   std::size_t count,
                                                   const SampleMargins& margins = {});

/// Exact-mode points: q = lambda * t for a small rational lambda, slots small
/// rationals, with a factor t^m on the slots that need one for formal
/// convergence. Throws DomainError for entries without an exact formula.
std::vector<ParameterPoint<FormalSeries>> sample_exact(IdentityId id, std::uint64_t seed,
                                                       std::size_t count, std::size_t order);

/// Real parameters for the theta integrals: q in [q_min, q_max], a, b, c, d
/// with modulus in [0.05, bound_fraction] and random sign, and r chosen so
/// that |abr/c| <= bound_fraction.
struct IntegralParams {
  double q = 0.5;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double r = 0.0;
};

std::vector<IntegralParams> sample_integral_params(std::uint64_t seed, std::size_t count,
                                                   const SampleMargins& margins = {});

}  // namespace qseries

#endif  // QSERIES_SAMPLING_HPP
