#ifndef QSERIES_IDENTITIES_HPP
#define QSERIES_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qseries/parameter_point.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

enum class IdentityId : std::size_t {
  jtp,
  andrews_askey,
  al_salam_verma,
  qint6,
  qint7,
  qint7_r,
  sears_equiv,
  ram_recip,
  recip5,
  lambert,
  recip7,
  recip6,
  qbinomial_thm,
  qmehler,
  qpde_l,
  sears_32,
  limit_a,
  limit_euler_d,
  limit_d_negq,
  lambert4,
  four_square,
  four_triangular,
};

inline constexpr std::size_t kIdentityCount = 22;

enum class Mode { numeric, exact };

std::string_view mode_name(Mode m);

/// Quantities an identity's domain is stated in terms of.
template <Scalar S>
struct Constraints {
  // each must have modulus < 1
  std::vector<S> bounded;
  // each must be non-zero
  std::vector<S> nonzero;
  // p with (p; q)_inf in a denominator: p q^k must stay away from 1
  std::vector<S> poles;
  // p with (p; q)_inf in a numerator; only used to keep samples well conditioned
  std::vector<S> zeros;
};

template <Scalar S>
using Evaluator = std::function<S(const ParameterPoint<S>&, const TruncationPolicy&)>;

template <Scalar S>
using ConstraintFn = std::function<Constraints<S>(const ParameterPoint<S>&)>;

template <Scalar S>
struct Formula {
  Evaluator<S> lhs;
  Evaluator<S> rhs;
  ConstraintFn<S> constraints;
};

/// One registry entry.
struct IdentityDef {
  IdentityId id;
  std::string_view name;
  std::vector<Slot> slots;
  // the stated domain, for display
  std::string_view domain;
  // short quote locating the identity in its source
  std::string_view citation;
  std::string_view summary;
  Formula<Complex> numeric;
  // present only for entries certified coefficient-by-coefficient
  std::optional<Formula<FormalSeries>> exact;
};

/// The immutable registry, one entry per IdentityId in enum order.
const std::vector<IdentityDef>& registry();
const IdentityDef& identity(IdentityId id);
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// Whether the point lies in the identity's stated domain; on failure the
/// reason is written to *why when given.
bool in_domain(IdentityId id, const ParameterPoint<Complex>& point, std::string* why = nullptr);
bool in_domain(IdentityId id, const ParameterPoint<FormalSeries>& point,
               std::string* why = nullptr);

/// Left / right side of the identity. Throws DomainError outside the domain
/// (or for exact mode on an entry without an exact formula).
Complex evaluate_lhs(IdentityId id, const ParameterPoint<Complex>& point,
                     const TruncationPolicy& policy);
Complex evaluate_rhs(IdentityId id, const ParameterPoint<Complex>& point,
                     const TruncationPolicy& policy);
FormalSeries evaluate_lhs(IdentityId id, const ParameterPoint<FormalSeries>& point,
                          const TruncationPolicy& policy);
FormalSeries evaluate_rhs(IdentityId id, const ParameterPoint<FormalSeries>& point,
                          const TruncationPolicy& policy);

enum class Outcome { passed, failed, near_trivial, skipped, error };

std::string_view outcome_name(Outcome o);

using AnyPoint = std::variant<ParameterPoint<Complex>, ParameterPoint<FormalSeries>>;
using AnyValue = std::variant<Complex, FormalSeries>;

struct IdentityReport {
  IdentityId id;
  Mode mode;
  AnyPoint point;
  AnyValue lhs;
  AnyValue rhs;
  double abs_err = 0.0;
  // abs_err / max(|lhs|, |rhs|, 1e-300)
  double rel_err = 0.0;
  bool pass = false;
  bool near_trivial = false;
  Outcome outcome = Outcome::failed;
  std::string diagnostics;
};

/// Both magnitudes below this mark a point as near-trivial.
inline constexpr double kNearTrivial = 1e-12;

/// Evaluates both sides and compares them. Pass/fail never throws; errors
/// raised while evaluating propagate.
IdentityReport check_identity(IdentityId id, const ParameterPoint<Complex>& point,
                              const TruncationPolicy& policy, double tolerance);
IdentityReport check_identity(IdentityId id, const ParameterPoint<FormalSeries>& point,
                              const TruncationPolicy& policy);

/// The Sears 3phi2 transformation at a point whose slots a, b, c carry
/// a1, a2, a3 and u, v carry b1, b2.
IdentityReport sears_transform_check(const ParameterPoint<Complex>& point,
                                     const TruncationPolicy& policy, double tolerance);

}  // namespace qseries

#endif  // QSERIES_IDENTITIES_HPP
