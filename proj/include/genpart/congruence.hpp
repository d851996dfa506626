#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpart/exponent_vector.hpp"
#include "genpart/series.hpp"

namespace genpart {

/// p(ell n + B)_e == 0 (mod ell) for all n >= 0 and every B in `residues`.
struct CongruenceClaim {
  ExponentVector e;
  std::int64_t ell = 0;
  std::set<std::int64_t> residues;
  std::string source;
  /// Some residues came from a source list that was cut short, so the
  /// residue set may be incomplete.
  bool truncated = false;

  /// Throws std::invalid_argument unless e is nonzero, ell is prime and every
  /// residue lies in [1, ell - 1].
  void validate() const;
  std::string to_string() const;
};

enum class ClaimKind { Type1, Type2Plus, Type2Minus, PartialNumeric };
enum class Verdict { Verified, Refuted, Inconclusive };

std::string to_string(ClaimKind k);
std::string to_string(Verdict v);
ClaimKind claim_kind_from_string(const std::string& s);
Verdict verdict_from_string(const std::string& s);

/// The eta-quotient data behind a Sturm bound. e_prime = e_reduced - ell * c
/// satisfies: e'_m <= 0; omega = sum m e'_m / 24 is an integer; w = -sum e'_m / 2
/// is an integer; sum (N/m) e'_m == 0 (mod 24).
struct EtaDatum {
  std::int64_t ell = 0;
  ExponentVector e_reduced;
  std::int64_t alpha_reduced = 0;
  std::int64_t delta_ell = 0;
  std::int64_t beta_e = 0;
  std::vector<std::int64_t> c;  // c[m - 1] = c_m
  ExponentVector e_prime;
  std::int64_t w = 0;
  std::int64_t omega = 0;
  std::int64_t N0 = 0;
  std::int64_t N = 0;
  /// How many times beta_e was advanced by one period because no parity
  /// fix-up applied. Zero for the plain construction.
  int beta_escalations = 0;

  friend bool operator==(const EtaDatum&, const EtaDatum&) = default;
};

class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::int64_t n);

/// Maps each entry to its representative in [-ell + 1, 0].
ExponentVector reduce_mod_ell(const ExponentVector& e, std::int64_t ell);

/// alpha / 24 mod ell when ell does not divide 24, else 0. In [0, ell - 1].
std::int64_t delta_ell(const ExponentVector& e, std::int64_t ell);

/// Smallest n > 1 with n == ell^{-1} alpha (mod 24), or n == alpha / ell
/// (mod 24 / ell) when ell | 24. Throws std::invalid_argument when ell is 2 or
/// 3 and does not divide alpha.
std::int64_t beta_e(const ExponentVector& e_reduced, std::int64_t ell);

struct CVectorOptions {
  /// 0 reproduces the construction exactly and reports a ConstructionFailure
  /// when no parity fix-up applies.
  int max_beta_escalations = 0;
};

/// Builds c_e greedily from the largest index down (the remainder always lands
/// on c_1), then fixes the parity of sum e'_m. The result is checked with
/// check_datum before it is returned.
EtaDatum build_c_vector(const ExponentVector& e_reduced, std::int64_t ell, CVectorOptions options = {});

/// Throws std::logic_error naming the first violated invariant.
void check_datum(const EtaDatum& datum);

/// floor((w / 12) N prod_{p | N} (1 + 1/p)), exact.
std::int64_t sturm_term(std::int64_t w, std::int64_t N);

/// Type 1 bound (ell >= 5): sturm_term(w, N) + max(0, (omega - delta_ell) / ell).
std::int64_t bound_K(const EtaDatum& datum, std::int64_t ell);
/// Type 2 bound: sturm_term(w, N ell^2) + max(0, (omega - delta_ell) / ell).
std::int64_t bound_Kprime(const EtaDatum& datum, std::int64_t ell);

/// Legendre symbol (a / ell) for an odd prime ell.
int legendre(std::int64_t a, std::int64_t ell);

struct ResidueSets {
  std::set<std::int64_t> plus;
  std::set<std::int64_t> minus;
};

/// S_+ / S_-: residues g in [0, ell - 1] with ((g - delta_ell) / ell) = +1 / -1.
ResidueSets s_sets(const ExponentVector& e, std::int64_t ell);

ClaimKind classify_claim(const CongruenceClaim& claim);

struct Counterexample {
  std::int64_t n = 0;
  std::int64_t residue = 0;
  std::int64_t index = 0;  // ell * n + residue
  std::uint64_t value_mod_ell = 0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SturmCertificate {
  CongruenceClaim claim;
  ClaimKind kind = ClaimKind::PartialNumeric;
  std::optional<EtaDatum> datum;
  /// K_e, K'_e, or the numeric depth for PartialNumeric claims.
  std::int64_t bound = 0;
  std::int64_t checked_max_index = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Counterexample> counterexample;
  std::string note;
};

struct VerifyOptions {
  std::int64_t numeric_depth = 2000;
  int max_beta_escalations = 8;
};

/// Classifies the claim, computes the matching bound and checks
/// p(ell n + B)_e mod ell for 0 <= n <= bound and every claimed B.
SturmCertificate verify(const CongruenceClaim& claim, const VerifyOptions& options = {});

/// One certifiable piece of a larger claim.
struct PlannedCheck {
  CongruenceClaim claim;
  /// Residues of the parent claim this piece answers for. Differs from
  /// claim.residues only when an S_+/S_- set was completed.
  std::set<std::int64_t> claimed;
  bool completed = false;
  bool numeric_only = false;
};

/// Splits a claim into {delta_ell} (Type 1), every fully covered S_+/S_- set
/// (Type 2) and a PartialNumeric remainder. A partially covered S_+/S_- set
/// is completed to the full set.
/// Truncated claims also get a numeric check of all their residues.
std::vector<PlannedCheck> plan_claim(const CongruenceClaim& claim);

/// verify() over plan_claim(), sharing one series expansion. A completed set
/// refuted only at an unclaimed residue falls back to a PartialNumeric check
/// of the claimed residues.
std::vector<SturmCertificate> verify_planned(const CongruenceClaim& claim, const VerifyOptions& options = {});

}  // namespace genpart
