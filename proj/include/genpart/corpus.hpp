#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "genpart/congruence.hpp"

namespace genpart {

/// One conjectured congruence p(ell n + residue)_e == 0 (mod ell) as listed
/// in the source; `vector` is the sparse m -> e_m map.
struct CorpusEntry {
  std::int64_t ell = 0;
  std::map<std::int64_t, std::int64_t> vector;
  std::int64_t residue = 0;
  std::string section;
  bool truncated_group = false;

  ExponentVector dense() const { return ExponentVector::from_sparse(vector); }
};

struct Corpus {
  int version = 1;
  std::size_t entry_count = 0;
  std::string provenance;
  std::vector<CorpusEntry> entries;
};

class CorpusSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the JSON corpus document {version, entry_count, provenance, entries}.
/// entry_count must match the number of entries.
Corpus parse_corpus(const std::filesystem::path& path);
Corpus parse_corpus_text(std::string_view text, std::string_view origin = "<memory>");

struct GroupedClaims {
  std::vector<CongruenceClaim> claims;
  std::vector<std::string> warnings;
};

/// One claim per (ell, canonical vector) holding the union of its residues,
/// in order of first appearance. A claim is truncated if any of its entries is.
GroupedClaims group_claims(std::span<const CorpusEntry> entries);

struct CertificateRecord {
  std::size_t claim_index = 0;
  SturmCertificate certificate;
};

struct ClaimError {
  std::size_t claim_index = 0;
  std::string message;
};

struct SpotCheck {
  std::size_t record_index = 0;
  std::int64_t checked_max_index = 0;
  bool passed = false;
};

struct RunOptions {
  unsigned parallelism = 1;
  std::int64_t numeric_depth = 2000;
  std::size_t spot_checks = 10;
  /// Exact re-validation is quadratic in the range, so only certificates
  /// with a checked range below this many coefficients are sampled.
  std::size_t spot_check_max_index = 4000;
  std::uint64_t seed = 20260101;
};

struct CorpusReport {
  std::vector<CongruenceClaim> claims;
  /// Per-claim outcome: Refuted if any piece is, else Inconclusive if any
  /// piece is, else Verified; "Error" when the engine threw.
  std::vector<std::string> claim_verdicts;
  std::vector<double> claim_seconds;
  std::vector<CertificateRecord> records;
  std::vector<ClaimError> errors;
  std::vector<SpotCheck> spot_checks;
  std::string checksum;

  std::map<std::string, std::size_t> claims_by_verdict() const;
  std::map<std::string, std::size_t> certificates_by_kind() const;
  std::map<std::string, std::size_t> certificates_by_verdict() const;
  bool failing() const;
};

/// FNV-1a over the canonical claim listing.
std::string corpus_checksum(std::span<const CongruenceClaim> claims);

/// Verifies every claim on a pool of `parallelism` workers. Output order
/// follows the claim order regardless of scheduling.
CorpusReport run_corpus(std::span<const CongruenceClaim> claims, const RunOptions& options = {});

/// {summary, certificates, errors, spot_checks, timing}; all timing lives
/// under "timing".
nlohmann::json report_to_json(const CorpusReport& report, bool include_timing = true);
std::string report_to_table(const CorpusReport& report);

}  // namespace genpart
