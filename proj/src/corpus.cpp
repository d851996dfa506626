#include "genpart/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "genpart/json_io.hpp"
#include "genpart/partition_series.hpp"

namespace genpart {

using nlohmann::json;

namespace {

// Line of each object that opens directly inside a top-level array, so schema
// errors can point at the offending entry.
std::vector<std::size_t> entry_lines(std::string_view text) {
  std::vector<std::size_t> lines;
  std::vector<char> stack;
  std::size_t line = 1;
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n') ++line;
    if (in_string) {
      if (ch == '\\') ++i;
      else if (ch == '"') in_string = false;
      continue;
    }
    switch (ch) {
      case '"': in_string = true; break;
      case '{':
        if (stack.size() == 2 && stack.back() == '[') lines.push_back(line);
        stack.push_back('{');
        break;
      case '[': stack.push_back('['); break;
      case '}':
      case ']':
        if (!stack.empty()) stack.pop_back();
        break;
      default: break;
    }
  }
  return lines;
}

struct EntryContext {
  std::string_view origin;
  std::size_t index;
  std::size_t line;

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    std::ostringstream os;
    os << origin << ':';
    if (line) os << line << ": ";
    os << "entry " << index << ", field '" << field << "': " << what;
    throw CorpusSchemaError(os.str());
  }
};

std::int64_t require_int(const json& obj, const char* field, const EntryContext& ctx) {
  if (!obj.contains(field)) ctx.fail(field, "missing");
  const auto& v = obj.at(field);
  if (!v.is_number_integer()) ctx.fail(field, "expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

CorpusEntry parse_entry(const json& j, const EntryContext& ctx) {
  if (!j.is_object()) ctx.fail("<entry>", "expected an object");
  CorpusEntry e;
  e.ell = require_int(j, "ell", ctx);
  if (!is_prime(e.ell) || e.ell < 3) ctx.fail("ell", "expected an odd prime, got " + std::to_string(e.ell));

  if (!j.contains("vector")) ctx.fail("vector", "missing");
  const auto& v = j.at("vector");
  if (!v.is_object() || v.empty()) ctx.fail("vector", "expected a nonempty object of index: exponent");
  for (const auto& [key, val] : v.items()) {
    std::int64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      ctx.fail("vector", "index '" + key + "' is not an integer");
    }
    if (m < 1) ctx.fail("vector", "index " + key + " must be >= 1");
    if (!val.is_number_integer()) ctx.fail("vector", "exponent at index " + key + " is not an integer");
    e.vector[m] = val.get<std::int64_t>();
  }
  if (e.dense().is_zero()) ctx.fail("vector", "all exponents are zero");

  e.residue = require_int(j, "residue", ctx);
  if (e.residue < 1 || e.residue >= e.ell)
    ctx.fail("residue", "expected a value in [1, " + std::to_string(e.ell - 1) + "], got " + std::to_string(e.residue));

  if (!j.contains("section") || !j.at("section").is_string()) ctx.fail("section", "expected a string");
  e.section = j.at("section").get<std::string>();
  if (!j.contains("truncated_group") || !j.at("truncated_group").is_boolean())
    ctx.fail("truncated_group", "expected a boolean");
  e.truncated_group = j.at("truncated_group").get<bool>();
  return e;
}

std::string verdict_of(const std::vector<SturmCertificate>& certs) {
  bool inconclusive = false;
  for (const auto& c : certs) {
    if (c.verdict == Verdict::Refuted) return "Refuted";
    if (c.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? "Inconclusive" : "Verified";
}

bool spot_check(const SturmCertificate& cert) {
  const auto& claim = cert.claim;
  const auto precision = static_cast<std::size_t>(cert.checked_max_index) + 1;
  const auto exact = expand_by_recurrence(claim.e, precision);
  const auto ell = static_cast<unsigned long>(claim.ell);
  for (auto r : claim.residues)
    for (auto idx = static_cast<std::size_t>(r); idx < precision; idx += ell)
      if (mpz_fdiv_ui(exact[idx].get_mpz_t(), ell) != 0) return false;
  return true;
}

}  // namespace

Corpus parse_corpus_text(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw CorpusSchemaError(std::string(origin) + ": " + err.what());
  }
  auto top = [&](const std::string& field, const std::string& what) {
    throw CorpusSchemaError(std::string(origin) + ": field '" + field + "': " + what);
  };
  if (!doc.is_object()) top("<root>", "expected an object");
  Corpus c;
  if (!doc.contains("version") || !doc["version"].is_number_integer()) top("version", "expected an integer");
  c.version = doc["version"].get<int>();
  if (c.version != 1) top("version", "unsupported version " + std::to_string(c.version));
  if (!doc.contains("entry_count") || !doc["entry_count"].is_number_unsigned())
    top("entry_count", "expected a nonnegative integer");
  c.entry_count = doc["entry_count"].get<std::size_t>();
  c.provenance = doc.value("provenance", "");
  if (!doc.contains("entries") || !doc["entries"].is_array()) top("entries", "expected an array");

  const auto lines = entry_lines(text);
  const auto& arr = doc["entries"];
  c.entries.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const EntryContext ctx{origin, i, i < lines.size() ? lines[i] : 0};
    c.entries.push_back(parse_entry(arr[i], ctx));
  }
  if (c.entries.size() != c.entry_count)
    top("entry_count", "header says " + std::to_string(c.entry_count) + " entries but " +
                           std::to_string(c.entries.size()) + " are present");
  return c;
}

Corpus parse_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusSchemaError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_text(buf.str(), path.string());
}

GroupedClaims group_claims(std::span<const CorpusEntry> entries) {
  GroupedClaims out;
  std::map<std::pair<std::int64_t, ExponentVector>, std::size_t> slot;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    const auto key = std::make_pair(entry.ell, entry.dense());
    auto [it, fresh] = slot.try_emplace(key, out.claims.size());
    if (fresh) {
      CongruenceClaim claim;
      claim.e = key.second;
      claim.ell = entry.ell;
      claim.source = entry.section;
      out.claims.push_back(std::move(claim));
    }
    auto& claim = out.claims[it->second];
    if (!claim.residues.insert(entry.residue).second)
      out.warnings.push_back("entry " + std::to_string(i) + ": duplicate of " + key.second.to_string() + " mod " +
                             std::to_string(entry.ell) + " at residue " + std::to_string(entry.residue));
    claim.truncated = claim.truncated || entry.truncated_group;
  }
  for (auto& claim : out.claims)
    if (claim.truncated) claim.source += " [truncated]";
  return out;
}

std::string corpus_checksum(std::span<const CongruenceClaim> claims) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& c : claims) {
    for (unsigned char ch : c.to_string() + (c.truncated ? "*" : "") + "\n") {
      h ^= ch;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::map<std::string, std::size_t> CorpusReport::claims_by_verdict() const {
  std::map<std::string, std::size_t> m{{"Verified", 0}, {"Refuted", 0}, {"Inconclusive", 0}, {"Error", 0}};
  for (const auto& v : claim_verdicts) ++m[v];
  return m;
}

std::map<std::string, std::size_t> CorpusReport::certificates_by_kind() const {
  std::map<std::string, std::size_t> m;
  for (const auto& r : records) ++m[to_string(r.certificate.kind)];
  return m;
}

std::map<std::string, std::size_t> CorpusReport::certificates_by_verdict() const {
  std::map<std::string, std::size_t> m;
  for (const auto& r : records) ++m[to_string(r.certificate.verdict)];
  return m;
}

bool CorpusReport::failing() const {
  if (!errors.empty()) return true;
  for (const auto& v : claim_verdicts)
    if (v == "Refuted") return true;
  for (const auto& s : spot_checks)
    if (!s.passed) return true;
  return false;
}

CorpusReport run_corpus(std::span<const CongruenceClaim> claims, const RunOptions& options) {
  CorpusReport report;
  report.claims.assign(claims.begin(), claims.end());
  report.checksum = corpus_checksum(claims);

  const std::size_t n = claims.size();
  std::vector<std::vector<SturmCertificate>> results(n);
  std::vector<std::optional<std::string>> failures(n);
  report.claim_seconds.assign(n, 0.0);

  VerifyOptions vopts;
  vopts.numeric_depth = options.numeric_depth;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = verify_planned(claims[i], vopts);
      } catch (const std::exception& err) {
        failures[i] = err.what();
      }
      report.claim_seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.parallelism, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) {
      report.claim_verdicts.push_back("Error");
      report.errors.push_back({i, *failures[i]});
      continue;
    }
    report.claim_verdicts.push_back(verdict_of(results[i]));
    for (auto& cert : results[i]) report.records.push_back({i, std::move(cert)});
  }

  std::vector<std::size_t> eligible;
  for (std::size_t r = 0; r < report.records.size(); ++r) {
    const auto& cert = report.records[r].certificate;
    if (cert.verdict == Verdict::Verified &&
        static_cast<std::size_t>(cert.checked_max_index) < options.spot_check_max_index)
      eligible.push_back(r);
  }
  std::mt19937_64 rng(options.seed);
  std::shuffle(eligible.begin(), eligible.end(), rng);
  eligible.resize(std::min(eligible.size(), options.spot_checks));
  std::sort(eligible.begin(), eligible.end());
  for (auto r : eligible) {
    const auto& cert = report.records[r].certificate;
    report.spot_checks.push_back({r, cert.checked_max_index, spot_check(cert)});
  }
  return report;
}

json report_to_json(const CorpusReport& report, bool include_timing) {
  json certs = json::array();
  for (const auto& r : report.records) {
    json c = r.certificate;
    c["claim_index"] = r.claim_index;
    certs.push_back(std::move(c));
  }
  json claims = json::array();
  for (std::size_t i = 0; i < report.claims.size(); ++i)
    claims.push_back({{"claim", report.claims[i]}, {"verdict", report.claim_verdicts[i]}});
  json errors = json::array();
  for (const auto& e : report.errors)
    errors.push_back({{"claim_index", e.claim_index}, {"claim", report.claims[e.claim_index]}, {"message", e.message}});
  json spots = json::array();
  for (const auto& s : report.spot_checks)
    spots.push_back({{"record", s.record_index}, {"checked_max_index", s.checked_max_index}, {"passed", s.passed}});

  json out{{"summary",
            {{"claims", report.claims.size()},
             {"certificates", report.records.size()},
             {"claims_by_verdict", report.claims_by_verdict()},
             {"certificates_by_kind", report.certificates_by_kind()},
             {"certificates_by_verdict", report.certificates_by_verdict()},
             {"checksum", report.checksum},
             {"failing", report.failing()}}},
           {"claims", std::move(claims)},
           {"certificates", std::move(certs)},
           {"errors", std::move(errors)},
           {"spot_checks", std::move(spots)}};
  if (include_timing) {
    const double total = std::accumulate(report.claim_seconds.begin(), report.claim_seconds.end(), 0.0);
    const double worst = report.claim_seconds.empty()
                             ? 0.0
                             : *std::max_element(report.claim_seconds.begin(), report.claim_seconds.end());
    out["timing"] = {{"claim_seconds", report.claim_seconds}, {"total_seconds", total}, {"max_claim_seconds", worst}};
  }
  return out;
}

std::string report_to_table(const CorpusReport& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-5s %-28s %-5s %-16s %-14s %8s %s\n", "#", "vector", "ell", "residues", "kind",
                "bound", "verdict");
  os << line;
  for (const auto& r : report.records) {
    const auto& c = r.certificate;
    std::string res;
    for (auto b : c.claim.residues) res += (res.empty() ? "" : ",") + std::to_string(b);
    std::snprintf(line, sizeof line, "%-5zu %-28s %-5lld %-16s %-14s %8lld %s\n", r.claim_index,
                  c.claim.e.to_string().c_str(), static_cast<long long>(c.claim.ell), ("{" + res + "}").c_str(),
                  to_string(c.kind).c_str(), static_cast<long long>(c.bound), to_string(c.verdict).c_str());
    os << line;
  }
  for (const auto& e : report.errors)
    os << "error in claim " << e.claim_index << " " << report.claims[e.claim_index].to_string() << ": " << e.message
       << '\n';
  os << "\nclaims:";
  for (const auto& [k, v] : report.claims_by_verdict()) os << ' ' << k << '=' << v;
  os << "\ncertificates:";
  for (const auto& [k, v] : report.certificates_by_kind()) os << ' ' << k << '=' << v;
  std::size_t passed = 0;
  for (const auto& s : report.spot_checks) passed += s.passed;
  os << "\nspot checks: " << passed << '/' << report.spot_checks.size() << " passed\n";
  os << "checksum: " << report.checksum << '\n';
  return os.str();
}

}  // namespace genpart
