#include "genpart/json_io.hpp"

namespace genpart {

using nlohmann::json;

void to_json(json& j, const ExponentVector& e) { j = e.entries(); }

void from_json(const json& j, ExponentVector& e) { e = ExponentVector(j.get<std::vector<std::int64_t>>()); }

void to_json(json& j, const CongruenceClaim& c) {
  j = json{{"e", c.e}, {"ell", c.ell}, {"residues", c.residues}, {"source", c.source}, {"truncated", c.truncated}};
}

void from_json(const json& j, CongruenceClaim& c) {
  j.at("e").get_to(c.e);
  j.at("ell").get_to(c.ell);
  c.residues = j.at("residues").get<std::set<std::int64_t>>();
  c.source = j.value("source", "");
  c.truncated = j.value("truncated", false);
}

void to_json(json& j, const EtaDatum& d) {
  j = json{{"ell", d.ell},     {"e_reduced", d.e_reduced}, {"alpha_reduced", d.alpha_reduced},
           {"delta_ell", d.delta_ell}, {"beta_e", d.beta_e}, {"c", d.c},
           {"e_prime", d.e_prime}, {"w", d.w},                 {"omega", d.omega},
           {"N0", d.N0},       {"N", d.N},                 {"beta_escalations", d.beta_escalations}};
}

void from_json(const json& j, EtaDatum& d) {
  j.at("ell").get_to(d.ell);
  j.at("e_reduced").get_to(d.e_reduced);
  j.at("alpha_reduced").get_to(d.alpha_reduced);
  j.at("delta_ell").get_to(d.delta_ell);
  j.at("beta_e").get_to(d.beta_e);
  j.at("c").get_to(d.c);
  j.at("e_prime").get_to(d.e_prime);
  j.at("w").get_to(d.w);
  j.at("omega").get_to(d.omega);
  j.at("N0").get_to(d.N0);
  j.at("N").get_to(d.N);
  d.beta_escalations = j.value("beta_escalations", 0);
}

void to_json(json& j, const Counterexample& c) {
  j = json{{"n", c.n}, {"residue", c.residue}, {"index", c.index}, {"value_mod_ell", c.value_mod_ell}};
}

void from_json(const json& j, Counterexample& c) {
  j.at("n").get_to(c.n);
  j.at("residue").get_to(c.residue);
  j.at("index").get_to(c.index);
  j.at("value_mod_ell").get_to(c.value_mod_ell);
}

void to_json(json& j, const SturmCertificate& c) {
  j = json{{"claim", c.claim},
           {"kind", to_string(c.kind)},
           {"datum", c.datum ? json(*c.datum) : json(nullptr)},
           {"bound", c.bound},
           {"checked_max_index", c.checked_max_index},
           {"verdict", to_string(c.verdict)},
           {"counterexample", c.counterexample ? json(*c.counterexample) : json(nullptr)},
           {"note", c.note}};
}

void from_json(const json& j, SturmCertificate& c) {
  j.at("claim").get_to(c.claim);
  c.kind = claim_kind_from_string(j.at("kind").get<std::string>());
  c.datum.reset();
  if (!j.at("datum").is_null()) c.datum = j.at("datum").get<EtaDatum>();
  j.at("bound").get_to(c.bound);
  j.at("checked_max_index").get_to(c.checked_max_index);
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.counterexample.reset();
  if (!j.at("counterexample").is_null()) c.counterexample = j.at("counterexample").get<Counterexample>();
  c.note = j.value("note", "");
}

}  // namespace genpart
