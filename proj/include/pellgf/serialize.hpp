#pragma once

#include "pellgf/oracle.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

// Report formats shared by the command-line tool and the test suites.
// TSV is one record per line; JSON is a single document. Integers and
// rationals are always decimal strings (rationals as "p/q"), never
// floating point.

namespace pellgf {

inline std::string to_string(SeqKind k) { return k == SeqKind::F ? "F" : "L"; }

inline std::string witness_brief(const Witness& w) {
  return std::string(family_name(w.family)) + ":" + std::to_string(w.n);
}

inline std::string to_tsv(const Classification& c) {
  std::ostringstream os;
  if (c.is_integer) {
    os << "INTEGER\t" << c.k.str() << "\n";
    for (const Witness& w : c.witnesses) os << family_name(w.family) << "\t" << w.n << "\n";
    if (c.witnesses.empty()) os << "THEOREM_VIOLATION\n";
  } else {
    os << "NON_INTEGER\t" << c.value.str() << "\n";
  }
  return os.str();
}

inline std::string to_tsv(const SweepReport& r) {
  std::ostringstream os;
  os << "SWEEP\ttarget=" << r.target << "\tkind=" << to_string(r.kind) << "\tB=" << r.bound
     << "\tradius_only=" << (r.radius_only ? 1 : 0) << "\tpoints_tested=" << r.points_tested
     << "\tinteger_points=" << r.integer_points.size() << "\tviolations=" << r.violations.size()
     << "\tbox_family_agree=" << (r.box_family_agree ? 1 : 0) << "\n";
  for (const IntegerPoint& pt : r.integer_points) {
    os << "POINT\t" << pt.x.str() << "\t" << pt.k.str() << "\t";
    for (std::size_t i = 0; i < pt.witnesses.size(); ++i) {
      if (i) os << ";";
      os << witness_brief(pt.witnesses[i]);
    }
    if (pt.witnesses.empty()) os << "-";
    os << "\n";
  }
  for (const Violation& v : r.violations)
    os << "VIOLATION\t" << v.x.str() << "\t" << v.value.str() << "\t"
       << diagnosis_name(v.diagnosis) << "\n";
  return os.str();
}

inline std::string to_tsv(const IdentityGridReport& r, std::int64_t n_max) {
  std::ostringstream os;
  if (r.all_pass()) {
    os << "PASS 9 identities, grid n<=" << n_max << "\n";
  } else {
    for (const IdentityFailure& f : r.failures)
      os << "FAIL\tid=" << f.id << "\tn=" << f.n << "\tj=" << f.j << "\n";
    os << "FAIL " << r.failures.size() << " of " << r.checks << " checks, grid n<=" << n_max
       << "\n";
  }
  return os.str();
}

inline nlohmann::json to_json(const Witness& w) {
  return {{"family", std::string(family_name(w.family))},
          {"n", std::to_string(w.n)},
          {"k", w.k.str()}};
}

inline nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["value"] = c.value.str();
  j["is_integer"] = c.is_integer;
  if (c.is_integer) {
    j["k"] = c.k.str();
    j["witnesses"] = nlohmann::json::array();
    for (const Witness& w : c.witnesses) j["witnesses"].push_back(to_json(w));
    j["theorem_violation"] = c.theorem_violation();
  }
  if (c.radius_families_ok.has_value()) j["radius_families_ok"] = *c.radius_families_ok;
  return j;
}

inline nlohmann::json to_json(const CFExpansion& cf) {
  nlohmann::json periods = nlohmann::json::array();
  for (const Integer& p : cf.period) periods.push_back(p.str());
  return {{"a0", cf.a0.str()}, {"period", periods}};
}

inline nlohmann::json to_json(const FundamentalSolution& s, const CFExpansion& cf) {
  return {{"m", s.m.str()},
          {"a", s.a.str()},
          {"b", s.b.str()},
          {"epsilon", std::to_string(s.epsilon)},
          {"cf", to_json(cf)}};
}

inline nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json j;
  j["target"] = r.target;
  j["kind"] = to_string(r.kind);
  j["bound"] = std::to_string(r.bound);
  j["radius_only"] = r.radius_only;
  j["points_tested"] = std::to_string(r.points_tested);
  j["box_family_agree"] = r.box_family_agree;
  j["integer_points"] = nlohmann::json::array();
  for (const IntegerPoint& pt : r.integer_points) {
    nlohmann::json p;
    p["x"] = pt.x.str();
    p["k"] = pt.k.str();
    p["witnesses"] = nlohmann::json::array();
    for (const Witness& w : pt.witnesses) p["witnesses"].push_back(to_json(w));
    j["integer_points"].push_back(p);
  }
  j["violations"] = nlohmann::json::array();
  for (const Violation& v : r.violations)
    j["violations"].push_back({{"x", v.x.str()},
                               {"value", v.value.str()},
                               {"diagnosis", std::string(diagnosis_name(v.diagnosis))}});
  return j;
}

inline nlohmann::json to_json(const IdentityGridReport& r, std::int64_t n_max) {
  nlohmann::json j;
  j["n_max"] = std::to_string(n_max);
  j["checks"] = std::to_string(r.checks);
  j["all_pass"] = r.all_pass();
  j["failures"] = nlohmann::json::array();
  for (const IdentityFailure& f : r.failures)
    j["failures"].push_back(
        {{"id", std::to_string(f.id)}, {"n", std::to_string(f.n)}, {"j", std::to_string(f.j)}});
  return j;
}

}  // namespace pellgf
