#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homlab.hpp"
#include "invariants.hpp"

namespace meshalg {

using nlohmann::ordered_json;

inline constexpr int kSchema = 1;

inline std::string family_str(Family f) { return f == Family::A ? "A" : f == Family::D ? "D" : "E"; }

inline Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw InvalidRank("unknown family '" + s + "'");
}

inline ordered_json opt_json(const std::optional<long>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); }

inline std::optional<long> opt_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

inline ordered_json group_json(const GroupSpec& g) {
  return {{"family", family_str(g.spec.family)}, {"rank", g.spec.rank}, {"m", g.m}, {"t", g.t}};
}

inline GroupSpec group_from(const ordered_json& j) {
  return make_group(make_dynkin(parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()),
                    j.at("m").get<int>(), j.at("t").get<int>());
}

inline ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["group"] = group_json(r.group);
  j["char"] = r.characteristic;
  j["coxeter"] = r.coxeter;
  j["case"] = to_string(r.inv_case);
  j["H"] = to_string(r.H);
  j["num_vertices"] = r.num_vertices;
  j["u"] = r.u;
  j["weakly_symmetric"] = r.sym.weakly_symmetric;
  j["symmetric"] = r.sym.symmetric;
  j["period"] = r.period;
  j["stably_cy"] = r.cy.stably_cy;
  j["cy_dim"] = opt_json(r.cy.cy);
  j["cyf_dim"] = opt_json(r.cy.cyf);
  j["n_cy_min"] = opt_json(r.n_cy_min);
  return j;
}

inline InvCase inv_case_from(const std::string& s) {
  for (auto c : {InvCase::c1a, InvCase::c1b, InvCase::c2a, InvCase::c2b, InvCase::c2c, InvCase::c3})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown case '" + s + "'");
}

inline InvariantReport invariant_report_from(const ordered_json& j) {
  InvariantReport r{group_from(j.at("group")),
                    j.at("char").get<int>(),
                    j.at("coxeter").get<int>(),
                    inv_case_from(j.at("case").get<std::string>()),
                    j.at("H").get<std::string>() == "Z" ? HGroup::Z : HGroup::TwoZ,
                    {j.at("weakly_symmetric").get<bool>(), j.at("symmetric").get<bool>()},
                    j.at("u").get<long>(),
                    j.at("period").get<long>(),
                    {j.at("stably_cy").get<bool>(), opt_from(j.at("cy_dim")), opt_from(j.at("cyf_dim"))},
                    opt_from(j.at("n_cy_min")),
                    j.at("num_vertices").get<long>()};
  return r;
}

inline bool operator==(const InvariantReport& a, const InvariantReport& b) {
  return a.group.spec.family == b.group.spec.family && a.group.spec.rank == b.group.spec.rank &&
         a.group.m == b.group.m && a.group.t == b.group.t && a.characteristic == b.characteristic &&
         a.coxeter == b.coxeter && a.inv_case == b.inv_case && a.H == b.H &&
         a.sym.weakly_symmetric == b.sym.weakly_symmetric && a.sym.symmetric == b.sym.symmetric && a.u == b.u &&
         a.period == b.period && a.cy.stably_cy == b.cy.stably_cy && a.cy.cy == b.cy.cy && a.cy.cyf == b.cy.cyf &&
         a.n_cy_min == b.n_cy_min && a.num_vertices == b.num_vertices;
}

inline ordered_json to_json(const InstanceReport& r) {
  ordered_json j;
  j["group"] = group_json(r.group);
  j["char"] = r.characteristic;
  j["dim"] = r.dim;
  j["num_vertices"] = r.num_vertices;
  j["loewy"] = r.loewy;
  j["formula"] = to_json(r.formula);
  ordered_json o;
  o["u"] = r.u_oracle;
  o["weakly_symmetric"] = r.weakly_symmetric_oracle;
  o["symmetric"] = r.symmetric_oracle;
  o["H"] = to_string(r.H_oracle);
  o["period"] = r.period_oracle;
  o["stably_cy"] = r.cy.stably_cy;
  o["cy_dim"] = opt_json(r.cy.cy);
  o["cyf_dim"] = opt_json(r.cy.cyf);
  o["loewy_three_flag"] = r.cy.loewy_three_flag;
  j["oracle"] = o;
  if (r.head_checked) {
    j["ranks"] = {{"dim_Q0", r.head.dim_Q0}, {"dim_Q1", r.head.dim_Q1}, {"dim_Q2", r.head.dim_Q2},
                  {"rank_u", r.head.rank_u}, {"rank_delta", r.head.rank_delta}, {"rank_R", r.head.rank_R},
                  {"ker_R", r.ker_R_dim}, {"xi_left", r.xi_left_rank}, {"xi_right", r.xi_right_rank}};
  } else {
    j["ranks"] = nullptr;
  }
  j["omega_dims"] = r.omega_checked ? ordered_json(r.omega_dims) : ordered_json(nullptr);
  ordered_json cs = ordered_json::array();
  for (const auto& c : r.checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = cs;
  j["all_match"] = r.all_ok();
  return j;
}

/// Wraps a payload with the schema tag and command name.
inline ordered_json envelope(const std::string& command, ordered_json payload) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["result"] = std::move(payload);
  return j;
}

inline const std::vector<std::string>& tsv_columns() {
  static const std::vector<std::string> cols{"family", "rank", "m",      "t",         "char",    "case",
                                             "H",      "u",    "weakly_symmetric", "symmetric", "period",
                                             "stably_cy", "cy_dim", "cyf_dim", "n_cy_min", "status"};
  return cols;
}

inline std::string tsv_cell(const ordered_json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

/// One TSV row for a classification (flat keys plus the group fields).
inline std::string tsv_row(const ordered_json& report, const std::string& status) {
  std::ostringstream os;
  const auto& g = report.at("group");
  bool first = true;
  for (const auto& c : tsv_columns()) {
    if (!first) os << '\t';
    first = false;
    if (c == "status") os << status;
    else if (g.contains(c)) os << tsv_cell(g.at(c));
    else if (report.contains(c)) os << tsv_cell(report.at(c));
    else os << "-";
  }
  return os.str();
}

inline std::string tsv_header() {
  std::string out;
  for (const auto& c : tsv_columns()) out += (out.empty() ? "" : "\t") + c;
  return out;
}

}  // namespace meshalg
