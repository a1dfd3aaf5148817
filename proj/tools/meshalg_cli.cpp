#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meshalg/meshalg.hpp"

using namespace meshalg;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kUnsupported = 3, kMismatch = 4 };

struct Query {
  std::string family = "A";
  int rank = 3;
  int m = 1;
  int t = 1;
  int ch = 0;
  std::string format = "json";
  long window = 0;
  int max_r = 6;
  std::size_t rank_cap = 40;
  bool timing = false;
};

GroupSpec group_of(const std::string& family, int rank, int m, int t) {
  auto s = make_dynkin(parse_family(family), rank);
  if (s.family == Family::A && s.rank == 1) throw UnsupportedType("A1 is semisimple and excluded");
  return make_group(s, m, t);
}

// char 0 runs over QQ, anything else over GF(p)
template <class F>
auto with_field(int ch, F&& f) {
  if (ch < 0) throw InvalidType("characteristic must be 0 or a prime");
  if (ch == 0) return f(QQ{});
  try {
    return f(GFp(static_cast<std::uint32_t>(ch)));
  } catch (const std::invalid_argument& e) {
    throw InvalidType(e.what());
  }
}

void check_char(int ch) {
  if (ch == 0) return;
  with_field(ch, [](const auto&) { return 0; });
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Query& q) {
  check_char(q.ch);
  auto g = group_of(q.family, q.rank, q.m, q.t);
  auto rep = classify(g, q.ch);
  auto j = to_json(rep);
  if (q.format == "tsv") {
    std::cout << tsv_header() << "\n" << tsv_row(j, "ok") << "\n";
  } else {
    emit(envelope("classify", j));
  }
  return kOk;
}

int cmd_verify(const Query& q) {
  auto g = group_of(q.family, q.rank, q.m, q.t);
  VerifyOptions opt;
  opt.max_r = q.max_r;
  opt.window = q.window;
  opt.rank_cap = q.rank_cap;
  auto t0 = std::chrono::steady_clock::now();
  auto rep = with_field(q.ch, [&](const auto& fd) { return verify_instance(g, fd, opt); });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (q.format == "tsv") {
    std::cout << "check\tok\tdetail\n";
    for (const auto& c : rep.checks) std::cout << c.name << '\t' << (c.ok ? "true" : "false") << '\t' << c.detail << "\n";
  } else {
    auto j = envelope("verify", to_json(rep));
    if (q.timing) j["timing"] = {{"seconds", secs}};
    emit(j);
  }
  if (!rep.all_ok()) {
    for (const auto& c : rep.checks)
      if (!c.ok) std::cerr << "mismatch: " << c.name << ": " << c.detail << "\n";
    return kMismatch;
  }
  return kOk;
}

struct TableRange {
  std::vector<std::string> families{"A", "D", "E"};
  int rank_min = 2, rank_max = 8;
  int m_min = 1, m_max = 4;
  std::vector<int> ts{1, 2, 3};
  bool verify = false;
};

int cmd_table(const Query& q, const TableRange& tr) {
  check_char(q.ch);
  ordered_json rows = ordered_json::array();
  bool mismatch = false;
  if (q.format == "tsv") std::cout << tsv_header() << "\n";
  for (const auto& fam : tr.families) {
    Family f = parse_family(fam);
    int lo = f == Family::A ? 2 : f == Family::D ? 4 : 6;
    int hi = f == Family::E ? 8 : tr.rank_max;
    for (int r = std::max(lo, tr.rank_min); r <= std::min(hi, tr.rank_max); ++r)
      for (int m = tr.m_min; m <= tr.m_max; ++m)
        for (int t : tr.ts) {
          GroupSpec g;
          try {
            g = group_of(fam, r, m, t);
          } catch (const InvalidType&) {
            continue;  // not an admissible extended type
          }
          ordered_json row;
          std::string status = "ok";
          try {
            row = to_json(classify(g, q.ch));
            if (tr.verify) {
              VerifyOptions opt;
              opt.max_r = q.max_r;
              opt.rank_cap = q.rank_cap;
              auto rep = with_field(q.ch, [&](const auto& fd) { return verify_instance(g, fd, opt); });
              status = rep.all_ok() ? "match" : "mismatch";
              if (!rep.all_ok()) {
                mismatch = true;
                for (const auto& c : rep.checks)
                  if (!c.ok) status += ":" + c.name;
              }
            }
          } catch (const std::exception& e) {
            row["group"] = group_json(g);
            status = std::string("error: ") + e.what();
            mismatch = true;
          }
          row["status"] = status;
          if (q.format == "tsv") std::cout << tsv_row(row, status) << "\n";
          rows.push_back(row);
        }
  }
  if (q.format != "tsv") emit(envelope("table", {{"char", q.ch}, {"rows", rows}}));
  return mismatch ? kMismatch : kOk;
}

ordered_json laut_json(const LAut& f) { return {{"vperm", f.vperm}, {"aperm", f.aperm}, {"sign", f.sign}}; }

template <class Fd>
ordered_json algebra_json(const GroupSpec& g, const Fd& fd, bool structure) {
  Presentation pres = build_presentation(g);
  auto kn = std::make_shared<Knitter<Fd>>(fd, pres);
  OrbitAlgebra<Fd> L(kn, g);
  auto sb = std::make_shared<SocleBasis<Fd>>(kn, g);
  ordered_json j;
  j["group"] = group_json(g);
  j["char"] = fd.characteristic();
  j["dim"] = L.dim();
  j["loewy"] = L.loewy_length();
  ordered_json vs = ordered_json::array();
  for (int v = 0; v < L.num_vertices(); ++v)
    vs.push_back({{"rep", {L.reps()[v].k, L.reps()[v].i}},
                  {"dim_left", L.dim_left_projective(v)},
                  {"dim_right", L.dim_right_projective(v)}});
  j["vertices"] = vs;
  ordered_json as = ordered_json::array();
  for (const auto& a : L.arrows())
    as.push_back({{"src", a.src}, {"tgt", a.tgt}, {"lift", {a.lift.k, a.lift.e, a.lift.shift}}});
  j["arrows"] = as;
  j["signed_arrows"] = [&] {
    ordered_json x = ordered_json::array();
    for (std::size_t a = 0; a < L.arrows().size(); ++a)
      if (pres.s(L.arrows()[a].lift) & 1) x.push_back(a);
    return x;
  }();
  j["nu"] = laut_json(push(L, nu_baut(pres)));
  j["eta"] = laut_json(push(L, nakayama_aut_derived<Fd>(sb)));
  j["mu"] = laut_json(push(L, mu_aut(pres, nakayama_aut_table(g))));
  if (structure) {
    ordered_json basis = ordered_json::array();
    for (std::size_t b = 0; b < L.dim(); ++b) {
      const auto& e = L.basis()[b];
      basis.push_back({{"src", e.src}, {"tgt", e.tgt}, {"deg", e.deg}, {"path", L.basis_path(static_cast<int>(b)).labels}});
    }
    j["basis"] = basis;
    ordered_json mul = ordered_json::array();
    for (std::size_t x = 0; x < L.dim(); ++x)
      for (int t = 0; t < L.num_vertices(); ++t)
        for (int y : L.block(L.basis()[x].tgt, t))
          for (const auto& [k, c] : L.mul_basis(static_cast<int>(x), y)) mul.push_back({x, y, k, fd.str(c)});
    j["structure_constants"] = mul;
  }
  return j;
}

int cmd_algebra(const Query& q, bool structure) {
  auto g = group_of(q.family, q.rank, q.m, q.t);
  auto j = with_field(q.ch, [&](const auto& fd) { return algebra_json(g, fd, structure); });
  emit(envelope("algebra", j));
  return kOk;
}

void add_type_flags(CLI::App* sc, Query& q) {
  sc->add_option("--family", q.family, "Dynkin family")->check(CLI::IsMember({"A", "D", "E", "a", "d", "e"}));
  sc->add_option("--rank", q.rank, "Dynkin rank");
  sc->add_option("--m", q.m, "translation exponent");
  sc->add_option("--t", q.t, "order tag of rho in the generator")->check(CLI::Range(1, 3));
}

void add_common_flags(CLI::App* sc, Query& q) {
  sc->add_option("--char", q.ch, "characteristic: 0 or a prime");
  sc->add_option("--format", q.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meshalg: invariants of m-fold mesh algebras and their oracle checks"};
  app.require_subcommand(1);
  Query q;
  TableRange tr;
  bool structure = false;

  auto* classify_cmd = app.add_subcommand("classify", "closed-form invariants of one extended type");
  add_type_flags(classify_cmd, q);
  add_common_flags(classify_cmd, q);

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite against the formulas");
  add_type_flags(verify_cmd, q);
  add_common_flags(verify_cmd, q);
  verify_cmd->add_option("--window", q.window, "half-width of the nu window (0: Coxeter number)");
  verify_cmd->add_option("--max-r", q.max_r, "largest syzygy degree for direct Omega iteration");
  verify_cmd->add_option("--rank-cap", q.rank_cap, "dim bound for rank checks");
  verify_cmd->add_flag("--timing", q.timing, "add wall-clock timing to the report");

  auto* table_cmd = app.add_subcommand("table", "invariants over a range of extended types");
  add_common_flags(table_cmd, q);
  table_cmd->add_option("--family", tr.families, "families")->check(CLI::IsMember({"A", "D", "E", "a", "d", "e"}));
  table_cmd->add_option("--rank-min", tr.rank_min, "smallest rank");
  table_cmd->add_option("--rank-max", tr.rank_max, "largest rank");
  table_cmd->add_option("--m-min", tr.m_min, "smallest m");
  table_cmd->add_option("--m-max", tr.m_max, "largest m");
  table_cmd->add_option("--t", tr.ts, "order tags")->check(CLI::Range(1, 3));
  table_cmd->add_flag("--verify", tr.verify, "also run the oracle suite per row");
  table_cmd->add_option("--max-r", q.max_r, "largest syzygy degree for direct Omega iteration");
  table_cmd->add_option("--rank-cap", q.rank_cap, "dim bound for rank checks");

  auto* algebra_cmd = app.add_subcommand("algebra", "quiver, Nakayama data and optionally structure constants");
  add_type_flags(algebra_cmd, q);
  add_common_flags(algebra_cmd, q);
  algebra_cmd->add_flag("--structure", structure, "include basis paths and structure constants");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return cmd_classify(q);
    if (*verify_cmd) return cmd_verify(q);
    if (*table_cmd) return cmd_table(q, tr);
    if (*algebra_cmd) return cmd_algebra(q, structure);
  } catch (const UnsupportedType& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidType& e) {
    std::cerr << "invalid type: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidRank& e) {
    std::cerr << "invalid type: " << e.what() << "\n";
    return kInvalid;
  } catch (const NoRho& e) {
    std::cerr << "invalid type: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
