#include <iostream>

#include "meshalg/meshalg.hpp"

using namespace meshalg;

int main() {
  // the preprojective algebra of type A3: period 6, CY dimension 2
  auto g = make_group(make_dynkin(Family::A, 3), 1, 1);
  auto inv = classify(g, 0);
  std::cout << g.name() << ": u=" << inv.u << " period=" << inv.period
            << " CY=" << opt_str(inv.cy.cy) << " CYF=" << opt_str(inv.cy.cyf) << "\n";

  auto rep = verify_instance(g, QQ{});
  std::cout << "dim Lambda=" << rep.dim << " |Q0|=" << rep.num_vertices << " Loewy=" << rep.loewy << "\n";
  std::cout << "Omega dims:";
  for (auto d : rep.omega_dims) std::cout << " " << d;
  std::cout << "\n";
  for (const auto& c : rep.checks) std::cout << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";

  // a few rows across families, over Q and GF(2)
  for (auto [f, r, m, t] : {std::tuple{Family::D, 4, 2, 3}, {Family::E, 6, 1, 2}, {Family::A, 2, 3, 2}}) {
    auto h = make_group(make_dynkin(f, r), m, t);
    for (int ch : {0, 2}) {
      auto x = classify(h, ch);
      std::cout << h.name() << " char " << ch << ": period " << x.period << ", symmetric "
                << (x.sym.symmetric ? "yes" : "no") << ", stably CY " << (x.cy.stably_cy ? "yes" : "no") << "\n";
    }
  }
  return rep.all_ok() ? 0 : 1;
}
