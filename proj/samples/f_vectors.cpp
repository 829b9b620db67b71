// Prints f-polynomials of a few named families through both pipelines.

#include <iostream>

#include "hgq/hgq.hpp"

int main() {
  using namespace hgq;
  const std::pair<const char*, Hypergraph> cases[] = {
      {"C_4", complete(4)},
      {"U_{5,3}", uniform(5, 3)},
      {"PS^3", pitman_stanley(4)},
      {"path P_4", make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}})},
  };
  for (const auto& [name, h] : cases) {
    const QPoly alg = f_polynomial_from_enumerator(psi_q(h));
    const QPoly geo = f_polynomial_geometric(h);
    std::cout << name << ": " << alg;
    if (alg != geo) std::cout << "  (oracle: " << geo << ")";
    std::cout << '\n';
  }
}
