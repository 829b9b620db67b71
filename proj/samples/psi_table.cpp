// Ψ_q of every hypergraph on three vertices, up to isomorphism.

#include <iostream>
#include <set>

#include "hgq/hgq.hpp"

int main() {
  using namespace hgq;
  std::set<Hypergraph> classes;
  for_each_hypergraph(3, [&](const Hypergraph& h) { classes.insert(canonical_form(h)); });
  for (const auto& h : classes) {
    std::cout << "{";
    for (VertexSet e : h.proper_edges()) {
      std::cout << "[";
      for (int v : e.elements()) std::cout << v;
      std::cout << "]";
    }
    std::cout << "}  " << psi_q(h).to_string() << '\n';
  }
}
