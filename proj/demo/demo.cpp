// Walks through the library on a few small groups: builds the three graphs,
// solves maximum matchings and runs the constructive procedures.

#include <iostream>

#include "powmatch/powmatch.hpp"

using namespace powmatch;

static void describe(const std::string& name, const GroupTable& g) {
  const SimpleGraph p = power_graph(g);
  const SimpleGraph pe = enhanced_power_graph(g);
  const SimpleGraph com = commuting_graph(g);
  const Matching mp = max_matching(p);
  std::cout << name << ": |G| = " << g.order() << ", |I| = " << involutions(g).cardinality()
            << ", |O| = " << odd_order_elements(g).cardinality() << "\n"
            << "  edges P/Pe/Com = " << p.edge_count() << "/" << pe.edge_count() << "/" << com.edge_count() << "\n"
            << "  mu(P) = " << mp.size() << ", deficiency " << mp.deficiency()
            << ", mu(Pe) = " << max_matching(pe).size() << ", mu(Com) = " << max_matching(com).size() << "\n";
  if (g.order() % 2 == 0) {
    const Matching built = augment_involutions(g);
    std::cout << "  constructive matching leaves " << built.deficiency() << " unmatched\n";
  }
  const Matching power = rematch_enhanced_to_power(g, pe, max_matching(pe));
  std::cout << "  enhanced matching rematched into P: size " << power.size() << "\n";
}

int main() {
  describe("C6", make_cyclic(6));
  describe("D4", make_dihedral(4));
  describe("S4", make_symmetric(4));
  describe("Q8 x C3", direct_product(make_dicyclic(2), make_cyclic(3)));

  const Matching m = max_matching(power_graph(make_cyclic(7)));
  std::cout << "\nmaximum matching of P(C7):\n";
  write_matching(std::cout, m);

  std::cout << "\nlargest divisor antichain of 360: ";
  const auto a = nt::max_divisor_antichain(360);
  std::cout << a.size << " {";
  for (std::size_t i = 0; i < a.witness.size(); ++i) std::cout << (i ? ", " : "") << a.witness[i];
  std::cout << "}\n";
}
