// Prints the coclique-bound report for the icosahedron and its local quotient.
#include <iostream>

#include "drgtk/drgtk.hpp"

int main() {
  const auto g = drgtk::build(drgtk::NamedGraph::icosahedron());
  const auto report = drgtk::kp_check(g);
  std::cout << drgtk::to_json(*report).dump(2) << '\n';

  const auto local = drgtk::clique_extension_decompose(drgtk::local_graph(g, 0).graph);
  const auto quotient = drgtk::amply_regular_params(local.quotient);
  std::cout << "local graph: alpha=" << local.alpha << " quotient=" << drgtk::to_json(*quotient).dump() << '\n';
  for (const auto& q : drgtk::local_quotients(*drgtk::amply_regular_params(g)))
    std::cout << "parameter descent: alpha=" << q.alpha << " quotient=" << q.quotient.to_string() << '\n';
}
