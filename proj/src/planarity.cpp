#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "rminor/minor.hpp"

namespace rminor {

bool is_planar(const LabeledMultigraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const auto simple = simplify(g).graph;
  std::map<VertexId, int> index;
  for (VertexId v : simple.vertices()) index.emplace(v, static_cast<int>(index.size()));
  BoostGraph bg(simple.num_vertices());
  for (const auto& [id, e] : simple.edges()) boost::add_edge(index.at(e.a), index.at(e.b), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace rminor
