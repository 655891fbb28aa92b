#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoclique/geom.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

enum class VertexRole { kOriginal, kPlus, kMinus };

// Complement of the graph obtained by subdividing every edge twice.
// Vertex order: originals 0..n-1, then v+(e_k) = n+2k and v-(e_k) = n+2k+1
// for e_k the k-th entry of source.edges().
struct Co2Subdivision {
  Graph source;
  Graph graph;
  std::vector<Edge> edges;
  std::vector<VertexRole> role;
  std::vector<std::size_t> index;  // vertex id for originals, edge index otherwise

  VertexId plus(std::size_t k) const { return source.size() + 2 * k; }
  VertexId minus(std::size_t k) const { return source.size() + 2 * k + 1; }
};

Co2Subdivision co2subdivision(const Graph& g);

enum class GadgetTarget { kBalls4, kBalls3Eps, kTriangles, kEllipses };
std::string to_string(GadgetTarget t);

struct ConstructionParams {
  double eps = 0;         // main separation (balls: radial pull, triangles/ellipses: angle step)
  double eps_prime = 0;   // secondary push
  double eps_second = 0;  // balls3eps overlap
  double grid = 0;        // snap grid, a power of two
  double margin = 0;      // minimum |slack| before snapping
  std::vector<std::pair<std::string, double>> aux;
};

struct GadgetOptions {
  double radius_eps = 0.2;  // balls3eps: radii lie in [1, 1 + radius_eps]
  bool snap = true;
  double min_margin = 1e3 * Tolerance{}.tau;
};

struct RealizationReport {
  Graph expected;
  Graph computed;
  bool equal = true;
  std::vector<Edge> mismatched;
  double min_edge_slack = 0;     // over expected edges; +inf if none
  double min_nonedge_slack = 0;  // -slack over expected non-edges; +inf if none
  Edge edge_argmin{0, 0};
  Edge nonedge_argmin{0, 0};

  double min_slack() const { return std::min(min_edge_slack, min_nonedge_slack); }
  Edge argmin() const { return min_edge_slack <= min_nonedge_slack ? edge_argmin : nonedge_argmin; }
};

RealizationReport verify_realization(const GeometricInstance& inst, const Graph& expected, Tolerance tol = {});
std::string to_json(const RealizationReport& r);

// A construction whose verified margin fell below the requested bound.
class RealizationError : public std::runtime_error {
 public:
  RealizationError(const std::string& what, Edge pair, double slack)
      : std::runtime_error(what), pair_(pair), slack_(slack) {}
  Edge pair() const { return pair_; }
  double slack() const { return slack_; }

 private:
  Edge pair_;
  double slack_;
};

struct Realization {
  GeometricInstance instance;
  ConstructionParams params;
  RealizationReport report;
};

Realization realize_co2subdivision(const Graph& g, GadgetTarget target, const GadgetOptions& opt = {});

// Disk instance for the complement of a disjoint union of cycles. Vertex
// order follows the cycles in the order given (evens first, then the odd
// one), each cycle numbered along the cycle.
Graph cycle_union_complement(const std::vector<std::size_t>& evens, std::optional<std::size_t> odd);
Realization realize_co_cycles_disks(const std::vector<std::size_t>& evens, std::optional<std::size_t> odd,
                                    const GadgetOptions& opt = {});
// Mixed list of cycle lengths; more than one odd length is rejected.
Realization realize_co_cycles_disks(const std::vector<std::size_t>& lengths, const GadgetOptions& opt = {});

// Power-of-two grid no coarser than `limit`.
double snap_grid(double limit);
GeometricInstance snap_to_grid(const GeometricInstance& inst, double grid);

}  // namespace geoclique
