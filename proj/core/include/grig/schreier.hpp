#pragma once

// Schreier graph of the orbit of rho, built two ways: by gluing blocks along
// the recursion Gamma_{n+1} = Gamma_n * Lambda_{w(n+1)} * Gamma_n, and
// directly from the generator action on the Gray code enumeration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grig/omega.hpp"

namespace grig {

enum class Block : std::uint8_t { Theta, Lambda0, Lambda1, Lambda2, Xi };

/// Lambda_k for k in {0,1,2}.
Block lambda_block(std::uint8_t symbol);
std::string block_name(Block b);

struct Edge {
  std::size_t u = 0;  // u <= v; u == v is a loop
  std::size_t v = 0;
  Generator label = Generator::a;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge-labelled multigraph on vertices 0..n-1. Vertex 0 is the leftmost
/// vertex and n-1 the rightmost one.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  static LabeledGraph from_block(Block b);

  void add_edge(std::size_t u, std::size_t v, Generator label);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t leftmost() const { return 0; }
  std::size_t rightmost() const { return vertex_count_ - 1; }

  /// Edges in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edges sorted; the canonical form used by equality and export.
  std::vector<Edge> sorted_edges() const;

  /// Mirror image: vertex i becomes n-1-i.
  LabeledGraph reversed() const;

  /// Label-sensitive multiset equality under the fixed vertex numbering.
  friend bool operator==(const LabeledGraph& lhs, const LabeledGraph& rhs);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Identifies the rightmost vertex of g1 with the leftmost vertex of g2.
LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2);

struct GrayCodeTable {
  std::size_t level = 0;
  std::vector<std::string> codes;
};

/// Gray code order with the roles of 0 and 1 exchanged: r_0 = 1...1.
GrayCodeTable gray_code(std::size_t level);

/// rho_0 .. rho_{count-1}: Gray codes with an implicit 1-tail.
std::vector<Ray> rho_enumeration(std::size_t count);

/// rho_j computed directly from j (inverse of rho_index).
Ray rho_at(std::uint64_t j);

/// 1, 2, 1, 3, 1, 2, 1, 4, ...: position of the first 0 in rho_{2i-1}.
std::size_t ruler_a(std::size_t i);

/// Delta_{i,w} = Lambda_{w(ruler_a(i))}.
Block delta_block(const OmegaSequence& omega, std::size_t i);

/// The finite graph spanned by the first 2^{n+1} vertices, built by gluing.
LabeledGraph build_gamma_recursive(const OmegaSequence& omega, std::size_t n);

/// The graph on rho_0 .. rho_{vertex_count-1} obtained from the generator
/// action. Edges to vertices outside the range are dropped; the loop at a
/// vertex belongs to the Lambda block it shares with its (M2) neighbour and is
/// dropped with it. The three loops at rho are kept iff with_xi.
LabeledGraph build_gamma_orbit(const OmegaSequence& omega, std::size_t vertex_count, bool with_xi);

/// Checks Gamma_{n+m} = Gamma_n * D_1 * Gamma_n * ... * D_{2^m - 1} * Gamma_n
/// with D_i = delta_block(shift_omega(omega, n), i).
bool self_similarity_check(const OmegaSequence& omega, std::size_t n, std::size_t m);

std::string export_dot(const LabeledGraph& g);

/// Reads back the output of export_dot. Throws std::invalid_argument.
LabeledGraph parse_dot(std::string_view text);

}  // namespace grig
