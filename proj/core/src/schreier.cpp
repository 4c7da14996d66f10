#include "grig/schreier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace grig {

Block lambda_block(std::uint8_t symbol) {
  switch (symbol) {
    case 0: return Block::Lambda0;
    case 1: return Block::Lambda1;
    case 2: return Block::Lambda2;
    default: throw std::invalid_argument("Lambda blocks are indexed by 0, 1, 2");
  }
}

std::string block_name(Block b) {
  switch (b) {
    case Block::Theta: return "Theta";
    case Block::Lambda0: return "Lambda0";
    case Block::Lambda1: return "Lambda1";
    case Block::Lambda2: return "Lambda2";
    case Block::Xi: return "Xi";
  }
  return "?";
}

LabeledGraph LabeledGraph::from_block(Block b) {
  switch (b) {
    case Block::Theta: {
      LabeledGraph g(2);
      g.add_edge(0, 1, Generator::a);
      return g;
    }
    case Block::Xi: {
      LabeledGraph g(1);
      for (auto s : {Generator::b, Generator::c, Generator::d}) g.add_edge(0, 0, s);
      return g;
    }
    case Block::Lambda0:
    case Block::Lambda1:
    case Block::Lambda2: {
      const auto symbol = static_cast<std::uint8_t>(static_cast<int>(b) - static_cast<int>(Block::Lambda0));
      const Generator loop = generator_fixed_by(symbol);
      LabeledGraph g(2);
      for (auto s : {Generator::b, Generator::c, Generator::d}) {
        if (s != loop) g.add_edge(0, 1, s);
      }
      g.add_edge(0, 0, loop);
      g.add_edge(1, 1, loop);
      return g;
    }
  }
  throw std::invalid_argument("unknown block");
}

void LabeledGraph::add_edge(std::size_t u, std::size_t v, Generator label) {
  if (u >= vertex_count_ || v >= vertex_count_) throw std::out_of_range("edge endpoint outside graph");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, label});
}

std::vector<Edge> LabeledGraph::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph LabeledGraph::reversed() const {
  LabeledGraph out(vertex_count_);
  const std::size_t last = vertex_count_ - 1;
  for (const auto& e : edges_) out.add_edge(last - e.v, last - e.u, e.label);
  return out;
}

bool operator==(const LabeledGraph& lhs, const LabeledGraph& rhs) {
  return lhs.vertex_count_ == rhs.vertex_count_ && lhs.sorted_edges() == rhs.sorted_edges();
}

LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0) throw std::invalid_argument("cannot glue an empty graph");
  const std::size_t offset = g1.vertex_count() - 1;
  LabeledGraph out(g1.vertex_count() + g2.vertex_count() - 1);
  for (const auto& e : g1.edges()) out.add_edge(e.u, e.v, e.label);
  for (const auto& e : g2.edges()) out.add_edge(e.u + offset, e.v + offset, e.label);
  return out;
}

GrayCodeTable gray_code(std::size_t level) {
  if (level == 0) throw std::invalid_argument("gray_code needs level >= 1");
  if (level > 24) throw std::length_error("gray_code level capped at 24");
  std::vector<std::string> codes{"1", "0"};
  for (std::size_t l = 1; l < level; ++l) {
    std::vector<std::string> next;
    next.reserve(codes.size() * 2);
    for (const auto& r : codes) next.push_back(r + '1');
    for (auto it = codes.rbegin(); it != codes.rend(); ++it) next.push_back(*it + '0');
    codes = std::move(next);
  }
  return {level, std::move(codes)};
}

std::vector<Ray> rho_enumeration(std::size_t count) {
  std::size_t level = 1;
  while ((std::size_t{1} << level) < count) ++level;
  const auto table = gray_code(level);
  std::vector<Ray> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.emplace_back(table.codes[j]);
  return out;
}

Ray rho_at(std::uint64_t j) {
  std::size_t level = 0;
  while (level < 63 && (std::uint64_t{1} << level) <= j) ++level;
  // Unfold r^{(l)}_j: the last digit is 1 in the first half, 0 in the mirrored second half.
  std::string bits(level, '1');
  for (std::size_t l = level; l >= 1; --l) {
    const std::uint64_t half = std::uint64_t{1} << (l - 1);
    if (j >= half) {
      bits[l - 1] = '0';
      j = 2 * half - 1 - j;
    }
  }
  return Ray(std::move(bits));
}

std::size_t ruler_a(std::size_t i) {
  if (i == 0) throw std::invalid_argument("ruler_a is indexed from 1");
  return static_cast<std::size_t>(std::countr_zero(i)) + 1;
}

Block delta_block(const OmegaSequence& omega, std::size_t i) { return lambda_block(omega.at(ruler_a(i))); }

LabeledGraph build_gamma_recursive(const OmegaSequence& omega, std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_gamma_recursive needs n >= 1");
  const LabeledGraph theta = LabeledGraph::from_block(Block::Theta);
  LabeledGraph g = glue(glue(theta, LabeledGraph::from_block(lambda_block(omega.at(1)))), theta);
  for (std::size_t k = 2; k <= n; ++k) {
    g = glue(glue(g, LabeledGraph::from_block(lambda_block(omega.at(k)))), g);
  }
  return g;
}

LabeledGraph build_gamma_orbit(const OmegaSequence& omega, std::size_t vertex_count, bool with_xi) {
  if (vertex_count < 2) throw std::invalid_argument("build_gamma_orbit needs at least 2 vertices");
  const auto rays = rho_enumeration(vertex_count);
  std::map<Ray, std::size_t> index;
  for (std::size_t i = 0; i < rays.size(); ++i) index.emplace(rays[i], i);

  LabeledGraph g(vertex_count);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Ray& gamma = rays[i];
    // Neighbour reached by b, c or d; equal to gamma only at rho.
    std::size_t m2_neighbour = vertex_count;
    for (auto s : {Generator::b, Generator::c, Generator::d}) {
      const Ray image = apply_generator(s, gamma, omega);
      if (image != gamma) {
        const auto it = index.find(image);
        if (it != index.end()) m2_neighbour = it->second;
      }
    }
    for (auto s : {Generator::a, Generator::b, Generator::c, Generator::d}) {
      const Ray image = apply_generator(s, gamma, omega);
      if (image == gamma) {
        const bool keep = gamma.is_rho() ? with_xi : m2_neighbour < vertex_count;
        if (keep) g.add_edge(i, i, s);
        continue;
      }
      const auto it = index.find(image);
      if (it != index.end() && i < it->second) g.add_edge(i, it->second, s);
    }
  }
  return g;
}

bool self_similarity_check(const OmegaSequence& omega, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("self_similarity_check needs n, m >= 1");
  const LabeledGraph base = build_gamma_recursive(omega, n);
  const OmegaSequence tail = omega.shifted(n);
  LabeledGraph assembled = base;
  const std::size_t deltas = (std::size_t{1} << m) - 1;
  for (std::size_t i = 1; i <= deltas; ++i) {
    assembled = glue(glue(assembled, LabeledGraph::from_block(delta_block(tail, i))), base);
  }
  return assembled == build_gamma_recursive(omega, n + m);
}

std::string export_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph gamma {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.sorted_edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << to_char(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

LabeledGraph parse_dot(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "graph gamma {") throw std::invalid_argument("missing graph header");
  std::vector<std::size_t> vertices;
  std::vector<Edge> edges;
  bool closed = false;
  while (std::getline(in, line)) {
    if (line == "}") {
      closed = true;
      break;
    }
    std::istringstream fields(line);
    std::size_t u = 0;
    if (!(fields >> u)) throw std::invalid_argument("bad line: " + line);
    std::string token;
    fields >> token;
    if (token == ";") {
      vertices.push_back(u);
      continue;
    }
    std::size_t v = 0;
    std::string attr;
    if (token != "--" || !(fields >> v >> attr)) throw std::invalid_argument("bad edge line: " + line);
    const std::string prefix = "[label=\"";
    if (attr.size() != prefix.size() + 4 || attr.compare(0, prefix.size(), prefix) != 0) {
      throw std::invalid_argument("bad edge label: " + line);
    }
    edges.push_back({u, v, generator_from_char(attr[prefix.size()])});
  }
  if (!closed) throw std::invalid_argument("missing closing brace");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] != i) throw std::invalid_argument("vertices must be numbered 0..n-1 in order");
  }
  LabeledGraph g(vertices.size());
  for (const auto& e : edges) {
    if (std::max(e.u, e.v) >= vertices.size()) throw std::invalid_argument("edge endpoint is not a declared vertex");
    g.add_edge(e.u, e.v, e.label);
  }
  return g;
}

}  // namespace grig
