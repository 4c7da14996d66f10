#pragma once

// Elements of the topological full group [[phi]] of X_w (and of the doubled
// subshift Y), each stored as a formal word over primitives together with its
// locally constant cocycle n(x), tabulated on admissible windows.
//
// Window convention: a window of radius r holds the letters at positions
// -r .. r-1, so the letter at index r is the block joining vertices 0 and 1.
// The element acts by x -> phi^{n(x)} x where (phi x)_i = x_{i+1}.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "grig/omega.hpp"
#include "grig/subshift.hpp"

namespace grig {

/// The clopen set {x : x_{offset} .. x_{offset + |word| - 1} = word}.
struct Cylinder {
  BlockWord word;
  std::int64_t offset = 0;

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

struct Window {
  std::size_t radius = 0;
  BlockWord letters;  // 2 * radius letters
};

class FullGroupElement;

namespace primitive {
struct Generator {
  grig::Generator f;
};
/// Involution exchanging phi^i U and phi^j U.
struct Swap {
  Cylinder cylinder;
  std::size_t i = 0;
  std::size_t j = 0;
};
/// First return map of U, identity off U. Inverted: last return map.
struct FirstReturn {
  Cylinder cylinder;
};
struct ShiftPower {
  std::int64_t k = 0;
};
/// Doubled system: psi on the z-phase, psi^{-1} on the other phase.
struct Tau {};
/// Copy of a base element acting through psi^2 on one phase of Y.
struct Doubled {
  std::shared_ptr<const FullGroupElement> inner;
  int copy = 1;
};
}  // namespace primitive

using Primitive = std::variant<primitive::Generator, primitive::Swap, primitive::FirstReturn,
                               primitive::ShiftPower, primitive::Tau, primitive::Doubled>;

struct Factor {
  Primitive primitive;
  bool inverted = false;
};

/// Cocycle table on all admissible windows of a fixed radius.
class Cocycle {
 public:
  Cocycle() = default;
  Cocycle(std::size_t radius, std::unordered_map<BlockWord, std::int64_t> values);

  std::size_t radius() const { return radius_; }
  /// max |n(x)| over the table.
  std::int64_t bound() const { return bound_; }
  const std::unordered_map<BlockWord, std::int64_t>& values() const { return values_; }

  /// Value on a window of radius >= radius(), read from its central part.
  /// Throws std::invalid_argument when the window is too small and
  /// std::out_of_range when it is not admissible.
  std::int64_t at(std::string_view window) const;

 private:
  std::size_t radius_ = 0;
  std::int64_t bound_ = 0;
  std::unordered_map<BlockWord, std::int64_t> values_;
};

class FullGroupElement {
 public:
  FullGroupElement(std::shared_ptr<const Subshift> subshift, Alphabet alphabet, std::vector<Factor> word,
                   Cocycle cocycle);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Factor>& word() const { return word_; }
  const Cocycle& cocycle() const { return cocycle_; }
  std::size_t radius() const { return cocycle_.radius(); }
  std::int64_t displacement_bound() const { return cocycle_.bound(); }
  const std::shared_ptr<const Subshift>& subshift() const { return subshift_; }

  std::int64_t evaluate(std::string_view window) const { return cocycle_.at(window); }

  std::string formal_word() const;

 private:
  std::shared_ptr<const Subshift> subshift_;
  Alphabet alphabet_;
  std::vector<Factor> word_;
  Cocycle cocycle_;
};

using SubshiftPtr = std::shared_ptr<const Subshift>;

FullGroupElement identity_element(SubshiftPtr subshift, Alphabet alphabet = Alphabet::Base);
FullGroupElement generator_element(Generator f, SubshiftPtr subshift);
FullGroupElement shift_power(std::int64_t k, SubshiftPtr subshift, Alphabet alphabet = Alphabet::Base);

/// x -> g(h(x)). Throws std::invalid_argument on alphabet or subshift mismatch.
FullGroupElement compose(const FullGroupElement& g, const FullGroupElement& h);
FullGroupElement inverse(const FullGroupElement& e);
FullGroupElement power(const FullGroupElement& e, std::size_t k);

/// Sound and complete because X_w has no periodic points.
bool is_identity(const FullGroupElement& e);

/// Same cocycle on every admissible window of the larger radius.
bool same_action(const FullGroupElement& e, const FullGroupElement& f);

/// iota(w): product of generator elements, rightmost letter first.
FullGroupElement embed_word(const GeneratorWord& w, SubshiftPtr subshift);

/// Window of Gamma~_w of the given radius centred at vertex j (needs j >= radius).
Window gamma_window(const OmegaSequence& omega, std::size_t j, std::size_t radius);

/// Admissible window where iota(w) moves the point, found at a ray rho_j with
/// j > |w| moved by w. nullopt iff w is trivial in G_w.
std::optional<Window> injectivity_witness(const GeneratorWord& w, SubshiftPtr subshift);

/// Cocycle of iota(w) at the window of Gamma~_w centred at vertex j equals the
/// signed displacement of rho_j under w. Requires j > |w|.
bool schreier_consistency(const GeneratorWord& w, SubshiftPtr subshift, std::size_t j);

std::optional<std::uint64_t> element_order_fg(const FullGroupElement& e, std::uint64_t max);

/// U and phi^k U are disjoint: no admissible word carries the cylinder word
/// at two positions k apart.
bool cylinder_disjoint_from_shift(const Subshift& subshift, const BlockWord& word, std::size_t k);

/// Cylinder U with U, phi U, ..., phi^{n-1} U pairwise disjoint. Searches
/// admissible words up to max_length letters; throws std::runtime_error when
/// the budget is exhausted.
Cylinder find_disjoint_cylinder(const Subshift& subshift, std::size_t n, std::size_t max_length = 64);

FullGroupElement swap_involution(const Cylinder& u, std::size_t i, std::size_t j, SubshiftPtr subshift);
FullGroupElement first_return_element(const Cylinder& u, SubshiftPtr subshift);

/// phi^i e phi^{-i}
FullGroupElement conjugate_by_shift(const FullGroupElement& e, std::int64_t i);

FullGroupElement tau(SubshiftPtr subshift);
FullGroupElement double_element(const FullGroupElement& e, int copy);
/// delta(g) = copy 1 of g times copy 2 of g.
FullGroupElement diagonal_element(const FullGroupElement& e);

/// delta(iota(w)) equals g1 tau g1 tau. Throws std::invalid_argument unless
/// iota(w) has order 2.
bool commutator_identity_check(const GeneratorWord& w, SubshiftPtr subshift);

/// Formal word, radius, displacement bound and the full table, windows sorted.
std::string dump_element(const FullGroupElement& e);

}  // namespace grig
