#pragma once

// Grigorchuk groups G_w acting on the binary rooted tree and on the orbit of
// the ray 111... in its boundary.
//
// Words act with the rightmost letter applied first.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grig {

// Thrown when an operation is asked to work with an eventually constant
// sequence where only the non-degenerate case is defined.
class UnsupportedOmega : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ultimately periodic sequence over {0,1,2}, indexed from 1.
///
/// Always held in canonical form: the period is primitive and the preperiod
/// does not end with the last symbol of the period, so two sequences are
/// equal iff their representations are equal.
class OmegaSequence {
 public:
  OmegaSequence(std::vector<std::uint8_t> preperiod, std::vector<std::uint8_t> period);

  /// Parses `[preperiod:]period`, e.g. "012" or "2:01".
  static OmegaSequence parse(std::string_view text);

  /// Symbol at 1-based position i.
  std::uint8_t at(std::size_t i) const;

  /// The shifted sequence i -> w(i + n).
  OmegaSequence shifted(std::size_t n) const;

  bool is_eventually_constant() const { return period_.size() == 1; }

  /// Sorted distinct symbols w(i) for i >= start (start >= 1).
  std::vector<std::uint8_t> symbols_from(std::size_t start) const;

  const std::vector<std::uint8_t>& preperiod() const { return preperiod_; }
  const std::vector<std::uint8_t>& period() const { return period_; }

  std::string to_string() const;

  friend bool operator==(const OmegaSequence&, const OmegaSequence&) = default;

 private:
  std::vector<std::uint8_t> preperiod_;
  std::vector<std::uint8_t> period_;
};

inline std::uint8_t omega_at(const OmegaSequence& omega, std::size_t i) { return omega.at(i); }
inline OmegaSequence shift_omega(const OmegaSequence& omega, std::size_t n) { return omega.shifted(n); }
inline bool is_eventually_constant(const OmegaSequence& omega) { return omega.is_eventually_constant(); }

enum class Generator : std::uint8_t { a, b, c, d };

/// The symbol k such that s = b, c, d fixes everything below a 0 followed by
/// a position where w equals k (b <-> 2, c <-> 1, d <-> 0).
std::uint8_t fixing_symbol(Generator s);
Generator generator_fixed_by(std::uint8_t symbol);

char to_char(Generator g);
Generator generator_from_char(char c);

using GeneratorWord = std::vector<Generator>;

GeneratorWord parse_word(std::string_view text);
std::string to_string(const GeneratorWord& w);

/// Vertex of the binary rooted tree.
struct TreeVertex {
  std::string bits;
  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

/// Boundary point cofinal with rho = 111..., stored as a finite prefix followed
/// by an implicit tail of 1s. The prefix never ends in '1'.
class Ray {
 public:
  Ray() = default;
  explicit Ray(std::string prefix);

  static Ray rho() { return Ray{}; }

  const std::string& prefix() const { return prefix_; }
  bool is_rho() const { return prefix_.empty(); }

  /// Digit at 1-based position i.
  char digit(std::size_t i) const { return i <= prefix_.size() ? prefix_[i - 1] : '1'; }

  friend auto operator<=>(const Ray&, const Ray&) = default;

 private:
  std::string prefix_;
};

TreeVertex apply_generator(Generator f, const TreeVertex& v, const OmegaSequence& omega);
Ray apply_generator(Generator f, const Ray& r, const OmegaSequence& omega);

TreeVertex apply_word(const GeneratorWord& w, const TreeVertex& v, const OmegaSequence& omega);
Ray apply_word(const GeneratorWord& w, const Ray& r, const OmegaSequence& omega);

/// 1-based position of the first 0, or nullopt for rho.
std::optional<std::size_t> first_zero_position(const Ray& r);

/// The unique generator among b, c, d fixing r. Throws for rho.
Generator fixing_generator(const Ray& r, const OmegaSequence& omega);

/// Cancels squares and fuses adjacent letters from {b,c,d} (Klein four-group)
/// until the word alternates between a and single letters from {b,c,d}.
GeneratorWord normalize_word(const GeneratorWord& w);

bool is_normalized(const GeneratorWord& w);

struct Sections {
  bool root_swap = false;
  GeneratorWord section0;  // restriction to the subtree under 0, in G_{sigma w}
  GeneratorWord section1;  // restriction to the subtree under 1, in G_{sigma w}
};

/// Decomposes a normalized word at the root. Throws std::invalid_argument for
/// non-normalized input.
Sections root_and_sections(const GeneratorWord& w, const OmegaSequence& omega);

/// Exact word problem by contraction through sections.
bool is_trivial(const GeneratorWord& w, const OmegaSequence& omega);

bool words_equal(const GeneratorWord& w1, const GeneratorWord& w2, const OmegaSequence& omega);

/// Formal inverse: generators are involutions, so this is the reversed word.
GeneratorWord inverse_word(const GeneratorWord& w);

/// Least k <= max with w^k trivial.
std::optional<std::uint64_t> element_order(const GeneratorWord& w, const OmegaSequence& omega,
                                           std::uint64_t max);

/// Sizes of balls of radius 0..n_max in the Cayley graph for {a,b,c,d}.
std::vector<std::uint64_t> ball_sizes(const OmegaSequence& omega, std::size_t n_max);

/// Position of r in the Gray code enumeration rho_0, rho_1, ... of the orbit.
/// Throws std::length_error if the index does not fit in 63 bits.
std::uint64_t rho_index(const Ray& r);

struct OrbitWitness {
  bool contained = true;
  GeneratorWord word;  // word mapping rho to the ray
};

/// Every Ray lies in the orbit of rho; returns a word realising it through
/// alternating moves (flip the first digit / flip the digit after the first 0).
/// The word has length rho_index(r), so prefixes longer than 24 bits are
/// rejected with std::length_error.
OrbitWitness orbit_contains(const Ray& r, const OmegaSequence& omega);

}  // namespace grig
