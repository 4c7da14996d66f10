#pragma once

// The subshift X_w over the block alphabet {Theta, Lambda0, Lambda1, Lambda2}
// and its doubled version Y over the same alphabet plus a spacer letter z.
//
// A point is never materialised; everything works on finite admissible words.
// The letter at position i of a point is the block joining vertices i and i+1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "grig/omega.hpp"
#include "grig/schreier.hpp"

namespace grig {

enum class Letter : char { Theta = 0, Lambda0 = 1, Lambda1 = 2, Lambda2 = 3, Z = 4 };

/// Words are stored one Letter code per char so they can key hash tables.
using BlockWord = std::string;

inline char code(Letter l) { return static_cast<char>(l); }
inline Letter letter_at(const BlockWord& w, std::size_t i) { return static_cast<Letter>(w[i]); }
Letter letter_of(Block b);
Letter lambda_letter(std::uint8_t symbol);
bool is_lambda(Letter l);

/// T, L0, L1, L2, z
std::string render_letter(Letter l);
/// Letters separated by spaces.
std::string render_word(const BlockWord& w);
/// Inverse of render_word; also accepts the compact form without spaces.
BlockWord parse_block_word(std::string_view text);

enum class Alphabet : std::uint8_t { Base, Doubled };
enum class Side : std::uint8_t { Left, Right };

/// Theta D_1 Theta D_2 ... truncated to letter_count letters.
BlockWord gamma_word(const OmegaSequence& omega, std::size_t letter_count);

/// Word of the finite graph Gamma_{n,w} (2^{n+1} - 1 letters); n = 0 gives Theta.
BlockWord gamma_level_word(const OmegaSequence& omega, std::size_t n);

std::vector<std::uint8_t> occurring_symbols_from(const OmegaSequence& omega, std::size_t start);

/// Checks that (D_j) restricted to [horizon/2, horizon] has no period
/// T <= max_period.
bool delta_not_eventually_periodic(const OmegaSequence& omega, std::size_t max_period, std::size_t horizon);

/// Language of X_w (and of the doubled subshift) with per-length caching.
/// Construction rejects eventually constant w with UnsupportedOmega.
///
/// Thread-safe: tables are built under a lock and never modified afterwards.
class Subshift {
 public:
  explicit Subshift(OmegaSequence omega);

  const OmegaSequence& omega() const { return omega_; }

  /// Exact set of length-n factors, sorted.
  const std::vector<BlockWord>& language(std::size_t n) const;
  std::size_t complexity(std::size_t n) const { return language(n).size(); }
  bool is_admissible(const BlockWord& w) const;

  /// Letters l with lw (Left) or wl (Right) admissible. Throws
  /// std::invalid_argument for inadmissible w.
  std::vector<Letter> extensions(const BlockWord& w, Side side) const;

  /// Least R such that every admissible word of length R contains every
  /// admissible word of length n.
  std::size_t uniform_recurrence_radius(std::size_t n) const;

  /// complexity(n) >= n + 1.
  bool morse_hedlund_check(std::size_t n) const;

  /// Length-n factors of the doubled points ...z x_{-1} z x_0 z x_1...,
  /// both phases, sorted.
  const std::vector<BlockWord>& double_language(std::size_t n) const;
  bool is_double_admissible(const BlockWord& w) const;

  const std::vector<BlockWord>& words(Alphabet alphabet, std::size_t n) const {
    return alphabet == Alphabet::Base ? language(n) : double_language(n);
  }

 private:
  std::vector<BlockWord> compute_language(std::size_t n) const;
  std::vector<BlockWord> compute_double_language(std::size_t n) const;

  OmegaSequence omega_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::vector<BlockWord>> languages_;
  mutable std::map<std::size_t, std::vector<BlockWord>> double_languages_;
};

}  // namespace grig
