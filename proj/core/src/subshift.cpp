#include "grig/subshift.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace grig {

namespace {

constexpr std::size_t kMaxWordLength = std::size_t{1} << 20;

std::size_t ceil_log2(std::size_t n) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return m;
}

// Every factor of length n of text, deduplicated into out.
void collect_factors(const BlockWord& text, std::size_t n, std::set<BlockWord>& out) {
  if (text.size() < n) return;
  for (std::size_t i = 0; i + n <= text.size(); ++i) out.insert(text.substr(i, n));
}

}  // namespace

Letter letter_of(Block b) {
  switch (b) {
    case Block::Theta: return Letter::Theta;
    case Block::Lambda0: return Letter::Lambda0;
    case Block::Lambda1: return Letter::Lambda1;
    case Block::Lambda2: return Letter::Lambda2;
    case Block::Xi: break;
  }
  throw std::invalid_argument("Xi is not a letter of the subshift alphabet");
}

Letter lambda_letter(std::uint8_t symbol) { return letter_of(lambda_block(symbol)); }

bool is_lambda(Letter l) { return l == Letter::Lambda0 || l == Letter::Lambda1 || l == Letter::Lambda2; }

std::string render_letter(Letter l) {
  switch (l) {
    case Letter::Theta: return "T";
    case Letter::Lambda0: return "L0";
    case Letter::Lambda1: return "L1";
    case Letter::Lambda2: return "L2";
    case Letter::Z: return "z";
  }
  return "?";
}

std::string render_word(const BlockWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += render_letter(letter_at(w, i));
  }
  return out;
}

BlockWord parse_block_word(std::string_view text) {
  BlockWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c == 'T') {
      out.push_back(code(Letter::Theta));
      ++i;
    } else if (c == 'z') {
      out.push_back(code(Letter::Z));
      ++i;
    } else if (c == 'L' && i + 1 < text.size() && text[i + 1] >= '0' && text[i + 1] <= '2') {
      out.push_back(code(lambda_letter(static_cast<std::uint8_t>(text[i + 1] - '0'))));
      i += 2;
    } else {
      throw std::invalid_argument("bad block word: " + std::string(text));
    }
  }
  return out;
}

BlockWord gamma_word(const OmegaSequence& omega, std::size_t letter_count) {
  if (letter_count > kMaxWordLength) throw std::length_error("gamma_word too long");
  BlockWord out(letter_count, code(Letter::Theta));
  for (std::size_t pos = 2; pos <= letter_count; pos += 2) {
    out[pos - 1] = code(letter_of(delta_block(omega, pos / 2)));
  }
  return out;
}

BlockWord gamma_level_word(const OmegaSequence& omega, std::size_t n) {
  if (n > 20) throw std::length_error("gamma_level_word capped at level 20");
  BlockWord w(1, code(Letter::Theta));
  for (std::size_t k = 1; k <= n; ++k) {
    BlockWord next = w;
    next.push_back(code(lambda_letter(omega.at(k))));
    next += w;
    w = std::move(next);
  }
  return w;
}

std::vector<std::uint8_t> occurring_symbols_from(const OmegaSequence& omega, std::size_t start) {
  return omega.symbols_from(start);
}

bool delta_not_eventually_periodic(const OmegaSequence& omega, std::size_t max_period, std::size_t horizon) {
  if (max_period == 0) throw std::invalid_argument("max_period must be positive");
  if (horizon < 4 * max_period) throw std::invalid_argument("horizon must be at least 4 * max_period");
  if (omega.is_eventually_constant()) throw UnsupportedOmega("eventually constant omega");
  std::vector<Block> deltas(horizon + 1);
  for (std::size_t j = 1; j <= horizon; ++j) deltas[j] = delta_block(omega, j);
  for (std::size_t period = 1; period <= max_period; ++period) {
    bool periodic = true;
    for (std::size_t j = horizon / 2; j + period <= horizon && periodic; ++j) {
      periodic = deltas[j] == deltas[j + period];
    }
    if (periodic) return false;
  }
  return true;
}

Subshift::Subshift(OmegaSequence omega) : omega_(std::move(omega)) {
  if (omega_.is_eventually_constant()) {
    throw UnsupportedOmega("omega " + omega_.to_string() +
                           " is eventually constant; the subshift is only built for the non-degenerate case");
  }
}

std::vector<BlockWord> Subshift::compute_language(std::size_t n) const {
  if (n == 0) return {BlockWord{}};
  if (n > kMaxWordLength) throw std::length_error("language length too large");
  // Level m - 1 decomposition: every factor of length n <= 2^m sits inside
  // Gamma_{m-1} D Gamma_{m-1}, where D runs over Lambda_s for the symbols
  // occurring in w from position m on.
  const std::size_t m = std::max<std::size_t>(1, ceil_log2(n));
  const BlockWord base = gamma_level_word(omega_, m - 1);
  std::set<BlockWord> factors;
  for (auto s : occurring_symbols_from(omega_, m)) {
    BlockWord text = base;
    text.push_back(code(lambda_letter(s)));
    text += base;
    collect_factors(text, n, factors);
  }
  return {factors.begin(), factors.end()};
}

const std::vector<BlockWord>& Subshift::language(std::size_t n) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = languages_.find(n); it != languages_.end()) return it->second;
  }
  auto table = compute_language(n);
  std::lock_guard lock(mutex_);
  return languages_.try_emplace(n, std::move(table)).first->second;
}

bool Subshift::is_admissible(const BlockWord& w) const {
  const auto& table = language(w.size());
  return std::binary_search(table.begin(), table.end(), w);
}

std::vector<Letter> Subshift::extensions(const BlockWord& w, Side side) const {
  if (!is_admissible(w)) throw std::invalid_argument("extensions of an inadmissible word");
  std::vector<Letter> out;
  for (auto l : {Letter::Theta, Letter::Lambda0, Letter::Lambda1, Letter::Lambda2}) {
    const BlockWord extended = side == Side::Left ? code(l) + w : w + code(l);
    if (is_admissible(extended)) out.push_back(l);
  }
  return out;
}

std::size_t Subshift::uniform_recurrence_radius(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("uniform_recurrence_radius needs n >= 1");
  const std::size_t target = complexity(n);
  auto contains_all = [&](std::size_t length) {
    for (const auto& w : language(length)) {
      std::unordered_set<std::string_view> seen;
      const std::string_view view(w);
      for (std::size_t i = 0; i + n <= view.size(); ++i) seen.insert(view.substr(i, n));
      if (seen.size() != target) return false;
    }
    return true;
  };
  if (contains_all(n)) return n;
  std::size_t lo = n;
  std::size_t hi = 2 * n;
  while (!contains_all(hi)) {
    if (hi > kMaxWordLength / 2) throw std::runtime_error("uniform recurrence search exceeded its budget");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (contains_all(mid) ? hi : lo) = mid;
  }
  return hi;
}

bool Subshift::morse_hedlund_check(std::size_t n) const { return complexity(n) >= n + 1; }

std::vector<BlockWord> Subshift::compute_double_language(std::size_t n) const {
  if (n == 0) return {BlockWord{}};
  std::vector<BlockWord> out;
  // Phase with a base letter first: x0 z x1 z ...
  for (const auto& u : language((n + 1) / 2)) {
    BlockWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(i % 2 == 0 ? u[i / 2] : code(Letter::Z));
    out.push_back(std::move(w));
  }
  // Phase with z first: z x0 z x1 ...
  for (const auto& u : language(n / 2)) {
    BlockWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(i % 2 == 1 ? u[i / 2] : code(Letter::Z));
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<BlockWord>& Subshift::double_language(std::size_t n) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = double_languages_.find(n); it != double_languages_.end()) return it->second;
  }
  auto table = compute_double_language(n);
  std::lock_guard lock(mutex_);
  return double_languages_.try_emplace(n, std::move(table)).first->second;
}

bool Subshift::is_double_admissible(const BlockWord& w) const {
  const auto& table = double_language(w.size());
  return std::binary_search(table.begin(), table.end(), w);
}

}  // namespace grig
