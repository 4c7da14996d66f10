#include "grig/omega.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

namespace grig {

namespace {

void check_symbols(const std::vector<std::uint8_t>& symbols) {
  for (auto s : symbols) {
    if (s > 2) throw std::invalid_argument("omega symbols must be 0, 1 or 2");
  }
}

std::vector<std::uint8_t> primitive_root(const std::vector<std::uint8_t>& period) {
  const std::size_t n = period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = period[i] == period[i - p];
    if (periodic) return {period.begin(), period.begin() + static_cast<std::ptrdiff_t>(p)};
  }
  return period;
}

bool is_bcd(Generator g) { return g != Generator::a; }

// Product of two distinct letters from {b, c, d}.
Generator klein_product(Generator x, Generator y) {
  // b, c, d are 1, 2, 3; the third letter of the triple is 6 - x - y.
  return static_cast<Generator>(6 - static_cast<int>(x) - static_cast<int>(y));
}

// w(level + i) view used by the recursion over sections.
std::uint8_t symbol_at_level(const OmegaSequence& omega, std::size_t level) { return omega.at(level + 1); }

Sections sections_at(const GeneratorWord& w, const OmegaSequence& omega, std::size_t level) {
  Sections out;
  const std::uint8_t first = symbol_at_level(omega, level);
  bool parity = false;
  std::array<GeneratorWord, 2> reversed;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == Generator::a) {
      parity = !parity;
      continue;
    }
    for (int v = 0; v < 2; ++v) {
      const int position = v ^ static_cast<int>(parity);
      if (position == 1) {
        reversed[v].push_back(*it);
      } else if (first != fixing_symbol(*it)) {
        reversed[v].push_back(Generator::a);
      }
    }
  }
  out.root_swap = parity;
  out.section0.assign(reversed[0].rbegin(), reversed[0].rend());
  out.section1.assign(reversed[1].rbegin(), reversed[1].rend());
  return out;
}

bool trivial_at(const GeneratorWord& word, const OmegaSequence& omega, std::size_t level) {
  const GeneratorWord w = normalize_word(word);
  if (w.empty()) return true;
  if (w.size() == 1) {
    if (w[0] == Generator::a) return false;
    // A single b, c or d is trivial only when every remaining symbol is its own.
    const auto symbols = omega.symbols_from(level + 1);
    return symbols.size() == 1 && symbols[0] == fixing_symbol(w[0]);
  }
  const Sections s = sections_at(w, omega, level);
  if (s.root_swap) return false;
  return trivial_at(s.section0, omega, level + 1) && trivial_at(s.section1, omega, level + 1);
}

void flip(char& bit) { bit = bit == '0' ? '1' : '0'; }

// Applies one generator to a finite binary string in place.
void act(Generator f, std::string& bits, const OmegaSequence& omega) {
  if (bits.empty()) return;
  if (f == Generator::a) {
    flip(bits[0]);
    return;
  }
  const auto zero = bits.find('0');
  if (zero == std::string::npos || zero + 1 >= bits.size()) return;
  if (omega.at(zero + 1) != fixing_symbol(f)) flip(bits[zero + 1]);
}

}  // namespace

OmegaSequence::OmegaSequence(std::vector<std::uint8_t> preperiod, std::vector<std::uint8_t> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("omega period must be nonempty");
  check_symbols(preperiod_);
  check_symbols(period_);
  period_ = primitive_root(period_);
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

OmegaSequence OmegaSequence::parse(std::string_view text) {
  auto digits = [&](std::string_view part) {
    std::vector<std::uint8_t> out;
    for (char ch : part) {
      if (ch < '0' || ch > '2') {
        throw std::invalid_argument("invalid omega '" + std::string(text) + "': symbols must be 0, 1 or 2");
      }
      out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
  };
  const auto colon = text.find(':');
  if (colon != std::string_view::npos && text.find(':', colon + 1) != std::string_view::npos) {
    throw std::invalid_argument("invalid omega '" + std::string(text) + "': more than one ':'");
  }
  const std::string_view pre = colon == std::string_view::npos ? std::string_view{} : text.substr(0, colon);
  const std::string_view per = colon == std::string_view::npos ? text : text.substr(colon + 1);
  if (per.empty()) throw std::invalid_argument("invalid omega '" + std::string(text) + "': empty period");
  return OmegaSequence(digits(pre), digits(per));
}

std::uint8_t OmegaSequence::at(std::size_t i) const {
  if (i == 0) throw std::out_of_range("omega is indexed from 1");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  return period_[(i - preperiod_.size() - 1) % period_.size()];
}

OmegaSequence OmegaSequence::shifted(std::size_t n) const {
  if (n <= preperiod_.size()) {
    return OmegaSequence({preperiod_.begin() + static_cast<std::ptrdiff_t>(n), preperiod_.end()}, period_);
  }
  const std::size_t k = (n - preperiod_.size()) % period_.size();
  std::vector<std::uint8_t> period = period_;
  std::rotate(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(k), period.end());
  return OmegaSequence({}, std::move(period));
}

std::vector<std::uint8_t> OmegaSequence::symbols_from(std::size_t start) const {
  if (start == 0) throw std::out_of_range("omega is indexed from 1");
  std::vector<std::uint8_t> out(period_.begin(), period_.end());
  for (std::size_t i = start; i <= preperiod_.size(); ++i) out.push_back(preperiod_[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string OmegaSequence::to_string() const {
  std::string out;
  for (auto s : preperiod_) out.push_back(static_cast<char>('0' + s));
  if (!out.empty()) out.push_back(':');
  for (auto s : period_) out.push_back(static_cast<char>('0' + s));
  return out;
}

std::uint8_t fixing_symbol(Generator s) {
  switch (s) {
    case Generator::b: return 2;
    case Generator::c: return 1;
    case Generator::d: return 0;
    case Generator::a: break;
  }
  throw std::invalid_argument("a does not fix any ray other than through the root");
}

Generator generator_fixed_by(std::uint8_t symbol) {
  switch (symbol) {
    case 2: return Generator::b;
    case 1: return Generator::c;
    case 0: return Generator::d;
    default: throw std::invalid_argument("omega symbols must be 0, 1 or 2");
  }
}

char to_char(Generator g) { return "abcd"[static_cast<int>(g)]; }

Generator generator_from_char(char c) {
  if (c < 'a' || c > 'd') throw std::invalid_argument(std::string("not a generator letter: '") + c + "'");
  return static_cast<Generator>(c - 'a');
}

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  w.reserve(text.size());
  for (char c : text) w.push_back(generator_from_char(c));
  return w;
}

std::string to_string(const GeneratorWord& w) {
  std::string out;
  out.reserve(w.size());
  for (auto g : w) out.push_back(to_char(g));
  return out;
}

Ray::Ray(std::string prefix) : prefix_(std::move(prefix)) {
  for (char c : prefix_) {
    if (c != '0' && c != '1') throw std::invalid_argument("ray digits must be 0 or 1");
  }
  while (!prefix_.empty() && prefix_.back() == '1') prefix_.pop_back();
}

TreeVertex apply_generator(Generator f, const TreeVertex& v, const OmegaSequence& omega) {
  TreeVertex out = v;
  act(f, out.bits, omega);
  return out;
}

Ray apply_generator(Generator f, const Ray& r, const OmegaSequence& omega) {
  // One extra tail digit is enough: both moves touch at most position |prefix| + 1.
  std::string bits = r.prefix() + '1';
  act(f, bits, omega);
  return Ray(std::move(bits));
}

TreeVertex apply_word(const GeneratorWord& w, const TreeVertex& v, const OmegaSequence& omega) {
  TreeVertex out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) act(*it, out.bits, omega);
  return out;
}

Ray apply_word(const GeneratorWord& w, const Ray& r, const OmegaSequence& omega) {
  Ray out = r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_generator(*it, out, omega);
  return out;
}

std::optional<std::size_t> first_zero_position(const Ray& r) {
  const auto pos = r.prefix().find('0');
  if (pos == std::string::npos) return std::nullopt;
  return pos + 1;
}

Generator fixing_generator(const Ray& r, const OmegaSequence& omega) {
  const auto m = first_zero_position(r);
  if (!m) throw std::invalid_argument("b, c and d all fix rho");
  return generator_fixed_by(omega.at(*m));
}

GeneratorWord normalize_word(const GeneratorWord& w) {
  GeneratorWord out;
  out.reserve(w.size());
  for (auto g : w) {
    if (out.empty()) {
      out.push_back(g);
      continue;
    }
    const Generator top = out.back();
    if (top == g) {
      out.pop_back();
    } else if (is_bcd(top) && is_bcd(g)) {
      out.back() = klein_product(top, g);
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool is_normalized(const GeneratorWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if ((w[i] == Generator::a) == (w[i - 1] == Generator::a)) return false;
  }
  return true;
}

Sections root_and_sections(const GeneratorWord& w, const OmegaSequence& omega) {
  if (!is_normalized(w)) throw std::invalid_argument("root_and_sections expects a normalized word");
  return sections_at(w, omega, 0);
}

bool is_trivial(const GeneratorWord& w, const OmegaSequence& omega) { return trivial_at(w, omega, 0); }

GeneratorWord inverse_word(const GeneratorWord& w) { return {w.rbegin(), w.rend()}; }

bool words_equal(const GeneratorWord& w1, const GeneratorWord& w2, const OmegaSequence& omega) {
  GeneratorWord product = w1;
  const GeneratorWord inv = inverse_word(w2);
  product.insert(product.end(), inv.begin(), inv.end());
  return is_trivial(product, omega);
}

std::optional<std::uint64_t> element_order(const GeneratorWord& w, const OmegaSequence& omega,
                                           std::uint64_t max) {
  if (max == 0) throw std::invalid_argument("element_order needs max >= 1");
  const GeneratorWord base = normalize_word(w);
  GeneratorWord power = base;
  for (std::uint64_t k = 1; k <= max; ++k) {
    if (is_trivial(power, omega)) return k;
    power.insert(power.end(), base.begin(), base.end());
    power = normalize_word(power);
  }
  return std::nullopt;
}

std::vector<std::uint64_t> ball_sizes(const OmegaSequence& omega, std::size_t n_max) {
  // Elements are bucketed by their action on level 6; words_equal settles
  // collisions, so the key only needs to be a function of the element.
  constexpr std::size_t kKeyDepth = 6;
  std::vector<std::string> level;
  for (std::size_t i = 0; i < (std::size_t{1} << kKeyDepth); ++i) {
    std::string bits(kKeyDepth, '0');
    for (std::size_t k = 0; k < kKeyDepth; ++k) bits[k] = ((i >> k) & 1U) ? '1' : '0';
    level.push_back(std::move(bits));
  }
  auto key = [&](const GeneratorWord& w) {
    std::string out;
    out.reserve(level.size() * kKeyDepth);
    for (const auto& v : level) out += apply_word(w, TreeVertex{v}, omega).bits;
    return out;
  };

  std::unordered_map<std::string, std::vector<GeneratorWord>> seen;
  auto insert_if_new = [&](const GeneratorWord& w) {
    auto& bucket = seen[key(w)];
    for (const auto& other : bucket) {
      if (words_equal(w, other, omega)) return false;
    }
    bucket.push_back(w);
    return true;
  };

  std::vector<std::uint64_t> sizes{1};
  std::vector<GeneratorWord> sphere{GeneratorWord{}};
  insert_if_new({});
  std::uint64_t total = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<GeneratorWord> next;
    for (const auto& w : sphere) {
      for (auto g : {Generator::a, Generator::b, Generator::c, Generator::d}) {
        GeneratorWord candidate(w.size() + 1, g);
        std::copy(w.begin(), w.end(), candidate.begin() + 1);
        candidate = normalize_word(candidate);
        if (insert_if_new(candidate)) next.push_back(std::move(candidate));
      }
    }
    total += next.size();
    sizes.push_back(total);
    sphere = std::move(next);
  }
  return sizes;
}

std::uint64_t rho_index(const Ray& r) {
  const std::string& bits = r.prefix();
  if (bits.size() > 63) throw std::length_error("ray prefix too long for a 63-bit Gray index");
  std::uint64_t index = 0;
  for (std::size_t k = 1; k <= bits.size(); ++k) {
    if (bits[k - 1] == '0') index = ((std::uint64_t{1} << k) - 1) - index;
  }
  return index;
}

OrbitWitness orbit_contains(const Ray& r, const OmegaSequence& omega) {
  if (r.prefix().size() > 24) throw std::length_error("orbit witness limited to prefixes of 24 digits");
  const std::uint64_t steps = rho_index(r);
  GeneratorWord applied;
  applied.reserve(steps);
  Ray current;
  for (std::uint64_t i = 0; i < steps; ++i) {
    Generator g = Generator::a;
    if (i % 2 == 1) {
      const Generator fixed = fixing_generator(current, omega);
      g = fixed == Generator::b ? Generator::c : Generator::b;
    }
    current = apply_generator(g, current, omega);
    applied.push_back(g);
  }
  if (current != r) throw std::logic_error("Gray code walk did not reach the target ray");
  return {true, inverse_word(applied)};
}

}  // namespace grig
