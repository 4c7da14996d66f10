#include "grig/full_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "grig/schreier.hpp"

namespace grig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Smallest radius whose window covers positions lo..hi.
std::size_t covering_radius(std::int64_t lo, std::int64_t hi) {
  const std::int64_t r = std::max<std::int64_t>({1, -lo, hi + 1});
  return static_cast<std::size_t>(r);
}

bool occurs_at(std::string_view window, std::size_t radius, std::int64_t position, const BlockWord& u) {
  const std::int64_t start = static_cast<std::int64_t>(radius) + position;
  if (start < 0 || start + static_cast<std::int64_t>(u.size()) > static_cast<std::int64_t>(window.size())) {
    throw std::logic_error("cylinder test outside the window");
  }
  return window.compare(static_cast<std::size_t>(start), u.size(), u) == 0;
}

template <class Fn>
Cocycle tabulate(const Subshift& subshift, Alphabet alphabet, std::size_t radius, Fn&& value) {
  std::unordered_map<BlockWord, std::int64_t> values;
  const auto& windows = subshift.words(alphabet, 2 * radius);
  values.reserve(windows.size());
  for (const auto& w : windows) values.emplace(w, value(std::string_view(w)));
  return Cocycle(radius, std::move(values));
}

void require_base(Alphabet alphabet, const char* what) {
  if (alphabet != Alphabet::Base) throw std::invalid_argument(std::string(what) + " acts on the base subshift only");
}

// Upper bound on first return times to the cylinder word, from uniform recurrence.
std::size_t return_time_bound(const Subshift& subshift, const BlockWord& u) {
  if (u.empty()) return 1;
  return subshift.uniform_recurrence_radius(u.size()) - u.size() + 1;
}

Cocycle generator_table(Generator f, const Subshift& subshift) {
  return tabulate(subshift, Alphabet::Base, 1, [f](std::string_view w) -> std::int64_t {
    const auto left = static_cast<Letter>(w[0]);
    const auto right = static_cast<Letter>(w[1]);
    if (f == Generator::a) return right == Letter::Theta ? 1 : -1;
    const Letter lambda = is_lambda(right) ? right : left;
    const auto symbol = static_cast<std::uint8_t>(static_cast<int>(lambda) - static_cast<int>(Letter::Lambda0));
    if (fixing_symbol(f) == symbol) return 0;
    return is_lambda(right) ? 1 : -1;
  });
}

Cocycle swap_table(const primitive::Swap& s, const Subshift& subshift) {
  const BlockWord& u = s.cylinder.word;
  const std::int64_t o = s.cylinder.offset;
  const auto i = static_cast<std::int64_t>(s.i);
  const auto j = static_cast<std::int64_t>(s.j);
  // phi^k U is the cylinder word at offset o - k.
  const std::size_t radius = covering_radius(o - j, o - i + static_cast<std::int64_t>(u.size()) - 1);
  return tabulate(subshift, Alphabet::Base, radius, [&](std::string_view w) -> std::int64_t {
    if (occurs_at(w, radius, o - i, u)) return j - i;
    if (occurs_at(w, radius, o - j, u)) return i - j;
    return 0;
  });
}

Cocycle return_table(const primitive::FirstReturn& fr, bool last, const Subshift& subshift) {
  const BlockWord& u = fr.cylinder.word;
  const std::int64_t o = fr.cylinder.offset;
  const auto bound = static_cast<std::int64_t>(return_time_bound(subshift, u));
  const auto len = static_cast<std::int64_t>(u.size());
  const std::size_t radius = last ? covering_radius(o - bound, o + len - 1) : covering_radius(o, o + bound + len - 1);
  const std::int64_t direction = last ? -1 : 1;
  return tabulate(subshift, Alphabet::Base, radius, [&](std::string_view w) -> std::int64_t {
    if (!occurs_at(w, radius, o, u)) return 0;
    for (std::int64_t k = 1; k <= bound; ++k) {
      if (occurs_at(w, radius, o + direction * k, u)) return direction * k;
    }
    throw std::logic_error("return time exceeds the uniform recurrence bound");
  });
}

Cocycle doubled_table(const FullGroupElement& inner, int copy, const Subshift& subshift) {
  require_base(inner.alphabet(), "double_element input");
  const std::size_t inner_radius = inner.radius();
  const std::size_t radius = 2 * inner_radius;
  return tabulate(subshift, Alphabet::Doubled, radius, [&](std::string_view w) -> std::int64_t {
    const bool base_phase = static_cast<Letter>(w[radius]) != Letter::Z;
    if ((copy == 1) != base_phase) return 0;
    // Base letters sit at even offsets from position 0 in the base phase,
    // odd offsets in the z phase.
    const std::size_t shift = base_phase ? 0 : 1;
    BlockWord x;
    x.reserve(2 * inner_radius);
    for (std::size_t t = 0; t < 2 * inner_radius; ++t) x.push_back(w[2 * t + shift]);
    return 2 * inner.evaluate(x);
  });
}

Cocycle factor_table(const Factor& factor, const Subshift& subshift, Alphabet alphabet) {
  return std::visit(
      overloaded{
          [&](const primitive::Generator& g) {
            require_base(alphabet, "generator element");
            return generator_table(g.f, subshift);
          },
          [&](const primitive::Swap& s) {
            require_base(alphabet, "swap involution");
            return swap_table(s, subshift);
          },
          [&](const primitive::FirstReturn& fr) {
            require_base(alphabet, "first return element");
            return return_table(fr, factor.inverted, subshift);
          },
          [&](const primitive::ShiftPower& sp) {
            const std::int64_t k = factor.inverted ? -sp.k : sp.k;
            return tabulate(subshift, alphabet, 1, [k](std::string_view) { return k; });
          },
          [&](const primitive::Tau&) {
            if (alphabet != Alphabet::Doubled) throw std::invalid_argument("tau lives on the doubled subshift");
            return tabulate(subshift, Alphabet::Doubled, 1, [](std::string_view w) -> std::int64_t {
              return static_cast<Letter>(w[1]) == Letter::Z ? 1 : -1;
            });
          },
          [&](const primitive::Doubled& d) {
            if (alphabet != Alphabet::Doubled) throw std::invalid_argument("doubled copies live on the doubled subshift");
            if (factor.inverted) return doubled_table(inverse(*d.inner), d.copy, subshift);
            return doubled_table(*d.inner, d.copy, subshift);
          },
      },
      factor.primitive);
}

FullGroupElement from_factor(SubshiftPtr subshift, Alphabet alphabet, Factor factor) {
  Cocycle table = factor_table(factor, *subshift, alphabet);
  return FullGroupElement(std::move(subshift), alphabet, {std::move(factor)}, std::move(table));
}

Factor inverted(const Factor& f) { return {f.primitive, !f.inverted}; }

std::string render_cylinder(const Cylinder& c) {
  return "[" + render_word(c.word) + "]@" + std::to_string(c.offset);
}

std::string render_factor(const Factor& f) {
  return std::visit(
      overloaded{
          [&](const primitive::Generator& g) { return std::string(1, to_char(g.f)); },
          [&](const primitive::Swap& s) {
            return "sigma(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")" + render_cylinder(s.cylinder);
          },
          [&](const primitive::FirstReturn& fr) {
            return std::string(f.inverted ? "last_return" : "first_return") + render_cylinder(fr.cylinder);
          },
          [&](const primitive::ShiftPower& sp) {
            return "phi^" + std::to_string(f.inverted ? -sp.k : sp.k);
          },
          [&](const primitive::Tau&) { return std::string("tau"); },
          [&](const primitive::Doubled& d) {
            return "copy" + std::to_string(d.copy) + "(" + d.inner->formal_word() + ")" + (f.inverted ? "^-1" : "");
          },
      },
      f.primitive);
}

void require_compatible(const FullGroupElement& g, const FullGroupElement& h) {
  if (g.alphabet() != h.alphabet()) throw std::invalid_argument("elements live on different alphabets");
  if (g.subshift() != h.subshift() && g.subshift()->omega() != h.subshift()->omega()) {
    throw std::invalid_argument("elements belong to different subshifts");
  }
}

}  // namespace

Cocycle::Cocycle(std::size_t radius, std::unordered_map<BlockWord, std::int64_t> values)
    : radius_(radius), values_(std::move(values)) {
  for (const auto& [window, n] : values_) bound_ = std::max(bound_, n < 0 ? -n : n);
}

std::int64_t Cocycle::at(std::string_view window) const {
  if (window.size() < 2 * radius_ || window.size() % 2 != 0) {
    throw std::invalid_argument("window radius " + std::to_string(window.size() / 2) + " below cocycle radius " +
                                std::to_string(radius_));
  }
  const auto central = window.substr(window.size() / 2 - radius_, 2 * radius_);
  const auto it = values_.find(BlockWord(central));
  if (it == values_.end()) throw std::out_of_range("window is not admissible: " + render_word(BlockWord(central)));
  return it->second;
}

FullGroupElement::FullGroupElement(std::shared_ptr<const Subshift> subshift, Alphabet alphabet,
                                   std::vector<Factor> word, Cocycle cocycle)
    : subshift_(std::move(subshift)), alphabet_(alphabet), word_(std::move(word)), cocycle_(std::move(cocycle)) {
  if (!subshift_) throw std::invalid_argument("element needs a subshift");
}

std::string FullGroupElement::formal_word() const {
  if (word_.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) out += " * ";
    out += render_factor(word_[i]);
  }
  return out;
}

FullGroupElement identity_element(SubshiftPtr subshift, Alphabet alphabet) {
  Cocycle table = tabulate(*subshift, alphabet, 1, [](std::string_view) { return std::int64_t{0}; });
  return FullGroupElement(std::move(subshift), alphabet, {}, std::move(table));
}

FullGroupElement generator_element(Generator f, SubshiftPtr subshift) {
  return from_factor(std::move(subshift), Alphabet::Base, {primitive::Generator{f}});
}

FullGroupElement shift_power(std::int64_t k, SubshiftPtr subshift, Alphabet alphabet) {
  return from_factor(std::move(subshift), alphabet, {primitive::ShiftPower{k}});
}

FullGroupElement compose(const FullGroupElement& g, const FullGroupElement& h) {
  require_compatible(g, h);
  const std::size_t rg = g.radius();
  const auto dh = static_cast<std::size_t>(h.displacement_bound());
  const std::size_t radius = std::max(h.radius(), rg + dh);
  Cocycle table = tabulate(*h.subshift(), h.alphabet(), radius, [&](std::string_view w) -> std::int64_t {
    const std::int64_t k = h.evaluate(w);
    // phi^k moves the origin k letters to the right.
    const auto start = static_cast<std::size_t>(static_cast<std::int64_t>(radius) + k) - rg;
    return k + g.evaluate(w.substr(start, 2 * rg));
  });
  std::vector<Factor> word = g.word();
  word.insert(word.end(), h.word().begin(), h.word().end());
  return FullGroupElement(h.subshift(), h.alphabet(), std::move(word), std::move(table));
}

FullGroupElement inverse(const FullGroupElement& e) {
  const auto& word = e.word();
  if (word.empty()) return e;
  // (f1 ... fk)^{-1} = fk^{-1} ... f1^{-1}, built from the right.
  FullGroupElement result = from_factor(e.subshift(), e.alphabet(), inverted(word.front()));
  for (std::size_t i = 1; i < word.size(); ++i) {
    result = compose(from_factor(e.subshift(), e.alphabet(), inverted(word[i])), result);
  }
  return result;
}

FullGroupElement power(const FullGroupElement& e, std::size_t k) {
  if (k == 0) return identity_element(e.subshift(), e.alphabet());
  FullGroupElement result = e;
  for (std::size_t i = 1; i < k; ++i) result = compose(e, result);
  return result;
}

bool is_identity(const FullGroupElement& e) {
  const auto& values = e.cocycle().values();
  return std::all_of(values.begin(), values.end(), [](const auto& kv) { return kv.second == 0; });
}

bool same_action(const FullGroupElement& e, const FullGroupElement& f) {
  require_compatible(e, f);
  const std::size_t radius = std::max(e.radius(), f.radius());
  for (const auto& w : e.subshift()->words(e.alphabet(), 2 * radius)) {
    if (e.evaluate(w) != f.evaluate(w)) return false;
  }
  return true;
}

FullGroupElement embed_word(const GeneratorWord& w, SubshiftPtr subshift) {
  if (w.empty()) return identity_element(std::move(subshift));
  FullGroupElement result = generator_element(w.back(), subshift);
  for (auto it = w.rbegin() + 1; it != w.rend(); ++it) result = compose(generator_element(*it, subshift), result);
  return result;
}

Window gamma_window(const OmegaSequence& omega, std::size_t j, std::size_t radius) {
  if (j < radius) throw std::invalid_argument("window would cross the endpoint rho");
  const BlockWord prefix = gamma_word(omega, j + radius);
  return {radius, prefix.substr(j - radius, 2 * radius)};
}

std::optional<Window> injectivity_witness(const GeneratorWord& w, SubshiftPtr subshift) {
  const OmegaSequence& omega = subshift->omega();
  if (is_trivial(w, omega)) return std::nullopt;
  const FullGroupElement e = embed_word(w, subshift);
  const std::size_t radius = std::max({w.size(), e.radius(), std::size_t{1}});
  constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 20;
  for (std::uint64_t j = w.size() + 1; j < kSearchLimit; ++j) {
    const Ray gamma = rho_at(j);
    if (apply_word(w, gamma, omega) == gamma) continue;
    Window window = gamma_window(omega, j, radius);
    if (e.evaluate(window.letters) == 0) {
      throw std::logic_error("moved ray with zero cocycle at vertex " + std::to_string(j));
    }
    return window;
  }
  throw std::runtime_error("no moved ray found below the search limit");
}

bool schreier_consistency(const GeneratorWord& w, SubshiftPtr subshift, std::size_t j) {
  if (j <= w.size()) throw std::invalid_argument("schreier_consistency needs j > |w|");
  const OmegaSequence& omega = subshift->omega();
  const FullGroupElement e = embed_word(w, subshift);
  const std::size_t radius = std::max({w.size(), e.radius(), std::size_t{1}});
  const Window window = gamma_window(omega, j, radius);
  const Ray image = apply_word(w, rho_at(j), omega);
  const auto displacement = static_cast<std::int64_t>(rho_index(image)) - static_cast<std::int64_t>(j);
  return e.evaluate(window.letters) == displacement;
}

std::optional<std::uint64_t> element_order_fg(const FullGroupElement& e, std::uint64_t max) {
  if (max == 0) throw std::invalid_argument("element_order_fg needs max >= 1");
  FullGroupElement p = e;
  for (std::uint64_t k = 1; k <= max; ++k) {
    if (is_identity(p)) return k;
    if (k < max) p = compose(e, p);
  }
  return std::nullopt;
}

bool cylinder_disjoint_from_shift(const Subshift& subshift, const BlockWord& word, std::size_t k) {
  if (k == 0) return word.empty() ? false : !subshift.is_admissible(word);
  for (const auto& w : subshift.language(word.size() + k)) {
    if (w.compare(0, word.size(), word) == 0 && w.compare(k, word.size(), word) == 0) return false;
  }
  return true;
}

Cylinder find_disjoint_cylinder(const Subshift& subshift, std::size_t n, std::size_t max_length) {
  if (n < 2) throw std::invalid_argument("find_disjoint_cylinder needs n >= 2");
  for (std::size_t length = 1; length <= max_length; ++length) {
    for (const auto& u : subshift.language(length)) {
      bool disjoint = true;
      for (std::size_t k = 1; k < n && disjoint; ++k) disjoint = cylinder_disjoint_from_shift(subshift, u, k);
      if (disjoint) return {u, 0};
    }
  }
  throw std::runtime_error("no cylinder with " + std::to_string(n) + " disjoint translates up to length " +
                           std::to_string(max_length));
}

FullGroupElement swap_involution(const Cylinder& u, std::size_t i, std::size_t j, SubshiftPtr subshift) {
  if (i >= j) throw std::invalid_argument("swap_involution needs i < j");
  if (!subshift->is_admissible(u.word)) throw std::invalid_argument("swap_involution needs a nonempty cylinder");
  if (!cylinder_disjoint_from_shift(*subshift, u.word, j - i)) {
    throw std::invalid_argument("phi^i U and phi^j U intersect");
  }
  return from_factor(std::move(subshift), Alphabet::Base, {primitive::Swap{u, i, j}});
}

FullGroupElement first_return_element(const Cylinder& u, SubshiftPtr subshift) {
  if (!subshift->is_admissible(u.word)) throw std::invalid_argument("first_return_element needs a nonempty cylinder");
  return from_factor(std::move(subshift), Alphabet::Base, {primitive::FirstReturn{u}});
}

FullGroupElement conjugate_by_shift(const FullGroupElement& e, std::int64_t i) {
  return compose(shift_power(i, e.subshift(), e.alphabet()), compose(e, shift_power(-i, e.subshift(), e.alphabet())));
}

FullGroupElement tau(SubshiftPtr subshift) {
  return from_factor(std::move(subshift), Alphabet::Doubled, {primitive::Tau{}});
}

FullGroupElement double_element(const FullGroupElement& e, int copy) {
  if (copy != 1 && copy != 2) throw std::invalid_argument("copy must be 1 or 2");
  require_base(e.alphabet(), "double_element input");
  return from_factor(e.subshift(), Alphabet::Doubled,
                     {primitive::Doubled{std::make_shared<const FullGroupElement>(e), copy}});
}

FullGroupElement diagonal_element(const FullGroupElement& e) {
  return compose(double_element(e, 1), double_element(e, 2));
}

bool commutator_identity_check(const GeneratorWord& w, SubshiftPtr subshift) {
  const FullGroupElement e = embed_word(w, subshift);
  if (is_identity(e) || !is_identity(compose(e, e))) {
    throw std::invalid_argument("commutator_identity_check needs an element of order 2: " + to_string(w));
  }
  const FullGroupElement g1 = double_element(e, 1);
  const FullGroupElement t = tau(subshift);
  const FullGroupElement commutator = compose(g1, compose(t, compose(g1, t)));
  return same_action(diagonal_element(e), commutator);
}

std::string dump_element(const FullGroupElement& e) {
  std::ostringstream out;
  out << "element: " << e.formal_word() << '\n';
  out << "alphabet: " << (e.alphabet() == Alphabet::Base ? "base" : "doubled") << '\n';
  out << "radius: " << e.radius() << '\n';
  out << "bound: " << e.displacement_bound() << '\n';
  std::vector<std::pair<BlockWord, std::int64_t>> rows(e.cocycle().values().begin(), e.cocycle().values().end());
  std::sort(rows.begin(), rows.end());
  for (const auto& [window, n] : rows) out << render_word(window) << '\t' << n << '\n';
  return out.str();
}

}  // namespace grig
