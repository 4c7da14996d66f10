#include <algorithm>
#include <random>

#include "doctest.h"
#include "grig/full_group.hpp"
#include "oracles.hpp"

using namespace grig;

namespace {

const char* const kSuite[] = {"012", "01", "02", "2:01", "10:012"};

SubshiftPtr make(const char* seq) { return std::make_shared<const Subshift>(OmegaSequence::parse(seq)); }

std::string window_at(const std::string& text, std::int64_t p, std::size_t radius) {
  return text.substr(static_cast<std::size_t>(p) - radius, 2 * radius);
}

std::string doubled_text(const std::string& base) {
  std::string out;
  for (char c : base) {
    out.push_back(code(Letter::Z));
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("windows of the orbit graph") {
  const auto om = OmegaSequence::parse("10:012");
  const std::string text = oracle::block_prefix(om, 4096);
  for (std::size_t j = 5; j < 2000; j += 37) {
    CHECK(gamma_window(om, j, 5).letters == window_at(text, static_cast<std::int64_t>(j), 5));
  }
  CHECK_THROWS_AS(gamma_window(om, 2, 3), std::invalid_argument);
}

TEST_CASE("generator cocycles follow the orbit graph") {
  for (const char* seq : kSuite) {
    const auto x = make(seq);
    const auto& om = x->omega();
    const std::string text = oracle::block_prefix(om, 1 << 13);
    for (char f : std::string("abcd")) {
      const auto e = generator_element(generator_from_char(f), x);
      CHECK(e.radius() >= 1);
      CHECK(e.displacement_bound() == 1);
      for (std::int64_t p = 8; p < 4000; ++p) {
        CHECK(e.evaluate(window_at(text, p, e.radius())) ==
              oracle::orbit_displacement(std::string(1, f), static_cast<std::uint64_t>(p), om));
      }
    }
  }
}

TEST_CASE("embedded words follow the orbit graph") {
  std::mt19937_64 rng(99);
  for (const char* seq : kSuite) {
    const auto x = make(seq);
    const auto& om = x->omega();
    const std::string text = oracle::block_prefix(om, 1 << 14);
    for (int t = 0; t < 40; ++t) {
      const std::string w = oracle::random_letters(rng, 10);
      const auto e = embed_word(parse_word(w), x);
      CHECK(e.displacement_bound() <= static_cast<std::int64_t>(w.size()));
      const std::int64_t p = 64 + static_cast<std::int64_t>(rng() % 8000);
      CHECK(e.evaluate(window_at(text, p, e.radius())) ==
            oracle::orbit_displacement(w, static_cast<std::uint64_t>(p), om));
      CHECK(schreier_consistency(parse_word(w), x, w.size() + 1 + rng() % 3000));
    }
  }
  CHECK_THROWS_AS(schreier_consistency(parse_word("abc"), make("012"), 3), std::invalid_argument);
}

TEST_CASE("embedding is a homomorphism and injective") {
  std::mt19937_64 rng(20140614);
  for (const char* seq : kSuite) {
    const auto x = make(seq);
    for (int t = 0; t < 60; ++t) {
      const std::string w = oracle::random_letters(rng, 12);
      const auto gw = parse_word(w);
      const bool trivial = is_trivial(gw, x->omega());
      CHECK(is_identity(embed_word(gw, x)) == trivial);
      const auto witness = injectivity_witness(gw, x);
      CHECK(witness.has_value() == !trivial);
      if (witness) CHECK(embed_word(gw, x).evaluate(witness->letters) != 0);
    }
    for (const char* r : {"aa", "bb", "cc", "dd", "bcd", "dbc"}) CHECK(is_identity(embed_word(parse_word(r), x)));
  }
}

TEST_CASE("group operations") {
  const auto x = make("012");
  const auto a = generator_element(Generator::a, x);
  const auto b = generator_element(Generator::b, x);
  const auto ab = compose(a, b);
  CHECK(same_action(ab, embed_word(parse_word("ab"), x)));
  CHECK(is_identity(compose(ab, inverse(ab))));
  CHECK(same_action(power(ab, 3), embed_word(parse_word("ababab"), x)));
  CHECK(is_identity(power(ab, 0)));
  CHECK(element_order_fg(embed_word(parse_word("ad"), x), 64) == 4u);
  CHECK(element_order_fg(ab, 64) == 16u);
  CHECK_FALSE(element_order_fg(ab, 15).has_value());

  const auto phi = shift_power(3, x);
  CHECK(phi.evaluate(x->language(2).front()) == 3);
  CHECK_FALSE(is_identity(phi));
  CHECK(is_identity(compose(phi, shift_power(-3, x))));
  CHECK(is_identity(identity_element(x)));
  CHECK_THROWS_AS(compose(a, tau(x)), std::invalid_argument);
  CHECK_THROWS_AS(compose(a, generator_element(Generator::a, make("01"))), std::invalid_argument);
  CHECK_THROWS_AS(a.evaluate(""), std::invalid_argument);
  CHECK_THROWS_AS(a.evaluate(std::string(2 * a.radius(), code(Letter::Theta))), std::out_of_range);
  CHECK(a.formal_word() == "a");
}

TEST_CASE("disjoint cylinders") {
  for (const char* seq : {"012", "2:01"}) {
    const auto x = make(seq);
    const std::string text = oracle::block_prefix(x->omega(), 1 << 15);
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
      const Cylinder u = find_disjoint_cylinder(*x, n);
      CHECK(x->is_admissible(u.word));
      for (std::size_t k = 1; k < n; ++k) {
        CHECK(cylinder_disjoint_from_shift(*x, u.word, k));
        for (std::size_t p = 0; p + u.word.size() + k <= text.size(); ++p) {
          if (text.compare(p, u.word.size(), u.word) != 0) continue;
          CHECK(text.compare(p + k, u.word.size(), u.word) != 0);
        }
      }
    }
  }
  const auto x = make("012");
  CHECK_FALSE(cylinder_disjoint_from_shift(*x, parse_block_word("T"), 2));
  CHECK(cylinder_disjoint_from_shift(*x, parse_block_word("T"), 1));
}

TEST_CASE("swaps, returns and conjugates against point simulation") {
  const auto x = make("012");
  const std::string text = oracle::block_prefix(x->omega(), 1 << 15);
  const Cylinder u = find_disjoint_cylinder(*x, 3);
  const auto s01 = swap_involution(u, 0, 1, x);
  const auto s12 = swap_involution(u, 1, 2, x);
  const auto r0 = first_return_element(u, x);
  const auto r0_inv = inverse(r0);
  const auto r2 = conjugate_by_shift(r0, 2);
  const auto mixed = compose(s12, r0);
  const auto margin = static_cast<std::int64_t>(
      std::max({s01.radius(), r0.radius(), r0_inv.radius(), r2.radius(), mixed.radius()}));
  const std::string uw = u.word;
  const std::int64_t o = u.offset;
  for (std::int64_t p = margin; p + margin < static_cast<std::int64_t>(text.size()); p += 3) {
    CHECK(p + s01.evaluate(window_at(text, p, s01.radius())) == oracle::swap_origin(text, p, uw, o, 0, 1));
    CHECK(p + r0.evaluate(window_at(text, p, r0.radius())) == oracle::return_origin(text, p, uw, o, true));
    CHECK(p + r0_inv.evaluate(window_at(text, p, r0_inv.radius())) ==
          oracle::return_origin(text, p, uw, o, false));
    CHECK(p + r2.evaluate(window_at(text, p, r2.radius())) ==
          oracle::return_origin(text, p - 2, uw, o, true) + 2);
    const std::int64_t mid = oracle::return_origin(text, p, uw, o, true);
    CHECK(p + mixed.evaluate(window_at(text, p, mixed.radius())) == oracle::swap_origin(text, mid, uw, o, 1, 2));
  }
  CHECK(r0.displacement_bound() <= static_cast<std::int64_t>(x->uniform_recurrence_radius(uw.size())));
  CHECK_THROWS_AS(swap_involution(u, 1, 1, x), std::invalid_argument);
  CHECK_THROWS_AS(swap_involution(Cylinder{parse_block_word("T"), 0}, 0, 2, x), std::invalid_argument);
  CHECK_THROWS_AS(swap_involution(Cylinder{parse_block_word("T T"), 0}, 0, 1, x), std::invalid_argument);
}

TEST_CASE("symmetric group and commuting returns") {
  const auto x = make("012");
  const Cylinder u = find_disjoint_cylinder(*x, 3);
  const auto s01 = swap_involution(u, 0, 1, x);
  const auto s12 = swap_involution(u, 1, 2, x);
  const auto s02 = swap_involution(u, 0, 2, x);
  CHECK(is_identity(compose(s01, s01)));
  CHECK(is_identity(power(compose(s01, s12), 3)));
  CHECK(same_action(compose(s01, compose(s12, s01)), s02));
  CHECK_FALSE(is_identity(compose(s01, s12)));

  const auto r0 = first_return_element(u, x);
  const auto r1 = conjugate_by_shift(r0, 1);
  const auto r2 = conjugate_by_shift(r0, 2);
  CHECK(same_action(compose(r0, r1), compose(r1, r0)));
  CHECK(same_action(compose(r1, r2), compose(r2, r1)));
  CHECK(same_action(compose(s01, compose(r0, s01)), r1));
  CHECK_FALSE(element_order_fg(r0, 64).has_value());
}

TEST_CASE("doubled system against point simulation") {
  const auto x = make("01");
  const auto& om = x->omega();
  const std::string base = oracle::block_prefix(om, 1 << 13);
  const std::string text = doubled_text(base);
  const auto t = tau(x);
  const std::string w = "acab";
  const auto g = embed_word(parse_word(w), x);
  const auto g1 = double_element(g, 1);
  const auto g2 = double_element(g, 2);
  const auto delta = diagonal_element(g);
  for (std::int64_t q = 200; q < 12000; ++q) {
    const bool z_phase = text[static_cast<std::size_t>(q)] == code(Letter::Z);
    const auto origin = static_cast<std::uint64_t>(z_phase ? q / 2 : (q - 1) / 2);
    const std::int64_t n = 2 * oracle::orbit_displacement(w, origin, om);
    CHECK(t.evaluate(window_at(text, q, t.radius())) == (z_phase ? 1 : -1));
    CHECK(g1.evaluate(window_at(text, q, g1.radius())) == (z_phase ? 0 : n));
    CHECK(g2.evaluate(window_at(text, q, g2.radius())) == (z_phase ? n : 0));
    CHECK(delta.evaluate(window_at(text, q, delta.radius())) == n);
  }
  CHECK(same_action(compose(g1, g2), compose(g2, g1)));
  CHECK(is_identity(compose(t, t)));
  CHECK_THROWS_AS(double_element(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(double_element(t, 1), std::invalid_argument);
}

TEST_CASE("commutator identity") {
  for (const char* seq : {"012", "2:01"}) {
    const auto x = make(seq);
    for (const char* w : {"a", "b", "c", "d", "aba", "bacab"}) CHECK(commutator_identity_check(parse_word(w), x));
    CHECK_THROWS_AS(commutator_identity_check(parse_word("ab"), x), std::invalid_argument);
    CHECK_THROWS_AS(commutator_identity_check(parse_word("bcd"), x), std::invalid_argument);
  }
}

TEST_CASE("element dump") {
  const auto x = make("012");
  const auto a = generator_element(Generator::a, x);
  const std::string dump = dump_element(a);
  CHECK(dump.rfind("element: a\nalphabet: base\nradius: ", 0) == 0);
  CHECK(dump.find("bound: 1\n") != std::string::npos);
  const auto lines = static_cast<std::size_t>(std::count(dump.begin(), dump.end(), '\n'));
  CHECK(lines == 4 + x->language(2 * a.radius()).size());
  CHECK(dump == dump_element(generator_element(Generator::a, x)));
}
