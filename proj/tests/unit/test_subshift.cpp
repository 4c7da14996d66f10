#include <algorithm>
#include <thread>

#include "doctest.h"
#include "grig/subshift.hpp"
#include "oracles.hpp"

using namespace grig;

namespace {

const char* const kSuite[] = {"012", "01", "02", "2:01", "10:012"};

std::vector<BlockWord> as_vector(const std::set<std::string>& s) { return {s.begin(), s.end()}; }

// ...z x_0 z x_1 z...
std::string doubled_text(const std::string& base) {
  std::string out;
  for (char c : base) {
    out.push_back(code(Letter::Z));
    out.push_back(c);
  }
  return out;
}

bool contains_all(const std::string& text, const std::vector<BlockWord>& words) {
  return std::all_of(words.begin(), words.end(),
                     [&](const BlockWord& w) { return text.find(w) != std::string::npos; });
}

}  // namespace

TEST_CASE("letters and rendering") {
  const BlockWord w{code(Letter::Theta), code(Letter::Lambda0), code(Letter::Theta), code(Letter::Lambda2),
                    code(Letter::Z)};
  CHECK(render_word(w) == "T L0 T L2 z");
  CHECK(parse_block_word("T L0 T L2 z") == w);
  CHECK(parse_block_word("TL0TL2z") == w);
  CHECK(parse_block_word("").empty());
  CHECK_THROWS_AS(parse_block_word("T L3"), std::invalid_argument);
  CHECK(lambda_letter(1) == Letter::Lambda1);
  CHECK(letter_of(Block::Theta) == Letter::Theta);
  CHECK(is_lambda(Letter::Lambda2));
  CHECK_FALSE(is_lambda(Letter::Z));
}

TEST_CASE("block words") {
  const auto om = OmegaSequence::parse("012");
  CHECK(render_word(gamma_word(om, 8)) == "T L0 T L1 T L0 T L2");
  CHECK(gamma_word(om, 1 << 12) == oracle::block_prefix(om, 1 << 12));
  CHECK(render_word(gamma_level_word(om, 0)) == "T");
  CHECK(render_word(gamma_level_word(om, 1)) == "T L0 T");
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto w = gamma_level_word(om, n);
    CHECK(w.size() == (std::size_t{2} << n) - 1);
    CHECK(w == gamma_word(om, w.size()));
  }
  CHECK(occurring_symbols_from(OmegaSequence::parse("2:01"), 2) == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("Delta sequence is not eventually periodic") {
  for (const char* seq : kSuite) {
    CHECK(delta_not_eventually_periodic(OmegaSequence::parse(seq), 64, 1 << 12));
  }
  CHECK_THROWS_AS(delta_not_eventually_periodic(OmegaSequence::parse("0:1"), 4, 64), UnsupportedOmega);
  CHECK_THROWS_AS(delta_not_eventually_periodic(OmegaSequence::parse("012"), 8, 16), std::invalid_argument);
}

TEST_CASE("degenerate omega is rejected") {
  CHECK_THROWS_AS(Subshift(OmegaSequence::parse("0:1")), UnsupportedOmega);
  CHECK_THROWS_AS(Subshift(OmegaSequence::parse("2")), UnsupportedOmega);
}

TEST_CASE("language against a factor scan") {
  for (const char* seq : kSuite) {
    const auto om = OmegaSequence::parse(seq);
    const Subshift x(om);
    const std::string text = oracle::block_prefix(om, 1 << 16);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(x.language(n) == as_vector(oracle::factors(text, n)));
    for (std::size_t n = 1; n <= 24; ++n) {
      CHECK(x.double_language(n) == as_vector(oracle::factors(doubled_text(text), n)));
    }
  }
}

TEST_CASE("complexity values for 012") {
  const Subshift x(OmegaSequence::parse("012"));
  const std::vector<std::size_t> expected{1, 4, 6, 8, 10, 13, 16, 18, 20};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(x.complexity(n) == expected[n]);
  CHECK(render_word(x.language(1).front()) == "T");
}

TEST_CASE("complexity bounds") {
  for (const char* seq : kSuite) {
    const Subshift x(OmegaSequence::parse(seq));
    for (std::size_t n = 1; n <= 128; ++n) {
      CHECK(x.morse_hedlund_check(n));
      CHECK(x.complexity(n) <= 6 * n);
      CHECK(x.double_language(n).size() <= 2 * x.complexity((n + 1) / 2));
    }
  }
}

TEST_CASE("admissibility and extensions") {
  const Subshift x(OmegaSequence::parse("012"));
  CHECK(x.is_admissible(parse_block_word("T L0 T")));
  CHECK_FALSE(x.is_admissible(parse_block_word("T T")));
  CHECK_FALSE(x.is_admissible(parse_block_word("L0 L0")));
  CHECK(x.extensions(parse_block_word("T"), Side::Right) ==
        std::vector<Letter>{Letter::Lambda0, Letter::Lambda1, Letter::Lambda2});
  CHECK(x.extensions(parse_block_word("L1"), Side::Left) == std::vector<Letter>{Letter::Theta});
  CHECK_THROWS_AS(x.extensions(parse_block_word("T T"), Side::Left), std::invalid_argument);
  CHECK(x.is_double_admissible(parse_block_word("z T z L0")));
  CHECK_FALSE(x.is_double_admissible(parse_block_word("T L0")));
}

TEST_CASE("uniform recurrence radius is minimal") {
  for (const char* seq : {"012", "2:01"}) {
    const auto om = OmegaSequence::parse(seq);
    const Subshift x(om);
    const std::string text = oracle::block_prefix(om, 1 << 15);
    for (std::size_t n = 1; n <= 8; ++n) {
      const std::size_t r = x.uniform_recurrence_radius(n);
      const auto& target = x.language(n);
      for (const auto& w : oracle::factors(text, r)) CHECK(contains_all(w, target));
      bool some_miss = false;
      for (const auto& w : oracle::factors(text, r - 1)) some_miss |= !contains_all(w, target);
      CHECK(some_miss);
    }
  }
  const Subshift x(OmegaSequence::parse("012"));
  CHECK(x.uniform_recurrence_radius(1) == 16);
  CHECK(x.uniform_recurrence_radius(2) == 17);
}

TEST_CASE("language cache is safe under concurrent readers") {
  const Subshift x(OmegaSequence::parse("10:012"));
  std::vector<std::size_t> sizes(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    pool.emplace_back([&, t] { sizes[t] = x.language(30 + t % 2).size() + x.double_language(12).size(); });
  }
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    CHECK(sizes[t] == x.complexity(30 + t % 2) + x.double_language(12).size());
  }
}
