#include "grig/verify.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "grig/full_group.hpp"
#include "grig/schreier.hpp"
#include "grig/subshift.hpp"

namespace grig {

namespace {

struct Caps {
  std::size_t graph_level;
  std::size_t enumeration_level;
  std::size_t complexity_n;
  std::size_t doubling_n;
  std::size_t embed_words;
  std::size_t embed_length;
  std::size_t schreier_pairs;
  std::size_t torsion_words;
  std::uint64_t torsion_bound;
  std::size_t commuting_pairs;
  std::uint64_t return_order_bound;
  std::size_t recurrence_n;
};

constexpr Caps kFull{10, 10, 256, 128, 500, 12, 200, 100, 1024, 50, 64, 16};
constexpr Caps kQuick{6, 6, 64, 32, 60, 8, 40, 20, 1024, 10, 16, 8};

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  void record(std::string id, std::string omega, std::string name, const std::function<std::string()>& check) {
    CheckResult r{std::move(id), std::move(omega), std::move(name), CheckStatus::Pass, {}};
    try {
      r.detail = check();
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

  void skip(std::string id, std::string omega, std::string name, std::string why) {
    out_.push_back({std::move(id), std::move(omega), std::move(name), CheckStatus::Skip, std::move(why)});
  }

 private:
  std::vector<CheckResult>& out_;
};

// Signals a failed check with a message; Recorder turns it into a Fail row.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

const std::vector<std::string> kGrayCodeListing{"1111", "0111", "0011", "1011", "1001", "0001", "0101", "1101",
                                              "1100", "0100", "0000", "1000", "1010", "0010", "0110", "1110"};

const std::vector<std::string> kRelations{"aa", "bb", "cc", "dd", "bcd", "bdc", "cbd", "cdb", "dbc", "dcb"};

bool has_all_symbols_in_period(const OmegaSequence& omega) {
  return omega.symbols_from(omega.preperiod().size() + 1).size() == 3;
}

// BFS distance from rho in the orbit graph, using only the generator action.
std::map<Ray, std::size_t> orbit_distances(const OmegaSequence& omega, std::size_t max_distance) {
  std::map<Ray, std::size_t> dist{{Ray::rho(), 0}};
  std::deque<Ray> queue{Ray::rho()};
  while (!queue.empty()) {
    const Ray r = queue.front();
    queue.pop_front();
    const std::size_t d = dist[r];
    if (d == max_distance) continue;
    for (auto s : {Generator::a, Generator::b, Generator::c, Generator::d}) {
      const Ray next = apply_generator(s, r, omega);
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

// u s u^-1 with u = a x a x ... a reduced, so the result is never a generator.
GeneratorWord involution_word(std::mt19937_64& rng, std::size_t conjugator_length) {
  GeneratorWord u;
  for (std::size_t k = 0; k < conjugator_length; ++k) {
    u.push_back(k % 2 == 0 ? Generator::a : static_cast<Generator>(1 + rng() % 3));
  }
  GeneratorWord w = u;
  w.push_back(static_cast<Generator>(1 + rng() % 3));
  const GeneratorWord inv = inverse_word(u);
  w.insert(w.end(), inv.begin(), inv.end());
  return w;
}

void run_base_checks(Recorder& rec, const OmegaSequence& omega, const Caps& caps, std::mt19937_64& rng) {
  const std::string tag = omega.to_string();
  const auto subshift = std::make_shared<const Subshift>(omega);

  rec.record("C2", tag, "graph oracle equivalence", [&] {
    for (std::size_t n = 1; n <= caps.graph_level; ++n) {
      const auto recursive = build_gamma_recursive(omega, n);
      const auto orbit = build_gamma_orbit(omega, std::size_t{1} << (n + 1), false);
      require(recursive == orbit, "mismatch at level " + std::to_string(n));
    }
    return "levels 1.." + std::to_string(caps.graph_level) + " match";
  });

  rec.record("C3", tag, "Gray enumeration is BFS order", [&] {
    const std::size_t count = std::size_t{1} << caps.enumeration_level;
    const auto dist = orbit_distances(omega, count - 1);
    const auto rays = rho_enumeration(count);
    require(dist.size() == count, "BFS ball has " + std::to_string(dist.size()) + " vertices");
    for (std::size_t j = 0; j < count; ++j) {
      const auto it = dist.find(rays[j]);
      require(it != dist.end() && it->second == j, "rho_" + std::to_string(j) + " not at distance " + std::to_string(j));
    }
    return std::to_string(count) + " vertices in order";
  });

  rec.record("C4", tag, "n+1 <= complexity(n) <= 6n", [&] {
    for (std::size_t n = 1; n <= caps.complexity_n; ++n) {
      const std::size_t p = subshift->complexity(n);
      require(p >= n + 1 && p <= 6 * n, "complexity(" + std::to_string(n) + ") = " + std::to_string(p));
    }
    return "n = 1.." + std::to_string(caps.complexity_n);
  });

  rec.record("C5", tag, "doubled complexity <= 2 complexity(ceil(n/2))", [&] {
    for (std::size_t n = 1; n <= caps.doubling_n; ++n) {
      const std::size_t y = subshift->double_language(n).size();
      const std::size_t x = subshift->complexity((n + 1) / 2);
      require(y <= 2 * x, "n = " + std::to_string(n) + ": " + std::to_string(y) + " > 2*" + std::to_string(x));
    }
    return "n = 1.." + std::to_string(caps.doubling_n);
  });

  rec.record("C6", tag, "embedding is an injective homomorphism", [&] {
    std::size_t trivial = 0;
    for (std::size_t k = 0; k < caps.embed_words; ++k) {
      const GeneratorWord w = random_word(rng, caps.embed_length);
      const bool in_group = is_trivial(w, omega);
      const auto e = embed_word(w, subshift);
      require(is_identity(e) == in_group, "disagreement on " + to_string(w));
      if (in_group) {
        ++trivial;
        continue;
      }
      const auto window = injectivity_witness(w, subshift);
      require(window && e.evaluate(window->letters) != 0, "no witness for " + to_string(w));
    }
    return std::to_string(caps.embed_words) + " words, " + std::to_string(trivial) + " trivial";
  });

  rec.record("C7", tag, "cocycle equals Schreier displacement", [&] {
    for (std::size_t k = 0; k < caps.schreier_pairs; ++k) {
      const GeneratorWord w = random_word(rng, 8);
      const std::size_t j = w.size() + 1 + rng() % (200 - w.size());
      require(schreier_consistency(w, subshift, j), "word " + to_string(w) + " at vertex " + std::to_string(j));
    }
    return std::to_string(caps.schreier_pairs) + " pairs";
  });

  rec.record("C8", tag, "relations hold in both groups", [&] {
    for (const auto& text : kRelations) {
      const auto w = parse_word(text);
      require(is_trivial(w, omega), text + " nontrivial in G_w");
      require(is_identity(embed_word(w, subshift)), text + " nontrivial in [[phi]]");
    }
    for (const auto& [lhs, rhs] : {std::pair{"bc", "d"}, {"bd", "c"}, {"cd", "b"}}) {
      require(words_equal(parse_word(lhs), parse_word(rhs), omega), std::string(lhs) + " != " + rhs);
      require(same_action(embed_word(parse_word(lhs), subshift), embed_word(parse_word(rhs), subshift)),
              std::string(lhs) + " != " + rhs + " in [[phi]]");
    }
    return std::to_string(kRelations.size() + 3) + " relations";
  });

  if (has_all_symbols_in_period(omega)) {
    rec.record("C9", tag, "torsion orders are powers of 2", [&] {
      std::uint64_t largest = 1;
      for (std::size_t k = 0; k < caps.torsion_words; ++k) {
        const GeneratorWord w = random_word(rng, 10);
        const auto order = element_order(w, omega, caps.torsion_bound);
        require(order && std::has_single_bit(*order), "order of " + to_string(w) + " not a power of 2 within bound");
        largest = std::max(largest, *order);
      }
      return std::to_string(caps.torsion_words) + " words, largest order " + std::to_string(largest);
    });
  } else {
    rec.skip("C9", tag, "torsion orders are powers of 2", "some symbol occurs finitely often");
  }

  rec.record("C10", tag, "diagonal image is a commutator", [&] {
    std::vector<GeneratorWord> words{{Generator::a}, {Generator::b}, {Generator::c}, {Generator::d}};
    for (int k = 0; k < 3; ++k) words.push_back(involution_word(rng, 3));
    std::string used;
    for (const auto& w : words) {
      const auto e = embed_word(w, subshift);
      if (is_identity(e)) continue;
      require(commutator_identity_check(w, subshift), "delta != [g1 : tau] for " + to_string(w));
      used += to_string(w) + " ";
    }
    for (std::size_t k = 0; k < caps.commuting_pairs; ++k) {
      const auto g = double_element(embed_word(random_word(rng, 6), subshift), 1);
      const auto h = double_element(embed_word(random_word(rng, 6), subshift), 2);
      require(same_action(compose(g, h), compose(h, g)), "copies do not commute");
    }
    return "checked " + used + "and " + std::to_string(caps.commuting_pairs) + " commuting pairs";
  });

  rec.record("C11", tag, "S_3 and Z^3 witnesses", [&] {
    const Cylinder u = find_disjoint_cylinder(*subshift, 3);
    const auto s01 = swap_involution(u, 0, 1, subshift);
    const auto s12 = swap_involution(u, 1, 2, subshift);
    const auto s02 = swap_involution(u, 0, 2, subshift);
    const auto id = identity_element(subshift);
    for (const auto* s : {&s01, &s12, &s02}) require(is_identity(compose(*s, *s)), "sigma not an involution");
    require(same_action(compose(s01, compose(s12, s01)), s02), "s01 s12 s01 != s02");
    require(is_identity(power(compose(s01, s12), 3)), "(s01 s12)^3 != e");
    require(!same_action(s01, id) && !same_action(s01, s12), "sigma degenerate");
    const auto r0 = first_return_element(u, subshift);
    const auto r1 = conjugate_by_shift(r0, 1);
    const auto r2 = conjugate_by_shift(r0, 2);
    require(same_action(compose(r0, r1), compose(r1, r0)), "r0 r1 != r1 r0");
    require(same_action(compose(r0, r2), compose(r2, r0)), "r0 r2 != r2 r0");
    require(same_action(compose(r1, r2), compose(r2, r1)), "r1 r2 != r2 r1");
    require(same_action(compose(s01, compose(r0, s01)), r1), "s01 r0 s01 != r1");
    require(!element_order_fg(r0, caps.return_order_bound), "r0 has finite order within bound");
    return "cylinder " + render_word(u.word) + ", r0 order > " + std::to_string(caps.return_order_bound);
  });

  rec.record("C12", tag, "uniform recurrence radius exists", [&] {
    std::size_t last = 0;
    for (std::size_t n = 1; n <= caps.recurrence_n; ++n) {
      const std::size_t r = subshift->uniform_recurrence_radius(n);
      require(r >= last, "R not monotone at n = " + std::to_string(n));
      last = r;
    }
    return "R(" + std::to_string(caps.recurrence_n) + ") = " + std::to_string(last);
  });
}

void run_degenerate_checks(Recorder& rec, const OmegaSequence& omega) {
  const std::string tag = omega.to_string();
  rec.record("C8", tag, "relations hold in G_w", [&] {
    for (const auto& text : kRelations) require(is_trivial(parse_word(text), omega), text + " nontrivial");
    return std::to_string(kRelations.size()) + " relations";
  });
  rec.record("C9", tag, "eventually constant: no subshift, element of infinite order", [&] {
    bool rejected = false;
    try {
      Subshift s(omega);
    } catch (const UnsupportedOmega&) {
      rejected = true;
    }
    require(rejected, "subshift built for an eventually constant omega");
    for (const auto* text : {"ab", "ac", "ad"}) {
      if (!element_order(parse_word(text), omega, 64)) return std::string(text) + " has order > 64";
    }
    throw CheckFailure("ab, ac and ad all have order <= 64");
  });
}

}  // namespace

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::vector<OmegaSequence> default_omega_suite() {
  std::vector<OmegaSequence> out;
  for (const auto* text : {"012", "01", "02", "2:01", "10:012", "0:1"}) out.push_back(OmegaSequence::parse(text));
  return out;
}

GeneratorWord random_word(std::mt19937_64& rng, std::size_t max_length) {
  const std::size_t length = rng() % (max_length + 1);
  GeneratorWord w(length);
  for (auto& g : w) g = static_cast<Generator>(rng() % 4);
  return w;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const Caps& caps = options.quick ? kQuick : kFull;
  VerifyReport report;
  report.seed = options.seed;
  report.quick = options.quick;
  Recorder rec(report.checks);
  std::mt19937_64 rng(options.seed);

  rec.record("C1", "", "Gray code of length 4", [] {
    require(gray_code(4).codes == kGrayCodeListing, "gray_code(4) differs from the reference listing");
    return std::string("16 strings match");
  });

  const auto omegas = options.omegas.empty() ? default_omega_suite() : options.omegas;
  for (const auto& omega : omegas) {
    if (omega.is_eventually_constant()) {
      run_degenerate_checks(rec, omega);
    } else {
      run_base_checks(rec, omega, caps, rng);
    }
  }
  return report;
}

}  // namespace grig
