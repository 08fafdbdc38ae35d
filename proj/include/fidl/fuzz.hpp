#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fidl/constructions.hpp"
#include "fidl/io.hpp"

namespace fidl {

enum class Strategy { heyting_power, modal, product, random_tables };

std::string_view to_string(Strategy s);
/// Throws Malformed for an unknown name.
Strategy strategy_from_string(const std::string& s);

struct FuzzConfig {
  std::uint64_t seed{1};
  std::size_t max_a{8};
  std::size_t max_b{6};
  std::size_t count{10};
  Strategy strategy{Strategy::heyting_power};
};

/// Throws Malformed unless count >= 1, max_a >= 2, max_b >= 2 and the bounds
/// are within the lattice budget.
void validate_config(const FuzzConfig& c);

inline constexpr const char* kGeneratorVersion = "1";

/// Deterministic random source. Draws use modulo reduction of the raw 64-bit
/// output so results do not depend on the standard library's distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n <= 1 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

private:
  std::mt19937_64 engine_;
};

/// Random order on n points: each pair i < j is related with the given percentage.
Poset random_poset(Rng& rng, std::size_t n, unsigned percent);

/// Increasing sets of a random poset, retried until the size is at most max.
FiniteLattice random_lattice(Rng& rng, std::size_t max_size, std::size_t min_size = 1);

/// Module with arbitrary join-irreducible data for f and meet-irreducible data
/// for i; every choice satisfies the axioms.
FidlModule random_module_over(Rng& rng, const FiniteLattice& a, const FiniteLattice& b);

struct RandomTablesStats {
  std::size_t generated{0};
  std::size_t accepted{0};
};

/// Uniform raw tables repaired through the join/meet decompositions of the
/// sections; candidates still failing the axioms are discarded.
std::optional<FidlModule> random_tables_module(Rng& rng, const FiniteLattice& a, const FiniteLattice& b,
                                               RandomTablesStats& stats);

FidlModule generate_module(Rng& rng, Strategy s, std::size_t max_a, std::size_t max_b,
                           RandomTablesStats& stats);

/// Random closed frame with |X| <= max_x, |Y| <= max_y.
FiFrame random_frame(Rng& rng, std::size_t max_x, std::size_t max_y);

/// Bounded lattice homomorphism C -> B dual to a random monotone map between
/// the spectra.
std::vector<Element> random_lattice_hom(Rng& rng, const FiniteLattice& c, const FiniteLattice& b);

/// Homomorphism drawn from products, diagonals, restrictions, representation
/// isomorphisms and compositions of these.
FidlHomomorphism random_hom(Rng& rng, std::size_t max_a, std::size_t max_b);

/// Sublattice carriers; about half are also closed under f and i.
SubalgebraCandidate random_carriers(Rng& rng, const FidlModule& m);

struct Corpus {
  std::vector<InstanceDocument> documents;
  RandomTablesStats stats;
};

Corpus generate_corpus(const FuzzConfig& c);

}  // namespace fidl
