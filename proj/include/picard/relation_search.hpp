#ifndef PICARD_RELATION_SEARCH_HPP
#define PICARD_RELATION_SEARCH_HPP

#include <picard/diff_polynomial.hpp>

#include <cstdint>
#include <functional>
#include <random>

namespace picard {

/// A family of symbols that can be sampled on random inputs. One sample
/// returns one exact series per symbol; every coefficient index becomes a
/// row of the evaluation matrix.
struct RelationGenerator {
    std::vector<Symbol> symbols;
    std::function<std::vector<PowerSeries>(std::mt19937_64&)> sample;
};

struct RelationSearchResult {
    std::optional<DiffPolynomial<Rational>> relation; // primitive integer coefficients
    int weight = 0;                                   // last weight examined
    int degree = -1;
    int monomials = 0;
    int rank = 0;
    int nullity = 0;
    int certified_trials = 0;
    std::string message;
};

/// Monomials of exact quasi-weight w, in lexicographic exponent order.
std::vector<std::vector<int>> monomials_of_weight(const std::vector<Symbol>& symbols, int weight);

/// Relations of one weight: rank modulo a 61-bit prime selects independent
/// rows, an exact fraction-free nullspace on those rows gives the candidate,
/// which is then verified exactly on `certify_trials` fresh samples.
RelationSearchResult find_relation_at_weight(const RelationGenerator& g, int weight, int trials,
                                             std::uint64_t seed, int certify_trials = 3);

/// Scans weights min_weight..weight_bound and stops at the first relation.
RelationSearchResult find_relation(const RelationGenerator& g, int min_weight, int weight_bound, int trials,
                                   std::uint64_t seed);

/// Fraction-free nullspace of an integer matrix (rows of equal length).
std::vector<std::vector<Integer>> integer_nullspace(std::vector<std::vector<Integer>> rows, std::size_t columns);

enum class RelationMode { p1, p2 };

struct RelationReport {
    RelationSearchResult search;
    PowerSeries check{Var::q, 0}; // relation evaluated on the quintic data
    bool verified = false;
};

/// p2: relation identically zero in u among B2, B4 and derivatives, then
///     evaluated on A2, A4 of the quintic mirror map.
/// p1: relation identically zero in z among A2, A4 (quintic potentials),
///     then evaluated on B2, B4 of u = log K.
RelationReport relation_search(RelationMode mode, int weight_bound, int order, int trials, std::uint64_t seed);

/// Symbol families: B2, B2', ..., B4, B4', ... up to the given derivative
/// counts (names prefixed by `a` or `b`).
std::vector<Symbol> pair_symbols(const std::string& low, const std::string& high, int low_derivs,
                                 int high_derivs);

RelationGenerator b_generator(int low_derivs, int high_derivs);
RelationGenerator a_generator(int low_derivs, int high_derivs);

} // namespace picard

#endif // PICARD_RELATION_SEARCH_HPP
