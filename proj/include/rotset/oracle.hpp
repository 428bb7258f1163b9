#pragma once

// Brute-force cross-checks that bypass the simple-cycle shortcut: hulls of
// all closed-walk means, and seeded sampling of chain averages.

#include "rotset/exactgeom.hpp"
#include "rotset/heteroclinic.hpp"
#include "rotset/markov.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rotset {

inline constexpr std::size_t kDefaultOracleStateCap = 5'000'000;

/// Hull of the means of every closed walk of length <= max_len.
/// Throws ModelError if max_len is below the node count and ResourceError
/// when more than `state_cap` (start, node, length, sum) states are visited.
RationalPolytope oracle_piece_set(const BasicPieceModel& piece, std::size_t max_len,
                                  std::size_t state_cap = kDefaultOracleStateCap);

/// 64-bit linear congruential generator, x' = a x + c mod 2^64 with
/// a = 6364136223846793005 and c = 1442695040888963407 (Knuth's MMIX).
/// Draws use the high 32 bits.
class Lcg64 {
public:
    static constexpr std::uint64_t multiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t increment = 1442695040888963407ULL;

    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * multiplier + increment;
        return state_;
    }
    /// Uniform in [0, n) by rejection; n >= 1.
    std::uint32_t below(std::uint32_t n);

private:
    std::uint64_t state_;
};

/// sum_s weights[s] * word_rotation_vector(piece_s, words[s]).
/// Weights must be non-negative and sum to 1.
HomologyVector chain_average(const Chain& chain, const PieceTable& pieces, const std::vector<Rational>& weights,
                             const std::vector<PeriodicWord>& words);

/// Each sample draws a denominator D in [1, 64], hands its D units to the
/// chain's pieces uniformly at random, and pairs each piece with a random
/// periodic word (a random walk closed by a shortest return path).
/// Sample i depends only on (seed, i).
std::vector<HomologyVector> sample_chain_averages(const Chain& chain, const PieceTable& pieces, std::size_t samples,
                                                  std::uint64_t seed);

}  // namespace rotset
