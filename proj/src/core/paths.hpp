#pragma once

#include "exact_matrix.hpp"
#include "word.hpp"

#include <optional>
#include <vector>

namespace fmz {

/// Lattice-path view: cumulative heights h_0..h_L with h_0 = 0, where an up
/// step raises the height by 1, a flat step keeps it and a down step lowers
/// it by 1. For any word, h_L = u - d.
struct PathProfile {
    std::vector<int> heights;
};

PathProfile to_path(const ConfigWord& w);

/// Equivalence class of a word under the cyclic height-preserving moves
/// uf <-> fu and df <-> fd. Members sorted by code; the representative is
/// the minimum-code member.
struct Orbit {
    ConfigWord representative;
    std::vector<ConfigWord> members;
    SectorLabel sector;

    int64_t size() const { return static_cast<int64_t>(members.size()); }
    int flats() const { return sector.f(); }
};

Orbit orbit_of(const ConfigWord& w);

/// All orbits of the full 3^L space, sorted by representative code.
std::vector<Orbit> all_orbits(int L);

/// The flat-free words over {u, d} (2^L of them, singleton orbits since no
/// move applies) plus the all-flat word: 2^L + 1 product ground states.
std::vector<ConfigWord> product_ground_states(int L);

/// Orbit classes with flat count f in [1, L-1]; the equal-weight
/// superposition over each is an entangled ground state.
std::vector<Orbit> entangled_orbit_classes(int L);

/// Equal-weight superposition over an orbit, as a sparse rational vector on
/// the 3^L code basis (unnormalized: amplitude 1 per member, so the squared
/// norm is the orbit size).
std::vector<Rational> orbit_superposition(const Orbit& o);

/// Binary necklaces of length m: (1/m) sum_{d | m} phi(d) 2^(m/d).
int64_t necklace_count(int m);

struct GsdReport {
    int L = 0;
    int64_t product_count = 0;                // 2^L + 1
    int64_t entangled_count = 0;              // orbit classes with 1 <= f <= L-1
    int64_t constructed_total = 0;            // sum of the two
    int64_t claimed_total = 0;                // 2^(L+1) - 1
    std::vector<int64_t> orbits_per_flat_count;  // [f-1] for f = 1..L-1
    std::vector<int64_t> claimed_per_flat_count; // 2^(L-f)
    std::optional<int64_t> exact_kernel_dim;  // dim - rank(H), when computed
    bool construction_matches_kernel = false;
    bool matches_claimed = false;
};

/// Counts ground states by explicit construction. With `with_kernel`, also
/// computes the exact kernel dimension of H(L, 0) by rational elimination
/// and cross-checks; throws "GSD inconsistency" if construction and kernel
/// disagree.
GsdReport gsd(int L, bool with_kernel);

/// Exact check that every constructed ground state is annihilated by H(L, 0)
/// and that together they span its kernel (rational rank).
bool ground_states_span_kernel(int L);

}  // namespace fmz
