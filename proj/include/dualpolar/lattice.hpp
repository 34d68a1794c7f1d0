#pragma once

// The graded lattice L of isotropic subspaces: levels Omega_0 .. Omega_d of
// isotropic subspaces by dimension, plus the top element standing for V.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "dualpolar/forms.hpp"
#include "dualpolar/rational.hpp"
#include "dualpolar/subspace.hpp"

namespace dualpolar::lattice {

/// Position of an element: level (= rank) and index within the sorted level.
/// The top element is {d + 1, 0}.
struct NodeRef {
    int level = 0;
    int index = 0;

    friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

/// Set of coatoms (indices into Omega_d) as packed 64-bit words.
using Bitset = std::vector<std::uint64_t>;

inline bool test_bit(const Bitset& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }
int popcount(const Bitset& b);
std::vector<int> bit_indices(const Bitset& b);

class PolarLattice {
public:
    const forms::FormedSpace& space() const noexcept { return space_; }
    const gf::Field& field() const noexcept { return space_.field(); }
    int d() const noexcept { return space_.d(); }

    /// Levels 0 .. d+1; level d+1 holds only the top element.
    const std::vector<Subspace>& level(int l) const { return levels_.at(l); }
    int size(int l) const { return static_cast<int>(levels_.at(l).size()); }
    int total_size() const;
    int vertex_count() const { return size(d()); }

    const Subspace& element(NodeRef r) const { return levels_.at(r.level).at(r.index); }
    std::optional<NodeRef> locate(const Subspace& s) const;
    NodeRef top() const noexcept { return {d() + 1, 0}; }
    NodeRef bottom() const noexcept { return {0, 0}; }

    /// Indices in level + 1 of the elements covering r.
    const std::vector<int>& up(NodeRef r) const { return up_.at(r.level).at(r.index); }
    /// Indices in level - 1 of the elements covered by r.
    const std::vector<int>& down(NodeRef r) const { return down_.at(r.level).at(r.index); }
    /// Coatoms x with r <= x. Empty for the top element.
    const Bitset& above(NodeRef r) const { return above_.at(r.level).at(r.index); }

private:
    friend PolarLattice link(forms::FormedSpace space, std::vector<std::vector<Subspace>> levels,
                             std::vector<std::vector<std::vector<int>>> down);

    forms::FormedSpace space_;
    std::vector<std::vector<Subspace>> levels_;
    std::vector<std::vector<std::vector<int>>> up_;
    std::vector<std::vector<std::vector<int>>> down_;
    std::vector<std::vector<Bitset>> above_;
    std::unordered_map<std::string, NodeRef> index_;
};

/// Builds the lattice by upward extension. Errors: WittIndexMismatch when the
/// levels stop before d or continue past it; CountMismatch when a level size
/// disagrees with the closed-form count of isotropic subspaces.
PolarLattice enumerate(const forms::FormedSpace& space);

/// Largest dimension of an isotropic subspace, found by the same extension
/// process; WittIndexMismatch unless it equals d.
int witt_index_check(const forms::FormedSpace& space);

Subspace meet(const PolarLattice& lat, const Subspace& u, const Subspace& w);
/// Span if isotropic, the top element otherwise.
Subspace join(const PolarLattice& lat, const Subspace& u, const Subspace& w);
/// d + 1 for the top element, the dimension otherwise.
int rank(const PolarLattice& lat, const Subspace& s);
bool leq(const PolarLattice& lat, const Subspace& u, const Subspace& w);
/// w <= u and rk(u) = rk(w) + 1.
bool covers(const PolarLattice& lat, const Subspace& u, const Subspace& w);

/// a_0 .. a_{d+1}: coatoms above an element of each level, checked constant
/// across the level and against the product formula and its recursion.
/// Errors: CountMismatch.
std::vector<BigInt> a_counts(const PolarLattice& lat);

struct BcnCount {
    BigInt enumerated;
    BigInt closed;
};

/// Isotropic U of dimension k+l+m with dim(U^W) = m and dim(U^W-perp) = l+m,
/// counted and compared with the closed form. Errors: CountMismatch,
/// BadParameters (W not isotropic, or k+l+m > d).
BcnCount bcn_count(const PolarLattice& lat, const Subspace& w, int k, int l, int m);

struct BcnEntry {
    int k = 0;
    int l = 0;
    int m = 0;
    BigInt enumerated;
    BigInt closed;
};

/// All (k, l, m) with k+l+m <= d for one W, from a single pass over the
/// lattice. Mismatches are reported, not thrown.
std::vector<BcnEntry> bcn_profile(const PolarLattice& lat, const Subspace& w);

/// Atomicity, canonical bases, meet/join algebra, the rank identity for
/// joins below the top, rank 2 for joins of distinct atoms, and the cover
/// property; all pairs when |L| <= limit, otherwise `samples` seeded pairs.
/// Errors: IdentityViolation.
nlohmann::json lattice_laws_check(const PolarLattice& lat, int limit, int samples, std::uint64_t seed);

nlohmann::json to_json(const PolarLattice& lat);
/// Rebuilds a lattice from its JSON form, re-validating every basis.
/// Errors: BadInput.
PolarLattice from_json(const nlohmann::json& doc);

nlohmann::json subspace_to_json(const Subspace& s);

} // namespace dualpolar::lattice
