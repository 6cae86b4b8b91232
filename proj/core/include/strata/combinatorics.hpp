#pragma once

#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Zero orders m_1..m_n of a stratum, sum 2g-2. User order is kept.
class Signature {
public:
    Signature() = default;
    // EMPTY_SIGNATURE, NEGATIVE_ENTRY or ODD_TOTAL on bad input.
    explicit Signature(std::vector<int> entries);
    // "2,2" -> {2,2}; PARSE_ERROR on junk.
    static Signature parse(const std::string& text);

    const std::vector<int>& entries() const { return m_; }
    int n() const { return static_cast<int>(m_.size()); }
    int genus() const { return (total() + 2) / 2; }
    int total() const;
    int operator[](int i) const { return m_[i]; }

    // Sorted descending.
    Signature canonical() const;
    bool all_even() const;
    // Comma-joined entries in the stored order.
    std::string str() const;

    friend bool operator==(const Signature& a, const Signature& b) { return a.m_ == b.m_; }
    friend bool operator<(const Signature& a, const Signature& b) { return a.m_ < b.m_; }

private:
    std::vector<int> m_;
};

struct BackbonePart {
    int g = 0;
    std::vector<int> mu; // sorted descending
    int p = 0;           // 2g - 1 - |mu|

    // The stratum mu ∪ {p-1} of the top vertex.
    Signature stratum() const;
    friend bool operator==(const BackbonePart&, const BackbonePart&) = default;
    friend auto operator<=>(const BackbonePart&, const BackbonePart&) = default;
};

// An ordered k-tuple of top vertices. Zeros are labeled, so one multiset tuple
// stands for `multiplicity` labeled assignments of the non-distinguished zeros.
struct BackboneDecomposition {
    int k = 0;
    std::vector<BackbonePart> parts;
    Integer multiplicity = 1;
};

// Indices i, j are 0-based. Only tuples with k <= min(m_i+1, m_j+1) are
// produced; all others have vanishing Hurwitz factor. TOO_FEW_ZEROS if n < 2.
std::vector<BackboneDecomposition> enumerate_backbones(const Signature& mu, int i, int j);

// Genus-0 level tree. Vertex 0 is the root v_2 carrying legs 1 and 2;
// vertex v >= 1 carries leg v+2.
struct RootedTree {
    std::vector<int> parent;      // -1 for the root
    std::vector<int> pole_vertex; // vertex of each pole leg
    std::vector<int> twist;       // twist of the edge to the parent, 0 at the root
    std::vector<int> level;       // leaves at 0, parent below all of its children

    int vertices() const { return static_cast<int>(parent.size()); }
    std::vector<int> children(int v) const;
    // Pole orders at v followed by the twists of the edges below v.
    std::vector<int> lower_profile(int v, const std::vector<int>& mu_inf) const;
};

// INCONSISTENT_PROFILE unless sum m_i - sum (p_j + 1) = -2.
std::vector<RootedTree> enumerate_rooted_trees(const std::vector<int>& mu0,
                                               const std::vector<int>& mu_inf);

enum class Parity { even = 0, odd = 1 };

// All maps {1..k} -> {0,1} with the requested total parity.
std::vector<std::vector<int>> spin_assignments(int k, Parity parity);

// Class of ordered decompositions under permutation of the blocks.
struct Configuration {
    BackboneDecomposition representative; // parts sorted
    int k = 0;
    Integer automorphisms = 1;            // block permutations fixing the tuple
    Integer ordered_count = 0;            // labeled ordered tuples in the class
};

std::vector<Configuration> configurations(const Signature& mu, int i, int j);

} // namespace strata
