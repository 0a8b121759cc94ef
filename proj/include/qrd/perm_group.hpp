#ifndef QRD_PERM_GROUP_HPP
#define QRD_PERM_GROUP_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrd/code.hpp"

namespace qrd {

/// A permutation of {0..n-1} as its image list.
using Permutation = std::vector<std::uint8_t>;

Permutation identity_permutation(unsigned degree);
/// a after b: (a*b)[i] = a[b[i]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// A finite permutation group given by generators together with its full
/// element list (closure under composition, computed breadth first and
/// stored sorted for determinism).
struct PermutationGroup {
    unsigned degree = 0;
    std::string name;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    std::size_t order() const { return elements.size(); }

    static PermutationGroup trivial(unsigned degree);
    static PermutationGroup from_generators(unsigned degree, std::vector<Permutation> generators,
                                            std::string name = {});
};

/// PSL2(p) acting on the projective line labeled inf,0,...,p-1 (the
/// extended QR coordinate order: index 0 = inf, index 1+j = residue j).
/// Generated by y -> y+1 and y -> -1/y. The closure order is verified
/// against p(p^2-1)/2.
PermutationGroup psl2(unsigned p);

/// PGL2(p): psl2 generators plus y -> g*y for the least primitive root g
/// mod p; order verified against p(p^2-1).
PermutationGroup pgl2(unsigned p);

/// Orbit partition of the k-subsets of {0..degree-1}. Representatives are
/// the lexicographically least subsets (as sorted index tuples) of their
/// orbits, listed in first-encountered (lex) order.
struct SubsetOrbitPartition {
    unsigned degree = 0;
    unsigned k = 0;
    std::vector<std::uint32_t> representatives;
    std::vector<std::int64_t> orbit_sizes;
    std::unordered_map<std::uint32_t, std::int32_t> membership;  // subset mask -> orbit index

    std::size_t orbit_count() const { return representatives.size(); }
    std::int32_t orbit_of(std::uint32_t mask) const;
};

/// Guarded by C(degree,k) <= 10^6.
SubsetOrbitPartition orbits_on_k_subsets(const PermutationGroup& group, unsigned k);

/// Single orbit on k-subsets / on ordered tuples of t distinct points.
bool is_t_homogeneous(const PermutationGroup& group, unsigned t);
bool is_t_transitive(const PermutationGroup& group, unsigned t);

/// True when applying sigma to every shell's support multiset reproduces
/// that multiset, for every weight. If all generators of a group pass, the
/// whole group preserves the shells (multiset-preserving permutations form
/// a group).
bool preserves_shell_supports(const CodewordTable& table, const Permutation& sigma);

/// The symmetry group used for orbit-based design arguments: psl2(p) when
/// all its generators pass the shell-support certification, otherwise the
/// subgroup of psl2(p) stabilizing the code (row membership test), and the
/// trivial group as a last resort. Always safe: every returned group
/// provably preserves the shell block multisets.
PermutationGroup admissible_symmetry_group(const LinearCode& code, const CodewordTable& table);

/// Burnside orbit count: average number of fixed k-subsets over all group
/// elements. Used as an independent cross-check of orbits_on_k_subsets.
std::int64_t burnside_orbit_count(const PermutationGroup& group, unsigned k);

}  // namespace qrd

#endif
