// Resolvable block designs: point sets partitioned into parallel classes of
// blocks. These parameterize the approximate-MUB constructions; the key
// quality number is mu, the largest intersection between blocks of distinct
// classes.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mubkit/algebra.hpp"

namespace mubkit {

using Block = std::vector<int>;                 // sorted point indices
using ParallelClass = std::vector<Block>;       // blocks partitioning the points

struct ResolvableDesign {
    int point_count = 0;
    std::vector<ParallelClass> classes;
    std::string provenance;

    std::size_t class_count() const { return classes.size(); }
    // Constant block size, or -1 when sizes vary.
    int block_size() const;
};

struct DesignValidation {
    bool ok = true;
    std::vector<std::string> problems;
};

// Partition audit: every class must cover each point exactly once, with
// in-range, duplicate-free blocks. Malformed designs are reported, not thrown.
DesignValidation validate_design(const ResolvableDesign& d);

struct IntersectionProfile {
    std::map<int, long long> histogram;  // |block ^ block'| -> count, cross-class pairs
    int mu = 0;                          // largest intersection observed
};

IntersectionProfile intersection_profile(const ResolvableDesign& d);

// Affine plane of order q as a resolvable (q^2, q, 1)-BIBD: q+1 parallel
// classes of q blocks; any two blocks from distinct classes share one point.
ResolvableDesign affine_resolvable_bibd(int q);

// Resolvable transversal design on d = k*s points (k <= s): s parallel
// classes (one per slope of GF(s)), each with s blocks of size k, mu = 1.
ResolvableDesign resolvable_transversal_design(int k, int s);

// Point-removal surgery on the affine plane: d = q^2-1 points, q+1 classes
// of q-1 blocks of size q+1. For prime q = 3 (mod 4), q >= 7, the reinsertion
// matching is chosen so no two cross-class blocks share more than two points.
ResolvableDesign q2_minus_1_design(int q);

// Kirkman triple system on 15 points: 7 parallel classes of 5 triples,
// every point pair covered exactly once.
ResolvableDesign kirkman_kts15();

}  // namespace mubkit
