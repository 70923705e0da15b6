#pragma once

#include "partlab/partition.hpp"

namespace partlab {

/**
 * Glaisher's bijection between r-regular partitions (no part divisible
 * by r) and partitions with every multiplicity below r. A part value a
 * with multiplicity m = sum m_i r^i (base-r digits) maps to parts a*r^i
 * with multiplicity m_i.
 *
 * Throws std::invalid_argument when some part of p is divisible by r.
 */
Partition glaisher(const Partition& p, int r);

/// Inverse of glaisher: each part a*r^i (r-adic valuation i) becomes r^i
/// copies of a. Throws when some multiplicity of p is >= r.
Partition glaisher_inv(const Partition& p, int r);

/**
 * Refined Franklin map on partitions with exactly one part value
 * divisible by r, say rj repeated u times: strips those u copies, sends
 * the r-regular remainder through glaisher, and appends rj copies of u.
 * The image has exactly one part value with multiplicity >= r, and that
 * value is u.
 *
 * Throws unless exactly one part value of p is divisible by r.
 */
Partition refined_franklin(const Partition& p, int r);

/**
 * Inverse of refined_franklin. With u the unique part value of
 * multiplicity m_u >= r and m_u = qr + s (0 <= s < r, q >= 1): removes
 * qr copies of u, inverts glaisher on the rest, and appends u copies of
 * the part rq.
 *
 * Throws unless exactly one part value of p has multiplicity >= r.
 */
Partition refined_franklin_inv(const Partition& p, int r);

/**
 * Fu-Tang profile rewrite carrying distinct-part partitions to odd-part
 * partitions of the same perimeter. Position-by-position on the profile
 * word: the first digit stays 1, a 1 after an original 1 becomes 0, a 1
 * after an original 0 stays 1, an internal 0 becomes 1, the final 0
 * stays 0.
 *
 * Throws when p has a repeated part.
 */
Partition fu_tang(const Partition& p);

/// Inverse rewrite, reconstructing the original word left to right.
/// Throws when p has an even part.
Partition fu_tang_inv(const Partition& p);

}  // namespace partlab
