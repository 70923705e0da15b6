#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partlab {

/**
 * A partition: finite non-increasing sequence of positive integer parts.
 * The default-constructed value is the empty partition.
 *
 * size() is the partition-theoretic size (sum of parts), length() the
 * number of parts.
 */
class Partition {
public:
    Partition() = default;

    /// Validating constructor: throws std::invalid_argument unless
    /// every part is >= 1 and the sequence is non-increasing.
    explicit Partition(std::vector<int> parts);

    /// Fast path for enumerators that produce sorted parts by construction.
    static Partition from_sorted_unchecked(std::vector<int> parts);

    /// Parse "6,6,3,2,2,1"; the empty string denotes the empty partition.
    /// Rejects unsorted input, naming the offending token.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Largest hook length of the Ferrers diagram: largest + length - 1.
    /// The empty partition has perimeter 0.
    int perimeter() const;

    /// (part value, multiplicity) pairs, values strictly decreasing.
    std::vector<std::pair<int, int>> multiplicities() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Rebuild a partition from (value, multiplicity) pairs in any order.
Partition from_multiplicities(const std::vector<std::pair<int, int>>& pairs);

/// length - 1 - floor(largest/2); defined for non-empty partitions only
/// (throws std::domain_error on the empty partition). May be negative.
int m2_index(const Partition& p);

/**
 * Boundary profile of the Ferrers diagram, read from the SW corner going
 * NE: digit 1 per right step, 0 per up step. Non-empty words start with 1
 * and end with 0; the empty word encodes the empty partition.
 *
 * A word has perimeter+1 digits and one 0 digit per part.
 */
class ProfileWord {
public:
    ProfileWord() = default;

    /// Validating factory: digits must all be 0/1 and satisfy the
    /// first-1/last-0 rule. Throws std::invalid_argument otherwise.
    static ProfileWord from_digits(std::vector<std::uint8_t> digits);

    /// Parse a 0/1 string such as "101001011100".
    static ProfileWord parse(std::string_view text);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    bool empty() const { return digits_.empty(); }
    int length() const { return static_cast<int>(digits_.size()); }
    int zero_count() const;

    std::string to_string() const;

    auto operator<=>(const ProfileWord&) const = default;

private:
    std::vector<std::uint8_t> digits_;
};

ProfileWord to_profile(const Partition& p);
Partition from_profile(const ProfileWord& w);

}  // namespace partlab
