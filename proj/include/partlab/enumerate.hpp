#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "partlab/constraint.hpp"
#include "partlab/partition.hpp"

namespace partlab {

/**
 * Iterable range over the partitions of n that satisfy a constraint, in
 * lexicographically decreasing part-sequence order: (5), (4,1), (3,2),
 * (3,1,1), (2,2,1), (2,1,1,1), (1,1,1,1,1). n = 0 yields the empty
 * partition when the constraint admits it.
 */
class SizeRange {
public:
    explicit SizeRange(long long n, ConstraintSpec spec = {});

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        bool operator==(std::default_sentinel_t) const { return done_; }

    private:
        friend class SizeRange;
        iterator(long long n, const ConstraintSpec* spec);

        bool next_raw();
        void skip_to_match();

        std::vector<int> parts_;
        Partition current_;
        const ConstraintSpec* spec_;
        long long n_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(n_, &spec_); }
    std::default_sentinel_t end() const { return {}; }

private:
    long long n_;
    ConstraintSpec spec_;
};

/**
 * Iterable range over the perimeter-M partitions that satisfy a
 * constraint. Iterates all 2^(M-1) profile words of length M+1 (first
 * digit 1, last digit 0) in increasing binary order and filters.
 */
class PerimeterRange {
public:
    explicit PerimeterRange(int m, ConstraintSpec spec = {});

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        bool operator==(std::default_sentinel_t) const { return word_ >= limit_; }

    private:
        friend class PerimeterRange;
        iterator(int m, std::uint64_t word, const ConstraintSpec* spec);

        void decode();
        void skip_to_match();

        Partition current_;
        const ConstraintSpec* spec_;
        std::uint64_t word_;
        std::uint64_t limit_;
        int m_;
    };

    iterator begin() const { return iterator(m_, 0, &spec_); }
    std::default_sentinel_t end() const { return {}; }

private:
    int m_;
    ConstraintSpec spec_;
};

/// Decode the k-th profile word of perimeter m (middle bits of the word
/// read as an MSB-first binary number) into ascending parts. The shared
/// primitive behind PerimeterRange and the counting pass.
void decode_perimeter_word(int m, std::uint64_t k, std::vector<int>& ascending_parts);

/// Materialized enumerations, canonical order. Intended for the scales
/// the oracles use (p(n) for n <= ~40, perimeters <= ~20).
std::vector<Partition> enumerate_by_size(long long n, const ConstraintSpec& spec = {});
std::vector<Partition> enumerate_by_perimeter(int m, const ConstraintSpec& spec = {});

}  // namespace partlab
