#include "partlab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace partlab {

SizeRange::SizeRange(long long n, ConstraintSpec spec) : n_(n), spec_(std::move(spec)) {
    if (n < 0) throw std::invalid_argument("partition size must be >= 0");
}

SizeRange::iterator::iterator(long long n, const ConstraintSpec* spec) : spec_(spec), n_(n) {
    if (n_ > 0) parts_.assign(1, static_cast<int>(n_));
    current_ = Partition::from_sorted_unchecked(parts_);
    if (!spec_->matches(current_)) skip_to_match();
}

// Successor in lexicographically decreasing order: decrement the
// rightmost part that exceeds 1 and refill the tail greedily.
bool SizeRange::iterator::next_raw() {
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1) --i;
    if (i == 0) return false;  // all ones (or empty): last partition
    long long tail = static_cast<long long>(parts_.size() - i) + parts_[i - 1];
    int cap = parts_[i - 1] - 1;
    parts_.resize(i - 1);
    while (tail > 0) {
        int next = static_cast<int>(std::min<long long>(cap, tail));
        parts_.push_back(next);
        tail -= next;
    }
    current_ = Partition::from_sorted_unchecked(parts_);
    return true;
}

void SizeRange::iterator::skip_to_match() {
    while (next_raw()) {
        if (spec_->matches(current_)) return;
    }
    done_ = true;
}

SizeRange::iterator& SizeRange::iterator::operator++() {
    skip_to_match();
    return *this;
}

PerimeterRange::PerimeterRange(int m, ConstraintSpec spec) : m_(m), spec_(std::move(spec)) {
    if (m < 1) throw std::invalid_argument("perimeter must be >= 1");
    if (m > 62) throw std::invalid_argument("perimeter enumeration supports m <= 62");
}

void decode_perimeter_word(int m, std::uint64_t k, std::vector<int>& ascending_parts) {
    ascending_parts.clear();
    int width = 1;  // leading digit is 1
    for (int i = m - 2; i >= 0; --i) {
        if ((k >> i) & 1) {
            ++width;
        } else {
            ascending_parts.push_back(width);
        }
    }
    ascending_parts.push_back(width);  // trailing digit is 0
}

PerimeterRange::iterator::iterator(int m, std::uint64_t word, const ConstraintSpec* spec)
    : spec_(spec), word_(word), limit_(std::uint64_t{1} << (m - 1)), m_(m) {
    if (word_ < limit_) {
        decode();
        if (!spec_->matches(current_)) skip_to_match();
    }
}

void PerimeterRange::iterator::decode() {
    std::vector<int> parts;
    decode_perimeter_word(m_, word_, parts);
    std::reverse(parts.begin(), parts.end());
    current_ = Partition::from_sorted_unchecked(std::move(parts));
}

void PerimeterRange::iterator::skip_to_match() {
    while (++word_ < limit_) {
        decode();
        if (spec_->matches(current_)) return;
    }
}

PerimeterRange::iterator& PerimeterRange::iterator::operator++() {
    skip_to_match();
    return *this;
}

std::vector<Partition> enumerate_by_size(long long n, const ConstraintSpec& spec) {
    std::vector<Partition> result;
    for (const Partition& p : SizeRange(n, spec)) result.push_back(p);
    return result;
}

std::vector<Partition> enumerate_by_perimeter(int m, const ConstraintSpec& spec) {
    std::vector<Partition> result;
    for (const Partition& p : PerimeterRange(m, spec)) result.push_back(p);
    return result;
}

}  // namespace partlab
