#include "partlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition part at position " + std::to_string(i + 1) +
                                        " is " + std::to_string(parts_[i]) + "; parts must be >= 1");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing: part " +
                                        std::to_string(parts_[i]) + " follows smaller part " +
                                        std::to_string(parts_[i - 1]));
        }
    }
}

Partition Partition::from_sorted_unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            int value = std::stoi(std::string(token), &used);
            if (used != token.size()) throw std::invalid_argument("trailing characters");
            parts.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition token '" + std::string(token) + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::perimeter() const {
    if (parts_.empty()) return 0;
    return parts_.front() + length() - 1;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> result;
    for (int part : parts_) {
        if (!result.empty() && result.back().first == part) {
            ++result.back().second;
        } else {
            result.emplace_back(part, 1);
        }
    }
    return result;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition from_multiplicities(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> parts;
    for (const auto& [value, mult] : pairs) {
        for (int i = 0; i < mult; ++i) parts.push_back(value);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int m2_index(const Partition& p) {
    if (p.empty()) throw std::domain_error("m2_index is undefined for the empty partition");
    return p.length() - 1 - p.largest() / 2;
}

ProfileWord ProfileWord::from_digits(std::vector<std::uint8_t> digits) {
    for (std::uint8_t d : digits) {
        if (d > 1) throw std::invalid_argument("profile word digits must be 0 or 1");
    }
    if (!digits.empty()) {
        if (digits.front() != 1)
            throw std::invalid_argument("malformed profile word: leading digit must be 1");
        if (digits.back() != 0)
            throw std::invalid_argument("malformed profile word: trailing digit must be 0");
    }
    ProfileWord w;
    w.digits_ = std::move(digits);
    return w;
}

ProfileWord ProfileWord::parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("profile word contains invalid character '") + c + "'");
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return from_digits(std::move(digits));
}

int ProfileWord::zero_count() const {
    return static_cast<int>(std::count(digits_.begin(), digits_.end(), std::uint8_t{0}));
}

std::string ProfileWord::to_string() const {
    std::string s;
    s.reserve(digits_.size());
    for (std::uint8_t d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

ProfileWord to_profile(const Partition& p) {
    // Walk the boundary bottom row first: the lowest row contributes its
    // full width in right steps, every higher row the width difference.
    std::vector<std::uint8_t> digits;
    const auto& parts = p.parts();
    if (parts.empty()) return ProfileWord{};
    digits.reserve(static_cast<std::size_t>(p.perimeter()) + 1);
    int previous = 0;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        for (int k = previous; k < *it; ++k) digits.push_back(1);
        digits.push_back(0);
        previous = *it;
    }
    return ProfileWord::from_digits(std::move(digits));
}

Partition from_profile(const ProfileWord& w) {
    std::vector<int> parts;
    int width = 0;
    for (std::uint8_t d : w.digits()) {
        if (d == 1) {
            ++width;
        } else {
            parts.push_back(width);
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition::from_sorted_unchecked(std::move(parts));
}

}  // namespace partlab
