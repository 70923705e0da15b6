#include "partlab/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace partlab {

namespace {

void require_modulus(int r) {
    if (r < 2) throw std::invalid_argument("modulus r must be >= 2, got " + std::to_string(r));
}

}  // namespace

Partition glaisher(const Partition& p, int r) {
    require_modulus(r);
    std::vector<std::pair<int, int>> image;
    for (auto [value, mult] : p.multiplicities()) {
        if (value % r == 0)
            throw std::invalid_argument("glaisher requires an r-regular partition; part " +
                                        std::to_string(value) + " is divisible by " + std::to_string(r));
        long long scale = 1;
        while (mult > 0) {
            int digit = mult % r;
            if (digit > 0) image.emplace_back(static_cast<int>(value * scale), digit);
            mult /= r;
            scale *= r;
        }
    }
    return from_multiplicities(image);
}

Partition glaisher_inv(const Partition& p, int r) {
    require_modulus(r);
    std::vector<std::pair<int, int>> image;
    for (auto [value, mult] : p.multiplicities()) {
        if (mult >= r)
            throw std::invalid_argument("glaisher_inv requires multiplicities below r; part " +
                                        std::to_string(value) + " occurs " + std::to_string(mult) +
                                        " times");
        int base = value;
        long long copies = mult;
        while (base % r == 0) {
            base /= r;
            copies *= r;
        }
        image.emplace_back(base, static_cast<int>(copies));
    }
    return from_multiplicities(image);
}

Partition refined_franklin(const Partition& p, int r) {
    require_modulus(r);
    std::vector<std::pair<int, int>> rest;
    int special_value = 0;
    int special_mult = 0;
    for (auto [value, mult] : p.multiplicities()) {
        if (value % r == 0) {
            if (special_value != 0)
                throw std::invalid_argument("expected exactly one part value divisible by " +
                                            std::to_string(r) + "; found both " +
                                            std::to_string(special_value) + " and " + std::to_string(value));
            special_value = value;
            special_mult = mult;
        } else {
            rest.emplace_back(value, mult);
        }
    }
    if (special_value == 0)
        throw std::invalid_argument("expected exactly one part value divisible by " + std::to_string(r) +
                                    "; found none");
    // p = mu u ((rj)^u) with mu r-regular; image is glaisher(mu) u (u^{rj}).
    Partition mu = from_multiplicities(rest);
    auto image = glaisher(mu, r).multiplicities();
    const int u = special_mult;
    bool merged = false;
    for (auto& [value, mult] : image) {
        if (value == u) {
            mult += special_value;
            merged = true;
            break;
        }
    }
    if (!merged) image.emplace_back(u, special_value);
    return from_multiplicities(image);
}

Partition refined_franklin_inv(const Partition& p, int r) {
    require_modulus(r);
    std::vector<std::pair<int, int>> rest;
    int u = 0;
    int m_u = 0;
    for (auto [value, mult] : p.multiplicities()) {
        if (mult >= r) {
            if (u != 0)
                throw std::invalid_argument("expected exactly one part value with multiplicity >= " +
                                            std::to_string(r) + "; found both " + std::to_string(u) +
                                            " and " + std::to_string(value));
            u = value;
            m_u = mult;
        } else {
            rest.emplace_back(value, mult);
        }
    }
    if (u == 0)
        throw std::invalid_argument("expected exactly one part value with multiplicity >= " +
                                    std::to_string(r) + "; found none");
    const int q = m_u / r;
    const int s = m_u % r;
    if (s > 0) rest.emplace_back(u, s);  // keep the remainder copies of u
    Partition xi = from_multiplicities(rest);
    auto image = glaisher_inv(xi, r).multiplicities();
    image.emplace_back(r * q, u);
    return from_multiplicities(image);
}

Partition fu_tang(const Partition& p) {
    for (auto [value, mult] : p.multiplicities()) {
        if (mult > 1)
            throw std::invalid_argument("fu_tang requires distinct parts; part " + std::to_string(value) +
                                        " occurs " + std::to_string(mult) + " times");
    }
    const auto original = to_profile(p).digits();
    if (original.empty()) return Partition{};
    std::vector<std::uint8_t> rewritten(original.size());
    rewritten.front() = 1;
    for (std::size_t i = 1; i < original.size(); ++i) {
        if (original[i] == 1) {
            rewritten[i] = original[i - 1] == 1 ? 0 : 1;
        } else {
            rewritten[i] = i + 1 < original.size() ? 1 : 0;
        }
    }
    return from_profile(ProfileWord::from_digits(std::move(rewritten)));
}

Partition fu_tang_inv(const Partition& p) {
    for (int part : p.parts()) {
        if (part % 2 == 0)
            throw std::invalid_argument("fu_tang_inv requires odd parts; found even part " +
                                        std::to_string(part));
    }
    const auto image = to_profile(p).digits();
    if (image.empty()) return Partition{};
    std::vector<std::uint8_t> original(image.size());
    original.front() = 1;
    original.back() = 0;
    for (std::size_t i = 1; i + 1 < image.size(); ++i) {
        if (original[i - 1] == 1) {
            original[i] = image[i] == 0 ? 1 : 0;
        } else {
            original[i] = image[i];  // 1 stays 1; internal 0 after 0 cannot occur
        }
    }
    return from_profile(ProfileWord::from_digits(std::move(original)));
}

}  // namespace partlab
