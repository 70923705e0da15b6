#include "partlab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace partlab {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(BigInt coeff, int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    std::vector<BigInt> c(exponent + 1);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < other.coeffs_.size()) c[i] += other.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < other.coeffs_.size()) c[i] -= other.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly{};
    std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> c(coeffs_);
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("polynomial exponent must be >= 0");
    IntPoly result = one();
    IntPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

IntPoly IntPoly::substitute_power(int e) const {
    if (e < 1) throw std::invalid_argument("substitution exponent must be >= 1");
    if (is_zero()) return IntPoly{};
    std::vector<BigInt> c(static_cast<std::size_t>(degree()) * e + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * e] = coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    if (is_zero()) return IntPoly{};
    std::vector<BigInt> c(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
    return IntPoly(std::move(c));
}

BigInt IntPoly::eval_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("exact division by the zero polynomial");
    if (is_zero()) return IntPoly{};
    if (degree() < divisor.degree())
        throw std::runtime_error("exact division failed: degree of dividend below divisor");

    std::vector<BigInt> rem(coeffs_);
    std::vector<BigInt> quot(degree() - divisor.degree() + 1);
    const BigInt& lead = divisor.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt top = rem[k + divisor.degree()];
        if (top % lead != 0)
            throw std::runtime_error("exact division failed: non-integer quotient coefficient");
        BigInt q = top / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (int i = 0; i <= divisor.degree(); ++i) rem[k + i] -= q * divisor.coeffs_[i];
    }
    for (const auto& c : rem) {
        if (c != 0) throw std::runtime_error("exact division failed: non-zero remainder");
    }
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        BigInt c = coeffs_[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        BigInt mag = abs(c);
        if (mag != 1 || i == 0) out << mag.str();
        if (i == 1) out << "x";
        if (i > 1) out << "x^" << i;
        first = false;
    }
    return out.str();
}

IntPoly q_binomial(int m, int j, int base_exponent) {
    if (base_exponent < 1) throw std::invalid_argument("base exponent must be >= 1");
    if (m < 0 || j < 0 || j > m) return IntPoly{};
    // q-Pascal: [m over j] = [m-1 over j-1] + q^j [m-1 over j]
    std::vector<IntPoly> row(static_cast<std::size_t>(j) + 1);
    row[0] = IntPoly::one();
    for (int mm = 1; mm <= m; ++mm) {
        for (int jj = std::min(j, mm); jj >= 1; --jj) {
            row[jj] = row[jj - 1] + row[jj].shifted(jj);
        }
    }
    return base_exponent == 1 ? row[j] : row[j].substitute_power(base_exponent);
}

IntPoly perimeter_q_row(int m) {
    if (m < 1) throw std::invalid_argument("perimeter must be >= 1");
    IntPoly sum;
    for (int j = 0; j <= m - 1; ++j) sum = sum + q_binomial(m - 1, j);
    return sum.shifted(m);
}

}  // namespace partlab
