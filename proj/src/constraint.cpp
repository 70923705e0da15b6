#include "partlab/constraint.hpp"

#include <sstream>
#include <stdexcept>

namespace partlab {

namespace {

void require_modulus(int r) {
    if (r < 2) throw std::invalid_argument("modulus r must be >= 2, got " + std::to_string(r));
}

}  // namespace

ConstraintSpec& ConstraintSpec::odd() {
    odd_ = true;
    return *this;
}

ConstraintSpec& ConstraintSpec::distinct() {
    distinct_ = true;
    return *this;
}

ConstraintSpec& ConstraintSpec::regular(int r) {
    require_modulus(r);
    regular_ = r;
    return *this;
}

ConstraintSpec& ConstraintSpec::multiplicity_below(int r) {
    require_modulus(r);
    mult_below_ = r;
    return *this;
}

ConstraintSpec& ConstraintSpec::exactly_divisible(int r, int j, std::optional<int> u) {
    require_modulus(r);
    if (j < 0) throw std::invalid_argument("class count j must be >= 0");
    if (u && *u < 1) throw std::invalid_argument("repetition count u must be >= 1");
    divisible_ = ClassCount{r, j, u};
    return *this;
}

ConstraintSpec& ConstraintSpec::exactly_repeated(int r, int j, std::optional<int> u) {
    require_modulus(r);
    if (j < 0) throw std::invalid_argument("class count j must be >= 0");
    if (u && *u < 1) throw std::invalid_argument("repeated part value u must be >= 1");
    repeated_ = ClassCount{r, j, u};
    return *this;
}

ConstraintSpec& ConstraintSpec::congruent_to(int d, int r) {
    require_modulus(r);
    if (d < 1 || d >= r)
        throw std::invalid_argument("residue d must satisfy 1 <= d < r, got d=" + std::to_string(d) +
                                    " r=" + std::to_string(r));
    congruent_ = std::make_pair(d, r);
    return *this;
}

ConstraintSpec& ConstraintSpec::perimeter_equals(int m) {
    if (m < 1) throw std::invalid_argument("perimeter must be >= 1");
    perimeter_ = m;
    return *this;
}

ConstraintSpec& ConstraintSpec::size_equals(long long n) {
    if (n < 0) throw std::invalid_argument("size must be >= 0");
    size_ = n;
    return *this;
}

ConstraintSpec& ConstraintSpec::no_ones() {
    no_ones_ = true;
    return *this;
}

bool ConstraintSpec::matches(const Partition& p) const {
    const auto& parts = p.parts();
    if (odd_) {
        for (int part : parts)
            if (part % 2 == 0) return false;
    }
    if (regular_) {
        for (int part : parts)
            if (part % *regular_ == 0) return false;
    }
    if (congruent_) {
        for (int part : parts)
            if (part % congruent_->second != congruent_->first) return false;
    }
    if (no_ones_) {
        for (int part : parts)
            if (part == 1) return false;
    }
    if (perimeter_ && p.perimeter() != *perimeter_) return false;
    if (size_ && p.size() != *size_) return false;

    if (distinct_ || mult_below_ || divisible_ || repeated_) {
        const auto mults = p.multiplicities();
        if (distinct_) {
            for (const auto& [value, mult] : mults)
                if (mult > 1) return false;
        }
        if (mult_below_) {
            for (const auto& [value, mult] : mults)
                if (mult >= *mult_below_) return false;
        }
        if (divisible_) {
            int count = 0;
            for (const auto& [value, mult] : mults) {
                if (value % divisible_->r == 0) {
                    ++count;
                    if (divisible_->u && mult != *divisible_->u) return false;
                }
            }
            if (count != divisible_->j) return false;
        }
        if (repeated_) {
            int count = 0;
            for (const auto& [value, mult] : mults) {
                if (mult >= repeated_->r) {
                    ++count;
                    if (repeated_->u && value != *repeated_->u) return false;
                }
            }
            if (count != repeated_->j) return false;
        }
    }
    return true;
}

std::string ConstraintSpec::describe() const {
    std::ostringstream out;
    const char* sep = "";
    auto add = [&](const std::string& s) {
        out << sep << s;
        sep = ",";
    };
    if (odd_) add("odd");
    if (distinct_) add("distinct");
    if (regular_) add("regular(" + std::to_string(*regular_) + ")");
    if (mult_below_) add("mult<" + std::to_string(*mult_below_));
    if (divisible_) {
        std::string s = "divisible(r=" + std::to_string(divisible_->r) + ",j=" + std::to_string(divisible_->j);
        if (divisible_->u) s += ",u=" + std::to_string(*divisible_->u);
        add(s + ")");
    }
    if (repeated_) {
        std::string s = "repeated(r=" + std::to_string(repeated_->r) + ",j=" + std::to_string(repeated_->j);
        if (repeated_->u) s += ",u=" + std::to_string(*repeated_->u);
        add(s + ")");
    }
    if (congruent_)
        add("mod(" + std::to_string(congruent_->first) + "," + std::to_string(congruent_->second) + ")");
    if (perimeter_) add("perimeter=" + std::to_string(*perimeter_));
    if (size_) add("size=" + std::to_string(*size_));
    if (no_ones_) add("no-ones");
    auto text = out.str();
    return text.empty() ? "all" : text;
}

}  // namespace partlab
