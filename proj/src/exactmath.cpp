#include "combilab/exactmath.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "combilab/errors.hpp"

namespace combilab {

ExactInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    ExactInt result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: result is C(n, i+1) after this step
    }
    return result;
}

ExactInt pow2(long long e) {
    if (e < 0) {
        throw DomainError("pow2: negative exponent " + std::to_string(e));
    }
    ExactInt result = 1;
    result <<= static_cast<unsigned>(e);
    return result;
}

IntPoly::IntPoly(ExactInt constant) {
    if (constant != 0) {
        coeffs_.push_back(std::move(constant));
    }
}

IntPoly::IntPoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { normalize(); }

IntPoly IntPoly::monomial(ExactInt c, std::size_t power) {
    if (c == 0) {
        return {};
    }
    std::vector<ExactInt> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
    *this = *this * other;
    return *this;
}

IntPoly& IntPoly::operator*=(const ExactInt& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    // Leading product is nonzero over the integers, so no trailing zeros.
    IntPoly result;
    result.coeffs_ = std::move(out);
    return result;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

std::string IntPoly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const ExactInt& c = coeffs_[idx];
        if (c == 0) {
            continue;
        }
        const ExactInt mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (idx == 0 || mag != 1) {
            os << mag;
        }
        if (idx >= 1) {
            os << 'x';
        }
        if (idx >= 2) {
            os << '^' << idx;
        }
    }
    return os.str();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

ExactInt poly_coeff(const IntPoly& p, std::size_t i) { return p.coeff(i); }

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

}  // namespace combilab
