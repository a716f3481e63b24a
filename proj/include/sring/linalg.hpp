#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sring/error.hpp"

namespace sring {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

/// Exact rational with int64 numerator and positive denominator. Every
/// operation throws ArithmeticOverflow rather than wrapping; integer-valued
/// fractions (the common case for ±1 boundary matrices) skip gcd work.
class Fraction {
public:
    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
    Fraction(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.den_ == 1 && b.den_ == 1) return Fraction(checked_add(a.num_, b.num_));
        return Fraction(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        if (a.den_ == 1 && b.den_ == 1) return Fraction(checked_sub(a.num_, b.num_));
        return Fraction(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        if (a.den_ == 1 && b.den_ == 1) return Fraction(checked_mul(a.num_, b.num_));
        return Fraction(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        if (b.den_ == 1 && (b.num_ == 1 || b.num_ == -1) && a.den_ == 1)
            return Fraction(checked_mul(a.num_, b.num_));
        return Fraction(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    friend bool operator==(const Fraction& a, const Fraction& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
        os << f.num_;
        if (f.den_ != 1) os << '/' << f.den_;
        return os;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = checked_sub(0, num_);
            den_ = checked_sub(0, den_);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

template <class Scalar>
inline bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}
template <>
inline bool is_zero<Fraction>(const Fraction& x) {
    return x.is_zero();
}

/// Sparse vector: (key, value) pairs, keys strictly increasing, no zeros.
template <class Key, class Scalar>
using SparseVec = std::vector<std::pair<Key, Scalar>>;

/// v <- v - c * w.
template <class Key, class Scalar>
void sparse_axpy(SparseVec<Key, Scalar>& v, const Scalar& c, const SparseVec<Key, Scalar>& w,
                 SparseVec<Key, Scalar>& scratch) {
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            scratch.push_back(std::move(v[i++]));
        } else if (i == v.size() || w[j].first < v[i].first) {
            scratch.emplace_back(w[j].first, Scalar(0) - c * w[j].second);
            ++j;
        } else {
            Scalar s = v[i].second - c * w[j].second;
            if (!is_zero(s)) scratch.emplace_back(v[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    v.swap(scratch);
}

/// Incrementally built basis in echelon form keyed by each vector's largest
/// key ("low"). Used for image spans, kernel extraction and class
/// independence tests.
template <class Key, class Scalar>
class EchelonBasis {
public:
    using Vec = SparseVec<Key, Scalar>;

    /// Reduces v modulo the span; v becomes zero iff it lies in the span.
    void reduce(Vec& v) const {
        while (!v.empty()) {
            auto it = pivot_of_.find(v.back().first);
            if (it == pivot_of_.end()) return;
            const Vec& p = basis_[it->second];
            const Scalar c = v.back().second / p.back().second;
            sparse_axpy(v, c, p, scratch_);
        }
    }

    /// Adds v if independent; returns whether it was added.
    bool insert(Vec v) {
        reduce(v);
        if (v.empty()) return false;
        pivot_of_.emplace(v.back().first, basis_.size());
        basis_.push_back(std::move(v));
        return true;
    }

    bool contains(Vec v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<Vec>& vectors() const noexcept { return basis_; }

private:
    std::vector<Vec> basis_;
    std::unordered_map<Key, std::size_t> pivot_of_;
    mutable Vec scratch_;
};

/// Runs `body.template operator()<Scalar>()` with Fraction and, if that
/// overflows, again with BigRational.
template <class Body>
auto with_exact_rationals(Body&& body) {
    try {
        return body.template operator()<Fraction>();
    } catch (const ArithmeticOverflow&) {
        return body.template operator()<BigRational>();
    }
}

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, in
/// order. Pivots are chosen by smallest magnitude.
std::vector<BigInt> smith_invariant_factors(IntMatrix M);

}  // namespace sring
