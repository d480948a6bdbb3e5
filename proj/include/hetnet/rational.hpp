#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hetnet {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse an exact rational from "p", "-p/q" or "p/q". Decimal notation is
/// rejected on purpose: coefficients stay exact end-to-end.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// r^k for integer k (k may be negative, r != 0 then).
Rational rational_pow(const Rational& r, long k);

/// Dense matrix of exact rationals. Small sizes only (n <= ~8 here), so a
/// naive representation is plenty.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix operator*(const RatMatrix& o) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    /// Matrix power, k >= 0.
    RatMatrix pow(unsigned long k) const;

    /// Exact inverse via Gauss-Jordan. Throws std::domain_error if singular.
    RatMatrix inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace hetnet
