#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "boole/errors.hpp"
#include "boole/matrix.hpp"
#include "boole/rational.hpp"

namespace boole {

/// The n+1 nodes a, a+b, ..., a+nb. Pairwise distinct iff b != 0.
struct ArithmeticNodes {
    Rational a;
    Rational b;
    unsigned n = 0;

    Rational node(unsigned i) const { return a + Rational(i) * b; }

    std::vector<Rational> values() const {
        std::vector<Rational> out;
        out.reserve(n + 1);
        for (unsigned i = 0; i <= n; ++i) out.push_back(node(i));
        return out;
    }
};

/// Square matrix whose row i holds the i-th powers of `nodes`.
inline ExactMatrix vandermonde_matrix(std::span<const Rational> nodes) {
    const std::size_t size = nodes.size();
    ExactMatrix m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        Rational p(1);
        for (std::size_t i = 0; i < size; ++i) {
            m(i, j) = p;
            p *= nodes[j];
        }
    }
    return m;
}

/**
 * The system V x = (0, ..., 0, b^n n!) with V(i, j) = (a + j b)^i.
 *
 * Built for any b; when b = 0 and n >= 1 the matrix has equal columns and
 * the right-hand side is zero.
 */
inline LinearSystem build_system(const ArithmeticNodes& nodes) {
    const std::vector<Rational> values = nodes.values();
    std::vector<Rational> rhs(nodes.n + 1);
    rhs.back() = rat_pow(nodes.b, nodes.n) * Rational(factorial(nodes.n));
    return LinearSystem(vandermonde_matrix(values), std::move(rhs));
}

/// Product of (node_i - node_j) over j < i. Empty product is 1.
inline Rational det_vandermonde_general(std::span<const Rational> nodes) {
    Rational det(1);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) det *= nodes[i] - nodes[j];
    }
    return det;
}

/// det V on arithmetic nodes: superfactorial(n) * b^(n(n+1)/2). Independent of a.
inline Rational det_vandermonde_closed(unsigned n, const Rational& b) {
    const unsigned exponent = n * (n + 1) / 2;
    return Rational(superfactorial(n)) * rat_pow(b, exponent);
}

/**
 * Determinant of V with column k replaced by the right-hand side:
 *
 *   (-1)^(n-k) * b^(n(n+1)/2) * n! * (superfactorial(n) / k!) / (n-k)!
 *
 * where superfactorial(n) / k! is the product of j! over 1 <= j <= n, j != k.
 * Throws DomainError when k > n.
 */
inline Rational det_vk_closed(unsigned n, unsigned k, const Rational& b) {
    if (k > n) throw DomainError("det_vk_closed: k must not exceed n");
    BigInteger magnitude = superfactorial(n) / factorial(k);
    magnitude *= factorial(n);
    magnitude /= factorial(n - k);
    Rational det = Rational(std::move(magnitude)) * rat_pow(b, n * (n + 1) / 2);
    return (n - k) % 2 ? -det : det;
}

namespace detail {

struct ClearedMatrix {
    Matrix<BigInteger> entries;
    BigInteger scale = 1;  // product of the per-row multipliers
};

// Multiplies each row by the lcm of its denominators.
inline ClearedMatrix clear_denominators(const ExactMatrix& m) {
    ClearedMatrix out{Matrix<BigInteger>(m.rows(), m.cols()), 1};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInteger row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) row_lcm = boost::multiprecision::lcm(row_lcm, m(i, j).denominator());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.entries(i, j) = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
        }
        out.scale *= row_lcm;
    }
    return out;
}

// Fraction-free forward elimination over the first `pivot_cols` columns.
// Pivot: first nonzero entry at or below the diagonal. Returns the row-swap
// sign, or nullopt if some column has no pivot.
inline std::optional<int> bareiss_eliminate(Matrix<BigInteger>& m, std::size_t pivot_cols) {
    int sign = 1;
    BigInteger previous = 1;
    const std::size_t rows = m.rows();
    for (std::size_t k = 0; k < pivot_cols; ++k) {
        std::size_t p = k;
        while (p < rows && m(p, k).is_zero()) ++p;
        if (p == rows) return std::nullopt;
        if (p != k) {
            m.swap_rows(p, k);
            sign = -sign;
        }
        const BigInteger& pivot = m(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < m.cols(); ++j) {
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / previous;
            }
            m(i, k) = 0;
        }
        previous = pivot;
    }
    return sign;
}

}  // namespace detail

/**
 * Exact determinant by fraction-free elimination.
 *
 * Each row is first scaled to integers by the lcm of its denominators; the
 * integer determinant from Bareiss elimination is then divided by the
 * product of those scales. Throws DomainError for non-square input.
 */
inline Rational det_bareiss(const ExactMatrix& m) {
    if (!m.is_square()) throw DomainError("det_bareiss: matrix is not square");
    const std::size_t size = m.rows();
    if (size == 0) return Rational(1);
    auto cleared = detail::clear_denominators(m);
    const auto sign = detail::bareiss_eliminate(cleared.entries, size);
    if (!sign) return Rational(0);
    BigInteger det = cleared.entries(size - 1, size - 1);
    if (*sign < 0) det = -det;
    return Rational(std::move(det), std::move(cleared.scale));
}

/**
 * Unique exact solution of a nonsingular square system.
 *
 * The augmented matrix [A | b] is cleared to integers row by row, reduced to
 * upper-triangular form by Bareiss elimination, and back-substituted over
 * the rationals. Throws SingularMatrixError if A is singular.
 */
inline std::vector<Rational> solve_exact(const LinearSystem& sys) {
    const std::size_t size = sys.size();
    ExactMatrix augmented(size, size + 1);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) augmented(i, j) = sys.matrix(i, j);
        augmented(i, size) = sys.rhs[i];
    }
    auto cleared = detail::clear_denominators(augmented);
    Matrix<BigInteger>& u = cleared.entries;
    if (!detail::bareiss_eliminate(u, size)) throw SingularMatrixError("solve_exact: singular matrix");

    std::vector<Rational> x(size);
    for (std::size_t i = size; i-- > 0;) {
        Rational acc(u(i, size));
        for (std::size_t j = i + 1; j < size; ++j) acc -= Rational(u(i, j)) * x[j];
        x[i] = acc / Rational(u(i, i));
    }
    return x;
}

}  // namespace boole
