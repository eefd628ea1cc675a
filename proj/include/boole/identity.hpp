#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "boole/errors.hpp"
#include "boole/matrix.hpp"
#include "boole/rational.hpp"
#include "boole/vandermonde.hpp"

namespace boole {

/// Parameter tuple of one identity evaluation.
struct IdentityCase {
    unsigned n = 0;
    unsigned m = 0;
    Rational a;
    Rational b;

    friend bool operator==(const IdentityCase&, const IdentityCase&) = default;
};

/// One left/right comparison. `pass` is exactly `lhs == rhs`.
struct CaseResult {
    IdentityCase input;
    Rational lhs;
    Rational rhs;
    bool pass = false;

    static CaseResult compare(IdentityCase input, Rational lhs, Rational rhs) {
        const bool pass = lhs == rhs;
        return {std::move(input), std::move(lhs), std::move(rhs), pass};
    }

    friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

/**
 * A secondary check attached to a report: one row of the substituted
 * system, one solver component, one finite-difference comparison.
 * `index` is the row, component or m value depending on `kind`.
 */
struct AuxiliaryCheck {
    std::string kind;
    unsigned n = 0;
    unsigned index = 0;
    Rational a;
    Rational b;
    Rational lhs;
    Rational rhs;
    bool pass = false;

    friend bool operator==(const AuxiliaryCheck&, const AuxiliaryCheck&) = default;
};

/// Ordered case results plus auxiliary checks and free-form notes.
class VerificationReport {
public:
    void add(CaseResult r) {
        if (!r.pass) ++failures_;
        results_.push_back(std::move(r));
    }

    void add_check(AuxiliaryCheck c) {
        if (!c.pass) ++check_failures_;
        checks_.push_back(std::move(c));
    }

    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    void append(const VerificationReport& other) {
        for (const auto& r : other.results_) add(r);
        for (const auto& c : other.checks_) add_check(c);
        notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    }

    const std::vector<CaseResult>& results() const noexcept { return results_; }
    const std::vector<AuxiliaryCheck>& checks() const noexcept { return checks_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

    std::size_t total() const noexcept { return results_.size(); }
    std::size_t failures() const noexcept { return failures_; }
    std::size_t check_failures() const noexcept { return check_failures_; }

    /// No failed case and no failed auxiliary check.
    bool passed() const noexcept { return failures_ == 0 && check_failures_ == 0; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

private:
    std::vector<CaseResult> results_;
    std::vector<AuxiliaryCheck> checks_;
    std::vector<std::string> notes_;
    std::size_t failures_ = 0;
    std::size_t check_failures_ = 0;
};

/// x_k = (-1)^(n-k) C(n, k), k = 0..n.
inline std::vector<BigInteger> closed_form_solution(unsigned n) {
    std::vector<BigInteger> x;
    x.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        BigInteger c = binomial(n, k);
        x.push_back((n - k) % 2 ? BigInteger(-c) : c);
    }
    return x;
}

/// sum_{k=0..n} (-1)^(n-k) C(n,k) k^m, with 0^0 = 1.
inline BigInteger boole_sum(unsigned n, unsigned m) {
    BigInteger total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigInteger term = binomial(n, k) * int_pow(BigInteger(k), m);
        if ((n - k) % 2) total -= term;
        else total += term;
    }
    return total;
}

/**
 * Memoized table of Stirling partition numbers S(m, n) for m <= m_max and
 * n <= n_max, filled by S(m,n) = n S(m-1,n) + S(m-1,n-1) from S(0,0) = 1.
 */
class StirlingTable {
public:
    StirlingTable(unsigned m_max, unsigned n_max)
        : m_max_(m_max), n_max_(n_max), table_((m_max + 1) * (n_max + 1), BigInteger(0)) {
        at(0, 0) = 1;
        for (unsigned m = 1; m <= m_max; ++m) {
            for (unsigned n = 1; n <= n_max; ++n) at(m, n) = BigInteger(n) * at(m - 1, n) + at(m - 1, n - 1);
        }
    }

    unsigned m_max() const noexcept { return m_max_; }
    unsigned n_max() const noexcept { return n_max_; }

    /// Throws DomainError outside the tabulated range.
    const BigInteger& operator()(unsigned m, unsigned n) const {
        if (m > m_max_ || n > n_max_) throw DomainError("StirlingTable: index outside table");
        return table_[m * (n_max_ + 1) + n];
    }

private:
    BigInteger& at(unsigned m, unsigned n) { return table_[m * (n_max_ + 1) + n]; }

    unsigned m_max_;
    unsigned n_max_;
    std::vector<BigInteger> table_;
};

inline BigInteger stirling2(unsigned m, unsigned n) {
    if (n > m) return 0;
    return StirlingTable(m, n)(m, n);
}

/// Delta^n applied to j -> j^m, evaluated at 0.
inline BigInteger forward_difference_at_zero(unsigned m, unsigned n) {
    std::vector<BigInteger> row;
    row.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j) row.push_back(int_pow(BigInteger(j), m));
    for (unsigned round = 0; round < n; ++round) {
        for (std::size_t j = 0; j + 1 < row.size(); ++j) row[j] = row[j + 1] - row[j];
        row.pop_back();
    }
    return row.front();
}

/// sum_{k=0..n} (-1)^k C(n,k) (a + b k)^m, accumulated term by term in k order.
inline Rational generalized_sum(const Rational& a, const Rational& b, unsigned n, unsigned m) {
    Rational total;
    for (unsigned k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * rat_pow(a + Rational(k) * b, m);
        if (k % 2) total -= term;
        else total += term;
    }
    return total;
}

/// (-1)^n b^n n! when m == n, 0 when m < n. Throws DomainError when m > n.
inline Rational expected_value(const Rational& /*a*/, const Rational& b, unsigned n, unsigned m) {
    if (m > n) throw DomainError("expected_value: m must not exceed n");
    if (m < n) return Rational(0);
    Rational v = rat_pow(b, n) * Rational(factorial(n));
    return n % 2 ? -v : v;
}

using ExpectedValueFn = std::function<Rational(const Rational&, const Rational&, unsigned, unsigned)>;

/**
 * Checks the generalized alternating sum against its closed form for every
 * 0 <= m <= n <= n_max, ordered by (n, m).
 *
 * When b != 0 the signed binomial vector is also substituted into each
 * system (a, b, n) and every row is checked ("system_row" checks, rows
 * 0..n-1 must vanish, row n must equal b^n n!). When b == 0 that
 * substitution is skipped and a note records it.
 *
 * `expected` replaces the closed form; it exists so callers can exercise
 * the failure path.
 */
inline VerificationReport verify_theorem(const Rational& a, const Rational& b, unsigned n_max,
                                         const ExpectedValueFn& expected = expected_value) {
    VerificationReport report;
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= n; ++m) {
            report.add(CaseResult::compare({n, m, a, b}, generalized_sum(a, b, n, m), expected(a, b, n, m)));
        }
    }
    if (b.is_zero()) {
        report.add_note("b = 0: system substitution check skipped (coincident nodes)");
        return report;
    }
    for (unsigned n = 0; n <= n_max; ++n) {
        const LinearSystem sys = build_system({a, b, n});
        std::vector<Rational> x;
        for (auto& c : closed_form_solution(n)) x.emplace_back(std::move(c));
        for (unsigned row = 0; row <= n; ++row) {
            Rational lhs = row_dot(sys.matrix, row, x);
            const bool pass = lhs == sys.rhs[row];
            report.add_check({"system_row", n, row, a, b, std::move(lhs), sys.rhs[row], pass});
        }
    }
    return report;
}

/**
 * Checks boole_sum(n, m) = n! S(m, n) on the grid m <= m_max, n <= n_max
 * (one case per point, with a = 0 and b = 1), and boole_sum(n, m) against
 * the forward-difference table ("forward_difference" checks).
 */
inline VerificationReport verify_stirling(unsigned m_max, unsigned n_max) {
    VerificationReport report;
    const StirlingTable stirling(m_max, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        const BigInteger nf = factorial(n);
        for (unsigned m = 0; m <= m_max; ++m) {
            const BigInteger sum = boole_sum(n, m);
            report.add(CaseResult::compare({n, m, Rational(0), Rational(1)}, Rational(sum), Rational(nf * stirling(m, n))));
            Rational diff(forward_difference_at_zero(m, n));
            const bool pass = diff == Rational(sum);
            report.add_check({"forward_difference", n, m, Rational(0), Rational(1), Rational(sum), std::move(diff), pass});
        }
    }
    return report;
}

/**
 * Two routes to each component of the solution of system (a, b, n).
 *
 * Cases (with m holding the component index k) compare the determinant
 * ratio det_vk_closed / det_vandermonde_closed with the signed binomial;
 * "solver" checks compare solve_exact's component with the same value.
 * Throws SingularMatrixError when b = 0.
 */
inline VerificationReport verify_cramer(const Rational& a, const Rational& b, unsigned n) {
    if (b.is_zero()) throw SingularMatrixError("verify_cramer: b = 0 gives a singular system");
    VerificationReport report;
    const Rational det = det_vandermonde_closed(n, b);
    const std::vector<BigInteger> closed = closed_form_solution(n);
    const std::vector<Rational> solved = solve_exact(build_system({a, b, n}));
    for (unsigned k = 0; k <= n; ++k) {
        const Rational expected(closed[k]);
        report.add(CaseResult::compare({n, k, a, b}, det_vk_closed(n, k, b) / det, expected));
        report.add_check({"solver", n, k, a, b, solved[k], expected, solved[k] == expected});
    }
    return report;
}

}  // namespace boole
