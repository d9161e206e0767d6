#ifndef QHS_DIVISOR_HPP
#define QHS_DIVISOR_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace qhs {

using Index = std::int64_t;

/*
 * A finite rational combination  sum_j c_j Lambda_j  in the group ring of C*,
 * where Lambda_j is the divisor of t^j - 1.  Multiplication follows
 *
 *     Lambda_a Lambda_b = gcd(a,b) Lambda_lcm(a,b),
 *
 * so Lambda_1 (the divisor of t - 1) is the ring identity.
 *
 * The term map is kept canonical: indices >= 1, no zero coefficients.  The
 * empty map is the zero divisor and equality is structural.
 */
class OrlikDivisor {
public:
    using Terms = std::map<Index, mpq_class>;

    OrlikDivisor() = default;
    OrlikDivisor(std::initializer_list<std::pair<const Index, mpq_class>> terms);
    explicit OrlikDivisor(Terms terms);

    static OrlikDivisor zero() { return {}; }
    static OrlikDivisor one();

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /* Coefficient of Lambda_j, zero when absent. */
    mpq_class coefficient(Index j) const;

    OrlikDivisor& operator+=(const OrlikDivisor& rhs);
    OrlikDivisor& operator-=(const OrlikDivisor& rhs);
    OrlikDivisor& operator*=(const OrlikDivisor& rhs);

    friend OrlikDivisor operator+(OrlikDivisor a, const OrlikDivisor& b) { return a += b; }
    friend OrlikDivisor operator-(OrlikDivisor a, const OrlikDivisor& b) { return a -= b; }
    friend OrlikDivisor operator*(const OrlikDivisor& a, const OrlikDivisor& b);
    friend OrlikDivisor operator-(const OrlikDivisor& a);

    friend bool operator==(const OrlikDivisor& a, const OrlikDivisor& b) { return a.terms_ == b.terms_; }

private:
    void add_term(Index j, const mpq_class& c);
    void prune();

    Terms terms_;
};

/* Lambda_j; throws invalid_index for j < 1. */
OrlikDivisor lambda(Index j);

OrlikDivisor add(const OrlikDivisor& a, const OrlikDivisor& b);
OrlikDivisor mul(const OrlikDivisor& a, const OrlikDivisor& b);
OrlikDivisor scale(const OrlikDivisor& a, const mpq_class& q);

/* Number of (t - 1) factors in prod_j (t^j - 1)^{c_j}. */
mpq_class coefficient_sum(const OrlikDivisor& a);

bool is_integral(const OrlikDivisor& a);

/* Exponent of the m-th cyclotomic polynomial in prod_j (t^j - 1)^{c_j}. */
mpq_class cyclotomic_exponent(const OrlikDivisor& a, Index m);

/* True when the product is an honest polynomial: integral, and no
 * cyclotomic factor carries a negative exponent. */
bool is_polynomial_valued(const OrlikDivisor& a);

/* Degree of prod_j (t^j - 1)^{c_j}, i.e. sum_j j c_j. */
mpq_class polynomial_degree(const OrlikDivisor& a);

/*
 * Value at t = 1 of prod_j (t^j - 1)^{c_j} with the (t - 1) factors
 * cancelled.  `reduced_value` is prod_j j^{c_j}; `zero_order` is the
 * coefficient sum.  When zero_order > 0 the unreduced product vanishes at
 * t = 1 to that order and value() is 0.
 */
struct UnityValue {
    mpq_class reduced_value;
    std::int64_t zero_order = 0;

    mpq_class value() const { return zero_order > 0 ? mpq_class(0) : reduced_value; }
    bool vanishes() const noexcept { return zero_order > 0; }
};

/* Throws integrality for non-integral coefficients and pole for a negative
 * coefficient sum. */
UnityValue evaluate_at_one_reduced(const OrlikDivisor& a);

/* gcd/lcm over positive indices; lcm throws overflow past int64. */
Index index_gcd(Index a, Index b);
Index index_lcm(Index a, Index b);

} // namespace qhs

#endif
