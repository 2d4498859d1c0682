#pragma once

// Laurent polynomials and matrices over the semiring of nonnegative integers.
//
// A Laurent polynomial is a finite sum  p(z) = sum_d c_d z^d  with integer
// degrees d (negative degrees allowed) and coefficients c_d >= 1 stored in a
// sorted map; the zero polynomial is the empty map.  Coefficients are
// arbitrary-precision integers so that matrix powers never overflow.
//
// Matrices with such entries form a semiring under the usual sum/product.
// Nilpotency of M is equivalent to nilpotency of the integer matrix M(1)
// obtained by substituting z = 1, which in turn is equivalent to
// M(1)^n = 0 for n = dimension; this is decided exactly.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabdyn {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    // Zero polynomial: empty term map.
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }

    static LaurentPoly constant(const BigInt& c);

    // c * z^degree.  c must be nonnegative; c = 0 yields the zero polynomial.
    static LaurentPoly monomial(std::int64_t degree, const BigInt& c = 1);

    // Terms as sorted (degree, coefficient) pairs, coefficients >= 1.
    static LaurentPoly from_terms(
        const std::vector<std::pair<std::int64_t, BigInt>>& terms);

    bool is_zero() const { return terms_.empty(); }

    const std::map<std::int64_t, BigInt>& terms() const { return terms_; }

    // Adds c * z^degree.  Throws std::invalid_argument for negative c;
    // adding zero is a no-op.
    void add_term(std::int64_t degree, const BigInt& c);

    // Smallest / largest degree with nonzero coefficient.
    // Throws std::domain_error on the zero polynomial.
    std::int64_t min_degree() const;
    std::int64_t max_degree() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly operator*(const LaurentPoly& other) const;

    bool operator==(const LaurentPoly& other) const = default;

    // Human-readable form such as "2*z^3 + 1 + z^-2"; "0" for zero.
    std::string to_string() const;

private:
    std::map<std::int64_t, BigInt> terms_;
};

// Evaluates p at a real point x > 0 in double precision.
// Throws std::domain_error for x <= 0 or non-finite x.
double poly_eval(const LaurentPoly& p, double x);

// Square matrix with LaurentPoly entries, row-major.
class LaurentMatrix {
public:
    explicit LaurentMatrix(int size);

    static LaurentMatrix identity(int size);

    // Diagonal matrix with every diagonal entry equal to z^degree.
    static LaurentMatrix diagonal_monomial(int size, std::int64_t degree);

    int size() const { return size_; }

    LaurentPoly& at(int row, int col);
    const LaurentPoly& at(int row, int col) const;

    bool is_zero() const;

    bool operator==(const LaurentMatrix& other) const = default;

    std::string to_string() const;

private:
    int size_;
    std::vector<LaurentPoly> entries_;
};

// Matrix product.  Throws std::invalid_argument on size mismatch.
LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);

// n-th power by repeated squaring; n = 0 gives the identity.
// Throws std::invalid_argument for n < 0.
LaurentMatrix mat_pow(const LaurentMatrix& m, std::int64_t n);

// True iff M is nilpotent, decided exactly over the integers via M(1)^size.
bool is_nilpotent(const LaurentMatrix& m);

struct DegreeRange {
    std::int64_t min;  // smallest degree over all nonzero entries
    std::int64_t max;  // largest degree over all nonzero entries
};

// Extremal degrees over all entries.  Throws std::domain_error on the zero
// matrix (no degrees exist).
DegreeRange degree_range(const LaurentMatrix& m);

// Entrywise evaluation at x > 0; same domain restrictions as poly_eval.
std::vector<std::vector<double>> eval_matrix(const LaurentMatrix& m, double x);

}  // namespace stabdyn
