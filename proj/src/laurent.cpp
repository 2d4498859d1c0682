#include "stabdyn/laurent.hpp"

#include <cmath>
#include <sstream>

namespace stabdyn {

LaurentPoly LaurentPoly::constant(const BigInt& c) {
    return monomial(0, c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t degree, const BigInt& c) {
    LaurentPoly p;
    p.add_term(degree, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(
    const std::vector<std::pair<std::int64_t, BigInt>>& terms) {
    LaurentPoly p;
    for (const auto& [degree, c] : terms) {
        p.add_term(degree, c);
    }
    return p;
}

void LaurentPoly::add_term(std::int64_t degree, const BigInt& c) {
    if (c < 0) {
        throw std::invalid_argument(
            "LaurentPoly: coefficients must be nonnegative");
    }
    if (c == 0) {
        return;
    }
    terms_[degree] += c;
}

std::int64_t LaurentPoly::min_degree() const {
    if (terms_.empty()) {
        throw std::domain_error("min_degree: zero polynomial has no degrees");
    }
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_degree() const {
    if (terms_.empty()) {
        throw std::domain_error("max_degree: zero polynomial has no degrees");
    }
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly result = *this;
    result += other;
    return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [degree, c] : other.terms_) {
        terms_[degree] += c;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly result;
    for (const auto& [da, ca] : terms_) {
        for (const auto& [db, cb] : other.terms_) {
            result.terms_[da + db] += ca * cb;
        }
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    // Highest degree first reads like standard polynomial notation.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) {
            out << " + ";
        }
        first = false;
        const auto& [degree, c] = *it;
        if (degree == 0) {
            out << c;
        } else {
            if (c != 1) {
                out << c << "*";
            }
            out << "z";
            if (degree != 1) {
                out << "^" << degree;
            }
        }
    }
    return out.str();
}

double poly_eval(const LaurentPoly& p, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("poly_eval: x must be a finite positive real");
    }
    double result = 0.0;
    for (const auto& [degree, c] : p.terms()) {
        result += c.convert_to<double>() *
                  std::pow(x, static_cast<double>(degree));
    }
    return result;
}

LaurentMatrix::LaurentMatrix(int size) : size_(size) {
    if (size <= 0) {
        throw std::invalid_argument("LaurentMatrix: size must be positive");
    }
    entries_.resize(static_cast<std::size_t>(size) * size);
}

LaurentMatrix LaurentMatrix::identity(int size) {
    LaurentMatrix m(size);
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = LaurentPoly::constant(1);
    }
    return m;
}

LaurentMatrix LaurentMatrix::diagonal_monomial(int size, std::int64_t degree) {
    LaurentMatrix m(size);
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = LaurentPoly::monomial(degree);
    }
    return m;
}

LaurentPoly& LaurentMatrix::at(int row, int col) {
    if (row < 0 || row >= size_ || col < 0 || col >= size_) {
        throw std::out_of_range("LaurentMatrix::at: index out of range");
    }
    return entries_[static_cast<std::size_t>(row) * size_ + col];
}

const LaurentPoly& LaurentMatrix::at(int row, int col) const {
    if (row < 0 || row >= size_ || col < 0 || col >= size_) {
        throw std::out_of_range("LaurentMatrix::at: index out of range");
    }
    return entries_[static_cast<std::size_t>(row) * size_ + col];
}

bool LaurentMatrix::is_zero() const {
    for (const auto& entry : entries_) {
        if (!entry.is_zero()) {
            return false;
        }
    }
    return true;
}

std::string LaurentMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < size_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (int j = 0; j < size_; ++j) {
            if (j > 0) {
                out << ", ";
            }
            out << at(i, j).to_string();
        }
        out << "]";
        out << (i + 1 == size_ ? "]" : "\n");
    }
    return out.str();
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("mat_mul: size mismatch");
    }
    const int n = a.size();
    LaurentMatrix result(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (a.at(i, k).is_zero()) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (b.at(k, j).is_zero()) {
                    continue;
                }
                result.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return result;
}

LaurentMatrix mat_pow(const LaurentMatrix& m, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("mat_pow: exponent must be nonnegative");
    }
    LaurentMatrix result = LaurentMatrix::identity(m.size());
    LaurentMatrix base = m;
    std::int64_t k = n;
    while (k > 0) {
        if (k & 1) {
            result = mat_mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mat_mul(base, base);
        }
    }
    return result;
}

bool is_nilpotent(const LaurentMatrix& m) {
    // Coefficients are nonnegative, so M^k = 0 iff M(1)^k = 0; it suffices to
    // check the integer matrix M(1) at exponent size (Cayley-Hamilton).
    const int n = m.size();
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            BigInt total = 0;
            for (const auto& [degree, c] : m.at(i, j).terms()) {
                total += c;
            }
            a[static_cast<std::size_t>(i) * n + j] = total;
        }
    }
    auto multiply = [n](const std::vector<BigInt>& x,
                        const std::vector<BigInt>& y) {
        std::vector<BigInt> out(static_cast<std::size_t>(n) * n, BigInt(0));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const BigInt& xv = x[static_cast<std::size_t>(i) * n + k];
                if (xv == 0) {
                    continue;
                }
                for (int j = 0; j < n; ++j) {
                    out[static_cast<std::size_t>(i) * n + j] +=
                        xv * y[static_cast<std::size_t>(k) * n + j];
                }
            }
        }
        return out;
    };
    // Square up past exponent n; nilpotency index never exceeds n.
    std::vector<BigInt> power = a;
    int exponent = 1;
    while (exponent < n) {
        power = multiply(power, power);
        exponent *= 2;
    }
    for (const auto& v : power) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

DegreeRange degree_range(const LaurentMatrix& m) {
    bool seen = false;
    DegreeRange range{0, 0};
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            const LaurentPoly& p = m.at(i, j);
            if (p.is_zero()) {
                continue;
            }
            if (!seen) {
                range.min = p.min_degree();
                range.max = p.max_degree();
                seen = true;
            } else {
                range.min = std::min(range.min, p.min_degree());
                range.max = std::max(range.max, p.max_degree());
            }
        }
    }
    if (!seen) {
        throw std::domain_error("degree_range: zero matrix has no degrees");
    }
    return range;
}

std::vector<std::vector<double>> eval_matrix(const LaurentMatrix& m,
                                             double x) {
    const int n = m.size();
    std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out[i][j] = poly_eval(m.at(i, j), x);
        }
    }
    return out;
}

}  // namespace stabdyn
