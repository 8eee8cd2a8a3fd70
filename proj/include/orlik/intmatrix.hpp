#pragma once

// Dense matrices over the integers with exact arithmetic (GMP), plus the
// fraction-free determinant, Smith normal form with recorded row/column
// transformations, Kronecker product, and integral linear solving.

#include "orlik/errors.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace orlik {

class IntMatrix {
public:
    IntMatrix() : r_(0), c_(0) {}
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }

    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    std::vector<mpz_class> col(int j) const;
    void set_col(int j, const std::vector<mpz_class>& v);

    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

private:
    int r_, c_;
    std::vector<mpz_class> a_;
};

bool operator==(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<mpz_class> operator*(const IntMatrix& a, const std::vector<mpz_class>& x);

// exact determinant of a square matrix, fraction-free elimination
mpz_class det(const IntMatrix& m);

// U * A * V = D with U, V unimodular, D diagonal, nonnegative,
// each diagonal entry dividing the next
struct SmithForm {
    IntMatrix d, u, v;
};
SmithForm smith_normal_form(const IntMatrix& a);

int rank(const IntMatrix& a);

// C[i*rowsB + k][j*colsB + l] = A[i][j] * B[k][l]
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// integral solution of A x = b, if one exists
std::optional<std::vector<mpz_class>> solve(const IntMatrix& a, const std::vector<mpz_class>& b);

// inverse of a matrix with determinant +-1
IntMatrix inverse_unimodular(const IntMatrix& a);

} // namespace orlik
