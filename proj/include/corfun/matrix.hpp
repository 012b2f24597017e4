#ifndef CORFUN_MATRIX_HPP
#define CORFUN_MATRIX_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace corfun {

// Dense matrix over arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols)
        : r_(rows), c_(cols), a_((std::size_t)rows * cols) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    mpz_class& at(int r, int c) { return a_[(std::size_t)r * c_ + c]; }
    const mpz_class& at(int r, int c) const {
        return a_[(std::size_t)r * c_ + c];
    }

    bool operator==(const IntegerMatrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }

    IntegerMatrix multiply(const IntegerMatrix& o) const;
    // New matrix with the rows of `below` appended.
    IntegerMatrix stacked_with(const IntegerMatrix& below) const;
    bool is_identity() const;
    bool is_zero() const;
    std::string to_string() const;  // rows of space-separated entries

private:
    int r_ = 0, c_ = 0;
    std::vector<mpz_class> a_;
};

// Exact rank by fraction-free (Bareiss) elimination.
int rank(const IntegerMatrix& m);

// Exact determinant by Bareiss elimination; requires a square matrix.
mpz_class determinant(const IntegerMatrix& m);

// Elementary divisors d_1 | d_2 | ... (Smith form diagonal, padded with
// zeros to min(rows, cols)), all non-negative.
std::vector<mpz_class> smith_divisors(IntegerMatrix m);

}  // namespace corfun

#endif
