#include "corfun/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "corfun/errors.hpp"

namespace corfun {

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& o) const {
    check_input(c_ == o.r_, "matrix shape mismatch in multiply");
    IntegerMatrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const mpz_class& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::stacked_with(const IntegerMatrix& below) const {
    check_input(c_ == below.c_, "matrix widths differ in stack");
    IntegerMatrix out(r_ + below.r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < below.r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(r_ + i, j) = below.at(i, j);
    return out;
}

bool IntegerMatrix::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntegerMatrix::is_zero() const {
    for (const mpz_class& v : a_)
        if (v != 0) return false;
    return true;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Fraction-free elimination shared by rank and determinant.  Returns the
// number of pivots; when `track_sign` the permutation sign and the last
// pivot are reported for the determinant.
int bareiss(IntegerMatrix m, bool track_sign, int& sign, mpz_class& last) {
    int rows = m.rows(), cols = m.cols();
    mpz_class prev = 1;
    sign = 1;
    last = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv_row = -1;
        for (int i = row; i < rows; ++i)
            if (m.at(i, col) != 0) {
                piv_row = i;
                break;
            }
        if (piv_row < 0) continue;
        if (piv_row != row) {
            for (int j = 0; j < cols; ++j)
                std::swap(m.at(piv_row, j), m.at(row, j));
            sign = -sign;
        }
        const mpz_class piv = m.at(row, col);
        for (int i = row + 1; i < rows; ++i) {
            const mpz_class mic = m.at(i, col);
            if (mic == 0 && piv == prev) continue;
            for (int j = 0; j < cols; ++j) {
                mpz_class num = piv * m.at(i, j) - mic * m.at(row, j);
                require(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()),
                        "fraction-free elimination must divide exactly");
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
        }
        prev = piv;
        last = piv;
        ++row;
    }
    (void)track_sign;
    return row;
}

}  // namespace

int rank(const IntegerMatrix& m) {
    int sign;
    mpz_class last;
    return bareiss(m, false, sign, last);
}

mpz_class determinant(const IntegerMatrix& m) {
    check_input(m.rows() == m.cols(), "determinant needs a square matrix");
    if (m.rows() == 0) return 1;
    int sign;
    mpz_class last;
    int pivots = bareiss(m, true, sign, last);
    if (pivots < m.rows()) return 0;
    return sign * last;
}

std::vector<mpz_class> smith_divisors(IntegerMatrix m) {
    int rows = m.rows(), cols = m.cols();
    int nmin = std::min(rows, cols);
    std::vector<mpz_class> divisors;
    int t = 0;
    while (t < nmin) {
        // Find the entry of least non-zero magnitude at or after (t, t).
        int bi = -1, bj = -1;
        mpz_class best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const mpz_class& v = m.at(i, j);
                if (v == 0) continue;
                mpz_class av = abs(v);
                if (bi < 0 || av < best) {
                    best = av;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;  // all remaining entries are zero
        if (bi != t)
            for (int j = 0; j < cols; ++j) std::swap(m.at(bi, j), m.at(t, j));
        if (bj != t)
            for (int i = 0; i < rows; ++i) std::swap(m.at(i, bj), m.at(i, t));

        bool restart = false;
        const mpz_class piv = m.at(t, t);
        // Clear the pivot column (floor quotients, like the reference
        // implementation); a non-zero residue becomes the new pivot.
        for (int i = t + 1; i < rows && !restart; ++i) {
            if (m.at(i, t) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(),
                       piv.get_mpz_t());
            for (int j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) {
                for (int j = 0; j < cols; ++j)
                    std::swap(m.at(i, j), m.at(t, j));
                restart = true;
            }
        }
        if (restart) continue;
        for (int j = t + 1; j < cols && !restart; ++j) {
            if (m.at(t, j) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(),
                       piv.get_mpz_t());
            for (int i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) {
                for (int i = 0; i < rows; ++i)
                    std::swap(m.at(i, j), m.at(i, t));
                restart = true;
            }
        }
        if (restart) continue;
        // Divisibility fixup: every remaining entry must be a multiple
        // of the pivot; otherwise fold its row in and redo this pivot.
        for (int i = t + 1; i < rows && !restart; ++i)
            for (int j = t + 1; j < cols && !restart; ++j) {
                if (m.at(i, j) % piv == 0) continue;
                for (int jj = 0; jj < cols; ++jj)
                    m.at(t, jj) += m.at(i, jj);
                restart = true;
            }
        if (restart) continue;
        divisors.push_back(abs(piv));
        ++t;
    }
    while ((int)divisors.size() < nmin) divisors.emplace_back(0);
    return divisors;
}

}  // namespace corfun
