#pragma once

#include "cmplane/cyclotomic_field.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace cmplane {

/// Dense row-major matrix over a single cyclotomic field Q(zeta_n).
class CycloMatrix {
public:
    CycloMatrix(std::size_t rows, std::size_t cols, unsigned long conductor);

    /// Entries are lifted to the lcm of their conductors; ragged input
    /// throws PreconditionError.
    static CycloMatrix from_rows(const std::vector<std::vector<CyclotomicNumber>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned long conductor() const { return conductor_; }

    const CyclotomicNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Lifts `value` into Q(zeta_n); throws when its conductor does not divide n.
    void set(std::size_t i, std::size_t j, const CyclotomicNumber& value);

    void swap_rows(std::size_t a, std::size_t b);

    /// Numerical image under zeta_n -> exp(2 pi i / n).
    Eigen::MatrixXcd to_complex() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    unsigned long conductor_;
    std::vector<CyclotomicNumber> data_;
};

/// Exact rank over Q(zeta_n) by Bareiss fraction-free elimination.
std::size_t rank(const CycloMatrix& m);

/// Count of singular values above rel_tol * sigma_max of the complex image.
std::size_t numeric_rank(const CycloMatrix& m, double rel_tol = 1e-8);

} // namespace cmplane
