#include "cmplane/cyclo_matrix.hpp"

#include "cmplane/cyclotomic.hpp"
#include "cmplane/errors.hpp"

#include <string>
#include <utility>

namespace cmplane {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, unsigned long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      data_(rows * cols, CyclotomicNumber(mpq_class(0), conductor))
{
}

CycloMatrix CycloMatrix::from_rows(const std::vector<std::vector<CyclotomicNumber>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    unsigned long n = 1;
    for (const auto& row : rows)
        for (const auto& x : row)
            n = lcm(n, x.conductor());
    CycloMatrix m(rows.size(), cols, n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw PreconditionError("CycloMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

void CycloMatrix::set(std::size_t i, std::size_t j, const CyclotomicNumber& value)
{
    if (conductor_ % value.conductor() != 0)
        throw PreconditionError("CycloMatrix: entry conductor " + std::to_string(value.conductor()) +
                                " does not divide matrix conductor " + std::to_string(conductor_));
    data_[i * cols_ + j] = value.lift(conductor_);
}

void CycloMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

Eigen::MatrixXcd CycloMatrix::to_complex() const
{
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).to_complex();
    return out;
}

std::size_t rank(const CycloMatrix& input)
{
    CycloMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    CyclotomicNumber prev(mpq_class(1), a.conductor());
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        a.swap_rows(r, pivot);
        const CyclotomicNumber p = a(r, c);
        const CyclotomicNumber prev_inv = prev.inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            const CyclotomicNumber lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                a.set(i, j, (p * a(i, j) - lead * a(r, j)) * prev_inv);
            a.set(i, c, CyclotomicNumber(mpq_class(0), a.conductor()));
        }
        prev = p;
        ++r;
    }
    return r;
}

std::size_t numeric_rank(const CycloMatrix& m, double rel_tol)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.to_complex());
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0)
        return 0;
    const double threshold = rel_tol * sv(0);
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold)
            ++count;
    return count;
}

} // namespace cmplane
