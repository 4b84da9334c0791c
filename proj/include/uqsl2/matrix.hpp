#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uqsl2/rational.hpp"

namespace uqsl2 {

/// Dense matrix over Q(q, a), row-major.
class FMatrix {
public:
    FMatrix() = default;
    FMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    FMatrix(std::initializer_list<std::initializer_list<RationalFunction>> rows);

    static FMatrix identity(std::size_t n);
    static FMatrix zero(std::size_t rows, std::size_t cols) { return FMatrix(rows, cols); }
    static FMatrix scalar(std::size_t n, const RationalFunction& c);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const;

    RationalFunction& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RationalFunction& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    FMatrix& operator+=(const FMatrix& rhs);
    FMatrix& operator-=(const FMatrix& rhs);
    friend FMatrix operator+(FMatrix lhs, const FMatrix& rhs) { return lhs += rhs; }
    friend FMatrix operator-(FMatrix lhs, const FMatrix& rhs) { return lhs -= rhs; }
    FMatrix operator-() const;
    friend FMatrix operator*(const FMatrix& lhs, const FMatrix& rhs);
    friend FMatrix operator*(const RationalFunction& c, const FMatrix& m) { return m.scaled(c); }
    FMatrix scaled(const RationalFunction& c) const;
    friend bool operator==(const FMatrix&, const FMatrix&) = default;

    FMatrix transpose() const;
    FMatrix column(std::size_t j) const;
    FMatrix pow(int n) const;  // negative n inverts first
    FMatrix inverse() const;   // throws SingularError
    std::size_t rank() const;
    // Columns form a basis of the kernel / of the column space.
    FMatrix nullspace() const;
    FMatrix column_space() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RationalFunction> data_;
};

FMatrix hstack(const FMatrix& lhs, const FMatrix& rhs);
FMatrix block_diagonal(const FMatrix& lhs, const FMatrix& rhs);

// {"n": rows, "rows": [[scalar, ...], ...]}
std::string matrix_to_json(const FMatrix& m);
// One row per line, entries separated by two spaces.
std::string format_matrix(const FMatrix& m);

/// Subspace of F^n spanned by linearly independent columns.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t n) : vectors_(n, 0) {}
    // Keeps a maximal independent subset of the columns.
    static SubspaceBasis span(const FMatrix& columns);

    std::size_t ambient() const noexcept { return vectors_.rows(); }
    std::size_t dim() const noexcept { return vectors_.cols(); }
    const FMatrix& vectors() const noexcept { return vectors_; }

    bool contains(const FMatrix& columns) const;
    SubspaceBasis operator+(const SubspaceBasis& rhs) const;
    SubspaceBasis intersect(const SubspaceBasis& rhs) const;
    SubspaceBasis image(const FMatrix& m) const;
    bool operator==(const SubspaceBasis& rhs) const;

private:
    FMatrix vectors_;
};

// ker(m - lambda I)
SubspaceBasis eigenspace(const FMatrix& m, const RationalFunction& lambda);

}  // namespace uqsl2
