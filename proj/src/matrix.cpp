#include "uqsl2/matrix.hpp"

#include <json.hpp>
#include <sstream>
#include <utility>

#include "uqsl2/error.hpp"

namespace uqsl2 {

namespace {

using RF = RationalFunction;

void require_same_shape(const FMatrix& a, const FMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shapes differ");
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(FMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const RF inv = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const RF factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

FMatrix::FMatrix(std::initializer_list<std::initializer_list<RF>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

FMatrix FMatrix::identity(std::size_t n) { return scalar(n, RF(1)); }

FMatrix FMatrix::scalar(std::size_t n, const RF& c) {
    FMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

bool FMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

FMatrix& FMatrix::operator+=(const FMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

FMatrix& FMatrix::operator-=(const FMatrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

FMatrix FMatrix::operator-() const { return scaled(RF(-1)); }

FMatrix operator*(const FMatrix& lhs, const FMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw DomainError("matrix shapes do not compose");
    FMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const RF& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

FMatrix FMatrix::scaled(const RF& c) const {
    FMatrix out(rows_, cols_);
    if (c.is_zero()) return out;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!data_[i].is_zero()) out.data_[i] = data_[i] * c;
    }
    return out;
}

FMatrix FMatrix::transpose() const {
    FMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

FMatrix FMatrix::column(std::size_t j) const {
    FMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
}

FMatrix FMatrix::pow(int n) const {
    if (!is_square()) throw DomainError("power of a non-square matrix");
    FMatrix base = n < 0 ? inverse() : *this;
    FMatrix out = identity(rows_);
    for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
    return out;
}

FMatrix FMatrix::inverse() const {
    if (!is_square()) throw DomainError("inverse of a non-square matrix");
    FMatrix aug = hstack(*this, identity(rows_));
    const auto pivots = rref(aug);
    if (pivots.size() < rows_ || (rows_ > 0 && pivots.back() >= rows_)) throw SingularError("matrix is singular");
    FMatrix out(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) out(i, j) = aug(i, rows_ + j);
    return out;
}

std::size_t FMatrix::rank() const {
    FMatrix copy = *this;
    return rref(copy).size();
}

FMatrix FMatrix::nullspace() const {
    FMatrix r = *this;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_pivot[j]) free.push_back(j);
    }
    FMatrix out(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(free[k], k) = RF(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -r(i, free[k]);
    }
    return out;
}

FMatrix FMatrix::column_space() const {
    FMatrix r = *this;
    const auto pivots = rref(r);
    FMatrix out(rows_, pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, pivots[k]);
    return out;
}

FMatrix hstack(const FMatrix& lhs, const FMatrix& rhs) {
    if (lhs.rows() != rhs.rows()) throw DomainError("hstack of matrices with different heights");
    FMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, lhs.cols() + j) = rhs(i, j);
    }
    return out;
}

FMatrix block_diagonal(const FMatrix& lhs, const FMatrix& rhs) {
    FMatrix out(lhs.rows() + rhs.rows(), lhs.cols() + rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
    for (std::size_t i = 0; i < rhs.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) out(lhs.rows() + i, lhs.cols() + j) = rhs(i, j);
    return out;
}

std::string matrix_to_json(const FMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.rows();
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_scalar(m(i, k)));
        j["rows"].push_back(std::move(row));
    }
    return j.dump();
}

std::string format_matrix(const FMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) out << (k ? "  " : "") << format_scalar(m(i, k));
        out << '\n';
    }
    return out.str();
}

SubspaceBasis SubspaceBasis::span(const FMatrix& columns) {
    SubspaceBasis s(columns.rows());
    s.vectors_ = columns.column_space();
    return s;
}

bool SubspaceBasis::contains(const FMatrix& columns) const {
    return hstack(vectors_, columns).rank() == dim();
}

SubspaceBasis SubspaceBasis::operator+(const SubspaceBasis& rhs) const {
    return span(hstack(vectors_, rhs.vectors_));
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& rhs) const {
    if (dim() == 0 || rhs.dim() == 0) return SubspaceBasis(ambient());
    // U c = W d  <=>  [U | -W] (c; d) = 0
    const FMatrix kernel = hstack(vectors_, -rhs.vectors_).nullspace();
    FMatrix coeffs(dim(), kernel.cols());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) coeffs(i, j) = kernel(i, j);
    return span(vectors_ * coeffs);
}

SubspaceBasis SubspaceBasis::image(const FMatrix& m) const { return span(m * vectors_); }

bool SubspaceBasis::operator==(const SubspaceBasis& rhs) const {
    return dim() == rhs.dim() && contains(rhs.vectors_);
}

SubspaceBasis eigenspace(const FMatrix& m, const RF& lambda) {
    return SubspaceBasis::span((m - FMatrix::scalar(m.rows(), lambda)).nullspace());
}

}  // namespace uqsl2
