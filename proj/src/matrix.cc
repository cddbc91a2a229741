// Copyright 2026 The holant6v Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holant6v/matrix.h"

#include <stdexcept>

#include "holant6v/errors.h"

namespace holant6v {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw InputError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) {
        m(k, k) = Scalar(1);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    size_t rank = 0;
    for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
        size_t pivot = rank;
        while (pivot < rows_ && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        for (size_t k = 0; k < cols_; ++k) {
            std::swap(m(rank, k), m(pivot, k));
        }
        Scalar inv = m(rank, c).inverse();
        for (size_t r = rank + 1; r < rows_; ++r) {
            if (m(r, c).is_zero()) {
                continue;
            }
            Scalar factor = m(r, c) * inv;
            for (size_t k = c; k < cols_; ++k) {
                m(r, k) -= factor * m(rank, k);
            }
        }
        ++rank;
    }
    return rank;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) {
        throw InputError("determinant of a non-square matrix");
    }
    Matrix m = *this;
    Scalar det(1);
    for (size_t c = 0; c < cols_; ++c) {
        size_t pivot = c;
        while (pivot < rows_ && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == rows_) {
            return Scalar(0);
        }
        if (pivot != c) {
            for (size_t k = 0; k < cols_; ++k) {
                std::swap(m(c, k), m(pivot, k));
            }
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (size_t r = c + 1; r < rows_; ++r) {
            if (m(r, c).is_zero()) {
                continue;
            }
            Scalar factor = m(r, c) * inv;
            for (size_t k = c; k < cols_; ++k) {
                m(r, k) -= factor * m(c, k);
            }
        }
    }
    return det;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar> &rhs) const {
    if (rows_ != cols_ || rhs.size() != rows_) {
        throw InputError("solve: dimension mismatch");
    }
    size_t n = rows_;
    Matrix m = *this;
    std::vector<Scalar> b = rhs;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        if (pivot != c) {
            for (size_t k = 0; k < n; ++k) {
                std::swap(m(c, k), m(pivot, k));
            }
            std::swap(b[c], b[pivot]);
        }
        Scalar inv = m(c, c).inverse();
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) {
                continue;
            }
            Scalar factor = m(r, c) * inv;
            for (size_t k = c; k < n; ++k) {
                m(r, k) -= factor * m(c, k);
            }
            b[r] -= factor * b[c];
        }
    }
    for (size_t c = 0; c < n; ++c) {
        b[c] /= m(c, c);
    }
    return b;
}

Matrix operator*(const Matrix &lhs, const Matrix &rhs) {
    if (lhs.cols_ != rhs.rows_) {
        throw InputError("matrix product: dimension mismatch");
    }
    Matrix out(lhs.rows_, rhs.cols_);
    for (size_t r = 0; r < lhs.rows_; ++r) {
        for (size_t k = 0; k < lhs.cols_; ++k) {
            const Scalar &a = lhs(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; ++c) {
                if (!rhs(k, c).is_zero()) {
                    out(r, c) += a * rhs(k, c);
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix &lhs, const Matrix &rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
        throw InputError("matrix sum: dimension mismatch");
    }
    Matrix out = lhs;
    for (size_t k = 0; k < out.data_.size(); ++k) {
        out.data_[k] += rhs.data_[k];
    }
    return out;
}

Matrix operator*(const Scalar &k, const Matrix &m) {
    Matrix out = m;
    for (Scalar &v : out.data_) {
        v = k * v;
    }
    return out;
}

std::string Matrix::str() const {
    std::string out = "[";
    for (size_t r = 0; r < rows_; ++r) {
        out += r == 0 ? "[" : ", [";
        for (size_t c = 0; c < cols_; ++c) {
            if (c != 0) {
                out += ", ";
            }
            out += (*this)(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

Matrix double_disequality() {
    Matrix n(4, 4);
    for (size_t k = 0; k < 4; ++k) {
        n(k, 3 - k) = Scalar(1);
    }
    return n;
}

}  // namespace holant6v
