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

#ifndef HOLANT6V_MATRIX_H
#define HOLANT6V_MATRIX_H

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "holant6v/scalar.h"

namespace holant6v {

/// Small dense row-major matrix over the scalar field.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Scalar &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Scalar &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    Matrix transpose() const;
    /// Exact rank by fraction-free elimination.
    size_t rank() const;
    /// Determinant of a square matrix.
    Scalar determinant() const;
    /// Solves A x = b for square nonsingular A. Returns nullopt when singular.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar> &rhs) const;

    friend Matrix operator*(const Matrix &lhs, const Matrix &rhs);
    friend Matrix operator+(const Matrix &lhs, const Matrix &rhs);
    friend Matrix operator*(const Scalar &k, const Matrix &m);
    friend bool operator==(const Matrix &lhs, const Matrix &rhs) = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// The double disequality: [[0,1],[1,0]] tensor [[0,1],[1,0]].
Matrix double_disequality();

}  // namespace holant6v

#endif
