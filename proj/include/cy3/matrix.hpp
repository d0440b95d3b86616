#ifndef CY3_MATRIX_HPP
#define CY3_MATRIX_HPP

#include "cy3/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cy3 {

/// Dense integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws DimensionError for non-square input.
Integer det_int(const IntMatrix& m);

struct SmithForm {
    /// Invariant factors d_1 | d_2 | ... of length min(rows, cols), all >= 0.
    std::vector<Integer> factors;
    IntMatrix diagonal;
    /// Unimodular transforms with left * m * right == diagonal.
    IntMatrix left;
    IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace cy3

#endif
