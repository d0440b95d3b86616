#include "cy3/matrix.hpp"

#include "cy3/errors.hpp"

#include <algorithm>
#include <utility>

namespace cy3 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        for (long v : row) {
            entries_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool IntMatrix::is_symmetric() const { return is_square() && transpose() == *this; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product shape mismatch");
    }
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) {
                out += ", ";
            }
            out += cy3::to_string((*this)(r, c));
        }
        out += "]";
    }
    return out + "]";
}

Integer det_int(const IntMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(swap, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Sylvester's identity guarantees exactness
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(a, c), m(b, c));
    }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::swap(m(r, a), m(r, b));
    }
}

// row[target] -= q * row[source]
void row_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        m(target, c) -= q * m(source, c);
    }
}

void col_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        m(r, target) -= q * m(r, source);
    }
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix d = m;
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);
    const std::size_t rank_bound = std::min(rows, cols);

    for (std::size_t t = 0; t < rank_bound; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t pr = t;
            std::size_t pc = t;
            for (std::size_t r = t; r < rows; ++r) {
                for (std::size_t c = t; c < cols; ++c) {
                    if (d(r, c) != 0 && (!found || abs(d(r, c)) < abs(d(pr, pc)))) {
                        found = true;
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (!found) {
                break;
            }
            swap_rows(d, t, pr);
            swap_rows(left, t, pr);
            swap_cols(d, t, pc);
            swap_cols(right, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d(r, t) != 0) {
                    const Integer q = floor_div(d(r, t), d(t, t));
                    row_axpy(d, r, t, q);
                    row_axpy(left, r, t, q);
                    clean = clean && d(r, t) == 0;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d(t, c) != 0) {
                    const Integer q = floor_div(d(t, c), d(t, t));
                    col_axpy(d, c, t, q);
                    col_axpy(right, c, t, q);
                    clean = clean && d(t, c) == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // pivot must divide the whole trailing block
            bool divides_all = true;
            for (std::size_t r = t + 1; r < rows && divides_all; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (!divides(d(t, t), d(r, c))) {
                        for (std::size_t k = 0; k < cols; ++k) {
                            d(t, k) += d(r, k);
                        }
                        for (std::size_t k = 0; k < rows; ++k) {
                            left(t, k) += left(r, k);
                        }
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) {
                break;
            }
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) {
                d(t, c) = -d(t, c);
            }
            for (std::size_t c = 0; c < rows; ++c) {
                left(t, c) = -left(t, c);
            }
        }
    }

    SmithForm out;
    out.factors.reserve(rank_bound);
    for (std::size_t i = 0; i < rank_bound; ++i) {
        out.factors.push_back(d(i, i));
    }
    out.diagonal = std::move(d);
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

}  // namespace cy3
