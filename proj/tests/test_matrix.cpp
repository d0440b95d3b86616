#include "cy3/errors.hpp"
#include "cy3/matrix.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cy3;

namespace {

Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0, kk = 0; k < n; ++k) {
                if (k != c) {
                    minor(r - 1, kk++) = m(r, k);
                }
            }
        }
        total += (c % 2 == 0 ? 1 : -1) * m(0, c) * cofactor_det(minor);
    }
    return total;
}

// d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors (square input only).
std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Integer> out;
    Integer previous = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer g = 0;
        std::vector<bool> rows(n, false);
        std::fill(rows.begin(), rows.begin() + static_cast<long>(k), true);
        do {
            std::vector<bool> cols(n, false);
            std::fill(cols.begin(), cols.begin() + static_cast<long>(k), true);
            do {
                IntMatrix minor(k, k);
                for (std::size_t r = 0, rr = 0; r < n; ++r) {
                    if (!rows[r]) continue;
                    for (std::size_t c = 0, cc = 0; c < n; ++c) {
                        if (cols[c]) minor(rr, cc++) = m(r, c);
                    }
                    ++rr;
                }
                g = gcd(g, cofactor_det(minor));
            } while (std::prev_permutation(cols.begin(), cols.end()));
        } while (std::prev_permutation(rows.begin(), rows.end()));
        out.push_back(previous == 0 ? Integer(0) : Integer(g / previous));
        previous = g;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = entry(rng);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("det_int examples") {
    CHECK(det_int(IntMatrix::identity(4)) == 1);
    CHECK(det_int(IntMatrix{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 3}, {1, 1, 3, 0}}) == -3);
    CHECK(det_int(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK(det_int(IntMatrix{{0, 0}, {0, 5}}) == 0);
    CHECK_THROWS_AS(det_int(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("property: det_int agrees with cofactor expansion") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const IntMatrix m = random_matrix(rng, n, n, 3);
        REQUIRE(det_int(m) == cofactor_det(m));
    }
}

TEST_CASE("smith_normal_form examples") {
    CHECK(smith_normal_form(IntMatrix::identity(3)).factors == std::vector<Integer>{1, 1, 1});

    const IntMatrix gram{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 3}, {1, 1, 3, 0}};
    const SmithForm g = smith_normal_form(gram);
    CHECK(g.factors == std::vector<Integer>{1, 1, 1, 3});
    CHECK(g.factors == determinantal_divisors(gram));
    CHECK(g.left * gram * g.right == g.diagonal);

    const IntMatrix small{{2, 4}, {6, 8}};
    CHECK(smith_normal_form(small).factors == std::vector<Integer>{2, 4});
    CHECK(determinantal_divisors(small) == std::vector<Integer>{2, 4});

    const IntMatrix wide{{2, 4, 6}, {4, 8, 12}};
    const SmithForm w = smith_normal_form(wide);
    CHECK(w.factors == std::vector<Integer>{2, 0});
    CHECK(w.left * wide * w.right == w.diagonal);
}

TEST_CASE("property: SNF transforms reproduce the diagonal; factors divide") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + static_cast<std::size_t>(trial % 4);
        const std::size_t cols = 1 + static_cast<std::size_t>((trial / 4) % 4);
        const IntMatrix m = random_matrix(rng, rows, cols, 6);
        const SmithForm s = smith_normal_form(m);
        REQUIRE(s.left * m * s.right == s.diagonal);
        CHECK(std::abs(det_int(s.left).get_si()) == 1);
        CHECK(std::abs(det_int(s.right).get_si()) == 1);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (r != c) {
                    CHECK(s.diagonal(r, c) == 0);
                }
            }
        }
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
            CHECK(divides(s.factors[i], s.factors[i + 1]));
        }
        if (rows == cols) {
            Integer product = 1;
            for (const auto& f : s.factors) {
                product *= f;
            }
            CHECK(product == abs(det_int(m)));
            if (rows <= 3) {
                CHECK(s.factors == determinantal_divisors(m));
            }
        }
    }
}
