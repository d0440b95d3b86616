#include "cy3/errors.hpp"
#include "cy3/forms.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace cy3;

namespace {

Basis make_basis(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("B" + std::to_string(i));
    }
    return Basis(labels);
}

// Sparse random symmetric form; also returns the dense tensor as an oracle.
TrilinearForm random_form(std::mt19937& rng, const Basis& basis, int entries, int bound,
                          std::vector<long>& dense) {
    const std::size_t n = basis.size();
    dense.assign(n * n * n, 0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> value(-bound, bound);
    TrilinearForm f(basis);
    std::set<std::array<std::size_t, 3>> used;
    for (int e = 0; e < entries; ++e) {
        std::array<std::size_t, 3> k = {pick(rng), pick(rng), pick(rng)};
        std::sort(k.begin(), k.end());
        if (!used.insert(k).second) {
            continue;
        }
        const int v = value(rng);
        const auto& l = basis.labels();
        f.insert(l[k[0]], l[k[1]], l[k[2]], v);
        std::array<std::size_t, 3> p = k;
        do {
            dense[(p[0] * n + p[1]) * n + p[2]] = v;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return f;
}

long dense_triple(const std::vector<long>& dense, std::size_t n, const std::vector<long>& a,
                  const std::vector<long>& b, const std::vector<long>& c) {
    long total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                total += dense[(i * n + j) * n + k] * a[i] * b[j] * c[k];
    return total;
}

DivisorExpr to_divisor(const Basis& basis, const std::vector<long>& v) {
    DivisorExpr d(basis);
    for (std::size_t i = 0; i < v.size(); ++i) {
        d.add(basis.labels()[i], MultiPoly(v[i]));
    }
    return d;
}

std::vector<long> random_vector(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> value(-bound, bound);
    std::vector<long> v(n);
    for (auto& x : v) x = value(rng);
    return v;
}

}  // namespace

TEST_CASE("basis and divisor expressions") {
    const Basis basis({"M0", "S0", "A1"});
    CHECK(basis.require("S0") == 1);
    CHECK_FALSE(basis.contains("Q"));
    CHECK_THROWS_AS(basis.require("Q"), ArgumentError);
    CHECK_THROWS_AS(Basis({"A", "A"}), ArgumentError);

    const DivisorExpr d = parse_divisor(basis, "3*M0 + a*S0 - (b + 1)*A1 + S0");
    CHECK(d.coefficient("M0") == MultiPoly(3));
    CHECK(d.coefficient("S0") == parse_poly("a + 1"));
    CHECK(d.parameters() == std::vector<std::string>{"a", "b"});
    CHECK(d.to_string() == "3*M0 + (a + 1)*S0 + (-b - 1)*A1");
    const auto [constant, parametric] = split_constant_part(d);
    CHECK(constant == parse_divisor(basis, "3*M0 + S0 - A1"));
    CHECK(parametric == parse_divisor(basis, "a*S0 - b*A1"));
    CHECK((d - d).is_zero());
    CHECK(d.substitute({{"a", MultiPoly(2)}, {"b", MultiPoly(0)}}) ==
          parse_divisor(basis, "3*M0 + 3*S0 - A1"));
    CHECK_THROWS_AS(parse_divisor(basis, "M0*S0"), LoadError);
    CHECK_THROWS_AS(parse_divisor(basis, "M0 + 1"), LoadError);
    CHECK_THROWS_AS(parse_divisor(basis, "M0^2"), LoadError);
    CHECK_THROWS_AS(parse_divisor(basis, "Q"), LoadError);
}

TEST_CASE("trilinear form storage") {
    const Basis basis({"A", "B", "C"});
    TrilinearForm f(basis);
    f.insert("C", "A", "B", 5);
    CHECK(f("A", "B", "C") == 5);
    CHECK(f("B", "C", "A") == 5);
    CHECK(f("A", "A", "A") == 0);
    f.insert("B", "A", "C", 5);  // same triple, same value
    CHECK_THROWS_AS(f.insert("A", "C", "B", 4), ArgumentError);
    CHECK_THROWS_AS(f.insert("A", "A", "Z", 1), ArgumentError);
}

TEST_CASE("triple_product examples") {
    const Basis basis({"L1", "L2", "L3"});
    TrilinearForm f(basis);
    f.insert("L1", "L2", "L3", 9);
    const DivisorExpr h = parse_divisor(basis, "x*L1 + y*L2 + z*L3");
    CHECK(cube(f, h) == parse_poly("54*x*y*z"));
    CHECK(triple_product(f, DivisorExpr::label(basis, "L1"), DivisorExpr::label(basis, "L2"),
                         DivisorExpr::label(basis, "L3")) == MultiPoly(9));
    const Basis other({"L1", "L2", "L3"});
    const Basis different({"L1", "L2", "L4"});
    CHECK(cube(f, parse_divisor(other, "L1 + L2 + L3")) == MultiPoly(54));
    CHECK_THROWS_AS(cube(f, DivisorExpr::label(different, "L4")), StructuralError);
}

TEST_CASE("property: symmetry and multilinearity against a dense oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        const Basis basis = make_basis(n);
        std::vector<long> dense;
        const TrilinearForm f = random_form(rng, basis, 6, 5, dense);
        const auto a = random_vector(rng, n, 4);
        const auto b = random_vector(rng, n, 4);
        const auto c = random_vector(rng, n, 4);
        const auto d = random_vector(rng, n, 4);
        const DivisorExpr da = to_divisor(basis, a);
        const DivisorExpr db = to_divisor(basis, b);
        const DivisorExpr dc = to_divisor(basis, c);
        const DivisorExpr dd = to_divisor(basis, d);
        const MultiPoly abc = triple_product(f, da, db, dc);
        REQUIRE(abc == MultiPoly(dense_triple(dense, n, a, b, c)));
        CHECK(triple_product(f, da, dc, db) == abc);
        CHECK(triple_product(f, db, da, dc) == abc);
        CHECK(triple_product(f, db, dc, da) == abc);
        CHECK(triple_product(f, dc, da, db) == abc);
        CHECK(triple_product(f, dc, db, da) == abc);
        CHECK(triple_product(f, da + dd, db, dc) == abc + triple_product(f, dd, db, dc));
        CHECK(triple_product(f, MultiPoly(3) * da, db, dc) == MultiPoly(3) * abc);
    }
}

TEST_CASE("cube_split examples and the weighted identity") {
    const Basis basis({"P", "Q"});
    TrilinearForm f(basis);
    f.insert("P", "P", "Q", 1);
    const DivisorExpr p = DivisorExpr::label(basis, "P");
    const DivisorExpr l = parse_divisor(basis, "t*Q");
    const CubeSplit s = cube_split(f, p, l);
    CHECK(s.p3 == MultiPoly(0));
    CHECK(s.p2l == parse_poly("t"));
    CHECK(s.pl2 == MultiPoly(0));
    CHECK(s.l3 == MultiPoly(0));
    CHECK(s.paper_sum == parse_poly("t"));
    CHECK(s.standard_sum == parse_poly("3*t"));
    CHECK_FALSE(s.sums_agree());

    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const Basis b = make_basis(n);
        std::vector<long> dense;
        const TrilinearForm g = random_form(rng, b, 5, 4, dense);
        DivisorExpr pp(b);
        DivisorExpr ll(b);
        pp.add(b.labels()[0], MultiPoly(static_cast<long>(trial % 7) - 3));
        ll.add(b.labels()[1], MultiPoly::variable("u"));
        ll.add(b.labels()[n - 1], MultiPoly::variable("v"));
        const CubeSplit cs = cube_split(g, pp, ll);
        CHECK(cs.standard_sum == cube(g, pp + ll));
        CHECK(cs.standard_sum == cs.p3 + MultiPoly(3) * cs.p2l + MultiPoly(3) * cs.pl2 + cs.l3);
        CHECK(cs.paper_sum == cs.p3 + cs.p2l + cs.pl2 + cs.l3);
    }
}

TEST_CASE("pair is additive") {
    const Basis basis({"A", "B"});
    LinearForm c2(basis);
    c2.set("A", 12);
    c2.set("B", 18);
    const DivisorExpr d = parse_divisor(basis, "a*A - 2*B");
    const DivisorExpr e = parse_divisor(basis, "A + b*B");
    CHECK(pair(c2, d) == parse_poly("12*a - 36"));
    CHECK(pair(c2, d + e) == pair(c2, d) + pair(c2, e));
    CHECK(pair(c2, DivisorExpr(basis)).is_zero());
}

TEST_CASE("linear_divisibility examples") {
    const Basis basis({"A", "B", "C"});
    LinearForm lf(basis);
    lf.set("A", -6);
    lf.set("B", 24);
    lf.set("C", -4);
    const ScaledDivisor a{"A", DivisorExpr::label(basis, "A"), 1};
    const ScaledDivisor ab{"(A+B)/3", parse_divisor(basis, "A + B"), 3};
    const ScaledDivisor c{"C", DivisorExpr::label(basis, "C"), 1};
    const ScaledDivisor bad{"A/4", DivisorExpr::label(basis, "A"), 4};

    const auto ok = linear_divisibility(lf, {a, ab}, 6);
    CHECK(ok.divisible);
    REQUIRE(ok.witnesses.size() == 2);
    CHECK(ok.witnesses[1].value == 6);
    CHECK_FALSE(linear_divisibility(lf, {a, ab}, 4).divisible);

    const auto fails = linear_divisibility(lf, {a, c}, 6);
    CHECK_FALSE(fails.divisible);
    CHECK(fails.witnesses[1].generator == "C");
    CHECK_FALSE(fails.witnesses[1].divisible);

    CHECK(linear_divisibility(lf, {}, 6).divisible);
    try {
        (void)linear_divisibility(lf, {bad}, 6);
        FAIL("expected IntegralityError");
    } catch (const IntegralityError& e) {
        CHECK(std::string(e.what()).find("A/4") != std::string::npos);
    }
    CHECK_THROWS_AS(linear_divisibility(lf, {a}, 0), ArgumentError);
    const ScaledDivisor symbolic{"xA", parse_divisor(basis, "x*A"), 1};
    CHECK_THROWS_AS(linear_divisibility(lf, {symbolic}, 6), ArgumentError);
}

TEST_CASE("cubic_divisibility_fermat examples") {
    const Basis one({"H"});
    TrilinearForm f8(one);
    f8.insert("H", "H", "H", 8);
    TrilinearForm f9(one);
    f9.insert("H", "H", "H", 9);
    CHECK_FALSE(cubic_divisibility_fermat(f8, 3));
    CHECK(cubic_divisibility_fermat(f9, 3));
    CHECK(generic_cubic(f8) == parse_poly("8*H^3"));
    CHECK_THROWS_AS(cubic_divisibility_fermat(f9, 9), ArgumentError);

    // x*y*z with value 1: D^3 = 6xyz, divisible by 3 and 2 but not 5.
    const Basis three({"X", "Y", "Z"});
    TrilinearForm g(three);
    g.insert("X", "Y", "Z", 1);
    CHECK(cubic_divisibility_fermat(g, 2));
    CHECK(cubic_divisibility_fermat(g, 3));
    CHECK_FALSE(cubic_divisibility_fermat(g, 5));
}

TEST_CASE("property: Fermat tester matches exhaustive evaluation on the prime field") {
    std::mt19937 rng(29);
    for (long prime : {2L, 3L, 5L}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
            const Basis basis = make_basis(n);
            std::vector<long> dense;
            TrilinearForm f = random_form(rng, basis, 1 + trial % 4, 6, dense);
            if (trial % 3 == 0) {
                // multiples of prime hit the divisible branch regularly
                TrilinearForm scaled(basis);
                for (const auto& [k, v] : f.entries()) {
                    const auto& l = basis.labels();
                    scaled.insert(l[k[0]], l[k[1]], l[k[2]], v * prime);
                }
                for (auto& v : dense) v *= prime;
                f = scaled;
            }
            bool all_zero = true;
            std::vector<long> point(n, 0);
            for (;;) {
                if (dense_triple(dense, n, point, point, point) % prime != 0) {
                    all_zero = false;
                    break;
                }
                std::size_t i = 0;
                while (i < n && ++point[i] == prime) {
                    point[i++] = 0;
                }
                if (i == n) break;
            }
            CHECK(cubic_divisibility_fermat(f, prime) == all_zero);
        }
    }
}
