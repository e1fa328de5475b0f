#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qshuffle/scalar.hpp"

using namespace qshuffle;

namespace {

// Independent schoolbook convolution over (exponent, coefficient) pairs,
// kept free of LaurentPoly internals.
std::vector<std::pair<int, Rational>> convolve(
    const std::vector<std::pair<int, Rational>>& a,
    const std::vector<std::pair<int, Rational>>& b) {
    std::vector<std::pair<int, Rational>> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            bool found = false;
            for (auto& [e, c] : out)
                if (e == ea + eb) {
                    c += ca * cb;
                    found = true;
                }
            if (!found) out.emplace_back(ea + eb, ca * cb);
        }
    return out;
}

LaurentPoly from_pairs(const std::vector<std::pair<int, Rational>>& ps) {
    LaurentPoly p;
    for (const auto& [e, c] : ps) p += LaurentPoly::term(e, c);
    return p;
}

Scalar random_scalar(std::mt19937& rng, bool allow_fraction = true) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 3);
    auto poly = [&] {
        LaurentPoly p;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) p += LaurentPoly::term(exp(rng), coeff(rng));
        return p;
    };
    LaurentPoly num = poly();
    if (allow_fraction && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        LaurentPoly den = poly();
        if (den.is_zero()) den = LaurentPoly(1);
        return Scalar(num, den);
    }
    return Scalar(num);
}

} // namespace

TEST_CASE("scalar parsing of literal forms") {
    CHECK(parse_scalar("q^-1") == Scalar::q_pow(-1));
    CHECK(parse_scalar("1 - q^-2") ==
          Scalar(LaurentPoly(1) - LaurentPoly::term(-2, 1)));
    CHECK(parse_scalar("0") == Scalar());
    CHECK(parse_scalar("0").is_zero());
    CHECK(parse_scalar("-3/4") == Scalar(Rational(-3, 4)));
    CHECK(parse_scalar("(1+q)*(1-q)") == parse_scalar("1-q^2"));
    CHECK(parse_scalar("3/(1+q)") == Scalar(LaurentPoly(3), LaurentPoly(1) + LaurentPoly::q()));
}

TEST_CASE("scalar parse errors carry positions") {
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("q^"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1+q"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 + * 2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("e1"), ParseError);
    try {
        parse_scalar("1 + #");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("scalar arithmetic matches independent expansion") {
    // (1+q)(1+q+q^2) against a schoolbook convolution oracle.
    Scalar lhs = parse_scalar("(1+q)*(1+q+q^2)");
    auto expected = convolve({{0, 1}, {1, 1}}, {{0, 1}, {1, 1}, {2, 1}});
    CHECK(lhs == Scalar(from_pairs(expected)));
    CHECK(lhs == parse_scalar("1 + 2*q + 2*q^2 + q^3"));

    // (q^2-1)/(q-1) reduces to q+1; cross-multiplication is the oracle.
    Scalar ratio = parse_scalar("(q^2-1)/(q-1)");
    CHECK(ratio == parse_scalar("q+1"));
    CHECK(ratio.kind() == Scalar::Kind::laurent);
    CHECK(parse_scalar("q+1") * parse_scalar("q-1") == parse_scalar("q^2-1"));

    Scalar x = parse_scalar("(1-q^3)/(2+q)");
    CHECK(x + Scalar() == x);
    CHECK(x * Scalar(1) == x);
}

TEST_CASE("scalar division errors") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(), std::domain_error);
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("specialization at rational points") {
    CHECK(parse_scalar("1+q").specialize(2) == 3);
    CHECK(parse_scalar("q^-2").specialize(2) == Rational(1, 4));
    // Reduction happens at construction, so the removable pole at q=1 is gone.
    CHECK(parse_scalar("(q^2-1)/(q-1)").specialize(1) == 2);
    CHECK_THROWS_AS(parse_scalar("1/(q-1)").specialize(1), std::domain_error);
    CHECK_THROWS_AS(parse_scalar("q^-1").specialize(0), std::domain_error);
}

TEST_CASE("kind demotion is automatic") {
    CHECK(parse_scalar("3").kind() == Scalar::Kind::rational);
    CHECK(parse_scalar("1+q").kind() == Scalar::Kind::laurent);
    CHECK(parse_scalar("1/(1+q)").kind() == Scalar::Kind::fraction);
    // (1+q)/(1+q) demotes all the way to a rational constant.
    Scalar s = Scalar(LaurentPoly(1) + LaurentPoly::q(), LaurentPoly(1) + LaurentPoly::q());
    CHECK(s.kind() == Scalar::Kind::rational);
    CHECK(s.is_one());
    // q/(q) demotes too; q^-1*(q^2) stays a Laurent monomial.
    CHECK(Scalar(LaurentPoly::q(), LaurentPoly::q()).is_one());
    CHECK((Scalar::q_pow(-1) * Scalar::q_pow(2)) == Scalar::q());
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK((b / a) * a == b);
        }
        CHECK(a - a == Scalar());
    }
}

TEST_CASE("format/parse round trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = random_scalar(rng);
        std::string s = a.str();
        Scalar b = parse_scalar(s);
        CHECK(a == b);
        CHECK(b.str() == s);
    }
    CHECK(parse_scalar("1-q^-2").str() == "1-q^-2");
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(99);
    Rational q0(2);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        bool defined = true;
        Rational va, vb;
        try {
            va = a.specialize(q0);
            vb = b.specialize(q0);
        } catch (const std::domain_error&) {
            defined = false;
        }
        if (!defined) continue;
        CHECK((a * b).specialize(q0) == va * vb);
        CHECK((a + b).specialize(q0) == va + vb);
    }
}
