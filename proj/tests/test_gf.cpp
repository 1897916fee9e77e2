#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <ffpd/gf.hpp>

#include <random>
#include <set>

using namespace ffpd;

namespace {

std::vector<Value> values(const std::vector<Elem>& es) {
    std::vector<Value> out;
    for (const auto& e : es) out.push_back(e.value());
    return out;
}

// Monic polynomial (low-degree-first) divisible by some monic polynomial of
// degree 1..deg/2, by exhaustive trial division.
bool reducible_by_trial_division(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const auto deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint64_t> g(d + 1, 0);
            auto t = idx;
            for (std::size_t i = 0; i < d; ++i) { g[i] = t % p; t /= p; }
            g[d] = 1;
            auto r = f;
            for (std::size_t top = deg; top >= d; --top) {
                auto c = r[top];
                if (c)
                    for (std::size_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + p * p - c * g[i] % p) % p;
                if (top == d) break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
            if (zero) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("field construction", "[gf]") {
    auto f2 = Field::make(2);
    CHECK(f2.q() == 2);
    CHECK(f2.literal() == "GF(2)");

    auto f7 = Field::make(7);
    CHECK(f7.p() == 7);
    CHECK(f7.k() == 1);

    auto f9 = Field::make(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(f9.literal() == "GF(3^2);modulus=1,0,1");

    CHECK(Field::make(2, 2).modulus() == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(Field::make(2, 3).modulus() == std::vector<std::uint64_t>{1, 0, 1, 1});
}

TEST_CASE("field construction errors", "[gf]") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("no error thrown");
        return ErrorKind::ParseError;
    };
    CHECK(kind_of([] { Field::make(4); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { Field::make(1); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { Field::make(3, 2, std::vector<std::int64_t>{0, 0, 1}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { Field::make(3, 2, std::vector<std::int64_t>{2, 0, 1}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { Field::make(3, 2, std::vector<std::int64_t>{1, 1}); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { Field::make(3, 2, std::vector<std::int64_t>{1, 0, 2}); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { Field::make(3, 0); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { Field::make(3, 17); }) == ErrorKind::UnsupportedField);
    CHECK(kind_of([] { Field::make(2147483659ull); }) == ErrorKind::UnsupportedField);
}

TEST_CASE("explicit modulus is honoured", "[gf]") {
    auto f = Field::make(3, 2, std::vector<std::int64_t>{2, 1, 1}); // x^2 + x + 2
    auto x = f.from_coeffs(std::vector<std::int64_t>{0, 1});
    // x^2 = -x - 2 = 2x + 1
    CHECK((x * x).coeffs() == std::vector<std::uint64_t>{1, 2});
    CHECK_FALSE(f == Field::make(3, 2));
    CHECK(Field::make(3, 2) == Field::make(3, 2, std::vector<std::int64_t>{1, 0, 1}));
}

TEST_CASE("default modulus is the first irreducible in low-degree-first order", "[gf]") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 6}, {3, 4}}) {
        auto f = Field::make(p, k);
        const auto& m = f.modulus();
        CHECK_FALSE(reducible_by_trial_division(m, p));
        // Every earlier candidate (c0 most significant) is reducible.
        std::vector<std::uint64_t> cand(k + 1, 0);
        cand[k] = 1;
        while (cand != m) {
            CHECK(reducible_by_trial_division(cand, p));
            std::size_t i = k;
            while (i-- > 0) {
                if (++cand[i] < p) break;
                cand[i] = 0;
            }
        }
    }
}

TEST_CASE("irreducibility test agrees with trial division", "[gf]") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {2, 5}, {5, 2}}) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint64_t> m(k + 1, 0);
            auto t = idx;
            for (unsigned i = 0; i < k; ++i) { m[i] = t % p; t /= p; }
            m[k] = 1;
            CHECK(detail::is_irreducible(m, p) == !reducible_by_trial_division(m, p));
        }
    }
}

TEST_CASE("arithmetic examples", "[gf]") {
    auto f7 = Field::make(7);
    CHECK(f7.from_int(2).inv() == f7.from_int(4));
    auto f3 = Field::make(3);
    CHECK(f3.from_int(2) + f3.from_int(2) == f3.from_int(1));
    auto f9 = Field::make(3, 2);
    auto x = f9.from_coeffs(std::vector<std::int64_t>{0, 1});
    CHECK(x * x == f9.from_int(2));
    CHECK(f7.from_int(3).pow(-1) == f7.from_int(5));
    CHECK(f7.from_int(3).pow(6) == f7.one());
    CHECK(f7.from_int(-1) == f7.from_int(6));
    CHECK(f9.from_int(0).pow(0) == f9.one());
}

TEST_CASE("arithmetic errors", "[gf]") {
    auto f5 = Field::make(5);
    auto f7 = Field::make(7);
    CHECK_THROWS_MATCHES(f5.one() + f7.one(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::FieldMismatch;
                         }));
    CHECK_THROWS_MATCHES(f5.zero().inv(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::DivisionByZero;
                         }));
    CHECK_THROWS_AS(f5.at(5), Error);
}

TEST_CASE("field axioms hold on random triples", "[gf][property]") {
    std::mt19937_64 rng(7);
    // F_{5^7} and F_{65521^2} exceed the log-table limit and use schoolbook multiplication.
    for (auto f : {Field::make(2, 3), Field::make(3, 2), Field::make(5, 3), Field::make(2, 8), Field::make(3, 5),
                   Field::make(2, 16), Field::make(5, 7), Field::make(65521, 2), Field::make(1000003), Field::make(2147483647ull)}) {
        std::uniform_int_distribution<Value> dist(0, f.q() - 1);
        for (int t = 0; t < 300; ++t) {
            Elem a(f, dist(rng)), b(f, dist(rng)), c(f, dist(rng));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b - b == a);
            REQUIRE(a + (-a) == f.zero());
            if (!a.is_zero()) {
                REQUIRE(a * a.inv() == f.one());
                REQUIRE(a.pow(static_cast<std::int64_t>(f.q() - 1)) == f.one());
            }
        }
    }
}

TEST_CASE("positivity examples", "[gf]") {
    auto f3 = Field::make(3), f5 = Field::make(5), f7 = Field::make(7), f2 = Field::make(2);
    CHECK_FALSE(is_positive(f3.from_int(2)));
    CHECK(is_positive(f7.from_int(2)));
    CHECK(is_positive(f5.from_int(4)));
    CHECK_FALSE(is_positive(f7.zero()));
    CHECK(values(positives(f5)) == std::vector<Value>{1, 4});
    CHECK(values(positives(f2)) == std::vector<Value>{1});
    CHECK(values(positives(f7)) == std::vector<Value>{1, 2, 4});
}

TEST_CASE("positivity matches squaring for every field up to 121", "[gf][property]") {
    for (auto [p, k] : oracle::prime_powers_upto(121)) {
        auto f = Field::make(p, k);
        const auto sq = oracle::squares(f);
        for (Value v = 0; v < f.q(); ++v) REQUIRE(is_positive(f, v) == sq.contains(v));
        const auto expected = p == 2 ? f.q() - 1 : (f.q() - 1) / 2;
        REQUIRE(positives(f).size() == expected);
    }
}

TEST_CASE("legendre symbol", "[gf]") {
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(0, 5) == 0);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(14, 7) == 0);
    for (auto bad : {2, 9, 1, 0, -3}) CHECK_THROWS_AS(legendre(1, bad), Error);
}

TEST_CASE("legendre agrees with squares and Euler's criterion", "[gf][property]") {
    for (std::int64_t p = 3; p <= 100; p += 2) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        std::set<std::int64_t> sq;
        for (std::int64_t x = 1; x < p; ++x) sq.insert(x * x % p);
        for (std::int64_t a = -p; a < 2 * p; ++a) {
            auto r = ((a % p) + p) % p;
            const int expected = r == 0 ? 0 : (sq.contains(r) ? 1 : -1);
            REQUIRE(legendre(a, p) == expected);
            if (r) {
                auto e = detail::mod_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2), p);
                REQUIRE((e == 1) == (expected == 1));
            }
        }
        // Whether -1 is a square depends only on p mod 4.
        REQUIRE(legendre(-1, p) == (p % 4 == 1 ? 1 : -1));
    }
}

TEST_CASE("legendre is multiplicative", "[gf][property]") {
    for (std::int64_t p = 3; p <= 50; p += 2) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        for (std::int64_t a = 1; a < p; ++a)
            for (std::int64_t b = 1; b < p; ++b) REQUIRE(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("square roots", "[gf]") {
    auto f5 = Field::make(5), f7 = Field::make(7);
    CHECK(values(ffpd::sqrt(f5.from_int(4))) == std::vector<Value>{2, 3});
    CHECK(values(ffpd::sqrt(f7.from_int(2))) == std::vector<Value>{3, 4});
    CHECK(values(ffpd::sqrt(f7.zero())) == std::vector<Value>{0});
    CHECK(ffpd::sqrt(f5.from_int(2)).empty());
    CHECK(ffpd::sqrt(f7.from_int(3)).empty());
    auto f8 = Field::make(2, 3);
    for (Value v = 0; v < 8; ++v) {
        auto r = ffpd::sqrt(Elem(f8, v));
        REQUIRE(r.size() == 1);
        REQUIRE(r[0] * r[0] == Elem(f8, v));
    }
}

TEST_CASE("positive square roots", "[gf]") {
    auto f3 = Field::make(3), f5 = Field::make(5), f7 = Field::make(7);
    CHECK_FALSE(positive_sqrt(f5.from_int(4)).has_value());
    CHECK(positive_sqrt(f3.from_int(1)) == f3.from_int(1));
    CHECK(positive_sqrt(f7.from_int(2)) == f7.from_int(4));
    CHECK_FALSE(positive_sqrt(f7.zero()).has_value());
    CHECK_FALSE(positive_sqrt(f7.from_int(3)).has_value());
}

TEST_CASE("square roots are sound and complete up to 121", "[gf][property]") {
    for (auto [p, k] : oracle::prime_powers_upto(121)) {
        auto f = Field::make(p, k);
        std::map<Value, std::vector<Value>> roots;
        for (Value v = 0; v < f.q(); ++v) roots[f.mul(v, v)].push_back(v);
        for (Value x = 0; x < f.q(); ++x) {
            auto got = values(ffpd::sqrt(Elem(f, x)));
            REQUIRE(got == roots[x]);
            auto ps = positive_sqrt(Elem(f, x));
            if (ps) {
                REQUIRE(is_positive(*ps));
                REQUIRE(*ps * *ps == Elem(f, x));
            }
        }
    }
}

TEST_CASE("definite field classification", "[gf]") {
    CHECK(is_definite(Field::make(2)));
    CHECK_FALSE(is_definite(Field::make(5)));
    CHECK_FALSE(is_definite(Field::make(3, 2)));
    CHECK(is_definite(Field::make(3, 3)));
    CHECK(is_definite(Field::make(3)));
    CHECK(is_definite(Field::make(7)));
    CHECK(is_definite(Field::make(2, 4)));
    CHECK_FALSE(oracle::definite_by_enumeration(Field::make(3, 2)));
    CHECK(oracle::definite_by_enumeration(Field::make(3, 3)));
}

TEST_CASE("positive_sqrt is total and injective on definite fields up to 729", "[gf][property]") {
    for (auto [p, k] : oracle::prime_powers_upto(729)) {
        auto f = Field::make(p, k);
        if (!is_definite(f)) continue;
        std::set<Value> images;
        for (const auto& x : positives(f)) {
            auto r = positive_sqrt(x);
            REQUIRE(r.has_value());
            REQUIRE(images.insert(r->value()).second);
        }
    }
}

TEST_CASE("generators", "[gf]") {
    CHECK(generator(Field::make(2)) == Field::make(2).one());
    CHECK(generator(Field::make(7)).value() == 3);
    CHECK(generator(Field::make(3)).value() == 2);
    for (auto [p, k] : oracle::prime_powers_upto(256)) {
        auto f = Field::make(p, k);
        auto g = generator(f);
        std::set<Value> seen;
        Value x = 1;
        for (std::uint64_t i = 0; i + 1 < f.q(); ++i) {
            seen.insert(x);
            x = f.mul(x, g.value());
        }
        REQUIRE(seen.size() == f.q() - 1);
        // Squares of the generator's even powers are exactly the positives.
        std::set<Value> even;
        const auto tmax = p == 2 ? f.q() - 1 : (f.q() - 1) / 2;
        for (std::uint64_t t = 1; t <= tmax; ++t) even.insert(g.pow(static_cast<std::int64_t>(2 * t)).value());
        REQUIRE(even == oracle::squares(f));
    }
}

TEST_CASE("field and element literals", "[gf]") {
    CHECK(parse_field("GF(7)") == Field::make(7));
    CHECK(parse_field(" GF(3^2) ") == Field::make(3, 2));
    CHECK(parse_field("GF(9)") == Field::make(3, 2));
    CHECK(parse_field("5") == Field::make(5));
    CHECK(parse_field("GF(3^2);modulus=2,1,1") == Field::make(3, 2, std::vector<std::int64_t>{2, 1, 1}));
    for (auto f : {Field::make(2), Field::make(3, 2, std::vector<std::int64_t>{2, 1, 1}), Field::make(2, 5)}) {
        CHECK(parse_field(f.literal()) == f);
    }
    CHECK_THROWS_AS(parse_field("GF(6)"), Error);
    CHECK_THROWS_AS(parse_field("GF(x)"), Error);
    CHECK_THROWS_AS(parse_field("GF(7;modulus"), Error);
    CHECK_THROWS_AS(parse_field("GF(7);mod=1"), Error);

    auto f9 = Field::make(3, 2);
    auto e = parse_elem(f9, "[1,2]");
    CHECK(e.coeffs() == std::vector<std::uint64_t>{1, 2});
    CHECK(e.to_string() == "[1,2]");
    CHECK(parse_elem(f9, e.to_string()) == e);
    CHECK(parse_elem(Field::make(7), "-1").value() == 6);
    CHECK(Field::make(7).from_int(5).to_string() == "5");
    CHECK_THROWS_AS(parse_elem(f9, "[1,2,0]"), Error);
    CHECK_THROWS_AS(parse_elem(f9, "abc"), Error);
}
