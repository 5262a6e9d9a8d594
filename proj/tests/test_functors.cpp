#include <doctest.h>

#include <random>

#include "hahn/invariants.hpp"
#include "hahn/tables.hpp"

using namespace hahn;

namespace {

StandardBasic atom(BasicKind k) { return StandardBasic::make(k); }
StandardBasic atom(BasicKind k, Rational q) { return StandardBasic::make(k, q); }

Multibasic apply(Functor f, const Multibasic& m, const Multibasic& n) {
    switch (f) {
    case Functor::dual: return dual(m);
    case Functor::tensor: return tensor(m, n);
    case Functor::hom: return hom(m, n);
    case Functor::tor: return tor(m, n);
    case Functor::ext: return ext(m, n);
    }
    return {};
}

const std::vector<Rational> kPool = {Rational(1, 3), Rational(1, 2), Rational(1),
                                     Rational(3, 2), Rational(2)};

Multibasic random_multibasic(std::mt19937& rng, int max_summands = 8) {
    std::uniform_int_distribution<int> count(0, max_summands);
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<std::size_t> param(0, kPool.size() - 1);
    Multibasic m;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        BasicKind k = static_cast<BasicKind>(kind(rng));
        m.add_summand(kind_has_param(k) ? atom(k, kPool[param(rng)]) : atom(k));
    }
    return m;
}

} // namespace

TEST_CASE("dual on the printed row") {
    CHECK(dual(Multibasic(atom(BasicKind::A))) == Multibasic(atom(BasicKind::Theta)));
    CHECK(dual(Multibasic(atom(BasicKind::AModIq, Rational(1, 2)))) ==
          Multibasic(atom(BasicKind::Igt0ModIgt, Rational(1, 2))));
    CHECK(dual(Multibasic::zero()).is_zero());
    CHECK(dual(Multibasic(atom(BasicKind::F))) == Multibasic(atom(BasicKind::F)));
}

TEST_CASE("tensor examples") {
    CHECK(tensor(Multibasic(atom(BasicKind::Theta)), Multibasic(atom(BasicKind::Theta)))
              .is_zero());
    CHECK(tensor(Multibasic(atom(BasicKind::AModIq, Rational(1, 3))),
                 Multibasic(atom(BasicKind::AModIq, Rational(1, 2)))) ==
          Multibasic(atom(BasicKind::AModIq, Rational(1, 3))));
    CHECK(tensor(Multibasic(atom(BasicKind::Igt0)), Multibasic(atom(BasicKind::Phi))) ==
          Multibasic(atom(BasicKind::Theta)));
}

TEST_CASE("hom examples") {
    CHECK(hom(Multibasic(atom(BasicKind::AModIq, Rational(1, 2))),
              Multibasic(atom(BasicKind::Theta))) ==
          Multibasic(atom(BasicKind::Igt0ModIgt, Rational(1, 2))));
    CHECK(hom(Multibasic(atom(BasicKind::Theta)), Multibasic(atom(BasicKind::Theta))) ==
          Multibasic(atom(BasicKind::A)));
    CHECK(hom(Multibasic(atom(BasicKind::K)), Multibasic(atom(BasicKind::A))).is_zero());
}

TEST_CASE("tor examples") {
    CHECK(tor(Multibasic(atom(BasicKind::Theta)), Multibasic(atom(BasicKind::Theta))) ==
          Multibasic(atom(BasicKind::Theta)));
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i)
        CHECK(tor(Multibasic(atom(BasicKind::K)), random_multibasic(rng)).is_zero());
    CHECK(tor(Multibasic(atom(BasicKind::AModIq, Rational(3, 2))),
              Multibasic(atom(BasicKind::AModIq, Rational(1, 2)))) ==
          Multibasic(atom(BasicKind::AModIq, Rational(1, 2))));
}

TEST_CASE("ext examples") {
    CHECK(ext(Multibasic(atom(BasicKind::Theta)), Multibasic(atom(BasicKind::A))) ==
          Multibasic(atom(BasicKind::A)));
    CHECK(ext(Multibasic(atom(BasicKind::AModIq, Rational(1, 2))),
              Multibasic(atom(BasicKind::Igt0))) ==
          Multibasic(atom(BasicKind::Igt0ModIgt, Rational(1, 2))));
    std::mt19937 rng(6);
    for (int i = 0; i < 20; ++i)
        CHECK(ext(Multibasic(atom(BasicKind::K)), random_multibasic(rng)).is_zero());
}

TEST_CASE("higher derived functors vanish") {
    Multibasic th(atom(BasicKind::Theta));
    CHECK(higher(Functor::tor, 2, th, th).is_zero());
    CHECK(higher(Functor::ext, 3, th, th).is_zero());
    CHECK(higher(Functor::tor, 7, Multibasic(atom(BasicKind::K)),
                 Multibasic(atom(BasicKind::K)))
              .is_zero());
    CHECK_THROWS_AS(higher(Functor::tor, 1, th, th), std::invalid_argument);
    CHECK_THROWS_AS(higher(Functor::tensor, 2, th, th), std::invalid_argument);
}

TEST_CASE("table lookup hits the printed symbols") {
    Rational p(1, 3), q(1, 2); // p < q
    CHECK(tables::table_lookup(Functor::hom, atom(BasicKind::AModIq, p),
                               atom(BasicKind::AModIgt, q)) ==
          Multibasic(atom(BasicKind::Igt0ModIgt, p))); // Ypq/Igt(r) at p<q
    CHECK(tables::table_lookup(Functor::tensor, atom(BasicKind::AModIq, p),
                               atom(BasicKind::AModIgt, q)) ==
          Multibasic(atom(BasicKind::AModIq, p))); // A/Xpq at p<q
    CHECK(tables::table_lookup(Functor::ext, atom(BasicKind::AModIgt, p),
                               atom(BasicKind::AModIq, q)) ==
          Multibasic(atom(BasicKind::AModIq, p))); // A/Ir
}

TEST_CASE("formula engine reproduces every printed table cell") {
    const std::vector<std::pair<Rational, Rational>> relations = {
        {Rational(1, 3), Rational(1, 2)}, // p < q
        {Rational(1, 2), Rational(1, 2)}, // p = q
        {Rational(1, 2), Rational(1, 3)}, // p > q
    };
    for (auto [p, q] : relations) {
        for (std::size_t i = 0; i < 10; ++i) {
            StandardBasic row = tables::basic_at(i, p);
            CHECK(dual(Multibasic(row)) == tables::table_lookup(Functor::dual, row));
            for (std::size_t j = 0; j < 10; ++j) {
                StandardBasic col = tables::basic_at(j, q);
                for (Functor f :
                     {Functor::tensor, Functor::hom, Functor::tor, Functor::ext}) {
                    CAPTURE(functor_name(f));
                    CAPTURE(row.to_string());
                    CAPTURE(col.to_string());
                    CHECK(apply(f, Multibasic(row), Multibasic(col)) ==
                          tables::table_lookup(f, row, col));
                }
            }
        }
    }
}

TEST_CASE("additional parameter relations keep formula and table in agreement") {
    const std::vector<Rational> params = {Rational(1, 3), Rational(1, 2), Rational(1),
                                          Rational(3, 2)};
    for (const Rational& p : params)
        for (const Rational& q : params)
            for (std::size_t i = 0; i < 10; ++i)
                for (std::size_t j = 0; j < 10; ++j) {
                    StandardBasic row = tables::basic_at(i, p);
                    StandardBasic col = tables::basic_at(j, q);
                    for (Functor f :
                         {Functor::tensor, Functor::hom, Functor::tor, Functor::ext})
                        CHECK(apply(f, Multibasic(row), Multibasic(col)) ==
                              tables::table_lookup(f, row, col));
                }
}

TEST_CASE("dual is an involution") {
    std::mt19937 rng(21);
    for (int i = 0; i < 300; ++i) {
        Multibasic m = random_multibasic(rng);
        CHECK(dual(dual(m)) == m);
    }
}

TEST_CASE("tensor and tor are symmetric") {
    std::mt19937 rng(22);
    for (int i = 0; i < 200; ++i) {
        Multibasic m = random_multibasic(rng, 5);
        Multibasic n = random_multibasic(rng, 5);
        CHECK(tensor(m, n) == tensor(n, m));
        CHECK(tor(m, n) == tor(n, m));
    }
}

TEST_CASE("duality swaps flat and injective") {
    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        Multibasic m = random_multibasic(rng);
        CHECK(is_injective(m) == is_flat(dual(m)));
        CHECK(is_flat(m) == is_injective(dual(m)));
    }
}

TEST_CASE("ext is the dual of tor against the dual") {
    std::mt19937 rng(24);
    for (int i = 0; i < 200; ++i) {
        Multibasic m = random_multibasic(rng, 5);
        Multibasic n = random_multibasic(rng, 5);
        CHECK(ext(m, n) == dual(tor(m, dual(n))));
    }
}

TEST_CASE("quotient by small torsion dualizes to strict scaling") {
    // D(M / ann(Igt(0), M)) = Igt(0).DM
    std::mt19937 rng(25);
    auto quotient_by_socle = [](const Multibasic& m) {
        // summandwise (U/V) / ann(Igt0, U/V) = U / (U ∩ (V : Igt0))
        Multibasic out;
        for (const StandardBasic& b : m.summands()) {
            KSubmodule mid = lattice_min(b.numerator(),
                                         colon(b.denominator(), KSubmodule::gt(Rational(0))));
            if (auto s = normalize_subquotient(b.numerator(), mid))
                out.add_summand(*s);
        }
        return out;
    };
    for (int i = 0; i < 200; ++i) {
        Multibasic m = random_multibasic(rng);
        CHECK(dual(quotient_by_socle(m)) == scale(Rational(0), dual(m), /*strict=*/true));
    }
}

TEST_CASE("residue-field pairings are finite sums of the residue field") {
    std::mt19937 rng(26);
    Multibasic f(atom(BasicKind::F));
    for (int i = 0; i < 200; ++i) {
        Multibasic m = random_multibasic(rng);
        for (const Multibasic& result :
             {tensor(f, m), tor(f, m), hom(f, m), hom(m, f)})
            for (const StandardBasic& b : result.summands())
                CHECK(b.kind() == BasicKind::F);
    }
}

TEST_CASE("dual agrees with hom into the dualizing module") {
    std::mt19937 rng(27);
    Multibasic th(atom(BasicKind::Theta));
    for (int i = 0; i < 200; ++i) {
        Multibasic m = random_multibasic(rng);
        CHECK(dual(m) == hom(m, th));
    }
}
