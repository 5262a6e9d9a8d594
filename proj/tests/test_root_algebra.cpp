#include <doctest.h>

#include <random>

#include "hahn/root_algebra.hpp"

using namespace hahn;

namespace {

StandardBasic atom(BasicKind k) { return StandardBasic::make(k); }
StandardBasic atom(BasicKind k, Rational q) { return StandardBasic::make(k, q); }

std::vector<StandardBasic> truncated_basics() {
    std::vector<StandardBasic> out = {atom(BasicKind::F)};
    for (Rational q : {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)})
        for (BasicKind k : {BasicKind::AModIq, BasicKind::AModIgt, BasicKind::Igt0ModIq,
                            BasicKind::Igt0ModIgt})
            out.push_back(atom(k, q));
    return out;
}

} // namespace

TEST_CASE("truncation predicate") {
    CHECK(is_truncated(p_ring()));           // A/Igt(1)
    CHECK(is_truncated(q_cogenerator()));    // A/Iq(1)
    CHECK_FALSE(is_truncated(atom(BasicKind::AModIq, Rational(2))));
    CHECK_FALSE(is_truncated(atom(BasicKind::Theta)));
    CHECK(is_truncated(Multibasic::zero()));
    CHECK(is_truncated(Multibasic{atom(BasicKind::F), atom(BasicKind::AModIq, Rational(1, 2))}));
    // closure failure witness: A/Iq(2) extends Q by Q but is not truncated
    CHECK_FALSE(is_truncated(Multibasic(atom(BasicKind::AModIq, Rational(2)))));
    CHECK(is_truncated(Multibasic(q_cogenerator())));
}

TEST_CASE("duality restricted to truncated modules") {
    CHECK(p_dual(Multibasic(p_ring())) == Multibasic(p_ring())); // self-dual ring
    CHECK(p_dual(Multibasic(atom(BasicKind::AModIq, Rational(1, 2)))) ==
          Multibasic(atom(BasicKind::Igt0ModIgt, Rational(1, 2))));
    CHECK(p_dual(Multibasic(atom(BasicKind::F))) == Multibasic(atom(BasicKind::F)));
    CHECK_THROWS_AS(p_dual(Multibasic(atom(BasicKind::Theta))), std::invalid_argument);

    for (const StandardBasic& b : truncated_basics()) {
        Multibasic m(b);
        Multibasic d = p_dual(m);
        CHECK(is_truncated(d)); // duals stay truncated
        CHECK(p_dual(d) == m);  // involution
    }
}

TEST_CASE("injectives over the quotient ring") {
    CHECK(is_injective_p(Multibasic{p_ring(), q_cogenerator()}));
    CHECK_FALSE(is_injective_p(Multibasic(atom(BasicKind::F))));
    CHECK(is_injective_p(Multibasic::zero()));
    CHECK_FALSE(is_injective_p(Multibasic(atom(BasicKind::AModIq, Rational(1, 2)))));
}

TEST_CASE("annihilators of the injective hulls give the two injectives") {
    KSubmodule igt1 = KSubmodule::gt(Rational(1));
    CHECK(ann_submodule(igt1, Multibasic(atom(BasicKind::Theta))) == Multibasic(p_ring()));
    CHECK(ann_submodule(igt1, Multibasic(atom(BasicKind::Phi))) ==
          Multibasic(q_cogenerator()));
}

TEST_CASE("resolution shapes") {
    using Term = PResolution::Term;
    using Tag = PResolution::MapLabel::Tag;

    PResolution f = p_injective_resolution(atom(BasicKind::F));
    CHECK(f.terms == std::vector<Term>{Term::P, Term::Q});
    CHECK(f.finite);

    PResolution iq1 = p_injective_resolution(atom(BasicKind::Igt0ModIq, Rational(1)));
    CHECK(iq1.terms == std::vector<Term>{Term::Q, Term::P, Term::Q});
    REQUIRE(iq1.maps.size() == 2);
    CHECK(iq1.maps[0].tag == Tag::alpha);
    CHECK(iq1.finite);

    PResolution igt1 = p_injective_resolution(atom(BasicKind::Igt0ModIgt, Rational(1)));
    CHECK(igt1.terms == std::vector<Term>{Term::P, Term::P, Term::Q});
    REQUIRE(igt1.maps.size() == 2);
    CHECK(igt1.maps[0].tag == Tag::beta);
    CHECK(igt1.finite);

    PResolution aq = p_injective_resolution(atom(BasicKind::AModIq, Rational(1, 3)));
    CHECK_FALSE(aq.finite);
    CHECK(aq.period_start == 0);
    for (Term t : aq.terms)
        CHECK(t == Term::Q);
    REQUIRE(aq.maps.size() >= 3);
    CHECK(aq.maps[0] == PResolution::MapLabel{Tag::alpha_q, Rational(2, 3)});
    CHECK(aq.maps[1] == PResolution::MapLabel{Tag::alpha_q, Rational(1, 3)});

    PResolution ag = p_injective_resolution(atom(BasicKind::AModIgt, Rational(1, 3)));
    CHECK(ag.terms.front() == Term::P);
    CHECK(ag.period_start == 1);
    CHECK(ag.maps[0] == PResolution::MapLabel{Tag::beta_q, Rational(2, 3)});

    PResolution iq = p_injective_resolution(atom(BasicKind::Igt0ModIq, Rational(1, 3)));
    CHECK(iq.terms[0] == Term::Q);
    CHECK(iq.terms[1] == Term::P);
    CHECK(iq.period_start == 2);
    CHECK(iq.maps[0] == PResolution::MapLabel{Tag::gamma_q, Rational(2, 3)});
    CHECK(iq.maps[1] == PResolution::MapLabel{Tag::beta_q, Rational(1, 3)});

    PResolution ig = p_injective_resolution(atom(BasicKind::Igt0ModIgt, Rational(1, 3)));
    CHECK(ig.terms[0] == Term::P);
    CHECK(ig.terms[1] == Term::P);
    CHECK(ig.period_start == 2);
    CHECK(ig.maps[0] == PResolution::MapLabel{Tag::delta_q, Rational(2, 3)});

    CHECK_THROWS_AS(p_injective_resolution(atom(BasicKind::Theta)), std::invalid_argument);
}

TEST_CASE("resolutions are eventually two-periodic") {
    for (const StandardBasic& b : truncated_basics()) {
        PResolution res = p_injective_resolution(b);
        CHECK(res.period_start <= 2);
        CHECK(ext_periodicity_check(b));
    }
}

TEST_CASE("incoherence witnesses") {
    auto half = incoherence_witness(Rational(1, 2));
    CHECK(half.kernel == Multibasic(atom(BasicKind::Igt0ModIgt, Rational(1, 2))));
    CHECK_FALSE(half.finitely_presented);

    auto zero = incoherence_witness(Rational(0));
    CHECK(zero.kernel.is_zero());
    CHECK(zero.finitely_presented);

    auto one = incoherence_witness(Rational(1));
    CHECK(one.kernel == Multibasic(atom(BasicKind::Igt0ModIgt, Rational(1))));
    CHECK_FALSE(one.finitely_presented);

    CHECK_THROWS_AS(incoherence_witness(Rational(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(incoherence_witness(Rational(-1, 2)), std::invalid_argument);

    // sampled interior points: kernels are never finitely generated kinds
    for (int i = 1; i <= 20; ++i) {
        Rational q(i, 20);
        auto w = incoherence_witness(q);
        CHECK_FALSE(w.finitely_presented);
        REQUIRE(w.kernel.summand_count() == 1);
        CHECK(w.kernel.summands().front().kind() == BasicKind::Igt0ModIgt);
        CHECK_FALSE(w.kernel.summands().front().is_finitely_generated());
    }
}
