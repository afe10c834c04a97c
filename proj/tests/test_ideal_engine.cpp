#include <doctest.h>

#include <algorithm>
#include <set>

#include "detrees/detrees.hpp"
#include "test_util.hpp"

using namespace detrees;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

Monomial M(const std::string& s) {
    Polynomial p = parse_polynomial(s);
    REQUIRE(p.term_count() == 1);
    return p.terms().front().mono;
}

Ideal minors_ideal(const Shape& sh) {
    Ideal I{ring_R(sh), {}};
    for (auto& m : nonzero_minors(sh)) I.gens.push_back(std::move(m.poly));
    return I;
}

TermOrder canonical_order(const RingPtr& ring) { return TermOrder::lex(ring->vars()); }

}  // namespace

TEST_CASE("normal form reduction") {
    Shape sh = shape_validate(5, 2, 1);
    RingPtr S = ring_S(sh);
    TermOrder ord = canonical_order(S);

    // l(1;1,2,3) is the binomial x[1,1]y[2,3] - x[1,2]y[1,3] here (y[1,2] = 0),
    // so one division step rewrites its leading monomial.
    std::vector<Relation> ells = linear_relations(sh);
    auto it = std::find_if(ells.begin(), ells.end(), [](const Relation& r) {
        return r.u == 1 && r.idx[0] == 1 && r.idx[1] == 2 && r.idx[2] == 3;
    });
    REQUIRE(it != ells.end());
    REQUIRE(it->poly == P("x[1,1]*y[2,3] - x[1,2]*y[1,3]"));
    CHECK(reduce(P("x[1,1]*y[2,3]"), {it->poly}, ord) == P("x[1,2]*y[1,3]"));

    CHECK(reduce(it->poly, {it->poly}, ord).is_zero());
    CHECK(reduce(P("1"), {P("x[1,1]")}, ord) == P("1"));

    // The result has no term divisible by a leading monomial.
    Polynomial f = P("x[1,1]^2*y[2,3]^2 + x[1,2]*y[1,3] - 3");
    Polynomial nf = reduce(f, {it->poly}, ord);
    Monomial lm = it->poly.leading_term(ord).mono;
    for (const auto& t : nf.terms()) CHECK(!lm.divides(t.mono));
}

TEST_CASE("buchberger on monomial and principal ideals") {
    auto vars = testutil::simple_vars(3);
    RingPtr ring = Ring::make(vars);
    TermOrder ord = canonical_order(ring);

    GroebnerBasis gb = buchberger(
        Ideal{ring, {P("x[1,1]*x[1,2]"), P("x[1,1]*x[1,2]*x[1,3]"), P("x[1,3]^2")}}, ord);
    CHECK(gb.elements.size() == 2);  // the middle generator is redundant

    GroebnerBasis single = buchberger(Ideal{ring, {P("2*x[1,1]*x[1,2] - 4*x[1,3]")}}, ord);
    REQUIRE(single.elements.size() == 1);
    CHECK(single.elements[0] == P("x[1,1]*x[1,2] - 2*x[1,3]"));  // monic
}

TEST_CASE("minors are their own reduced basis") {
    Shape sh = shape_validate(4, 1, 2);
    Ideal I = minors_ideal(sh);
    TermOrder tau = diagonal_order(sh);
    GroebnerBasis gb = buchberger(I, tau);
    REQUIRE(gb.elements.size() == I.gens.size());
    std::set<std::string> expect, got;
    for (const auto& g : I.gens) expect.insert(g.str());
    for (const auto& g : gb.elements) got.insert(g.str());
    CHECK(expect == got);
}

TEST_CASE("is_groebner examples") {
    Shape sh = shape_validate(5, 2, 1);
    Ideal I = minors_ideal(sh);
    CHECK(is_groebner_check(I.gens, diagonal_order(sh)).pass);

    // {x+y, x} is not a Groebner basis of (x, y): the S-pair leaves y.
    auto x = VariableId::x(1, 1);
    auto y = VariableId::x(1, 2);
    TermOrder lex = TermOrder::lex({x, y});
    SPairCheck spc = is_groebner_check(
        {Polynomial::variable(x) + Polynomial::variable(y), Polynomial::variable(x)}, lex);
    CHECK(!spc.pass);
    CHECK(spc.remainder == Polynomial::variable(y));

    CHECK(is_groebner_check({P("y[1,2]*y[3,4] - y[1,3]*y[2,4] + y[1,4]*y[2,3]")},
                            canonical_order(ring_T(shape_validate(4, 1, 2))))
              .pass);
}

TEST_CASE("initial ideal of a computed basis") {
    Shape sh = shape_validate(4, 1, 2);
    GroebnerBasis gb = buchberger(minors_ideal(sh), diagonal_order(sh));
    MonomialIdeal in = initial_ideal(gb);
    std::vector<Monomial> expect = {M("x[1,1]*x[2,2]"), M("x[1,1]*x[2,3]"), M("x[1,1]*x[2,4]"),
                                    M("x[1,2]*x[2,3]"), M("x[1,2]*x[2,4]"), M("x[1,3]*x[2,4]")};
    CHECK(in == MonomialIdeal(ring_R(sh), expect));
    CHECK(in == ferrers_ideal(sh));

    // Monomial input: the initial ideal is the (minimalized) input.
    RingPtr ring = Ring::make(testutil::simple_vars(2));
    GroebnerBasis mono =
        buchberger(Ideal{ring, {P("x[1,1]^2"), P("x[1,1]^3")}}, canonical_order(ring));
    CHECK(initial_ideal(mono) == MonomialIdeal(ring, {M("x[1,1]^2")}));

    // Invariant under auto-reduction.
    GroebnerBasis raw = buchberger(minors_ideal(sh), diagonal_order(sh), {false, -1});
    CHECK(initial_ideal(raw) == in);

    // Large golden count: 32 generators for (9,3,4).
    Shape big = shape_validate(9, 3, 4);
    CHECK(ferrers_ideal(big).gens().size() == 32);
}

TEST_CASE("ideal powers") {
    RingPtr ring = Ring::make(testutil::simple_vars(2));
    Ideal ab{ring, {P("x[1,1]"), P("x[1,2]")}};
    Ideal sq = ideal_power(ab, 2);
    CHECK(sq.gens.size() == 3);

    Shape sh = shape_validate(3, 1, 1);
    MonomialIdeal in2 = ferrers_ideal(sh).power(2);
    CHECK(in2.gens().size() == 6);

    Ideal I = minors_ideal(shape_validate(4, 1, 2));
    Ideal I1 = ideal_power(I, 1);
    CHECK(I1.gens.size() == I.gens.size());

    Ideal unit = ideal_power(I, 0);
    REQUIRE(unit.gens.size() == 1);
    CHECK(unit.gens[0] == P("1"));

    // Generators of I^k are products of a generator of I^(k-1) and one of I.
    Ideal I2 = ideal_power(I, 2);
    Ideal I3 = ideal_power(I, 3);
    std::set<std::string> products;
    for (const auto& a : I2.gens)
        for (const auto& b : I.gens) products.insert((a * b).str());
    for (const auto& g : I3.gens) CHECK(products.count(g.str()) == 1);
}

TEST_CASE("ideal equality") {
    RingPtr ring = Ring::make(testutil::simple_vars(2));
    TermOrder ord = canonical_order(ring);
    Ideal a{ring, {P("x[1,1]")}};
    CHECK(ideal_equal(a, a, ord).equal);
    Ideal b{ring, {P("x[1,1]"), P("x[1,1]^2")}};
    CHECK(ideal_equal(a, b, ord).equal);
    Ideal c{ring, {P("x[1,2]")}};
    IdealEqualResult neq = ideal_equal(a, c, ord);
    CHECK(!neq.equal);
    REQUIRE(neq.witness.has_value());
}

TEST_CASE("elimination") {
    Shape sh = shape_validate(3, 1, 1);
    // Fiber map y -> f: eliminating the x's gives the zero ideal (three
    // algebraically independent monomial minors).
    std::vector<std::pair<VariableId, Polynomial>> images;
    for (const auto& m : nonzero_minors(sh)) images.push_back({VariableId::y(m.i, m.j), m.poly});
    Ideal fiber_kernel = kernel_of_algebra_map(images);
    CHECK(fiber_kernel.gens.empty());

    // drop = {} returns the same ideal up to basis.
    RingPtr ring = Ring::make(testutil::simple_vars(2));
    Ideal id{ring, {P("x[1,1]^2 - x[1,2]"), P("x[1,2]^3")}};
    Ideal same = eliminate(id, {});
    CHECK(ideal_equal(id, same, canonical_order(ring)).equal);

    // Rees graph ideal of (4,1,2): eliminating t yields an ideal containing
    // every linear and Plucker relation, with no t left.
    Shape sh4 = shape_validate(4, 1, 2);
    std::vector<std::pair<VariableId, Polynomial>> rees;
    for (const auto& m : nonzero_minors(sh4))
        rees.push_back(
            {VariableId::y(m.i, m.j), m.poly.times_term(Monomial::variable(VariableId::t()), 1)});
    Ideal J = kernel_of_algebra_map(rees);
    CHECK(!J.gens.empty());
    TermOrder ordJ = TermOrder::deg_then(TermOrder::lex(J.ring->vars()));
    for (const auto& rel : linear_relations(sh4)) CHECK(reduce(rel.poly, J.gens, ordJ).is_zero());
    for (const auto& rel : plucker_relations(sh4)) CHECK(reduce(rel.poly, J.gens, ordJ).is_zero());

    // Dropped variables never appear, and every output generator is a member
    // of the original graph ideal.
    Ideal graph{ring_St(sh4), {}};
    for (const auto& [yv, img] : rees) graph.gens.push_back(Polynomial::variable(yv) - img);
    GroebnerBasis graph_gb = buchberger(
        graph, TermOrder::block({TermOrder::lex({VariableId::t()}),
                                 TermOrder::deg_then(TermOrder::lex(ring_S(sh4)->vars()))}));
    for (const auto& g : J.gens) {
        for (const auto& t : g.terms()) CHECK(t.mono.exponent(VariableId::t()) == 0);
        CHECK(reduce(g, graph_gb.elements, graph_gb.order).is_zero());
    }
}

TEST_CASE("kernels of algebra maps") {
    // Fiber kernel of (4,1,2) is the single Plucker quadric.
    Shape sh = shape_validate(4, 1, 2);
    std::vector<std::pair<VariableId, Polynomial>> images;
    for (const auto& m : nonzero_minors(sh)) images.push_back({VariableId::y(m.i, m.j), m.poly});
    Ideal K = kernel_of_algebra_map(images);
    RingPtr T = ring_T(sh);
    TermOrder ordT = canonical_order(T);
    Ideal plucker{T, {P("y[1,2]*y[3,4] - y[1,3]*y[2,4] + y[1,4]*y[2,3]")}};
    CHECK(ideal_equal(Ideal{T, K.gens}, plucker, ordT).equal);

    // Rees kernel of (3,1,1) is generated by the two linear relations.
    Shape sh3 = shape_validate(3, 1, 1);
    std::vector<std::pair<VariableId, Polynomial>> rees;
    for (const auto& m : nonzero_minors(sh3))
        rees.push_back(
            {VariableId::y(m.i, m.j), m.poly.times_term(Monomial::variable(VariableId::t()), 1)});
    Ideal J = kernel_of_algebra_map(rees);
    Ideal ells{ring_S(sh3), {}};
    for (auto& rel : linear_relations(sh3)) ells.gens.push_back(rel.poly);
    CHECK(ells.gens.size() == 2);
    CHECK(ideal_equal(Ideal{ells.ring, J.gens}, ells, canonical_order(ring_S(sh3))).equal);
}

TEST_CASE("relations present the eliminated Rees kernel") {
    Shape sh = shape_validate(4, 1, 2);
    std::vector<std::pair<VariableId, Polynomial>> rees;
    for (const auto& m : nonzero_minors(sh))
        rees.push_back(
            {VariableId::y(m.i, m.j), m.poly.times_term(Monomial::variable(VariableId::t()), 1)});
    Ideal J = kernel_of_algebra_map(rees);
    Ideal relations{ring_S(sh), {}};
    for (auto& rel : linear_relations(sh)) relations.gens.push_back(rel.poly);
    for (auto& rel : plucker_relations(sh)) relations.gens.push_back(rel.poly);
    CHECK(relations.gens.size() == 9);
    TermOrder ord = TermOrder::deg_then(canonical_order(ring_S(sh)));
    CHECK(ideal_equal(Ideal{relations.ring, J.gens}, relations, ord).equal);
}

TEST_CASE("t-extended order eliminates t like the block order") {
    // Two routes to the same kernel: the block elimination order used by
    // eliminate(), and a Groebner basis under the t-degree-first order with
    // the t-free elements kept.
    for (Shape sh : {shape_validate(3, 1, 1), shape_validate(4, 1, 2), shape_validate(4, 2, 2)}) {
        std::vector<std::pair<VariableId, Polynomial>> rees;
        for (const auto& m : nonzero_minors(sh))
            rees.push_back(
                {VariableId::y(m.i, m.j), m.poly.times_term(Monomial::variable(VariableId::t()), 1)});
        Ideal via_block = kernel_of_algebra_map(rees);

        Ideal graph{ring_St(sh), {}};
        for (const auto& [yv, img] : rees) graph.gens.push_back(Polynomial::variable(yv) - img);
        TermOrder tprime = TermOrder::t_extended(TermOrder::deg_then(TermOrder::lex(ring_S(sh)->vars())));
        GroebnerBasis gb = buchberger(graph, tprime);
        std::vector<Polynomial> tfree;
        for (const auto& g : gb.elements) {
            bool has_t = false;
            for (const auto& t : g.terms())
                if (t.mono.exponent(VariableId::t()) > 0) has_t = true;
            if (!has_t) tfree.push_back(g);
        }
        TermOrder ord = TermOrder::deg_then(TermOrder::lex(ring_S(sh)->vars()));
        CHECK(ideal_equal(Ideal{ring_S(sh), via_block.gens}, Ideal{ring_S(sh), tfree}, ord).equal);
    }
}

TEST_CASE("engine matches the reference under ungraded lex too") {
    std::mt19937_64 rng(424242);
    auto vars = testutil::simple_vars(3);
    RingPtr ring = Ring::make(vars);
    TermOrder lex = canonical_order(ring);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        for (int g = 0; g < 2; ++g) {
            Polynomial f = testutil::random_polynomial(rng, vars, 3, 2);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(Ideal{ring, gens}, lex);
        CHECK(is_groebner_check(gb.elements, lex).pass);
        for (const auto& g : gens) CHECK(reduce(g, gb.elements, lex).is_zero());
    }
}

TEST_CASE("divisibility agrees with a per-variable comparison") {
    std::mt19937_64 rng(555);
    std::vector<VariableId> vars = {VariableId::x(1, 1), VariableId::x(2, 5), VariableId::y(2, 7),
                                    VariableId::t()};
    for (int trial = 0; trial < 400; ++trial) {
        Monomial a = testutil::random_monomial(rng, vars, 4);
        Monomial b = testutil::random_monomial(rng, vars, 5);
        bool naive = true;
        for (VariableId v : vars)
            if (a.exponent(v) > b.exponent(v)) naive = false;
        CHECK(a.divides(b) == naive);
        if (naive) CHECK(b.divided_by(a) * a == b);
    }
}

TEST_CASE("engine error paths") {
    auto vars = testutil::simple_vars(2);
    RingPtr ring = Ring::make(vars);
    TermOrder ord = canonical_order(ring);
    CHECK_THROWS_AS(reduce(P("x[1,1]"), {}, ord), InputError);
    CHECK_THROWS_AS(reduce(P("x[1,1]"), {Polynomial::zero()}, ord), InputError);
    CHECK_THROWS_AS(buchberger(Ideal{ring, {Polynomial::zero()}}, ord), InputError);
    CHECK_THROWS_AS(ideal_power(Ideal{ring, {P("x[1,1]")}}, -1), InputError);
    CHECK_THROWS_AS(eliminate(Ideal{ring, {P("x[1,1]")}}, {VariableId::t()}), InputError);
    CHECK_THROWS_AS(
        buchberger(Ideal{ring, {P("x[1,1]^2 - x[1,2]"), P("x[1,2]^3 - x[1,1]")}}, ord, {true, 0}),
        BudgetError);
}

TEST_CASE("monomial ideal toolkit") {
    Shape sh = shape_validate(3, 1, 1);
    MonomialIdeal in = ferrers_ideal(sh);
    MonomialIdeal colon = in.colon(M("x[1,1]"));
    CHECK(colon == MonomialIdeal(in.ring(), {M("x[2,2]"), M("x[2,3]"), M("x[1,2]*x[2,3]")}));

    RingPtr ring = Ring::make(testutil::simple_vars(2));
    MonomialIdeal ab(ring, {M("x[1,1]"), M("x[1,2]")});
    CHECK(ab.power(2) == MonomialIdeal(ring, {M("x[1,1]^2"), M("x[1,1]*x[1,2]"), M("x[1,2]^2")}));
    CHECK(MonomialIdeal(ring, {M("x[1,1]"), M("x[1,1]^2")}) == MonomialIdeal(ring, {M("x[1,1]")}));
    CHECK(ab.sum(MonomialIdeal(ring, {M("x[1,1]^3")})) == ab);
    CHECK(MonomialIdeal(ring, {M("x[1,1]*x[1,2]")}).colon(M("x[1,1]^5")) ==
          MonomialIdeal(ring, {M("x[1,2]")}));
}

TEST_CASE("computed bases pass an independent S-pair audit") {
    std::mt19937_64 rng(31337);
    auto vars = testutil::simple_vars(3);
    RingPtr ring = Ring::make(vars);
    TermOrder ord = TermOrder::deg_then(canonical_order(ring));
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        for (int g = 0; g < 3; ++g) {
            Polynomial f = testutil::random_polynomial(rng, vars, 3, 3);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(Ideal{ring, gens}, ord);
        if (gb.elements.empty()) continue;
        CHECK(is_groebner_check(gb.elements, ord).pass);
        // The basis generates the same ideal: every input reduces to zero.
        for (const auto& g : gens) CHECK(reduce(g, gb.elements, ord).is_zero());
    }
}

namespace {

// Criteria-free Buchberger: reduce every S-pair, no pair pruning. Slow but
// independent of the engine's Gebauer-Moller bookkeeping.
std::vector<Polynomial> naive_reduced_basis(std::vector<Polynomial> basis, const TermOrder& ord) {
    auto spair = [&](const Polynomial& f, const Polynomial& g) {
        Term lf = f.leading_term(ord);
        Term lg = g.leading_term(ord);
        Monomial l = Monomial::lcm(lf.mono, lg.mono);
        return f.times_term(l.divided_by(lf.mono), Rational(1) / lf.coeff) -
               g.times_term(l.divided_by(lg.mono), Rational(1) / lg.coeff);
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Polynomial s = spair(basis[i], basis[j]);
            if (s.is_zero()) continue;
            Polynomial r = reduce(s, basis, ord);
            if (!r.is_zero()) basis.push_back(r);
        }
    // Minimalize and tail-reduce to the unique reduced basis.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Monomial lm = basis[i].leading_term(ord).mono;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial other = basis[j].leading_term(ord).mono;
            if (other.divides(lm) && (other != lm || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Term lt = minimal[i].leading_term(ord);
        Polynomial tail = minimal[i] - Polynomial::term(lt.mono, lt.coeff);
        Polynomial red = others.empty() ? tail : reduce(tail, others, ord);
        out.push_back((Polynomial::term(lt.mono, lt.coeff) + red).scaled(Rational(1) / lt.coeff));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return out;
}

}  // namespace

TEST_CASE("engine basis equals a criteria-free reference on random ideals") {
    std::mt19937_64 rng(60902);
    auto vars = testutil::simple_vars(3);
    RingPtr ring = Ring::make(vars);
    TermOrder ord = TermOrder::deg_then(canonical_order(ring));
    int nontrivial = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens;
        for (int g = 0; g < 2 + static_cast<int>(rng() % 2); ++g) {
            Polynomial f = testutil::random_polynomial(rng, vars, 3, 2);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        GroebnerBasis fast = buchberger(Ideal{ring, gens}, ord);
        std::vector<Polynomial> slow = naive_reduced_basis(gens, ord);
        CHECK(fast.elements == slow);
        if (fast.elements.size() > gens.size()) ++nontrivial;
    }
    CHECK(nontrivial > 0);  // the sample includes ideals needing new elements
}

TEST_CASE("membership agrees with the linear-algebra oracle") {
    std::mt19937_64 rng(271828);
    auto vars = testutil::simple_vars(3);
    RingPtr ring = Ring::make(vars);
    TermOrder ord = TermOrder::deg_then(canonical_order(ring));

    for (int trial = 0; trial < 30; ++trial) {
        // Homogeneous ideals so degree-bounded span membership is exact.
        std::vector<Polynomial> gens;
        for (int g = 0; g < 2; ++g) {
            Polynomial f =
                testutil::random_homogeneous(rng, vars, 1 + static_cast<int>(rng() % 2), 3);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(Ideal{ring, gens}, ord);

        for (int d = 1; d <= 4; ++d) {
            testutil::SpanOracle oracle(gens, vars, d);
            for (int probe = 0; probe < 6; ++probe) {
                Polynomial f = testutil::random_homogeneous(rng, vars, d, 3);
                if (f.is_zero()) continue;
                bool by_reduction =
                    gb.elements.empty() ? false : reduce(f, gb.elements, ord).is_zero();
                CHECK(by_reduction == oracle.contains(f));
            }
        }
    }
}
