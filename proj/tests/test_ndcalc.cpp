#include "doctest.h"

#include "pragval/ndcalc.hpp"
#include "pragval/extract.hpp"
#include "support/corpus_items.hpp"
#include "support/gen.hpp"

using namespace pragval;

namespace {

ArgPtr leaf(const std::string& f) { return ArgumentTree::leaf(parse_formula(f)); }

}  // namespace

TEST_CASE("check_nj accepts rule instances") {
    ArgPtr impi = ArgumentTree::step(StepLabel::ImpI, parse_formula("p -> p"),
                                     {ArgumentTree::leaf(parse_formula("p"), "t")},
                                     std::string("t"));
    CHECK(is_derivation(impi));
    CHECK(is_derivation(corpus::prawitz_corrected()));
    CHECK(is_derivation(corpus::detour_conj()));
    CHECK(is_derivation(corpus::perm_or()));
    CHECK(is_derivation(corpus::bot_chain()));
    CHECK(is_derivation(corpus::detour_arrow_shed()));
}

TEST_CASE("check_nj rejects schema mismatches") {
    ArgPtr bad_ande = ArgumentTree::step(StepLabel::AndELeft, parse_formula("p"),
                                         {leaf("p | q")});
    auto violations = check_nj(bad_ande);
    REQUIRE(!violations.empty());
    CHECK(violations[0].message.find("conjunction") != std::string::npos);

    // The flawed modus-ponens display: the inner step must conclude
    // (c -> c) -> a, not a.
    auto remark = check_nj(corpus::dummett_remark());
    REQUIRE(!remark.empty());
    CHECK(remark[0].occ == OccPath{0});
    CHECK(remark[0].message.find("(c -> c) -> a") != std::string::npos);

    // Unjustified steps are not derivations.
    CHECK(!is_derivation(corpus::example1_arg1()));

    // Vacuously discharging OrE is rejected.
    ArgPtr vac = ArgumentTree::step(
        StepLabel::OrE, parse_formula("r"),
        {leaf("p | q"),
         ArgumentTree::step(StepLabel::ImpE, parse_formula("r"),
                            {ArgumentTree::leaf(parse_formula("p"), "t"), leaf("p -> r")}),
         leaf("r")},
        std::string("t"));
    CHECK(!check_nj(vac).empty());
}

TEST_CASE("discharge pattern checks") {
    // ImpI discharging a formula other than its antecedent.
    ArgPtr wrong = ArgumentTree::step(StepLabel::ImpI, parse_formula("p -> q"),
                                      {ArgumentTree::leaf(parse_formula("q"), "t")},
                                      std::string("t"));
    auto violations = check_nj(wrong);
    REQUIRE(!violations.empty());
    CHECK(violations[0].message.find("antecedent") != std::string::npos);

    // Rules other than ImpI and OrE cannot discharge.
    ArgPtr andi_discharge = ArgumentTree::step(
        StepLabel::AndI, parse_formula("p & q"),
        {ArgumentTree::leaf(parse_formula("p"), "t"), leaf("q")}, std::string("t"));
    CHECK(!check_nj(andi_discharge).empty());
}

TEST_CASE("is_normal") {
    ArgPtr single = ArgumentTree::step(StepLabel::AndELeft, parse_formula("p"), {leaf("p & q")});
    CHECK(is_normal(single));
    CHECK(!is_normal(corpus::detour_conj()));
    CHECK(!is_normal(corpus::detour_imp()));
    CHECK(!is_normal(corpus::perm_or()));  // OrE consequence as AndE major
    CHECK(!is_normal(corpus::bot_chain()));
    CHECK(is_normal(corpus::normal_chain()));
    CHECK(is_normal(corpus::prawitz_corrected()));
}

TEST_CASE("normalize contracts detours") {
    auto r1 = normalize(corpus::detour_conj());
    CHECK(trees_equal(r1.derivation, leaf("p")));

    auto r2 = normalize(corpus::detour_imp());
    CHECK(trees_equal(r2.derivation, leaf("p")));

    auto r3 = normalize(corpus::normal_chain());
    CHECK(trees_equal(r3.derivation, corpus::normal_chain()));
    CHECK(r3.steps == 0);

    auto r4 = normalize(corpus::bot_chain());
    CHECK(trees_equal(r4.derivation,
                      ArgumentTree::step(StepLabel::BotE, parse_formula("p"), {leaf("_|_")})));
}

TEST_CASE("normalize permutes eliminations above OrE") {
    auto r = normalize(corpus::perm_or());
    CHECK(is_normal(r.derivation));
    CHECK(equal(r.derivation->conclusion(), parse_formula("r")));
    REQUIRE(!r.derivation->is_leaf());
    CHECK(r.derivation->label() == StepLabel::OrE);
    FormulaSet before = assumption_set(corpus::perm_or());
    for (const auto& f : assumption_set(r.derivation)) CHECK(before.count(f));
}

TEST_CASE("normalization sheds a detour-only assumption") {
    // Worked by hand: the & detour collapses to its left component, the
    // OrI stays, and p -> c is no longer used anywhere.
    ArgPtr d = corpus::detour_arrow_shed();
    CHECK(assumption_set(d).count(parse_formula("p -> c")));
    auto r = normalize(d);
    ArgPtr expected = ArgumentTree::step(StepLabel::OrILeft, parse_formula("p | q"), {leaf("p")});
    CHECK(trees_equal(r.derivation, expected));
    CHECK(!assumption_set(r.derivation).count(parse_formula("p -> c")));
}

TEST_CASE("normalize rejects non-derivations and exhausted fuel") {
    CHECK_THROWS_AS(normalize(corpus::example1_arg1()), InvalidArgumentTree);
    CHECK_THROWS_AS(normalize(corpus::detour_conj(), 0), FuelExhausted);
}

TEST_CASE("normalize properties on random derivations") {
    testgen::Rng rng(31);
    testgen::DerivGen gen{rng};
    for (int i = 0; i < 150; i++) {
        ArgPtr d = gen();
        REQUIRE(check_nj(d).empty());
        auto r = normalize(d);
        CHECK(is_normal(r.derivation));
        CHECK(check_nj(r.derivation).empty());
        CHECK(equal(r.derivation->conclusion(), d->conclusion()));
        FormulaSet before = assumption_set(d);
        for (const auto& f : assumption_set(r.derivation)) CHECK(before.count(f));
        // Idempotence, including canonical tag naming.
        auto again = normalize(r.derivation);
        CHECK(again.steps == 0);
        CHECK(trees_equal(again.derivation, r.derivation));
    }
}

namespace {

// Subformula filter: in a normal derivation with atomic conclusion, every
// formula is a subformula of an open assumption or the conclusion, except
// for absurdity itself and consequences of BotE steps.
bool subformula_filter(const ArgPtr& d) {
    FormulaSet covered = assumption_set(d);
    covered.insert(d->conclusion());
    bool ok = true;
    for_each_occurrence(d, [&](const OccPath& occ, const ArgumentTree& node) {
        const FormulaPtr& f = node.conclusion();
        if (f->kind() == FormulaKind::Absurdity) return;
        if (!node.is_leaf() && node.label() == StepLabel::BotE) return;
        (void)occ;
        for (const auto& c : covered)
            if (is_subformula(f, c)) return;
        ok = false;
    });
    return ok;
}

}  // namespace

TEST_CASE("subformula filter on normal derivations with small conclusions") {
    CHECK(subformula_filter(normalize(corpus::prawitz_corrected()).derivation));
    CHECK(subformula_filter(normalize(corpus::normal_chain()).derivation));
    CHECK(subformula_filter(normalize(corpus::bot_chain()).derivation));

    // Extraction outputs with atomic conclusions pass the filter too.
    for (const auto& item : corpus::extract_corpus()) {
        if (item.argument->conclusion()->kind() != FormulaKind::Atom) continue;
        ArgPtr d = pragval::extract(item.argument, item.witness).derivation;
        ArgPtr n = normalize(d).derivation;
        CAPTURE(item.name);
        CHECK(subformula_filter(n));
    }
}
