#include "oracles.hpp"
#include "support.hpp"

#include "vldl/corpus.hpp"
#include "vldl/error.hpp"
#include "vldl/profile.hpp"
#include "vldl/validate.hpp"
#include "vldl/vps.hpp"

#include <doctest.h>

using namespace vldl;
using support::crl;
using support::lasso;

TEST_CASE("alphabet lookups") {
    const auto a = crl();
    CHECK(a.size() == 3);
    CHECK(a.require("r") == 1);
    CHECK_FALSE(a.find("x").has_value());
    CHECK_THROWS_AS(a.require("x"), InputError);
    CHECK(a.holds(0, "p"));
    CHECK_FALSE(a.holds(1, "p"));
    CHECK(a.letters_of(LetterClass::local) == std::vector<LetterId>{2});
    CHECK(parse_letter_class("call") == LetterClass::call);
    CHECK_FALSE(parse_letter_class("sideways").has_value());
}

TEST_CASE("lasso words reject empty periods and unknown letters") {
    const auto a = crl();
    CHECK_THROWS_AS(lasso(a, "c", ""), InputError);
    CHECK_THROWS_AS(lasso(a, "x", "l"), InputError);
    CHECK(format_lasso(a, lasso(a, "c r", "l")) == "c r ; l");
}

TEST_CASE("suffix classes fold into the period") {
    const auto a = crl();
    CHECK(suffix_class(lasso(a, "c c c", "l r"), 7) == 3);
    CHECK(suffix_class(lasso(a, "c c c", "l r"), 2) == 2);
    CHECK(suffix_class(lasso(a, "c c c", "l r"), 4) == 4);
    for (std::size_t p = 0; p < 10; ++p) CHECK(suffix_class(lasso(a, "", "l"), p) == 0);
}

TEST_CASE("heights on a nested word") {
    const auto a = crl();
    const auto w = lasso(a, "c l c r r c c l r l l", "l");
    const auto profile = build_profile(a, w);
    const std::vector<std::size_t> expected{0, 1, 1, 2, 1, 0, 1, 2, 2, 1, 1, 1, 1, 1, 1};
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(profile.height_before(k) == expected[k]);
    CHECK(matching_return(profile, 0) == std::optional<std::size_t>(4));
    CHECK(matching_return(profile, 2) == std::optional<std::size_t>(3));
    CHECK(matching_return(profile, 6) == std::optional<std::size_t>(8));
    CHECK_FALSE(matching_return(profile, 5).has_value());
    for (std::size_t k = 0; k < 30; ++k) CHECK(steps_membership(profile, k) == (k == 0 || k == 5 || k == 6 || k >= 9));
}

TEST_CASE("degenerate words") {
    const auto a = crl();
    const auto locals = build_profile(a, lasso(a, "", "l"));
    const auto returns = build_profile(a, lasso(a, "", "r"));
    const auto calls = build_profile(a, lasso(a, "", "c"));
    for (std::size_t k = 0; k < 12; ++k) {
        CHECK(locals.height_before(k) == 0);
        CHECK(steps_membership(locals, k));
        CHECK(returns.height_before(k) == 0);
        CHECK(calls.height_before(k) == k);
        CHECK_FALSE(matching_return(calls, k).has_value());
    }
}

TEST_CASE("matching on a non-call is a contract violation") {
    const auto a = crl();
    const auto profile = build_profile(a, lasso(a, "c l", "r"));
    CHECK_THROWS_AS(matching_return(profile, 1), ContractViolation);
}

TEST_CASE("profile agrees with explicit unrolling on random words") {
    corpus::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto a = corpus::random_alphabet(rng, 4);
        const auto w = corpus::random_lasso(rng, a, 5, 4);
        const auto profile = build_profile(a, w);
        const std::size_t positions = w.prefix.size() + 3 * w.period.size() + 2;
        const auto h = oracle::heights(a, w, positions);
        for (std::size_t k = 0; k < positions; ++k) {
            CHECK(profile.height_before(k) == h[k]);
            CHECK(steps_membership(profile, k) == oracle::is_step(a, w, k));
            if (a.kind(w.at(k)) == LetterClass::call) CHECK(matching_return(profile, k) == oracle::matching(a, w, k));
        }
    }
}

TEST_CASE("configuration successors") {
    const auto a = crl();
    Vps vps;
    vps.alphabet = a;
    const auto q = vps.add_state("q"), t = vps.add_state("t");
    const auto A = vps.add_symbol("A");
    vps.calls.push_back({q, 0, t, A});
    vps.returns.push_back({q, 1, bottom_symbol, t});
    vps.normalize();
    const Configuration start{q, {bottom_symbol}};
    CHECK(config_successors(vps, start, 0) == std::vector<Configuration>{{t, {A, bottom_symbol}}});
    CHECK(config_successors(vps, start, 1) == std::vector<Configuration>{{t, {bottom_symbol}}});
    CHECK(config_successors(vps, start, 2).empty());
}

TEST_CASE("validation diagnostics") {
    const auto a = crl();
    Vps bad;
    bad.alphabet = a;
    const auto q = bad.add_state("q");
    bad.calls.push_back({q, 0, q, bottom_symbol});
    const auto diags = validate(bad);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("call pushes bottom marker") != std::string::npos);

    Dpsa d;
    d.vps.alphabet = a;
    d.vps.add_state("s");
    d.vps.add_state("t");
    d.colors = {0, 1};
    d.vps.locals.push_back({0, 2, 0});
    d.vps.locals.push_back({0, 2, 1});
    bool nondeterministic = false;
    for (const auto& diag : validate(d)) nondeterministic |= diag.message.find("nondeterministic") != std::string::npos;
    CHECK(nondeterministic);

    const auto example = support::sample("calls.json");
    CHECK(validate(example.guards.require("Ac")).empty());
}

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("DOT rendering") {
    const auto example = support::sample("calls.json");
    const auto dot = to_dot(example.guards.require("Ac"), "Ac");
    CHECK(count(dot, " -> ") == 4);
    CHECK(count(dot, "[label=\"i\"") + count(dot, "[label=\"f\"") == 2);

    Vps single;
    single.alphabet = support::crl();
    single.add_state("only");
    const auto lone = to_dot(single);
    CHECK(count(lone, " -> ") == 0);
    CHECK(count(lone, "[label=") == 1);
}
