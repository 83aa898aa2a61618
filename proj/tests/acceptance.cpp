// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fukaya.hpp"
#include "mirror.hpp"
#include "oracle_check.hpp"
#include "relation.hpp"
#include "support.hpp"
#include "theta.hpp"
#include "torus.hpp"

using namespace tmirror;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

// Displayed expansion in x: x^(c k^2) + sum_{n>=1} x^(c (pn+k)^2) + x^(c (pn-k)^2).
LaurentSeries displayed(long c, long p, long k, Exponent order_x)
{
    std::map<Exponent, Rational> terms;
    auto add = [&](long m) {
        const Exponent e = c * m * m;
        if (e < order_x) {
            terms[e] += 1;
        }
    };
    add(k);
    for (long n = 1; c * (p * n - k) * (p * n - k) < order_x || c * (p * n + k) * (p * n + k) < order_x; ++n) {
        add(p * n + k);
        add(p * n - k);
    }
    return LaurentSeries::from_terms(terms, order_x);
}

Outcome criterion_jcheck()
{
    Outcome o;
    const std::int64_t expected[] = {1, 744, 196884, 21493760, 864299970};
    const auto report = cli::run_jcheck(200, 5);
    o.require(report.passed, "jcheck verdict failed");
    const auto& rows = report.json["coefficients"];
    o.require(rows.size() == 5, "expected five coefficients");
    for (std::size_t n = 0; n < rows.size() && n < 5; ++n) {
        const std::string e = std::to_string(expected[n]);
        o.require(rows[n]["exponent_x"] == 36 * (static_cast<long>(n) - 1), "wrong exponent at row " + std::to_string(n));
        o.require(rows[n]["from_relation"] == e, "relation coefficient " + std::to_string(n) + " differs");
        o.require(rows[n]["reference"] == e, "reference coefficient " + std::to_string(n) + " differs");
        o.require(rows[n]["match"] == true, "row " + std::to_string(n) + " mismatch");
    }
    o.require(report.json["support_ok"] == true, "support off multiples of x^36");
    return o;
}

Outcome criterion_theta()
{
    Outcome o;
    const Exponent order_x = 400;
    const Exponent T = 4 * order_x;
    auto a1 = rebase_to_x(theta::family_series(theta::Family::A, 1, T)).series;
    auto b1 = rebase_to_x(theta::family_series(theta::Family::B, 1, T)).series;
    // The next terms are x^363 for A_1 and x^1225 for B_1.
    o.require(a1.truncated(363) == LaurentSeries::from_terms({{3, 1}, {75, 1}, {147, 1}}, 363), "A_1 differs");
    o.require(a1.coeff(363) == 1, "A_1 misses x^363");
    o.require(b1 == LaurentSeries::from_terms({{1, 1}, {289, 1}, {361, 1}}, order_x), "B_1 differs");
    for (long k = 0; k < 6; ++k) {
        auto s = rebase_to_x(theta::family_series(theta::Family::A, k, T)).series;
        o.require(s == displayed(3, 6, k, order_x), "A_" + std::to_string(k) + " differs from its expansion");
    }
    for (long k = 0; k < 18; ++k) {
        auto s = rebase_to_x(theta::family_series(theta::Family::B, k, T)).series;
        o.require(s == displayed(1, 18, k, order_x), "B_" + std::to_string(k) + " differs from its expansion");
    }
    return o;
}

Outcome criterion_oracle()
{
    Outcome o;
    const Exponent T = 1000;
    const auto comparisons = torus::oracle_comparisons(T);
    o.require(comparisons.size() == 12, "expected 12 oracle comparisons");
    for (const auto& c : comparisons) {
        o.require(c.match, torus::configuration_name(c.configuration) + " base " + std::to_string(c.base_index) +
                               ": " + c.detail);
    }
    const auto xx = torus::triangle_oracle(make_rational(0), make_rational(3), make_rational(6), T);
    const auto x1y1 = xx.find({make_rational(1, 3), make_rational(1, 6)});
    o.require(x1y1 != xx.end() && x1y1->second.valuation() == 12 && x1y1->second.leading() == 1,
              "minimal X X triangle exponent is not 12");
    const auto yx = torus::triangle_oracle(make_rational(1, 6), make_rational(6), make_rational(9), T);
    const auto y1z2 = yx.find({make_rational(1, 3), make_rational(2, 9)});
    o.require(y1z2 != yx.end() && y1z2->second.valuation() == 4 && y1z2->second.leading() == 1,
              "minimal Y X triangle exponent is not 4");
    return o;
}

Outcome criterion_identities()
{
    Outcome o;
    const Exponent T = 1000;
    for (long a = 0; a < 6; ++a) {
        for (long b = 0; b < 18; ++b) {
            o.require(theta::mumford_identity_check(a, b, 6, 3, T),
                      "addition formula fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            o.require(theta::ab_decomposition(a, b, T).equal,
                      "A_a B_b decomposition fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    fukaya::ThetaTable t(T);
    auto A = [&](long k) { return t.A(k); };
    auto B = [&](long k) { return t.B(k); };
    o.require(testing_support::agree(A(0) * B(2) + A(3) * B(7), A(1) * B(1) + A(2) * B(8)), "first displayed relation");
    o.require(testing_support::agree(A(0) * B(8) + A(3) * B(1), A(1) * B(5) + A(2) * B(4)), "second displayed relation");
    o.require(testing_support::agree(A(0) * B(4) + A(3) * B(5), A(1) * B(7) + A(2) * B(2)), "third displayed relation");
    for (long i = 0; i < 3; ++i) {
        for (long j = 0; j < 3; ++j) {
            for (long k = 0; k < 3; ++k) {
                o.require(fukaya::associativity_check(i, j, k, t), "associativity fails at (" + std::to_string(i) +
                                                                       "," + std::to_string(j) + "," +
                                                                       std::to_string(k) + ")");
            }
        }
    }
    o.require(fukaya::commutativity_check_xx(t), "X X commutativity fails");
    return o;
}

Outcome criterion_relation()
{
    Outcome o;
    const auto sm = relation::structure_matrix(800); // throws on any entry mismatch
    const auto& pattern = relation::matrix_pattern();
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 10; ++c) {
            const char sym = pattern[r][c];
            const bool zero = sm.m(r, c).is_zero();
            o.require(sym == '0' ? zero : (!zero && testing_support::agree(sm.m(r, c), sm.forms.symbol(sym, sm.truncation))),
                      "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs");
        }
    }
    const auto k = relation::analyze_kernel(sm);
    o.require(k.middle_minors_vanish, "minors 3..8 do not vanish");
    o.require(k.u_equals_v, "u != v");
    o.require(k.raw_equals_scaled_relation, "raw vector != (p - q) a");
    o.require(k.factorization_holds, "2q^2 - pq - p^2 != -(p - q)(p + 2q)");
    o.require(k.minors_proportional_to_raw, "minors not proportional to the raw vector");
    o.require(k.residual_vanishes, "M a != 0");
    o.require(k.rank_certified, "no nonzero 9x9 minor");
    o.require(relation::kernel_dimension_certificate(sm.m), "rank certificate failed");
    return o;
}

Outcome criterion_properties()
{
    Outcome o;
    std::mt19937_64 rng(61);
    for (int round = 0; round < 300; ++round) {
        auto a = testing_support::random_series(rng, -6, 6, 2, 14);
        auto b = testing_support::random_series(rng, -6, 6, 2, 14);
        auto c = testing_support::random_series(rng, -6, 6, 2, 14);
        auto same = [](const LaurentSeries& x, const LaurentSeries& y) {
            return eq_to_order(x, y, std::min(x.truncation(), y.truncation()));
        };
        o.require(same(a + b, b + a) && same(a * b, b * a), "commutativity");
        o.require(same((a + b) + c, a + (b + c)) && same((a * b) * c, a * (b * c)), "associativity");
        o.require(same(a * (b + c), a * b + a * c), "distributivity");
        o.require(same(a * inverse(a), LaurentSeries::one(a.truncation() - a.valuation())), "inverse");
        auto ac = a.truncated(a.truncation() - 1);
        auto bc = b.truncated(b.truncation() - 1);
        auto fine = a * inverse(b);
        auto coarse = ac * inverse(bc);
        o.require(coarse.truncation() <= fine.truncation() && eq_to_order(coarse, fine, coarse.truncation()),
                  "precision soundness");
    }
    for (long k = -6; k <= 12; ++k) {
        o.require(theta::family_series(theta::Family::A, k, 1500) == theta::family_series(theta::Family::A, 6 - k, 1500),
                  "A_k != A_{6-k}");
    }
    for (long k = -18; k <= 36; ++k) {
        o.require(theta::family_series(theta::Family::B, k, 1500) ==
                      theta::family_series(theta::Family::B, 18 - k, 1500),
                  "B_k != B_{18-k}");
    }
    for (long k = -18; k <= 18; ++k) {
        o.require(torus::symplectic_character(torus::phi_map(k)) == -1, "phi is not anti-symplectic");
        o.require(torus::phi_vertex_check(k), "phi vertex images fail at k = " + std::to_string(k));
    }
    o.require(torus::power(torus::gamma_map(), 3) == torus::rho_map(), "gamma^3 != rho");
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"j-expansion reproduction (order_x 200, five coefficients)", criterion_jcheck},
        {"theta family expansions (order_x 400)", criterion_theta},
        {"triangle oracle equivalence (y-order 1000)", criterion_oracle},
        {"identity suite (y-order 1000)", criterion_identities},
        {"relation extraction (y-order 800)", criterion_relation},
        {"property suite", criterion_properties},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%d] %s  (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name, secs,
                    o.ok ? "" : "  ", o.note.c_str());
        if (!o.ok) {
            ++failures;
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
