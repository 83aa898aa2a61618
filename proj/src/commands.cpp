#include "commands.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "fukaya.hpp"
#include "mirror.hpp"
#include "oracle_check.hpp"
#include "relation.hpp"
#include "series_json.hpp"

namespace tmirror::cli {

namespace {

using nlohmann::ordered_json;

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

ordered_json header(const std::string& command, std::int64_t order_x)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["order_x"] = order_x;
    return j;
}

std::string display(const LaurentSeries& s)
{
    return expressible_in_x(s) ? to_string(rebase_to_x(s)) : to_string(s, "y");
}

Report checks_report(const std::string& which, std::int64_t order_x, const std::vector<SubCheck>& checks)
{
    Report r;
    r.command = "verify";
    r.json = header("verify", order_x);
    r.json["check"] = which;
    auto list = ordered_json::array();
    std::size_t passed = 0;
    std::ostringstream text;
    text << "verify " << which << " (order_x = " << order_x << ", y-order " << y_order(order_x) << ")\n";
    for (const auto& c : checks) {
        ordered_json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        if (!c.detail.empty()) {
            item["detail"] = c.detail;
        }
        list.push_back(std::move(item));
        passed += c.pass ? 1 : 0;
        text << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) {
            text << "  [" << c.detail << "]";
        }
        text << "\n";
    }
    r.passed = (passed == checks.size());
    r.json["checks"] = std::move(list);
    r.json["passed"] = passed;
    r.json["total"] = checks.size();
    r.json["verdict"] = r.passed;
    text << passed << "/" << checks.size() << " pass\n";
    r.text = text.str();
    return r;
}

std::string pair_name(std::int64_t a, std::int64_t b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool expansion_is(const fukaya::ProductExpansion& e, const std::map<std::int64_t, LaurentSeries>& want, Exponent T)
{
    fukaya::ProductExpansion w{e.target, want};
    return fukaya::same_expansion(e, w, T);
}

std::vector<SubCheck> product_checks(Exponent T)
{
    const fukaya::ThetaTable t(T);
    std::vector<SubCheck> out;

    out.push_back({"X0*X1 = A1 Y1 + A2 Y4", expansion_is(fukaya::product_xx(0, 1, t), {{1, t.A(1)}, {4, t.A(2)}}, T), {}});
    out.push_back({"X0*X0 = A0 Y0 + A3 Y3", expansion_is(fukaya::product_xx(0, 0, t), {{0, t.A(0)}, {3, t.A(3)}}, T), {}});
    out.push_back({"Y1*X1 = B1 Z2 + B7 Z5 + B13 Z8",
                   expansion_is(fukaya::product_yx(1, 1, t), {{2, t.B(1)}, {5, t.B(7)}, {8, t.B(13)}}, T), {}});
    {
        const auto e = fukaya::product_yx(1, 2, t);
        auto it = e.coefficients.find(3);
        out.push_back({"Y1*X2 = B3 Z3 + ...", it != e.coefficients.end() && eq_to_order(it->second, t.B(3), T), {}});
    }

    bool distinct = true;
    for (std::int64_t i = 0; i < 6; ++i) {
        for (std::int64_t j = 0; j < 3; ++j) {
            distinct = distinct && fukaya::product_yx(i, j, t).coefficients.size() == 3;
            if (i < 3) {
                distinct = distinct && fukaya::product_xx(i, j, t).coefficients.size() == 2;
            }
        }
    }
    out.push_back({"product targets never collide", distinct, {}});

    // The three Z-coefficient identities behind (X0^2) X1 = X0 (X0 X1).
    const auto l = fukaya::left_associated(0, 0, 1, t);
    const auto r = fukaya::right_associated(0, 0, 1, t);
    const auto rel = [&](const char* name, std::size_t z, const LaurentSeries& lhs, const LaurentSeries& rhs) {
        out.push_back({name, eq_to_order(lhs, rhs, T) && eq_to_order(l[z], lhs, T) && eq_to_order(r[z], rhs, T), {}});
    };
    rel("A0B2 + A3B7 = A1B1 + A2B8", 1, t.A(0) * t.B(2) + t.A(3) * t.B(7), t.A(1) * t.B(1) + t.A(2) * t.B(8));
    rel("A0B8 + A3B1 = A1B5 + A2B4", 4, t.A(0) * t.B(8) + t.A(3) * t.B(1), t.A(1) * t.B(5) + t.A(2) * t.B(4));
    rel("A0B4 + A3B5 = A1B7 + A2B2", 7, t.A(0) * t.B(4) + t.A(3) * t.B(5), t.A(1) * t.B(7) + t.A(2) * t.B(2));

    for (std::int64_t a = 0; a < 6; ++a) {
        for (std::int64_t b = 0; b < 18; ++b) {
            out.push_back({"A" + std::to_string(a) + "B" + std::to_string(b) + " = sum C D",
                           theta::ab_decomposition(a, b, T).equal, {}});
        }
    }

    const auto cert = fukaya::degree2_certificate(t);
    out.push_back({"degree-2 monomials span Hom(S, L_2)", !cert.determinant.is_zero(),
                   "leading term " + cert.determinant.leading().get_str() + " y^" +
                       std::to_string(cert.determinant.valuation())});
    out.push_back({"A0A1 - A2A3 != 0", !cert.a0a1_minus_a2a3.is_zero(), {}});
    return out;
}

std::vector<SubCheck> commutativity_checks(Exponent T)
{
    const fukaya::ThetaTable t(T);
    std::vector<SubCheck> out;
    for (std::int64_t i = 0; i < 3; ++i) {
        for (std::int64_t j = 0; j < 3; ++j) {
            out.push_back({"X" + std::to_string(i) + "*X" + std::to_string(j) + " = X" + std::to_string(j) + "*X" +
                               std::to_string(i),
                           fukaya::same_expansion(fukaya::product_xx(i, j, t), fukaya::product_xx(j, i, t), T), {}});
        }
    }
    return out;
}

std::vector<SubCheck> associativity_checks(Exponent T)
{
    const fukaya::ThetaTable t(T);
    std::vector<SubCheck> out;
    for (std::int64_t i = 0; i < 3; ++i) {
        for (std::int64_t j = 0; j < 3; ++j) {
            for (std::int64_t k = 0; k < 3; ++k) {
                out.push_back({"(X" + std::to_string(i) + "X" + std::to_string(j) + ")X" + std::to_string(k) +
                                   " = X" + std::to_string(i) + "(X" + std::to_string(j) + "X" + std::to_string(k) +
                                   ")",
                               fukaya::associativity_check(i, j, k, t), {}});
            }
        }
    }
    return out;
}

std::vector<SubCheck> mumford_checks(Exponent T)
{
    std::vector<SubCheck> out;
    for (std::int64_t a = 0; a < 6; ++a) {
        for (std::int64_t b = 0; b < 18; ++b) {
            out.push_back({"n=6 k=3 " + pair_name(a, b), theta::mumford_identity_check(a, b, 6, 3, T), {}});
        }
    }
    return out;
}

std::vector<SubCheck> oracle_checks(Exponent T)
{
    std::vector<SubCheck> out;
    for (const auto& c : torus::oracle_comparisons(T)) {
        out.push_back({torus::configuration_name(c.configuration) + " from base " + std::to_string(c.base_index),
                       c.match, c.detail});
    }
    if (T > 12) {
        const auto bins = torus::triangle_oracle(Rational(0), Rational(3), Rational(6), T);
        auto it = bins.find({make_rational(1, 3), make_rational(1, 6)});
        out.push_back({"minimal triangle X0, X1, Y1 has exponent 12",
                       it != bins.end() && it->second.valuation() == 12, {}});
    }
    if (T > 4) {
        const auto bins = torus::triangle_oracle(make_rational(1, 6), Rational(6), Rational(9), T);
        auto it = bins.find({make_rational(1, 3), make_rational(2, 9)});
        out.push_back({"minimal triangle Y1, X1, Z2 has exponent 4",
                       it != bins.end() && it->second.valuation() == 4, {}});
    }
    return out;
}

std::vector<SubCheck> matrix_checks(Exponent T)
{
    const fukaya::ThetaTable t(T);
    const auto forms = relation::ClosedForms::from_table(t);
    const auto& basis = fukaya::cubic_basis();
    std::vector<SubCheck> out;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto z = fukaya::cubic_expand(basis[col], t);
        bool ok = true;
        std::string detail;
        std::string column;
        for (std::size_t row = 0; row < 9; ++row) {
            const char sym = relation::matrix_pattern()[row][col];
            column += sym;
            if (!eq_to_order(z[row], forms.symbol(sym, T), T)) {
                ok = false;
                detail = "row Z_" + std::to_string(row) + " differs from " + sym;
            }
        }
        out.push_back({"column " + fukaya::monomial_name(basis[col]) + " = (" + column + ")", ok, detail});
    }
    return out;
}

std::vector<SubCheck> kernel_checks(const relation::KernelAnalysis& k)
{
    return {
        {"u = v", k.u_equals_v, {}},
        {"signed minors 3..8 vanish", k.middle_minors_vanish, {}},
        {"minors proportional to ((p+q)u-2qv, pv-qu, pv-qu, 0.., 2q^2-pq-p^2)", k.minors_proportional_to_raw, {}},
        {"raw form = (p-q)(u,u,u,0,..,0,-(p+2q))", k.raw_equals_scaled_relation, {}},
        {"2q^2 - pq - p^2 = -(p-q)(p+2q)", k.factorization_holds, {}},
        {"p - q nonzero", k.p_minus_q_nonzero, {}},
        {"M a = 0", k.residual_vanishes, {}},
        {"rank certificate (a 9x9 minor is nonzero)", k.rank_certified, {}},
    };
}

std::vector<SubCheck> relation_checks(Exponent T)
{
    return kernel_checks(relation::analyze_kernel(relation::structure_matrix(T)));
}

} // namespace

Exponent y_order(std::int64_t order_x)
{
    if (order_x < 1) {
        throw InvalidArgument("order_x must be at least 1");
    }
    return 4 * order_x;
}

Report run_theta(theta::Family family, std::int64_t index, std::int64_t order_x)
{
    const theta::FamilyIndex fi(family, index);
    const LaurentSeries s = theta::family_series(fi, y_order(order_x));
    const bool x_base = expressible_in_x(s);
    const std::string name = std::string(1, theta::family_letter(family)) + "_" + std::to_string(fi.index);

    Report r;
    r.command = "theta";
    r.json = header("theta", order_x);
    r.json["family"] = std::string(1, theta::family_letter(family));
    r.json["index"] = fi.index;
    r.json["x_base"] = x_base;
    r.json["series"] = series_record_preferring_x(s);
    r.text = name + " = " + display(s) + "\n";
    if (!x_base) {
        r.text += "(exponents in y = x^(1/4); not expressible in x)\n";
    }
    return r;
}

Report run_verify(std::string_view which, std::int64_t order_x)
{
    static const std::map<std::string, std::function<std::vector<SubCheck>(Exponent)>, std::less<>> suites{
        {"products", product_checks},
        {"commutativity", commutativity_checks},
        {"associativity", associativity_checks},
        {"mumford", mumford_checks},
        {"oracle", oracle_checks},
        {"matrix", matrix_checks},
        {"relation", relation_checks},
    };
    auto it = suites.find(which);
    if (it == suites.end()) {
        throw InvalidArgument("unknown verification: " + std::string(which));
    }
    return checks_report(it->first, order_x, it->second(y_order(order_x)));
}

std::int64_t required_order_x(int n_terms)
{
    return (mirror::required_truncation(n_terms) + 3) / 4;
}

Report run_jcheck(std::int64_t order_x, int n_terms)
{
    if (n_terms < 1) {
        throw InvalidArgument("--terms must be at least 1");
    }
    const Exponent T = y_order(order_x);
    if (T < mirror::required_truncation(n_terms)) {
        throw PrecisionError("order_x " + std::to_string(order_x) + " cannot certify " + std::to_string(n_terms) +
                             " terms; need --order-x " + std::to_string(required_order_x(n_terms)) + " or more");
    }
    const auto rep = mirror::mirror_map_check(T, n_terms);

    Report r;
    r.command = "jcheck";
    r.passed = rep.verdict;
    r.json = header("jcheck", order_x);
    r.json["terms"] = n_terms;
    auto rows = ordered_json::array();
    std::ostringstream text;
    text << "jcheck (order_x = " << order_x << ", " << n_terms << " terms)\n";
    text << "  " << std::left << std::setw(10) << "exponent" << std::setw(22) << "from relation" << std::setw(22)
         << "reference" << "match\n";
    for (const auto& row : rep.coefficients) {
        ordered_json item;
        item["exponent_x"] = row.exponent_x;
        item["from_relation"] = row.from_relation.get_str();
        item["reference"] = row.reference.get_str();
        item["match"] = row.match;
        rows.push_back(std::move(item));
        text << "  " << std::left << std::setw(10) << ("x^" + std::to_string(row.exponent_x)) << std::setw(22)
             << row.from_relation.get_str() << std::setw(22) << row.reference.get_str()
             << (row.match ? "yes" : "NO") << "\n";
    }
    r.json["coefficients"] = std::move(rows);
    r.json["support_ok"] = rep.support_ok;
    r.json["verdict"] = rep.verdict;
    text << "support on multiples of x^36: " << (rep.support_ok ? "yes" : "NO") << "\n";
    text << "verdict: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
    r.text = text.str();
    return r;
}

Report run_matrix(std::int64_t order_x)
{
    const Exponent T = y_order(order_x);
    static const std::vector<std::pair<char, const char*>> definitions{
        {'p', "A0B0 + A3B9"}, {'q', "A0B6 + A3B3"}, {'r', "A0B2 + A3B7"}, {'s', "A0B8 + A3B1"},
        {'t', "A0B4 + A3B5"}, {'u', "A2B0 + A1B9"}, {'v', "A2B6 + A1B3"},
    };
    const auto sm = relation::structure_matrix(T);

    Report r;
    r.command = "matrix";
    r.json = header("matrix", order_x);
    std::ostringstream text;
    auto columns = ordered_json::array();
    text << "M (rows Z_0..Z_8; columns";
    for (const auto& m : fukaya::cubic_basis()) {
        columns.push_back(fukaya::monomial_name(m));
        text << " " << fukaya::monomial_name(m);
    }
    text << ")\n";
    auto pattern = ordered_json::array();
    for (const auto& row : relation::matrix_pattern()) {
        pattern.push_back(row);
        text << " ";
        for (char c : row) {
            text << " " << c;
        }
        text << "\n";
    }
    auto entries = ordered_json::object();
    for (const auto& [sym, def] : definitions) {
        const LaurentSeries s = sm.forms.symbol(sym, T);
        ordered_json e;
        e["definition"] = def;
        e["series"] = series_record_preferring_x(s);
        entries[std::string(1, sym)] = std::move(e);
        text << sym << " = " << def << " = " << display(s) << "\n";
    }
    r.json["columns"] = std::move(columns);
    r.json["pattern"] = std::move(pattern);
    r.json["entries"] = std::move(entries);
    r.json["verdict"] = true;
    r.text = text.str();
    return r;
}

Report run_relation(std::int64_t order_x)
{
    const Exponent T = y_order(order_x);
    const auto sm = relation::structure_matrix(T);
    const auto k = relation::analyze_kernel(sm);
    static const std::array<const char*, 10> symbols{"u", "u", "u", "0", "0", "0", "0", "0", "0", "-(p+2q)"};

    Report r;
    r.command = "relation";
    r.passed = k.ok();
    r.json = header("relation", order_x);
    std::ostringstream text;
    text << "a = (u, u, u, 0, 0, 0, 0, 0, 0, -(p+2q))\n";
    auto coeffs = ordered_json::array();
    const auto& basis = fukaya::cubic_basis();
    for (std::size_t i = 0; i < 10; ++i) {
        const auto& s = k.relation.coefficients[i];
        ordered_json c;
        c["monomial"] = fukaya::monomial_name(basis[i]);
        c["symbol"] = symbols[i];
        c["series"] = series_record_preferring_x(s);
        coeffs.push_back(std::move(c));
        text << "  a_" << i << " (" << fukaya::monomial_name(basis[i]) << ") = " << display(s) << "\n";
    }
    r.json["coefficients"] = std::move(coeffs);
    auto checks = ordered_json::object();
    for (const auto& c : kernel_checks(k)) {
        checks[c.name] = c.pass;
        text << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
    }
    r.json["checks"] = std::move(checks);
    r.json["verdict"] = r.passed;
    text << "relation: u (X0^3 + X1^3 + X2^3) - (p + 2q) X0 X1 X2 = 0\n";
    r.text = text.str();
    return r;
}

} // namespace tmirror::cli
