#include "supermonad/io.hpp"

#include "supermonad/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace supermonad::io {

Json rational_json(const Rational& q)
{
    return to_string(q);
}

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return to_string(z);
}

Rational parse_rational_json(const Json& j, const char* field)
{
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ValidationError(std::string(field) + " must be an integer or a \"p/q\" string", field);
}

namespace {

std::int64_t get_int(const Json& j, const char* key, const char* field)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ValidationError(std::string("missing integer \"") + key + "\"", field);
    return j.at(key).get<std::int64_t>();
}

std::vector<std::int64_t> get_int_list(const Json& j, const char* field)
{
    if (!j.is_array())
        throw ValidationError(std::string(field) + " must be an array of integers", field);
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ValidationError(std::string(field) + " must be an array of integers", field);
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::string paren_list(const std::vector<std::int64_t>& v)
{
    return "(" + fmt::format("{}", fmt::join(v, ",")) + ")";
}

std::string summand_name(const SchurTerm& t)
{
    const auto& p = t.weight.parts();
    const std::size_t n = p.size();
    std::string base;
    const auto ones = static_cast<std::size_t>(std::count(p.begin(), p.end(), 1));
    const auto zeros = static_cast<std::size_t>(std::count(p.begin(), p.end(), 0));
    if (zeros == n) {
        return t.twist == 0 ? "O" : fmt::format("O({})", t.twist);
    } else if (ones == 1 && zeros == n - 1) {
        base = "Q*";
    } else if (zeros == n - 1) {
        base = fmt::format("Sym^{}Q*", p[0]);
    } else if (ones + zeros == n) {
        base = fmt::format("L^{}Q*", ones);
    } else {
        base = "S_" + paren_list(p) + "Q*";
    }
    if (t.twist == 0)
        return base;
    if (base == "Q*")
        return fmt::format("Q*({})", t.twist);
    return fmt::format("({})({})", base, t.twist);
}

} // namespace

Json weight_json(const std::vector<std::int64_t>& parts)
{
    Json a = Json::array();
    for (auto x : parts)
        a.push_back(x);
    return a;
}

Json bundle_json(const BundleExpr& b)
{
    Json s = Json::array();
    for (const auto& [term, mult] : b.summands())
        s.push_back(Json{{"weight", weight_json(term.weight.parts())},
                         {"twist", term.twist},
                         {"mult", integer_json(mult)},
                         {"label", summand_name(term)}});
    return Json{{"n", b.n()}, {"summands", s}};
}

BundleExpr parse_bundle(const Json& j, std::size_t n)
{
    if (!j.is_object())
        throw ValidationError("bundle must be a JSON object", "bundle");
    if (j.contains("n") && j.at("n") != Json(n))
        throw ValidationError("bundle ambient dimension differs from the sheaf's", "n");
    if (!j.contains("summands") || !j.at("summands").is_array())
        throw ValidationError("bundle needs a \"summands\" array", "summands");
    BundleExpr b(n);
    for (const auto& s : j.at("summands")) {
        if (!s.is_object() || !s.contains("weight"))
            throw ValidationError("each summand needs a \"weight\"", "weight");
        const Weight alpha(get_int_list(s.at("weight"), "weight"));
        const std::int64_t twist = s.contains("twist") ? get_int(s, "twist", "twist") : 0;
        const Rational mult = s.contains("mult") ? parse_rational_json(s.at("mult"), "mult") : Rational(1);
        if (!is_integral(mult))
            throw ValidationError("bundle multiplicities must be integers", "mult");
        b.add(alpha, twist, mult.get_num());
    }
    return b;
}

std::string describe(const BundleExpr& b)
{
    if (b.is_zero())
        return "0";
    std::vector<std::string> parts;
    for (const auto& [term, mult] : b.summands()) {
        std::string s = summand_name(term);
        if (mult != 1)
            s += "^" + to_string(mult);
        parts.push_back(std::move(s));
    }
    return fmt::format("{}", fmt::join(parts, " + "));
}

Json table_json(const CohomologyTable& t)
{
    Json rows = Json::object();
    for (std::size_t i = 0; i <= t.n(); ++i) {
        Json row = Json::object();
        for (std::int64_t j = t.window().lo; j <= t.window().hi; ++j)
            if (t.at(i, j) != 0)
                row[std::to_string(j)] = rational_json(t.at(i, j));
        rows[std::to_string(i)] = row;
    }
    return Json{{"n", t.n()}, {"window", {t.window().lo, t.window().hi}}, {"rows", rows}};
}

CohomologyTable parse_table(const Json& j)
{
    if (!j.is_object())
        throw ValidationError("table must be a JSON object", "table");
    const auto n = get_int(j, "n", "n");
    if (n < 1)
        throw ValidationError("ambient dimension must be positive", "n");
    if (!j.contains("window"))
        throw ValidationError("table needs a window", "window");
    const auto w = get_int_list(j.at("window"), "window");
    if (w.size() != 2)
        throw ValidationError("window must be [a,b]", "window");
    CohomologyTable t(static_cast<std::size_t>(n), Window(w[0], w[1]));
    if (!j.contains("rows"))
        return t;
    if (!j.at("rows").is_object())
        throw ValidationError("rows must map degrees to columns", "rows");
    for (const auto& [ik, row] : j.at("rows").items()) {
        std::size_t i = 0;
        try {
            i = std::stoul(ik);
        } catch (const std::exception&) {
            throw ValidationError("row key \"" + ik + "\" is not a degree", "rows");
        }
        if (!row.is_object())
            throw ValidationError("each row must map twists to entries", "rows");
        for (const auto& [jk, v] : row.items()) {
            std::int64_t col = 0;
            try {
                col = std::stoll(jk);
            } catch (const std::exception&) {
                throw ValidationError("column key \"" + jk + "\" is not a twist", "rows");
            }
            t.set(i, col, parse_rational_json(v, "rows"));
        }
    }
    return t;
}

std::string render_table(const CohomologyTable& t)
{
    const auto& w = t.window();
    std::size_t width = 1;
    for (std::int64_t j = w.lo; j <= w.hi; ++j) {
        width = std::max(width, std::to_string(j).size());
        for (std::size_t i = 0; i <= t.n(); ++i)
            width = std::max(width, to_string(t.at(i, j)).size());
    }
    const std::string label_pad = fmt::format("{:<6}", "");
    std::string out = label_pad;
    for (std::int64_t j = w.lo; j <= w.hi; ++j)
        out += fmt::format(" {:>{}}", j, width);
    out += "\n";
    for (std::size_t r = 0; r <= t.n(); ++r) {
        const std::size_t i = t.n() - r;
        out += fmt::format("{:<6}", fmt::format("h^{}", i));
        for (std::int64_t j = w.lo; j <= w.hi; ++j) {
            const auto& x = t.at(i, j);
            out += fmt::format(" {:>{}}", x == 0 ? std::string(".") : to_string(x), width);
        }
        out += "\n";
    }
    return out;
}

SheafExpr parse_sheaf(const Json& j)
{
    if (!j.is_object())
        throw ValidationError("sheaf must be a JSON object", "sheaf");
    const auto n = get_int(j, "n", "n");
    if (n < 1)
        throw ValidationError("ambient dimension must be positive", "n");
    const auto nn = static_cast<std::size_t>(n);
    if (j.contains("summands"))
        return SheafExpr(parse_bundle(j, nn));
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ValidationError("sheaf needs a \"terms\" array or \"summands\"", "terms");
    SheafExpr f(nn);
    for (const auto& t : j.at("terms")) {
        if (!t.is_object())
            throw ValidationError("each term must be an object", "terms");
        const Rational coeff = t.contains("coeff") ? parse_rational_json(t.at("coeff"), "coeff") : Rational(1);
        if (coeff <= 0)
            throw ValidationError("term coefficients must be positive", "coeff");
        if (t.contains("bundle")) {
            f.add(coeff, parse_bundle(t.at("bundle"), nn));
        } else if (t.contains("linear")) {
            const auto& l = t.at("linear");
            const auto m = get_int(l, "m", "m");
            if (m < 0)
                throw ValidationError("linear subspace dimension must be nonnegative", "m");
            const std::int64_t d = l.contains("d") ? get_int(l, "d", "d") : 0;
            f.add(coeff, LinearSubspace{static_cast<std::size_t>(m), d});
        } else if (t.contains("supernatural")) {
            const auto& s = t.at("supernatural");
            if (!s.contains("roots"))
                throw ValidationError("supernatural term needs roots", "roots");
            const Rational sc = s.contains("scale") ? parse_rational_json(s.at("scale"), "scale") : Rational(1);
            f.add(coeff, FormalSupernatural{RootSequence(get_int_list(s.at("roots"), "roots")), sc});
        } else if (t.contains("table")) {
            f.add(coeff, parse_table(t.at("table")));
        } else {
            throw ValidationError("term must be one of bundle, linear, supernatural, table", "terms");
        }
    }
    return f;
}

Json sheaf_json(const SheafExpr& f)
{
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        Json o{{"coeff", rational_json(t.coeff)}};
        std::visit(
            [&o](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, BundleExpr>)
                    o["bundle"] = bundle_json(x);
                else if constexpr (std::is_same_v<T, LinearSubspace>)
                    o["linear"] = Json{{"m", x.m}, {"d", x.d}};
                else if constexpr (std::is_same_v<T, FormalSupernatural>)
                    o["supernatural"] = Json{{"roots", weight_json(x.roots.roots())}, {"scale", rational_json(x.scale)}};
                else
                    o["table"] = table_json(x);
            },
            t.term);
        terms.push_back(o);
    }
    return Json{{"n", f.n()}, {"terms", terms}};
}

Json load_json_arg(const std::string& text, const char* field)
{
    std::string body = text;
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw ValidationError("cannot read " + text.substr(1), field);
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what(), field);
    }
}

Json page_json(const SpectralPage& page)
{
    Json entries = Json::array();
    for (const auto& e : page.entries) {
        Json o{{"p", e.p}, {"q", e.q}};
        if (page.kind == PageKind::Phi1)
            o["object"] = -page.w[e.q];
        else
            o["object"] = bundle_json(e.object);
        o["label"] = describe(e.object);
        o["mult"] = integer_json(e.mult);
        entries.push_back(o);
    }
    return Json{{"kind", page.kind == PageKind::Phi1 ? "phi1" : "phi2"}, {"entries", entries}};
}

std::string render_page(const SpectralPage& page)
{
    std::string out = page.kind == PageKind::Phi1 ? "Phi_1 page" : "Phi_2 page";
    out += " (p, q): object ^ multiplicity\n";
    if (page.entries.empty())
        return out + "  (all entries vanish)\n";
    for (const auto& e : page.entries)
        out += fmt::format("  ({}, {}): {}^{}\n", e.p, e.q, describe(e.object), to_string(e.mult));
    return out;
}

Json filtration_json(const Filtration& f)
{
    Json q = Json::array();
    for (const auto& [b, k] : f.quotients)
        q.push_back(Json{{"bundle", bundle_json(b)}, {"label", describe(b)}, {"mult", integer_json(k)}});
    Json obs = Json::array();
    for (const auto& [upper, lower, dim] : f.obstructions)
        obs.push_back(Json{{"upper", upper}, {"lower", lower}, {"ext1", integer_json(dim)}});
    return Json{{"quotients", q},
                {"split", f.split_certified ? "certified-split" : "extension-unknown"},
                {"obstructions", obs}};
}

Json resolution_json(const Resolution& r)
{
    Json terms = Json::array();
    for (const auto& t : r.terms)
        terms.push_back(Json{{"bundle", bundle_json(t)}, {"label", describe(t)}});
    return Json{{"terms", terms}};
}

Json strands_json(const TwoStrandReport& r, const MonadData& m)
{
    auto strand = [&](const std::vector<StrandTerm>& s) {
        Json a = Json::array();
        for (const auto& t : s)
            a.push_back(Json{{"j", t.j}, {"twist", -m.w[t.j]}, {"mult", integer_json(t.mult)}});
        return a;
    };
    Json o{{"d", r.d}, {"single_term", r.single_term}};
    if (r.single_term) {
        o["result"] = describe(BundleExpr::line(m.n, r.d, m.n_w));
        return o;
    }
    o["i"] = r.i;
    o["a"] = strand(r.a);
    o["b"] = strand(r.b);
    Json ranks = Json::array();
    for (const auto& x : r.witness_ranks)
        ranks.push_back(integer_json(x));
    o["witness"] = Json{{"degrees", weight_json(r.witness.degrees())}, {"ranks", ranks}};
    o["split"] = r.split;
    return o;
}

Json convergence_json(const Convergence& c, const MonadData& m)
{
    return std::visit(
        [&](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyPage>)
                return Json{{"kind", "empty"}};
            else if constexpr (std::is_same_v<T, Resolution>)
                return Json{{"kind", "resolution"}, {"resolution", resolution_json(x)}};
            else if constexpr (std::is_same_v<T, Filtration>)
                return Json{{"kind", "filtration"}, {"filtration", filtration_json(x)}};
            else if constexpr (std::is_same_v<T, TwoStrandReport>)
                return Json{{"kind", "two-strand"}, {"strands", strands_json(x, m)}};
            else
                return Json{{"kind", "indeterminate"}, {"reason", x.reason}};
        },
        c);
}

std::string render_convergence(const Convergence& c, const MonadData& m)
{
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyPage>) {
                return "converges to 0\n";
            } else if constexpr (std::is_same_v<T, Resolution>) {
                std::string s = "resolution: 0 <- Phi";
                for (const auto& t : x.terms)
                    s += " <- " + describe(t);
                return s + " <- 0\n";
            } else if constexpr (std::is_same_v<T, Filtration>) {
                std::string s = "filtration (bottom to top):";
                for (const auto& [b, k] : x.quotients)
                    s += " [" + describe(b.scaled(k)) + "]";
                s += x.split_certified ? "\nsplit: certified (Ext^1 between quotients vanishes)\n"
                                       : "\nsplit: extension unknown\n";
                for (const auto& [upper, lower, dim] : x.obstructions)
                    s += fmt::format("  Ext^1(quotient {}, quotient {}) has dimension {}\n", upper, lower,
                                     to_string(dim));
                return s;
            } else if constexpr (std::is_same_v<T, TwoStrandReport>) {
                std::string s = fmt::format("Phi_1(O({})) from two strands, i = {}\n", x.d, x.i);
                auto strand = [&](const char* name, const std::vector<StrandTerm>& st) {
                    s += fmt::format("  {}:", name);
                    for (const auto& t : st)
                        s += " " + describe(BundleExpr::line(m.n, -m.w[t.j], t.mult));
                    s += "\n";
                };
                strand("A", x.a);
                strand("B", x.b);
                s += fmt::format("  EFW witness {} ranks", paren_list(x.witness.degrees()));
                for (const auto& r : x.witness_ranks)
                    s += " " + to_string(r);
                return s + "\n  split: ker A + coker B\n";
            } else {
                return "indeterminate: " + x.reason + "\n";
            }
        },
        c);
}

Json decomposition_json(const BSDecomposition& d)
{
    Json a = Json::array();
    for (const auto& t : d.terms)
        a.push_back(Json{{"roots", weight_json(t.roots.roots())}, {"coeff", rational_json(t.coeff)}});
    return a;
}

BSDecomposition parse_decomposition(const Json& j, std::size_t n)
{
    if (!j.is_array())
        throw ValidationError("decomposition must be an array", "decomposition");
    BSDecomposition d;
    d.n = n;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("roots") || !t.contains("coeff"))
            throw ValidationError("decomposition terms need roots and coeff", "decomposition");
        RootSequence f(get_int_list(t.at("roots"), "roots"));
        if (f.size() != n)
            throw ValidationError("root sequence length differs from n", "roots");
        d.terms.push_back({std::move(f), parse_rational_json(t.at("coeff"), "coeff")});
    }
    return d;
}

Json coordinates_json(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rational_json(x));
    return a;
}

} // namespace supermonad::io
