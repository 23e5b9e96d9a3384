#include "cli.hpp"

#include "supermonad/bwb.hpp"
#include "supermonad/decomp.hpp"
#include "supermonad/errors.hpp"
#include "supermonad/io.hpp"
#include "supermonad/ktheory.hpp"
#include "supermonad/monad.hpp"
#include "supermonad/sheaves.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <optional>
#include <string>
#include <vector>

namespace supermonad {

namespace {

using io::Json;

struct Options {
    std::size_t n = 0;
    std::vector<std::int64_t> w;
    std::vector<std::int64_t> alpha;
    std::optional<std::int64_t> d;
    std::string window;
    std::string sheaf;
    std::string phi2_table;
    std::string format = "text";
    std::string page_kind;
    std::string k0_mode;
    std::string example;
};

struct Output {
    Json data;
    std::string text;
};

std::string rational_list(const std::vector<Rational>& v)
{
    std::vector<std::string> s;
    for (const auto& x : v)
        s.push_back(to_string(x));
    return "(" + fmt::format("{}", fmt::join(s, ", ")) + ")";
}

std::string integer_list(const std::vector<Integer>& v)
{
    std::vector<std::string> s;
    for (const auto& x : v)
        s.push_back(to_string(x));
    return "(" + fmt::format("{}", fmt::join(s, ", ")) + ")";
}

std::string int_list(const std::vector<std::int64_t>& v)
{
    return "(" + fmt::format("{}", fmt::join(v, ",")) + ")";
}

Json integer_array(const std::vector<Integer>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(io::integer_json(x));
    return a;
}

std::size_t require_n(const Options& o)
{
    if (o.n == 0)
        throw ValidationError("--n is required and must be positive", "n");
    return o.n;
}

MonadData monad_from(const Options& o)
{
    const std::size_t n = require_n(o);
    if (o.w.empty())
        throw ValidationError("--w is required", "w");
    return build_monad(o.w, n);
}

Window parse_window(const std::string& text)
{
    const auto colon = text.find(':', text.empty() ? 0 : 1);
    std::int64_t lo = 0, hi = 0;
    bool ok = colon != std::string::npos;
    if (ok) {
        try {
            std::size_t used_a = 0, used_b = 0;
            const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
            lo = std::stoll(a, &used_a);
            hi = std::stoll(b, &used_b);
            ok = used_a == a.size() && used_b == b.size();
        } catch (const std::logic_error&) {
            ok = false;
        }
    }
    if (!ok)
        throw ValidationError("window must look like a:b, got \"" + text + "\"", "window");
    return Window(lo, hi);
}

Window default_window(const MonadData& m)
{
    const auto n = static_cast<std::int64_t>(m.n);
    return Window(-m.w.back() - n - 1, -m.w.front() + n + 1);
}

Window window_from(const Options& o, const std::optional<MonadData>& m, const SheafExpr* f = nullptr)
{
    if (!o.window.empty())
        return parse_window(o.window);
    if (m)
        return default_window(*m);
    if (f && f->terms().size() == 1)
        if (const auto* t = std::get_if<CohomologyTable>(&f->terms().front().term))
            return t->window();
    throw ValidationError("--window a:b is required here", "window");
}

SheafExpr sheaf_from(const Options& o)
{
    if (!o.sheaf.empty()) {
        auto f = io::parse_sheaf(io::load_json_arg(o.sheaf, "sheaf"));
        if (o.n != 0 && f.n() != o.n)
            throw ValidationError("--n differs from the sheaf's ambient dimension", "n");
        return f;
    }
    if (!o.alpha.empty())
        return BundleExpr::schur(require_n(o), Weight(o.alpha), o.d.value_or(0));
    throw ValidationError("--sheaf (or --alpha with --d) is required", "sheaf");
}

Json monad_json(const MonadData& m)
{
    Json wperp = Json::array();
    Json terms = Json::array();
    for (std::size_t j = 0; j <= m.n; ++j) {
        wperp.push_back(Json{{"j", j},
                             {"lambda", io::weight_json(m.lambdas[j].parts())},
                             {"bundle", io::bundle_json(m.wperp[j])},
                             {"label", io::describe(m.wperp[j])}});
        const auto [first, second] = m.ew_term(j);
        terms.push_back(Json{{"j", j}, {"first", io::describe(first)}, {"second", io::describe(second)}});
    }
    return Json{{"n", m.n},
                {"w", io::weight_json(m.w)},
                {"mu", io::weight_json(m.mu.parts())},
                {"N_W",
                 {{"weyl_dimension", io::integer_json(m.n_w)},
                  {"binomial_determinant", io::integer_json(binomial_determinant(m.w, m.n))}}},
                {"wperp", wperp},
                {"ew_terms", terms}};
}

std::optional<Integer> convergence_rank(const Convergence& c)
{
    if (const auto* r = std::get_if<Resolution>(&c)) {
        Integer rank = 0;
        for (std::size_t t = 0; t < r->terms.size(); ++t)
            rank += (t % 2 == 0) ? r->terms[t].rank() : Integer(-r->terms[t].rank());
        return rank;
    }
    if (const auto* f = std::get_if<Filtration>(&c))
        return f->total().rank();
    return std::nullopt;
}

Output run_monad(const MonadData& m)
{
    Output out{monad_json(m), {}};
    const bool orth = orthogonality_holds(m);
    const auto conv = page_convergence(phi1_page(BundleExpr::line(m.n, 0), m));
    const auto rank = convergence_rank(conv);
    out.data["orthogonality"] = orth;
    out.data["pushforward_rank"] = rank ? io::integer_json(*rank) : Json(nullptr);

    std::string s = fmt::format("W = {} on P^{}\n", int_list(m.w), m.n);
    s += fmt::format("mu(W) = {}\n", int_list(m.mu.parts()));
    s += fmt::format("N_W = {} (Weyl dimension {}, binomial determinant {})\n", to_string(m.n_w), to_string(m.n_w),
                     to_string(binomial_determinant(m.w, m.n)));
    s += "W^perp:";
    for (std::size_t j = 0; j <= m.n; ++j)
        s += fmt::format("{} E_{} = {}", j ? "," : "", j, io::describe(m.wperp[j]));
    s += "\nE_W:";
    for (std::size_t j = 0; j <= m.n; ++j) {
        const auto [first, second] = m.ew_term(j);
        s += fmt::format("{} {} [x] {}", j ? " <-" : "", io::describe(first), io::describe(second));
    }
    s += fmt::format("\northogonality h^i(E_k(-w_j)) = N_W iff i = j = k: {}\n", orth ? "holds" : "FAILS");
    s += "rank Phi_1(O) = " + (rank ? to_string(*rank) : std::string("undetermined")) + "\n";
    out.text = std::move(s);
    return out;
}

Output run_bwb(const Options& o)
{
    const std::size_t n = require_n(o);
    if (o.alpha.empty())
        throw ValidationError("--alpha is required", "alpha");
    const Weight alpha(o.alpha);
    const std::int64_t d = o.d.value_or(0);
    const auto c = bwb_cohomology(alpha, d, n);
    Output out;
    out.data = Json{{"n", n}, {"alpha", io::weight_json(alpha.parts())}, {"d", d}, {"vanishing", !c.has_value()}};
    if (!c) {
        out.text = "all cohomology vanishes\n";
        return out;
    }
    out.data["degree"] = c->degree;
    out.data["gamma"] = io::weight_json(c->gamma.parts());
    out.data["dimension"] = io::integer_json(c->dimension);
    out.text = fmt::format("H^{} = S_{}(V*), dimension {}\n", c->degree, int_list(c->gamma.parts()),
                           to_string(c->dimension));
    return out;
}

Output run_table(const Options& o)
{
    const auto f = sheaf_from(o);
    std::optional<MonadData> m;
    if (!o.w.empty())
        m = build_monad(o.w, f.n());
    const auto t = cohomology_table(f, window_from(o, m, &f));
    return {io::table_json(t), io::render_table(t)};
}

Output run_efw(const Options& o)
{
    if (o.w.empty())
        throw ValidationError("--w (the degree sequence) is required", "w");
    const auto s = efw_shape(DegreeSequence(o.w));
    Json terms = Json::array();
    std::string text = fmt::format("EFW complex for degrees {} on rank {}:\n", int_list(s.degrees.degrees()), s.m);
    for (std::size_t j = 0; j <= s.m; ++j) {
        terms.push_back(Json{{"j", j},
                             {"degree", s.degrees[j]},
                             {"lambda", io::weight_json(s.lambdas[j].parts())},
                             {"rank", io::integer_json(s.ranks[j])}});
        text += fmt::format("  j = {}: A(-{}) (x) S_{}(E), rank {}\n", j, s.degrees[j], int_list(s.lambdas[j].parts()),
                            to_string(s.ranks[j]));
    }
    return {Json{{"degrees", io::weight_json(s.degrees.degrees())}, {"m", s.m}, {"terms", terms}}, text};
}

Output page_output(const SpectralPage& page, const MonadData& m)
{
    const auto conv = page_convergence(page);
    Json data = io::page_json(page);
    data["convergence"] = io::convergence_json(conv, m);
    return {data, io::render_page(page) + io::render_convergence(conv, m)};
}

Output run_page(const Options& o)
{
    const auto m = monad_from(o);
    const auto f = sheaf_from(o);
    return page_output(o.page_kind == "phi1" ? phi1_page(f, m) : phi2_page(f, m), m);
}

Output run_strands(const Options& o)
{
    const auto m = monad_from(o);
    if (!o.d)
        throw ValidationError("--d is required", "d");
    const auto r = phi1_line_bundle_strands(*o.d, m);
    if (r.single_term)
        return {io::strands_json(r, m),
                fmt::format("Phi_1(O({})) = {}\n", r.d, io::describe(BundleExpr::line(m.n, r.d, m.n_w)))};
    return {io::strands_json(r, m), io::render_convergence(Convergence{r}, m)};
}

std::string pure_text(const PureResolutionShape& s, std::size_t n)
{
    std::string t = "0 <- Phi_1(F)";
    for (std::size_t i = 0; i < s.twists.size(); ++i)
        t += " <- " + io::describe(BundleExpr::line(n, s.twists[i], s.ranks[i]));
    return t + " <- 0\n";
}

Output run_pure(const Options& o)
{
    const auto m = monad_from(o);
    const auto s = pure_resolution(sheaf_from(o), m);
    return {Json{{"twists", io::weight_json(s.twists)}, {"ranks", integer_array(s.ranks)}},
            fmt::format("pure resolution of type {}, ranks {}\n", int_list(m.w), integer_list(s.ranks)) +
                pure_text(s, m.n)};
}

Output theorem18_output(const SheafExpr& f, const MonadData& m, Window window)
{
    const auto r = theorem18(f, m, window);
    Json data{{"a", io::coordinates_json(r.a)},
              {"filtration", io::filtration_json(r.filtration)},
              {"table_verdict", r.table_verdict},
              {"phi2_table", io::table_json(r.quotient_table)}};
    std::string s = fmt::format("a = {}\n", rational_list(r.a));
    s += "Phi_2(F) filtration (bottom to top):";
    for (const auto& [b, k] : r.filtration.quotients)
        s += " [" + io::describe(b.scaled(k)) + "]";
    s += r.filtration.split_certified ? "\nsplit: certified\n" : "\nsplit: extension unknown\n";
    s += fmt::format("sum of quotient tables = N_W gamma(F) on [{},{}]: {}\n", window.lo, window.hi,
                     r.table_verdict ? "yes" : "NO");
    s += "gamma(Phi_2(F)):\n" + io::render_table(r.quotient_table);
    return {data, s};
}

Output run_thm18(const Options& o)
{
    const auto m = monad_from(o);
    const auto f = sheaf_from(o);
    return theorem18_output(f, m, window_from(o, m));
}

Output run_cor19(const Options& o)
{
    const auto m = monad_from(o);
    const auto r = corollary19(sheaf_from(o), m);
    return {Json{{"i", r.i}, {"m", io::integer_json(r.m)}, {"rank", io::rational_json(r.rank_f)}, {"verdict", r.verdict}},
            fmt::format("Phi_2(F) = E_{}^{} = ({})^{}; m rank E_i = N_W rank F: {}\n", r.i, to_string(r.m),
                        io::describe(m.wperp[r.i]), to_string(r.m), r.verdict ? "yes" : "NO")};
}

Output prop51_output(const SheafExpr& f, const MonadData& m, const CohomologyTable& phi2)
{
    const auto r = prop51_check(f, m, phi2);
    Json strict = Json::array();
    for (const auto& [i, d] : r.strict)
        strict.push_back(Json{{"i", i}, {"d", d}});
    Json data{{"window", {r.window.lo, r.window.hi}},
              {"inequality_holds", true},
              {"strict", strict},
              {"equality_columns", io::weight_json(r.equality_columns)},
              {"strict_columns", io::weight_json(r.strict_columns)}};
    std::string s = fmt::format("h^i(Phi_2(F)(d)) >= {} h^i(F(d)) on [{},{}]: holds\n", to_string(m.n_w), r.window.lo,
                                r.window.hi);
    s += "equality at d = " + int_list(r.equality_columns) + "\n";
    s += "strict at d = " + int_list(r.strict_columns) + "\n";
    return {data, s};
}

CohomologyTable phi2_table_from_page(const SheafExpr& f, const MonadData& m, Window window)
{
    const auto conv = page_convergence(phi2_page(f, m));
    if (std::holds_alternative<EmptyPage>(conv))
        return CohomologyTable(m.n, window);
    if (const auto* fil = std::get_if<Filtration>(&conv); fil && fil->split_certified)
        return cohomology_table(fil->total(), window);
    throw MathRefusal("the Phi_2 page does not determine gamma(Phi_2(F)); supply --phi2-table");
}

Output run_prop51(const Options& o)
{
    const auto m = monad_from(o);
    const auto f = sheaf_from(o);
    if (!o.phi2_table.empty()) {
        const auto t = io::parse_table(io::load_json_arg(o.phi2_table, "phi2-table"));
        return prop51_output(f, m, o.window.empty() ? t : t.restricted(parse_window(o.window)));
    }
    return prop51_output(f, m, phi2_table_from_page(f, m, window_from(o, m)));
}

Output decompose_output(const CohomologyTable& t)
{
    const auto d = bs_decompose(t);
    const auto eq = equivariant_coefficients(d);
    const bool exact = reassemble(d, t.window()) == t;
    if (!exact)
        throw InvariantBreach("decomposition does not reassemble the input table");
    Json equivariant = Json::array();
    std::string s = "Boij-Soderberg decomposition (supernatural tables with Hilbert polynomial prod (j - f_k)/n!):\n";
    for (std::size_t k = 0; k < d.terms.size(); ++k) {
        const auto rep = equivariant_representative(d.terms[k].roots);
        equivariant.push_back(Json{{"roots", io::weight_json(d.terms[k].roots.roots())},
                                   {"bundle", io::describe(rep)},
                                   {"coeff", io::rational_json(eq[k])}});
        s += fmt::format("  roots {}: {}\n", int_list(d.terms[k].roots.roots()), to_string(d.terms[k].coeff));
    }
    s += "against gamma of equivariant supernatural bundles:\n";
    for (std::size_t k = 0; k < d.terms.size(); ++k)
        s += fmt::format("  {} gamma({})\n", to_string(eq[k]), io::describe(equivariant_representative(d.terms[k].roots)));
    s += fmt::format("reassembles the input on [{},{}]: yes\n", t.window().lo, t.window().hi);
    return {Json{{"terms", io::decomposition_json(d)}, {"equivariant", equivariant}, {"reassembles", exact}}, s};
}

Output run_decompose(const Options& o)
{
    const auto f = sheaf_from(o);
    std::optional<MonadData> m;
    if (!o.w.empty())
        m = build_monad(o.w, f.n());
    return decompose_output(cohomology_table(f, window_from(o, m, &f)));
}

Output run_k0(const Options& o)
{
    if (o.k0_mode == "index") {
        const auto m = monad_from(o);
        const auto iw = subgroup_index(w_classes(m));
        const auto ip = subgroup_index(wperp_classes(m));
        return {Json{{"W", io::integer_json(iw)}, {"Wperp", io::integer_json(ip)}, {"N_W", io::integer_json(m.n_w)}},
                fmt::format("index of W = {}, index of W^perp = {}, N_W = {}\n", to_string(iw), to_string(ip),
                            to_string(m.n_w))};
    }
    const auto f = sheaf_from(o);
    if (o.k0_mode == "class") {
        const auto c = k0_class(f);
        const auto std_coords = standard_coordinates(c);
        return {Json{{"chi_profile", integer_array(c.chi_profile)}, {"standard", integer_array(std_coords)}},
                fmt::format("chi(F(0..{})) = {}\nin [O], ..., [O(-{})]: {}\n", f.n(), integer_list(c.chi_profile),
                            f.n(), integer_list(std_coords))};
    }
    const auto m = monad_from(o);
    const auto profile = rational_profile(f);
    const auto cw = coords_in_basis(profile, w_classes(m), BasisLabel::W);
    const auto cp = coords_in_basis(profile, wperp_classes(m), BasisLabel::Wperp);
    return {Json{{"W", io::coordinates_json(cw.values)}, {"Wperp", io::coordinates_json(cp.values)}},
            fmt::format("[F] in W: {}\n[F] in W^perp: {}\n", rational_list(cw.values), rational_list(cp.values))};
}

Output append(Output a, const std::string& key, const std::string& title, const Output& b)
{
    a.data[key] = b.data;
    a.text += title + "\n" + b.text;
    return a;
}

SheafExpr mixed_supernatural_sheaf()
{
    SheafExpr f(2);
    f.add(1, BundleExpr::tautological_dual(2));
    f.add(Rational(1, 3), BundleExpr::schur(2, Weight{2, 0}, 1));
    return f;
}

Output run_example(const std::string& name)
{
    const auto m = build_monad({0, 2, 3}, 2);
    const Window wide(-6, 4);
    if (name == "1.2")
        return run_monad(m);
    if (name == "4.3") {
        const auto f = SheafExpr::linear(2, 1, 0);
        const auto cw = decompose_cor14(f, m, Cor14Side::W);
        const auto cp = decompose_cor14(f, m, Cor14Side::Wperp);
        const auto ext = ext_dims(m.wperp[1], m.wperp[0]);
        Output out{Json{{"sheaf", "O_L"},
                        {"coords_W", io::coordinates_json(cw.values)},
                        {"coords_Wperp", io::coordinates_json(cp.values)},
                        {"ext1_E1_E0", io::integer_json(ext[1])}},
                   fmt::format("F = O_L, L a line in P^2, W = (0,2,3)\n[O_L] in W: {}\n[O_L] in W^perp: {}\n",
                               rational_list(cw.values), rational_list(cp.values))};
        out = append(out, "phi1", "-- Phi_1", page_output(phi1_page(f, m), m));
        out = append(out, "phi2", "-- Phi_2", page_output(phi2_page(f, m), m));
        out.text += fmt::format("Ext^1(E_1, E_0) = {}\n", to_string(ext[1]));
        return out;
    }
    if (name == "5.2") {
        const SheafExpr f = BundleExpr::line(2, 0);
        Output out{Json{{"sheaf", "O"}}, "F = O on P^2, W = (0,2,3)\n"};
        out = append(out, "phi2", "-- Phi_2", page_output(phi2_page(f, m), m));
        return append(out, "prop51", "-- lower bound N_W gamma(F)", prop51_output(f, m, phi2_table_from_page(f, m, wide)));
    }
    if (name == "7.1") {
        const auto f = mixed_supernatural_sheaf();
        Output out{Json{{"sheaf", io::sheaf_json(f)}}, "F = Q* + 1/3 (Sym^2Q*)(1) on P^2, W = (0,2,3)\n"};
        out = append(out, "theorem18", "-- filtration by W^perp", theorem18_output(f, m, wide));
        return append(out, "decomposition", "-- gamma(F)", decompose_output(cohomology_table(f, wide)));
    }
    if (name == "1.6a") {
        const auto t = cohomology_table(mixed_supernatural_sheaf(), wide);
        Output out{Json{{"table", io::table_json(t)}}, "gamma(F) for F = Q* + 1/3 (Sym^2Q*)(1):\n" + io::render_table(t)};
        return append(out, "decomposition", "-- decomposition", decompose_output(t));
    }
    throw ValidationError("unknown example \"" + name + "\" (known: 1.2, 4.3, 5.2, 7.1, 1.6a)", "example");
}

bool wants_json(int argc, const char* const* argv)
{
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--format=json" || (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json"))
            return true;
    }
    return false;
}

int report_error(bool json, std::ostream& out, std::ostream& err, int code, const char* kind, const std::string& field,
                 const std::string& message)
{
    if (json)
        out << Json{{"error", {{"code", code}, {"kind", kind}, {"field", field}, {"message", message}}}}.dump(2)
            << "\n";
    else
        err << "error (" << kind << (field.empty() ? "" : ", " + field) << "): " << message << "\n";
    return code;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    const bool json = wants_json(argc, argv);
    Options o;
    CLI::App app{"Equivariant sheaf cohomology on P^n, the complexes E_W, and Boij-Soderberg decompositions."};
    app.footer("Cohomology tables print degree rows from n (top) down to 0, twists left to right, \".\" for zero.\n"
               "Rationals print as p/q in lowest terms. Exit codes: 0 ok, 2 invalid input, 3 refusal, 4 internal "
               "invariant breach.");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "ambient dimension of P^n"); };
    auto add_w = [&](CLI::App* s) { s->add_option("--w", o.w, "strictly increasing w_0,...,w_n")->delimiter(','); };
    auto add_sheaf = [&](CLI::App* s) {
        s->add_option("--sheaf", o.sheaf, "sheaf expression as inline JSON or @file");
        s->add_option("--alpha", o.alpha, "Schur weight, shorthand for a single bundle")->delimiter(',');
        s->add_option("--d", o.d, "twist");
    };
    auto add_window = [&](CLI::App* s) { s->add_option("--window", o.window, "twist window a:b"); };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* bwb = app.add_subcommand("bwb", "cohomology of S_alpha Q* (x) O(d) by Borel-Weil-Bott");
    add_n(bwb);
    bwb->add_option("--alpha", o.alpha, "weakly decreasing weight with n parts")->delimiter(',');
    bwb->add_option("--d", o.d, "twist");
    add_format(bwb);

    auto* table = app.add_subcommand("table", "cohomology table of a sheaf expression");
    add_n(table);
    add_w(table);
    add_sheaf(table);
    add_window(table);
    add_format(table);

    auto* monad = app.add_subcommand("monad", "mu(W), N_W, W^perp and the terms of E_W");
    add_n(monad);
    add_w(monad);
    add_format(monad);

    auto* efw = app.add_subcommand("efw", "EFW complex shape of a degree sequence (given by --w)");
    add_w(efw);
    add_format(efw);

    auto* page = app.add_subcommand("page", "E^1 page of Phi_1 or Phi_2 and what it converges to");
    page->add_option("kind", o.page_kind, "phi1 or phi2")->required()->check(CLI::IsMember({"phi1", "phi2"}));
    add_n(page);
    add_w(page);
    add_sheaf(page);
    add_format(page);

    auto* strands = app.add_subcommand("strands", "strand analysis of Phi_1(O(d))");
    add_n(strands);
    add_w(strands);
    strands->add_option("--d", o.d, "twist");
    add_format(strands);

    auto* pure = app.add_subcommand("pure-res", "pure resolution of Phi_1(F) of type W");
    add_n(pure);
    add_w(pure);
    add_sheaf(pure);
    add_format(pure);

    auto* thm18 = app.add_subcommand("thm18", "filtration of Phi_2(F) when gamma(F) is supported on W^perp");
    add_n(thm18);
    add_w(thm18);
    add_sheaf(thm18);
    add_window(thm18);
    add_format(thm18);

    auto* cor19 = app.add_subcommand("cor19", "Phi_2 of a supernatural sheaf with roots {-w} minus one");
    add_n(cor19);
    add_w(cor19);
    add_sheaf(cor19);
    add_format(cor19);

    auto* prop51 = app.add_subcommand("prop51", "check h^i(Phi_2(F)(d)) >= N_W h^i(F(d))");
    add_n(prop51);
    add_w(prop51);
    add_sheaf(prop51);
    add_window(prop51);
    prop51->add_option("--phi2-table", o.phi2_table, "table of Phi_2(F) as inline JSON or @file");
    add_format(prop51);

    auto* decompose = app.add_subcommand("decompose", "Boij-Soderberg decomposition of a cohomology table");
    add_n(decompose);
    add_w(decompose);
    add_sheaf(decompose);
    add_window(decompose);
    add_format(decompose);

    auto* k0 = app.add_subcommand("k0", "classes in K_0(P^n)");
    k0->add_option("mode", o.k0_mode, "class, coords or index")->required()->check(
        CLI::IsMember({"class", "coords", "index"}));
    add_n(k0);
    add_w(k0);
    add_sheaf(k0);
    add_format(k0);

    auto* example = app.add_subcommand("example", "reproduce a worked example: 1.2, 4.3, 5.2, 7.1, 1.6a");
    example->add_option("name", o.example, "example name")->required();
    add_format(example);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return report_error(json, out, err, 2, "validation", "", e.what());
    }

    try {
        Output result;
        if (*bwb)
            result = run_bwb(o);
        else if (*table)
            result = run_table(o);
        else if (*monad)
            result = run_monad(monad_from(o));
        else if (*efw)
            result = run_efw(o);
        else if (*page)
            result = run_page(o);
        else if (*strands)
            result = run_strands(o);
        else if (*pure)
            result = run_pure(o);
        else if (*thm18)
            result = run_thm18(o);
        else if (*cor19)
            result = run_cor19(o);
        else if (*prop51)
            result = run_prop51(o);
        else if (*decompose)
            result = run_decompose(o);
        else if (*k0)
            result = run_k0(o);
        else
            result = run_example(o.example);
        if (json)
            out << result.data.dump(2) << "\n";
        else
            out << result.text;
        return 0;
    } catch (const ValidationError& e) {
        return report_error(json, out, err, 2, "validation", e.field(), e.what());
    } catch (const MathRefusal& e) {
        return report_error(json, out, err, 3, "refusal", "", e.what());
    } catch (const InvariantBreach& e) {
        return report_error(json, out, err, 4, "invariant-breach", "", e.what());
    } catch (const nlohmann::json::exception& e) {
        return report_error(json, out, err, 2, "validation", "sheaf", e.what());
    }
}

} // namespace supermonad
