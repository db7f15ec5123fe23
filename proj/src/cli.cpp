#include "cen/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cen/pi.hpp"
#include "cen/spectrum.hpp"

namespace cen::cli {

using nlohmann::json;

namespace {

Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational::parse(v.dump());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw ParseError("expected a rational literal, got " + v.dump());
}

ModP parse_residue(const json& v, std::uint32_t p) {
    const Rational r = parse_rational(v);
    if (r.value().get_den() != 1) throw ParseError("expected an integer literal, got " + v.dump());
    const mpz_class& num = r.value().get_num();
    return ModP::raw(mpz_fdiv_ui(num.get_mpz_t(), p), p);
}

Quaternion parse_quaternion(const json& v) {
    if (!v.is_array() || v.size() != 4) throw ParseError("expected a quaternion [a, b, c, d], got " + v.dump());
    return {parse_rational(v[0]), parse_rational(v[1]), parse_rational(v[2]), parse_rational(v[3])};
}

template <Scalar S, class Parse>
Matrix<S> parse_rows(const json& rows, const ScalarDomain& dom, Parse parse) {
    if (!rows.is_array()) throw ParseError("\"rows\" must be an array of arrays");
    std::vector<std::vector<S>> out;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("\"rows\" must be an array of arrays");
        out.emplace_back();
        for (const auto& x : row) out.back().push_back(parse(x));
    }
    return Matrix<S>::from_rows(dom, out);
}

}  // namespace

AnyMatrix parse_matrix(const json& doc) {
    if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
    if (!doc.contains("field") || !doc["field"].is_string()) throw ParseError("missing \"field\"");
    if (!doc.contains("rows")) throw ParseError("missing \"rows\"");
    const std::string field = doc["field"].get<std::string>();
    const json& rows = doc["rows"];
    if (field != "fp" && doc.contains("p")) throw ParseError("\"p\" is only allowed with field \"fp\"");
    if (field == "q") return parse_rows<Rational>(rows, ScalarDomain::rationals(), parse_rational);
    if (field == "hq") return parse_rows<Quaternion>(rows, ScalarDomain::quaternions(), parse_quaternion);
    if (field == "fp") {
        const json p_field = doc.value("p", json());
        const bool positive = p_field.is_number_unsigned() || (p_field.is_number_integer() && p_field.get<std::int64_t>() > 0);
        if (!positive) throw ParseError("field \"fp\" needs a positive integer \"p\"");
        const auto p = p_field.get<std::uint64_t>();
        ScalarDomain dom = ScalarDomain::rationals();
        try {
            dom = ScalarDomain::prime_field(p);
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
        return parse_rows<ModP>(rows, dom, [&](const json& x) { return parse_residue(x, dom.modulus()); });
    }
    throw ParseError("unknown field \"" + field + "\"; expected q, fp or hq");
}

AnyMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_matrix(doc);
}

template <Scalar S>
json scalar_to_json(const S& x) {
    if constexpr (std::is_same_v<S, ModP>) {
        return x.value();
    } else if constexpr (std::is_same_v<S, Quaternion>) {
        json a = json::array();
        for (const auto& part : x.parts()) a.push_back(part.to_string());
        return a;
    } else {
        return x.to_string();
    }
}

template <Scalar S>
json matrix_to_json(const Matrix<S>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

bool is_flat(const json& v) {
    if (v.is_object()) return false;
    if (!v.is_array()) return true;
    return std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

std::string inline_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& v, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (is_flat(val)) {
                out += pad + key + ": " + inline_value(val) + "\n";
            } else {
                out += pad + key + ":\n";
                render(val, indent + 2, out);
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_object()) {
                std::string item;
                render(x, indent + 2, item);
                if (!item.empty()) item.replace(indent, 2, "- ");
                out += item;
            } else {
                out += pad + "- " + inline_value(x) + "\n";
            }
        }
    } else {
        out += pad + inline_value(v) + "\n";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::string out;
    render(report, 0, out);
    return out;
}

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    bool check = false;
    std::optional<std::size_t> degree;
    std::string kind = "standard";
};

json type_json(const JordanType& t) { return t.sizes(); }

template <Scalar S>
void require_square(const Matrix<S>& a) {
    if (!a.is_square() || a.rows() == 0) throw ShapeError("expected a nonempty square matrix");
}

template <Scalar S>
json identity_json(const IdentityReport<S>& r) {
    json failures = json::array();
    for (const auto& tuple : r.failures) {
        json t = json::array();
        for (const auto& m : tuple) t.push_back(matrix_to_json(m));
        failures.push_back(std::move(t));
    }
    json j{{"identity", r.identity}, {"degree", r.degree}, {"trials", r.trials}, {"failures", std::move(failures)}};
    if (r.identity == "product") j["copies"] = r.copies;
    return j;
}

template <Scalar S>
int cmd_jordan(const Matrix<S>& a, json& out) {
    require_square(a);
    const auto base = jordan_base(a);
    out = {{"field", a.domain().name()},
           {"sizes", type_json(base.type)},
           {"n", base.type.index()},
           {"m", base.type.blocks()},
           {"d", base.type.dimension()},
           {"change_of_base", matrix_to_json(base.change_of_base)}};
    return ok;
}

template <Scalar S>
int cmd_centralizer(const Matrix<S>& a, const Options& opt, json& out) {
    require_square(a);
    const ScalarDomain dom = a.domain();
    out = {{"field", dom.name()}};
    bool agree = true;
    if (is_nilpotent(a).nilpotent) {
        const auto basis = structured_basis(a);
        const std::size_t formula = dimension_formula(basis.type(), dom);
        out["nilpotent"] = true;
        out["type"] = type_json(basis.type());
        out["dimension"] = basis.tags.size();
        out["formula"] = formula;
        if (opt.check) {
            const auto brute = brute_commutant(a);
            const bool span = same_center_span(std::span<const Matrix<S>>(brute), std::span<const Matrix<S>>(basis.realized));
            bool commute = true;
            for (const auto& x : basis.realized) commute = commute && a * x == x * a;
            agree = brute.size() == basis.tags.size() && basis.tags.size() == formula && span && commute;
            out["check"] = {{"brute", brute.size()},
                            {"structured", basis.tags.size()},
                            {"formula", formula},
                            {"span_equal", span},
                            {"agree", agree}};
        }
    } else {
        if constexpr (!S::commutative) {
            throw NotNilpotent("matrix is not nilpotent; the split-spectrum reduction needs a field");
        } else {
            const auto split = split_centralizer(a);
            json blocks = json::array();
            std::size_t structured = 0;
            for (const auto& b : split.blocks) {
                blocks.push_back({{"eigenvalue", scalar_to_json(b.eigenvalue)},
                                  {"multiplicity", b.multiplicity},
                                  {"type", type_json(b.type)},
                                  {"dimension", b.dimension}});
                if (opt.check) structured += structured_basis(b.nilpotent_part).tags.size();
            }
            out["nilpotent"] = false;
            out["eigenvalues"] = std::move(blocks);
            out["dimension"] = split.total_dimension;
            if (opt.check) {
                const std::size_t brute = brute_commutant(a).size();
                agree = brute == split.total_dimension && structured == split.total_dimension;
                out["check"] = {{"brute", brute}, {"structured", structured}, {"formula", split.total_dimension}, {"agree", agree}};
            }
        }
    }
    return agree ? ok : violation;
}

template <Scalar S>
int cmd_report(const Matrix<S>& a, const Options& opt, json& out) {
    if constexpr (!S::commutative) {
        throw UnsupportedDomain("report needs a field (q or fp)");
    } else {
        require_square(a);
        const ScalarDomain dom = a.domain();
        struct Part {
            S eigenvalue;
            std::size_t multiplicity;
            Matrix<S> nilpotent;
        };
        std::vector<Part> parts;
        if (is_nilpotent(a).nilpotent) {
            parts.push_back({S::zero(dom), a.rows(), a});
        } else {
            for (auto& b : split_centralizer(a).blocks) parts.push_back({b.eigenvalue, b.multiplicity, std::move(b.nilpotent_part)});
        }

        json blocks = json::array();
        std::size_t total = 0;
        bool consistent = true;
        for (const auto& part : parts) {
            const auto basis = structured_basis(part.nilpotent);
            const JordanType& type = basis.type();
            const auto rep = structure_report(type);
            total += rep.total_dim;

            json radical_basis = json::array();
            for (const auto& m : rep.radical_basis) radical_basis.push_back(m.to_string());
            json mult = json::array();
            json quotient = json::array();
            for (const auto& [size, count] : rep.multiplicities) {
                mult.push_back({{"size", size}, {"count", count}});
                quotient.push_back("M_" + std::to_string(count));
            }
            json trace = nullptr;
            if (dom.kind() == DomainKind::rationals || dom.modulus() > basis.realized.size()) {
                const std::size_t t = trace_form_radical_oracle(std::span<const Matrix<S>>(basis.realized));
                trace = t;
                consistent = consistent && t == rep.radical_dim;
            }
            const auto standard = check_standard_identity(basis, 2 * type.blocks(), opt.trials, opt.seed);
            const auto product = check_product_identity(basis, opt.trials, opt.seed);
            const auto witness = standard_nonidentity_witness(basis);
            json witness_json = nullptr;
            if (witness) witness_json = {{"degree", witness->degree}, {"found", witness->nonzero_in_quotient}};
            consistent = consistent && rep.matrix_units_verified && rep.radical_nilpotency <= rep.nilpotency_bound &&
                         standard.passed() && product.passed() && (!witness || witness->nonzero_in_quotient) &&
                         rep.total_dim == basis.tags.size();

            blocks.push_back({{"eigenvalue", scalar_to_json(part.eigenvalue)},
                              {"multiplicity", part.multiplicity},
                              {"type", type_json(type)},
                              {"total_dim", rep.total_dim},
                              {"radical_dim", rep.radical_dim},
                              {"radical_basis", std::move(radical_basis)},
                              {"trace_form_radical_dim", std::move(trace)},
                              {"multiplicities", std::move(mult)},
                              {"quotient", std::move(quotient)},
                              {"distinct_sizes", rep.distinct_sizes},
                              {"nilpotency_index", rep.index},
                              {"radical_nilpotency", rep.radical_nilpotency},
                              {"nilpotency_bound", rep.nilpotency_bound},
                              {"pi_degree", rep.pi_degree},
                              {"matrix_units_verified", rep.matrix_units_verified},
                              {"identities", json::array({identity_json(standard), identity_json(product)})},
                              {"nonidentity_witness", std::move(witness_json)}});
        }
        out = {{"field", dom.name()}, {"dimension", total}, {"blocks", std::move(blocks)}, {"consistent", consistent}};
        return opt.check && !consistent ? violation : ok;
    }
}

template <Scalar S>
int cmd_contain(const Matrix<S>& a, const Matrix<S>& b, json& out) {
    require_square(a);
    require_square(b);
    if (a.rows() != b.rows()) throw ShapeError("A and B differ in size");
    const auto res = containment_test(a, b);
    out = {{"field", a.domain().name()}};
    if (const auto* c = std::get_if<Contained<S>>(&res)) {
        out["contained"] = true;
        if (c->h) {
            json coeffs = json::array();
            for (const auto& x : c->h->coefficients()) coeffs.push_back(scalar_to_json(x));
            out["h"] = std::move(coeffs);
            out["h_text"] = c->h->to_string("z");
        } else {
            out["h"] = nullptr;
        }
    } else {
        out["contained"] = false;
        out["witness"] = matrix_to_json(std::get<NotContained<S>>(res).witness);
    }
    return ok;
}

template <Scalar S>
int cmd_identity(const Matrix<S>& a, const Options& opt, json& out) {
    require_square(a);
    const auto basis = structured_basis(a);
    if (opt.kind == "product") {
        if (opt.degree) throw InvalidArgument("--degree is fixed by the PI-degree for the product identity");
        out = identity_json(check_product_identity(basis, opt.trials, opt.seed));
    } else {
        const std::size_t degree = opt.degree.value_or(2 * basis.type().blocks());
        out = identity_json(check_standard_identity(basis, degree, opt.trials, opt.seed));
    }
    return ok;
}

void emit(const json& report, const Options& opt, std::ostream& out) {
    if (opt.format == "json")
        out << report.dump(2) << '\n';
    else
        out << render_text(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Centralizers of nilpotent and split-spectrum matrices over Q, F_p and H_Q", "cenalg"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "Seed for random identity checks");
    app.add_option("--trials", opt.trials, "Number of random trials");

    std::string file_a, file_b;
    auto* jordan = app.add_subcommand("jordan", "Jordan type and change of base of a nilpotent matrix");
    jordan->add_option("file", file_a)->required();
    auto* centralizer = app.add_subcommand("centralizer", "Dimension and basis count of the centralizer");
    centralizer->add_option("file", file_a)->required();
    centralizer->add_flag("--check", opt.check, "Cross-check brute force, structured basis and formula");
    auto* report = app.add_subcommand("report", "Radical, semisimple quotient, PI-degree and identity checks");
    report->add_option("file", file_a)->required();
    report->add_flag("--check", opt.check, "Exit 1 if any internal cross-check fails");
    auto* contain = app.add_subcommand("contain", "Decide whether Cen(A) lies in Cen(B)");
    contain->add_option("A", file_a)->required();
    contain->add_option("B", file_b)->required();
    auto* identity = app.add_subcommand("identity", "Check a standard or product identity on Cen(A)");
    identity->add_option("file", file_a)->required();
    identity->add_option("--degree", opt.degree, "Arity of the standard polynomial (default 2m)");
    identity->add_option("--kind", opt.kind, "standard or product")->check(CLI::IsMember({"standard", "product"}));
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return parse_error;
    }

    try {
        json result;
        int code = ok;
        const AnyMatrix a = load_matrix(file_a);
        if (jordan->parsed()) {
            code = std::visit([&](const auto& m) { return cmd_jordan(m, result); }, a);
        } else if (centralizer->parsed()) {
            code = std::visit([&](const auto& m) { return cmd_centralizer(m, opt, result); }, a);
        } else if (report->parsed()) {
            code = std::visit([&](const auto& m) { return cmd_report(m, opt, result); }, a);
        } else if (identity->parsed()) {
            code = std::visit([&](const auto& m) { return cmd_identity(m, opt, result); }, a);
        } else {
            const AnyMatrix b = load_matrix(file_b);
            if (a.index() != b.index()) throw ParseError("A and B are over different domains");
            code = std::visit(
                [&](const auto& ma) {
                    using M = std::decay_t<decltype(ma)>;
                    const M& mb = std::get<M>(b);
                    if (ma.domain() != mb.domain()) throw ParseError("A and B are over different domains");
                    return cmd_contain(ma, mb, result);
                },
                a);
        }
        emit(result, opt, out);
        if (code == violation) err << "error: cross-check failed\n";
        return code;
    } catch (const NotNilpotent& e) {
        err << "error: " << e.what() << '\n';
        return not_nilpotent;
    } catch (const NonSplitSpectrum& e) {
        err << "error: " << e.what() << '\n';
        return not_nilpotent;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return shape_error;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return shape_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const UnsupportedDomain& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const DomainMismatch& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return violation;
    }
}

#define CEN_INSTANTIATE(S)                              \
    template json scalar_to_json(const S&);            \
    template json matrix_to_json(const Matrix<S>&);
CEN_INSTANTIATE(Rational)
CEN_INSTANTIATE(ModP)
CEN_INSTANTIATE(Quaternion)
#undef CEN_INSTANTIATE

}  // namespace cen::cli
