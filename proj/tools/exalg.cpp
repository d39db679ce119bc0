// Command-line surface for the exterior-algebra kernel.  Exit codes:
//   0 success, 2 parse error, 3 resource/dimension cap, 4 precondition.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "exalg/decompose.hpp"
#include "exalg/fermion.hpp"
#include "exalg/multivector.hpp"
#include "exalg/simplicity.hpp"
#include "exalg/spaces.hpp"
#include "exalg/subspace.hpp"
#include "exalg/text.hpp"

using json = nlohmann::json;
using namespace exalg;

namespace {

constexpr const char* kSchema = "exalg-output/1";

// Classified failure that maps directly to an exit code.
struct CliFailure {
    int code;
    std::string message;
};

void check_dim(int n) {
    if (n < 1 || n > kMaxDim)
        throw CliFailure{3, "dimension must be between 1 and " + std::to_string(kMaxDim)};
}

template <class S>
std::vector<std::string> basis_texts(const Subspace<S>& v) {
    std::vector<std::string> out;
    for (const auto& b : v.basis_vectors()) out.push_back(print_multivector(b));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

template <class S>
void cmd_spaces(int n, const std::string& mvtext, bool as_json) {
    auto m = parse_multivector<S>(mvtext, n);
    auto is = inner_space(m);
    auto os = outer_space(m);
    json j{{"schema", kSchema},
           {"command", "spaces"},
           {"m", print_multivector(m)},
           {"inner", {{"dim", is.dim()}, {"basis", basis_texts(is)}}},
           {"outer", {{"dim", os.dim()}, {"basis", basis_texts(os)}}}};
    std::string note;
    if (m.is_zero()) {
        j["grades"] = nullptr;
        note = "grades undefined (M = 0)";
    } else {
        auto gp = grade_profile(m);
        j["grades"] = {{"igrade", gp.igrade},
                       {"bgrade", gp.bgrade},
                       {"tgrade", gp.tgrade},
                       {"ograde", gp.ograde}};
    }
    if (as_json) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "M = " << print_multivector(m) << "\n";
    std::cout << "inner dim = " << is.dim() << "\n";
    std::cout << "inner basis: " << join(basis_texts(is), "; ") << "\n";
    std::cout << "outer dim = " << os.dim() << "\n";
    std::cout << "outer basis: " << join(basis_texts(os), "; ") << "\n";
    if (m.is_zero()) {
        std::cout << "grades: " << note << "\n";
    } else {
        auto gp = grade_profile(m);
        std::cout << "grades: igrade=" << gp.igrade << " bgrade=" << gp.bgrade
                  << " tgrade=" << gp.tgrade << " ograde=" << gp.ograde << "\n";
    }
}

template <class S>
Subspace<S> parse_span(const std::vector<std::string>& texts, int n) {
    std::vector<Multivector<S>> vecs;
    for (const auto& t : texts) {
        auto v = parse_multivector<S>(t, n);
        if (!v.is_zero() && grade_profile(v).ograde != 1)
            throw CliFailure{4, "complement entries must be vectors: " + t};
        vecs.push_back(std::move(v));
    }
    return Subspace<S>::span_of(vecs, n);
}

template <class S>
void cmd_factor(int n, const std::string& mvtext, const std::string& mode,
                const std::string& blade_text, const std::vector<std::string>& complement,
                bool as_json) {
    auto m = parse_multivector<S>(mvtext, n);
    if (m.is_zero()) throw CliFailure{4, "factorization undefined for M = 0"};
    Factorization<S> f = mode == "maximal-orthogonal" ? factor_maximal_orthogonal(m) : [&] {
        auto b = parse_multivector<S>(blade_text, n);
        auto v = parse_span<S>(complement, n);
        return classify_factorization(m, b, factor_in_complement(m, b, v));
    }();
    bool ok = wedge(f.B, f.N) == m;
    if (as_json) {
        json j{{"schema", kSchema},        {"command", "factor"},
               {"m", print_multivector(m)}, {"b", print_multivector(f.B)},
               {"n", print_multivector(f.N)}, {"verified", ok},
               {"tight", f.tight},         {"orthogonal", f.orthogonal},
               {"maximal", f.maximal}};
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "M = " << print_multivector(m) << "\n";
    std::cout << "B = " << print_multivector(f.B) << "\n";
    std::cout << "N = " << print_multivector(f.N) << "\n";
    std::cout << "check: B^N = M " << (ok ? "ok" : "FAILED") << "\n";
    std::cout << "tight = " << (f.tight ? "true" : "false") << "\n";
    std::cout << "orthogonal = " << (f.orthogonal ? "true" : "false") << "\n";
    std::cout << "maximal = " << (f.maximal ? "true" : "false") << "\n";
}

template <class S>
void cmd_carve(int n, const std::string& mvtext, const std::string& mode,
               const std::string& blade_text, const std::vector<std::string>& complement,
               bool as_json) {
    auto m = parse_multivector<S>(mvtext, n);
    if (m.is_zero()) throw CliFailure{4, "carving undefined for M = 0"};
    Carving<S> c = mode == "minimal-internal" ? carve_minimal_internal(m) : [&] {
        auto b = parse_multivector<S>(blade_text, n);
        auto v = parse_span<S>(complement, n);
        return classify_carving(m, b, carve_in_complement(m, b, v));
    }();
    bool ok = lcontr(c.N, c.B) == m;
    if (as_json) {
        json j{{"schema", kSchema},        {"command", "carve"},
               {"m", print_multivector(m)}, {"b", print_multivector(c.B)},
               {"n", print_multivector(c.N)}, {"verified", ok},
               {"tight", c.tight},         {"internal", c.internal},
               {"minimal", c.minimal}};
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "M = " << print_multivector(m) << "\n";
    std::cout << "B = " << print_multivector(c.B) << "\n";
    std::cout << "N = " << print_multivector(c.N) << "\n";
    std::cout << "check: N_|B = M " << (ok ? "ok" : "FAILED") << "\n";
    std::cout << "tight = " << (c.tight ? "true" : "false") << "\n";
    std::cout << "internal = " << (c.internal ? "true" : "false") << "\n";
    std::cout << "minimal = " << (c.minimal ? "true" : "false") << "\n";
}

template <class S>
void cmd_simple(int n, const std::string& mvtext, const std::string& criterion, bool as_json) {
    auto m = parse_multivector<S>(mvtext, n);
    if (m.is_zero()) throw CliFailure{4, "simplicity undefined for M = 0"};
    bool verdict = false;
    std::string witness;
    std::string witness_value;
    if (criterion == "spaces") {
        verdict = is_simple(m);
    } else {
        // homogeneous-only criteria
        int p = mask_grade(m.terms().begin()->first);
        bool homogeneous = true;
        for (const auto& [mask, c] : m.terms()) homogeneous &= mask_grade(mask) == p;
        if (!homogeneous)
            throw CliFailure{4, "criterion '" + criterion + "' requires homogeneous input"};
        if (criterion == "cartan1") {
            verdict = cartan_first_order(m, 1);
        } else if (criterion == "cartan2") {
            verdict = cartan_second_order(m);
        } else {
            auto form = criterion == "plucker-classical" ? PluckerForm::Classical
                                                         : PluckerForm::Reduced;
            auto rels = plucker_generate(p, n, form);
            auto vals = plucker_evaluate(rels, m);
            verdict = true;
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (!is_zero(vals[i])) {
                    verdict = false;
                    witness = print_relation(rels[i]);
                    auto sm = Multivector<S>::scalar(n, vals[i]);
                    witness_value = print_multivector(sm);
                    break;
                }
            }
        }
    }
    if (as_json) {
        json j{{"schema", kSchema},
               {"command", "simple"},
               {"m", print_multivector(m)},
               {"criterion", criterion},
               {"simple", verdict}};
        if (!witness.empty()) {
            j["witness"] = witness;
            j["witness_value"] = witness_value;
        }
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "M = " << print_multivector(m) << "\n";
    std::cout << "criterion = " << criterion << "\n";
    std::cout << "simple = " << (verdict ? "true" : "false") << "\n";
    if (!witness.empty())
        std::cout << "witness: " << witness << " evaluates to " << witness_value << "\n";
}

void cmd_plucker(int p, int n, const std::string& form_name, bool dedupe, bool count_only,
                 bool as_json) {
    if (n < 1 || n > kMaxDim)
        throw CliFailure{3, "dimension must be between 1 and " + std::to_string(kMaxDim)};
    PluckerForm form;
    if (form_name == "classical") form = PluckerForm::Classical;
    else if (form_name == "classical-signed") form = PluckerForm::ClassicalSigned;
    else if (form_name == "reduced") form = PluckerForm::Reduced;
    else if (form_name == "reduced-expanded") form = PluckerForm::ReducedExpanded;
    else throw CliFailure{4, "unknown form: " + form_name};
    if (p < 1 || p > n) throw CliFailure{4, "need 1 <= p <= n"};
    auto rels = plucker_generate(p, n, form);
    if (dedupe) rels = plucker_dedupe(std::move(rels));
    std::map<std::size_t, int> histogram;
    for (const auto& r : rels) ++histogram[r.monomials.size()];
    if (as_json) {
        json j{{"schema", kSchema}, {"command", "plucker"}, {"p", p}, {"n", n},
               {"form", form_name}, {"dedupe", dedupe},     {"count", rels.size()}};
        json h = json::object();
        for (const auto& [k, v] : histogram) h[std::to_string(k) + "-term"] = v;
        j["histogram"] = h;
        if (!count_only) {
            json list = json::array();
            for (const auto& r : rels) list.push_back(print_relation(r));
            j["relations"] = list;
        }
        std::cout << j.dump() << "\n";
        return;
    }
    if (count_only) {
        std::vector<std::string> parts;
        for (const auto& [k, v] : histogram)
            parts.push_back(std::to_string(k) + "-term: " + std::to_string(v));
        std::cout << join(parts, ", ") << "\n";
        return;
    }
    for (const auto& r : rels) std::cout << print_relation(r) << "\n";
}

IndexTuple parse_index_list(const std::string& text) {
    IndexTuple out;
    if (text.empty()) return out;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            try {
                out.push_back(std::stoi(text.substr(pos, next - pos)));
            } catch (const std::exception&) {
                throw CliFailure{2, "bad index list: " + text};
            }
            pos = next + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw CliFailure{2, "bad index list: " + text};
            out.push_back(ch - '0');
        }
    }
    for (std::size_t t = 0; t + 1 < out.size(); ++t)
        if (out[t] >= out[t + 1]) throw CliFailure{4, "index list must be strictly increasing"};
    return out;
}

void cmd_fermion(int n, const std::string& itext, const std::string& jtext,
                 const std::string& ktext, const std::string& form_name, bool as_json) {
    auto i = parse_index_list(itext);
    auto jj = parse_index_list(jtext);
    for (int v : i)
        if (v > n) throw CliFailure{4, "index out of range in --i"};
    for (int v : jj)
        if (v > n) throw CliFailure{4, "index out of range in --j"};

    auto eq7 = scom_expand<Rational>(i, jj, n, OperatorOrder::CreateAnnihilate);
    auto eq8 = scom_expand<Rational>(i, jj, n, OperatorOrder::AnnihilateCreate);
    NormalOrderedOperator<Rational> ci{n, OperatorOrder::CreateAnnihilate, {{Rational(1), i, {}}}};
    NormalOrderedOperator<Rational> aj{n, OperatorOrder::CreateAnnihilate, {{Rational(1), {}, jj}}};

    std::string expansion;
    if (form_name == "expand7") {
        expansion = print_operator(eq7);
    } else if (form_name == "expand8") {
        expansion = print_operator(eq8);
    } else if (form_name == "diag") {
        if (i != jj) throw CliFailure{4, "--form diag requires --i equal to --j"};
        expansion = print_operator(scom_expand_diagonal<Rational>(i, n,
                                                                  OperatorOrder::CreateAnnihilate));
    } else if (form_name != "direct") {
        throw CliFailure{4, "unknown form: " + form_name};
    }

    json j{{"schema", kSchema}, {"command", "fermion"}, {"i", itext}, {"j", jtext},
           {"form", form_name}};
    std::string apply_line, result_line;
    if (!ktext.empty()) {
        auto k = parse_index_list(ktext);
        for (int v : k)
            if (v > n) throw CliFailure{4, "index out of range in --apply"};
        auto vk = Multivector<Rational>::basis_blade(n, mask_of(k));
        auto direct = scom_apply(ci, aj, vk);
        // every representation must agree before anything is printed
        auto closed = scom_direct<Rational>(i, jj, k, n);
        Multivector<Rational> closed_mv(n);
        if (!is_zero(closed.first)) closed_mv.add_term(closed.second, closed.first);
        if (eq7.apply(vk) != direct || closed_mv != direct)
            throw CliFailure{1, "internal: representations disagree"};
        std::string coeff_text = is_zero(closed.first)
                                     ? "0"
                                     : print_multivector(Multivector<Rational>::scalar(
                                           n, closed.first));
        apply_line = print_multivector(vk) + " -> " + print_multivector(direct);
        result_line = print_multivector(direct);
        j["apply"] = print_multivector(vk);
        j["result"] = result_line;
        j["coefficient"] = coeff_text;
    }
    if (!expansion.empty()) j["expansion"] = expansion;
    if (as_json) {
        std::cout << j.dump() << "\n";
        return;
    }
    if (!expansion.empty()) std::cout << expansion << "\n";
    if (!ktext.empty()) {
        std::cout << apply_line << "\n";
        std::cout << "result: " << result_line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior-algebra kernel"};
    app.require_subcommand(1);

    int dim = 0, p = 0, nn = 0;
    std::string mvtext, field = "rational", mode, blade_text, criterion = "spaces";
    std::string form, itext, jtext, ktext;
    std::vector<std::string> complement;
    bool as_json = false, dedupe = false, count_only = false;

    auto* sp = app.add_subcommand("spaces", "inner/outer spaces and grade profile");
    sp->add_option("--dim", dim)->required();
    sp->add_option("--mv", mvtext)->required();
    sp->add_option("--field", field);
    sp->add_flag("--json", as_json);

    auto* fa = app.add_subcommand("factor", "blade factorization M = B^N");
    fa->add_option("--dim", dim)->required();
    fa->add_option("--mv", mvtext)->required();
    fa->add_option("--mode", mode);
    fa->add_option("--blade", blade_text);
    fa->add_option("--complement", complement);
    fa->add_option("--field", field);
    fa->add_flag("--json", as_json);

    auto* ca = app.add_subcommand("carve", "blade carving M = N_|B");
    ca->add_option("--dim", dim)->required();
    ca->add_option("--mv", mvtext)->required();
    ca->add_option("--mode", mode);
    ca->add_option("--blade", blade_text);
    ca->add_option("--complement", complement);
    ca->add_option("--field", field);
    ca->add_flag("--json", as_json);

    auto* si = app.add_subcommand("simple", "simplicity deciders");
    si->add_option("--dim", dim)->required();
    si->add_option("--mv", mvtext)->required();
    si->add_option("--criterion", criterion);
    si->add_option("--field", field);
    si->add_flag("--json", as_json);

    auto* pl = app.add_subcommand("plucker", "quadratic relation generator");
    pl->add_option("--p", p)->required();
    pl->add_option("--n", nn)->required();
    pl->add_option("--form", form)->required();
    pl->add_flag("--dedupe", dedupe);
    pl->add_flag("--count-only", count_only);
    pl->add_flag("--json", as_json);

    auto* fe = app.add_subcommand("fermion", "supercommutator expansions and actions");
    fe->add_option("--dim", dim)->required();
    fe->add_option("--i", itext)->required();
    fe->add_option("--j", jtext)->required();
    fe->add_option("--apply", ktext);
    fe->add_option("--form", form);
    fe->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (field != "rational" && field != "gaussian")
            throw CliFailure{4, "unknown field: " + field};
        bool gaussian = field == "gaussian";
        if (sp->parsed()) {
            check_dim(dim);
            gaussian ? cmd_spaces<GaussianRational>(dim, mvtext, as_json)
                     : cmd_spaces<Rational>(dim, mvtext, as_json);
        } else if (fa->parsed()) {
            check_dim(dim);
            if (mode.empty()) mode = "maximal-orthogonal";
            if (mode != "maximal-orthogonal" && mode != "in-complement")
                throw CliFailure{4, "unknown mode: " + mode};
            if (mode == "in-complement" && blade_text.empty())
                throw CliFailure{4, "--mode in-complement requires --blade"};
            gaussian ? cmd_factor<GaussianRational>(dim, mvtext, mode, blade_text, complement,
                                                    as_json)
                     : cmd_factor<Rational>(dim, mvtext, mode, blade_text, complement, as_json);
        } else if (ca->parsed()) {
            check_dim(dim);
            if (mode.empty()) mode = "minimal-internal";
            if (mode != "minimal-internal" && mode != "in-complement")
                throw CliFailure{4, "unknown mode: " + mode};
            if (mode == "in-complement" && blade_text.empty())
                throw CliFailure{4, "--mode in-complement requires --blade"};
            gaussian ? cmd_carve<GaussianRational>(dim, mvtext, mode, blade_text, complement,
                                                   as_json)
                     : cmd_carve<Rational>(dim, mvtext, mode, blade_text, complement, as_json);
        } else if (si->parsed()) {
            check_dim(dim);
            static const std::vector<std::string> kCriteria{
                "spaces", "cartan1", "cartan2", "plucker-classical", "plucker-reduced"};
            if (std::find(kCriteria.begin(), kCriteria.end(), criterion) == kCriteria.end())
                throw CliFailure{4, "unknown criterion: " + criterion};
            gaussian ? cmd_simple<GaussianRational>(dim, mvtext, criterion, as_json)
                     : cmd_simple<Rational>(dim, mvtext, criterion, as_json);
        } else if (pl->parsed()) {
            cmd_plucker(p, nn, form, dedupe, count_only, as_json);
        } else if (fe->parsed()) {
            check_dim(dim);
            if (form.empty()) form = "direct";
            cmd_fermion(dim, itext, jtext, ktext, form, as_json);
        }
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
