#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "eden/cellular_automaton.hpp"
#include "eden/corpus.hpp"
#include "eden/entropy.hpp"
#include "eden/principal.hpp"
#include "eden/specification.hpp"
#include "eden/subshift.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kReportVersion = 1;

void emit(const ordered_json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw eden::InvalidInputError("cannot open output file: " + out_path);
        out << doc.dump(2) << "\n";
    }
}

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (int a : w) s += std::to_string(a);
    return s;
}

ordered_json classification_json(const eden::ClassificationReport& rep) {
    ordered_json j;
    j["version"] = kReportVersion;
    j["kind"] = "classify";
    j["subject"] = rep.subject;
    j["surjective"] = eden::verdict_name(rep.surjective);
    j["pre_injective"] = eden::verdict_name(rep.pre_injective);
    j["injective"] = eden::verdict_name(rep.injective);
    j["flags"] = rep.flags;
    if (rep.goe) j["goe_witness"] = eden::format_pattern(rep.goe->pattern);
    if (rep.erasable) {
        j["erasable_pair"] = {
            {"w1", eden::format_pattern(rep.erasable->w1)},
            {"w2", eden::format_pattern(rep.erasable->w2)},
            {"context_check", rep.erasable->context_check},
        };
    }
    j["millis"] = rep.millis;
    return j;
}

std::string witness_column(const eden::ClassificationReport& rep) {
    if (rep.goe) return "goe=" + eden::format_pattern(rep.goe->pattern);
    if (rep.erasable)
        return "erasable=" + eden::format_pattern(rep.erasable->w1) + "|" +
               eden::format_pattern(rep.erasable->w2);
    return "-";
}

std::string tri(eden::Verdict v) { return eden::verdict_name(v); }

int run(int argc, char** argv) {
    CLI::App app{"eden: Garden-of-Eden theory toolbox for subshifts and algebraic actions"};
    app.require_subcommand(1);
    std::string out_path;
    bool json_out = false;
    app.add_option("--out", out_path, "write the report to a file")->capture_default_str();
    app.add_flag("--json", json_out, "emit JSON on stdout (default for report commands)");

    // ---- shift info ----
    auto* shift = app.add_subcommand("shift", "subshift queries");
    auto* info = shift->add_subcommand("info", "language counts and presentation facts");
    std::string info_target;
    long info_maxlen = 8;
    info->add_option("target", info_target, "shift file or corpus name")->required();
    info->add_option("--max-len", info_maxlen, "largest word length to count");

    // ---- ca ----
    auto* ca = app.add_subcommand("ca", "cellular automata");
    auto* classify = ca->add_subcommand("classify", "surjectivity / pre-injectivity / injectivity");
    std::string cls_rule, cls_domain, cls_codomain;
    bool cls_bounded = false;
    long bounded_cap = 4;
    classify->add_option("rule", cls_rule, "eca:<n> or rule file")->required();
    classify->add_option("--domain", cls_domain, "domain shift file or corpus name");
    classify->add_option("--codomain", cls_codomain, "codomain shift file or corpus name");
    classify->add_flag("--bounded", cls_bounded,
                       "bounded witness search only (required for 2D rules)");
    classify->add_option("--bounded-cap", bounded_cap, "box cap for --bounded searches");

    auto* survey = ca->add_subcommand("survey", "endomorphism survey over a neighborhood radius");
    std::string survey_shift = "full-2", survey_out;
    long survey_radius = 1;
    survey->add_option("--shift", survey_shift, "shift file or corpus name");
    survey->add_option("--radius", survey_radius, "neighborhood radius");
    survey->add_option("--out", survey_out, "TSV output path")->required();

    // ---- spec ----
    auto* spec = app.add_subcommand("spec", "specification / independence");
    auto* gap = spec->add_subcommand("gap", "strong irreducibility gap certificate");
    std::string gap_target;
    long gap_max = 8, gap_len = 0;
    gap->add_option("target", gap_target)->required();
    gap->add_option("--max-gap", gap_max, "largest gap to certify");
    gap->add_option("--len", gap_len, "advisory word-length bound recorded in the certificate");

    auto* wspec = spec->add_subcommand("wspec", "bounded weak-specification check");
    std::string wspec_target;
    long wspec_gap = 0;
    double wspec_eps = 1.0;
    wspec->add_option("target", wspec_target)->required();
    wspec->add_option("--gap", wspec_gap, "separation gap g");
    wspec->add_option("--eps", wspec_eps, "shadowing tolerance");

    auto* indep = spec->add_subcommand("independence", "independence density on a Folner box");
    std::string indep_target;
    long indep_n = 3;
    indep->add_option("target", indep_target)->required();
    indep->add_option("--n", indep_n, "Folner box parameter");

    // ---- entropy ----
    auto* entropy = app.add_subcommand("entropy", "topological entropy");
    std::string ent_target;
    bool ent_exact = false;
    long ent_estimate = 0;
    double ent_eps = 1.0;
    entropy->add_option("target", ent_target)->required();
    entropy->add_flag("--exact", ent_exact, "exact Perron value (default)");
    entropy->add_option("--estimate", ent_estimate, "separated-count estimate at box parameter n");
    entropy->add_option("--eps", ent_eps, "metric tolerance for the estimate");

    // ---- principal ----
    auto* principal = app.add_subcommand("principal", "principal algebraic actions of Z");
    auto* pcheck = principal->add_subcommand("check", "l1-invertibility certificate");
    std::string pcheck_poly;
    pcheck->add_option("poly", pcheck_poly, "f = c_lo,...,c_hi @ offset")->required();

    auto* phom = principal->add_subcommand("homoclinic", "fundamental homoclinic point");
    std::string phom_poly;
    double phom_tol = 1e-9;
    phom->add_option("poly", phom_poly)->required();
    phom->add_option("--tol", phom_tol, "residual + tail tolerance");

    auto* pglue = principal->add_subcommand("glue", "weak-specification gluing of targets");
    std::string pglue_poly, pglue_targets;
    double pglue_eps = 1.0 / 64.0;
    pglue->add_option("poly", pglue_poly)->required();
    pglue->add_option("targets", pglue_targets, "JSON file: [{\"window\": [lo, hi], \"values\": [...]}]")
        ->required();
    pglue->add_option("--eps", pglue_eps, "matching tolerance");

    CLI11_PARSE(app, argc, argv);

    if (*info) {
        eden::Subshift X = eden::load_subshift(info_target);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "shift_info";
        j["target"] = info_target;
        j["alphabet"] = X.alphabet().size;
        j["dim"] = X.dim();
        j["shift_kind"] = X.kind() == eden::ShiftKind::Full ? "full"
                          : X.kind() == eden::ShiftKind::Sft ? "sft" : "sofic";
        if (X.dim() == 1) {
            j["empty"] = X.is_empty();
            ordered_json counts = ordered_json::array();
            for (long n = 1; n <= info_maxlen; ++n) counts.push_back(X.count_words(n));
            j["word_counts"] = counts;
            j["presentation_vertices"] = X.det_presentation().n;
        }
        emit(j, out_path);
        return 0;
    }

    if (*classify) {
        std::optional<eden::Subshift> dom, cod;
        if (!cls_domain.empty()) dom = eden::load_subshift(cls_domain);
        if (!cls_codomain.empty()) cod = eden::load_subshift(cls_codomain);
        eden::BlockCode code = eden::load_block_code(cls_rule, dom, cod);
        if (code.domain().dim() == 2 && !cls_bounded)
            throw eden::InconclusiveError("2D verdicts are undecidable; rerun with --bounded");
        eden::ClassificationReport rep = code.classify();
        ordered_json j = classification_json(rep);
        if (code.domain().dim() == 2 && cls_bounded) {
            // sound one-sided search: a codomain box pattern with no preimage
            bool found = false;
            for (long wbox = 1; wbox <= bounded_cap && !found; ++wbox) {
                eden::Window w = eden::Window::box(
                    2, eden::Cell{0, 0}, eden::Cell{wbox - 1, std::min(wbox, eden::Subshift::strip_bound()) - 1});
                std::vector<eden::Cell> dil_cells;
                for (const auto& v : w.cells())
                    for (const auto& c : code.neighborhood().cells()) dil_cells.push_back(eden::Cell{v[0] + c[0], v[1] + c[1]});
                eden::Window dil(2, dil_cells);
                eden::Window box = eden::Window::box(2, dil.lo(), dil.hi());
                std::set<std::string> image_keys;
                for (const auto& p : code.domain().language(box)) {
                    eden::Pattern img = code.apply_pattern(p);
                    std::vector<int> syms;
                    for (const auto& c : w.cells()) syms.push_back(img.at(c));
                    image_keys.insert(eden::Pattern(w, syms).key());
                }
                for (const auto& q : code.codomain().language(w)) {
                    if (!image_keys.count(q.key())) {
                        j["bounded_goe_witness"] = eden::format_pattern(q);
                        j["surjective"] = "no";
                        found = true;
                        break;
                    }
                }
            }
            if (!found) j["bounded_note"] = "no Garden-of-Eden box pattern up to the cap";
        }
        emit(j, out_path);
        return 0;
    }

    if (*survey) {
        eden::Subshift X = eden::load_subshift(survey_shift);
        eden::Window N = eden::Window::interval(-survey_radius, survey_radius);
        std::ofstream tsv(survey_out);
        if (!tsv) throw eden::InvalidInputError("cannot open output file: " + survey_out);
        tsv << "rule-id\tsurjective\tpre_injective\tinjective\tflags\twitness\n";
        long rows = 0, moore = 0, myhill = 0;
        std::map<std::string, long> combos;
        eden::enumerate_endomorphisms(X, N, [&](const eden::BlockCode& code) {
            eden::ClassificationReport rep = code.classify();
            std::string flags;
            for (const auto& f : rep.flags) flags += (flags.empty() ? "" : ",") + f;
            if (flags.empty()) flags = "-";
            tsv << rep.subject << "\t" << tri(rep.surjective) << "\t" << tri(rep.pre_injective)
                << "\t" << tri(rep.injective) << "\t" << flags << "\t" << witness_column(rep) << "\n";
            ++rows;
            combos[tri(rep.surjective) + "/" + tri(rep.pre_injective) + "/" + tri(rep.injective)]++;
            for (const auto& f : rep.flags) {
                if (f == "MOORE_VIOLATION") ++moore;
                if (f == "MYHILL_VIOLATION") ++myhill;
            }
        });
        // theorem coverage: full shifts predict both properties, certified
        // strongly irreducible SFTs predict Myhill
        bool covered_full = X.kind() == eden::ShiftKind::Full;
        bool covered_sft = false;
        if (X.kind() == eden::ShiftKind::Sft && eden::strong_irreducibility_gap(X, 16)) covered_sft = true;
        bool violated = (covered_full && (moore || myhill)) || (covered_sft && myhill);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "survey";
        j["shift"] = survey_shift;
        j["radius"] = survey_radius;
        j["rows"] = rows;
        j["verdict_combinations"] = combos;
        j["moore_violations"] = moore;
        j["myhill_violations"] = myhill;
        j["theorem_coverage"] = covered_full ? "full-shift" : covered_sft ? "strongly-irreducible-sft" : "none";
        j["theorem_violated"] = violated;
        emit(j, out_path);
        return violated ? 5 : 0;
    }

    if (*gap) {
        eden::Subshift X = eden::load_subshift(gap_target);
        eden::GluingFailure fail;
        auto cert = eden::strong_irreducibility_gap(X, gap_max, gap_len, &fail);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "spec_gap";
        j["target"] = gap_target;
        if (cert) {
            j["gap"] = cert->gap;
            j["checked_length"] = cert->checked_length;
            j["witness_policy"] = cert->witness_policy;
            j["failures"] = ordered_json::array();
        } else {
            j["gap"] = nullptr;
            j["failures"] = ordered_json::array(
                {{{"u", word_str(fail.u)}, {"v", word_str(fail.v)}, {"separation", fail.separation}}});
        }
        emit(j, out_path);
        return 0;
    }

    if (*wspec) {
        eden::Subshift X = eden::load_subshift(wspec_target);
        eden::GluingFailure fail;
        bool ok = eden::weak_specification_check(X, wspec_eps, wspec_gap, 4, 3, &fail);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "spec_wspec";
        j["target"] = wspec_target;
        j["eps"] = wspec_eps;
        j["gap"] = wspec_gap;
        j["holds"] = ok;
        if (!ok)
            j["failure"] = {{"u", word_str(fail.u)}, {"v", word_str(fail.v)},
                            {"separation", fail.separation}};
        emit(j, out_path);
        return 0;
    }

    if (*indep) {
        eden::Subshift X = eden::load_subshift(indep_target);
        std::vector<eden::Pattern> tuple;
        for (int s = 0; s < X.alphabet().size; ++s) {
            eden::Pattern cyl(eden::Window::interval(0, 0), {s});
            if (eden::pattern_allowed(X, cyl)) tuple.push_back(cyl);
        }
        auto rep = eden::independence_density(X, tuple, eden::folner_box(indep_n, 1));
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "spec_independence";
        j["target"] = indep_target;
        j["n"] = indep_n;
        j["tuple_size"] = tuple.size();
        j["phi"] = rep.phi;
        j["box_size"] = rep.K.size();
        j["density"] = rep.density;
        ordered_json cells = ordered_json::array();
        for (const auto& c : rep.independence_subset) cells.push_back(c[0]);
        j["independence_subset"] = cells;
        emit(j, out_path);
        return 0;
    }

    if (*entropy) {
        eden::Subshift X = eden::load_subshift(ent_target);
        eden::EntropyValue v = ent_estimate > 0 ? eden::entropy_estimate(X, ent_estimate, ent_eps)
                                                : eden::entropy_exact_1d(X);
        (void)ent_exact;
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "entropy";
        j["target"] = ent_target;
        j["value"] = v.value;
        j["method"] = eden::entropy_method_name(v.method);
        if (v.n > 0) j["n"] = v.n;
        j["error_bound"] = v.error_bound;
        emit(j, out_path);
        return 0;
    }

    if (*pcheck) {
        eden::LaurentPoly f = eden::parse_poly(pcheck_poly);
        auto r = eden::is_l1_invertible(f);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "principal_check";
        j["poly"] = eden::format_poly(f);
        j["invertible"] = r.invertible;
        j["margin"] = r.margin;
        if (!r.invertible) j["witness"] = {r.witness.real(), r.witness.imag()};
        emit(j, out_path);
        return 0;
    }

    if (*phom) {
        eden::LaurentPoly f = eden::parse_poly(phom_poly);
        eden::SummableHomoclinic w = eden::l1_inverse(f, phom_tol);
        eden::PrincipalPoint x = eden::fundamental_homoclinic(f, phom_tol);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "principal_homoclinic";
        j["poly"] = eden::format_poly(f);
        j["range"] = w.M;
        j["w0"] = w.at(0);
        j["l1_norm"] = w.l1();
        j["residual"] = w.residual;
        j["tail_bound"] = w.tail_bound;
        j["decay_rate"] = w.decay_rate;
        j["summability"] = x.summability();
        j["point_residual"] = x.residual;
        emit(j, out_path);
        return 0;
    }

    if (*pglue) {
        eden::LaurentPoly f = eden::parse_poly(pglue_poly);
        std::ifstream in(pglue_targets);
        if (!in) throw eden::InvalidInputError("cannot open targets file: " + pglue_targets);
        nlohmann::json spec_doc = nlohmann::json::parse(in);
        std::vector<eden::GlueTarget> targets;
        for (const auto& t : spec_doc) {
            eden::GlueTarget g;
            long lo = t.at("window").at(0).get<long>(), hi = t.at("window").at(1).get<long>();
            g.window = eden::Window::interval(lo, hi);
            for (const auto& v : t.at("values")) g.values.push_back(v.get<double>());
            targets.push_back(std::move(g));
        }
        eden::PrincipalPoint x = eden::glue_specification(f, targets, pglue_eps);
        ordered_json j;
        j["version"] = kReportVersion;
        j["kind"] = "principal_glue";
        j["poly"] = eden::format_poly(f);
        j["eps"] = pglue_eps;
        j["targets"] = targets.size();
        j["lo"] = x.lo;
        ordered_json vals = ordered_json::array();
        for (double v : x.values) vals.push_back(v);
        j["values"] = vals;
        j["residual"] = x.residual;
        j["tail_bound"] = x.tail_bound;
        emit(j, out_path);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eden::EdenError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
