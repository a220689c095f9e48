#include "qmeas/error.hpp"
#include "qmeas/grade2.hpp"
#include "qmeas/interference.hpp"
#include "qmeas/json_io.hpp"
#include "qmeas/kernel.hpp"
#include "qmeas/random_gen.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using qmeas::Error;
using qmeas::Json;

struct Options {
    std::string input;
    std::string output;
    unsigned grade = 1;
    unsigned slot = 0;
    std::uint64_t seed = 0;
    unsigned trials = 200;
    std::string mode = "exact";
    std::string format = "json";
    std::string sets;
    std::string kind = "setfn";
    unsigned k = 3;
    unsigned d = 2;
    long bound = 9;
    unsigned blocks = 4;
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Error("cannot write " + output_path);
    out << text;
}

void emit_json(const Json& doc, const std::string& output_path) {
    emit(doc.dump(2) + "\n", output_path);
}

// Semicolon-separated canonical set keys ("0;1,2;" = {a}, {b,c}, empty).
std::vector<qmeas::MSet> parse_sets(const qmeas::SpacePtr& space, const std::string& text) {
    std::vector<qmeas::MSet> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t stop = text.find(';', start);
        std::string key = text.substr(start, stop == std::string::npos ? stop : stop - start);
        out.push_back(qmeas::MSet::from_key(space, key));
        if (stop == std::string::npos) return out;
        start = stop + 1;
    }
}

Json witness_json(const qmeas::GradeWitness& witness) {
    Json sets = Json::array();
    for (const auto& s : witness.sets) sets.push_back(s.key());
    Json out = Json::object();
    out["sets"] = std::move(sets);
    out["interference"] = witness.value.str();
    return out;
}

void run_check_grade(const Options& opt) {
    qmeas::SetFunction mu = qmeas::set_function_from_json(qmeas::load_json_file(opt.input));
    qmeas::GradeReport report = qmeas::is_grade_additive(mu, opt.grade);
    Json out = Json::object();
    out["grade_additive"] = report.additive;
    if (report.witness) out["witness"] = witness_json(*report.witness);
    emit_json(out, opt.output);
}

void run_interference(const Options& opt) {
    qmeas::SetFunction mu = qmeas::set_function_from_json(qmeas::load_json_file(opt.input));
    std::vector<qmeas::MSet> sets = parse_sets(mu.space(), opt.sets);
    Json out = Json::object();
    out["interference"] = qmeas::interference(mu, sets).str();
    emit_json(out, opt.output);
}

void run_delta(const Options& opt) {
    qmeas::SetFunction nu = qmeas::set_function_from_json(qmeas::load_json_file(opt.input));
    std::vector<qmeas::MSet> sets = parse_sets(nu.space(), opt.sets);
    if (sets.size() != 1) throw Error("delta takes exactly one set");
    emit_json(qmeas::set_function_to_json(qmeas::delta(nu, sets.front())), opt.output);
}

void run_reconstruct(const Options& opt) {
    qmeas::SetFunction mu = qmeas::set_function_from_json(qmeas::load_json_file(opt.input));
    emit_json(qmeas::polymeasure_to_json(qmeas::reconstruct(mu)), opt.output);
}

void run_roundtrip(const Options& opt) {
    qmeas::SetFunction mu = qmeas::set_function_from_json(qmeas::load_json_file(opt.input));
    Json out = Json::object();
    out["roundtrip"] = qmeas::roundtrip_check(mu);
    emit_json(out, opt.output);
}

void run_diagonal(const Options& opt) {
    qmeas::PolyMeasure lambda = qmeas::polymeasure_from_json(qmeas::load_json_file(opt.input));
    emit_json(qmeas::set_function_to_json(qmeas::diagonal(lambda)), opt.output);
}

void run_symmetrize(const Options& opt) {
    qmeas::PolyMeasure lambda = qmeas::polymeasure_from_json(qmeas::load_json_file(opt.input));
    emit_json(qmeas::polymeasure_to_json(qmeas::symmetrize(lambda)), opt.output);
}

void run_polarize(const Options& opt) {
    qmeas::SetFunction mu = qmeas::set_function_from_json(qmeas::load_json_file(opt.input));
    std::vector<qmeas::MSet> sets = parse_sets(mu.space(), opt.sets);
    Json out = Json::object();
    out["polarization"] = qmeas::polarization_recover(mu, sets).str();
    emit_json(out, opt.output);
}

void run_marginal(const Options& opt) {
    qmeas::PolyMeasure lambda = qmeas::polymeasure_from_json(qmeas::load_json_file(opt.input));
    emit_json(qmeas::set_function_to_json(qmeas::marginal(lambda, opt.slot)), opt.output);
}

void run_variation(const Options& opt) {
    qmeas::PolyMeasure lambda = qmeas::polymeasure_from_json(qmeas::load_json_file(opt.input));
    Json out = Json::object();
    out["variation"] = qmeas::variation(lambda).str();
    emit_json(out, opt.output);
}

void run_semivariation(const Options& opt) {
    qmeas::PolyMeasure lambda = qmeas::polymeasure_from_json(qmeas::load_json_file(opt.input));
    Json out = Json::object();
    if (opt.mode == "exact") {
        out["semivariation"] = qmeas::semivariation_exact(lambda).str();
        out["mode"] = "exact";
    } else {
        out["semivar_lb"] = qmeas::semivariation_sampled(lambda, opt.seed, opt.trials).str();
        out["mode"] = "sampled";
        Json meta = Json::object();
        meta["seed"] = opt.seed;
        meta["trials"] = opt.trials;
        out["_meta"] = std::move(meta);
    }
    emit_json(out, opt.output);
}

void run_separate_additivity(const Options& opt) {
    qmeas::RawCylinderTable raw = qmeas::cylinder_table_from_json(qmeas::load_json_file(opt.input));
    qmeas::SeparateAdditivityReport report = qmeas::check_separate_additivity(raw);
    Json out = Json::object();
    out["separately_additive"] = report.additive;
    if (report.violation) {
        const auto& v = *report.violation;
        Json context = Json::array();
        for (const auto& s : v.context) context.push_back(s.key());
        Json violation = Json::object();
        violation["slot"] = v.slot;
        violation["context"] = std::move(context);
        violation["part_b"] = v.part_b.key();
        violation["part_c"] = v.part_c.key();
        violation["whole"] = v.whole.str();
        violation["parts_sum"] = v.parts_sum.str();
        out["violation"] = std::move(violation);
    }
    emit_json(out, opt.output);
}

void run_diag_length(const Options& opt) {
    qmeas::BoxUnion t = qmeas::box_union_from_json(qmeas::load_json_file(opt.input));
    Json out = Json::object();
    out["length"] = qmeas::diag_length(t).str();
    emit_json(out, opt.output);
}

void run_kernel_demo(const Options& opt) {
    std::vector<qmeas::GrowthRow> rows =
        qmeas::variation_growth_report(opt.blocks, opt.trials, opt.seed);
    std::ostringstream text;
    if (opt.format == "json") {
        for (const auto& row : rows) text << qmeas::growth_row_to_json(row).dump() << "\n";
    } else {
        std::size_t var_width = std::string("variation").size();
        std::size_t semi_width = std::string("semivar_lb").size();
        for (const auto& row : rows) {
            var_width = std::max(var_width, row.variation.str().size());
            semi_width = std::max(semi_width, row.semivar_lb.str().size());
        }
        text << std::left << std::setw(4) << "K" << std::setw(6) << "n"
             << std::setw(static_cast<int>(var_width) + 2) << "variation"
             << "semivar_lb" << "\n";
        for (const auto& row : rows) {
            text << std::left << std::setw(4) << row.blocks << std::setw(6) << row.n
                 << std::setw(static_cast<int>(var_width) + 2) << row.variation.str()
                 << row.semivar_lb.str() << "\n";
        }
    }
    emit(text.str(), opt.output);
}

void run_gen_random(const Options& opt) {
    if (opt.d < 1 || opt.d > 4) throw Error("d must be between 1 and 4");
    qmeas::SeededRng rng(opt.seed);
    qmeas::SpacePtr space = qmeas::default_space(opt.k);
    Json meta = Json::object();
    meta["kind"] = opt.kind;
    meta["k"] = opt.k;
    meta["seed"] = opt.seed;
    meta["bound"] = opt.bound;
    Json artifact;
    if (opt.kind == "setfn") {
        artifact = qmeas::set_function_to_json(qmeas::random_set_function(space, rng, opt.bound));
    } else if (opt.kind == "polymeasure") {
        meta["d"] = opt.d;
        std::vector<qmeas::SpacePtr> factors(opt.d, space);
        artifact = qmeas::polymeasure_to_json(qmeas::random_polymeasure(factors, rng, opt.bound));
    } else if (opt.kind == "grade2-measure") {
        artifact = qmeas::set_function_to_json(qmeas::random_grade2_measure(space, rng, opt.bound));
    } else {
        throw Error("unknown kind; use setfn, polymeasure or grade2-measure");
    }
    artifact["_meta"] = std::move(meta);
    emit_json(artifact, opt.output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact interference, polymeasure and diagonal-length computations on finite spaces"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "input artifact path")->required();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", opt.output, "output path (default: stdout)");
    };

    CLI::App* check_grade = app.add_subcommand("check-grade", "test grade-d additivity");
    add_input(check_grade);
    add_output(check_grade);
    check_grade->add_option("--grade", opt.grade, "grade d >= 1")->required();

    CLI::App* interference = app.add_subcommand("interference", "interference of a disjoint tuple");
    add_input(interference);
    add_output(interference);
    interference->add_option("--sets", opt.sets, "semicolon-separated set keys")->required();

    CLI::App* delta = app.add_subcommand("delta", "difference operator onto the complement subspace");
    add_input(delta);
    add_output(delta);
    delta->add_option("--sets", opt.sets, "the set to remove")->required();

    CLI::App* reconstruct = app.add_subcommand("reconstruct", "symmetric bimeasure with the given diagonal");
    add_input(reconstruct);
    add_output(reconstruct);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "is the input the diagonal of its reconstruction");
    add_input(roundtrip);
    add_output(roundtrip);

    CLI::App* diagonal = app.add_subcommand("diagonal", "diagonal set function of a polymeasure");
    add_input(diagonal);
    add_output(diagonal);

    CLI::App* symmetrize = app.add_subcommand("symmetrize", "average over argument permutations");
    add_input(symmetrize);
    add_output(symmetrize);

    CLI::App* polarize = app.add_subcommand("polarize", "alternating-sum recovery on disjoint sets");
    add_input(polarize);
    add_output(polarize);
    polarize->add_option("--sets", opt.sets, "semicolon-separated set keys")->required();

    CLI::App* marginal = app.add_subcommand("marginal", "fix every other slot to the full set");
    add_input(marginal);
    add_output(marginal);
    marginal->add_option("--slot", opt.slot, "slot index")->required();

    CLI::App* variation = app.add_subcommand("variation", "sum of absolute tensor entries");
    add_input(variation);
    add_output(variation);

    CLI::App* semivariation = app.add_subcommand("semivariation", "max over sign vectors per slot");
    add_input(semivariation);
    add_output(semivariation);
    semivariation->add_option("--mode", opt.mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    semivariation->add_option("--seed", opt.seed, "sampling seed");
    semivariation->add_option("--trials", opt.trials, "sampled trials");

    CLI::App* separate = app.add_subcommand("separate-additivity", "slot-wise additivity of a cylinder table");
    add_input(separate);
    add_output(separate);

    CLI::App* diag_len = app.add_subcommand("diag-length", "diagonal trace length of a box union");
    add_input(diag_len);
    add_output(diag_len);

    CLI::App* kernel_demo = app.add_subcommand("kernel-demo", "variation growth of the Walsh block kernel");
    add_output(kernel_demo);
    kernel_demo->add_option("--blocks", opt.blocks, "truncation block count K");
    kernel_demo->add_option("--trials", opt.trials, "sampled trials per truncation")
        ->default_val(64u);
    kernel_demo->add_option("--seed", opt.seed, "sampling seed");
    kernel_demo->add_option("--format", opt.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* gen_random = app.add_subcommand("gen-random", "seeded random artifact");
    add_output(gen_random);
    gen_random->add_option("--kind", opt.kind, "setfn, polymeasure or grade2-measure")
        ->check(CLI::IsMember({"setfn", "polymeasure", "grade2-measure"}));
    gen_random->add_option("--k", opt.k, "atom count");
    gen_random->add_option("--d", opt.d, "polymeasure rank");
    gen_random->add_option("--seed", opt.seed, "generator seed");
    gen_random->add_option("--bound", opt.bound, "numerator bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check_grade)) run_check_grade(opt);
        else if (app.got_subcommand(interference)) run_interference(opt);
        else if (app.got_subcommand(delta)) run_delta(opt);
        else if (app.got_subcommand(reconstruct)) run_reconstruct(opt);
        else if (app.got_subcommand(roundtrip)) run_roundtrip(opt);
        else if (app.got_subcommand(diagonal)) run_diagonal(opt);
        else if (app.got_subcommand(symmetrize)) run_symmetrize(opt);
        else if (app.got_subcommand(polarize)) run_polarize(opt);
        else if (app.got_subcommand(marginal)) run_marginal(opt);
        else if (app.got_subcommand(variation)) run_variation(opt);
        else if (app.got_subcommand(semivariation)) run_semivariation(opt);
        else if (app.got_subcommand(separate)) run_separate_additivity(opt);
        else if (app.got_subcommand(diag_len)) run_diag_length(opt);
        else if (app.got_subcommand(kernel_demo)) run_kernel_demo(opt);
        else if (app.got_subcommand(gen_random)) run_gen_random(opt);
    } catch (const std::exception& e) {
        Json err = Json::object();
        err["error"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 0;
}
