#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nilorb/classify.hpp"
#include "nilorb/finiteness.hpp"
#include "nilorb/invariants.hpp"
#include "nilorb/json_io.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/normal_form.hpp"
#include "nilorb/poset.hpp"
#include "nilorb/quiver.hpp"
#include "nilorb/selftest.hpp"

using namespace nilorb;
using nlohmann::json;

namespace {

struct Options {
    std::string blocks;
    int nilpotency = 0;
    std::string matrix_file;
    std::string a_file, b_file;
    std::string datum_file;
    std::string format = "json";
    uint64_t seed = 12345;
    int trials = 10;
    bool pretty = false;
};

BlockData parse_blocks(const std::string& s) {
    if (s.empty()) throw ParseError("--blocks is required for this subcommand");
    std::vector<int> b;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            b.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("cannot parse block size '" + tok + "'");
        }
    }
    return BlockData(b);
}

json load_json(const std::string& path) {
    if (path.empty()) throw ParseError("missing input file argument");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

// n for datum-based subcommands: --blocks when given, otherwise the builtin's n.
int datum_size(const Options& opt, const json& datum_json) {
    if (!opt.blocks.empty()) return parse_blocks(opt.blocks).n();
    if (datum_json.is_object() && datum_json.contains("n")) return datum_json["n"].get<int>();
    throw ParseError("--blocks (its total gives the matrix size) is required here");
}

json eolp_with_dim(const Eolp& e, const BlockData& blocks) {
    json j = eolp_to_json(e, blocks);
    j["dim"] = orbit_dimension(to_multiplicities(e), blocks);
    return j;
}

int run(const std::string& cmd, const Options& opt) {
    if (cmd == "orbits") {
        BlockData blocks = parse_blocks(opt.blocks);
        json out = json::array();
        for (const Eolp& e : enumerate_eolps(blocks)) out.push_back(eolp_with_dim(e, blocks));
        emit(out, opt.pretty);
        return 0;
    }
    if (cmd == "classify") {
        BlockData blocks = parse_blocks(opt.blocks);
        Mat n = matrix_from_json(load_json(opt.matrix_file));
        emit(eolp_with_dim(classify(n, blocks), blocks), opt.pretty);
        return 0;
    }
    if (cmd == "leq") {
        BlockData blocks = parse_blocks(opt.blocks);
        auto [ea, ba] = eolp_from_json(load_json(opt.a_file));
        auto [eb, bb] = eolp_from_json(load_json(opt.b_file));
        if (!(ba == blocks) || !(bb == blocks))
            throw DomainError("pattern block data does not match --blocks");
        emit(json{{"leq", leq_deg(ea, eb, blocks)}}, opt.pretty);
        return 0;
    }
    if (cmd == "hasse") {
        BlockData blocks = parse_blocks(opt.blocks);
        OrbitPoset ps = hasse(blocks);
        if (opt.format == "dot") {
            std::cout << to_dot(ps, blocks);
        } else if (opt.format == "json") {
            emit(poset_to_json(ps, blocks), opt.pretty);
        } else {
            throw ParseError("--format must be json or dot");
        }
        return 0;
    }
    if (cmd == "normal-form") {
        BlockData blocks = parse_blocks(opt.blocks);
        Mat n = matrix_from_json(load_json(opt.matrix_file));
        GenericNormalForm nf = normal_form(n, blocks);
        json ones = json::array(), zeros = json::array();
        for (auto [i, j, v] : normal_pattern_positions(blocks))
            (v ? ones : zeros).push_back({i, j});
        emit(json{{"H", matrix_to_json(nf.h)},
                  {"g", matrix_to_json(nf.g)},
                  {"certificate", {{"ones", ones}, {"zeros", zeros}}}},
             opt.pretty);
        return 0;
    }
    if (cmd == "u-normal-form") {
        Mat n = matrix_from_json(load_json(opt.matrix_file));
        UNormalForm un = u_normal_form(n);
        emit(json{{"H", matrix_to_json(un.h)}, {"u", matrix_to_json(un.u)}}, opt.pretty);
        return 0;
    }
    if (cmd == "invariant-eval") {
        SemiInvDatum d = datum_from_json(load_json(opt.datum_file));
        Mat n = matrix_from_json(load_json(opt.matrix_file));
        emit(json{{"value", rat_to_string(evaluate(d, n))}}, opt.pretty);
        return 0;
    }
    if (cmd == "invariant-weight") {
        json dj = load_json(opt.datum_file);
        SemiInvDatum d = datum_from_json(dj);
        emit(weight_to_json(weight(d, datum_size(opt, dj))), opt.pretty);
        return 0;
    }
    if (cmd == "toric-check") {
        json dj = load_json(opt.datum_file);
        SemiInvDatum d = datum_from_json(dj);
        int n = datum_size(opt, dj);
        ToricCheck tc = is_toric_on_samples(d, n, opt.trials, opt.seed);
        json out{{"toric", tc.toric},
                 {"trials", tc.trials},
                 {"error_bound", rat_to_string(tc.error_bound)},
                 {"sum_free", is_sum_free(d)}};
        try {
            ToricData td = toric_exponents(d, n);
            out["exponents"] = {{"measured", td.measured},
                                {"predicted", td.predicted},
                                {"match", td.match}};
        } catch (const DomainError& e) {
            out["exponents"] = nullptr;
            out["exponents_note"] = e.what();
        }
        emit(out, opt.pretty);
        return 0;
    }
    if (cmd == "finiteness") {
        BlockData blocks = parse_blocks(opt.blocks);
        if (opt.nilpotency == 0) throw ParseError("--nilpotency is required");
        FinitenessVerdict v = is_finite(blocks, opt.nilpotency);
        json out{{"finite", v.finite}, {"reason", to_string(v.reason)}};
        out["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
        emit(out, opt.pretty);
        return 0;
    }
    if (cmd == "conjugate-test") {
        BlockData blocks = parse_blocks(opt.blocks);
        Mat a = matrix_from_json(load_json(opt.a_file));
        Mat b = matrix_from_json(load_json(opt.b_file));
        ConjugacyResult cr = are_conjugate(a, b, blocks, opt.seed, opt.trials);
        json out;
        switch (cr.status) {
            case ConjugacyResult::Status::Yes: out["result"] = "yes"; break;
            case ConjugacyResult::Status::No: out["result"] = "no"; break;
            case ConjugacyResult::Status::Unknown: out["result"] = "unknown"; break;
        }
        if (cr.g) out["g"] = matrix_to_json(*cr.g);
        out["certificate"] = cr.certificate;
        emit(out, opt.pretty);
        return 0;
    }
    if (cmd == "selftest") {
        SelftestResult r = run_selftest();
        emit(json{{"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}},
             opt.pretty);
        return r.failed == 0 ? 0 : 1;
    }
    throw ParseError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact orbit calculus for parabolic conjugation on nilpotent matrices"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::string> names = {
        "orbits",         "classify",         "leq",         "hasse",
        "normal-form",    "u-normal-form",    "invariant-eval", "invariant-weight",
        "toric-check",    "finiteness",       "conjugate-test", "selftest"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--blocks", opt.blocks, "comma-separated block sizes, e.g. 2,1");
        sub->add_option("--nilpotency", opt.nilpotency, "nilpotency bound x");
        sub->add_option("--matrix", opt.matrix_file, "matrix JSON file");
        sub->add_option("--a", opt.a_file, "first input file");
        sub->add_option("--b", opt.b_file, "second input file");
        sub->add_option("--datum", opt.datum_file, "semi-invariant datum JSON file");
        sub->add_option("--format", opt.format, "output format: json or dot");
        sub->add_option("--seed", opt.seed, "PRNG seed");
        sub->add_option("--trials", opt.trials, "randomized trial count");
        sub->add_flag("--pretty", opt.pretty, "indent JSON output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
