#include "nilorb/json_io.hpp"

namespace nilorb {

namespace {

Rat rat_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(Int(v.get<int64_t>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw ParseError("matrix entries must be integers or exact \"p/q\" strings");
}

json rat_to_json(const Rat& q) {
    if (denominator(q) == 1 && numerator(q) >= -(Int(1) << 53) && numerator(q) <= (Int(1) << 53))
        return json(int64_t(numerator(q)));
    return json(rat_to_string(q));
}

}  // namespace

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Mat matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs rows, cols and entries");
    int r = j["rows"].get<int>(), c = j["cols"].get<int>();
    if (r < 0 || c < 0) throw ParseError("negative matrix dimensions");
    const json& e = j["entries"];
    if (!e.is_array() || int(e.size()) != r) throw ParseError("entries must hold `rows` rows");
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!e[i].is_array() || int(e[i].size()) != c) throw ParseError("row length mismatch");
        for (int k = 0; k < c; ++k) m(i, k) = rat_from_json(e[i][k]);
    }
    return m;
}

json eolp_to_json(const Eolp& e, const BlockData& blocks) {
    json arrows = json::array();
    for (int i = 1; i <= e.p; ++i)
        for (int j = 1; j <= e.p; ++j)
            if (e.arrow(i, j) > 0)
                arrows.push_back({{"from", j}, {"to", i}, {"mult", e.arrow(i, j)}});
    return json{{"blocks", blocks.blocks()}, {"arrows", arrows}, {"dots", e.dots}};
}

std::pair<Eolp, BlockData> eolp_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.contains("arrows") || !j.contains("dots"))
        throw ParseError("pattern JSON needs blocks, arrows and dots");
    BlockData blocks(j["blocks"].get<std::vector<int>>());
    Eolp e = Eolp::empty(blocks.p());
    for (const json& a : j["arrows"]) {
        int from = a.at("from").get<int>(), to = a.at("to").get<int>();
        int mult = a.value("mult", 1);
        if (from < 1 || from > e.p || to < 1 || to > e.p) throw ParseError("arrow vertex outside 1..p");
        if (mult < 0) throw ParseError("negative arrow multiplicity");
        e.arrow(to, from) += mult;
    }
    std::vector<int> dots = j["dots"].get<std::vector<int>>();
    if (int(dots.size()) != e.p) throw ParseError("dots must list one count per vertex");
    e.dots = dots;
    return {e, blocks};
}

json datum_to_json(const SemiInvDatum& d) {
    json polys = json::array();
    for (const auto& row : d.polys) {
        json jr = json::array();
        for (const Poly& p : row) {
            json coeffs = json::array();
            for (const Rat& c : p.c) coeffs.push_back(rat_to_json(c));
            jr.push_back(coeffs);
        }
        polys.push_back(jr);
    }
    return json{{"a", d.a}, {"a_prime", d.a_prime}, {"polys", polys}};
}

SemiInvDatum datum_from_json(const json& j) {
    if (j.is_object() && j.contains("builtin"))
        return builtin(j["builtin"].get<std::string>(), j.value("n", 0), j.value("i", 0),
                       j.value("j", 0));
    if (!j.is_object() || !j.contains("a") || !j.contains("a_prime") || !j.contains("polys"))
        throw ParseError("datum JSON needs a, a_prime and polys (or a builtin name)");
    SemiInvDatum d;
    d.a = j["a"].get<std::vector<int>>();
    d.a_prime = j["a_prime"].get<std::vector<int>>();
    for (const json& row : j["polys"]) {
        std::vector<Poly> r;
        for (const json& coeffs : row) {
            std::vector<Rat> c;
            for (const json& v : coeffs) c.push_back(rat_from_json(v));
            r.push_back(Poly(std::move(c)));
        }
        d.polys.push_back(std::move(r));
    }
    if (int(d.polys.size()) != d.s()) throw ParseError("polynomial table has wrong number of rows");
    for (const auto& row : d.polys)
        if (int(row.size()) != d.t()) throw ParseError("polynomial table has wrong number of columns");
    return d;
}

json poset_to_json(const OrbitPoset& poset, const BlockData& blocks) {
    json elements = json::array();
    for (const Eolp& e : poset.elements) elements.push_back(eolp_to_json(e, blocks));
    json covers = json::array();
    for (auto [i, j] : poset.covers) covers.push_back({i, j});
    return json{{"elements", elements}, {"covers", covers}, {"dims", poset.dims}};
}

json weight_to_json(const Weight& w) { return json{{"omega", w.omega}}; }

}  // namespace nilorb
