#include "nilorb/poset.hpp"

#include <sstream>

#include "nilorb/quiver.hpp"

namespace nilorb {

bool leq_deg(const Eolp& x, const Eolp& y, const BlockData& blocks) {
    if (!validate(x, blocks) || !validate(y, blocks))
        throw DomainError("patterns must be valid for the block data");
    InvariantVector ix = invariant_vector(to_multiplicities(x), blocks.p());
    InvariantVector iy = invariant_vector(to_multiplicities(y), blocks.p());
    for (int k = 0; k < blocks.p(); ++k) {
        if (ix.a[k] > iy.a[k]) return false;
        for (int l = 0; l < blocks.p(); ++l)
            if (ix.b[k][l] > iy.b[k][l]) return false;
    }
    return true;
}

int OrbitPoset::index_of(const Eolp& e) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == e) return int(i);
    throw DomainError("pattern is not an element of the poset");
}

OrbitPoset hasse(const BlockData& blocks) {
    OrbitPoset ps;
    ps.elements = enumerate_eolps(blocks);
    int n = int(ps.elements.size());
    std::vector<InvariantVector> ivs;
    ivs.reserve(n);
    for (const Eolp& e : ps.elements) {
        Decomposition d = to_multiplicities(e);
        ivs.push_back(invariant_vector(d, blocks.p()));
        ps.dims.push_back(orbit_dimension(d, blocks));
    }
    ps.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool le = true;
            for (int k = 0; le && k < blocks.p(); ++k) {
                if (ivs[i].a[k] > ivs[j].a[k]) le = false;
                for (int l = 0; le && l < blocks.p(); ++l)
                    if (ivs[i].b[k][l] > ivs[j].b[k][l]) le = false;
            }
            ps.leq[i][j] = le;
        }
    // Transitive reduction of the strict order.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !ps.leq[i][j]) continue;
            bool cover = true;
            for (int k = 0; cover && k < n; ++k)
                if (k != i && k != j && ps.leq[i][k] && ps.leq[k][j]) cover = false;
            if (cover) ps.covers.emplace_back(i, j);
        }
    return ps;
}

namespace {

// Detects the swap-type disjoint degeneration U(t,s) < U(s,t) with s < t.
std::optional<std::pair<int, int>> swap_pair(const Decomposition& d, const Decomposition& dp) {
    if (d.mult.size() != 1 || dp.mult.size() != 1) return std::nullopt;
    const auto& [ld, md] = *d.mult.begin();
    const auto& [lp, mp] = *dp.mult.begin();
    if (md != 1 || mp != 1) return std::nullopt;
    if (ld.kind != IndecLabel::Kind::U || lp.kind != IndecLabel::Kind::U) return std::nullopt;
    if (ld.i != lp.j || ld.j != lp.i || ld.i == ld.j) return std::nullopt;
    int s = std::min(ld.i, ld.j), t = std::max(ld.i, ld.j);
    if (ld.i == t && ld.j == s) return std::pair{s, t};  // D = U(t,s), D' = U(s,t)
    return std::nullopt;
}

}  // namespace

MinimalityReport minimality_check(const Decomposition& d, const Decomposition& dp,
                                  const Decomposition& w, const BlockData& blocks) {
    int p = blocks.p();
    if (d.dim_vector(p) != dp.dim_vector(p))
        throw DomainError("D and D' must have equal dimension vectors");
    if (d == dp) throw DomainError("D and D' must be distinct");
    if (d.shares_summand(dp)) throw DomainError("D and D' must be disjoint");
    InvariantVector ivd = invariant_vector(d, p), ivdp = invariant_vector(dp, p);
    for (int k = 0; k < p; ++k) {
        if (ivd.a[k] > ivdp.a[k]) throw DomainError("D is not below D' in the degeneration order");
        for (int l = 0; l < p; ++l)
            if (ivd.b[k][l] > ivdp.b[k][l])
                throw DomainError("D is not below D' in the degeneration order");
    }
    Decomposition m = d.plus(w);
    Decomposition mp = dp.plus(w);
    Eolp em = from_multiplicities(m, blocks);
    Eolp emp = from_multiplicities(mp, blocks);
    if (!leq_deg(em, emp, blocks)) throw DomainError("D+W is not below D'+W in the degeneration order");

    MinimalityReport rep;
    OrbitPoset ps = hasse(blocks);
    int i = ps.index_of(em), j = ps.index_of(emp);
    rep.minimal = false;
    for (auto [a, b] : ps.covers)
        if (a == i && b == j) rep.minimal = true;

    rep.delta_literal = true;
    for (const auto& [lx, mx] : w.mult) {
        Decomposition x;
        x.add(lx);
        if (hom_dim_formula(x, d) != hom_dim_formula(x, dp) ||
            hom_dim_formula(d, x) != hom_dim_formula(dp, x))
            rep.delta_literal = false;
    }

    if (auto st = swap_pair(d, dp)) {
        auto [s, t] = *st;
        bool ok = true;
        for (const auto& [lx, mx] : w.mult) {
            if (lx.kind == IndecLabel::Kind::V) {
                if (s < lx.i && lx.i < t) ok = false;
            } else {
                int k = lx.i, l = lx.j;
                if ((k < t && s < l && l < t) || (s < k && k < t && t < l)) ok = false;
            }
        }
        rep.delta_swap = ok;
    }

    std::ostringstream diag;
    if (rep.delta_literal != rep.minimal)
        diag << "literal delta criterion (" << (rep.delta_literal ? "minimal" : "not minimal")
             << ") disagrees with the covering relation; ";
    if (rep.delta_swap && *rep.delta_swap != rep.minimal)
        diag << "swap-case delta criterion (" << (*rep.delta_swap ? "minimal" : "not minimal")
             << ") disagrees with the covering relation; ";
    rep.diagnostic = diag.str();
    return rep;
}

std::string to_dot(const OrbitPoset& poset, const BlockData& blocks) {
    std::ostringstream os;
    os << "digraph degenerations {\n";
    os << "  label=\"type " << blocks.to_string() << "\";\n";
    os << "  rankdir=TB;\n  node [shape=box,fontname=\"monospace\"];\n";
    for (size_t i = 0; i < poset.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << poset.elements[i].to_string() << "\\ndim "
           << poset.dims[i] << "\"];\n";
    for (auto [a, b] : poset.covers) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace nilorb
