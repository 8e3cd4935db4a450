#include "nilorb/eolp.hpp"

#include <sstream>

namespace nilorb {

std::string IndecLabel::to_string() const {
    std::ostringstream os;
    if (kind == Kind::V)
        os << "V(" << i << ")";
    else
        os << "U(" << i << "," << j << ")";
    return os.str();
}

std::vector<int> Decomposition::dim_vector(int p) const {
    std::vector<int> d(p, 0);
    for (const auto& [label, m] : mult) {
        if (label.i < 1 || label.i > p || (label.kind == IndecLabel::Kind::U && (label.j < 1 || label.j > p)))
            throw DomainError("label index outside 1..p");
        for (int k = 1; k <= p; ++k) d[k - 1] += m * label.dim_at(k);
    }
    return d;
}

Decomposition Decomposition::plus(const Decomposition& o) const {
    Decomposition out = *this;
    for (const auto& [l, m] : o.mult) out.add(l, m);
    return out;
}

bool Decomposition::shares_summand(const Decomposition& o) const {
    for (const auto& [l, m] : mult)
        if (o.mult.count(l)) return true;
    return false;
}

std::string Decomposition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, m] : mult) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << l.to_string();
    }
    if (first) os << "0";
    return os.str();
}

int Eolp::load(int v) const {
    int s = 0;
    for (int u = 1; u <= p; ++u) s += arrow(v, u) + arrow(u, v);
    return s;  // a loop appears in both terms at u = v
}

std::vector<int> Eolp::flat() const {
    std::vector<int> f;
    for (const auto& row : arrows) f.insert(f.end(), row.begin(), row.end());
    f.insert(f.end(), dots.begin(), dots.end());
    return f;
}

std::string Eolp::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            for (int m = 0; m < arrow(i, j); ++m) {
                os << (first ? "" : " ") << j << "->" << i;
                first = false;
            }
    os << (first ? "dots[" : " dots[");
    for (int i = 1; i <= p; ++i) os << (i > 1 ? "," : "") << dot(i);
    os << "]";
    return os.str();
}

bool validate(const Eolp& e, const BlockData& blocks) {
    if (e.p != blocks.p()) throw DomainError("pattern size does not match block data");
    if (int(e.arrows.size()) != e.p || int(e.dots.size()) != e.p) throw DomainError("malformed pattern");
    for (int v = 1; v <= e.p; ++v) {
        if (e.dot(v) < 0) return false;
        for (int u = 1; u <= e.p; ++u)
            if (e.arrow(v, u) < 0) return false;
        if (e.load(v) + e.dot(v) != blocks.block(v)) return false;
    }
    return true;
}

namespace {

void enumerate_rec(const BlockData& blocks, Eolp& cur, std::vector<int>& used, int pos,
                   std::vector<Eolp>& out) {
    int p = blocks.p();
    if (pos == p * p) {
        for (int v = 1; v <= p; ++v) cur.dot(v) = blocks.block(v) - used[v - 1];
        out.push_back(cur);
        return;
    }
    int i = pos / p + 1, j = pos % p + 1;
    int cap;
    if (i == j)
        cap = (blocks.block(i) - used[i - 1]) / 2;
    else
        cap = std::min(blocks.block(i) - used[i - 1], blocks.block(j) - used[j - 1]);
    for (int m = 0; m <= cap; ++m) {
        cur.arrow(i, j) = m;
        used[i - 1] += (i == j) ? 2 * m : m;
        if (i != j) used[j - 1] += m;
        enumerate_rec(blocks, cur, used, pos + 1, out);
        used[i - 1] -= (i == j) ? 2 * m : m;
        if (i != j) used[j - 1] -= m;
    }
    cur.arrow(i, j) = 0;
}

}  // namespace

std::vector<Eolp> enumerate_eolps(const BlockData& blocks) {
    std::vector<Eolp> out;
    Eolp cur = Eolp::empty(blocks.p());
    std::vector<int> used(blocks.p(), 0);
    enumerate_rec(blocks, cur, used, 0, out);
    return out;
}

Decomposition to_multiplicities(const Eolp& e) {
    Decomposition d;
    for (int i = 1; i <= e.p; ++i)
        for (int j = 1; j <= e.p; ++j) d.add(IndecLabel::U(i, j), e.arrow(i, j));
    for (int i = 1; i <= e.p; ++i) d.add(IndecLabel::V(i), e.dot(i));
    return d;
}

Eolp from_multiplicities(const Decomposition& d, const BlockData& blocks) {
    int p = blocks.p();
    Eolp e = Eolp::empty(p);
    for (const auto& [l, m] : d.mult) {
        if (l.i < 1 || l.i > p || (l.kind == IndecLabel::Kind::U && (l.j < 1 || l.j > p)))
            throw DomainError("label index outside 1..p");
        if (l.kind == IndecLabel::Kind::U)
            e.arrow(l.i, l.j) += m;
        else
            e.dot(l.i) += m;
    }
    std::vector<int> dims = d.dim_vector(p);
    for (int k = 1; k <= p; ++k)
        if (dims[k - 1] != blocks.d(k))
            throw DomainError("inconsistent dimension vector for block data " + blocks.to_string());
    return e;
}

}  // namespace nilorb
