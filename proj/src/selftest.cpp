#include "nilorb/selftest.hpp"

#include "nilorb/classify.hpp"
#include "nilorb/invariants.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/normal_form.hpp"
#include "nilorb/poset.hpp"
#include "nilorb/quiver.hpp"
#include "nilorb/sampling.hpp"

namespace nilorb {

namespace {

void check(SelftestResult& res, bool ok, const std::string& what) {
    if (ok) {
        ++res.passed;
    } else {
        ++res.failed;
        res.failures.push_back(what);
    }
}

std::vector<IndecLabel> all_labels(int p) {
    std::vector<IndecLabel> ls;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) ls.push_back(IndecLabel::U(i, j));
    for (int i = 1; i <= p; ++i) ls.push_back(IndecLabel::V(i));
    return ls;
}

}  // namespace

SelftestResult run_selftest() {
    SelftestResult res;

    // Hom oracle vs delta formula, exhaustively for p <= 3.
    for (int p = 1; p <= 3; ++p) {
        bool ok = true;
        auto labels = all_labels(p);
        for (const auto& la : labels)
            for (const auto& lb : labels) {
                QuiverRep ra = build_indecomposable(la, p);
                QuiverRep rb = build_indecomposable(lb, p);
                if (hom_dim_oracle(ra, rb) != hom_dim_formula(la, lb)) ok = false;
            }
        check(res, ok, "hom oracle equals formula at p=" + std::to_string(p));
    }

    // Classification round trip on a few block types.
    for (const auto& bs : {std::vector<int>{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}}) {
        BlockData blocks(bs);
        bool ok = true;
        for (const Eolp& e : enumerate_eolps(blocks))
            if (!(classify(representative_matrix(e, blocks), blocks) == e)) ok = false;
        check(res, ok, "classify o representative = id on " + blocks.to_string());
    }

    // Conjugation invariance of classify.
    {
        BlockData blocks({2, 1, 1});
        bool ok = true;
        for (uint64_t s = 0; s < 20; ++s) {
            Mat n = sample(SampleKind::Nilpotent, blocks, 2, 101 + s);
            Mat g = sample(SampleKind::Parabolic, blocks, 2, 202 + s);
            if (!(classify(g * n * *inverse(g), blocks) == classify(n, blocks))) ok = false;
        }
        check(res, ok, "classification is conjugation invariant on (2,1,1)");
    }

    // Hom-order route agreement on (1,1,1).
    {
        BlockData blocks({1, 1, 1});
        auto es = enumerate_eolps(blocks);
        bool ok = true;
        for (const Eolp& x : es)
            for (const Eolp& y : es) {
                RankProfile px = rank_profile(representative_matrix(x, blocks), blocks);
                RankProfile py = rank_profile(representative_matrix(y, blocks), blocks);
                bool by_rank = true;
                for (int k = 1; k <= 3 && by_rank; ++k) {
                    if (px.a(blocks)[k - 1] > py.a(blocks)[k - 1]) by_rank = false;
                    for (int l = 1; l <= 3; ++l)
                        if (px.b(blocks)[k - 1][l - 1] > py.b(blocks)[k - 1][l - 1]) by_rank = false;
                }
                if (by_rank != leq_deg(x, y, blocks)) ok = false;
            }
        check(res, ok, "rank-profile order equals hom-order on (1,1,1)");
    }

    // Normal form: exactness and shape on generic samples.
    for (int n = 2; n <= 4; ++n) {
        BlockData borel = BlockData::borel(n);
        bool ok = true;
        int done = 0;
        for (uint64_t s = 0; done < 10 && s < 200; ++s) {
            Mat m = sample_nilpotent(n, n, 404 + 31 * n + s);
            if (!is_generic(m, borel)) continue;
            ++done;
            GenericNormalForm nf = normal_form(m, borel);
            if (nf.g * m * *inverse(nf.g) != nf.h) ok = false;
            if (!matches_normal_pattern(nf.h, borel)) ok = false;
        }
        check(res, ok && done == 10, "generic normal form round trip at n=" + std::to_string(n));
    }

    // Explicit n = 3 identities.
    {
        SemiInvDatum d1 = builtin_uthree("det1"), d2 = builtin_uthree("det2");
        SemiInvDatum f1 = builtin_uthree("f1"), f2 = builtin_uthree("f2");
        bool ok = true;
        for (uint64_t s = 0; s < 25; ++s) {
            Mat n = sample_nilpotent(3, 3, 707 + s);
            Rat a = evaluate(d1, n), b = evaluate(d2, n);
            if (a != b) ok = false;
            if (evaluate(f1, n) * evaluate(f2, n) != a * a * a) ok = false;
        }
        check(res, ok, "n=3 determinant identities");
    }

    return res;
}

}  // namespace nilorb
