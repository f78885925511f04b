#include "adic/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace adic {

namespace {

constexpr long kMaxExtraBits = 1024;

// Enclosure max: lower = max of lowers, upper = max of uppers.
AdaptiveReal interval_max(const AdaptiveReal& x, const AdaptiveReal& y) {
    Dyadic lo = x.lower(), hi = x.upper();
    Dyadic ylo = y.lower(), yhi = y.upper();
    if (lo < ylo) lo = ylo;
    if (hi < yhi) hi = yhi;
    Dyadic mid = (lo + hi) * Dyadic(1, -1);
    Dyadic rad = (hi - lo) * Dyadic(1, -1);
    return AdaptiveReal(mid, rad, std::max(x.prec(), y.prec()));
}

long required_bits_for(const std::vector<BigInt>& heights) {
    long maxbits = 1;
    for (const auto& h : heights) maxbits = std::max(maxbits, bit_length(h));
    return maxbits + 32;
}

// Fractional sup norm of alpha * H(n) for an adaptive candidate, refining
// the candidate enclosure when the nearest-integer decision fails.
Scalar adaptive_term(const EigenCandidate& cand, AdaptiveReal& alpha,
                     const std::vector<BigInt>& heights) {
    long need = required_bits_for(heights);
    for (long bits = std::max(need, alpha.prec());; bits += 128) {
        if (alpha.prec() < bits) {
            if (!cand.refine)
                throw PrecisionExhaustedError(
                    "candidate precision too small for the level heights", bits);
            alpha = cand.refine(bits);
            if (alpha.prec() < bits)
                throw PrecisionExhaustedError("refinement callback did not reach", bits);
        }
        std::optional<AdaptiveReal> best;
        bool ok = true;
        for (const auto& h : heights) {
            AdaptiveReal x = alpha.scaled(BigRational(h));
            auto f = x.try_frac_distance();
            if (!f) {
                ok = false;
                break;
            }
            best = best ? interval_max(*best, *f) : *f;
        }
        if (ok) return Scalar(*best);
        if (bits - need > kMaxExtraBits)
            throw PrecisionExhaustedError("fractional part undecidable near a half-integer",
                                          bits);
        if (!cand.refine)
            throw PrecisionExhaustedError("fractional part undecidable at supplied precision",
                                          bits + 128);
    }
}

double scalar_to_double(const Scalar& s) { return s.to_double(); }

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ContinuousLikely: return "continuous-likely";
        case Verdict::MeasurableNotContinuousLikely: return "measurable-not-continuous-likely";
        case Verdict::NonEigenvalueLikely: return "non-eigenvalue-likely";
        default: return "inconclusive";
    }
}

SpectralReport norm_series(const TowerSystem& sys, const EigenCandidate& cand, int N) {
    if (N < 2) throw BadRangeError("series depth must be >= 2");
    SpectralReport rep;
    rep.N = N;
    rep.alpha_text = cand.alpha.str();
    rep.terms.reserve(static_cast<size_t>(N - 1));
    rep.cum1.reserve(static_cast<size_t>(N - 1));
    rep.cum2.reserve(static_cast<size_t>(N - 1));

    bool exact = cand.alpha.is_exact();
    AdaptiveReal alpha_enc;
    if (!exact) {
        alpha_enc = cand.alpha.adaptive();
        rep.precision_bits = alpha_enc.prec();
    }

    Scalar s1(0L), s2(0L);
    double c1 = 0, c2 = 0;
    for (int n = 2; n <= N; ++n) {
        auto heights = sys.heights(n);
        Scalar term;
        if (exact) {
            bool first = true;
            for (const auto& h : heights) {
                Scalar x = cand.alpha * Scalar(h);
                Scalar f = x.frac_distance();
                if (first || f > term) term = f;
                first = false;
            }
        } else {
            term = adaptive_term(cand, alpha_enc, heights);
            rep.precision_bits = std::max(rep.precision_bits, alpha_enc.prec());
        }
        s1 += term;
        s2 += term * term;
        double td = scalar_to_double(term);
        c1 += td;
        c2 += td * td;
        rep.terms.push_back(std::move(term));
        rep.cum1.push_back(c1);
        rep.cum2.push_back(c2);
    }
    rep.S1 = std::move(s1);
    rep.S2 = std::move(s2);
    return rep;
}

Verdict classify(SpectralReport& report, const ClassifyPolicy& policy) {
    report.policy = policy;
    report.classified = true;
    int count = static_cast<int>(report.terms.size());
    if (count < policy.min_terms) {
        report.verdict = Verdict::Inconclusive;
        return report.verdict;
    }
    int window = std::max(1, static_cast<int>(count * policy.window_fraction));
    int cut = count - window;  // tail = terms with index >= cut
    double s1_tail = report.cum1.back() - (cut > 0 ? report.cum1[static_cast<size_t>(cut - 1)] : 0);
    double s2_tail = report.cum2.back() - (cut > 0 ? report.cum2[static_cast<size_t>(cut - 1)] : 0);
    double max_tail = 0;
    for (int i = cut; i < count; ++i)
        max_tail = std::max(max_tail, scalar_to_double(report.terms[static_cast<size_t>(i)]));
    report.diagnostics = {window, s1_tail, s2_tail, max_tail};

    Verdict v;
    if (s1_tail < policy.eps1)
        v = Verdict::ContinuousLikely;
    else if (s2_tail < policy.eps2 && s1_tail >= policy.log_slope * std::log10(double(window)))
        v = Verdict::MeasurableNotContinuousLikely;
    else if (s2_tail >= policy.eps2)
        v = Verdict::NonEigenvalueLikely;
    else
        v = Verdict::Inconclusive;
    report.verdict = v;
    return v;
}

namespace {

struct DecayCheck {
    bool accepted = false;
    Scalar tail_sup;
    std::vector<std::pair<int, Scalar>> minima;
};

DecayCheck check_decay(const TowerSystem& sys, int m, const ScalarVec& v, int window,
                       const Scalar& tol) {
    DecayCheck out;
    ScalarVec cur = v;
    std::optional<Scalar> running_min;
    std::optional<Scalar> tail_sup;
    int tail_from = m + (3 * window) / 4;
    for (int n = m + 1; n <= m + window; ++n) {
        cur = to_scalar(sys.matrix(n)) * cur;
        Scalar d = sup_norm(cur);
        if (!running_min || d < *running_min) {
            running_min = d;
            out.minima.emplace_back(n, d);
        }
        if (n >= tail_from) {
            if (!tail_sup || d > *tail_sup) tail_sup = d;
        }
    }
    out.tail_sup = *tail_sup;
    out.accepted = out.tail_sup < tol;
    return out;
}

}  // namespace

Decomposition tendto0_decompose(const TowerSystem& sys, const EigenCandidate& cand, int max_m,
                                int decay_window, const Scalar& tol, int search_radius) {
    if (max_m < 2) throw BadRangeError("decomposition search needs max_m >= 2");
    if (decay_window < 8) throw BadRangeError("decay window too small");
    if (search_radius < 0 || search_radius > 4) throw BadRangeError("search radius out of range");

    for (int m = 2; m <= max_m; ++m) {
        auto heights = sys.heights(m);
        int c = static_cast<int>(heights.size());
        ScalarVec u(static_cast<size_t>(c));
        std::vector<BigInt> base(static_cast<size_t>(c));
        for (int t = 0; t < c; ++t) {
            u[static_cast<size_t>(t)] = cand.alpha * Scalar(heights[static_cast<size_t>(t)]);
            base[static_cast<size_t>(t)] = u[static_cast<size_t>(t)].nearest_integer().first;
        }

        // enumerate integer offsets by increasing sup norm, lexicographic
        // within a shell, so the plain nearest vector is tried first
        std::vector<std::vector<int>> offsets;
        std::vector<int> cell(static_cast<size_t>(c), -search_radius);
        for (;;) {
            offsets.push_back(cell);
            int i = 0;
            while (i < c && cell[static_cast<size_t>(i)] == search_radius) {
                cell[static_cast<size_t>(i)] = -search_radius;
                ++i;
            }
            if (i == c) break;
            cell[static_cast<size_t>(i)] += 1;
        }
        std::stable_sort(offsets.begin(), offsets.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             int na = 0, nb = 0;
                             for (int x : a) na = std::max(na, std::abs(x));
                             for (int x : b) nb = std::max(nb, std::abs(x));
                             if (na != nb) return na < nb;
                             return a < b;
                         });

        std::optional<Decomposition> best;
        std::optional<Scalar> best_tail;
        for (const auto& off : offsets) {
            std::vector<BigInt> w(static_cast<size_t>(c));
            ScalarVec v(static_cast<size_t>(c));
            for (int t = 0; t < c; ++t) {
                w[static_cast<size_t>(t)] = base[static_cast<size_t>(t)] + off[static_cast<size_t>(t)];
                v[static_cast<size_t>(t)] =
                    u[static_cast<size_t>(t)] - Scalar(w[static_cast<size_t>(t)]);
            }
            DecayCheck chk = check_decay(sys, m, v, decay_window, tol);
            if (!chk.accepted) continue;
            if (!best_tail || chk.tail_sup < *best_tail) {
                best_tail = chk.tail_sup;
                best = Decomposition{m, std::move(w), std::move(v), std::move(chk.minima),
                                     cand.alpha};
            }
        }
        if (best) return std::move(*best);
    }
    throw NotFoundError("no shrinking integer split below level " + std::to_string(max_m) +
                        "; consistent with the distances not tending to 0");
}

Decomposition rebase_to_level1(const TowerSystem& sys, const Decomposition& d) {
    if (d.m == 1) return d;
    Mat<BigInt> p = sys.product_from_base(d.m);
    if (p.rows != p.cols)
        throw NotRebasedError("level product is not square; no level-1 form");
    Mat<BigRational> pinv;
    try {
        pinv = inverse(to_rational(p));
    } catch (const SingularMatrixError&) {
        throw NotRebasedError("level product is singular; no level-1 form");
    }
    int c1 = pinv.cols;
    ScalarVec x(static_cast<size_t>(c1), Scalar(0L));
    for (int r = 0; r < pinv.rows; ++r)
        for (int k = 0; k < c1; ++k)
            x[static_cast<size_t>(k)] += Scalar(pinv.at(k, r)) * d.v[static_cast<size_t>(r)];

    auto h1 = sys.heights(1);
    std::vector<BigInt> w(static_cast<size_t>(c1));
    for (int k = 0; k < c1; ++k) {
        Scalar residue = d.alpha * Scalar(h1[static_cast<size_t>(k)]) - x[static_cast<size_t>(k)];
        if (!residue.is_exact() || !residue.is_integer())
            throw NotRebasedError("no level-1 integer split exists for this candidate");
        w[static_cast<size_t>(k)] = numerator(residue.rational());
    }
    return Decomposition{1, std::move(w), std::move(x), d.decay, d.alpha};
}

namespace {

// pi as a dyadic enclosure: the IEEE double mantissa with a 2^-48 slack.
AdaptiveReal pi_enclosure(long prec) {
    return AdaptiveReal(Dyadic(BigInt(884279719003555LL), -48), Dyadic(1, -48), prec);
}

// sin via the alternating Taylor series; sound for |y| <= 2.
AdaptiveReal sin_enclosure(const AdaptiveReal& y) {
    AdaptiveReal y2 = y * y;
    AdaptiveReal term = y;
    AdaptiveReal sum = y;
    for (int k = 1; k <= 12; ++k) {
        term = term * y2;
        term = term.scaled(BigRational(-1, BigInt(2 * k) * BigInt(2 * k + 1)));
        sum = sum + term;
    }
    // |remainder| <= |y|^27 / 27! <= 2^27 / 27! < 2^-61
    return sum + AdaptiveReal(Dyadic(), Dyadic(1, -61), y.prec());
}

}  // namespace

std::pair<bool, Scalar> contgen_sufficient(const TowerSystem& sys, const EigenCandidate& cand,
                                           int N) {
    if (N < 2) throw BadRangeError("sum depth must be >= 2");
    const long prec = 96;
    AdaptiveReal sum = AdaptiveReal::exact_integer(0, prec);
    AdaptiveReal pi = pi_enclosure(prec);
    std::vector<double> partial;
    partial.reserve(static_cast<size_t>(N));

    AdaptiveReal alpha_enc;
    bool exact = cand.alpha.is_exact();
    if (!exact) alpha_enc = cand.alpha.adaptive();

    for (int m = 1; m <= N; ++m) {
        auto hm = sys.heights(m);
        auto hn = sys.heights(m + 1);
        BigInt sup_next = *std::max_element(hn.begin(), hn.end());
        BigInt inf_here = *std::min_element(hm.begin(), hm.end());
        BigRational ratio(sup_next, inf_here);

        Scalar fmax;
        if (exact) {
            bool first = true;
            for (const auto& h : hm) {
                Scalar f = (cand.alpha * Scalar(h)).frac_distance();
                if (first || f > fmax) fmax = f;
                first = false;
            }
        } else {
            fmax = adaptive_term(cand, alpha_enc, hm);
        }
        AdaptiveReal dist = sin_enclosure(pi * fmax.as_adaptive(prec)).scaled(BigRational(2));
        sum = sum + dist.scaled(ratio);
        partial.push_back(sum.to_double());
    }

    int window = std::max(1, N / 2);
    double tail = partial.back() - (N - window > 0 ? partial[static_cast<size_t>(N - window - 1)] : 0);
    return {tail < 1e-6, Scalar(sum)};
}

OscillationReport uniform_probe(const TowerSystem& sys, const EigenCandidate& cand,
                                const std::vector<PointCode>& codes, int N) {
    if (N < 2) throw BadRangeError("probe depth must be >= 2");
    OscillationReport rep;
    rep.N = N;
    rep.window = std::max(2, N / 2);
    for (const auto& code : codes) {
        if (code.depth() < N) throw LevelOutOfRangeError("code shallower than probe depth");
        auto rs = entrance_times(sys, code);
        std::vector<double> fracs;
        fracs.reserve(static_cast<size_t>(rep.window));
        for (int n = N - rep.window + 1; n <= N; ++n) {
            Scalar x = cand.alpha * Scalar(rs[static_cast<size_t>(n - 1)]);
            // circle coordinate: signed residue in [-1/2, 1/2]
            auto [k, tie] = x.nearest_integer();
            (void)tie;
            fracs.push_back((x - Scalar(k)).to_double());
        }
        double osc = 0;
        for (size_t i = 0; i < fracs.size(); ++i)
            for (size_t j = i + 1; j < fracs.size(); ++j) {
                double d = std::fabs(fracs[i] - fracs[j]);
                osc = std::max(osc, std::min(d, 1.0 - d));
            }
        rep.per_code.push_back(osc);
        rep.sup = std::max(rep.sup, osc);
    }
    return rep;
}

Scalar eigenfunction_g(const TowerSystem& sys, const Decomposition& level1,
                       const PointCode& code, int n) {
    if (level1.m != 1)
        throw NotRebasedError("eigenfunction approximant needs a level-1 decomposition");
    if (!sys.unit_base_heights())
        throw NotRebasedError("eigenfunction approximant needs unit level-1 heights");
    if (n < 1 || n > code.depth())
        throw LevelOutOfRangeError("approximant level must lie within the code depth");

    Scalar g(0L);
    ScalarVec pv = level1.v;  // P(1) = Id
    for (int j = 1; j <= n - 1; ++j) {
        if (j >= 2) pv = to_scalar(sys.matrix(j)) * pv;
        auto s = remaining_visits(sys, code, j + 1);
        for (size_t t = 0; t < s.size(); ++t)
            if (s[t]) g += Scalar(static_cast<long>(s[t])) * pv[t];
    }
    return g;
}

void attach_kappa(SpectralReport& report, const TowerSystem& sys, const Decomposition& d, int N) {
    ScalarVec cur = d.v;
    ScalarVec kappa;
    for (int n = d.m + 1; n <= N; ++n) {
        cur = to_scalar(sys.matrix(n)) * cur;
        kappa.push_back(sup_norm(cur));
    }
    report.kappa = std::move(kappa);
}

}  // namespace adic
