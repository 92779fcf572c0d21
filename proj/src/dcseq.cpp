#include "weierdiv/dcseq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weierdiv {

namespace {

constexpr long double kEulerE = 2.718281828459045235L;

// Comparison slack for log-domain axiom checks; lgammal is accurate to a few
// ulps, so this is far above the noise floor and far below any real violation.
constexpr long double kLogTol = 1e-12L;

}  // namespace

DCSequence DCSequence::gevrey(double alpha, int j_max) {
    if (alpha <= 0.0) throw_error(errc::invalid_sequence, "gevrey: alpha must be positive");
    if (j_max < 8) throw_error(errc::invalid_sequence, "gevrey: j_max must be >= 8");
    DCSequence s;
    s.kind_ = Kind::gevrey;
    s.alpha_ = alpha;
    s.log_values_.resize(j_max + 1);
    for (int j = 0; j <= j_max; ++j)
        s.log_values_[j] = static_cast<long double>(alpha) * lgammal(static_cast<long double>(j) + 1.0L);
    return s;
}

DCSequence DCSequence::gevrey_log(double alpha, double beta, int j_max) {
    if (alpha <= 0.0) throw_error(errc::invalid_sequence, "gevrey_log: alpha must be positive");
    if (j_max < 8) throw_error(errc::invalid_sequence, "gevrey_log: j_max must be >= 8");
    DCSequence s;
    s.kind_ = Kind::gevrey_log;
    s.alpha_ = alpha;
    s.beta_ = beta;
    s.log_values_.resize(j_max + 1);
    for (int j = 0; j <= j_max; ++j) {
        long double lj = static_cast<long double>(j);
        s.log_values_[j] = static_cast<long double>(alpha) * lgammal(lj + 1.0L) +
                           static_cast<long double>(beta) * lj * logl(logl(lj + kEulerE));
    }
    return s;
}

DCSequence DCSequence::from_values(const std::vector<double>& values) {
    if (values.size() < 9)
        throw_error(errc::invalid_sequence, "explicit sequence needs at least 9 values (j_max >= 8)");
    if (values[0] != 1.0) throw_error(errc::invalid_sequence, "explicit sequence must have M_0 = 1");
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (!(values[j] > 0.0))
            throw_error(errc::invalid_sequence, "explicit sequence value M_" + std::to_string(j) + " is not positive");
        if (j > 0 && values[j] < values[j - 1])
            throw_error(errc::invalid_sequence, "explicit sequence decreases at M_" + std::to_string(j));
    }
    DCSequence s;
    s.kind_ = Kind::explicit_values;
    s.log_values_.resize(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) s.log_values_[j] = logl(static_cast<long double>(values[j]));
    return s;
}

DCSequence DCSequence::from_log_values(std::vector<long double> log_values, Kind tag) {
    if (log_values.size() < 2) throw_error(errc::invalid_sequence, "log value list too short");
    DCSequence s;
    s.kind_ = tag;
    s.log_values_ = std::move(log_values);
    return s;
}

double DCSequence::value(int j) const {
    return static_cast<double>(expl(log_value(j)));
}

long double DCSequence::log_value(int j) const {
    if (j < 0 || j > j_max())
        throw_error(errc::range, "sequence index " + std::to_string(j) + " outside cached range 0.." +
                                     std::to_string(j_max()));
    return log_values_[j];
}

RegularityReport check_regularity(const DCSequence& seq) {
    const int jm = seq.j_max();
    if (jm < 8) throw_error(errc::invalid_sequence, "check_regularity needs j_max >= 8");
    RegularityReport rep;

    // Log-convexity: the ratio M_{j+1}/M_j must be nondecreasing.
    rep.log_convex = true;
    for (int j = 0; j + 2 <= jm; ++j) {
        long double r0 = seq.log_value(j + 1) - seq.log_value(j);
        long double r1 = seq.log_value(j + 2) - seq.log_value(j + 1);
        if (r1 < r0 - kLogTol) {
            rep.log_convex = false;
            break;
        }
    }

    // Moderate growth: A = sup over j+k <= j_max of (M_{j+k} / (M_j M_k))^{1/(j+k)}.
    long double log_a = 0.0L;
    for (int j = 1; j <= jm; ++j) {
        for (int k = j; j + k <= jm; ++k) {
            long double excess = seq.log_value(j + k) - seq.log_value(j) - seq.log_value(k);
            log_a = std::max(log_a, excess / static_cast<long double>(j + k));
        }
    }
    rep.moderate_growth_A = static_cast<double>(expl(log_a));

    // Strong non-quasianalyticity with the tail truncated at j_max.
    long double worst = 0.0L, last_term = 0.0L;
    {
        // Tail sums computed backwards: S_k = sum_{j=k}^{j_max-1} M_j / ((j+1) M_{j+1}).
        std::vector<long double> tail(jm + 1, 0.0L);
        for (int j = jm - 1; j >= 0; --j) {
            long double term = expl(seq.log_value(j) - seq.log_value(j + 1)) / static_cast<long double>(j + 1);
            tail[j] = tail[j + 1] + term;
            if (j == jm - 1) last_term = term;
        }
        for (int k = 0; k + 1 <= jm; ++k) {
            long double bound = expl(seq.log_value(k) - seq.log_value(k + 1));
            worst = std::max(worst, tail[k] / bound);
        }
    }
    rep.snqa_A = static_cast<double>(worst);
    rep.snqa_tail_bound = static_cast<double>(last_term);
    rep.snqa_truncated = true;

    // Derivation constant: smallest A with M_{j+1} <= A^{j+1} M_j.
    long double log_d = 0.0L;
    for (int j = 0; j + 1 <= jm; ++j)
        log_d = std::max(log_d, (seq.log_value(j + 1) - seq.log_value(j)) / static_cast<long double>(j + 1));
    rep.derivation_A = static_cast<double>(expl(log_d));

    return rep;
}

HEval h_eval(const DCSequence& seq, double t) {
    if (t < 0.0) throw_error(errc::range, "h_M is defined for t >= 0");
    HEval out;
    if (t == 0.0) return out;  // h(0) = 0 by definition
    const long double lt = logl(static_cast<long double>(t));
    long double best = 0.0L;  // j = 0 term: t^0 M_0 = 1
    int best_j = 0;
    for (int j = 1; j <= seq.j_max(); ++j) {
        long double v = static_cast<long double>(j) * lt + seq.log_value(j);
        if (v < best) {
            best = v;
            best_j = j;
        }
    }
    out.value = static_cast<double>(expl(best));
    out.argmin_j = best_j;
    out.saturated = (best_j == seq.j_max());
    return out;
}

LegendreResult legendre_recover(const DCSequence& seq, int j, const LegendreGrid& grid) {
    if (j < 0 || j > seq.j_max()) throw_error(errc::range, "legendre_recover: j outside cached range");
    if (grid.n < 2) throw_error(errc::range, "legendre_recover: grid too small");
    const double t_max = static_cast<double>(expl(-seq.log_value(1)));  // 1 / M_1
    const double t_min = grid.t_min_factor * t_max;
    LegendreResult res;
    long double best = -std::numeric_limits<long double>::infinity();
    int best_i = 0;
    const double lr = std::log(t_max / t_min);
    for (int i = 0; i < grid.n; ++i) {
        double t = t_min * std::exp(lr * static_cast<double>(i) / (grid.n - 1));
        HEval h = h_eval(seq, t);
        long double v = -static_cast<long double>(j) * logl(static_cast<long double>(t)) +
                        logl(static_cast<long double>(h.value));
        if (v > best) {
            best = v;
            best_i = i;
            res.t_star = t;
        }
    }
    res.value = static_cast<double>(expl(best));
    res.endpoint = (j > 0 && (best_i == 0 || best_i == grid.n - 1));
    return res;
}

PowerSequenceResult power_sequence(const DCSequence& seq, double s) {
    if (s < 1.0) throw_error(errc::range, "power_sequence: s must be >= 1");
    const int jm = seq.j_max();
    std::vector<long double> logs(jm + 1);
    for (int j = 0; j <= jm; ++j) logs[j] = static_cast<long double>(s) * seq.log_value(j);

    PowerSequenceResult out{DCSequence::from_log_values(std::move(logs), DCSequence::Kind::explicit_values),
                            1.0, 1.0, false};
    long double lo = 0.0L, hi = 0.0L;
    for (int j = 0; j <= jm; ++j) {
        int sj = static_cast<int>(std::floor(s * j));
        if (sj > jm) {
            out.truncated = true;
            break;
        }
        long double gap = (seq.log_value(sj) - static_cast<long double>(s) * seq.log_value(j)) /
                          static_cast<long double>(j + 1);
        lo = std::min(lo, gap);
        hi = std::max(hi, gap);
    }
    out.a1 = static_cast<double>(expl(lo));
    out.a2 = static_cast<double>(expl(hi));
    return out;
}

double estimate_kappa(const DCSequence& seq, double s, int grid_n) {
    if (s < 1.0) throw_error(errc::range, "estimate_kappa: s must be >= 1");
    const double t_max = static_cast<double>(expl(-seq.log_value(1)));
    const double t_min = 1e-6 * t_max;
    const double lr = std::log(t_max / t_min);
    for (double kappa = 1.0; kappa <= 1e6; kappa *= 1.25) {
        bool ok = true;
        for (int i = 0; i < grid_n; ++i) {
            double t = t_min * std::exp(lr * static_cast<double>(i) / (grid_n - 1));
            double lhs = std::log(h_value(seq, t));
            double rhs = s * std::log(h_value(seq, kappa * t));
            if (lhs > rhs + 1e-12) {
                ok = false;
                break;
            }
        }
        if (ok) return kappa;
    }
    throw_error(errc::undefined_fit, "estimate_kappa: no admissible kappa below 1e6");
}

}  // namespace weierdiv
