#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weierdiv/errors.hpp"

namespace weierdiv {

/// Weight sequence M_0..M_{j_max} for a Denjoy-Carleman class, normalized to
/// M_0 = 1 and nondecreasing. Values are cached in log space (long double)
/// so factorial-sized entries never overflow; the linear value is exposed
/// where it is representable.
class DCSequence {
  public:
    enum class Kind { gevrey, gevrey_log, explicit_values };

    /// M_j = (j!)^alpha
    static DCSequence gevrey(double alpha, int j_max = 48);
    /// M_j = (j!)^alpha * (ln(j+e))^(beta*j)
    static DCSequence gevrey_log(double alpha, double beta, int j_max = 48);
    /// Explicit positive values; validated: M_0 = 1, nondecreasing.
    static DCSequence from_values(const std::vector<double>& values);
    /// Internal constructor from cached logs (used by power_sequence).
    static DCSequence from_log_values(std::vector<long double> log_values, Kind tag);

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    int j_max() const { return static_cast<int>(log_values_.size()) - 1; }

    /// M_j as a double; +inf when it exceeds double range. Throws errc::range
    /// for j outside the cache.
    double value(int j) const;
    long double log_value(int j) const;

  private:
    Kind kind_ = Kind::explicit_values;
    double alpha_ = 0.0, beta_ = 0.0;
    std::vector<long double> log_values_;
};

/// Finite-range certificate for the sequence axioms. All constants are
/// suprema over the cached indices, i.e. lower bounds on the true constants.
struct RegularityReport {
    bool log_convex = false;
    double moderate_growth_A = 0.0;  // smallest A with M_{j+k} <= A^{j+k} M_j M_k
    double snqa_A = 0.0;             // smallest A with sum_{j>=k} M_j/((j+1)M_{j+1}) <= A M_k/M_{k+1}
    double snqa_tail_bound = 0.0;    // magnitude of the last summed term (truncation bound)
    bool snqa_truncated = true;
    double derivation_A = 0.0;       // smallest A with M_{j+1} <= A^{j+1} M_j

    bool strongly_regular() const {
        return log_convex && moderate_growth_A >= 1.0 && std::isfinite(moderate_growth_A) &&
               std::isfinite(snqa_A);
    }
};

RegularityReport check_regularity(const DCSequence& seq);

struct HEval {
    double value = 0.0;  // h_M(t) = inf_{j <= j_max} t^j M_j, in [0, 1]
    int argmin_j = 0;
    bool saturated = false;  // minimizing index hit j_max
};

HEval h_eval(const DCSequence& seq, double t);
inline double h_value(const DCSequence& seq, double t) { return h_eval(seq, t).value; }

struct LegendreGrid {
    double t_min_factor = 1e-4;  // grid spans [factor/M_1, 1/M_1], log-spaced
    int n = 10000;
};

struct LegendreResult {
    double value = 0.0;  // sup over the grid of t^{-j} h_M(t)
    double t_star = 0.0;
    bool endpoint = false;  // supremum attained at a grid endpoint (grid too small)
};

LegendreResult legendre_recover(const DCSequence& seq, int j, const LegendreGrid& grid = {});

struct PowerSequenceResult {
    DCSequence seq;       // values (M_j)^s
    double a1 = 0.0;      // empirical constants with A1^{j+1} (M_j)^s <= M_{floor(s j)} <= A2^{j+1} (M_j)^s
    double a2 = 0.0;
    bool truncated = false;  // sandwich checked only for j <= j_max / s
};

PowerSequenceResult power_sequence(const DCSequence& seq, double s);

/// Empirical kappa >= 1 with h_M(t) <= h_M(kappa t)^s on a log grid of t.
/// The existence of such a constant follows from moderate growth; there is
/// no closed formula, so this is a grid search.
double estimate_kappa(const DCSequence& seq, double s, int grid_n = 400);

}  // namespace weierdiv
