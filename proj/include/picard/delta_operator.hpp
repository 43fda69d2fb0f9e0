#ifndef PICARD_DELTA_OPERATOR_HPP
#define PICARD_DELTA_OPERATOR_HPP

#include <picard/log_series.hpp>
#include <picard/rational_function.hpp>

#include <vector>

namespace picard {

// sum_k c_k(z) delta^k  with  delta = z d/dz  and polynomial coefficients
// standing to the left of the derivation.
class DeltaOperator {
public:
    explicit DeltaOperator(std::vector<Polynomial> coeffs);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const DeltaOperator&, const DeltaOperator&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

enum class OperatorKind {
    mirror,  ///< delta^(s-1) - s z (s delta + 1)...(s delta + s - 1)
    eq1,     ///< mirror(3)
    eq4,     ///< mirror(4)
    eq20,    ///< mirror(5)
    eighth,  ///< delta^2 - 4z(8 delta + 1)(8 delta + 3)
};

/// `s` is read only for OperatorKind::mirror and must be >= 3.
DeltaOperator build_operator(OperatorKind kind, int s = 0);

LogSeries apply_operator(const DeltaOperator& op, const LogSeries& f);

// Monic operator  d^m/dz^m + a_{m-1} d^{m-1}/dz^{m-1} + ... + a_0.
struct DzOperator {
    std::vector<RationalFunction> coeffs;  ///< a_0 .. a_m with a_m = 1

    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// Exact conversion through z^i d^i/dz^i expressed in delta via Stirling numbers.
DzOperator to_dz_form(const DeltaOperator& op);

/// Potential Q = r - p^2/4 - p'/2 of  y'' + p y' + r y = 0; the ratio t of two
/// solutions then satisfies {t, z} = 2Q.
RationalFunction second_order_normal_form(const DeltaOperator& op);

struct FourthOrderNormalForm {
    RationalFunction q2;  ///< coefficient of y''
    RationalFunction q1;  ///< coefficient of y'  (equals q2' for the mirror operators)
    RationalFunction q0;  ///< coefficient of y
    RationalFunction gauge_log_derivative;  ///< w'/w = -a_3/4 of the substitution y = w v
};

/// Removes the third-derivative term by y = w v; returns the equation for v.
FourthOrderNormalForm fourth_order_normal_form(const DeltaOperator& op);

} // namespace picard

#endif // PICARD_DELTA_OPERATOR_HPP
