// Sign of a totally real cyclotomic number under zeta_m -> exp(2 pi i / m).
#ifndef BURNSIDE_REALSIGN_HPP
#define BURNSIDE_REALSIGN_HPP

#include <mpfr.h>

#include <stdexcept>

#include <burnside/cyclotomic.hpp>

namespace burnside {

namespace detail {

class Mpfr {
   public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

   private:
    mpfr_t v_;
};

}  // namespace detail

/// Returns -1, 0 or 1. Zero is decided exactly; otherwise the value
/// sum c_k cos(2 pi k / m) is evaluated with a rigorous error bound and the
/// precision is doubled until the bound excludes zero.
inline int real_sign(const FieldElement& x) {
    if (x.is_zero()) return 0;
    if (x.conj() != x) throw std::invalid_argument("real_sign: element is not fixed by complex conjugation");
    if (x.is_rational()) return sgn(x.rational_part());

    const auto& c = x.coeffs();
    const unsigned long m = x.order();
    Rational abs_sum = 0;
    for (const auto& ck : c) abs_sum += abs(ck);

    for (mpfr_prec_t prec = 64;; prec *= 2) {
        detail::Mpfr sum(prec), term(prec), angle(prec), coef(prec), bound(prec);
        mpfr_set_zero(sum.get(), 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            mpfr_const_pi(angle.get(), MPFR_RNDN);
            mpfr_mul_ui(angle.get(), angle.get(), 2 * k, MPFR_RNDN);
            mpfr_div_ui(angle.get(), angle.get(), m, MPFR_RNDN);
            mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
            mpfr_set_q(coef.get(), c[k].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term.get(), term.get(), coef.get(), MPFR_RNDN);
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        }
        // error <= (sum |c_k|) * (2^12 + phi) * 2^-prec
        mpfr_set_q(bound.get(), abs_sum.get_mpq_t(), MPFR_RNDU);
        mpfr_mul_ui(bound.get(), bound.get(), 4096 + c.size(), MPFR_RNDU);
        mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(prec), MPFR_RNDU);
        mpfr_abs(term.get(), sum.get(), MPFR_RNDN);
        if (mpfr_greater_p(term.get(), bound.get())) return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
    }
}

}  // namespace burnside

#endif
