// Stream operators so failing assertions show values.
#ifndef BURNSIDE_TESTS_PRINTING_HPP
#define BURNSIDE_TESTS_PRINTING_HPP

#include <ostream>

#include <burnside/matrix.hpp>
#include <burnside/order.hpp>
#include <burnside/verdict.hpp>
#include <burnside/word.hpp>

namespace burnside {

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << pretty(x); }

inline std::ostream& operator<<(std::ostream& os, const FieldPolynomial& p) { return os << to_string(p, "x"); }

inline std::ostream& operator<<(std::ostream& os, const SquareMatrix& a) {
    os << '[';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.dim(); ++j) os << (j ? ", " : "") << pretty(a(i, j));
        os << ']';
    }
    return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const OrderResult& r) { return os << r.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << w.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Verdict& v) { return os << summary(v); }

}  // namespace burnside

#endif
