#pragma once

#include <vector>

#include "cremona/jsonio.hpp"
#include "cremona/mpoly.hpp"

namespace cremona {

/// The coordinate variable of the Riemann sphere maps: z.
const std::vector<std::string>& p1_var();

/// Rational self-map of the Riemann sphere: reduced fraction of univariate
/// polynomials, not both constant.
class P1Map {
public:
    static P1Map make(MPoly num, MPoly den);
    static P1Map from_poly(MPoly num);
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    /// max(deg num, deg den) of the reduced map, always >= 1.
    int degree() const;
    friend bool operator==(const P1Map& a, const P1Map& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    Json to_json() const;
    static P1Map from_json(const Json& j);

private:
    MPoly num_, den_;
};

/// outer after inner, reduced. Degrees multiply for reduced maps.
P1Map compose(const P1Map& outer, const P1Map& inner);

/// True iff the fiber over a consists of deg(m) distinct affine points:
/// num(m - a) has full degree and is squarefree.
bool is_unramified_over(const P1Map& m, const Rat& a);

/// Tower of sphere maps pi_0, pi_1, ... each of degree >= 2, with the
/// compositions phi_j = pi_0 o ... o pi_j cached at construction.
class P1Tower {
public:
    static P1Tower make(std::vector<P1Map> maps);
    const std::vector<P1Map>& maps() const { return maps_; }
    const std::vector<P1Map>& compositions() const { return phi_; }
    int size() const { return static_cast<int>(maps_.size()); }
    /// m_j = delta_0 ... delta_j.
    long fiber_count(int level) const;
    Json to_json() const;
    static P1Tower from_json(const Json& j);

private:
    std::vector<P1Map> maps_;
    std::vector<P1Map> phi_;
};

/// Smallest value in the fixed enumeration of Q unramified for every cached
/// composition. Throws BudgetError with the recorded obstructions when the
/// candidate budget runs out.
Rat find_common_unramified_value(const P1Tower& t, int budget);

struct FiberFactorizationReport {
    long m_j = 0;
    MPoly fiber_poly;
    bool simple_zeroes = false;
    bool matches_eq_fact = false;
};

/// Fiber data of phi_level over a: the fiber polynomial num(phi - a), its
/// degree count against m_j, squarefreeness, and coprimality with the
/// denominator.
FiberFactorizationReport fiber_factorization_check(const P1Tower& t, int level, const Rat& a);

struct ValuePullbackDecomposition {
    MPoly zero_poly;  // N with R - alpha = N/Q, gcd(N, Q) = 1
    MPoly q;
    bool numerator_constant = false;
};

ValuePullbackDecomposition value_pullback_decomposition(const P1Map& r, const Rat& alpha);

}  // namespace cremona
