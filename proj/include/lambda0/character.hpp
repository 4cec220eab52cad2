#pragma once

#include "lambda0/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lambda0 {

/// chi(x_n) in Q[t,u,v]: chi(x0) = 0, chi(x1) = 2t, chi(x2) = t^2 and
///   chi(x_{n+3}) = t chi(x_{n+2}) + u (2 chi(x_{n+1}) - t^{n+1})
///                + v (2 chi(x_n) - t^n - 2 (2t)^n).
/// Memoized; homogeneous of degree n for n >= 1.
TuvPoly chi_x(int n);

/// The algebra map induced by x_n -> chi_x(n), t -> t.
TuvPoly chi_poly(const LambdaPoly& p);

/// A specialization of the universal character: images of t, u, v.
struct CharacterSpec {
    std::string name;
    Poly t_image;
    Poly u_image;
    Poly v_image;

    static CharacterSpec universal();
    /// D(2,1,alpha): t = 0, u = -2 s2, v = 4 s3.
    static CharacterSpec d21a();
    /// osp at t = 1: u = -a + 6a^2, v = -4a^2 + 8a^3.
    static CharacterSpec osp();
    /// Looks a spec up by name ("universal", "D21a", "osp").
    static CharacterSpec by_name(const std::string& name);
};

Poly specialize_character(const TuvPoly& p, const CharacterSpec& spec);

/// Leading term of a nonzero t,u,v polynomial: the lexicographic maximum of
/// (-t exponent, -v exponent), ties broken by larger u exponent.
std::pair<Monomial, Rational> leading_term_tuv(const TuvPoly& p);

struct SubringParts {
    Poly a;  // in Q[t]
    Poly b;  // in Q[t,u,v]
};

/// Writes p = a + (t^3 - t u + v) b with a in Q[t], or returns nullopt when
/// the remainder a = p(t, u, tu - t^3) still depends on u.
std::optional<SubringParts> subring_decompose(const TuvPoly& p);

/// Q[t,u,v] element with possibly negative t exponents.
struct TuvLaurent {
    Poly value;

    friend bool operator==(const TuvLaurent&, const TuvLaurent&) = default;
    friend TuvLaurent operator+(const TuvLaurent& a, const TuvLaurent& b) { return {a.value + b.value}; }
    friend TuvLaurent operator-(const TuvLaurent& a, const TuvLaurent& b) { return {a.value - b.value}; }
    friend TuvLaurent operator*(const Poly& c, const TuvLaurent& a) { return {c * a.value}; }

    bool is_polynomial() const { return !value.has_negative_exponent(); }
    /// The value, throwing when a negative t exponent survived.
    const Poly& polynomial() const;
};

/// chi applied to q_poly(i, j, k) for i >= -1, with two boundary
/// conventions: qhat(-2, 2, k) = 2 (2t)^(k-2) and qhat(-1, 1, k) = chi(x_k)/t
/// (the latter makes qhat(0, 0, k) = t qhat(-1, 1, k)).
TuvLaurent qhat(int i, int j, int k);

enum class RekKind { Rek1, Rek2, Rek3, Rek4 };

/// Checks one instance of the four qhat recursions:
///   rek1 (i >= 1, j >= 0)
///     q_ij = t q_{i-1,j+1} - 1/2 q_{i-1,j+2} + 1/2 t^j q_{i-1,2}
///          + 1/2 (x_{j+2} - t^{j+2}) q_{i-2,2}
///   rek2 (i >= 0, j >= 3)
///     q_ij = t q_{i,j-1} + 2u q_{i,j-2} + 2v q_{i,j-3}
///          - (u t^{j-2} + v t^{j-3}) q_{i-1,2} - v (2t)^{j-1} q_{i-2,2}
///   rek3 (i >= 1)
///     q_i1 = t q_{i-1,2} - u q_{i-1,1} + (2tu - v) q_{i-2,2}
///          - t v q_{i-2,1} + 2 t^2 v q_{i-3,2}
///   rek4 (i >= 1)
///     q_i2 = (t^2 - u) q_{i-1,2} + (tu - v) q_{i-1,1} + 2t (tu - v) q_{i-2,2}
///          + t^2 v q_{i-2,1} + 2 t^3 v q_{i-3,2}
/// For rek3/rek4 `j` is ignored. Returns whether the identity holds exactly.
bool verify_rek(RekKind kind, int i, int j, int k);

/// Difference of the two sides of verify_rek's identity.
TuvLaurent rek_residual(RekKind kind, int i, int j, int k);

/// qhat(i,1,2) == qhat(i,2,1) and qhat(i-1,2,2) == qhat(i,1,1).
bool verify_qhat_identities(int i);

}  // namespace lambda0
