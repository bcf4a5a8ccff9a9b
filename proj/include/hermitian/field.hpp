#ifndef HERMITIAN_FIELD_HPP
#define HERMITIAN_FIELD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hermitian {

/// An element of F_{q^2}, stored as its canonical index: the coefficient
/// vector in the polynomial basis read as a little-endian radix-p integer.
struct Element {
    std::uint8_t index = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint8_t i) : index(i) {}

    constexpr bool is_zero() const { return index == 0; }
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Exact arithmetic in F_{q^2} = F_p[t]/(m(t)), deg m = 2e, q = p^e.
///
/// The modulus is the smallest monic irreducible polynomial of degree 2e over
/// F_p when candidates are ordered by the radix-p value of their non-leading
/// coefficients (c_0 least significant). Arithmetic tables are derived from
/// that polynomial representation at construction; the context is immutable
/// afterwards and may be shared freely between threads.
class Field {
public:
    /// Largest supported q; element indices must fit in one byte.
    static constexpr int max_q = 16;

    /// Builds F_{q^2}. Throws std::invalid_argument when q is not a prime
    /// power or exceeds max_q.
    static Field make(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int exponent() const { return e_; }
    /// Number of elements, q^2.
    int size() const { return size_; }
    /// Degree of the defining polynomial over F_p (2e).
    int degree() const { return 2 * e_; }
    /// Monic modulus, coefficients c_0..c_{2e} over F_p.
    const std::vector<int>& modulus() const { return modulus_; }

    static constexpr Element zero() { return Element{0}; }
    static constexpr Element one() { return Element{1}; }
    Element from_index(int index) const;
    /// Generator of the multiplicative group (smallest index of order q^2-1).
    Element generator() const { return generator_; }

    Element add(Element a, Element b) const { return Element{add_[a.index * size_ + b.index]}; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const { return Element{neg_[a.index]}; }
    Element mul(Element a, Element b) const { return Element{mul_[a.index * size_ + b.index]}; }
    /// Throws std::domain_error for zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    /// a^k; negative k requires a nonzero.
    Element pow(Element a, long long k) const;

    /// a -> a^q, the generator of Gal(F_{q^2}/F_q).
    Element frobenius_q(Element a) const { return Element{frob_[a.index]}; }
    /// a + a^q.
    Element trace_to_Fq(Element a) const { return add(a, frobenius_q(a)); }
    /// a^{q+1}.
    Element norm_to_Fq(Element a) const { return mul(a, frobenius_q(a)); }
    bool in_subfield(Element a) const { return frobenius_q(a) == a; }

    /// Coefficients over F_p in the polynomial basis (length 2e).
    std::vector<int> coefficients(Element a) const;
    Element from_coefficients(std::span<const int> coeffs) const;

    /// All q^2 elements in index order.
    std::vector<Element> elements() const;
    /// The q elements of the subfield F_q, in index order.
    std::vector<Element> subfield_elements() const;
    /// F_p-basis of F_{q^2}: t^0, t^1, ..., t^{2e-1}.
    std::vector<Element> additive_basis() const;

    // Raw tables for inner loops; row-major size() x size().
    const std::uint8_t* add_table() const { return add_.data(); }
    const std::uint8_t* mul_table() const { return mul_.data(); }
    const std::uint8_t* neg_table() const { return neg_.data(); }
    const std::uint8_t* inv_table() const { return inv_.data(); }

    friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }

private:
    Field() = default;

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    int size_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
    std::vector<std::uint8_t> frob_;
    Element generator_;
};

/// Factors q = p^e. Returns {0, 0} when q is not a prime power (or q < 2).
struct PrimePower {
    int p = 0;
    int e = 0;
};
PrimePower factor_prime_power(int q);

/// True when the monic polynomial with coefficients c_0..c_d (c_d = 1) has
/// no monic factor of degree 1..d/2 over F_p.
bool is_irreducible(std::span<const int> monic, int p);

}  // namespace hermitian

#endif
