#include "hermitian/field.hpp"

#include <stdexcept>
#include <string>

namespace hermitian {

namespace {

int mod_p(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int ipow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Remainder of `num` modulo the monic polynomial `den` over F_p. Both are
// little-endian coefficient vectors.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
    const int dd = static_cast<int>(den.size()) - 1;
    for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
        const int c = num[k];
        if (c == 0) continue;
        for (int t = 0; t <= dd; ++t) num[k - dd + t] = mod_p(num[k - dd + t] - static_cast<long long>(c) * den[t], p);
    }
    num.resize(static_cast<std::size_t>(dd));
    return num;
}

std::vector<int> digits_of(int index, int p, int len) {
    std::vector<int> d(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) {
        d[t] = index % p;
        index /= p;
    }
    return d;
}

int index_of(std::span<const int> digits, int p) {
    int idx = 0;
    for (int t = static_cast<int>(digits.size()) - 1; t >= 0; --t) idx = idx * p + digits[t];
    return idx;
}

}  // namespace

PrimePower factor_prime_power(int q) {
    if (q < 2) return {};
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int e = 0;
        int r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        // p is the smallest divisor, hence prime.
        return r == 1 ? PrimePower{p, e} : PrimePower{};
    }
    return {};
}

bool is_irreducible(std::span<const int> monic, int p) {
    const int d = static_cast<int>(monic.size()) - 1;
    for (int fd = 1; fd <= d / 2; ++fd) {
        const int count = ipow(p, fd);
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> factor = digits_of(idx, p, fd);
            factor.push_back(1);
            std::vector<int> r = poly_rem(std::vector<int>(monic.begin(), monic.end()), factor, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return d >= 1;
}

Field Field::make(int q) {
    const PrimePower pp = factor_prime_power(q);
    if (pp.p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (q > max_q) throw std::invalid_argument("q = " + std::to_string(q) + " exceeds the supported maximum");

    Field f;
    f.q_ = q;
    f.p_ = pp.p;
    f.e_ = pp.e;
    const int d = 2 * pp.e;
    f.size_ = ipow(pp.p, d);

    for (int idx = 0; idx < f.size_; ++idx) {
        std::vector<int> cand = digits_of(idx, pp.p, d);
        cand.push_back(1);
        if (is_irreducible(cand, pp.p)) {
            f.modulus_ = std::move(cand);
            break;
        }
    }
    if (f.modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

    const int n = f.size_;
    const int p = pp.p;
    f.add_.resize(static_cast<std::size_t>(n) * n);
    f.mul_.resize(static_cast<std::size_t>(n) * n);
    f.neg_.resize(n);
    f.inv_.assign(n, 0);
    f.frob_.resize(n);

    std::vector<std::vector<int>> digits(n);
    for (int i = 0; i < n; ++i) digits[i] = digits_of(i, p, d);

    for (int i = 0; i < n; ++i) {
        std::vector<int> ng(d);
        for (int t = 0; t < d; ++t) ng[t] = mod_p(-digits[i][t], p);
        f.neg_[i] = static_cast<std::uint8_t>(index_of(ng, p));
        for (int j = 0; j < n; ++j) {
            std::vector<int> s(d);
            for (int t = 0; t < d; ++t) s[t] = mod_p(digits[i][t] + digits[j][t], p);
            f.add_[i * n + j] = static_cast<std::uint8_t>(index_of(s, p));

            std::vector<int> prod(2 * d - 1, 0);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) prod[a + b] = mod_p(prod[a + b] + digits[i][a] * digits[j][b], p);
            f.mul_[i * n + j] = static_cast<std::uint8_t>(index_of(poly_rem(prod, f.modulus_, p), p));
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (f.mul_[i * n + j] == 1) {
                f.inv_[i] = static_cast<std::uint8_t>(j);
                break;
            }
    for (int i = 0; i < n; ++i) f.frob_[i] = f.pow(Element{static_cast<std::uint8_t>(i)}, q).index;

    // Smallest primitive element.
    for (int i = 1; i < n; ++i) {
        Element g{static_cast<std::uint8_t>(i)};
        Element acc = g;
        int order = 1;
        while (acc != one()) {
            acc = f.mul(acc, g);
            ++order;
        }
        if (order == n - 1) {
            f.generator_ = g;
            break;
        }
    }
    return f;
}

Element Field::from_index(int index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("field element index out of range");
    return Element{static_cast<std::uint8_t>(index)};
}

Element Field::inv(Element a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return Element{inv_[a.index]};
}

Element Field::pow(Element a, long long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Element r = one();
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::vector<int> Field::coefficients(Element a) const { return digits_of(a.index, p_, degree()); }

Element Field::from_coefficients(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != degree()) throw std::invalid_argument("coefficient vector has wrong length");
    std::vector<int> reduced(coeffs.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t) reduced[t] = mod_p(coeffs[t], p_);
    return Element{static_cast<std::uint8_t>(index_of(reduced, p_))};
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (int i = 0; i < size_; ++i) out.emplace_back(static_cast<std::uint8_t>(i));
    return out;
}

std::vector<Element> Field::subfield_elements() const {
    std::vector<Element> out;
    for (Element a : elements())
        if (in_subfield(a)) out.push_back(a);
    return out;
}

std::vector<Element> Field::additive_basis() const {
    std::vector<Element> out;
    int idx = 1;
    for (int t = 0; t < degree(); ++t, idx *= p_) out.emplace_back(static_cast<std::uint8_t>(idx));
    return out;
}

}  // namespace hermitian
