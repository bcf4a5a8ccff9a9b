#include "hermitian/witness.hpp"

#include <algorithm>
#include <set>

#include "hermitian/agcode.hpp"
#include "hermitian/distance.hpp"
#include "hermitian/linalg.hpp"
#include "hermitian/multiplicity.hpp"

namespace hermitian {

Point dihedral_sigma(const Field& field, const Point& p) {
    if (p.infinity || p.y.is_zero()) throw std::invalid_argument("sigma needs an affine point with y != 0");
    const Element yi = field.inv(p.y);
    return Point::affine(field.mul(p.x, yi), yi);
}

Point dihedral_rho(const Field& field, Element a, const Point& p) {
    if (p.infinity) throw std::invalid_argument("rho needs an affine point");
    if (a.is_zero() || !field.in_subfield(a)) throw std::invalid_argument("rho needs a in F_q^*");
    return Point::affine(field.mul(a, p.x), field.mul(field.mul(a, a), p.y));
}

namespace {

bool eligible(const Field& f, const Point& p) { return !p.infinity && !p.x.is_zero() && !f.in_subfield(p.y); }

std::vector<Point> zeros_where(const Curve& curve, auto pred) {
    std::vector<Point> out;
    for (const Point& p : curve.points())
        if (!p.infinity && pred(p)) out.push_back(p);
    return out;
}

}  // namespace

std::vector<Point> dihedral_orbit(const Curve& curve, const Point& p) {
    const Field& f = curve.field();
    if (!eligible(f, p)) throw std::invalid_argument("orbit needs x != 0 and y outside F_q");
    std::set<Point> seen{p};
    std::vector<Point> frontier{p};
    std::vector<Element> units;
    for (Element a : f.subfield_elements())
        if (!a.is_zero()) units.push_back(a);
    while (!frontier.empty()) {
        const Point cur = frontier.back();
        frontier.pop_back();
        std::vector<Point> next{dihedral_sigma(f, cur)};
        for (Element a : units) next.push_back(dihedral_rho(f, a, cur));
        for (const Point& nx : next)
            if (seen.insert(nx).second) frontier.push_back(nx);
    }
    return {seen.begin(), seen.end()};
}

int conic_eligible_point_count(const Curve& curve) {
    const Field& f = curve.field();
    return static_cast<int>(
        std::count_if(curve.points().begin(), curve.points().end(), [&](const Point& p) { return eligible(f, p); }));
}

std::vector<ConicFunction> enumerate_conics(const Curve& curve) {
    const Field& f = curve.field();
    const int q = curve.q();
    std::vector<ConicFunction> out;
    for (Element alpha : f.elements()) {
        if (alpha.is_zero()) continue;
        // x = 0 forces y = 0, so the zeros other than P0 all have x != 0 and
        // are simple exactly when there are 2(q-1) of them.
        auto zs = zeros_where(curve, [&](const Point& p) {
            return !p.x.is_zero() && f.mul(p.x, p.x) == f.mul(alpha, p.y);
        });
        if (static_cast<int>(zs.size()) == 2 * (q - 1)) out.push_back({alpha, std::move(zs)});
    }
    return out;
}

std::vector<LineFunction> enumerate_lines(const Curve& curve, LineKind kind) {
    const Field& f = curve.field();
    const int q = curve.q();
    std::vector<LineFunction> out;
    for (Element c : f.elements()) {
        std::vector<Point> zs;
        switch (kind) {
            case LineKind::ThroughP0:
                if (c.is_zero()) continue;
                zs = zeros_where(curve, [&](const Point& p) { return !p.is_origin() && p.y == f.mul(c, p.x); });
                if (static_cast<int>(zs.size()) != q) continue;
                break;
            case LineKind::ThroughPinf:
                zs = zeros_where(curve, [&](const Point& p) { return p.x == c; });
                if (static_cast<int>(zs.size()) != q) continue;
                break;
            case LineKind::Horizontal:
                zs = zeros_where(curve, [&](const Point& p) { return p.y == c; });
                if (static_cast<int>(zs.size()) != q + 1) continue;
                break;
        }
        out.push_back({kind, c, std::move(zs)});
    }
    return out;
}

namespace {

struct Family {
    std::string name;
    std::vector<std::vector<int>> candidates;  // D-indices of each candidate's zeros
    std::vector<std::string> labels;
};

std::vector<int> to_indices(const Curve& curve, const std::vector<Point>& pts) {
    std::vector<int> out;
    for (const Point& p : pts) {
        const int i = curve.evaluation_index(p);
        if (i >= 0) out.push_back(i);
    }
    return out;
}

// Chooses a candidate for every slot so that all chosen zero sets are
// pairwise disjoint. Slots of one family take strictly increasing candidates.
class DisjointChooser {
public:
    DisjointChooser(const std::vector<Family>& families, std::vector<int> slot_families, int n)
        : families_(families), slots_(std::move(slot_families)), used_(n, 0), choice_(slots_.size(), -1) {}

    bool solve() { return place(0); }
    const std::vector<int>& choice() const { return choice_; }

private:
    bool place(std::size_t k) {
        if (k == slots_.size()) return true;
        if (++nodes_ > budget_) return false;
        const Family& fam = families_[slots_[k]];
        int start = 0;
        if (k > 0 && slots_[k - 1] == slots_[k]) start = choice_[k - 1] + 1;
        for (int c = start; c < static_cast<int>(fam.candidates.size()); ++c) {
            const auto& zs = fam.candidates[c];
            if (std::any_of(zs.begin(), zs.end(), [&](int i) { return used_[i] != 0; })) continue;
            for (int i : zs) used_[i] = 1;
            choice_[k] = c;
            if (place(k + 1)) return true;
            for (int i : zs) used_[i] = 0;
        }
        choice_[k] = -1;
        return false;
    }

    const std::vector<Family>& families_;
    std::vector<int> slots_;
    std::vector<char> used_;
    std::vector<int> choice_;
    long long nodes_ = 0;
    long long budget_ = 2'000'000;
};

std::string element_label(Element e) { return std::to_string(e.index); }

WitnessSupport assemble(const Curve& curve, int d, const std::vector<Family>& families,
                        const std::vector<int>& slots) {
    DisjointChooser chooser(families, slots, curve.length());
    if (!chooser.solve()) throw WitnessError("no parameter choice gives pairwise distinct zeros");
    WitnessSupport w;
    w.d = d;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        const Family& fam = families[slots[k]];
        const int c = chooser.choice()[k];
        w.support.insert(w.support.end(), fam.candidates[c].begin(), fam.candidates[c].end());
        w.recipe += (w.recipe.empty() ? "" : " * ") + fam.labels[c];
    }
    std::sort(w.support.begin(), w.support.end());
    if (static_cast<int>(w.support.size()) != d) throw WitnessError("recipe support size differs from the distance");
    return w;
}

Family conic_family(const Curve& curve) {
    Family fam{"conic", {}, {}};
    for (const auto& c : enumerate_conics(curve)) {
        fam.candidates.push_back(to_indices(curve, c.zero_points));
        fam.labels.push_back("(x^2-[" + element_label(c.alpha) + "]y)");
    }
    return fam;
}

Family line_family(const Curve& curve, LineKind kind, bool skip_zero_parameter) {
    Family fam{"line", {}, {}};
    for (const auto& l : enumerate_lines(curve, kind)) {
        if (skip_zero_parameter && l.parameter.is_zero()) continue;
        fam.candidates.push_back(to_indices(curve, l.zero_points));
        const std::string p = "[" + element_label(l.parameter) + "]";
        switch (kind) {
            case LineKind::ThroughP0: fam.labels.push_back("(y-" + p + "x)"); break;
            case LineKind::ThroughPinf: fam.labels.push_back("(x-" + p + ")"); break;
            case LineKind::Horizontal: fam.labels.push_back("(y-" + p + ")"); break;
        }
    }
    return fam;
}

// The q-1 zeros (0, c), c != 0, of x.
std::vector<Point> x_axis_zeros(const Curve& curve) {
    std::vector<Point> out;
    for (const Point& p : curve.evaluation_points())
        if (p.x.is_zero()) out.push_back(p);
    return out;
}

WitnessSupport high_witness(const Curve& curve, int A, int B, int d) {
    const int q = curve.q();
    const ShiftedParams p = shifted_params(q, A - curve.canonical_degree(), B);
    const int s = p.s();
    const int a1 = std::min(p.a1, s);
    const int b1 = std::min(p.b1, s);

    std::vector<Family> families;
    families.push_back(conic_family(curve));                                   // 0
    families.push_back({"x", {to_indices(curve, x_axis_zeros(curve))}, {"x"}});  // 1
    families.push_back(line_family(curve, LineKind::ThroughP0, true));         // 2
    families.push_back(line_family(curve, LineKind::ThroughPinf, true));       // 3
    families.push_back(line_family(curve, LineKind::Horizontal, false));       // 4

    // Per factor, (slack at P_inf below q+1 per unit, zero order at P0):
    // conic (2, 2) over two units, x (1, 1), y - bx (0, 1), x - c (1, 0),
    // y - e (0, 0). The slacks must sum to a1 and the P0 zeros to b1. Mixes
    // are tried with the most conics first.
    const int low = std::min(a1, b1);
    std::string last_error = "no factor mix fits the parameters";
    for (int conics = low / 2; conics >= 0; --conics) {
        for (int use_x = (low - 2 * conics) >= 1 ? 1 : 0; use_x >= 0; --use_x) {
            const int verticals = a1 - 2 * conics - use_x;
            const int through_p0 = b1 - 2 * conics - use_x;
            const int horizontals = s - 2 * conics - use_x - verticals - through_p0;
            if (verticals < 0 || through_p0 < 0 || horizontals < 0) continue;
            std::vector<int> slots;
            slots.insert(slots.end(), conics, 0);
            slots.insert(slots.end(), use_x, 1);
            slots.insert(slots.end(), through_p0, 2);
            slots.insert(slots.end(), verticals, 3);
            slots.insert(slots.end(), horizontals, 4);
            try {
                return assemble(curve, d, families, slots);
            } catch (const WitnessError& e) {
                last_error = e.what();
            }
        }
    }
    throw WitnessError(last_error);
}

WitnessSupport case4_witness(const Curve& curve, int A, int B, int d) {
    const Field& f = curve.field();
    const int q = curve.q();
    const ShiftedParams p = shifted_params(q, A - curve.canonical_degree(), B);
    const int s = p.s();
    // x y^{b0-1} / prod (y - beta_i x - c_i): lines through distinct points
    // (0, c_i) of the x-axis, each meeting the curve in q further points.
    std::vector<Family> families;
    std::vector<int> slots;
    const auto axis = x_axis_zeros(curve);
    if (s - 1 > static_cast<int>(axis.size())) throw WitnessError("not enough points on the x-axis");
    for (int t = 0; t < s - 1; ++t) {
        const Element c = axis[t].y;
        Family fam{"line", {}, {}};
        for (Element beta : f.elements()) {
            if (beta.is_zero()) continue;
            auto zs = zeros_where(curve, [&](const Point& pt) {
                return !pt.x.is_zero() && pt.y == f.add(f.mul(beta, pt.x), c);
            });
            if (static_cast<int>(zs.size()) != q) continue;
            fam.candidates.push_back(to_indices(curve, zs));
            fam.labels.push_back("(y-[" + element_label(beta) + "]x-[" + element_label(c) + "])");
        }
        families.push_back(std::move(fam));
        slots.push_back(t);
    }
    return assemble(curve, d, families, slots);
}

WitnessSupport low_witness(const Curve& curve, int A, int B, int d) {
    const int q = curve.q();
    const auto [a0, a1] = decompose_plus(q, A);
    const auto [b0, b1] = decompose_plus(q, B);
    const int s = a0 + b0;
    if (s <= q - 3) {
        // d points of the x-axis.
        const auto axis = x_axis_zeros(curve);
        WitnessSupport w;
        w.d = d;
        w.recipe = "x-axis points";
        for (int t = 0; t < d; ++t) w.support.push_back(curve.evaluation_index(axis[t]));
        std::sort(w.support.begin(), w.support.end());
        return w;
    }
    if (s == q - 2 && a1 == 0) {
        std::vector<Family> families{line_family(curve, LineKind::ThroughP0, true)};
        return assemble(curve, d, families, {0});
    }
    if (s == q - 2 && b1 == 0) {
        std::vector<Family> families{line_family(curve, LineKind::ThroughPinf, true)};
        return assemble(curve, d, families, {0});
    }
    throw WitnessError("no low-degree recipe for these parameters");
}

}  // namespace

WitnessSupport build_witness_support(const Curve& curve, int A, int B) {
    const ParkResult park = park_distance(curve.q(), A, B);
    if (!park.d) throw WitnessError("(A, B) is outside the supported regimes");
    const int d = *park.d;
    if (park.tag.regime == Regime::ParkLow) return low_witness(curve, A, B, d);
    if (park.tag.case_label == ParkCase::Case4) return case4_witness(curve, A, B, d);
    return high_witness(curve, A, B, d);
}

Certificate certify_support(const Curve& curve, int A, int B, std::span<const int> support) {
    const CodeMatrix code = build_code(curve, A, B);
    Certificate cert;
    auto word = dual_word_on_support(curve.field(), code.generator, support);
    if (!word) return cert;
    cert.certified = true;
    cert.word_weight = weight(*word);
    cert.word = std::move(*word);
    return cert;
}

}  // namespace hermitian
