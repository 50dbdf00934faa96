#include "csf/formulas.hpp"

#include <stdexcept>

namespace csf {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// sum_{I |= n} coeff(I) Lambda^I, skipping compositions with w_I = 0.
template <class Coeff>
NSymPoly lambda_sum(int n, Coeff coeff) {
    NSymPoly out(NSymBasis::Lambda);
    for (const auto& i : compositions_of(n)) {
        const std::int64_t w = stat_w(i);
        if (w != 0) out.add(i, coeff(i, Rational(w)));
    }
    return out;
}

// Product of (i_j - 1) over j >= 3.
Rational tail_product(const Composition& i) {
    Rational r = 1;
    for (int k = 3; k <= i.length(); ++k) r *= i.part(k) - 1;
    return r;
}

Composition two_parts(int x, int y) {
    std::vector<int> parts;
    for (int v : {x, y})
        if (v > 0) parts.push_back(v);
    return Composition(std::move(parts));
}

NSymPoly tadpole(int m, int l) {
    return lambda_sum(m + l, [&](const Composition& i, const Rational& w) { return theta_plus(i, l + 1) * w; });
}

NSymPoly line_tadpole(int m, int l) {
    return lambda_sum(m + l, [&](const Composition& i, const Rational& w) -> Rational {
        const int at_l = theta_plus(i, l);
        const int next = theta_plus(i, l + 1);
        if (at_l == 0) return (next - 1) * w;
        if (at_l >= 2) return 2 * next * w;
        return 0;
    });
}

NSymPoly lollipop(int a, int n) {
    return lambda_sum(n, [&](const Composition& i, const Rational& w) {
        return i.last() >= a ? factorial(a - 1) * w : Rational(0);
    });
}

NSymPoly barbell(int a, int b, int c) {
    const Rational scale = factorial(a - 1) * factorial(c);
    NSymPoly out(NSymBasis::Lambda);
    for (const auto& i : compositions_of(a + b + c)) {
        if (i.last() < a) continue;
        Rational coeff = 0;
        if (i.first() >= c + 1) coeff += stat_w(i);
        if (i.length() >= 2 && i.first() <= c && c < i.part(2)) coeff += (i.part(2) - i.first()) * tail_product(i);
        out.add(i, scale * coeff);
    }
    return out;
}

NSymPoly kab(int a, int b) {
    const Rational scale = factorial(a - 1) * factorial(b);
    NSymPoly out(NSymBasis::Lambda);
    for (int i = 0; i <= b; ++i) out.add(two_parts(a + b - i, i), scale * (a + b - 2 * i));
    return out;
}

NSymPoly dumbbell(int a, int b) {
    const Rational scale = factorial(a - 1) * factorial(b);
    NSymPoly out(NSymBasis::Lambda);
    out.add(two_parts(a, b + 1), scale * (a - 1) * (b + 1));
    for (int i = 0; i <= b; ++i) out.add(two_parts(a + b + 1 - i, i), scale * (a + b + 1 - 2 * i));
    return out;
}

NSymPoly hat(int a, int m, int b) {
    const int n = a + m + b;
    NSymPoly out(NSymBasis::Lambda);
    for (const auto& k : compositions_of(n)) {
        const std::int64_t w = stat_w(k);
        if (w == 0) continue;
        const int tail = theta_plus(k, b + m);
        const int big_n = theta_plus(k, b + 1) - tail;
        if (big_n <= -1)
            out.add(k, Rational(-big_n * w) / (tail + theta_minus(k, b + m - 1)));
        else if (big_n >= 1)
            out.add(k, Rational(big_n * w));
    }
    for (int size_i = 1; size_i <= m - 2; ++size_i)
        for (const auto& i : compositions_of(size_i)) {
            const std::int64_t wi = stat_w(i);
            if (wi == 0) continue;
            for (const auto& j : compositions_of(n - size_i)) {
                const std::int64_t wj = stat_w(j);
                if (wj == 0) continue;
                auto [j1, j2] = bisect(j, b);
                bool member = false;
                if (i.first() != 1 && size_i >= 2) {
                    if (j1.size() >= b + m) {
                        member = true;
                    } else {
                        const Composition kk = concat(concat(j1, reversal(i)), j2);
                        member = j2.size() <= sigma_minus(reversal(kk), a) - 1;
                    }
                } else if (i.first() == 1) {
                    member = j2.size() <= a - 1;
                }
                if (member) out.add(concat(i, j), Rational((m - 1 - size_i) * wi * wj));
            }
        }
    return out;
}

NSymPoly generalized_bull(int a, int n) {
    NSymPoly out = lambda_sum(n, [&](const Composition& i, const Rational& w) -> Rational {
        const int t = theta_plus(i, a);
        if (t >= 2) return 2 * w;
        if (i.last() >= 3) return Rational(i.last() - 2, i.last() - 1) * w;
        return 0;
    });
    for (const auto& j : compositions_of(n - 1)) {
        const std::int64_t w = stat_w(j);
        if (w != 0 && theta_plus(j, a) >= 2) out.add(concat(j, Composition{1}), Rational(w));
    }
    return out;
}

NSymPoly spider(int a, int b, int c) {
    const int n = a + b + c + 1;
    NSymPoly out = path_analog(n);
    for (int i = 1; i <= c; ++i) out.add_scaled(nsym_mul(path_analog(i), path_analog(n - i)), 1);
    for (int i = b + 1; i <= b + c; ++i) out.add_scaled(nsym_mul(path_analog(i), path_analog(n - i)), -1);
    return out;
}

void check_emitted(const NSymPoly& f, const FamilySpec& spec) {
    if (spec.family == "spider") return;
    for (const auto& [key, value] : f.terms())
        if (value < 0 || !is_integer(value))
            throw std::logic_error("closed form for " + spec.to_string() + " emitted coefficient " + to_string(value) +
                                   " at Lambda[" + key.to_string() + "]");
}

}  // namespace

NSymPoly path_analog(int n) {
    require(n >= 0, "path analog: n must be nonnegative");
    if (n == 0) return NSymPoly(NSymBasis::Lambda, Composition(), 1);
    return lambda_sum(n, [](const Composition&, const Rational& w) { return w; });
}

NSymPoly cycle_analog(int m) {
    require(m >= 2, "cycle analog: need m >= 2");
    return lambda_sum(m, [](const Composition& i, const Rational& w) { return (i.first() - 1) * w; });
}

NSymPoly elementary_expansion(const FamilySpec& spec) {
    validate(spec);
    const auto& p = spec.params;
    const std::string& f = spec.family;
    NSymPoly out(NSymBasis::Lambda);
    if (f == "path")
        out = path_analog(p[0]);
    else if (f == "cycle")
        out = cycle_analog(p[0]);
    else if (f == "complete")
        out = NSymPoly(NSymBasis::Lambda, Composition{p[0]}, factorial(p[0]));
    else if (f == "tadpole")
        out = tadpole(p[0], p[1]);
    else if (f == "ltadpole")
        out = line_tadpole(p[0], p[1]);
    else if (f == "lariat")
        out = lambda_sum(p[0], [](const Composition& i, const Rational& w) {
            return i.last() >= 3 ? 2 * w : Rational(0);
        });
    else if (f == "lollipop")
        out = lollipop(p[0], p[1]);
    else if (f == "barbell")
        out = barbell(p[0], p[1], p[2]);
    else if (f == "kab")
        out = kab(p[0], p[1]);
    else if (f == "dumbbell")
        out = dumbbell(p[0], p[1]);
    else if (f == "hat")
        out = hat(p[0], p[1], p[2]);
    else if (f == "gbull")
        out = generalized_bull(p[0], p[1]);
    else if (f == "spider")
        out = spider(p[0], p[1], p[2]);
    else
        throw std::invalid_argument("no closed form for family '" + f + "'");
    check_emitted(out, spec);
    return out;
}

NSymPoly cycle_psi_analog(int n) {
    require(n >= 2, "cycle_psi_analog: need n >= 2");
    NSymPoly out(NSymBasis::Psi, Composition{n}, n % 2 ? -1 : 1);
    for (const auto& i : compositions_of(n)) out.add(i, sign(i) * i.first());
    return out;
}

NSymPoly cycle_ribbon_analog(int n) {
    require(n >= 2, "cycle_ribbon_analog: need n >= 2");
    NSymPoly out(NSymBasis::R, Composition(std::vector<int>(n, 1)), -1);
    for (const auto& i : compositions_of(n)) {
        if (i.first() != 1 || i.last() != 1) continue;
        bool small = true;
        for (int part : i) small = small && part <= 2;
        if (!small) continue;
        int leading = 0;
        while (leading < i.length() && i.part(leading + 1) == 1) ++leading;
        mpz_class pow_ones = mpz_class(1) << i.multiplicity(1);
        mpz_class pow_lead = mpz_class(1) << leading;
        out.add(i, Rational(pow_ones) * (1 - Rational(1) / Rational(pow_lead)));
    }
    return out;
}

NSymPoly path_cycle_product_concat_form(int l, int m) {
    require(l >= 1 && m >= 2, "path_cycle_product: need l >= 1 and m >= 2");
    NSymPoly out(NSymBasis::Lambda);
    for (const auto& i : compositions_of(l))
        for (const auto& j : compositions_of(m)) {
            Composition k = concat(i, j);
            out.add(k, Rational(j.first() * stat_w(k)));
        }
    return out;
}

NSymPoly path_cycle_product_theta_form(int l, int m) {
    require(l >= 1 && m >= 2, "path_cycle_product: need l >= 1 and m >= 2");
    return lambda_sum(l + m, [&](const Composition& k, const Rational& w) {
        return theta_plus(k, l) == 0 ? (theta_plus(k, l + 1) + 1) * w : Rational(0);
    });
}

NSymPoly path_cycle_product(int l, int m) {
    NSymPoly a = path_cycle_product_concat_form(l, m);
    if (a != path_cycle_product_theta_form(l, m))
        throw std::logic_error("path_cycle_product: the two forms disagree for l = " + std::to_string(l) +
                               ", m = " + std::to_string(m));
    return a;
}

NSymPoly path_cycle_convolution(int l, int n) {
    require(0 <= l && l <= n - 2, "path_cycle_convolution: need 0 <= l <= n - 2");
    return lambda_sum(n, [&](const Composition& i, const Rational& w) { return (sigma_plus(i, l + 1) - 1) * w; });
}

NSymPoly cycle_path_convolution(int m, int n) {
    require(2 <= m && m <= n - 1, "cycle_path_convolution: need 2 <= m <= n - 1");
    return lambda_sum(n, [&](const Composition& i, const Rational& w) { return sigma_minus(reversal(i), m) * w; });
}

}  // namespace csf
