#include "mhs/verifiers.hpp"

#include "mhs/error.hpp"
#include "mhs/gallery.hpp"
#include "mhs/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>

namespace mhs {

std::string_view to_string(Status s) noexcept {
    switch (s) {
    case Status::Passed: return "pass";
    case Status::Failed: return "fail";
    case Status::Unmet: return "unmet";
    }
    return "unknown";
}

namespace {

constexpr std::array<std::string_view, 12> kAllIds = {
    check_id::kDerivIdentity, check_id::kEq11,     check_id::kEq12,      check_id::kEq21,
    check_id::kEq25,          check_id::kF1Closed, check_id::kGalleryA,  check_id::kGalleryB,
    check_id::kGalleryD,      check_id::kThm11Even, check_id::kThm11Odd, check_id::kThm12,
};

// p > n + 1
void require_hypothesis(const Prime& ctx, int n, std::string_view id) {
    if (std::int64_t{ctx.modulus()} <= n + 1) {
        throw Error(ErrorKind::HypothesisUnmet, std::string(id) + ": p = " +
                                                    std::to_string(ctx.modulus()) +
                                                    " does not exceed n + 1 = " + std::to_string(n + 1));
    }
}

void require_depth(const MhsTables& tables, int n, std::string_view id) {
    if (n < 1 || n > tables.n_max()) {
        throw Error(ErrorKind::RangeError, std::string(id) + ": n = " + std::to_string(n) +
                                               " outside table depth 1.." + std::to_string(tables.n_max()));
    }
}

// Collects sub-identities in order and reports the first one that fails.
class SubChecks {
public:
    SubChecks(std::string_view id, std::uint64_t p, int n) : id_(id), p_(p), n_(n) {}

    void expect(bool holds, std::string_view what) {
        if (!holds && !failed_) failed_ = Failure{ordinal_, std::string(what)};
        ++ordinal_;
    }

    CheckResult result() const {
        if (failed_) return CheckResult::fail(id_, p_, n_, failed_->ordinal, failed_->what);
        return CheckResult::pass(id_, p_, n_);
    }

private:
    struct Failure {
        std::uint64_t ordinal;
        std::string what;
    };
    std::string_view id_;
    std::uint64_t p_;
    int n_;
    std::uint64_t ordinal_ = 0;
    std::optional<Failure> failed_;
};

MhsTables tables_for_triple_sums(const Prime& ctx, std::string_view id) {
    if (ctx.modulus() < 5) {
        throw Error(ErrorKind::HypothesisUnmet, std::string(id) + " needs p >= 5");
    }
    return build_tables(ctx, 3);
}

} // namespace

std::span<const std::string_view> all_check_ids() noexcept { return kAllIds; }

std::optional<std::size_t> symmetry_defect(const FpPoly& f, bool negate, SymmetryMethod method,
                                           const Prime& ctx) {
    switch (method) {
    case SymmetryMethod::Transform: {
        const FpPoly lhs = subst_one_minus_x(f, ctx);
        const FpPoly rhs = negate ? scale(f, ctx.neg(Residue{1}), ctx) : f;
        return first_difference(lhs, rhs);
    }
    case SymmetryMethod::Pointwise: {
        const std::uint32_t p = ctx.modulus();
        std::vector<Residue> defect(p);
        bool any = false;
        for (std::uint32_t a = 0; a < p; ++a) {
            const Residue at_a = eval(f, Residue{a}, ctx);
            const Residue at_reflected = eval(f, ctx.sub(Residue{1}, Residue{a}), ctx);
            defect[a] = ctx.sub(at_reflected, negate ? ctx.neg(at_a) : at_a);
            any = any || defect[a].value != 0;
        }
        if (!any) return std::nullopt;
        const FpPoly d = interpolate_all_points(defect, ctx);
        return first_difference(d, FpPoly{p, {}});
    }
    case SymmetryMethod::Auto: {
        const auto coeffwise = symmetry_defect(f, negate, SymmetryMethod::Transform, ctx);
        if (ctx.modulus() <= kPointwiseCrossCheckMaxP) {
            const auto pointwise = symmetry_defect(f, negate, SymmetryMethod::Pointwise, ctx);
            if (pointwise != coeffwise) {
                throw Error(ErrorKind::RangeError, "symmetry_defect: transform and pointwise disagree");
            }
        }
        return coeffwise;
    }
    }
    return std::nullopt;
}

CheckResult check_eq_1_1(const MhsTables& tables) {
    const Prime& ctx = tables.ctx();
    require_hypothesis(ctx, 3, check_id::kEq11);
    require_depth(tables, 3, check_id::kEq11);
    const Residue s = weighted_first_index_sum(tables, 3, weights::chi3_alternating);
    if (s.value != 0) return CheckResult::fail(check_id::kEq11, ctx.modulus(), 3, s.value, "character sum");
    return CheckResult::pass(check_id::kEq11, ctx.modulus(), 3);
}

CheckResult check_eq_1_1(const Prime& ctx) {
    return check_eq_1_1(tables_for_triple_sums(ctx, check_id::kEq11));
}

CheckResult check_eq_1_2(const MhsTables& tables) {
    const Prime& ctx = tables.ctx();
    require_hypothesis(ctx, 3, check_id::kEq12);
    require_depth(tables, 3, check_id::kEq12);
    const auto in_classes = [](std::uint64_t a, std::uint64_t b) -> FirstIndexWeight {
        return [a, b](std::uint64_t i) -> std::int64_t { return (i % 6 == a || i % 6 == b) ? 1 : 0; };
    };
    const Residue low = weighted_first_index_sum(tables, 3, in_classes(1, 2));
    const Residue high = weighted_first_index_sum(tables, 3, in_classes(4, 5));
    if (low != high) {
        return CheckResult::fail(check_id::kEq12, ctx.modulus(), 3, ctx.sub(low, high).value,
                                 "classes 1,2 minus classes 4,5");
    }
    return CheckResult::pass(check_id::kEq12, ctx.modulus(), 3);
}

CheckResult check_eq_1_2(const Prime& ctx) {
    return check_eq_1_2(tables_for_triple_sums(ctx, check_id::kEq12));
}

CheckResult check_thm_1_1_odd(const MhsTables& tables, int n) {
    const Prime& ctx = tables.ctx();
    if (n < 1 || n % 2 == 0) throw Error(ErrorKind::RangeError, "thm1.1-odd: n must be odd");
    require_hypothesis(ctx, n, check_id::kThm11Odd);
    require_depth(tables, n, check_id::kThm11Odd);

    const auto [p, depth, S] = class_sums(tables, n);
    const Residue low = ctx.add(S[1], S[2]);
    const Residue high = ctx.add(S[4], S[5]);
    // The same statement written as one vanishing combination.
    const Residue combined = ctx.sub(low, high);
    const bool as_equality = low == high;
    const bool as_vanishing = combined.value == 0;
    if (as_equality != as_vanishing) {
        throw Error(ErrorKind::RangeError, "thm1.1-odd: equality and vanishing forms disagree");
    }
    if (!as_equality) {
        return CheckResult::fail(check_id::kThm11Odd, p, depth, combined.value, "S1+S2-S4-S5");
    }
    return CheckResult::pass(check_id::kThm11Odd, p, depth);
}

CheckResult check_thm_1_1_even(const MhsTables& tables, int n) {
    const Prime& ctx = tables.ctx();
    if (n < 2 || n % 2 != 0) throw Error(ErrorKind::RangeError, "thm1.1-even: n must be even");
    require_hypothesis(ctx, n, check_id::kThm11Even);
    require_depth(tables, n, check_id::kThm11Even);

    const auto [p, depth, S] = class_sums(tables, n);
    const Residue two{2};

    // Left side through the weighted path, right side through the class sums.
    const Residue alternating_thirds = weighted_first_index_sum(tables, n, weights::alternating_multiple_of_3);
    const Residue twice_middle = ctx.mul(two, ctx.add(ctx.add(S[2], S[3]), S[4]));
    const Residue class_difference = ctx.sub(S[0], S[3]);

    Residue combo = ctx.mul(two, S[0]);
    combo = ctx.add(combo, S[1]);
    combo = ctx.sub(combo, S[2]);
    combo = ctx.sub(combo, ctx.mul(two, S[3]));
    combo = ctx.sub(combo, S[4]);
    combo = ctx.add(combo, S[5]);

    Residue total{0};
    for (Residue s : S) total = ctx.add(total, s);

    SubChecks sub(check_id::kThm11Even, p, depth);
    sub.expect(alternating_thirds == twice_middle, "alternating multiples of 3 vs 2(S2+S3+S4)");
    sub.expect(class_difference == twice_middle, "S0-S3 vs 2(S2+S3+S4)");
    sub.expect(combo.value == 0, "2S0+S1-S2-2S3-S4+S5");
    // combo - (S0 - S3 - 2(S2+S3+S4)) is the class total, so the last two
    // forms are equivalent once the total vanishes.
    sub.expect(ctx.sub(combo, ctx.sub(class_difference, twice_middle)) == total,
               "difference of the two class forms vs class total");
    return sub.result();
}

CheckResult check_thm_1_2(const MhsTables& tables, int n, SymmetryMethod method) {
    const Prime& ctx = tables.ctx();
    require_hypothesis(ctx, n, check_id::kThm12);
    require_depth(tables, n, check_id::kThm12);
    const FpPoly f = build_fn(tables, n);
    const bool negate = n % 2 == 0;
    std::optional<std::size_t> defect;
    try {
        defect = symmetry_defect(f, negate, method, ctx);
    } catch (const Error&) {
        const auto coeffwise = symmetry_defect(f, negate, SymmetryMethod::Transform, ctx);
        return CheckResult::fail(check_id::kThm12, ctx.modulus(), n, coeffwise.value_or(0),
                                 "transform and pointwise verdicts disagree");
    }
    if (defect) return CheckResult::fail(check_id::kThm12, ctx.modulus(), n, *defect, "coefficient index");
    return CheckResult::pass(check_id::kThm12, ctx.modulus(), n);
}

CheckResult check_eq_2_1(const MhsTables& tables, int n) {
    const Prime& ctx = tables.ctx();
    if (ctx.modulus() <= 3) {
        throw Error(ErrorKind::HypothesisUnmet, "eq2.1 needs p > 3");
    }
    require_hypothesis(ctx, n, check_id::kEq21);
    require_depth(tables, n, check_id::kEq21);

    const FpPoly f = build_fn(tables, n);
    const OmegaElem w = OmegaElem::omega();
    const OmegaElem w2 = omega_mul(w, w, ctx);
    const OmegaElem at_neg_w = eval(f, omega_neg(w, ctx), ctx);
    const OmegaElem at_neg_w2 = eval(f, omega_neg(w2, ctx), ctx);
    const OmegaElem at_one_plus_w = eval(f, omega_add(OmegaElem::one(), w, ctx), ctx);
    const OmegaElem expected = n % 2 == 1 ? at_neg_w : omega_neg(at_neg_w, ctx);

    const auto S = class_sums(tables, n).S;
    const Residue two{2};
    Residue even_part = ctx.mul(two, S[0]);
    even_part = ctx.add(even_part, S[1]);
    even_part = ctx.sub(even_part, S[2]);
    even_part = ctx.sub(even_part, ctx.mul(two, S[3]));
    even_part = ctx.sub(even_part, S[4]);
    even_part = ctx.add(even_part, S[5]);
    const Residue odd_part = ctx.sub(ctx.add(S[1], S[2]), ctx.add(S[4], S[5]));
    const OmegaElem w2_minus_w = omega_sub(w2, w, ctx);

    SubChecks sub(check_id::kEq21, ctx.modulus(), n);
    sub.expect(at_neg_w2 == expected, "F(-w^2) vs (-1)^(n-1) F(-w)");
    sub.expect(omega_add(at_neg_w, at_neg_w2, ctx) == OmegaElem::scalar(even_part),
               "F(-w)+F(-w^2) vs 2S0+S1-S2-2S3-S4+S5");
    sub.expect(omega_sub(at_neg_w, at_neg_w2, ctx) ==
                   omega_mul(w2_minus_w, OmegaElem::scalar(odd_part), ctx),
               "F(-w)-F(-w^2) vs (w^2-w)(S1+S2-S4-S5)");
    sub.expect(at_neg_w2 == at_one_plus_w, "F(-w^2) vs F(1+w)");
    return sub.result();
}

CheckResult check_eq_2_5(const MhsTables& tables, int n) {
    const Prime& ctx = tables.ctx();
    if (n < 1 || std::int64_t{ctx.modulus()} - 2 < n) {
        throw Error(ErrorKind::RangeError, "eq2.5: n = " + std::to_string(n) + " outside 1..p-2");
    }
    require_depth(tables, n, check_id::kEq25);
    const Residue full = full_mhs(tables, n);
    const auto e = elementary_symmetric_of_inverses(ctx, n);

    SubChecks sub(check_id::kEq25, ctx.modulus(), n);
    sub.expect(full.value == 0, "complete sum vanishes");
    sub.expect(e[static_cast<std::size_t>(n)] == full, "elementary symmetric route agrees");
    return sub.result();
}

CheckResult check_f1_closed(const MhsTables& tables) {
    const Prime& ctx = tables.ctx();
    const auto diff = first_difference(build_fn(tables, 1), f1_closed_form(ctx));
    if (diff) return CheckResult::fail(check_id::kF1Closed, ctx.modulus(), 1, *diff, "coefficient index");
    return CheckResult::pass(check_id::kF1Closed, ctx.modulus(), 1);
}

CheckResult check_deriv_identity(const MhsTables& tables, int n) {
    const Prime& ctx = tables.ctx();
    if (n < 2) throw Error(ErrorKind::RangeError, "deriv-identity needs n >= 2");
    require_hypothesis(ctx, n, check_id::kDerivIdentity);
    require_depth(tables, n, check_id::kDerivIdentity);

    const std::uint32_t p = ctx.modulus();
    const FpPoly x_times_x_minus_1{p, {Residue{0}, ctx.neg(Residue{1}), Residue{1}}};
    const FpPoly lhs = mul(x_times_x_minus_1, formal_derivative(build_fn(tables, n), ctx), ctx);
    const FpPoly x_scaled{p, {Residue{0}, full_mhs(tables, n - 1)}};
    const FpPoly rhs = sub(build_fn(tables, n - 1), x_scaled, ctx);

    const auto diff = first_difference(lhs, rhs);
    if (diff) return CheckResult::fail(check_id::kDerivIdentity, p, n, *diff, "coefficient index");
    return CheckResult::pass(check_id::kDerivIdentity, p, n);
}

CheckResult check_oracle_agreement(const MhsTables& tables, int n) {
    const Prime& ctx = tables.ctx();
    require_hypothesis(ctx, n, check_id::kOracle);
    require_depth(tables, n, check_id::kOracle);
    const std::uint32_t p = ctx.modulus();

    // first[m] = exact sum over tuples with i_1 = m
    const std::vector<oracle::ExactSum> first = oracle::exact_poly_fn(p, n);
    const auto weighted = [&](const FirstIndexWeight& w) {
        mpq_class acc = 0;
        for (std::uint32_t m = 1; m < p; ++m) {
            const std::int64_t wm = w(m);
            if (wm != 0) acc += first[m].value() * static_cast<long>(wm);
        }
        return oracle::reduce_mod(oracle::ExactSum::from(acc), ctx);
    };

    SubChecks sub(check_id::kOracle, p, n);
    const FpPoly fast = build_fn(tables, n);
    for (std::uint32_t m = 0; m < p; ++m) {
        sub.expect(oracle::reduce_mod(first[m], ctx) == fast.coeff(m),
                   "F_n coefficient " + std::to_string(m));
    }
    mpq_class suffix = 0;
    for (std::uint32_t m = p; m-- > 0;) {
        sub.expect(oracle::reduce_mod(oracle::ExactSum::from(suffix), ctx) == tables.at(n, m),
                   "G[" + std::to_string(n) + "][" + std::to_string(m) + "]");
        suffix += first[m].value();
    }
    if (n == 1) {
        for (std::uint32_t m = 0; m < p; ++m) {
            sub.expect(tables.at(0, m) == Residue{1}, "G[0][" + std::to_string(m) + "]");
        }
    }
    const auto S = class_sums(tables, n).S;
    for (std::uint64_t r = 0; r < 6; ++r) {
        sub.expect(weighted(weights::residue_class_mod6(r)) == S[r], "S" + std::to_string(r));
    }
    sub.expect(weighted(weights::one) == full_mhs(tables, n), "complete sum");

    const std::array<std::pair<const char*, FirstIndexWeight>, 4> named = {{
        {"weight 1", weights::one},
        {"weight (-1)^i", weights::alternating},
        {"weight (i/3)(-1)^i", weights::chi3_alternating},
        {"weight (-1)^i [3|i]", weights::alternating_multiple_of_3},
    }};
    for (const auto& [name, w] : named) {
        sub.expect(weighted(w) == weighted_first_index_sum(tables, n, w), name);
    }
    return sub.result();
}

void validate_selection(std::span<const std::string> selection) {
    for (const auto& id : selection) {
        if (std::find(kAllIds.begin(), kAllIds.end(), id) == kAllIds.end()) {
            throw Error(ErrorKind::UnknownCheckId, "unknown check id '" + id + "'");
        }
    }
}

std::vector<CheckResult> run_suite(const Prime& ctx, int n_max, std::span<const std::string> selection,
                                   const SuiteOptions& options) {
    validate_selection(selection);
    if (n_max < 1) throw Error(ErrorKind::RangeError, "run_suite: n_max must be positive");

    const auto selected = [&](std::string_view id) {
        return selection.empty() ||
               std::find(selection.begin(), selection.end(), id) != selection.end();
    };

    const std::uint32_t p = ctx.modulus();
    const int depth = static_cast<int>(std::min<std::int64_t>(std::max(n_max, 3), std::int64_t{p} - 2));
    const MhsTables tables = build_tables(ctx, depth);

    std::vector<CheckResult> out;
    const auto attempt = [&](std::string_view id, int n, const std::function<CheckResult()>& run) {
        try {
            out.push_back(run());
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::HypothesisUnmet) throw;
            out.push_back(CheckResult::unmet(id, p, n, e.what()));
        }
    };
    // n-indexed checks whose hypothesis is p > n + 1
    const auto per_depth = [&](std::string_view id, int n, const std::function<CheckResult()>& run) {
        if (std::int64_t{p} <= n + 1) {
            out.push_back(CheckResult::unmet(id, p, n, "p <= n + 1"));
            return;
        }
        attempt(id, n, run);
    };

    if (selected(check_id::kEq11)) attempt(check_id::kEq11, 3, [&] { return check_eq_1_1(tables); });
    if (selected(check_id::kEq12)) attempt(check_id::kEq12, 3, [&] { return check_eq_1_2(tables); });
    if (selected(check_id::kF1Closed)) attempt(check_id::kF1Closed, 1, [&] { return check_f1_closed(tables); });
    if (selected(check_id::kGalleryA)) attempt(check_id::kGalleryA, 0, [&] { return check_wolstenholme(ctx); });
    if (selected(check_id::kGalleryB)) attempt(check_id::kGalleryB, 0, [&] { return check_sun_halves(ctx); });
    if (selected(check_id::kGalleryD)) {
        std::uint64_t power = p;
        for (unsigned a = 1; power <= kSunTaurasoBudget && (a == 1 || power <= options.sun_tauraso_max_power); ++a) {
            out.push_back(check_sun_tauraso(ctx, a));
            if (power > kSunTaurasoBudget / p) break;
            power *= p;
        }
    }

    for (int n = 1; n <= n_max; ++n) {
        if (selected(check_id::kThm11Odd) && n % 2 == 1) {
            per_depth(check_id::kThm11Odd, n, [&] { return check_thm_1_1_odd(tables, n); });
        }
        if (selected(check_id::kThm11Even) && n % 2 == 0) {
            per_depth(check_id::kThm11Even, n, [&] { return check_thm_1_1_even(tables, n); });
        }
        if (selected(check_id::kThm12)) per_depth(check_id::kThm12, n, [&] { return check_thm_1_2(tables, n); });
        if (selected(check_id::kEq21)) per_depth(check_id::kEq21, n, [&] { return check_eq_2_1(tables, n); });
        if (selected(check_id::kEq25)) per_depth(check_id::kEq25, n, [&] { return check_eq_2_5(tables, n); });
        if (selected(check_id::kDerivIdentity) && n >= 2) {
            per_depth(check_id::kDerivIdentity, n, [&] { return check_deriv_identity(tables, n); });
        }
        if (options.oracle_max_p != 0 && p <= options.oracle_max_p && std::int64_t{p} > n + 1 &&
            oracle::tuple_count(p - 1, static_cast<std::uint64_t>(n)) <= oracle::kEnumerationBudget) {
            out.push_back(check_oracle_agreement(tables, n));
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const CheckResult& x, const CheckResult& y) {
        if (x.check_id != y.check_id) return x.check_id < y.check_id;
        return x.n < y.n;
    });
    return out;
}

} // namespace mhs
