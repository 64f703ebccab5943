#include "orlab/young.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "orlab/rootfind.hpp"

namespace orlab {

namespace {

constexpr double kE = std::numbers::e;

void check_arg(double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::domain_error("GrowthFunction: argument must be finite and >= 0");
}

}  // namespace

struct GrowthFunction::Impl {
    virtual ~Impl() = default;
    virtual double eval(double t) const = 0;
    virtual double inv(double y) const {
        if (!std::isfinite(y) || y < 0.0)
            throw std::domain_error("GrowthFunction::inverse: bad target");
        return invert_increasing([this](double t) { return eval(t); }, y);
    }
    virtual Kind kind() const = 0;
    virtual std::string describe() const = 0;

    mutable std::once_flag sub_once;
    mutable double sub_cached = -1.0;
};

namespace {

struct PowerImpl final : GrowthFunction::Impl {
    double p;
    explicit PowerImpl(double p_) : p(p_) {}
    double eval(double t) const override {
        check_arg(t);
        return std::pow(t, p);
    }
    double inv(double y) const override {
        if (!std::isfinite(y) || y < 0.0)
            throw std::domain_error("GrowthFunction::inverse: bad target");
        return std::pow(y, 1.0 / p);
    }
    GrowthFunction::Kind kind() const override { return GrowthFunction::Kind::power; }
    std::string describe() const override {
        std::ostringstream os;
        os << "power(" << p << ")";
        return os.str();
    }
};

struct PhiRhoImpl final : GrowthFunction::Impl {
    double rho;
    explicit PhiRhoImpl(double rho_) : rho(rho_) {}
    double eval(double t) const override {
        check_arg(t);
        return t * std::pow(std::log(kE + t), rho);
    }
    GrowthFunction::Kind kind() const override { return GrowthFunction::Kind::phi_rho; }
    std::string describe() const override {
        std::ostringstream os;
        os << "phi_rho(" << rho << ")";
        return os.str();
    }
};

struct BRhoImpl final : GrowthFunction::Impl {
    double rho;
    explicit BRhoImpl(double rho_) : rho(rho_) {}
    double eval(double t) const override {
        check_arg(t);
        if (t == 0.0) return 0.0;
        return t / std::pow(std::log(kE + 1.0 / t), rho);
    }
    GrowthFunction::Kind kind() const override { return GrowthFunction::Kind::b_rho; }
    std::string describe() const override {
        std::ostringstream os;
        os << "b_rho(" << rho << ")";
        return os.str();
    }
};

struct RescaledImpl final : GrowthFunction::Impl {
    GrowthFunction base;
    double r;
    RescaledImpl(GrowthFunction base_, double r_) : base(std::move(base_)), r(r_) {}
    double eval(double t) const override {
        check_arg(t);
        return base(std::pow(t, r));
    }
    double inv(double y) const override { return std::pow(base.inverse(y), 1.0 / r); }
    GrowthFunction::Kind kind() const override { return GrowthFunction::Kind::rescaled; }
    std::string describe() const override {
        std::ostringstream os;
        os << "rescaled(" << base.describe() << ", " << r << ")";
        return os.str();
    }
};

struct PsiConjugateImpl final : GrowthFunction::Impl {
    double rho, r, r_prime;
    PsiConjugateImpl(double rho_, double r_) : rho(rho_), r(r_), r_prime(r_ / (r_ - 1.0)) {}
    // closed-form inverse; eval inverts it numerically
    double inv(double y) const override {
        if (!std::isfinite(y) || y < 0.0)
            throw std::domain_error("GrowthFunction::inverse: bad target");
        if (y == 0.0) return 0.0;
        return std::pow(y, 1.0 / r_prime) / std::pow(std::log(kE + 1.0 / y), rho / r);
    }
    double eval(double t) const override {
        check_arg(t);
        if (t == 0.0) return 0.0;
        return invert_increasing([this](double y) { return inv(y); }, t);
    }
    GrowthFunction::Kind kind() const override {
        return GrowthFunction::Kind::psi_conjugate;
    }
    std::string describe() const override {
        std::ostringstream os;
        os << "psi_conjugate(rho=" << rho << ", r'=" << r_prime << ")";
        return os.str();
    }
};

struct ConjugateImpl final : GrowthFunction::Impl {
    GrowthFunction base;
    explicit ConjugateImpl(GrowthFunction base_) : base(std::move(base_)) {}
    double inv(double y) const override {
        if (!std::isfinite(y) || y < 0.0)
            throw std::domain_error("GrowthFunction::inverse: bad target");
        if (y == 0.0) return 0.0;
        return y / base.inverse(y);
    }
    double eval(double t) const override {
        check_arg(t);
        if (t == 0.0) return 0.0;
        return invert_increasing([this](double y) { return inv(y); }, t);
    }
    GrowthFunction::Kind kind() const override { return GrowthFunction::Kind::conjugate; }
    std::string describe() const override {
        return "conjugate_of(" + base.describe() + ")";
    }
};

struct CustomImpl final : GrowthFunction::Impl {
    GrowthFunction::CustomTable tab;
    explicit CustomImpl(GrowthFunction::CustomTable t_) : tab(std::move(t_)) {}
    double eval(double t) const override {
        check_arg(t);
        const auto& xs = tab.t;
        const auto& ys = tab.y;
        if (t >= xs.back()) {
            const std::size_t m = xs.size();
            const double slope = (ys[m - 1] - ys[m - 2]) / (xs[m - 1] - xs[m - 2]);
            return ys.back() + slope * (t - xs.back());
        }
        const auto it = std::upper_bound(xs.begin(), xs.end(), t);
        const std::size_t k = static_cast<std::size_t>(it - xs.begin());
        if (k == 0) return 0.0;
        const double w = (t - xs[k - 1]) / (xs[k] - xs[k - 1]);
        return ys[k - 1] + w * (ys[k] - ys[k - 1]);
    }
    double inv(double y) const override {
        if (!std::isfinite(y) || y < 0.0)
            throw std::domain_error("GrowthFunction::inverse: bad target");
        const auto& xs = tab.t;
        const auto& ys = tab.y;
        if (y >= ys.back()) {
            const std::size_t m = xs.size();
            const double slope = (ys[m - 1] - ys[m - 2]) / (xs[m - 1] - xs[m - 2]);
            return xs.back() + (y - ys.back()) / slope;
        }
        const auto it = std::upper_bound(ys.begin(), ys.end(), y);
        const std::size_t k = static_cast<std::size_t>(it - ys.begin());
        if (k == 0) return 0.0;
        const double w = (y - ys[k - 1]) / (ys[k] - ys[k - 1]);
        return xs[k - 1] + w * (xs[k] - xs[k - 1]);
    }
    GrowthFunction::Kind kind() const override { return GrowthFunction::Kind::custom; }
    std::string describe() const override {
        std::ostringstream os;
        os << "custom(" << tab.t.size() << " nodes)";
        return os.str();
    }
};

}  // namespace

GrowthFunction::GrowthFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

GrowthFunction GrowthFunction::power(double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("power: exponent must be finite and > 0");
    return GrowthFunction(std::make_shared<PowerImpl>(p));
}

GrowthFunction GrowthFunction::phi_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("phi_rho: rho must be finite and > 0");
    return GrowthFunction(std::make_shared<PhiRhoImpl>(rho));
}

GrowthFunction GrowthFunction::b_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("b_rho: rho must be finite and > 0");
    return GrowthFunction(std::make_shared<BRhoImpl>(rho));
}

GrowthFunction GrowthFunction::rescaled(const GrowthFunction& base, double r) {
    if (!(r > 1.0) || !std::isfinite(r))
        throw std::invalid_argument("rescaled: r must be finite and > 1");
    return GrowthFunction(std::make_shared<RescaledImpl>(base, r));
}

GrowthFunction GrowthFunction::psi_conjugate(double rho, double r) {
    if (!(rho > 0.0) || !(r > 1.0))
        throw std::invalid_argument("psi_conjugate: need rho > 0 and r > 1");
    return GrowthFunction(std::make_shared<PsiConjugateImpl>(rho, r));
}

GrowthFunction GrowthFunction::psi_conjugate_for_rprime(double rho, double r_prime) {
    if (!(r_prime > 1.0))
        throw std::invalid_argument("psi_conjugate_for_rprime: need r' > 1");
    return psi_conjugate(rho, r_prime / (r_prime - 1.0));
}

GrowthFunction GrowthFunction::conjugate_of(const GrowthFunction& base) {
    return GrowthFunction(std::make_shared<ConjugateImpl>(base));
}

GrowthFunction GrowthFunction::custom(CustomTable table) {
    if (table.t.size() != table.y.size() || table.t.size() < 2)
        throw std::invalid_argument("custom: need >= 2 matched nodes");
    if (table.t.front() != 0.0 || table.y.front() != 0.0)
        throw std::invalid_argument("custom: table must start at (0, 0)");
    for (std::size_t i = 1; i < table.t.size(); ++i)
        if (!(table.t[i] > table.t[i - 1]) || !(table.y[i] > table.y[i - 1]))
            throw std::invalid_argument("custom: table must be strictly increasing");
    return GrowthFunction(std::make_shared<CustomImpl>(std::move(table)));
}

double GrowthFunction::operator()(double t) const { return impl_->eval(t); }
double GrowthFunction::inverse(double y) const { return impl_->inv(y); }
GrowthFunction::Kind GrowthFunction::kind() const { return impl_->kind(); }
std::string GrowthFunction::describe() const { return impl_->describe(); }

double GrowthFunction::param_p() const {
    if (auto* p = dynamic_cast<const PowerImpl*>(impl_.get())) return p->p;
    throw std::logic_error("param_p: not a power function");
}

double GrowthFunction::param_rho() const {
    if (auto* p = dynamic_cast<const PhiRhoImpl*>(impl_.get())) return p->rho;
    if (auto* b = dynamic_cast<const BRhoImpl*>(impl_.get())) return b->rho;
    if (auto* c = dynamic_cast<const PsiConjugateImpl*>(impl_.get())) return c->rho;
    throw std::logic_error("param_rho: kind has no rho");
}

double GrowthFunction::param_r() const {
    if (auto* p = dynamic_cast<const RescaledImpl*>(impl_.get())) return p->r;
    if (auto* c = dynamic_cast<const PsiConjugateImpl*>(impl_.get())) return c->r;
    throw std::logic_error("param_r: kind has no r");
}

double GrowthFunction::param_r_prime() const {
    if (auto* c = dynamic_cast<const PsiConjugateImpl*>(impl_.get())) return c->r_prime;
    throw std::logic_error("param_r_prime: kind has no r'");
}

const GrowthFunction& GrowthFunction::base() const {
    if (auto* p = dynamic_cast<const RescaledImpl*>(impl_.get())) return p->base;
    if (auto* c = dynamic_cast<const ConjugateImpl*>(impl_.get())) return c->base;
    throw std::logic_error("base: kind has no base function");
}

const GrowthFunction::CustomTable& GrowthFunction::table() const {
    if (auto* p = dynamic_cast<const CustomImpl*>(impl_.get())) return p->tab;
    throw std::logic_error("table: not a custom function");
}

std::optional<double> GrowthFunction::power_exponent() const {
    if (auto* p = dynamic_cast<const PowerImpl*>(impl_.get())) return p->p;
    return std::nullopt;
}

double GrowthFunction::submultiplicativity() const {
    std::call_once(impl_->sub_once, [this] {
        impl_->sub_cached = submultiplicativity_constant(*this, ProbeGrid{});
    });
    return impl_->sub_cached;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw std::invalid_argument("log_spaced: bad range");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * i / static_cast<double>(count - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> ProbeGrid::values() const { return log_spaced(lo, hi, points); }

ProbeGrid ProbeGrid::widened(double decades) const {
    const double f = std::pow(10.0, decades);
    return {lo / f, hi * f, 2 * points};
}

double submultiplicativity_constant(const GrowthFunction& A, const ProbeGrid& grid) {
    const auto pts = grid.values();
    double worst = 1.0;  // the (s,t) -> 0 limit forces any valid constant >= 1
    for (double s : pts) {
        const double as = A(s);
        for (double t : pts) {
            const double denom = as * A(t);
            if (denom <= 0.0 || !std::isfinite(denom)) continue;
            const double ratio = A(s * t) / denom;
            if (std::isfinite(ratio) && ratio > worst) worst = ratio;
        }
    }
    return worst;
}

namespace {

double lower_type_sup(const GrowthFunction& A, double p, const ProbeGrid& grid) {
    const auto pts = grid.values();
    std::vector<double> ss;
    for (double v : pts)
        if (v <= 1.0) ss.push_back(v);
    ss.push_back(1.0);
    double sup = 0.0;
    for (double s : ss) {
        const double sp = std::pow(s, p);
        for (double t : pts) {
            const double denom = sp * A(t);
            if (denom <= 0.0 || !std::isfinite(denom)) continue;
            const double ratio = A(s * t) / denom;
            if (std::isfinite(ratio) && ratio > sup) sup = ratio;
        }
    }
    return sup;
}

}  // namespace

LowerTypeResult lower_type_constant(const GrowthFunction& A, double p,
                                    const ProbeGrid& grid) {
    if (!(p > 0.0)) throw std::invalid_argument("lower_type_constant: p must be > 0");
    const double sup0 = lower_type_sup(A, p, grid);
    const double sup1 = lower_type_sup(A, p, grid.widened());
    LowerTypeResult res;
    res.constant = sup0;
    res.is_lower_type = sup1 <= 1.25 * sup0;
    return res;
}

double conjugate_identity_defect(double rho, double r, const ProbeGrid& grid) {
    const auto b_r = GrowthFunction::rescaled(GrowthFunction::b_rho(rho), r);
    const auto psi = GrowthFunction::psi_conjugate(rho, r);
    return conjugate_identity_defect(b_r, psi, grid);
}

double conjugate_identity_defect(const GrowthFunction& A, const GrowthFunction& B,
                                 const ProbeGrid& grid) {
    double worst = 1.0;
    for (double t : grid.values()) {
        const double prod = A.inverse(t) * B.inverse(t);
        if (!(prod > 0.0) || !std::isfinite(prod)) continue;
        const double gap = std::max(t / prod, prod / t);
        if (gap > worst) worst = gap;
    }
    return worst;
}

}  // namespace orlab
