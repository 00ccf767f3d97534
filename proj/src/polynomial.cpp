#include "aptorus/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace aptorus {

Poly::Poly(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("Poly: bad dimension");
}

Poly Poly::constant(int dim, double c) {
    Poly p(dim);
    if (c != 0.0) p.terms_.push_back({zero_index(), c});
    return p;
}

Poly Poly::variable(int dim, int axis) {
    Poly p(dim);
    if (axis < 0 || axis >= dim) throw std::invalid_argument("Poly: bad axis");
    p.terms_.push_back({unit_index(axis), 1.0});
    return p;
}

int Poly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, order(e));
    return d;
}

void Poly::add_term(const MultiIndex& e, double c) {
    terms_.push_back({e, c});
    normalize();
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<MultiIndex, double>> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.second == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("Poly: dimension mismatch");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += o.scaled(-1.0); }

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("Poly: dimension mismatch");
    Poly r(dim_);
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            MultiIndex e{};
            for (int i = 0; i < kMaxDim; ++i)
                e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            r.terms_.push_back({e, ca * cb});
        }
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(double c) const {
    Poly r(dim_);
    if (c == 0.0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly: negative power");
    Poly r = Poly::constant(dim_, 1.0);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(int axis) const {
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("Poly: bad axis");
    Poly r(dim_);
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        if (e[axis] == 0) continue;
        MultiIndex d = e;
        d[axis] -= 1;
        r.terms_.push_back({d, c * static_cast<double>(e[axis])});
    }
    r.normalize();
    return r;
}

Poly Poly::derivative(const MultiIndex& a) const {
    Poly r = *this;
    for (int axis = 0; axis < dim_; ++axis)
        for (int i = 0; i < a[axis]; ++i) r = r.derivative(axis);
    return r;
}

double Poly::operator()(std::span<const double> x) const {
    // Per-axis power tables sized to the actual degree.
    std::array<int, kMaxDim> maxe{};
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < dim_; ++i) maxe[i] = std::max(maxe[i], static_cast<int>(e[i]));
    std::array<std::array<double, 256>, kMaxDim> pw;
    for (int i = 0; i < dim_; ++i) {
        pw[i][0] = 1.0;
        for (int e = 1; e <= maxe[i]; ++e) pw[i][e] = pw[i][e - 1] * x[i];
    }
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c;
        for (int i = 0; i < dim_; ++i) m *= pw[i][e[i]];
        s += m;
    }
    return s;
}

Poly Poly::dilated(double c) const {
    Poly r(dim_);
    r.terms_ = terms_;
    for (auto& [e, coef] : r.terms_) {
        int deg = 0;
        for (int i = 0; i < dim_; ++i) deg += e[i];
        coef *= std::pow(c, deg);
    }
    r.normalize();
    return r;
}

double eval_poly_1d(std::span<const double> coeffs, double t) {
    double s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * t + coeffs[i];
    return s;
}

JetPoly::JetPoly(Poly base) : base_(std::move(base)) {}

JetPoly::JetPoly(const JetPoly& o) : base_(o.base_) {
    std::shared_lock lk(o.mu_);
    cache_ = o.cache_;
}

JetPoly& JetPoly::operator=(const JetPoly& o) {
    if (this == &o) return *this;
    std::scoped_lock lk(mu_);
    base_ = o.base_;
    {
        std::shared_lock olk(o.mu_);
        cache_ = o.cache_;
    }
    return *this;
}

const Poly& JetPoly::deriv(const MultiIndex& a) const {
    if (order(a) == 0) return base_;
    {
        std::shared_lock lk(mu_);
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
    }
    std::unique_lock lk(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    // Build the whole chain below `a` while holding the lock; each step
    // differentiates the nearest cached ancestor once.
    MultiIndex cur = a;
    std::vector<int> pending;  // axes to re-apply, innermost last
    const Poly* node = nullptr;
    while (true) {
        if (order(cur) == 0) {
            node = &base_;
            break;
        }
        auto hit = cache_.find(cur);
        if (hit != cache_.end()) {
            node = &hit->second;
            break;
        }
        int axis = 0;
        while (cur[axis] == 0) ++axis;
        pending.push_back(axis);
        cur[axis] -= 1;
    }
    while (!pending.empty()) {
        int axis = pending.back();
        pending.pop_back();
        Poly next = node->derivative(axis);
        cur[axis] += 1;
        auto [ins, ok] = cache_.emplace(cur, std::move(next));
        (void)ok;
        node = &ins->second;
    }
    return *node;
}

}  // namespace aptorus
