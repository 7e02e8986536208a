#include "conserv/belief.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "conserv/errors.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("states", "state space is empty");
    if (labels_.size() < 2) throw ValidationError("states", "state space needs at least two states");
    if (labels_.size() > kMaxStates) throw ValidationError("states", "too many states");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw ValidationError("states/" + std::to_string(i), "empty state label");
        if (!seen.insert(labels_[i]).second)
            throw ValidationError("states/" + std::to_string(i), "duplicate state label '" + labels_[i] + "'");
    }
}

std::size_t StateSpace::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw DomainError("unknown state '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

Event::Event(std::size_t dimension, std::uint64_t mask) : dimension_(dimension), mask_(mask) {
    if (dimension == 0 || dimension > kMaxStates) throw DomainError("event dimension out of range");
    if ((mask & ~full_mask(dimension)) != 0) throw DomainError("event member index exceeds state count");
}

Event Event::full(std::size_t dimension) { return Event(dimension, full_mask(dimension)); }

Event Event::empty(std::size_t dimension) { return Event(dimension, 0); }

Event Event::of(std::size_t dimension, std::initializer_list<std::size_t> members) {
    return of(dimension, std::span<const std::size_t>(members.begin(), members.size()));
}

Event Event::of(std::size_t dimension, std::span<const std::size_t> members) {
    std::uint64_t mask = 0;
    for (std::size_t s : members) {
        if (s >= dimension) throw DomainError("event member index exceeds state count");
        mask |= std::uint64_t{1} << s;
    }
    return Event(dimension, mask);
}

std::size_t Event::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> Event::members() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < dimension_; ++s)
        if (contains(s)) out.push_back(s);
    return out;
}

Event Event::complement() const { return Event(dimension_, ~mask_ & full_mask(dimension_)); }

void Event::require_same_space(const Event& other) const {
    if (dimension_ != other.dimension_) throw DomainError("events over different state spaces");
}

Event Event::operator|(const Event& other) const {
    require_same_space(other);
    return Event(dimension_, mask_ | other.mask_);
}

Event Event::operator&(const Event& other) const {
    require_same_space(other);
    return Event(dimension_, mask_ & other.mask_);
}

bool Event::disjoint_from(const Event& other) const {
    require_same_space(other);
    return (mask_ & other.mask_) == 0;
}

std::vector<Event> nonempty_events(std::size_t dimension) {
    if (dimension > 20) throw DomainError("power set enumeration limited to 20 states");
    std::vector<Event> out;
    const std::uint64_t full = Event::full_mask(dimension);
    out.reserve(static_cast<std::size_t>(full));
    for (std::uint64_t m = 1; m <= full; ++m) out.emplace_back(dimension, m);
    return out;
}

namespace {

void check_weights(const std::vector<double>& w) {
    if (w.size() < 2) throw ValidationError("", "belief needs at least two states");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i])) throw ValidationError(std::to_string(i), "non-finite probability");
        if (w[i] < 0.0) throw ValidationError(std::to_string(i), "negative probability");
    }
}

void normalize(std::vector<double>& w, double total) {
    for (double& x : w) x /= total;
}

void require_dimension(const Belief& mu, const Event& event) {
    if (mu.dimension() != event.dimension()) throw DomainError("event and belief over different state spaces");
}

}  // namespace

Belief::Belief(std::vector<double> probs) : probs_(std::move(probs)) {
    check_weights(probs_);
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > kSumTolerance)
        throw ValidationError("", "probabilities sum to " + std::to_string(total) + ", not 1");
    normalize(probs_, total);
}

Belief Belief::from_weights(std::vector<double> weights) {
    check_weights(weights);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) throw ValidationError("", "weights have zero total");
    normalize(weights, total);
    return Belief(std::move(weights));
}

Belief Belief::uniform(std::size_t dimension) {
    return from_weights(std::vector<double>(dimension, 1.0));
}

double event_prob(const Belief& mu, const Event& event) {
    require_dimension(mu, event);
    double p = 0.0;
    for (std::size_t s = 0; s < mu.dimension(); ++s)
        if (event.contains(s)) p += mu[s];
    return std::min(p, 1.0);
}

Belief bayes_update(const Belief& mu, const Event& event) {
    const double pa = event_prob(mu, event);
    if (!(pa > 0.0)) throw NullEventError("bayes_update: conditioning event has zero probability");
    if (event.is_full()) return mu;
    std::vector<double> out(mu.dimension(), 0.0);
    for (std::size_t s = 0; s < mu.dimension(); ++s)
        if (event.contains(s)) out[s] = mu[s] / pa;
    return Belief::from_weights(std::move(out));
}

Belief conservative_update(const Belief& mu, const Event& event, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("conservative_update: delta outside [0, 1]");
    return mix_beliefs(mu, bayes_update(mu, event), delta);
}

Belief mix_beliefs(const Belief& p, const Belief& q, double w) {
    if (p.dimension() != q.dimension()) throw DomainError("mix_beliefs: dimension mismatch");
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mix_beliefs: weight outside [0, 1]");
    // The endpoints are returned bit-for-bit.
    if (w == 1.0) return p;
    if (w == 0.0) return q;
    std::vector<double> out(p.dimension());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = w * p[s] + (1.0 - w) * q[s];
    return Belief::from_weights(std::move(out));
}

double max_abs_difference(const Belief& p, const Belief& q) {
    if (p.dimension() != q.dimension()) throw DomainError("dimension mismatch");
    double m = 0.0;
    for (std::size_t s = 0; s < p.dimension(); ++s) m = std::max(m, std::abs(p[s] - q[s]));
    return m;
}

double total_variation(const Belief& p, const Belief& q) {
    if (p.dimension() != q.dimension()) throw DomainError("dimension mismatch");
    double t = 0.0;
    for (std::size_t s = 0; s < p.dimension(); ++s) t += std::abs(p[s] - q[s]);
    return 0.5 * t;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    double t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) t += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(t);
}

}  // namespace conserv
