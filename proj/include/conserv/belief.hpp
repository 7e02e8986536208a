#pragma once

// Finite state spaces, events, and probability vectors over them, together
// with Bayesian and conservative updating.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace conserv {

/// Ordered, pairwise distinct state labels. At least two states.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    /// Index of `label`; throws DomainError when absent.
    std::size_t index_of(const std::string& label) const;

    bool operator==(const StateSpace&) const = default;

private:
    std::vector<std::string> labels_;
};

/// Largest supported state space. Events are bitmasks.
inline constexpr std::size_t kMaxStates = 63;

/// A subset of {0, ..., dimension-1}. The algebra is the full power set.
class Event {
public:
    Event(std::size_t dimension, std::uint64_t mask);

    static Event full(std::size_t dimension);
    static Event empty(std::size_t dimension);
    static Event of(std::size_t dimension, std::initializer_list<std::size_t> members);
    static Event of(std::size_t dimension, std::span<const std::size_t> members);

    std::size_t dimension() const noexcept { return dimension_; }
    std::uint64_t mask() const noexcept { return mask_; }
    bool contains(std::size_t state) const noexcept {
        return state < dimension_ && ((mask_ >> state) & 1U) != 0;
    }
    std::size_t size() const noexcept;
    bool is_empty() const noexcept { return mask_ == 0; }
    bool is_full() const noexcept { return mask_ == full_mask(dimension_); }
    std::vector<std::size_t> members() const;

    Event complement() const;
    Event operator|(const Event& other) const;
    Event operator&(const Event& other) const;
    bool disjoint_from(const Event& other) const;

    auto operator<=>(const Event&) const = default;

    static std::uint64_t full_mask(std::size_t dimension) noexcept {
        return dimension >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dimension) - 1);
    }

private:
    void require_same_space(const Event& other) const;

    std::size_t dimension_;
    std::uint64_t mask_;
};

/// Every nonempty event over `dimension` states, in increasing mask order.
std::vector<Event> nonempty_events(std::size_t dimension);

/// A probability vector. Weights are nonnegative and sum to one; the
/// constructor rejects negative weights rather than clamping them.
class Belief {
public:
    /// `probs` must sum to one within kSumTolerance; the stored vector is
    /// renormalized exactly.
    explicit Belief(std::vector<double> probs);

    /// Normalizes arbitrary nonnegative weights with a positive total.
    static Belief from_weights(std::vector<double> weights);
    static Belief uniform(std::size_t dimension);

    std::size_t dimension() const noexcept { return probs_.size(); }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }

    bool operator==(const Belief&) const = default;

private:
    std::vector<double> probs_;
};

/// mu(A).
double event_prob(const Belief& mu, const Event& event);

/// mu( . | A). Throws NullEventError when mu(A) = 0.
Belief bayes_update(const Belief& mu, const Event& event);

/// delta * mu + (1 - delta) * mu( . | A). Throws NullEventError when
/// mu(A) = 0 and DomainError when delta lies outside [0, 1].
Belief conservative_update(const Belief& mu, const Event& event, double delta);

/// w * p + (1 - w) * q.
Belief mix_beliefs(const Belief& p, const Belief& q, double w);

double max_abs_difference(const Belief& p, const Belief& q);
double total_variation(const Belief& p, const Belief& q);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

}  // namespace conserv
