#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nonneg/errors.hpp"
#include "nonneg/rng.hpp"

namespace nonneg {

enum class SupportKind { FullReal, LowerBounded, UpperBounded, Interval };

/// Declared support of a stream: the set every draw is guaranteed to lie in.
/// Interval requires a < b. The declared set may be wider than the
/// distribution's natural support (a point mass on [a,b], say) but never
/// narrower.
struct SupportSpec {
    SupportKind kind = SupportKind::FullReal;
    double a = 0.0;  // lower endpoint (LowerBounded, Interval)
    double b = 0.0;  // upper endpoint (UpperBounded, Interval)

    static SupportSpec full_real() { return {SupportKind::FullReal, 0.0, 0.0}; }
    static SupportSpec lower_bounded(double a) { return {SupportKind::LowerBounded, a, 0.0}; }
    static SupportSpec upper_bounded(double b) { return {SupportKind::UpperBounded, 0.0, b}; }
    static SupportSpec interval(double a, double b) {
        if (!(a < b)) throw InvalidArgument("Interval support requires a < b");
        return {SupportKind::Interval, a, b};
    }

    bool contains(double x) const {
        switch (kind) {
            case SupportKind::FullReal: return true;
            case SupportKind::LowerBounded: return x >= a;
            case SupportKind::UpperBounded: return x <= b;
            case SupportKind::Interval: return x >= a && x <= b;
        }
        return false;
    }

    bool has_lower() const { return kind == SupportKind::LowerBounded || kind == SupportKind::Interval; }
    bool has_upper() const { return kind == SupportKind::UpperBounded || kind == SupportKind::Interval; }

    std::string to_string() const;
};

namespace dist {
struct PointMass { double value; };
struct Uniform { double a, b; };
struct Gaussian { double mean, sd; };
struct ShiftedExponential { double shift, rate; };
struct DiscreteFinite {
    std::vector<double> values;
    std::vector<double> probs;  // normalized on construction
};
struct Bernoulli { double p; };
}  // namespace dist

using Distribution = std::variant<dist::PointMass, dist::Uniform, dist::Gaussian,
                                  dist::ShiftedExponential, dist::DiscreteFinite, dist::Bernoulli>;

/// Seeded i.i.d. sampler of real values with a declared support and, for the
/// built-in distributions, a known analytic mean. The mean is a test oracle:
/// estimation operations never read it. Replaying a seed reproduces the draw
/// sequence bit-exactly; only sample() advances the generator.
class EstimatorStream {
public:
    static EstimatorStream point_mass(double value, std::uint64_t seed);
    static EstimatorStream point_mass(double value, const SupportSpec& declared, std::uint64_t seed);
    static EstimatorStream uniform(double a, double b, std::uint64_t seed);
    static EstimatorStream gaussian(double mean, double sd, std::uint64_t seed);
    static EstimatorStream shifted_exponential(double shift, double rate, std::uint64_t seed);
    static EstimatorStream discrete_finite(std::vector<double> values, std::vector<double> probs,
                                           std::uint64_t seed);
    static EstimatorStream discrete_finite(std::vector<double> values, std::vector<double> probs,
                                           const SupportSpec& declared, std::uint64_t seed);
    static EstimatorStream bernoulli(double p, std::uint64_t seed);

    /// One i.i.d. draw; advances the generator state.
    double sample();

    const SupportSpec& support() const { return support_; }
    const std::optional<double>& known_mean() const { return known_mean_; }
    const Distribution& distribution() const { return distribution_; }
    long long draws() const { return draws_; }
    std::string label() const;

    /// Independent copy with a fresh seed; used for Monte Carlo replication.
    EstimatorStream clone_reseeded(std::uint64_t seed) const;

private:
    EstimatorStream(Distribution d, SupportSpec s, std::optional<double> mean, std::uint64_t seed);

    Distribution distribution_;
    SupportSpec support_;
    std::optional<double> known_mean_;
    Rng rng_;
    long long draws_ = 0;
};

/// Mixture transformer: emits the base draw with probability 1-epsilon and a
/// precomputed fallback value with probability epsilon, so the emission mean
/// is exactly target_mean while emissions agree with the base sequence with
/// probability 1-epsilon per draw. Requires the base mean to be known, which
/// real users never have: this type exists to reproduce the mean-shift
/// mechanics behind the nonexistence demonstrations, and is test-harness only.
class CoupledStream {
public:
    struct Tagged {
        double value;
        bool from_base;
    };

    double sample() { return sample_tagged().value; }
    Tagged sample_tagged();

    double fallback() const { return fallback_; }
    double epsilon() const { return epsilon_; }
    double target_mean() const { return target_mean_; }
    const SupportSpec& support() const { return support_; }
    std::optional<double> known_mean() const { return target_mean_; }

    CoupledStream clone_reseeded(std::uint64_t seed) const;

private:
    friend CoupledStream couple(const EstimatorStream&, double, double, std::uint64_t);
    CoupledStream(EstimatorStream base, double target_mean, double epsilon, double fallback,
                  SupportSpec support, std::uint64_t seed);

    EstimatorStream base_;
    double target_mean_;
    double epsilon_;
    double fallback_;
    SupportSpec support_;
    Rng coin_rng_;
};

/// Build the coupled stream: fallback = (lambda_y - lambda_x (1 - epsilon)) / epsilon.
/// The base draw is consumed on every emission, kept or replaced by the
/// selection coin, so the emission sequence stays aligned with the base
/// sequence. Throws MissingKnownMean / EpsilonOutOfRange.
CoupledStream couple(const EstimatorStream& base, double lambda_y, double epsilon, std::uint64_t seed);

/// Stream of {0,1} values. Sources: reduction of a bounded-interval stream
/// (see coinify), a direct Bernoulli(p) generator, or a scripted word for
/// enumeration tests.
class CoinStream {
public:
    static CoinStream from_bernoulli(double p, std::uint64_t seed);
    /// Replays a fixed word; throws when exhausted. Test use.
    static CoinStream scripted(std::vector<int> word);

    int next();

    long long emitted() const { return emitted_; }
    /// Base-stream draws consumed so far (coinified source only).
    long long base_draws() const;
    /// Coin mean implied by the source, when derivable.
    std::optional<double> known_mean() const { return known_mean_; }

private:
    friend CoinStream coinify(const EstimatorStream&, std::uint64_t);

    struct FromStream {
        EstimatorStream base;
        Rng aux;
        double a, b;
    };
    struct FromBernoulli {
        Rng rng;
        double p;
    };
    struct Scripted {
        std::vector<int> word;
        std::size_t pos = 0;
    };

    using Source = std::variant<FromStream, FromBernoulli, Scripted>;
    explicit CoinStream(Source src, std::optional<double> mean)
        : source_(std::move(src)), known_mean_(mean) {}

    Source source_;
    std::optional<double> known_mean_;
    long long emitted_ = 0;
};

/// Reduce an Interval(a,b) stream to coins of mean (E[X]-a)/(b-a): each
/// emission consumes one base draw X and one auxiliary uniform U and outputs
/// 1{U < (X-a)/(b-a)}. Throws UnsupportedSupport unless the stream support is
/// a bounded interval.
CoinStream coinify(const EstimatorStream& stream, std::uint64_t aux_seed);

}  // namespace nonneg
