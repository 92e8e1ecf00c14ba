#include "nonneg/streams.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <iostream>

namespace nonneg {

std::string SupportSpec::to_string() const {
    char buf[80];
    switch (kind) {
        case SupportKind::FullReal: return "(-inf,inf)";
        case SupportKind::LowerBounded: std::snprintf(buf, sizeof(buf), "[%g,inf)", a); return buf;
        case SupportKind::UpperBounded: std::snprintf(buf, sizeof(buf), "(-inf,%g]", b); return buf;
        case SupportKind::Interval: std::snprintf(buf, sizeof(buf), "[%g,%g]", a, b); return buf;
    }
    return "?";
}

EstimatorStream::EstimatorStream(Distribution d, SupportSpec s, std::optional<double> mean,
                                 std::uint64_t seed)
    : distribution_(std::move(d)), support_(s), known_mean_(mean), rng_(seed) {}

EstimatorStream EstimatorStream::point_mass(double value, std::uint64_t seed) {
    return point_mass(value, SupportSpec::lower_bounded(value), seed);
}

EstimatorStream EstimatorStream::point_mass(double value, const SupportSpec& declared,
                                            std::uint64_t seed) {
    if (!declared.contains(value))
        throw InvalidArgument("declared support does not contain the point mass value");
    return {dist::PointMass{value}, declared, value, seed};
}

EstimatorStream EstimatorStream::uniform(double a, double b, std::uint64_t seed) {
    if (!(a < b)) throw InvalidArgument("Uniform(a,b) requires a < b");
    return {dist::Uniform{a, b}, SupportSpec::interval(a, b), 0.5 * (a + b), seed};
}

EstimatorStream EstimatorStream::gaussian(double mean, double sd, std::uint64_t seed) {
    if (!(sd > 0.0)) throw InvalidArgument("Gaussian sd must be positive");
    return {dist::Gaussian{mean, sd}, SupportSpec::full_real(), mean, seed};
}

EstimatorStream EstimatorStream::shifted_exponential(double shift, double rate, std::uint64_t seed) {
    if (!(rate > 0.0)) throw InvalidArgument("ShiftedExponential rate must be positive");
    return {dist::ShiftedExponential{shift, rate}, SupportSpec::lower_bounded(shift),
            shift + 1.0 / rate, seed};
}

namespace {

SupportSpec natural_discrete_support(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo < *hi) return SupportSpec::interval(*lo, *hi);
    return SupportSpec::lower_bounded(*lo);
}

dist::DiscreteFinite normalize_discrete(std::vector<double> values, std::vector<double> probs) {
    if (values.empty() || values.size() != probs.size())
        throw InvalidArgument("DiscreteFinite requires matching nonempty values/probs");
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw InvalidArgument("DiscreteFinite probabilities must be nonnegative");
        total += p;
    }
    if (!(total > 0.0)) throw InvalidArgument("DiscreteFinite probabilities sum to zero");
    if (std::abs(total - 1.0) > 1e-12) {
        std::cerr << "nonneg: DiscreteFinite probabilities sum to " << total
                  << "; normalizing\n";
        for (double& p : probs) p /= total;
    }
    return {std::move(values), std::move(probs)};
}

}  // namespace

EstimatorStream EstimatorStream::discrete_finite(std::vector<double> values,
                                                 std::vector<double> probs, std::uint64_t seed) {
    auto support = natural_discrete_support(values);
    return discrete_finite(std::move(values), std::move(probs), support, seed);
}

EstimatorStream EstimatorStream::discrete_finite(std::vector<double> values,
                                                 std::vector<double> probs,
                                                 const SupportSpec& declared, std::uint64_t seed) {
    auto d = normalize_discrete(std::move(values), std::move(probs));
    double mean = 0.0;
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        if (!declared.contains(d.values[i]))
            throw InvalidArgument("declared support does not contain every DiscreteFinite atom");
        mean += d.values[i] * d.probs[i];
    }
    return {std::move(d), declared, mean, seed};
}

EstimatorStream EstimatorStream::bernoulli(double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("Bernoulli p must lie in [0,1]");
    return {dist::Bernoulli{p}, SupportSpec::interval(0.0, 1.0), p, seed};
}

double EstimatorStream::sample() {
    struct Visitor {
        Rng& rng;
        double operator()(const dist::PointMass& d) { return d.value; }
        double operator()(const dist::Uniform& d) { return rng.uniform(d.a, d.b); }
        double operator()(const dist::Gaussian& d) { return d.mean + d.sd * rng.gaussian(); }
        double operator()(const dist::ShiftedExponential& d) {
            return d.shift + rng.exponential(d.rate);
        }
        double operator()(const dist::DiscreteFinite& d) {
            const double u = rng.uniform01();
            double cum = 0.0;
            for (std::size_t i = 0; i + 1 < d.values.size(); ++i) {
                cum += d.probs[i];
                if (u < cum) return d.values[i];
            }
            return d.values.back();
        }
        double operator()(const dist::Bernoulli& d) { return rng.bernoulli(d.p) ? 1.0 : 0.0; }
    };
    const double x = std::visit(Visitor{rng_}, distribution_);
    ++draws_;
    assert(support_.contains(x) && "draw escaped declared support");
    return x;
}

std::string EstimatorStream::label() const {
    char buf[120];
    struct Visitor {
        char* buf;
        std::size_t cap;
        void operator()(const dist::PointMass& d) { std::snprintf(buf, cap, "PointMass(%g)", d.value); }
        void operator()(const dist::Uniform& d) { std::snprintf(buf, cap, "Uniform(%g,%g)", d.a, d.b); }
        void operator()(const dist::Gaussian& d) { std::snprintf(buf, cap, "Gaussian(%g,%g)", d.mean, d.sd); }
        void operator()(const dist::ShiftedExponential& d) {
            std::snprintf(buf, cap, "ShiftedExponential(%g,%g)", d.shift, d.rate);
        }
        void operator()(const dist::DiscreteFinite& d) {
            std::snprintf(buf, cap, "DiscreteFinite(%zu atoms)", d.values.size());
        }
        void operator()(const dist::Bernoulli& d) { std::snprintf(buf, cap, "Bernoulli(%g)", d.p); }
    };
    std::visit(Visitor{buf, sizeof(buf)}, distribution_);
    return std::string(buf) + " on " + support_.to_string();
}

EstimatorStream EstimatorStream::clone_reseeded(std::uint64_t seed) const {
    return {distribution_, support_, known_mean_, seed};
}

namespace {

// Smallest declared support covering base emissions plus the fallback value,
// reported honestly: a lower-bounded claim survives only when the fallback
// stays inside it.
SupportSpec coupled_support(const SupportSpec& base, double fallback) {
    switch (base.kind) {
        case SupportKind::FullReal:
            return SupportSpec::full_real();
        case SupportKind::LowerBounded:
            return fallback >= base.a ? SupportSpec::lower_bounded(base.a) : SupportSpec::full_real();
        case SupportKind::UpperBounded:
            return fallback <= base.b ? SupportSpec::upper_bounded(base.b) : SupportSpec::full_real();
        case SupportKind::Interval:
            return SupportSpec::interval(std::min(base.a, fallback), std::max(base.b, fallback));
    }
    return SupportSpec::full_real();
}

}  // namespace

CoupledStream::CoupledStream(EstimatorStream base, double target_mean, double epsilon,
                             double fallback, SupportSpec support, std::uint64_t seed)
    : base_(std::move(base)),
      target_mean_(target_mean),
      epsilon_(epsilon),
      fallback_(fallback),
      support_(support),
      coin_rng_(seed) {}

CoupledStream couple(const EstimatorStream& base, double lambda_y, double epsilon,
                     std::uint64_t seed) {
    if (!base.known_mean())
        throw MissingKnownMean("couple requires a base stream with known mean");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw EpsilonOutOfRange("couple requires epsilon in (0,1)");
    const double lambda_x = *base.known_mean();
    const double fallback = (lambda_y - lambda_x * (1.0 - epsilon)) / epsilon;
    return CoupledStream(base.clone_reseeded(derive_seed(seed, 0)), lambda_y, epsilon, fallback,
                         coupled_support(base.support(), fallback), derive_seed(seed, 1));
}

CoupledStream::Tagged CoupledStream::sample_tagged() {
    const double x = base_.sample();  // consumed whether or not it is kept
    const bool keep = coin_rng_.uniform01() < 1.0 - epsilon_;
    return {keep ? x : fallback_, keep};
}

CoupledStream CoupledStream::clone_reseeded(std::uint64_t seed) const {
    return CoupledStream(base_.clone_reseeded(derive_seed(seed, 0)), target_mean_, epsilon_,
                         fallback_, support_, derive_seed(seed, 1));
}

CoinStream CoinStream::from_bernoulli(double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("Bernoulli p must lie in [0,1]");
    return CoinStream(FromBernoulli{Rng(seed), p}, p);
}

CoinStream CoinStream::scripted(std::vector<int> word) {
    for (int b : word)
        if (b != 0 && b != 1) throw InvalidArgument("scripted coin word must be 0/1");
    return CoinStream(Scripted{std::move(word), 0}, std::nullopt);
}

CoinStream coinify(const EstimatorStream& stream, std::uint64_t aux_seed) {
    const SupportSpec& s = stream.support();
    if (s.kind != SupportKind::Interval)
        throw UnsupportedSupport("coinify requires a bounded Interval support, got " + s.to_string());
    std::optional<double> mean;
    if (stream.known_mean()) mean = (*stream.known_mean() - s.a) / (s.b - s.a);
    return CoinStream(
        CoinStream::FromStream{stream.clone_reseeded(derive_seed(aux_seed, 0)),
                               Rng(derive_seed(aux_seed, 1)), s.a, s.b},
        mean);
}

int CoinStream::next() {
    struct Visitor {
        int operator()(FromStream& src) {
            const double x = src.base.sample();
            const double u = src.aux.uniform01();
            return u * (src.b - src.a) < (x - src.a) ? 1 : 0;
        }
        int operator()(FromBernoulli& src) { return src.rng.bernoulli(src.p) ? 1 : 0; }
        int operator()(Scripted& src) {
            if (src.pos >= src.word.size()) throw Error("scripted coin word exhausted");
            return src.word[src.pos++];
        }
    };
    const int bit = std::visit(Visitor{}, source_);
    ++emitted_;
    return bit;
}

long long CoinStream::base_draws() const {
    if (const auto* s = std::get_if<FromStream>(&source_)) return s->base.draws();
    return 0;
}

}  // namespace nonneg
