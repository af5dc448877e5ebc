#include "bhm/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "bhm/errors.hpp"

namespace bhm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

double support_bound(const Distribution::Law& law) {
  return std::visit(
      [](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          return l.value.magnitude();
        } else if constexpr (std::is_same_v<T, AtomLaw>) {
          double c = 0.0;
          for (const auto& v : l.values) c = std::max(c, v.magnitude());
          return c;
        } else {
          return std::max(std::abs(l.lo.get_d()), std::abs(l.hi.get_d()));
        }
      },
      law);
}

}  // namespace

Distribution::Distribution(Law law) : law_(std::move(law)), bound_(support_bound(law_)) {}

Distribution Distribution::constant(ExactComplex value) { return Distribution(ConstantLaw{std::move(value)}); }

Distribution Distribution::atoms(std::vector<ExactComplex> values, std::vector<Rational> probs) {
  if (values.empty() || values.size() != probs.size())
    throw PreconditionViolation("atoms: values and probs must be nonempty and equally long");
  Rational total = 0;
  for (const auto& q : probs) {
    if (sgn(q) < 0) throw PreconditionViolation("atoms: negative probability");
    total += q;
  }
  if (total != 1) throw PreconditionViolation("atoms: probabilities must sum to 1");
  return Distribution(AtomLaw{std::move(values), std::move(probs)});
}

Distribution Distribution::uniform(Rational lo, Rational hi) {
  if (hi < lo) throw PreconditionViolation("uniform: hi < lo");
  return Distribution(UniformLaw{std::move(lo), std::move(hi)});
}

Distribution Distribution::rademacher() {
  return atoms({ExactComplex(1L), ExactComplex(-1L)}, {Rational(1, 2), Rational(1, 2)});
}

void Distribution::set_bound(double c) {
  if (c < support_bound(law_) * (1.0 - 1e-15))
    throw PreconditionViolation("distribution bound smaller than the support modulus");
  bound_ = c;
}

bool Distribution::deterministic() const {
  if (std::holds_alternative<ConstantLaw>(law_)) return true;
  if (const auto* a = std::get_if<AtomLaw>(&law_)) {
    int live = 0;
    for (const auto& q : a->probs) live += sgn(q) > 0 ? 1 : 0;
    return live == 1;
  }
  const auto& u = std::get<UniformLaw>(law_);
  return u.lo == u.hi;
}

ExactComplex exact_moment(const Distribution& d, int k) {
  if (k < 0) throw PreconditionViolation("exact_moment: negative order");
  if (k == 0) return ExactComplex(1L);
  const auto uk = static_cast<unsigned>(k);
  return std::visit(
      [&](const auto& l) -> ExactComplex {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          return pow(l.value, uk);
        } else if constexpr (std::is_same_v<T, AtomLaw>) {
          ExactComplex m;
          for (std::size_t i = 0; i < l.values.size(); ++i)
            m += ExactComplex(l.probs[i]) * pow(l.values[i], uk);
          return m;
        } else {
          if (l.lo == l.hi) return pow(ExactComplex(l.lo), uk);
          const ExactComplex num = pow(ExactComplex(l.hi), uk + 1) - pow(ExactComplex(l.lo), uk + 1);
          return num / ExactComplex(Rational((k + 1) * (l.hi - l.lo)));
        }
      },
      d.law());
}

void EnsembleSpec::validate() const {
  if (p < 0) throw ConfigError("ensemble: p must be nonnegative");
  if (mus.size() != idx(p + 1)) throw ConfigError("ensemble: expected p+1 distributions");
}

double EnsembleSpec::bound() const {
  double c = 0.0;
  for (const auto& m : mus) c = std::max(c, m.bound());
  return c;
}

bool EnsembleSpec::deterministic() const {
  return std::all_of(mus.begin(), mus.end(), [](const Distribution& d) { return d.deterministic(); });
}

Rng::Rng(std::uint64_t seed, StreamId stream, std::uint32_t lane) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream.trial),
                    static_cast<std::uint32_t>(stream.trial >> 32),
                    static_cast<std::uint32_t>(stream.role), lane};
  engine_.seed(seq);
}

Sampler::Sampler(const Distribution& d) : dist_(&d) {
  if (const auto* a = std::get_if<AtomLaw>(&d.law())) {
    // u = m / 2^53 < c  <=>  m < ceil(c 2^53) for integer m.
    const Rational scale(BigInt(1) << 53);
    Rational cum = 0;
    for (std::size_t i = 0; i < a->probs.size(); ++i) {
      cum += a->probs[i];
      const Rational scaled = cum * scale;
      BigInt t;
      mpz_cdiv_q(t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      thresholds_.push_back(static_cast<std::uint64_t>(mpz_get_ui(t.get_mpz_t())));
      atom_values_.push_back(a->values[i].to_complex());
    }
  } else if (const auto* u = std::get_if<UniformLaw>(&d.law())) {
    lo_ = u->lo.get_d();
    hi_ = u->hi.get_d();
  }
}

ExactComplex Sampler::draw_exact(Rng& rng) const {
  return std::visit(
      [&](const auto& l) -> ExactComplex {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          return l.value;
        } else if constexpr (std::is_same_v<T, AtomLaw>) {
          const std::uint64_t m = rng.next53();
          for (std::size_t i = 0; i < thresholds_.size(); ++i)
            if (m < thresholds_[i]) return l.values[i];
          return l.values.back();
        } else {
          return ExactComplex::from_double(lo_ + (hi_ - lo_) * rng.uniform());
        }
      },
      dist_->law());
}

Complex Sampler::draw(Rng& rng) const {
  return std::visit(
      [&](const auto& l) -> Complex {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          return l.value.to_complex();
        } else if constexpr (std::is_same_v<T, AtomLaw>) {
          const std::uint64_t m = rng.next53();
          for (std::size_t i = 0; i < thresholds_.size(); ++i)
            if (m < thresholds_[i]) return atom_values_[i];
          return atom_values_.back();
        } else {
          return {lo_ + (hi_ - lo_) * rng.uniform(), 0.0};
        }
      },
      dist_->law());
}

namespace {

std::vector<Sampler> samplers_for(const EnsembleSpec& e) {
  e.validate();
  std::vector<Sampler> s;
  s.reserve(e.mus.size());
  for (const auto& d : e.mus) s.emplace_back(d);
  return s;
}

}  // namespace

template <class S>
DiagonalSequences<S> sample_one_sided(const EnsembleSpec& e, int length, StreamId stream) {
  if (length < 0) throw PreconditionViolation("sample_one_sided: negative length");
  const auto samplers = samplers_for(e);
  std::vector<std::vector<S>> d(idx(e.p + 1));
  for (int k = 0; k <= e.p; ++k) {
    Rng rng(e.seed, stream, static_cast<std::uint32_t>(k));
    d[idx(k)].reserve(idx(length));
    for (int n = 0; n < length; ++n) d[idx(k)].push_back(samplers[idx(k)].draw_as<S>(rng));
  }
  return DiagonalSequences<S>(e.p, std::move(d));
}

template <class S>
TwoSidedWindow<S> sample_window(const EnsembleSpec& e, int half_width, StreamId stream) {
  if (half_width < 0) throw PreconditionViolation("sample_window: negative half-width");
  const auto samplers = samplers_for(e);
  TwoSidedWindow<S> w(e.p, half_width);
  for (int k = 0; k <= e.p; ++k) {
    // Sites n >= 1 and n <= 0 come from separate lanes, so a larger L extends a window.
    Rng up(e.seed, stream, static_cast<std::uint32_t>(2 * k));
    Rng down(e.seed, stream, static_cast<std::uint32_t>(2 * k + 1));
    for (int n = 1; n <= half_width; ++n) w.set(k, n, samplers[idx(k)].draw_as<S>(up));
    for (int n = 0; n >= -half_width; --n) w.set(k, n, samplers[idx(k)].draw_as<S>(down));
  }
  return w;
}

template <class S>
TwoSidedWindow<S> build_theorem_collections(const EnsembleSpec& e, int half_width,
                                            std::uint64_t trial) {
  if (half_width < e.p) throw PreconditionViolation("build_theorem_collections: need L >= p");
  const auto samplers = samplers_for(e);
  TwoSidedWindow<S> w(e.p, half_width);
  for (int k = 0; k <= e.p; ++k) {
    const auto lane = static_cast<std::uint32_t>(k);
    const auto& smp = samplers[idx(k)];
    Rng a(e.seed, {trial, Role::collection_a}, lane);
    Rng b(e.seed, {trial, Role::collection_b}, lane);
    Rng alpha(e.seed, {trial, Role::collection_alpha}, lane);
    for (int n = 1; n <= half_width; ++n) w.set(k, n, smp.draw_as<S>(a));       // a_n
    for (int j = 0; j <= k; ++j) w.set(k, -j, smp.draw_as<S>(alpha));            // alpha_j^{(k)}
    for (int m = 1; m <= half_width - k; ++m) w.set(k, -m - k, smp.draw_as<S>(b)); // b_m
  }
  return w;
}

#define BHM_INSTANTIATE(S)                                                                  \
  template DiagonalSequences<S> sample_one_sided(const EnsembleSpec&, int, StreamId);       \
  template TwoSidedWindow<S> sample_window(const EnsembleSpec&, int, StreamId);             \
  template TwoSidedWindow<S> build_theorem_collections(const EnsembleSpec&, int, std::uint64_t);

BHM_INSTANTIATE(Complex)
BHM_INSTANTIATE(ExactComplex)

#undef BHM_INSTANTIATE

}  // namespace bhm
